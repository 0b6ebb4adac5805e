// Shipped planar diagrams.
#pragma once

#include "diagram.hpp"

namespace tits::diagrams {

inline Presentation commutator_presentation() { return {{'a', 'b'}, {"abAB"}}; }

// Union of unit squares S_x_y labelled abAB; a runs along x, b along y.
inline PlanarDiagram polyomino(const std::vector<std::pair<int, int>>& cells) {
    std::vector<RegionWalk> walks;
    auto v = [](int x, int y) { return std::to_string(x) + "_" + std::to_string(y); };
    for (auto [x, y] : cells)
        walks.push_back({"S" + v(x, y), "abAB", {v(x, y), v(x + 1, y), v(x + 1, y + 1), v(x, y + 1)}});
    return diagram_from_walks(walks);
}

inline PlanarDiagram grid(int w, int h) {
    std::vector<std::pair<int, int>> cells;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) cells.push_back({x, y});
    return polyomino(cells);
}

inline PlanarDiagram ladder(int n) { return grid(n, 1); }
inline PlanarDiagram l_tromino() { return polyomino({{0, 0}, {1, 0}, {0, 1}}); }
inline PlanarDiagram plus_pentomino() { return polyomino({{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}); }
inline PlanarDiagram t_tetromino() { return polyomino({{0, 1}, {1, 1}, {2, 1}, {1, 0}}); }
inline PlanarDiagram p_pentomino() { return polyomino({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}}); }

// ababABAB and its mirror across the middle of its boundary; not reduced.
inline PlanarDiagram mirror_pair_m4() {
    return diagram_from_walks({
        {"R1", "ababABAB", {"v0", "v1", "v2", "v3", "v4", "v5", "v6", "v7"}},
        {"R2", "aBABAbab", {"v5", "v4", "v3", "w0", "w1", "w2", "w3", "w4"}},
    });
}

inline std::vector<std::pair<std::string, PlanarDiagram>> all() {
    return {
        {"grid-2x2", grid(2, 2)},
        {"ladder-2", ladder(2)},
        {"ladder-3", ladder(3)},
        {"l-tromino", l_tromino()},
        {"t-tetromino", t_tetromino()},
        {"plus-pentomino", plus_pentomino()},
        {"p-pentomino", p_pentomino()},
        {"grid-3x2", grid(3, 2)},
    };
}

}  // namespace tits::diagrams
