// Builders for the shipped fixture complexes (fixtures/*.cx are written from these).
#pragma once

#include "complex.hpp"

namespace tits::fixtures {

inline Face face(const Complex& c, std::string id, std::vector<std::pair<std::string, bool>> steps,
                 std::optional<std::string> shape = std::nullopt, std::vector<int> sides = {}) {
    Face f;
    f.id = std::move(id);
    for (auto& [e, fwd] : steps) f.boundary.push_back({c.edge_index(e), fwd});
    f.shape = std::move(shape);
    f.sides = std::move(sides);
    return f;
}

inline Complex lone_triangle() {
    Complex c;
    for (auto v : {"v0", "v1", "v2"}) c.add_vertex(v);
    c.add_edge("e0", "v0", "v1");
    c.add_edge("e1", "v1", "v2");
    c.add_edge("e2", "v2", "v0");
    c.add_face(face(c, "T", {{"e0", true}, {"e1", true}, {"e2", true}}, "Equilateral"));
    return c;
}

// Two right isosceles triangles glued along all three sides.
inline Complex pillow(const std::string& suffix = "") {
    Complex c;
    auto n = [&](const char* s) { return std::string(s) + suffix; };
    for (auto v : {"p", "q", "r"}) c.add_vertex(n(v));
    c.add_edge(n("e0"), n("p"), n("q"), 1);
    c.add_edge(n("e1"), n("q"), n("r"), Quad::sqrt2());
    c.add_edge(n("e2"), n("r"), n("p"), 1);
    c.add_face(face(c, n("A"), {{n("e0"), true}, {n("e1"), true}, {n("e2"), true}}, "TriQ244"));
    c.add_face(face(c, n("B"), {{n("e2"), false}, {n("e1"), false}, {n("e0"), false}}, "TriQ244", {2, 1, 0}));
    return c;
}

// Three right isosceles triangles sharing all three sides.
inline Complex thick_pillow() {
    Complex c = pillow();
    c.add_face(face(c, "C", {{"e0", true}, {"e1", true}, {"e2", true}}, "TriQ244"));
    return c;
}

// Open book: n equilateral pages on the spine s = u -> w.
inline Complex book(int pages) {
    Complex c;
    c.add_vertex("u");
    c.add_vertex("w");
    c.add_edge("s", "u", "w");
    for (int i = 0; i < pages; ++i) {
        std::string p = "x" + std::to_string(i);
        c.add_vertex(p);
        c.add_edge("a" + std::to_string(i), "w", p);
        c.add_edge("b" + std::to_string(i), p, "u");
    }
    for (int i = 0; i < pages; ++i)
        c.add_face(face(c, "P" + std::to_string(i), {{"s", true}, {"a" + std::to_string(i), true}, {"b" + std::to_string(i), true}},
                        "Equilateral"));
    return c;
}

// Theta graph times a circle: unit squares c_i x S^1 sharing the loops lp and lq.
inline Complex theta_circle(int pages = 3, const std::string& suffix = "") {
    Complex c;
    auto n = [&](std::string s) { return s + suffix; };
    c.add_vertex(n("p"));
    c.add_vertex(n("q"));
    for (int i = 0; i < pages; ++i) c.add_edge(n("c" + std::to_string(i)), n("p"), n("q"));
    c.add_edge(n("lp"), n("p"), n("p"));
    c.add_edge(n("lq"), n("q"), n("q"));
    for (int i = 0; i < pages; ++i) {
        std::string ci = n("c" + std::to_string(i));
        c.add_face(face(c, n("S" + std::to_string(i)), {{ci, true}, {n("lq"), true}, {ci, false}, {n("lp"), false}}, "Gon(4)"));
    }
    return c;
}

inline Complex merge(const Complex& x, const Complex& y) {
    Complex c = x;
    for (const auto& v : y.vertices)
        if (c.vertex_index(v) < 0) c.add_vertex(v);
    for (const auto& e : y.edges) c.add_edge(e.id, e.ends[0], e.ends[1], e.length);
    for (const auto& f : y.faces) {
        Face g = f;
        for (auto& s : g.boundary) s.edge = c.edge_index(y.edges[s.edge].id);
        c.add_face(g);
    }
    return c;
}

inline Complex theta_circle_two_components() { return merge(theta_circle(3, "_1"), theta_circle(3, "_2")); }

// The pillow and the closed thick complex sharing one vertex.
inline Complex pillow_on_book() {
    Complex pl = pillow("_x");
    for (auto& v : pl.vertices)
        if (v == "p_x") v = "p";
    for (auto& e : pl.edges)
        for (auto& end : e.ends)
            if (end == "p_x") end = "p";
    pl.reindex();
    return merge(theta_circle(), pl);
}

// Flat torus from 2n^2 equilateral triangles.
inline Complex flat_torus(int n = 2) {
    Complex c;
    auto v = [&](int i, int j) { return "v" + std::to_string((i % n + n) % n) + std::to_string((j % n + n) % n); };
    auto ij = [](int i, int j) { return std::to_string(i) + std::to_string(j); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.add_vertex(v(i, j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            c.add_edge("a" + ij(i, j), v(i, j), v(i + 1, j));
            c.add_edge("b" + ij(i, j), v(i, j), v(i, j + 1));
            c.add_edge("c" + ij(i, j), v(i + 1, j), v(i, j + 1));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            c.add_face(face(c, "U" + ij(i, j), {{"a" + ij(i, j), true}, {"c" + ij(i, j), true}, {"b" + ij(i, j), false}}, "Equilateral"));
            c.add_face(face(c, "D" + ij(i, j),
                            {{"b" + ij((i + 1) % n, j), true}, {"a" + ij(i, (j + 1) % n), false}, {"c" + ij(i, j), false}},
                            "Equilateral"));
        }
    return c;
}

// Six equilateral triangles around the vertex o.
inline Complex hexagon_disk() {
    Complex c;
    c.add_vertex("o");
    for (int i = 0; i < 6; ++i) c.add_vertex("r" + std::to_string(i));
    for (int i = 0; i < 6; ++i) c.add_edge("s" + std::to_string(i), "o", "r" + std::to_string(i));
    for (int i = 0; i < 6; ++i) c.add_edge("t" + std::to_string(i), "r" + std::to_string(i), "r" + std::to_string((i + 1) % 6));
    for (int i = 0; i < 6; ++i)
        c.add_face(face(c, "F" + std::to_string(i),
                        {{"s" + std::to_string(i), true}, {"t" + std::to_string(i), true}, {"s" + std::to_string((i + 1) % 6), false}},
                        "Equilateral"));
    return c;
}

inline Complex barycentric_triangle() { return subdivide_barycentric(lone_triangle()); }

inline Complex barycentric_torus() { return subdivide_barycentric(flat_torus()); }

inline Complex two_pillows() { return merge(pillow("_1"), pillow("_2")); }

// name -> builder, in file-name form
inline std::vector<std::pair<std::string, Complex>> all() {
    return {
        {"lone-triangle", lone_triangle()},
        {"pillow", pillow()},
        {"two-pillows", two_pillows()},
        {"thick-pillow", thick_pillow()},
        {"book3", book(3)},
        {"theta-circle", theta_circle()},
        {"theta-circle-4", theta_circle(4)},
        {"theta-circle-pair", theta_circle_two_components()},
        {"pillow-on-book", pillow_on_book()},
        {"flat-torus", flat_torus()},
        {"hexagon-disk", hexagon_disk()},
        {"barycentric-triangle", barycentric_triangle()},
        {"barycentric-torus", barycentric_torus()},
    };
}

}  // namespace tits::fixtures
