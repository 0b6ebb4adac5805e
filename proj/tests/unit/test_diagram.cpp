#include <catch_amalgamated.hpp>

#include <fstream>

#include "tits/artin.hpp"
#include "tits/diagram_fixtures.hpp"
#include "../support/lattice_oracle.hpp"

using namespace tits;
using tits::testing::Cell;
using tits::testing::cell_id;
using tits::testing::oracle_interior_degree;

namespace {

struct Shape {
    std::string name;
    std::vector<Cell> cells;
    std::string trichotomy;
};

std::vector<Shape> shapes() {
    return {
        {"grid-2x2", {{0, 0}, {1, 0}, {0, 1}, {1, 1}}, "iii"},
        {"ladder-2", {{0, 0}, {1, 0}}, "i"},
        {"ladder-3", {{0, 0}, {1, 0}, {2, 0}}, "i"},
        {"l-tromino", {{0, 0}, {1, 0}, {0, 1}}, "i"},
        {"t-tetromino", {{0, 1}, {1, 1}, {2, 1}, {1, 0}}, "i"},
        {"plus-pentomino", {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}, "i"},
        {"p-pentomino", {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}}, "ii"},
        {"grid-3x2", {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}}, "iii"},
    };
}

bool adjacent(const std::string& x, const std::string& y, const std::vector<Cell>& cells) {
    for (auto a : cells)
        for (auto b : cells)
            if (cell_id(a) == x && cell_id(b) == y && std::abs(a.first - b.first) + std::abs(a.second - b.second) == 1) return true;
    return false;
}

// lattice path of a word over a, b; shoelace area when it is a simple closed curve
long lattice_area(const Word& w) {
    long x = 0, y = 0, twice = 0;
    for (char c : w) {
        long nx = x + (c == 'a') - (c == 'A'), ny = y + (c == 'b') - (c == 'B');
        twice += x * ny - nx * y;
        x = nx;
        y = ny;
    }
    REQUIRE(x == 0);
    REQUIRE(y == 0);
    return std::abs(twice) / 2;
}

bool cyclic_equal(const Word& x, const Word& y) {
    return x.size() == y.size() && (x + x).find(y) != Word::npos;
}

}  // namespace

TEST_CASE("a lone commutator square is valid and reduced") {
    auto d = diagrams::polyomino({{0, 0}});
    auto p = diagrams::commutator_presentation();
    auto v = validate_diagram(d, &p);
    CHECK(v.valid());
    CHECK(v.reduced());
    CHECK(v.euler == 2);  // outer face included
    auto s = find_strips(d);
    CHECK(s.note.find("more than one region") != std::string::npos);
}

TEST_CASE("mirror squares across an edge are not reduced") {
    // the second square is the reflection of the first in the line x = 1
    auto d = diagram_from_walks({{"R1", "abAB", {"v0", "v1", "v2", "v3"}}, {"R2", "AbaB", {"v1", "w1", "w2", "v2"}}});
    auto p = diagrams::commutator_presentation();
    auto v = validate_diagram(d, &p);
    CHECK(v.valid());
    REQUIRE(v.mirror_edges.size() == 1);
    const auto& e = d.edges[d.edge_index(v.mirror_edges[0])];
    CHECK(std::set<std::string>{e.ends[0], e.ends[1]} == std::set<std::string>{"v1", "v2"});
}

TEST_CASE("reducedness agrees with a brute-force mirror scan") {
    auto p4 = dihedral_artin_presentation(4);
    auto com = diagrams::commutator_presentation();
    std::vector<std::pair<PlanarDiagram, const Presentation*>> ds;
    for (auto& [n, d] : diagrams::all()) ds.push_back({d, &com});
    ds.push_back({diagrams::mirror_pair_m4(), &p4});
    for (auto& [d, p] : ds) {
        // two regions sharing edge e cancel when one reads, from e, the other's word backwards
        std::set<std::string> brute;
        for (int e = 0; e < int(d.edges.size()); ++e)
            for (int r1 = 0; r1 < int(d.regions.size()); ++r1)
                for (int r2 = 0; r2 < int(d.regions.size()); ++r2) {
                    if (r1 == r2) continue;
                    const auto& b1 = d.regions[r1].boundary;
                    const auto& b2 = d.regions[r2].boundary;
                    for (std::size_t i = 0; i < b1.size(); ++i)
                        for (std::size_t j = 0; j < b2.size(); ++j) {
                            if (b1[i].edge != e || b2[j].edge != e || b1[i].forward == b2[j].forward) continue;
                            Word w1 = rotate(d.region_word(r1), i), w2 = rotate(d.region_word(r2), j);
                            if (b1.size() == b2.size() && inverse(rotate(w2, 1)) == w1) brute.insert(d.edges[e].id);
                        }
                }
        auto v = validate_diagram(d, p);
        CHECK(std::set<std::string>(v.mirror_edges.begin(), v.mirror_edges.end()) == brute);
    }
}

TEST_CASE("interior degrees match the lattice oracle") {
    for (const auto& s : shapes()) {
        CAPTURE(s.name);
        auto d = diagrams::polyomino(s.cells);
        auto rep = find_strips(d);
        auto want = oracle_interior_degree(s.cells);
        int total = 0;
        for (auto [c, i] : want) {
            CHECK(rep.interior_degree.at(cell_id(c)) == i);
            total += i;
        }
        CHECK(total == 2 * rep.interior_edges);
        CHECK(rep.spikes.empty());
    }
}

TEST_CASE("trichotomy cases and witness patterns") {
    auto com = diagrams::commutator_presentation();
    for (const auto& s : shapes()) {
        CAPTURE(s.name);
        auto d = diagrams::polyomino(s.cells);
        auto rep = find_strips(d);
        auto deg = oracle_interior_degree(s.cells);
        std::map<std::string, int> i;
        for (auto [c, n] : deg) i[cell_id(c)] = n;
        CHECK(rep.c4);
        CHECK(rep.t4);
        CHECK(rep.trichotomy == s.trichotomy);
        for (const auto& r : rep.singleton) {
            CHECK(i.at(r) <= 1);
            CHECK(std::find(rep.simple_boundary.begin(), rep.simple_boundary.end(), r) != rep.simple_boundary.end());
        }
        for (const auto& chain : rep.compound) {
            REQUIRE(chain.size() >= 2);
            CHECK(i.at(chain.front()) == 2);
            CHECK(i.at(chain.back()) == 2);
            for (std::size_t k = 1; k + 1 < chain.size(); ++k) CHECK(i.at(chain[k]) == 3);
            for (std::size_t k = 0; k + 1 < chain.size(); ++k) CHECK(adjacent(chain[k], chain[k + 1], s.cells));
        }
        if (s.trichotomy == "i") CHECK(rep.singleton.size() >= 2);
        if (s.trichotomy == "ii") {
            CHECK(rep.singleton.size() == 1);
            CHECK(rep.compound.size() >= 2);
        }
        if (s.trichotomy == "iii") CHECK(rep.compound.size() >= 3);
        CHECK(validate_diagram(d, &com).valid());
    }
}

TEST_CASE("separating vertices of dihedral regions") {
    auto lone = diagram_from_walks({{"R", "ababABAB", {"v0", "v1", "v2", "v3", "v4", "v5", "v6", "v7"}}});
    auto s = separating_vertices(lone, 0, 4);
    CHECK(s.first == "v0");
    CHECK(s.second == "v4");
    CHECK(s.exposed);

    auto pair = diagrams::mirror_pair_m4();
    auto buried = separating_vertices(pair, 0, 4);
    CHECK(buried.first == "v0");
    CHECK(buried.second == "v4");
    CHECK_FALSE(buried.exposed);

    // label read from a rotated start: located after the shift
    Word r = rotate(dihedral_relator('a', 'b', 4), 3);
    std::vector<std::string> vs;
    for (int k = 0; k < 8; ++k) vs.push_back("u" + std::to_string(k));
    auto rot = diagram_from_walks({{"R", r, vs}});
    auto sr = separating_vertices(rot, 0, 4);
    Word x = rotate(r, sr.shift);
    CHECK((x == dihedral_relator('a', 'b', 4) || x == dihedral_relator('b', 'a', 4)));
    CHECK(sr.first == vs[sr.shift]);
    CHECK(sr.second == vs[(sr.shift + 4) % 8]);
    CHECK_THROWS_AS(separating_vertices(rot, 0, 3), std::invalid_argument);
}

TEST_CASE("disc search finds minimal area over the commutator presentation") {
    auto com = diagrams::commutator_presentation();
    for (const Word& w : {Word("abAB"), Word("aabAAB"), Word("aabAbABB"), Word("aabbAABB")}) {
        CAPTURE(w);
        long want = lattice_area(w);
        auto r = search_disc_diagram(w, com, int(want));
        REQUIRE(r.diagram);
        CHECK(r.area == want);
        CHECK(cyclic_equal(r.diagram->boundary_word(), w));
        auto v = validate_diagram(*r.diagram, &com);
        CHECK(v.valid());
        CHECK(int(r.diagram->regions.size()) == r.area);
        // nothing one level down
        CHECK_FALSE(search_disc_diagram(w, com, int(want) - 1).diagram);
    }
    CHECK_FALSE(search_disc_diagram("abab", com, 3).diagram);
}

TEST_CASE("corner subwords of the dihedral relator and its shifts") {
    Word u = dihedral_relator('a', 'b', 4);
    auto base = corner_subwords(u, 4, 2);
    REQUIRE(base.words);
    CHECK(base.words->first.subword == "abab");
    CHECK(base.words->second.subword == "ABAB");
    CHECK(base.words->first.start == 0);
    CHECK(base.words->second.start == 4);
    for (std::size_t k = 1; k < u.size(); ++k) {
        auto r = corner_subwords(rotate(u, k), 4, 2);
        REQUIRE(r.words);
        std::set<std::pair<int, Word>> got{{r.words->first.start, r.words->first.subword},
                                           {r.words->second.start, r.words->second.subword}};
        int n = int(u.size());
        std::set<std::pair<int, Word>> want{{int((0 + n - k) % n), "abab"}, {int((4 + n - k) % n), "ABAB"}};
        CHECK(got == want);
    }
}

TEST_CASE("corner subwords on area-2 trivial words") {
    for (const Word& u : {Word("aababAABAB"), Word("bbabaBBABA")}) {
        CAPTURE(u);
        auto r = corner_subwords(u, 4, 2);
        REQUIRE(r.words);
        CHECK(r.area == 2);
        CHECK_FALSE(search_disc_diagram(least_rotation(u).first, dihedral_artin_presentation(4), 1).diagram);
        auto syl = cyclic_syllables(u);
        for (const auto* c : {&r.words->first, &r.words->second}) {
            CHECK(c->subword == (u + u).substr(c->start, 4));
            // alternating, one sign
            for (int t = 1; t < 4; ++t) {
                CHECK(gen(c->subword[t]) != gen(c->subword[t - 1]));
                CHECK(positive(c->subword[t]) == positive(c->subword[0]));
            }
        }
        std::set<int> s1, s2;
        for (int t = 0; t < 4; ++t) {
            s1.insert(syl[(r.words->first.start + t) % u.size()]);
            s2.insert(syl[(r.words->second.start + t) % u.size()]);
        }
        for (int x : s1) CHECK_FALSE(s2.count(x));
    }
    CHECK(corner_subwords("abab", 4, 2).status == "bound exhausted");
}

TEST_CASE("diagram files round trip and shipped files match the builders") {
    std::vector<std::pair<std::string, PlanarDiagram>> all = diagrams::all();
    all.push_back({"mirror-pair-m4", diagrams::mirror_pair_m4()});
    all.push_back({"example-a2", example_A2_diagram()});
    for (auto& [name, d] : all) {
        CAPTURE(name);
        auto j = diagram_to_json(d);
        CHECK(diagram_to_json(diagram_from_json(j)) == j);
        std::ifstream in(std::string(TITS_SOURCE_DIR) + "/fixtures/diagrams/" + name + ".json");
        REQUIRE(in);
        CHECK(nlohmann::json::parse(in) == j);
    }
}

TEST_CASE("walk gluing rejects reused darts") {
    CHECK_THROWS_AS(diagram_from_walks({{"R1", "abAB", {"v0", "v1", "v2", "v3"}}, {"R2", "abAB", {"v0", "v1", "v2", "v3"}}}),
                    InputError);
}
