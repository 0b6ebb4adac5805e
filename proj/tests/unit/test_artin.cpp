#include <catch_amalgamated.hpp>

#include <random>

#include "tits/artin.hpp"

using namespace tits;

namespace {

// ---- dihedral Artin oracle ----
// Modulo its centre the group is a free product of two cyclic groups: Z/2 * Z/m
// (x = Delta, y = ab) for odd m, Z/(m/2) * Z (y = ab, b) for even m. The centre is
// generated by a power of Delta with nonzero exponent sum, so an element is fixed by
// its image in the free product and its exponent sum.

using Syllables = std::vector<std::pair<int, long>>;

struct FreeProductKey {
    Syllables s;
    long exponent = 0;
    bool operator<(const FreeProductKey& o) const { return std::tie(s, exponent) < std::tie(o.s, o.exponent); }
    bool operator==(const FreeProductKey& o) const = default;
};

FreeProductKey artin_key(const Word& w, int m) {
    long order[2];
    std::map<char, Syllables> image;
    if (m % 2) {
        long k = (m - 1) / 2;
        order[0] = 2;
        order[1] = m;  // factor 0 = x, factor 1 = y
        image['a'] = {{1, -k}, {0, 1}};
        image['b'] = {{0, 1}, {1, k + 1}};
        image['A'] = {{0, 1}, {1, k}};
        image['B'] = {{1, -(k + 1)}, {0, 1}};
    } else {
        order[0] = m / 2;
        order[1] = 0;  // factor 0 = y, factor 1 = b (infinite)
        image['a'] = {{0, 1}, {1, -1}};
        image['b'] = {{1, 1}};
        image['A'] = {{1, 1}, {0, -1}};
        image['B'] = {{1, -1}};
    }
    auto norm = [&](int f, long e) { return order[f] ? ((e % order[f]) + order[f]) % order[f] : e; };
    FreeProductKey key;
    for (char c : w) {
        key.exponent += positive(c) ? 1 : -1;
        for (auto [f, e] : image.at(c)) {
            e = norm(f, e);
            if (e == 0) continue;
            if (!key.s.empty() && key.s.back().first == f) {
                long t = norm(f, key.s.back().second + e);
                if (t == 0) key.s.pop_back();
                else key.s.back().second = t;
            } else key.s.push_back({f, e});
        }
    }
    return key;
}

// ---- dihedral Coxeter oracle: affine maps x -> s x + c on Z/2m ----
// a reflects in angle 0, b in angle pi/m (angles in units of pi/m).
std::pair<int, int> coxeter_key(const Word& w, int m) {
    int s = 1, c = 0, n = 2 * m;
    for (char x : w) {
        // apply on the right: f o g with g = x -> -x + shift
        int shift = gen(x) == 'a' ? 0 : 2;
        c = ((c + s * shift) % n + n) % n;
        s = -s;
    }
    return {s, c};
}

// ---- S4 for the (2,3,3) triangle: a = (01), c = (12), b = (23) ----
std::array<int, 4> s4_key(const Word& w) {
    std::array<int, 4> p{0, 1, 2, 3};
    for (char x : w) {
        int i = gen(x) == 'a' ? 0 : gen(x) == 'c' ? 1 : 2;
        std::swap(p[i], p[i + 1]);
    }
    return p;
}

int inversions(const std::array<int, 4>& p) {
    int n = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) n += p[i] > p[j];
    return n;
}

// ---- B4 acting on F4 (Artin representation), a = s1, c = s2, b = s3 ----
using FWord = std::vector<int>;  // +-(i+1)

FWord freduce(const FWord& w) {
    FWord out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x) out.pop_back();
        else out.push_back(x);
    }
    return out;
}

FWord finv(FWord w) {
    std::reverse(w.begin(), w.end());
    for (int& x : w) x = -x;
    return w;
}

// images of x1..x4 under one generator
std::vector<FWord> braid_images(char letter) {
    int i = gen(letter) == 'a' ? 1 : gen(letter) == 'c' ? 2 : 3;
    std::vector<FWord> im = {{1}, {2}, {3}, {4}};
    if (positive(letter)) {
        im[i - 1] = {i, i + 1, -i};
        im[i] = {i};
    } else {
        im[i - 1] = {i + 1};
        im[i] = {-(i + 1), i, i + 1};
    }
    return im;
}

FWord substitute(const FWord& w, const std::vector<FWord>& im) {
    FWord out;
    for (int x : w) {
        FWord piece = x > 0 ? im[x - 1] : finv(im[-x - 1]);
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return freduce(out);
}

std::vector<FWord> braid_action(const Word& w) {
    std::vector<FWord> im = {{1}, {2}, {3}, {4}};
    for (char x : w) {
        auto g = braid_images(x);
        for (auto& v : im) v = substitute(v, g);
    }
    return im;
}

bool braid_trivial(const Word& w) { return braid_action(w) == std::vector<FWord>{{1}, {2}, {3}, {4}}; }

Word random_word(std::mt19937& rng, int len, const std::string& letters) {
    std::uniform_int_distribution<int> pick(0, int(letters.size()) - 1);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(letters[pick(rng)]);
    return w;
}

// union-find forest test on a hypergraph's own vertex and edge lists
bool oracle_forest(const Hypergraph& h) {
    std::map<int, int> parent;
    for (int v : h.vertices) parent[v] = v;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : h.edges) {
        int x = find(e.from), y = find(e.to);
        if (x == y) return false;
        parent[x] = y;
    }
    return true;
}

}  // namespace

TEST_CASE("the central quotient oracle kills the relators") {
    for (int m = 2; m <= 7; ++m) {
        CHECK(artin_key(dihedral_relator('a', 'b', m), m) == FreeProductKey{});
        CHECK_FALSE(artin_key("ab", m) == FreeProductKey{});
    }
}

TEST_CASE("dihedral Artin word problem agrees with the free-product oracle") {
    std::mt19937 rng(5);
    for (int m = 2; m <= 6; ++m) {
        CAPTURE(m);
        Word r = dihedral_relator('a', 'b', m);
        for (int i = 0; i < 300; ++i) {
            Word u = random_word(rng, 1 + i % 9, "abAB");
            // half the samples are conjugated relators, so trivial words show up
            Word w = i % 2 ? u : u + rotate(r, i % r.size()) + inverse(u);
            CAPTURE(w);
            bool want = artin_key(w, m) == FreeProductKey{};
            CHECK(dihedral_word_problem(w, m, Target::artin).trivial == want);
            if (i % 2 == 0) CHECK(want);
        }
        // normal forms are equal exactly when the elements are
        for (int i = 0; i < 200; ++i) {
            Word x = random_word(rng, 6, "abAB"), y = random_word(rng, 6, "abAB");
            if (i % 4 == 0) y = x + rotate(r, i % r.size());
            CHECK((artin_dihedral_nf(x, m) == artin_dihedral_nf(y, m)) == (artin_key(x, m) == artin_key(y, m)));
            CHECK(artin_key(artin_dihedral_nf(x, m).word(), m) == artin_key(x, m));
        }
    }
}

TEST_CASE("Garside factors are simple and left-weighted") {
    std::mt19937 rng(9);
    for (int m = 3; m <= 5; ++m) {
        for (int i = 0; i < 100; ++i) {
            auto nf = artin_dihedral_nf(random_word(rng, 10, "abAB"), m);
            for (std::size_t k = 0; k < nf.factors.size(); ++k) {
                const Word& f = nf.factors[k];
                CHECK(int(f.size()) < m);
                for (std::size_t t = 1; t < f.size(); ++t) CHECK(f[t] != f[t - 1]);
                // a following factor may not start with the other letter
                if (k + 1 < nf.factors.size()) CHECK(nf.factors[k + 1][0] == f.back());
            }
        }
    }
}

TEST_CASE("dihedral Coxeter arithmetic agrees with the affine model") {
    std::mt19937 rng(3);
    for (int m = 2; m <= 7; ++m) {
        for (int i = 0; i < 300; ++i) {
            Word x = random_word(rng, i % 12, "abAB"), y = random_word(rng, (i * 7) % 12, "ab");
            CHECK((coxeter_dihedral(x, m) == coxeter_dihedral(y, m)) == (coxeter_key(x, m) == coxeter_key(y, m)));
            CHECK(dihedral_word_problem(x, m, Target::coxeter).trivial == (coxeter_key(x, m) == std::pair{1, 0}));
        }
    }
    CHECK_THROWS_AS(coxeter_dihedral("ac", 3), std::invalid_argument);
}

TEST_CASE("Tits normal forms have the length of the element") {
    std::mt19937 rng(13);
    for (int m = 2; m <= 6; ++m) {
        // word length of every element by BFS over the affine model
        std::map<std::pair<int, int>, int> dist{{coxeter_key("", m), 0}};
        std::vector<Word> frontier{""};
        for (int d = 1; d <= m; ++d) {
            std::vector<Word> next;
            for (const auto& w : frontier)
                for (char x : {'a', 'b'})
                    if (dist.emplace(coxeter_key(w + x, m), d).second) next.push_back(w + x);
            frontier = next;
        }
        CHECK(int(dist.size()) == 2 * m);
        auto g = single_edge(m);
        for (int i = 0; i < 200; ++i) {
            Word w = random_word(rng, i % 14, "ab");
            Word nf = coxeter_normal(w, g);
            CHECK(int(nf.size()) == dist.at(coxeter_key(w, m)));
            CHECK(coxeter_key(nf, m) == coxeter_key(w, m));
        }
    }
    auto tri = triangle(2, 3, 3);
    for (int i = 0; i < 300; ++i) {
        Word w = random_word(rng, i % 16, "abc");
        Word nf = coxeter_normal(w, tri);
        CHECK(int(nf.size()) == inversions(s4_key(w)));
        CHECK(s4_key(nf) == s4_key(w));
        CHECK(tits_coxeter_word_problem(w, tri) == (inversions(s4_key(w)) == 0));
    }
}

TEST_CASE("Coxeter ball sizes") {
    auto b2 = coxeter_ball(single_edge(2), 2);
    CHECK(b2.complex.vertices.size() == 4);
    CHECK(b2.complex.edges.size() == 4);
    CHECK(b2.complex.faces.size() == 1);
    auto b4 = coxeter_ball(single_edge(4), 4);
    CHECK(b4.complex.vertices.size() == 8);
    CHECK(b4.complex.edges.size() == 8);
    REQUIRE(b4.complex.faces.size() == 1);
    CHECK(b4.complex.faces[0].boundary.size() == 8);
    // octagons are outside the shape catalog, squares are not
    CHECK_FALSE(b4.complex.faces[0].shape.has_value());
    CHECK(b2.complex.faces[0].shape == std::optional<std::string>("Gon(4)"));

    // the (2,3,3) group is S4: 24 elements, counted by length
    for (int r = 0; r <= 6; ++r) {
        std::set<std::array<int, 4>> within;
        std::vector<Word> words{""};
        for (int d = 0; d < r; ++d) {
            std::vector<Word> next;
            for (const auto& w : words)
                for (char x : {'a', 'b', 'c'}) next.push_back(w + x);
            words.insert(words.end(), next.begin(), next.end());
            std::sort(words.begin(), words.end());
            words.erase(std::unique(words.begin(), words.end()), words.end());
        }
        for (const auto& w : words) within.insert(s4_key(w));
        CHECK(coxeter_ball(triangle(2, 3, 3), r).complex.vertices.size() == within.size());
    }
    CHECK_THROWS_AS(coxeter_ball(path3(3, 3), 30, 50), CapExceeded);
}

TEST_CASE("Artin ball sizes match the oracle") {
    for (int m = 2; m <= 5; ++m)
        for (int r = 0; r <= 4; ++r) {
            CAPTURE(m, r);
            std::set<FreeProductKey> seen{artin_key("", m)};
            std::vector<Word> frontier{""};
            for (int d = 0; d < r; ++d) {
                std::vector<Word> next;
                for (const auto& w : frontier)
                    for (char x : {'a', 'b', 'A', 'B'})
                        if (seen.insert(artin_key(w + x, m)).second) next.push_back(w + x);
                frontier = next;
            }
            auto ball = artin_dihedral_ball(single_edge(m), r);
            CHECK(ball.complex.vertices.size() == seen.size());
            std::set<FreeProductKey> keys;
            for (const auto& w : ball.element) keys.insert(artin_key(w, m));
            CHECK(keys == seen);
            // every edge multiplies by its generator
            for (int e = 0; e < int(ball.complex.edges.size()); ++e) {
                const auto& ed = ball.complex.edges[e];
                Word x = ball.element[ball.complex.vertex_index(ed.ends[0])];
                Word y = ball.element[ball.complex.vertex_index(ed.ends[1])];
                CHECK(artin_key(x + ball.edge_label[e], m) == artin_key(y, m));
            }
        }
    CHECK(artin_dihedral_ball(single_edge(4), 2).complex.vertices.size() == 17);
}

TEST_CASE("walls of the m = 4 Artin ball are forests and project to Coxeter walls") {
    auto g = single_edge(4);
    auto artin = artin_dihedral_ball(g, 6);
    auto hs = all_hypergraphs(artin.complex);
    int nontrivial = 0;
    for (const auto& h : hs) {
        CHECK(h.forest);
        CHECK(oracle_forest(h));
        nontrivial += !h.edges.empty();
    }
    CHECK(nontrivial > 0);
    auto cox = coxeter_ball(g, 8);
    auto p = project_walls(artin, cox, g);
    for (const auto& f : p.failures) UNSCOPED_INFO(f);
    CHECK(p.failures.empty());
    CHECK(p.consistent == p.nontrivial);
    CHECK(p.forests == p.artin_walls);
}

TEST_CASE("the 12-region diagram against the braid action") {
    auto d = example_A2_diagram();
    REQUIRE(d.regions.size() == 12);
    auto p = standard_presentation(example_A2_graph(), Target::artin);
    auto v = validate_diagram(d, &p);
    CHECK(v.valid());
    CHECK(v.reduced());
    for (int r = 0; r < 12; ++r) {
        CHECK(braid_trivial(d.region_word(r)));
        if (d.regions[r].id.rfind("sq", 0) == 0) CHECK(d.region_word(r) == "abAB");
    }
    CHECK(braid_trivial(d.boundary_word()));
    CHECK_FALSE(braid_trivial("abab"));
    // vertex names are the group elements they stand for
    auto name = [](const std::string& v) { return v == "1" ? Word() : Word(v); };
    for (const auto& e : d.edges) CHECK(braid_action(name(e.ends[0]) + e.label) == braid_action(name(e.ends[1])));
}

TEST_CASE("the 12-region diagram carries a wall cycle around the squares") {
    Complex c = diagram_to_complex(example_A2_diagram());
    auto rep = hypergraph_cycle_report(c);
    REQUIRE(rep.found);
    CHECK(rep.faces.size() == 8);
    CHECK(rep.edges.size() == rep.faces.size());
    for (const auto& f : rep.faces) CHECK(f.rfind("sq", 0) != 0);
    // consecutive crossed edges both lie on the face between them
    for (std::size_t k = 0; k < rep.faces.size(); ++k) {
        const auto& face = c.faces[c.face_index(rep.faces[k])];
        std::set<std::string> on;
        for (const auto& s : face.boundary) on.insert(c.edges[s.edge].id);
        CHECK(on.count(rep.edges[k]));
        CHECK(on.count(rep.edges[(k + 1) % rep.edges.size()]));
    }
}

TEST_CASE("block factorization") {
    auto g = single_edge(4);
    auto r = block_factorization("aaabA", g);
    REQUIRE(r.blocks.size() == 1);
    CHECK(r.blocks[0].k == 3);
    CHECK(r.blocks[0].l == -1);
    CHECK(r.blocks[0].m == 4);
    // a^3 b a^-1 is a b a in the Coxeter group
    CHECK(coxeter_key("aba", 4) == coxeter_key("aaabA", 4));
    CHECK(r.blocks[0].coxeter == coxeter_dihedral("aba", 4).str());

    auto s = block_factorization("aabbb", g);
    REQUIRE(s.blocks.size() == 1);
    CHECK(s.blocks[0].k == 2);
    CHECK(s.blocks[0].l == 3);
    CHECK(s.blocks[0].coxeter == "b");

    auto tri = triangle(2, 3, 3);
    Word w = "aacbcAbb";
    auto t = block_factorization(w, tri);
    Word joined;
    for (std::size_t i = 0; i < t.blocks.size(); ++i) {
        const auto& b = t.blocks[i];
        CHECK(b.alphabet.size() <= 2);
        CHECK(b.start == int(joined.size()));
        joined += b.word;
        // maximal: the next letter brings a third generator
        if (i + 1 < t.blocks.size()) CHECK(b.alphabet.find(gen(t.blocks[i + 1].word[0])) == std::string::npos);
    }
    CHECK(joined == w);
    CHECK(t.errors.empty());

    CHECK_FALSE(block_factorization("ac", path3(2, 2)).errors.empty());
    CHECK_FALSE(block_factorization("ad", g).errors.empty());
}

TEST_CASE("wall probe sweeps") {
    for (int m : {2, 3}) {
        auto sw = probe_all(coxeter_ball(single_edge(m), 2 * m).complex);
        CHECK(sw.pairs == 0);
        CHECK(sw.failures.empty());
    }
    for (auto g : {path3(2, 2), path3(3, 3)}) {
        auto sw = probe_all(coxeter_ball(g, 4).complex);
        CHECK(sw.pairs > 0);
        CHECK(sw.passed == sw.pairs);
        CHECK(sw.failures.empty());
    }
    auto bad = probe_all(coxeter_ball(triangle(2, 3, 3), 6).complex);
    CHECK(bad.pairs > 0);
    CHECK_FALSE(bad.failures.empty());
    CHECK(bad.passed + int(bad.failures.size()) <= bad.pairs);
}

TEST_CASE("graph flags") {
    CHECK(classify_graph(single_edge(4)).extra_large);
    CHECK_FALSE(classify_graph(single_edge(3)).extra_large);
    auto t = classify_graph(triangle(2, 3, 3));
    CHECK(t.triangle_with_2);
    CHECK_FALSE(t.two_dimensional);
    auto h = classify_graph(triangle(2, 3, 6));
    CHECK(h.two_dimensional);
    CHECK(classify_graph(triangle(4, 4, 4)).extra_large);
    LabeledGraph sq{{'a', 'b', 'c', 'd'}, {{'a', 'b', 2}, {'b', 'c', 2}, {'c', 'd', 2}, {'d', 'a', 3}}};
    CHECK(classify_graph(sq).square_with_three_2s);
    LabeledGraph sq2{{'a', 'b', 'c', 'd'}, {{'a', 'b', 2}, {'b', 'c', 3}, {'c', 'd', 2}, {'d', 'a', 3}}};
    CHECK_FALSE(classify_graph(sq2).square_with_three_2s);
}
