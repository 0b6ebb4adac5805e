// Artin and Coxeter groups of labeled graphs: presentations, dihedral word problems,
// Cayley balls, hypergraphs (walls), block factorization and the wall probe.
#pragma once

#include "complex.hpp"
#include "diagram.hpp"
#include "words.hpp"

#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace tits {

// ---- labeled graphs ----

struct LabeledEdge {
    char a, b;
    int m;
};

struct LabeledGraph {
    std::vector<char> vertices;
    std::vector<LabeledEdge> edges;

    int label(char x, char y) const {
        for (const auto& e : edges)
            if ((e.a == x && e.b == y) || (e.a == y && e.b == x)) return e.m;
        return 0;  // no edge
    }
    bool has(char x) const { return std::find(vertices.begin(), vertices.end(), x) != vertices.end(); }
};

inline LabeledGraph single_edge(int m) { return {{'a', 'b'}, {{'a', 'b', m}}}; }
inline LabeledGraph triangle(int mab, int mbc, int mca) { return {{'a', 'b', 'c'}, {{'a', 'b', mab}, {'b', 'c', mbc}, {'c', 'a', mca}}}; }
inline LabeledGraph path3(int mab, int mbc) { return {{'a', 'b', 'c'}, {{'a', 'b', mab}, {'b', 'c', mbc}}}; }

inline LabeledGraph graph_from_json(const nlohmann::json& j) {
    LabeledGraph g;
    try {
        for (const auto& v : j.at("vertices")) {
            std::string s = v.get<std::string>();
            if (s.size() != 1 || !std::islower((unsigned char)s[0])) throw InputError("vertex names are single lowercase letters: " + s);
            if (g.has(s[0])) throw InputError("duplicate vertex " + s);
            g.vertices.push_back(s[0]);
        }
        for (const auto& e : j.at("edges")) {
            std::string a = e.at(0).get<std::string>(), b = e.at(1).get<std::string>();
            int m = e.at(2).get<int>();
            if (a.size() != 1 || b.size() != 1 || !g.has(a[0]) || !g.has(b[0])) throw InputError("edge " + e.dump() + " uses an unknown vertex");
            if (a == b) throw InputError("loop at " + a);
            if (m < 2) throw InputError("edge " + e.dump() + ": labels are at least 2");
            if (g.label(a[0], b[0])) throw InputError("repeated edge " + a + b);
            g.edges.push_back({a[0], b[0], m});
        }
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("malformed labeled graph: ") + ex.what());
    }
    return g;
}

inline nlohmann::json graph_to_json(const LabeledGraph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (char v : g.vertices) j["vertices"].push_back(std::string(1, v));
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges) j["edges"].push_back({std::string(1, e.a), std::string(1, e.b), e.m});
    return j;
}

enum class Target { artin, coxeter };

inline Presentation standard_presentation(const LabeledGraph& g, Target t) {
    Presentation p;
    p.generators = g.vertices;
    if (t == Target::coxeter)
        for (char v : g.vertices) p.relators.push_back(Word(2, v));
    for (const auto& e : g.edges) {
        if (t == Target::artin) p.relators.push_back(dihedral_relator(e.a, e.b, e.m));
        else {
            // involutions: inverse letters become generators
            Word q = p_m(e.b, e.a, e.m);
            p.relators.push_back(p_m(e.a, e.b, e.m) + Word(q.rbegin(), q.rend()));
        }
    }
    return p;
}

struct GraphFlags {
    bool extra_large = true;
    bool triangle_with_2 = false;
    bool two_dimensional = true;
    bool square_with_three_2s = false;
    std::vector<std::string> witnesses;
};

inline GraphFlags classify_graph(const LabeledGraph& g) {
    GraphFlags f;
    for (const auto& e : g.edges)
        if (e.m < 4) f.extra_large = false;
    const auto& V = g.vertices;
    int n = int(V.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int x = g.label(V[i], V[j]), y = g.label(V[j], V[k]), z = g.label(V[k], V[i]);
                if (!x || !y || !z) continue;
                std::string tri = std::string{V[i], V[j], V[k]};
                if (x == 2 || y == 2 || z == 2) {
                    f.triangle_with_2 = true;
                    f.witnesses.push_back("triangle " + tri + " has a 2");
                }
                // 1/x + 1/y + 1/z <= 1
                if (y * z + x * z + x * y > x * y * z) {
                    f.two_dimensional = false;
                    f.witnesses.push_back("triangle " + tri + " is spherical");
                }
            }
    // 4-cycles v0 v1 v2 v3
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a >= b || a >= c || a >= d || b == c || b == d || c == d || b > d) continue;
                    int l[4] = {g.label(V[a], V[b]), g.label(V[b], V[c]), g.label(V[c], V[d]), g.label(V[d], V[a])};
                    if (!l[0] || !l[1] || !l[2] || !l[3]) continue;
                    int twos = 0;
                    for (int x : l) twos += x == 2;
                    if (twos >= 3) {
                        f.square_with_three_2s = true;
                        f.witnesses.push_back("square " + std::string{V[a], V[b], V[c], V[d]} + " has " + std::to_string(twos) + " labels 2");
                    }
                }
    return f;
}

inline nlohmann::json flags_json(const GraphFlags& f) {
    return {{"extra_large", f.extra_large},
            {"triangle_with_2", f.triangle_with_2},
            {"two_dimensional", f.two_dimensional},
            {"square_with_three_2s", f.square_with_three_2s},
            {"witnesses", f.witnesses}};
}

// ---- dihedral Coxeter group: rho^k sigma^e with a = sigma, b = rho^-1 sigma ----

struct DihedralElement {
    int k = 0;
    bool reflection = false;
    std::string str() const { return std::string(reflection ? "reflection " : "rotation ") + std::to_string(k); }
    bool trivial() const { return k == 0 && !reflection; }
    bool operator==(const DihedralElement&) const = default;
};

inline DihedralElement dihedral_mul(const DihedralElement& x, const DihedralElement& y, int m) {
    int j = x.reflection ? -y.k : y.k;
    return {((x.k + j) % m + m) % m, x.reflection != y.reflection};
}

inline DihedralElement coxeter_dihedral(const Word& w, int m) {
    if (m < 2) throw std::invalid_argument("m must be at least 2");
    DihedralElement e;
    for (char x : w) {
        char g = gen(x);
        if (g != 'a' && g != 'b') throw std::invalid_argument(std::string("letter ") + x + " is not a or b");
        e = dihedral_mul(e, g == 'a' ? DihedralElement{0, true} : DihedralElement{m - 1, true}, m);
    }
    return e;
}

// ---- dihedral Artin group: Garside normal form Delta^p s1 s2 ... ----

struct ArtinNF {
    int m = 2;
    int delta = 0;
    std::vector<Word> factors;  // left-weighted simple factors, none equal to Delta

    bool trivial() const { return delta == 0 && factors.empty(); }
    std::string str() const {
        std::string s = "D^" + std::to_string(delta);
        for (const auto& f : factors) s += "." + f;
        return s;
    }
    Word word() const {
        Word d = p_m('a', 'b', m), w;
        for (int i = 0; i < std::abs(delta); ++i) w += delta > 0 ? d : inverse(d);
        for (const auto& f : factors) w += f;
        return w;
    }
    bool operator==(const ArtinNF& o) const { return m == o.m && delta == o.delta && factors == o.factors; }
};

// left normal form of a positive word
inline std::vector<Word> left_normal_form(const Word& pos, int m) {
    std::vector<Word> f;
    for (char x : pos) f.push_back(Word(1, x));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            Word& s = f[i];
            Word& t = f[i + 1];
            if (int(s.size()) >= m || t.empty()) continue;
            char last = s.back();
            char other = last == 'a' ? 'b' : 'a';
            int room = m - int(s.size());
            if (int(t.size()) == m) {
                // t is Delta: it has a left divisor starting with either letter
                Word full = p_m(other, last, m);
                s += full.substr(0, room);
                t = full.substr(room);
                changed = true;
            } else if (t[0] != last) {
                int k = std::min<int>(room, int(t.size()));
                s += t.substr(0, k);
                t = t.substr(k);
                changed = true;
            }
        }
        f.erase(std::remove_if(f.begin(), f.end(), [](const Word& w) { return w.empty(); }), f.end());
    }
    return f;
}

inline ArtinNF artin_dihedral_nf(const Word& w, int m) {
    if (m < 2) throw std::invalid_argument("m must be at least 2");
    Word delta = p_m('a', 'b', m);
    auto tau = [&](Word p) {
        if (m % 2)
            for (char& x : p) x = x == 'a' ? 'b' : 'a';
        return p;
    };
    int p = 0;
    Word pos;
    for (char x : w) {
        char g = gen(x);
        if (g != 'a' && g != 'b') throw std::invalid_argument(std::string("letter ") + x + " is not a or b");
        if (positive(x)) { pos.push_back(x); continue; }
        // x^-1 = Delta^-1 (Delta x^-1), and P Delta^-1 = Delta^-1 tau(P)
        Word c = delta.back() == g ? p_m('a', 'b', m - 1) : p_m('b', 'a', m - 1);
        pos = tau(pos) + c;
        --p;
    }
    ArtinNF nf;
    nf.m = m;
    nf.delta = p;
    for (auto& f : left_normal_form(pos, m)) {
        if (int(f.size()) == m && nf.factors.empty()) ++nf.delta;
        else nf.factors.push_back(f);
    }
    // Delta factors sit at the front of a left-weighted form; tau-twist is already absorbed
    return nf;
}

struct WordVerdict {
    bool trivial = false;
    std::string normal_form;
    std::optional<DihedralElement> element;
};

inline WordVerdict dihedral_word_problem(const Word& w, int m, Target t) {
    if (m < 2) throw std::invalid_argument("m must be at least 2");
    WordVerdict v;
    if (t == Target::coxeter) {
        v.element = coxeter_dihedral(w, m);
        v.trivial = v.element->trivial();
        v.normal_form = v.element->str();
    } else {
        ArtinNF nf = artin_dihedral_nf(w, m);
        v.trivial = nf.trivial();
        v.normal_form = nf.str();
    }
    return v;
}

// ---- Tits' solution for Coxeter groups ----

// shortlex least reduced word; braid moves plus deletion of squares
inline Word coxeter_normal(Word w, const LabeledGraph& g) {
    for (char& x : w) x = gen(x);
    while (true) {
        std::set<Word> seen{w};
        std::deque<Word> queue{w};
        std::optional<Word> shorter;
        while (!queue.empty() && !shorter) {
            Word u = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i + 1 < u.size() && !shorter; ++i) {
                if (u[i] == u[i + 1]) { shorter = u.substr(0, i) + u.substr(i + 2); break; }
                int m = g.label(u[i], u[i + 1]);
                if (!m || i + m > u.size()) continue;
                if (u.compare(i, m, p_m(u[i], u[i + 1], m)) != 0) continue;
                Word v = u.substr(0, i) + p_m(u[i + 1], u[i], m) + u.substr(i + m);
                if (seen.insert(v).second) queue.push_back(v);
            }
        }
        if (shorter) { w = *shorter; continue; }
        return *seen.begin();
    }
}

inline bool tits_coxeter_word_problem(const Word& w, const LabeledGraph& g) { return coxeter_normal(w, g).empty(); }

// ---- Cayley balls ----

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CayleyBall {
    Complex complex;
    std::string root;
    int radius = 0;
    std::map<std::string, Word> names;  // vertex -> normal-form word
    std::vector<char> edge_label;       // per edge index
    std::vector<Word> element;          // per vertex index
};

inline std::optional<std::string> gon_tag(int sides) {
    if (sides == 4 || sides == 6 || sides == 12) return "Gon(" + std::to_string(sides) + ")";
    return std::nullopt;
}

inline CayleyBall coxeter_ball(const LabeledGraph& g, int radius, std::size_t cap = 20000) {
    CayleyBall ball;
    ball.radius = radius;
    std::map<Word, int> index;
    std::vector<int> dist;
    auto add = [&](const Word& w, int d) {
        index[w] = int(ball.element.size());
        ball.element.push_back(w);
        dist.push_back(d);
        if (ball.element.size() > cap) throw CapExceeded("element cap " + std::to_string(cap) + " exceeded");
    };
    add("", 0);
    std::vector<char> gens = g.vertices;
    std::sort(gens.begin(), gens.end());
    for (std::size_t i = 0; i < ball.element.size(); ++i) {
        if (dist[i] >= radius) continue;
        for (char s : gens) {
            Word w = coxeter_normal(ball.element[i] + s, g);
            if (!index.count(w)) add(w, dist[i] + 1);
        }
    }
    auto times = [&](int i, char s) -> int {
        auto it = index.find(coxeter_normal(ball.element[i] + s, g));
        return it == index.end() ? -1 : it->second;
    };
    Complex& c = ball.complex;
    for (std::size_t i = 0; i < ball.element.size(); ++i) {
        std::string v = "g" + std::to_string(i);
        c.add_vertex(v);
        ball.names[v] = ball.element[i].empty() ? "1" : ball.element[i];
    }
    ball.root = "g0";
    std::map<std::tuple<int, int>, int> edge_at;
    for (std::size_t i = 0; i < ball.element.size(); ++i)
        for (char s : gens) {
            int j = times(int(i), s);
            if (j > int(i)) {
                edge_at[{int(i), j}] = c.add_edge("e" + std::to_string(c.edges.size()), "g" + std::to_string(i), "g" + std::to_string(j));
                ball.edge_label.push_back(s);
            }
        }
    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < ball.element.size(); ++i)
        for (const auto& ge : g.edges) {
            char s = std::min(ge.a, ge.b), t = std::max(ge.a, ge.b);
            std::vector<int> cyc{int(i)};
            bool inside = true;
            for (int k = 0; k < 2 * ge.m - 1 && inside; ++k) {
                int nx = times(cyc.back(), k % 2 ? t : s);
                if (nx < 0) inside = false;
                else cyc.push_back(nx);
            }
            if (!inside) continue;
            std::vector<int> key = cyc;
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) continue;
            if (*std::min_element(cyc.begin(), cyc.end()) != int(i)) continue;
            Face f;
            f.id = "f" + std::to_string(c.faces.size());
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                int x = cyc[k], y = cyc[(k + 1) % cyc.size()];
                int e = edge_at.at({std::min(x, y), std::max(x, y)});
                f.boundary.push_back({e, x < y});
            }
            f.shape = gon_tag(2 * ge.m);
            c.add_face(f);
        }
    return ball;
}

inline CayleyBall artin_dihedral_ball(const LabeledGraph& g, int radius, std::size_t cap = 20000) {
    if (g.vertices.size() != 2 || g.edges.size() != 1) throw std::invalid_argument("artin-dihedral balls need a single edge");
    int m = g.edges[0].m;
    CayleyBall ball;
    ball.radius = radius;
    std::map<std::string, int> index;
    std::vector<ArtinNF> nfs;
    std::vector<int> dist;
    auto add = [&](const ArtinNF& nf, int d) {
        index[nf.str()] = int(nfs.size());
        nfs.push_back(nf);
        ball.element.push_back(nf.word());
        dist.push_back(d);
        if (nfs.size() > cap) throw CapExceeded("element cap " + std::to_string(cap) + " exceeded");
    };
    add(artin_dihedral_nf("", m), 0);
    for (std::size_t i = 0; i < nfs.size(); ++i) {
        if (dist[i] >= radius) continue;
        for (char x : {'a', 'b', 'A', 'B'}) {
            ArtinNF nf = artin_dihedral_nf(ball.element[i] + x, m);
            if (!index.count(nf.str())) add(nf, dist[i] + 1);
        }
    }
    auto times = [&](int i, char x) -> int {
        auto it = index.find(artin_dihedral_nf(ball.element[i] + x, m).str());
        return it == index.end() ? -1 : it->second;
    };
    Complex& c = ball.complex;
    for (std::size_t i = 0; i < nfs.size(); ++i) {
        std::string v = "g" + std::to_string(i);
        c.add_vertex(v);
        ball.names[v] = nfs[i].str();
    }
    ball.root = "g0";
    std::map<std::pair<int, char>, int> out_edge;
    for (std::size_t i = 0; i < nfs.size(); ++i)
        for (char x : {'a', 'b'}) {
            int j = times(int(i), x);
            if (j < 0) continue;
            out_edge[{int(i), x}] = c.add_edge("e" + std::to_string(c.edges.size()), "g" + std::to_string(i), "g" + std::to_string(j));
            ball.edge_label.push_back(x);
        }
    for (std::size_t i = 0; i < nfs.size(); ++i) {
        // p_m(a,b) forward, then p_m(b,a) backward
        auto walk = [&](const Word& p, std::vector<int>& es) {
            int cur = int(i);
            for (char x : p) {
                auto it = out_edge.find({cur, x});
                if (it == out_edge.end()) return false;
                es.push_back(it->second);
                cur = c.vertex_index(c.edges[it->second].ends[1]);
            }
            return true;
        };
        std::vector<int> up, down;
        if (!walk(p_m('a', 'b', m), up) || !walk(p_m('b', 'a', m), down)) continue;
        Face f;
        f.id = "f" + std::to_string(c.faces.size());
        for (int e : up) f.boundary.push_back({e, true});
        for (auto it = down.rbegin(); it != down.rend(); ++it) f.boundary.push_back({*it, false});
        f.shape = gon_tag(2 * m);
        c.add_face(f);
    }
    return ball;
}

// ---- hypergraphs ----

struct HyperEdge {
    int face = 0;
    int pos = 0;  // first position of the antipodal pair (pos < n/2)
    int from = 0, to = 0;  // carrier edges
};

struct Hypergraph {
    std::vector<int> vertices;          // carrier edge indices, sorted by id
    std::vector<HyperEdge> edges;
    bool forest = true;
    std::vector<std::vector<int>> cycles;  // fundamental cycles, as hyperedge indices
    bool embedded = true;
    std::vector<int> self_crossing_faces;
    int complement_components = 0;  // of the carrier 1-skeleton minus the wall's edges
    bool metrized = false;
};

struct OddFace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Hypergraph trace_hypergraph(const Complex& c, int start) {
    std::vector<std::vector<std::pair<int, int>>> occ(c.edges.size());  // edge -> (face, position)
    for (int f = 0; f < int(c.faces.size()); ++f)
        for (int k = 0; k < int(c.faces[f].boundary.size()); ++k) occ[c.faces[f].boundary[k].edge].push_back({f, k});
    Hypergraph h;
    std::set<int> seen_v{start};
    std::set<std::pair<int, int>> seen_e;
    std::deque<int> queue{start};
    while (!queue.empty()) {
        int e = queue.front();
        queue.pop_front();
        for (auto [f, k] : occ[e]) {
            const auto& b = c.faces[f].boundary;
            int n = int(b.size());
            if (n % 2) throw OddFace("face " + c.faces[f].id + " has " + std::to_string(n) + " sides");
            int p = k % (n / 2);
            if (!seen_e.insert({f, p}).second) continue;
            int x = b[p].edge, y = b[p + n / 2].edge;
            h.edges.push_back({f, p, x, y});
            if (c.faces[f].shape) h.metrized = true;
            for (int z : {x, y})
                if (seen_v.insert(z).second) queue.push_back(z);
        }
    }
    h.vertices.assign(seen_v.begin(), seen_v.end());
    std::sort(h.vertices.begin(), h.vertices.end(), [&](int a, int b) { return natural_less(c.edges[a].id, c.edges[b].id); });
    std::sort(h.edges.begin(), h.edges.end(), [&](const HyperEdge& a, const HyperEdge& b) {
        if (a.face != b.face) return natural_less(c.faces[a.face].id, c.faces[b.face].id);
        return a.pos < b.pos;
    });
    // spanning forest; each extra hyperedge closes a fundamental cycle
    std::map<int, std::vector<std::pair<int, int>>> tree;  // vertex -> (neighbour, hyperedge)
    std::map<int, int> parent;
    for (int v : h.vertices) parent[v] = v;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int i = 0; i < int(h.edges.size()); ++i) {
        int x = h.edges[i].from, y = h.edges[i].to;
        if (find(x) != find(y)) {
            parent[find(x)] = find(y);
            tree[x].push_back({y, i});
            tree[y].push_back({x, i});
            continue;
        }
        h.forest = false;
        // tree path y -> x
        std::map<int, std::pair<int, int>> back;
        std::deque<int> q{y};
        back[y] = {y, -1};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (u == x) break;
            for (auto [w, he] : tree[u])
                if (!back.count(w)) { back[w] = {u, he}; q.push_back(w); }
        }
        std::vector<int> cyc{i};
        for (int u = x; u != y; u = back[u].first) cyc.push_back(back[u].second);
        h.cycles.push_back(cyc);
    }
    // a face crossed twice by the same wall
    std::map<int, int> per_face;
    for (const auto& he : h.edges) ++per_face[he.face];
    for (auto [f, cnt] : per_face)
        if (cnt > 1) { h.embedded = false; h.self_crossing_faces.push_back(f); }
    for (const auto& he : h.edges)
        if (he.from == he.to && std::find(h.self_crossing_faces.begin(), h.self_crossing_faces.end(), he.face) == h.self_crossing_faces.end()) {
            h.embedded = false;
            h.self_crossing_faces.push_back(he.face);
        }
    // two-sidedness hint
    std::set<int> wall(h.vertices.begin(), h.vertices.end());
    std::vector<int> vp(c.vertices.size());
    std::iota(vp.begin(), vp.end(), 0);
    std::function<int(int)> vf = [&](int x) { return vp[x] == x ? x : vp[x] = vf(vp[x]); };
    for (int e = 0; e < int(c.edges.size()); ++e)
        if (!wall.count(e)) vp[vf(c.vertex_index(c.edges[e].ends[0]))] = vf(c.vertex_index(c.edges[e].ends[1]));
    std::set<int> roots;
    for (int v = 0; v < int(c.vertices.size()); ++v) roots.insert(vf(v));
    h.complement_components = int(roots.size());
    return h;
}

// every hypergraph of the carrier, started from edges in natural order
inline std::vector<Hypergraph> all_hypergraphs(const Complex& c) {
    std::vector<Hypergraph> out;
    std::vector<bool> covered(c.edges.size(), false);
    for (int e : c.edge_order()) {
        if (covered[e]) continue;
        out.push_back(trace_hypergraph(c, e));
        for (int v : out.back().vertices) covered[v] = true;
    }
    return out;
}

inline nlohmann::json hypergraph_json(const Complex& c, const Hypergraph& h) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (int v : h.vertices) j["vertices"].push_back(c.edges[v].id);
    j["edges"] = nlohmann::json::array();
    for (const auto& he : h.edges) j["edges"].push_back({c.faces[he.face].id, c.edges[he.from].id, c.edges[he.to].id});
    j["forest"] = h.forest;
    j["embedded"] = h.embedded;
    j["cycles"] = nlohmann::json::array();
    for (const auto& cyc : h.cycles) {
        nlohmann::json faces = nlohmann::json::array();
        for (int i : cyc) faces.push_back(c.faces[h.edges[i].face].id);
        j["cycles"].push_back(faces);
    }
    j["self_crossing_faces"] = nlohmann::json::array();
    for (int f : h.self_crossing_faces) j["self_crossing_faces"].push_back(c.faces[f].id);
    j["complement_components"] = h.complement_components;
    j["metrized"] = h.metrized;
    return j;
}

inline std::string hypergraph_dot(const Complex& c, const Hypergraph& h) {
    std::ostringstream o;
    o << "graph wall {\n";
    for (int v : h.vertices) o << "  \"" << c.edges[v].id << "\";\n";
    for (const auto& he : h.edges)
        o << "  \"" << c.edges[he.from].id << "\" -- \"" << c.edges[he.to].id << "\" [label=\"" << c.faces[he.face].id << "\"];\n";
    o << "}\n";
    return o.str();
}

// ---- blocks ----

struct Block {
    int start = 0;
    Word word;
    std::string alphabet;  // one or two generators
    int m = 0;             // label of the Gamma edge used, 0 for a one-letter run
    std::string form;      // matched syllable pattern or empty
    int k = 0, l = 0;
    std::string coxeter;   // dihedral Coxeter image
};

struct BlockReport {
    std::vector<Block> blocks;
    std::vector<std::string> errors;
};

// syllables (generator, exponent) of a word
inline std::vector<std::pair<char, int>> syllables(const Word& w) {
    std::vector<std::pair<char, int>> s;
    for (char x : w) {
        int e = positive(x) ? 1 : -1;
        if (!s.empty() && s.back().first == gen(x)) s.back().second += e;
        else s.push_back({gen(x), e});
    }
    return s;
}

inline BlockReport block_factorization(const Word& w, const LabeledGraph& g) {
    BlockReport rep;
    for (char x : w)
        if (!g.has(gen(x))) { rep.errors.push_back(std::string("generator ") + gen(x) + " is not in the graph"); return rep; }
    std::size_t i = 0;
    while (i < w.size()) {
        Block b;
        b.start = int(i);
        std::string alpha(1, gen(w[i]));
        std::size_t j = i;
        while (j < w.size()) {
            char x = gen(w[j]);
            if (alpha.find(x) == std::string::npos) {
                if (alpha.size() == 2) break;
                alpha.push_back(x);
            }
            ++j;
        }
        b.word = w.substr(i, j - i);
        std::sort(alpha.begin(), alpha.end());
        b.alphabet = alpha;
        if (alpha.size() == 2) {
            b.m = g.label(alpha[0], alpha[1]);
            if (!b.m) rep.errors.push_back("run " + b.word + " over " + alpha + ": no block exists");
        }
        auto syl = syllables(b.word);
        if (syl.size() == 3 && syl[0].first == syl[2].first && std::abs(syl[1].second) == 1) {
            b.form = std::string(1, syl[0].first) + "^k " + syl[1].first + " " + syl[0].first + "^l";
            b.k = syl[0].second;
            b.l = syl[2].second;
        } else if (syl.size() == 2) {
            b.form = std::string(1, syl[0].first) + "^k " + syl[1].first + "^l";
            b.k = syl[0].second;
            b.l = syl[1].second;
        }
        if (b.m) {
            Word local = b.word;
            for (char& x : local) {
                bool pos_ = positive(x);
                x = gen(x) == alpha[0] ? 'a' : 'b';
                if (!pos_) x = inv(x);
            }
            DihedralElement e = coxeter_dihedral(local, b.m);
            // report in terms of the run's own letters
            if (e.trivial()) b.coxeter = "1";
            else if (e == coxeter_dihedral("a", b.m)) b.coxeter = std::string(1, alpha[0]);
            else if (e == coxeter_dihedral("b", b.m)) b.coxeter = std::string(1, alpha[1]);
            else b.coxeter = e.str();
        }
        rep.blocks.push_back(b);
        i = j;
    }
    return rep;
}

// ---- wall probe ----

struct WallIndex {
    std::vector<Hypergraph> walls;
    std::map<std::pair<int, int>, int> pair_wall;  // (face, pos mod n/2) -> wall
    std::vector<int> edge_wall;
};

inline WallIndex index_walls(const Complex& c) {
    WallIndex wi;
    wi.walls = all_hypergraphs(c);
    wi.edge_wall.assign(c.edges.size(), -1);
    for (int w = 0; w < int(wi.walls.size()); ++w) {
        for (int v : wi.walls[w].vertices) wi.edge_wall[v] = w;
        for (const auto& he : wi.walls[w].edges) wi.pair_wall[{he.face, he.pos}] = w;
    }
    return wi;
}

struct ProbeCandidate {
    int wall = -1;
    bool equal = false;
    bool disjoint = false;
    std::string witness;  // face where the walls cross
};

struct ProbeResult {
    bool found = false;
    int wall = -1;
    std::string rule;  // "meets e", "square rule", "adjacent-edge rule", "fallback"
    std::vector<ProbeCandidate> candidates;
    std::string caveat = "computed inside a finite ball; walls are truncated at its boundary";
};

inline ProbeCandidate compare_walls(const Complex& c, const WallIndex& wi, int a, int b) {
    ProbeCandidate pc{a, a == b, false, ""};
    if (pc.equal) return pc;
    std::set<int> fa, fb;
    for (const auto& he : wi.walls[a].edges) fa.insert(he.face);
    for (const auto& he : wi.walls[b].edges) fb.insert(he.face);
    for (int f : fa)
        if (fb.count(f)) { pc.witness = c.faces[f].id; return pc; }
    pc.disjoint = true;
    return pc;
}

inline ProbeResult coxeter_wall_probe(const Complex& c, const WallIndex& wi, int sigma, int tau, int wall_sigma) {
    const auto& bs = c.faces[sigma].boundary;
    const auto& bt = c.faces[tau].boundary;
    int e = -1;
    for (const auto& s : bs)
        for (const auto& t : bt)
            if (s.edge == t.edge && e < 0) e = s.edge;
    if (e < 0) throw std::invalid_argument("faces " + c.faces[sigma].id + " and " + c.faces[tau].id + " are not adjacent");
    bool meets_sigma = false;
    for (const auto& he : wi.walls[wall_sigma].edges)
        if (he.face == sigma) meets_sigma = true;
    if (!meets_sigma) throw std::invalid_argument("wall does not meet " + c.faces[sigma].id);
    ProbeResult r;
    int nt = int(bt.size());
    std::set<int> through_tau;
    for (int p = 0; p < nt / 2; ++p) through_tau.insert(wi.pair_wall.at({tau, p}));
    for (int w : through_tau) r.candidates.push_back(compare_walls(c, wi, w, wall_sigma));
    auto accept = [&](int w, const std::string& rule) {
        for (const auto& pc : r.candidates)
            if (pc.wall == w && (pc.equal || pc.disjoint)) { r.found = true; r.wall = w; r.rule = rule; return true; }
        return false;
    };
    if (wi.edge_wall[e] == wall_sigma && accept(wall_sigma, "meets e")) return r;
    int pe = -1;
    for (int k = 0; k < nt; ++k)
        if (bt[k].edge == e) pe = k;
    if (nt == 4) {
        if (accept(wi.pair_wall.at({tau, (pe + 1) % 2}), "square rule")) return r;
    } else {
        // v: end of e whose neighbouring sigma edge carries the wall; g: tau edge at the other end
        int ns = int(bs.size()), ps = -1;
        for (int k = 0; k < ns; ++k)
            if (bs[k].edge == e) ps = k;
        const std::string& tail_e = c.step_tail(bs[ps]);
        int f_before = bs[(ps + ns - 1) % ns].edge, f_after = bs[(ps + 1) % ns].edge;
        std::string v = tail_e;
        if (wi.edge_wall[f_before] != wall_sigma && wi.edge_wall[f_after] == wall_sigma) v = c.step_head(bs[ps]);
        int g = -1;
        int before = (pe + nt - 1) % nt, after = (pe + 1) % nt;
        bool before_at_v = c.step_head(bt[before]) == v;  // tau's previous edge ends where e starts in tau
        g = before_at_v ? bt[after].edge : bt[before].edge;
        if (accept(wi.edge_wall[g], "adjacent-edge rule")) return r;
    }
    for (const auto& pc : r.candidates)
        if (pc.equal || pc.disjoint) { r.found = true; r.wall = pc.wall; r.rule = "fallback"; return r; }
    return r;
}

struct ProbeSweep {
    int pairs = 0;   // (sigma, tau, wall) triples tried
    int passed = 0;
    int by_rule = 0;
    std::vector<std::string> failures;
};

// every ordered adjacent face pair and every wall through sigma
inline ProbeSweep probe_all(const Complex& c) {
    ProbeSweep sw;
    WallIndex wi = index_walls(c);
    std::map<int, std::vector<int>> faces_on;
    for (int f = 0; f < int(c.faces.size()); ++f)
        for (const auto& s : c.faces[f].boundary) faces_on[s.edge].push_back(f);
    std::set<std::pair<int, int>> adjacent;
    for (auto& [e, fs] : faces_on)
        for (int x : fs)
            for (int y : fs)
                if (x != y) adjacent.insert({x, y});
    for (auto [s, t] : adjacent) {
        int ns = int(c.faces[s].boundary.size());
        std::set<int> walls;
        for (int p = 0; p < ns / 2; ++p) walls.insert(wi.pair_wall.at({s, p}));
        for (int w : walls) {
            ++sw.pairs;
            ProbeResult r = coxeter_wall_probe(c, wi, s, t, w);
            if (r.found) {
                ++sw.passed;
                if (r.rule != "fallback") ++sw.by_rule;
            } else {
                std::string msg = "sigma " + c.faces[s].id + ", tau " + c.faces[t].id + ": every wall through tau crosses the given wall (";
                for (std::size_t i = 0; i < r.candidates.size(); ++i) msg += (i ? ", " : "") + r.candidates[i].witness;
                sw.failures.push_back(msg + ")");
            }
        }
    }
    return sw;
}

// ---- the 12-region diagram over a triangle with m_ab = 2 ----

// Gamma for the diagram: m_ab = 2, m_bc = m_ca = 3.
inline LabeledGraph example_A2_graph() { return triangle(2, 3, 3); }

// Vertices are named by words for the group elements they map to.
inline PlanarDiagram example_A2_diagram() {
    return diagram_from_walks({
        {"sq00", "abAB", {"1", "a", "ab", "b"}},
        {"sq01", "abAB", {"b", "ab", "abb", "bb"}},
        {"sq10", "abAB", {"a", "aa", "aab", "ab"}},
        {"sq11", "abAB", {"ab", "aab", "aabb", "abb"}},
        {"top1", "CACaca", {"aabb", "aabbC", "aabbCA", "abbCA", "abbC", "abb"}},
        {"top0", "CACaca", {"abb", "abbC", "abbCA", "bbCA", "bbC", "bb"}},
        {"left1", "CBCbcb", {"bb", "bbC", "bbCB", "bCB", "bC", "b"}},
        {"left0", "CBCbcb", {"b", "bC", "bCB", "CB", "C", "1"}},
        {"bot0", "CAcacA", {"1", "C", "CA", "aCA", "aC", "a"}},
        {"bot1", "CAcacA", {"a", "aC", "aCA", "aaCA", "aaC", "aa"}},
        {"right0", "CBcbcB", {"aa", "aaC", "aaCB", "aabCB", "aabC", "aab"}},
        {"right1", "CBcbcB", {"aab", "aabC", "aabCB", "aabbCB", "aabbC", "aabb"}},
    });
}

struct CycleReport {
    bool found = false;
    std::vector<std::string> faces;  // along the first fundamental cycle
    std::vector<std::string> edges;  // carrier edges crossed, in order
    nlohmann::json walls;            // every hypergraph of the carrier
};

inline CycleReport hypergraph_cycle_report(const Complex& c) {
    CycleReport rep;
    rep.walls = nlohmann::json::array();
    for (const auto& h : all_hypergraphs(c)) {
        rep.walls.push_back(hypergraph_json(c, h));
        if (rep.found || h.cycles.empty()) continue;
        rep.found = true;
        // order the cycle's hyperedges into a closed walk
        std::vector<HyperEdge> pending;
        for (int i : h.cycles.front()) pending.push_back(h.edges[i]);
        int at = pending.front().from;
        while (!pending.empty()) {
            auto it = std::find_if(pending.begin(), pending.end(), [&](const HyperEdge& he) { return he.from == at || he.to == at; });
            if (it == pending.end()) break;
            rep.edges.push_back(c.edges[at].id);
            rep.faces.push_back(c.faces[it->face].id);
            at = it->from == at ? it->to : it->from;
            pending.erase(it);
        }
    }
    return rep;
}

// ---- Artin walls against Coxeter walls (single edge) ----

struct WallProjection {
    int artin_walls = 0;
    int nontrivial = 0;
    int forests = 0;
    int consistent = 0;  // walls whose image lies in one embedded Coxeter wall
    std::vector<std::string> failures;
};

inline WallProjection project_walls(const CayleyBall& artin, const CayleyBall& coxeter, const LabeledGraph& g) {
    WallProjection p;
    std::map<Word, int> cox_index;
    for (int i = 0; i < int(coxeter.element.size()); ++i) cox_index[coxeter.element[i]] = i;
    std::map<std::pair<int, int>, int> cox_edge;
    for (int e = 0; e < int(coxeter.complex.edges.size()); ++e) {
        int x = coxeter.complex.vertex_index(coxeter.complex.edges[e].ends[0]);
        int y = coxeter.complex.vertex_index(coxeter.complex.edges[e].ends[1]);
        cox_edge[{std::min(x, y), std::max(x, y)}] = e;
    }
    WallIndex cw = index_walls(coxeter.complex);
    auto image = [&](int artin_edge) -> int {
        const auto& ed = artin.complex.edges[artin_edge];
        int x = artin.complex.vertex_index(ed.ends[0]), y = artin.complex.vertex_index(ed.ends[1]);
        auto px = cox_index.find(coxeter_normal(artin.element[x], g));
        auto py = cox_index.find(coxeter_normal(artin.element[y], g));
        if (px == cox_index.end() || py == cox_index.end()) return -1;
        auto it = cox_edge.find({std::min(px->second, py->second), std::max(px->second, py->second)});
        return it == cox_edge.end() ? -1 : it->second;
    };
    for (const auto& h : all_hypergraphs(artin.complex)) {
        ++p.artin_walls;
        p.forests += h.forest;
        if (h.edges.empty()) continue;
        ++p.nontrivial;
        std::set<int> walls;
        bool outside = false;
        for (int v : h.vertices) {
            int e = image(v);
            if (e < 0) outside = true;
            else walls.insert(cw.edge_wall[e]);
        }
        std::string name = artin.complex.edges[h.vertices.front()].id;
        if (outside) p.failures.push_back("wall at " + name + " leaves the Coxeter ball");
        else if (walls.size() != 1) p.failures.push_back("wall at " + name + " maps into " + std::to_string(walls.size()) + " Coxeter walls");
        else if (!cw.walls[*walls.begin()].embedded) p.failures.push_back("wall at " + name + " maps onto a non-embedded Coxeter wall");
        else ++p.consistent;
    }
    return p;
}

}  // namespace tits
