// Direction sets over shaped complexes, the maps H and I, and the transition digraph.
#pragma once

#include "complex.hpp"

#include <deque>
#include <functional>
#include <sstream>

namespace tits {

// An anchor expressed along a face traversal of an edge. Position and tangential
// component are canonical: measured along the edge from ends[0] to ends[1].
struct Token {
    int face = 0;
    int pos = 0;
    int edge = 0;
    Quad t;
    Quad alpha;
    Quad beta;

    bool same_point(const Token& o) const { return edge == o.edge && t == o.t; }
    bool perpendicular() const { return alpha.is_zero(); }
    friend bool operator==(const Token& x, const Token& y) {
        return x.face == y.face && x.pos == y.pos && x.edge == y.edge && x.t == y.t && x.alpha == y.alpha && x.beta == y.beta;
    }
};

class DirectionSet {
public:
    explicit DirectionSet(const Complex& c) : c_(&c) {}

    const Complex& complex() const { return *c_; }

    // whether step k of face f runs along the side direction of its shape
    bool agrees(const Face& f, int k) const { return f.boundary[k].forward == !c_->reflected(f); }

    Token from_anchor(int face, int k, const Anchor& a) const {
        const Face& f = c_->faces[face];
        bool ag = agrees(f, k);
        return {face, k, f.boundary[k].edge, ag ? a.t : Quad(1) - a.t, ag ? a.alpha : -a.alpha, a.beta};
    }
    Anchor to_anchor(const Token& tk) const {
        const Face& f = c_->faces[tk.face];
        bool ag = agrees(f, tk.pos);
        return {c_->side_of(f, tk.pos), ag ? tk.t : Quad(1) - tk.t, ag ? tk.alpha : -tk.alpha, tk.beta};
    }
    const Shape& shape_of(const Token& tk) const { return cached_shape(*c_->faces[tk.face].shape); }

    bool less(const Token& x, const Token& y) const {
        if (x.face != y.face) return natural_less(c_->faces[x.face].id, c_->faces[y.face].id);
        if (x.pos != y.pos) return x.pos < y.pos;
        if (x.t != y.t) return Quad::lex_less(x.t, y.t);
        if (x.alpha != y.alpha) return Quad::lex_less(x.alpha, y.alpha);
        return Quad::lex_less(x.beta, y.beta);
    }

    std::string label(const Token& tk) const {
        return c_->faces[tk.face].id + "/" + std::to_string(tk.pos) + "/" + c_->edges[tk.edge].id + "/t=" + tk.t.str() +
               "/alpha=" + tk.alpha.str() + "/beta=" + tk.beta.str();
    }

    nlohmann::json to_json(const Token& tk) const {
        return {{"face", c_->faces[tk.face].id}, {"pos", tk.pos}, {"edge", c_->edges[tk.edge].id},
                {"t", tk.t.str()}, {"alpha", tk.alpha.str()}, {"beta", tk.beta.str()}};
    }
    Token from_json(const nlohmann::json& j) const {
        Token tk;
        tk.face = c_->face_index(j.at("face").get<std::string>());
        if (tk.face < 0) throw InputError("unknown face " + j.at("face").get<std::string>());
        tk.pos = j.at("pos").get<int>();
        if (tk.pos < 0 || tk.pos >= int(c_->faces[tk.face].boundary.size())) throw InputError("boundary position out of range");
        tk.edge = c_->edge_index(j.at("edge").get<std::string>());
        tk.t = Quad::parse(j.at("t").get<std::string>());
        tk.alpha = Quad::parse(j.at("alpha").get<std::string>());
        tk.beta = Quad::parse(j.at("beta").get<std::string>());
        return tk;
    }

    // The model anchors of every face pushed through its side correspondence.
    std::vector<Token> instantiate() const {
        std::vector<Token> out;
        for (int fi = 0; fi < int(c_->faces.size()); ++fi) {
            const Face& f = c_->faces[fi];
            if (!f.shape) throw std::runtime_error("untagged face " + f.id);
            auto bad = check_face_shape(*c_, f);
            if (!bad.empty()) throw std::runtime_error(bad.front().str());
            const Shape& s = cached_shape(*f.shape);
            for (int k = 0; k < int(f.boundary.size()); ++k)
                for (const Anchor& a : s.anchors)
                    if (a.side == c_->side_of(f, k)) out.push_back(from_anchor(fi, k, a));
        }
        std::sort(out.begin(), out.end(), [&](const Token& x, const Token& y) { return less(x, y); });
        return out;
    }

    bool in_model(const Token& tk) const {
        if (!c_->faces[tk.face].shape) return false;
        return shape_of(tk).has_anchor(to_anchor(tk));
    }

    // Chord through the face; throws VertexHit.
    Chord chord_of(const Token& tk) const { return chord(shape_of(tk), to_anchor(tk)); }

    Token I(const Token& tk) const {
        Chord ch = chord_of(tk);
        const Face& f = c_->faces[tk.face];
        int k = position_of_side(f, ch.end.side);
        return from_anchor(tk.face, k, ch.end);
    }

    std::vector<Token> H(const Token& tk) const {
        std::vector<Token> out;
        for (int fi = 0; fi < int(c_->faces.size()); ++fi) {
            const Face& f = c_->faces[fi];
            for (int k = 0; k < int(f.boundary.size()); ++k) {
                if (f.boundary[k].edge != tk.edge || (fi == tk.face && k == tk.pos)) continue;
                out.push_back({fi, k, tk.edge, tk.t, -tk.alpha, tk.beta});
            }
        }
        std::sort(out.begin(), out.end(), [&](const Token& x, const Token& y) { return less(x, y); });
        return out;
    }

private:
    const Complex* c_;
    int position_of_side(const Face& f, int side) const {
        for (int k = 0; k < int(f.boundary.size()); ++k)
            if (c_->side_of(f, k) == side) return k;
        throw std::logic_error("side not on face " + f.id);
    }
};

// ---- transition digraph ----

struct Arc {
    int from = 0, to = 0;
    Rational p;
};

struct TransitionDigraph {
    std::vector<Token> nodes;
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;  // arc indices
    std::vector<int> inv;               // node -> node of I(a), -1 when undefined or outside A
    std::vector<std::string> problems;  // vertex hits and targets outside A
    std::vector<int> dead_ends;         // nodes whose chord ends on a free edge
    std::vector<char> on_free_edge;     // nodes sitting on an edge of degree 1

    int index_of(const Token& tk) const {
        for (int i = 0; i < int(nodes.size()); ++i)
            if (nodes[i] == tk) return i;
        return -1;
    }
    std::vector<std::vector<int>> successors() const {
        std::vector<std::vector<int>> s(nodes.size());
        for (const auto& a : arcs) s[a.from].push_back(a.to);
        return s;
    }
};

inline TransitionDigraph build_markov(const DirectionSet& ds) {
    TransitionDigraph d;
    d.nodes = ds.instantiate();
    auto deg = ds.complex().degrees();
    std::map<std::string, int> where;
    for (int i = 0; i < int(d.nodes.size()); ++i) where[ds.label(d.nodes[i])] = i;
    auto find = [&](const Token& tk) {
        auto it = where.find(ds.label(tk));
        return it == where.end() ? -1 : it->second;
    };
    d.out.resize(d.nodes.size());
    d.inv.assign(d.nodes.size(), -1);
    d.on_free_edge.assign(d.nodes.size(), 0);
    for (int i = 0; i < int(d.nodes.size()); ++i) d.on_free_edge[i] = deg[d.nodes[i].edge] < 2;
    for (int i = 0; i < int(d.nodes.size()); ++i) {
        Token end;
        try { end = ds.I(d.nodes[i]); } catch (const VertexHit&) {
            d.problems.push_back("chord meets a vertex from " + ds.label(d.nodes[i]));
            continue;
        }
        d.inv[i] = find(end);
        if (d.inv[i] < 0) { d.problems.push_back("I leaves A at " + ds.label(end)); continue; }
        int dg = deg[end.edge];
        if (dg < 2) { d.dead_ends.push_back(i); continue; }
        for (const Token& b : ds.H(end)) {
            int j = find(b);
            if (j < 0) { d.problems.push_back("H leaves A at " + ds.label(b)); continue; }
            d.out[i].push_back(int(d.arcs.size()));
            d.arcs.push_back({i, j, Rational(1, dg - 1)});
        }
    }
    return d;
}

struct StochasticCheck {
    bool ok = true;
    int witness = -1;
    Rational sum;
};

// Dead ends have no row and tokens on free edges no column; both are skipped.
inline StochasticCheck check_row_sums(const TransitionDigraph& d) {
    std::vector<Rational> rows(d.nodes.size());
    for (const auto& a : d.arcs) rows[a.from] += a.p;
    std::vector<char> dead(d.nodes.size(), 0);
    for (int i : d.dead_ends) dead[i] = 1;
    for (int i = 0; i < int(rows.size()); ++i)
        if (!dead[i] && rows[i] != Rational(1)) return {false, i, rows[i]};
    return {};
}

inline StochasticCheck check_stationary_uniform(const TransitionDigraph& d) {
    std::vector<Rational> cols(d.nodes.size());
    for (const auto& a : d.arcs) cols[a.to] += a.p;
    for (int i = 0; i < int(cols.size()); ++i) {
        bool skip = i < int(d.on_free_edge.size()) && d.on_free_edge[i];
        if (!skip && cols[i] != Rational(1)) return {false, i, cols[i]};
    }
    return {};
}

// Condition (v) on the digraph: no cycle, and no path a ~> c (at least one step) with I(c) = a.
struct ConditionV {
    bool acyclic = true;
    bool no_return = true;
    std::vector<int> witness;  // a violating token path
    bool holds() const { return acyclic && no_return; }
};

inline std::vector<int> bfs_path(const std::vector<std::vector<int>>& succ, int from, const std::function<bool(int)>& goal) {
    // paths of length >= 1
    std::vector<int> parent(succ.size(), -2);
    std::deque<int> q;
    for (int s : succ[from])
        if (parent[s] == -2) { parent[s] = from; q.push_back(s); }
    while (!q.empty()) {
        int u = q.front(); q.pop_front();
        if (goal(u)) {
            std::vector<int> path{u};
            int v = u;
            do { v = parent[v]; path.push_back(v); } while (v != from);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (int s : succ[u])
            if (parent[s] == -2) { parent[s] = u; q.push_back(s); }
    }
    return {};
}

inline ConditionV check_condition_v(const TransitionDigraph& d) {
    ConditionV r;
    auto succ = d.successors();
    for (int a = 0; a < int(d.nodes.size()); ++a) {
        auto cyc = bfs_path(succ, a, [&](int u) { return u == a; });
        if (!cyc.empty()) { r.acyclic = false; if (r.witness.empty()) r.witness = cyc; }
        auto ret = bfs_path(succ, a, [&](int u) { return d.inv[u] == a; });
        if (!ret.empty()) { r.no_return = false; if (r.witness.empty()) r.witness = ret; }
        if (!r.holds()) break;
    }
    return r;
}

// ---- full report on conditions (i)-(v) ----

struct RecurrenceReport {
    std::vector<std::pair<std::string, int>> tokens_per_face;
    std::vector<std::string> fail_ii, fail_iii, fail_iv;
    std::vector<std::string> problems;
    std::size_t dead_ends = 0;
    bool asserted_simply_connected = false;
    std::optional<ConditionV> v;
    bool digraph_has_cycle = false;
    int b1 = 0;
    std::size_t token_count = 0, arc_count = 0;

    bool pass_i_iv() const { return fail_ii.empty() && fail_iii.empty() && fail_iv.empty() && problems.empty(); }
    bool pass() const { return pass_i_iv() && (!v || v->holds()); }
};

inline RecurrenceReport check_recurrence(const Complex& c, bool assert_simply_connected) {
    RecurrenceReport r;
    DirectionSet ds(c);
    auto tokens = ds.instantiate();
    r.token_count = tokens.size();
    for (const auto& f : c.faces) {
        int n = 0;
        for (const auto& tk : tokens) if (c.faces[tk.face].id == f.id) ++n;
        r.tokens_per_face.push_back({f.id, n});
    }
    for (const auto& a : tokens) {
        for (const auto& b : ds.H(a))
            if (!ds.in_model(b)) r.fail_ii.push_back(ds.label(b));
        try {
            Token e = ds.I(a);
            if (!ds.in_model(e)) r.fail_iii.push_back(ds.label(a) + " -> " + ds.label(e));
        } catch (const VertexHit&) {
            r.fail_iii.push_back(ds.label(a) + " meets a vertex");
        }
    }
    auto deg = c.degrees();
    for (int e : c.edge_order()) {
        if (deg[e] < 3) continue;
        bool found = false;
        for (const auto& tk : tokens)
            if (tk.edge == e && tk.perpendicular()) { found = true; break; }
        if (!found) r.fail_iv.push_back(c.edges[e].id);
    }
    if (!r.fail_ii.empty() || !r.fail_iii.empty()) return r;
    auto d = build_markov(ds);
    r.problems = d.problems;
    r.dead_ends = d.dead_ends.size();
    r.arc_count = d.arcs.size();
    r.b1 = first_betti(c);
    auto succ = d.successors();
    for (int a = 0; a < int(d.nodes.size()) && !r.digraph_has_cycle; ++a)
        r.digraph_has_cycle = !bfs_path(succ, a, [&](int u) { return u == a; }).empty();
    r.asserted_simply_connected = assert_simply_connected;
    if (assert_simply_connected) r.v = check_condition_v(d);
    return r;
}

// ---- recurrence cycles ----

struct NotRecurrent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cycle I(a), b, ..., I(a): shortest, ties broken by least token at each step.
inline std::vector<int> find_recurrent_cycle(const DirectionSet& ds, const TransitionDigraph& d, int a, int b) {
    int start = d.inv[a];
    if (start < 0) throw NotRecurrent("I undefined at the start token");
    bool arc = false;
    for (int ai : d.out[start]) if (d.arcs[ai].to == b) arc = true;
    if (!arc) throw NotRecurrent("not recurrent: no arc from I(a) to b");
    int n = int(d.nodes.size());
    std::vector<std::vector<int>> pred(n);
    for (const auto& x : d.arcs) pred[x.to].push_back(x.from);
    std::vector<int> dist(n, -1);
    dist[start] = 0;
    std::deque<int> q{start};
    while (!q.empty()) {
        int u = q.front(); q.pop_front();
        for (int p : pred[u]) if (dist[p] < 0) { dist[p] = dist[u] + 1; q.push_back(p); }
    }
    if (dist[b] < 0) throw NotRecurrent("not recurrent");
    std::vector<int> path{start, b};
    int u = b;
    while (u != start) {
        int best = -1;
        for (int ai : d.out[u]) {
            int v = d.arcs[ai].to;
            if (dist[v] != dist[u] - 1) continue;
            if (best < 0 || ds.less(d.nodes[v], d.nodes[best])) best = v;
        }
        u = best;
        path.push_back(u);
    }
    return path;
}

// ---- brute-force oracle for condition (v), exponential ----

inline bool condition_v_brute_force(const TransitionDigraph& d, std::size_t max_steps) {
    auto succ = d.successors();
    int n = int(d.nodes.size());
    std::function<bool(int, int, std::size_t)> walk = [&](int a0, int u, std::size_t steps) {
        if (steps >= 1 && (u == a0 || d.inv[u] == a0)) return false;
        if (steps == max_steps) return true;
        for (int v : succ[u])
            if (!walk(a0, v, steps + 1)) return false;
        return true;
    };
    for (int a = 0; a < n; ++a)
        if (!walk(a, a, 0)) return false;
    return true;
}

// ---- exports ----

inline std::string digraph_dot(const DirectionSet& ds, const TransitionDigraph& d) {
    std::ostringstream os;
    os << "digraph transitions {\n";
    for (int i = 0; i < int(d.nodes.size()); ++i) os << "  n" << i << " [label=\"" << ds.label(d.nodes[i]) << "\"];\n";
    std::vector<Arc> arcs = d.arcs;
    std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) { return std::tie(x.from, x.to) < std::tie(y.from, y.to); });
    for (const auto& a : arcs) os << "  n" << a.from << " -> n" << a.to << " [label=\"" << a.p.str() << "\"];\n";
    os << "}\n";
    return os.str();
}

inline std::string digraph_text(const DirectionSet& ds, const TransitionDigraph& d) {
    std::ostringstream os;
    for (int i = 0; i < int(d.nodes.size()); ++i) {
        os << ds.label(d.nodes[i]) << "\n";
        std::vector<std::pair<std::string, std::string>> outs;
        for (int ai : d.out[i]) outs.push_back({ds.label(d.nodes[d.arcs[ai].to]), d.arcs[ai].p.str()});
        std::sort(outs.begin(), outs.end());
        for (auto& [to, p] : outs) os << "  -> " << to << " p=" << p << "\n";
    }
    return os.str();
}

}  // namespace tits
