// Catalog of exact Euclidean cell shapes, their direction anchors, chords and billiards.
#pragma once

#include "exact.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tits {

// A direction at an interior point of a side. (alpha, beta) is the unit direction in the
// side frame: alpha along the side, beta along the inward normal (beta > 0).
struct Anchor {
    int side = 0;
    Quad t, alpha, beta;

    friend bool operator==(const Anchor& p, const Anchor& q) {
        return p.side == q.side && p.t == q.t && p.alpha == q.alpha && p.beta == q.beta;
    }
    friend bool operator!=(const Anchor& p, const Anchor& q) { return !(p == q); }
    friend bool operator<(const Anchor& p, const Anchor& q) {
        if (p.side != q.side) return p.side < q.side;
        if (p.t != q.t) return Quad::lex_less(p.t, q.t);
        if (p.alpha != q.alpha) return Quad::lex_less(p.alpha, q.alpha);
        return Quad::lex_less(p.beta, q.beta);
    }
    bool perpendicular() const { return alpha.is_zero(); }
    std::string str() const {
        return "side " + std::to_string(side) + " t=" + t.str() + " dir=(" + alpha.str() + ", " + beta.str() + ")";
    }
};

class VertexHit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Isometry of a polygon given on vertex indices: i -> shift + i, or i -> shift - i when reflecting.
struct ShapeSymmetry {
    int shift = 0;
    bool reflect = false;
};

struct Shape {
    std::string name;
    std::vector<Vec2> verts;    // counterclockwise
    std::vector<Quad> lengths;  // side j runs verts[j] -> verts[j+1]
    std::vector<Anchor> anchors;
    std::vector<ShapeSymmetry> symmetries;

    int sides() const { return int(verts.size()); }
    Vec2 tail(int j) const { return verts[j]; }
    Vec2 head(int j) const { return verts[(j + 1) % sides()]; }
    Vec2 unit(int j) const { return Quad(1) / lengths[j] * (head(j) - tail(j)); }
    Vec2 normal(int j) const { return unit(j).rot90(); }
    Vec2 point(const Anchor& a) const { return tail(a.side) + a.t * (head(a.side) - tail(a.side)); }
    Vec2 direction(const Anchor& a) const { return a.alpha * unit(a.side) + a.beta * normal(a.side); }
    bool has_anchor(const Anchor& a) const {
        for (const auto& b : anchors) if (a == b) return true;
        return false;
    }
    Anchor apply(const ShapeSymmetry& g, const Anchor& a) const {
        int n = sides();
        if (!g.reflect) return {((a.side + g.shift) % n + n) % n, a.t, a.alpha, a.beta};
        return {((g.shift - a.side - 1) % n + n) % n, Quad(1) - a.t, -a.alpha, a.beta};
    }
    // the vertex map of g preserves all pairwise squared distances
    bool is_isometry(const ShapeSymmetry& g) const {
        int n = sides();
        auto img = [&](int i) { return ((g.reflect ? g.shift - i : g.shift + i) % n + n) % n; };
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Vec2 p = verts[i] - verts[j], q = verts[img(i)] - verts[img(j)];
                if (dot(p, p) != dot(q, q)) return false;
            }
        return true;
    }
};

struct Chord {
    Anchor start, end;  // end carries the reversed travel direction at the exit point
    Vec2 from, to;
    Quad length;
};

inline Anchor reflect_in_side(const Anchor& end) { return {end.side, end.t, -end.alpha, end.beta}; }

inline Chord chord(const Shape& s, const Anchor& a) {
    Vec2 p = s.point(a), v = s.direction(a);
    std::optional<Quad> best_s;
    int best_side = -1;
    Quad best_t;
    bool tie = false;
    for (int j = 0; j < s.sides(); ++j) {
        if (j == a.side) continue;
        Vec2 e = s.head(j) - s.tail(j);
        Quad den = cross(v, e);
        if (den.is_zero()) continue;
        Vec2 w = s.tail(j) - p;
        Quad sp = cross(w, e) / den, tp = cross(w, v) / den;
        if (sp.sign() <= 0 || tp.sign() < 0 || tp > Quad(1)) continue;
        if (!best_s || sp < *best_s) { best_s = sp; best_side = j; best_t = tp; tie = false; }
        else if (sp == *best_s) tie = true;
    }
    if (!best_s) throw std::logic_error("chord does not leave " + s.name);
    if (tie || best_t.is_zero() || best_t == Quad(1))
        throw VertexHit("vertex hit from " + a.str() + " in " + s.name);
    Vec2 q = p + *best_s * v;
    Vec2 back = -v;
    Anchor end{best_side, best_t, dot(back, s.unit(best_side)), dot(back, s.normal(best_side))};
    return {a, end, p, q, *best_s};
}

struct BilliardTrace {
    bool closed = false;
    int period = 0;             // chords until the initial anchor recurs
    int distinct_segments = 0;  // geometric segments, a retraced segment counted once
    std::vector<Chord> chords;
};

inline BilliardTrace billiard_trace(const Shape& s, const Anchor& start, int max_bounces) {
    if (max_bounces < 1) throw std::invalid_argument("maxBounces must be at least 1");
    BilliardTrace out;
    Anchor cur = start;
    for (int i = 0; i < max_bounces; ++i) {
        Chord c = chord(s, cur);
        out.chords.push_back(c);
        cur = reflect_in_side(c.end);
        if (cur == start) { out.closed = true; break; }
    }
    std::set<std::pair<std::pair<int, std::string>, std::pair<int, std::string>>> segs;
    for (const auto& c : out.chords) {
        auto p = std::make_pair(c.start.side, c.start.t.str());
        auto q = std::make_pair(c.end.side, c.end.t.str());
        if (q < p) std::swap(p, q);
        segs.insert({p, q});
    }
    out.distinct_segments = int(segs.size());
    if (out.closed) out.period = int(out.chords.size());
    return out;
}

// directions in the side frame
namespace dir {
inline Anchor perp(int side, Quad t) { return {side, t, 0, 1}; }
inline Quad half() { return Quad(Rational(1, 2)); }
inline Quad r2h() { return Quad(0, Rational(1, 2), 0, 0); }  // sqrt2/2
inline Quad r3h() { return Quad(0, 0, Rational(1, 2), 0); }  // sqrt3/2
inline Anchor deg45(int side, Quad t, int sgn) { return {side, t, Quad(sgn) * r2h(), r2h()}; }
// directions at 30 and 60 degrees to the side
inline Anchor deg30(int side, Quad t, int sgn) { return {side, t, Quad(sgn) * r3h(), half()}; }
inline Anchor deg60(int side, Quad t, int sgn) { return {side, t, Quad(sgn) * half(), r3h()}; }
}  // namespace dir

inline Shape polygon_from(std::string name, std::vector<Vec2> verts, std::vector<Quad> lengths) {
    Shape s;
    s.name = std::move(name);
    s.verts = std::move(verts);
    s.lengths = std::move(lengths);
    for (int j = 0; j < s.sides(); ++j) {
        Vec2 e = s.head(j) - s.tail(j);
        if (dot(e, e) != s.lengths[j] * s.lengths[j]) throw std::logic_error("side length mismatch in " + s.name);
    }
    return s;
}

inline Shape tri_q244() {
    // right angle at the origin; side 1 is the hypotenuse
    Shape s = polygon_from("TriQ244", {{0, 0}, {1, 0}, {0, 1}}, {1, Quad::sqrt2(), 1});
    Quad q1(Rational(1, 4)), q2(Rational(1, 2)), q3(Rational(3, 4));
    s.anchors = {
        dir::perp(1, q1), dir::perp(1, q3),
        dir::deg45(1, q2, 1), dir::deg45(1, q2, -1),
        dir::deg45(0, q2, 1), dir::deg45(0, q2, -1), dir::perp(0, q2),
        dir::deg45(2, q2, 1), dir::deg45(2, q2, -1), dir::perp(2, q2),
    };
    s.symmetries = {{0, false}, {0, true}};
    return s;
}

// The 30-60-90 triangle: P=(0,0) right angle, Q=(sqrt3,0), R=(0,1).
// Side 0 is the long leg, side 1 the hypotenuse, side 2 the short leg.
inline Shape tri_h236_bare() {
    return polygon_from("TriH236", {{0, 0}, {Quad::sqrt3(), 0}, {0, 1}}, {Quad::sqrt3(), 2, 1});
}

// Frozen anchor set; tests re-derive it from the billiard search below.
inline Shape tri_h236() {
    Shape s = tri_h236_bare();
    Quad q1(Rational(1, 4)), q2(Rational(1, 2)), q3(Rational(3, 4)), t23(Rational(2, 3));
    s.anchors = {
        // first trajectory: perpendicular through the short leg midpoint
        dir::perp(2, q2), dir::deg30(1, q2, 1), dir::deg30(1, q2, -1),
        dir::deg60(0, t23, 1), dir::deg60(0, t23, -1), dir::perp(1, q1),
        // second trajectory
        dir::perp(0, q1), dir::deg60(1, q3, 1), dir::deg60(1, q3, -1),
        dir::deg60(2, q2, 1), dir::deg60(2, q2, -1), dir::deg30(0, q2, 1), dir::deg30(0, q2, -1),
        dir::deg60(1, q1, 1), dir::deg60(1, q1, -1), dir::perp(0, q3),
    };
    s.symmetries = {{0, false}};
    return s;
}

inline Shape equilateral() {
    Shape s = polygon_from("Equilateral", {{0, 0}, {1, 0}, {Quad(Rational(1, 2)), dir::r3h()}}, {1, 1, 1});
    Quad q1(Rational(1, 4)), q2(Rational(1, 2)), q3(Rational(3, 4));
    for (int j = 0; j < 3; ++j) {
        s.anchors.push_back(dir::perp(j, q1));
        s.anchors.push_back(dir::perp(j, q3));
        s.anchors.push_back(dir::deg30(j, q2, 1));
        s.anchors.push_back(dir::deg30(j, q2, -1));
    }
    for (int k = 0; k < 3; ++k) {
        s.symmetries.push_back({k, false});
        s.symmetries.push_back({k, true});
    }
    return s;
}

// regular 2n-gon of side 1, n in {2, 3, 6}
inline Shape gon(int two_n, std::string name = "") {
    if (two_n % 2 != 0 || two_n < 4) throw std::invalid_argument("Gon(2n) needs n >= 2");
    int n = two_n / 2;
    if (n != 2 && n != 3 && n != 6) throw std::invalid_argument("Gon(" + std::to_string(two_n) + ") has no exact model");
    std::vector<Vec2> verts;
    Vec2 p{0, 0};
    for (int j = 0; j < two_n; ++j) {
        verts.push_back(p);
        p = p + unit_at(j * 12 / n);
    }
    Shape s = polygon_from(name.empty() ? "Gon(" + std::to_string(two_n) + ")" : name, verts,
                           std::vector<Quad>(two_n, Quad(1)));
    for (int j = 0; j < two_n; ++j) {
        s.anchors.push_back(dir::perp(j, Quad(Rational(1, 4))));
        s.anchors.push_back(dir::perp(j, Quad(Rational(3, 4))));
    }
    for (int k = 0; k < two_n; ++k) {
        s.symmetries.push_back({k, false});
        s.symmetries.push_back({k, true});
    }
    return s;
}

inline Shape unit_square() { return gon(4, "UnitSquare"); }

inline bool is_catalog_name(const std::string& name) {
    if (name == "TriQ244" || name == "TriH236" || name == "Equilateral" || name == "UnitSquare") return true;
    return name.rfind("Gon(", 0) == 0 && name.back() == ')';
}

inline Shape shape_catalog(const std::string& name) {
    if (name == "TriQ244") return tri_q244();
    if (name == "TriH236") return tri_h236();
    if (name == "Equilateral") return equilateral();
    if (name == "UnitSquare") return unit_square();
    if (name.rfind("Gon(", 0) == 0 && name.back() == ')') {
        int k = 0;
        try { k = std::stoi(name.substr(4, name.size() - 5)); } catch (const std::logic_error&) {
            throw std::invalid_argument("unknown shape '" + name + "'");
        }
        return gon(k);
    }
    throw std::invalid_argument("unknown shape '" + name + "'");
}

inline std::map<std::string, Shape>& shape_cache() {
    static std::map<std::string, Shape> cache;
    return cache;
}

inline const Shape& cached_shape(const std::string& name) {
    auto& cache = shape_cache();
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, shape_catalog(name)).first;
    return it->second;
}

// Extra shapes (test templates); catalog names cannot be replaced.
inline void register_shape(const Shape& s) {
    if (is_catalog_name(s.name)) throw std::invalid_argument("shape name '" + s.name + "' is reserved");
    shape_cache()[s.name] = s;
}

// Every anchor point of a trace, as the outgoing direction and the incoming (reversed) one.
inline std::set<Anchor> trace_anchors(const BilliardTrace& tr) {
    std::set<Anchor> out;
    for (const auto& c : tr.chords) {
        out.insert(c.start);
        out.insert(c.end);
    }
    return out;
}

struct H236Derivation {
    Anchor first_seed, second_seed;
    BilliardTrace first, second;
    std::set<Anchor> anchors;
};

// Search perpendicular seeds at t in {1/4, 1/2, 3/4} of each side of the 30-60-90 triangle.
// First trajectory: the first closed one through a side midpoint. Second: the first closed one
// that adds a perpendicular direction on a side the first does not cover.
inline H236Derivation derive_tri_h236(int max_bounces = 24) {
    Shape s = tri_h236_bare();
    std::vector<Anchor> seeds;
    for (int side = 0; side < 3; ++side)
        for (Rational t : {Rational(1, 2), Rational(1, 4), Rational(3, 4)}) seeds.push_back(dir::perp(side, Quad(t)));
    auto try_trace = [&](const Anchor& a) -> std::optional<BilliardTrace> {
        try {
            auto tr = billiard_trace(s, a, max_bounces);
            if (tr.closed) return tr;
        } catch (const VertexHit&) {
        }
        return std::nullopt;
    };
    H236Derivation d;
    bool have_first = false;
    for (const auto& a : seeds) {
        if (a.t != Quad(Rational(1, 2))) continue;
        if (auto tr = try_trace(a)) { d.first_seed = a; d.first = *tr; have_first = true; break; }
    }
    if (!have_first) throw std::logic_error("no closed perpendicular billiard through a midpoint");
    auto covered = [](const std::set<Anchor>& as) {
        std::set<int> sides;
        for (const auto& a : as) if (a.perpendicular()) sides.insert(a.side);
        return sides;
    };
    auto first_set = trace_anchors(d.first);
    auto have = covered(first_set);
    for (const auto& a : seeds) {
        if (have.count(a.side)) continue;
        if (auto tr = try_trace(a)) {
            d.second_seed = a;
            d.second = *tr;
            d.anchors = first_set;
            auto more = trace_anchors(*tr);
            d.anchors.insert(more.begin(), more.end());
            return d;
        }
    }
    throw std::logic_error("no second closed billiard found");
}

}  // namespace tits
