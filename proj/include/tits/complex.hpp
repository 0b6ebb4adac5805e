// Finite polygonal 2-complexes: parsing, validation, degrees, surgery and subdivision.
#pragma once

#include "exact.hpp"
#include "shapes.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tits {

// numeric-aware string order: "e2" < "e10"
inline bool natural_less(const std::string& x, const std::string& y) {
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (std::isdigit((unsigned char)x[i]) && std::isdigit((unsigned char)y[j])) {
            std::size_t i2 = i, j2 = j;
            while (i2 < x.size() && std::isdigit((unsigned char)x[i2])) ++i2;
            while (j2 < y.size() && std::isdigit((unsigned char)y[j2])) ++j2;
            std::string a = x.substr(i, i2 - i), b = y.substr(j, j2 - j);
            a.erase(0, std::min(a.find_first_not_of('0'), a.size()));
            b.erase(0, std::min(b.find_first_not_of('0'), b.size()));
            if (a.size() != b.size()) return a.size() < b.size();
            if (a != b) return a < b;
            i = i2; j = j2;
        } else {
            if (x[i] != y[j]) return x[i] < y[j];
            ++i; ++j;
        }
    }
    if ((x.size() - i) != (y.size() - j)) return (x.size() - i) < (y.size() - j);
    return x < y;
}

struct Edge {
    std::string id;
    std::string ends[2];
    Quad length{1};
};

struct Step {
    int edge = 0;
    bool forward = true;  // traverses ends[0] -> ends[1]
};

struct Face {
    std::string id;
    std::vector<Step> boundary;
    std::optional<std::string> shape;
    std::vector<int> sides;  // boundary position -> shape side; empty means identity
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Complex {
public:
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::vector<Face> faces;

    int vertex_index(const std::string& id) const { return find(vindex_, id); }
    int edge_index(const std::string& id) const { return find(eindex_, id); }
    int face_index(const std::string& id) const { return find(findex_, id); }

    void add_vertex(const std::string& v) { vindex_[v] = int(vertices.size()); vertices.push_back(v); }
    int add_edge(const std::string& id, const std::string& a, const std::string& b, Quad len = Quad(1)) {
        eindex_[id] = int(edges.size());
        edges.push_back({id, {a, b}, len});
        return int(edges.size()) - 1;
    }
    void add_face(Face f) { findex_[f.id] = int(faces.size()); faces.push_back(std::move(f)); }
    void reindex() {
        vindex_.clear(); eindex_.clear(); findex_.clear();
        for (int i = 0; i < int(vertices.size()); ++i) vindex_[vertices[i]] = i;
        for (int i = 0; i < int(edges.size()); ++i) eindex_[edges[i].id] = i;
        for (int i = 0; i < int(faces.size()); ++i) findex_[faces[i].id] = i;
    }

    const std::string& step_tail(const Step& s) const { return edges[s.edge].ends[s.forward ? 0 : 1]; }
    const std::string& step_head(const Step& s) const { return edges[s.edge].ends[s.forward ? 1 : 0]; }

    // identity when no explicit correspondence was given
    int side_of(const Face& f, int k) const { return f.sides.empty() ? k : f.sides[k]; }
    bool reflected(const Face& f) const {
        int n = int(f.boundary.size());
        if (f.sides.size() < 2) return false;
        return ((f.sides[1] - f.sides[0]) % n + n) % n == n - 1 && n > 2;
    }

    std::vector<int> degrees() const {
        std::vector<int> d(edges.size(), 0);
        for (const auto& f : faces)
            for (const auto& s : f.boundary) ++d[s.edge];
        return d;
    }
    int degree(const std::string& edge_id) const {
        int e = edge_index(edge_id);
        if (e < 0) throw std::invalid_argument("unknown edge '" + edge_id + "'");
        return degrees()[e];
    }
    long euler() const { return long(vertices.size()) - long(edges.size()) + long(faces.size()); }

    // edges sorted by natural id order
    std::vector<int> edge_order() const {
        std::vector<int> ord(edges.size());
        std::iota(ord.begin(), ord.end(), 0);
        std::sort(ord.begin(), ord.end(), [&](int a, int b) { return natural_less(edges[a].id, edges[b].id); });
        return ord;
    }
    std::vector<int> face_order() const {
        std::vector<int> ord(faces.size());
        std::iota(ord.begin(), ord.end(), 0);
        std::sort(ord.begin(), ord.end(), [&](int a, int b) { return natural_less(faces[a].id, faces[b].id); });
        return ord;
    }

private:
    std::map<std::string, int> vindex_, eindex_, findex_;
    static int find(const std::map<std::string, int>& m, const std::string& id) {
        auto it = m.find(id);
        return it == m.end() ? -1 : it->second;
    }
};

struct Violation {
    std::string kind;
    std::string where;
    std::string str() const { return kind + " at " + where; }
};

// Shape checks for one face: side count, a rotation or reflection side map, and
// edge lengths proportional to the shape's with one common factor.
inline std::vector<Violation> check_face_shape(const Complex& c, const Face& f) {
    std::vector<Violation> out;
    if (!f.shape) return out;
    const Shape* s = nullptr;
    try { s = &cached_shape(*f.shape); } catch (const std::invalid_argument&) {
        out.push_back({"unknown shape", "face " + f.id});
        return out;
    }
    int n = int(f.boundary.size());
    if (s->sides() != n) { out.push_back({"shape/side-count mismatch", "face " + f.id}); return out; }
    if (!f.sides.empty()) {
        bool ok = int(f.sides.size()) == n;
        if (ok) {
            std::set<int> seen(f.sides.begin(), f.sides.end());
            ok = int(seen.size()) == n && *seen.begin() == 0 && *seen.rbegin() == n - 1;
        }
        if (ok && n > 2) {
            int step = ((f.sides[1] - f.sides[0]) % n + n) % n;
            ok = step == 1 || step == n - 1;
            for (int k = 0; ok && k < n; ++k) ok = ((f.sides[(k + 1) % n] - f.sides[k]) % n + n) % n == step;
        }
        if (!ok) { out.push_back({"side map is not a symmetry", "face " + f.id}); return out; }
    }
    std::optional<Quad> scale;
    for (int k = 0; k < n; ++k) {
        Quad r = c.edges[f.boundary[k].edge].length / s->lengths[c.side_of(f, k)];
        if (!scale) scale = r;
        else if (*scale != r) { out.push_back({"side length mismatch", "face " + f.id + " position " + std::to_string(k)}); break; }
    }
    return out;
}

inline std::vector<Violation> validate(const Complex& c) {
    std::vector<Violation> out;
    std::set<std::string> seen;
    for (const auto& v : c.vertices)
        if (!seen.insert(v).second) out.push_back({"duplicate id", "vertex " + v});
    seen.clear();
    for (const auto& e : c.edges) {
        if (!seen.insert(e.id).second) out.push_back({"duplicate id", "edge " + e.id});
        for (const auto& v : e.ends)
            if (c.vertex_index(v) < 0) out.push_back({"dangling vertex reference", "edge " + e.id});
        if (e.length.sign() <= 0) out.push_back({"nonpositive length", "edge " + e.id});
    }
    seen.clear();
    for (const auto& f : c.faces) {
        if (!seen.insert(f.id).second) out.push_back({"duplicate id", "face " + f.id});
        if (f.boundary.empty()) { out.push_back({"open face boundary", "face " + f.id}); continue; }
        bool dangling = false;
        for (const auto& s : f.boundary)
            if (s.edge < 0 || s.edge >= int(c.edges.size())) dangling = true;
        if (dangling) { out.push_back({"dangling edge reference", "face " + f.id}); continue; }
        int n = int(f.boundary.size());
        for (int k = 0; k < n; ++k)
            if (c.step_head(f.boundary[k]) != c.step_tail(f.boundary[(k + 1) % n])) {
                out.push_back({"open face boundary", "face " + f.id + " position " + std::to_string(k)});
                break;
            }
        auto more = check_face_shape(c, f);
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

// ---- file format ----

inline Complex complex_from_json(const nlohmann::json& j) {
    Complex c;
    auto as_id = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    try {
        for (const auto& v : j.at("vertices")) c.add_vertex(as_id(v));
        int ei = 0;
        for (const auto& e : j.at("edges")) {
            const auto& ends = e.at("ends");
            if (!ends.is_array() || ends.size() != 2) throw InputError("edges[" + std::to_string(ei) + "]: ends must have two vertices");
            Quad len(1);
            if (e.contains("length")) {
                try { len = Quad::parse(e["length"].is_string() ? e["length"].get<std::string>() : e["length"].dump()); }
                catch (const std::exception& ex) { throw InputError("edges[" + std::to_string(ei) + "]: " + ex.what()); }
            }
            c.add_edge(as_id(e.at("id")), as_id(ends[0]), as_id(ends[1]), len);
            ++ei;
        }
        int fi = 0;
        for (const auto& f : j.at("faces")) {
            Face face;
            face.id = as_id(f.at("id"));
            for (const auto& st : f.at("boundary")) {
                if (!st.is_array() || st.size() != 2) throw InputError("faces[" + std::to_string(fi) + "]: boundary steps are [edge, \"+\"|\"-\"]");
                std::string sign = st[1].get<std::string>();
                if (sign != "+" && sign != "-") throw InputError("faces[" + std::to_string(fi) + "]: orientation must be + or -");
                face.boundary.push_back({c.edge_index(as_id(st[0])), sign == "+"});
            }
            if (f.contains("shape") && !f["shape"].is_null()) face.shape = f["shape"].get<std::string>();
            if (f.contains("sides")) face.sides = f["sides"].get<std::vector<int>>();
            c.add_face(std::move(face));
            ++fi;
        }
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("malformed complex: ") + ex.what());
    }
    return c;
}

inline nlohmann::json complex_to_json(const Complex& c) {
    nlohmann::json j;
    j["vertices"] = c.vertices;
    j["edges"] = nlohmann::json::array();
    for (const auto& e : c.edges)
        j["edges"].push_back({{"id", e.id}, {"ends", {e.ends[0], e.ends[1]}}, {"length", e.length.str()}});
    j["faces"] = nlohmann::json::array();
    for (const auto& f : c.faces) {
        nlohmann::json jf{{"id", f.id}};
        jf["boundary"] = nlohmann::json::array();
        for (const auto& s : f.boundary) jf["boundary"].push_back({c.edges[s.edge].id, s.forward ? "+" : "-"});
        if (f.shape) jf["shape"] = *f.shape;
        if (!f.sides.empty()) jf["sides"] = f.sides;
        j["faces"].push_back(jf);
    }
    return j;
}

// ---- classification ----

enum class Essential { not_essential, essential, thick };

inline std::string to_string(Essential e) {
    switch (e) {
        case Essential::not_essential: return "not-essential";
        case Essential::essential: return "essential";
        case Essential::thick: return "thick";
    }
    return "?";
}

inline Essential classify_complex(const Complex& c) {
    auto deg = c.degrees();
    std::set<std::string> touched;
    for (const auto& e : c.edges) { touched.insert(e.ends[0]); touched.insert(e.ends[1]); }
    for (const auto& v : c.vertices)
        if (!touched.count(v)) return Essential::not_essential;
    bool thick = false;
    for (int d : deg) {
        if (d < 2) return Essential::not_essential;
        if (d >= 3) thick = true;
    }
    return thick ? Essential::thick : Essential::essential;
}

// Drop faces and edges, keeping ids and vertex set.
inline Complex restrict_complex(const Complex& c, const std::vector<bool>& keep_face, const std::vector<bool>& keep_edge) {
    Complex out;
    for (const auto& v : c.vertices) out.add_vertex(v);
    std::vector<int> remap(c.edges.size(), -1);
    for (int e = 0; e < int(c.edges.size()); ++e)
        if (keep_edge[e]) remap[e] = out.add_edge(c.edges[e].id, c.edges[e].ends[0], c.edges[e].ends[1], c.edges[e].length);
    for (int f = 0; f < int(c.faces.size()); ++f) {
        if (!keep_face[f]) continue;
        Face nf = c.faces[f];
        for (auto& s : nf.boundary) s.edge = remap[s.edge];
        out.add_face(nf);
    }
    return out;
}

struct CollapseResult {
    Complex result;
    bool confluent = true;
    std::vector<std::string> removed_faces;  // in removal order
};

inline CollapseResult collapse_free_edges(const Complex& c) {
    auto run = [&](bool reverse, std::vector<std::string>* log) {
        std::vector<bool> face_alive(c.faces.size(), true), edge_alive(c.edges.size(), true);
        auto order = c.edge_order();
        if (reverse) std::reverse(order.begin(), order.end());
        for (;;) {
            std::vector<int> deg(c.edges.size(), 0);
            std::vector<int> owner(c.edges.size(), -1);
            for (int f = 0; f < int(c.faces.size()); ++f) {
                if (!face_alive[f]) continue;
                for (const auto& s : c.faces[f].boundary) { ++deg[s.edge]; owner[s.edge] = f; }
            }
            int hit = -1;
            for (int e : order)
                if (edge_alive[e] && deg[e] == 1) { hit = e; break; }
            if (hit < 0) break;
            face_alive[owner[hit]] = false;
            edge_alive[hit] = false;
            if (log) log->push_back(c.faces[owner[hit]].id);
        }
        return std::make_pair(face_alive, edge_alive);
    };
    CollapseResult out;
    auto [faces, edges] = run(false, &out.removed_faces);
    auto [faces_rev, edges_rev] = run(true, nullptr);
    out.confluent = faces == faces_rev;
    out.result = restrict_complex(c, faces, edges);
    return out;
}

// ---- gallery components ----

enum class GalleryKind { sphere, closed_surface, disk, surface_with_boundary, pseudomanifold_nonsurface, not_pseudomanifold };

inline std::string to_string(GalleryKind k) {
    switch (k) {
        case GalleryKind::sphere: return "sphere";
        case GalleryKind::closed_surface: return "closed-surface";
        case GalleryKind::disk: return "disk";
        case GalleryKind::surface_with_boundary: return "surface-with-boundary";
        case GalleryKind::pseudomanifold_nonsurface: return "pseudomanifold-nonsurface";
        case GalleryKind::not_pseudomanifold: return "not-pseudomanifold";
    }
    return "?";
}

struct GalleryComponent {
    std::vector<int> faces;           // indices, natural id order
    std::vector<int> boundary_edges;  // degree 1 within the component
    GalleryKind kind = GalleryKind::not_pseudomanifold;
    long euler = 0;
};

struct DisjointSets {
    std::vector<int> p;
    explicit DisjointSets(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { while (p[x] != x) x = p[x] = p[p[x]]; return x; }
    bool unite(int a, int b) { a = find(a); b = find(b); if (a == b) return false; if (a > b) std::swap(a, b); p[b] = a; return true; }
};

inline std::vector<GalleryComponent> gallery_components(const Complex& c) {
    int nf = int(c.faces.size());
    DisjointSets ds(nf);
    std::vector<int> first(c.edges.size(), -1);
    for (int f = 0; f < nf; ++f)
        for (const auto& s : c.faces[f].boundary) {
            if (first[s.edge] < 0) first[s.edge] = f;
            else ds.unite(first[s.edge], f);
        }
    std::map<int, std::vector<int>> groups;
    for (int f : c.face_order()) groups[ds.find(f)].push_back(f);
    std::vector<GalleryComponent> out;
    for (auto& [root, fs] : groups) {
        GalleryComponent g;
        g.faces = fs;
        std::map<int, int> deg;
        std::set<std::string> verts;
        for (int f : fs)
            for (const auto& s : c.faces[f].boundary) {
                ++deg[s.edge];
                verts.insert(c.edges[s.edge].ends[0]);
                verts.insert(c.edges[s.edge].ends[1]);
            }
        g.euler = long(verts.size()) - long(deg.size()) + long(fs.size());
        bool pseudo = true;
        for (auto [e, d] : deg) {
            if (d >= 3) pseudo = false;
            if (d == 1) g.boundary_edges.push_back(e);
        }
        std::sort(g.boundary_edges.begin(), g.boundary_edges.end(),
                  [&](int a, int b) { return natural_less(c.edges[a].id, c.edges[b].id); });
        if (!pseudo) { g.kind = GalleryKind::not_pseudomanifold; out.push_back(g); continue; }
        // vertex links: nodes are edge ends, arcs are face corners
        std::map<std::pair<int, int>, int> node;
        std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> corners;
        for (int f : fs) {
            const auto& b = c.faces[f].boundary;
            int n = int(b.size());
            for (int k = 0; k < n; ++k) {
                const Step &in = b[k], &out_s = b[(k + 1) % n];
                corners.push_back({{in.edge, in.forward ? 1 : 0}, {out_s.edge, out_s.forward ? 0 : 1}});
            }
        }
        for (auto& [p, q] : corners) { node.emplace(p, int(node.size())); node.emplace(q, int(node.size())); }
        DisjointSets link(int(node.size()));
        for (auto& [p, q] : corners) link.unite(node[p], node[q]);
        std::map<std::string, std::set<int>> comps;
        for (auto& [key, id] : node) {
            const Edge& e = c.edges[key.first];
            comps[e.ends[key.second]].insert(link.find(id));
        }
        bool surface = true;
        for (auto& [v, cs] : comps) if (cs.size() != 1) surface = false;
        if (!surface) g.kind = GalleryKind::pseudomanifold_nonsurface;
        else if (g.boundary_edges.empty()) g.kind = g.euler == 2 ? GalleryKind::sphere : GalleryKind::closed_surface;
        else g.kind = g.euler == 1 ? GalleryKind::disk : GalleryKind::surface_with_boundary;
        out.push_back(g);
    }
    return out;
}

// ---- coning off spheres ----

inline Complex cone_off_spheres(const Complex& c) {
    auto deg = c.degrees();
    auto comps = gallery_components(c);
    std::vector<bool> keep_face(c.faces.size(), true), keep_edge(c.edges.size(), true);
    std::vector<std::pair<std::string, std::vector<std::string>>> cones;
    for (const auto& g : comps) {
        if (g.kind != GalleryKind::sphere) continue;
        std::set<int> es;
        std::set<std::string> vs;
        for (int f : g.faces)
            for (const auto& s : c.faces[f].boundary) es.insert(s.edge);
        for (int e : es) {
            if (deg[e] != 2) throw std::runtime_error("sphere not coning-eligible: edge " + c.edges[e].id);
            keep_edge[e] = false;
            vs.insert(c.edges[e].ends[0]);
            vs.insert(c.edges[e].ends[1]);
        }
        for (int f : g.faces) keep_face[f] = false;
        std::vector<std::string> vlist(vs.begin(), vs.end());
        std::sort(vlist.begin(), vlist.end(), natural_less);
        cones.push_back({"apex:" + c.faces[g.faces.front()].id, vlist});
    }
    Complex out = restrict_complex(c, keep_face, keep_edge);
    for (auto& [apex, vs] : cones) {
        out.add_vertex(apex);
        for (const auto& v : vs) out.add_edge(apex + "-" + v, apex, v);
    }
    return out;
}

// ---- rank and first Betti number over the rationals ----

inline int rational_rank(std::vector<std::vector<Rational>> m) {
    int rank = 0;
    int rows = int(m.size());
    int cols = rows ? int(m[0].size()) : 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) if (!m[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            Rational f = m[r][col] / m[rank][col];
            for (int k = col; k < cols; ++k)
                if (!m[rank][k].is_zero()) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline int first_betti(const Complex& c) {
    int ne = int(c.edges.size());
    if (ne == 0) return 0;
    std::vector<std::vector<Rational>> d1(c.vertices.size(), std::vector<Rational>(ne));
    for (int e = 0; e < ne; ++e) {
        int a = c.vertex_index(c.edges[e].ends[0]), b = c.vertex_index(c.edges[e].ends[1]);
        if (a == b) continue;
        d1[a][e] -= Rational(1);
        d1[b][e] += Rational(1);
    }
    std::vector<std::vector<Rational>> d2(c.faces.size(), std::vector<Rational>(ne));
    for (int f = 0; f < int(c.faces.size()); ++f)
        for (const auto& s : c.faces[f].boundary) d2[f][s.edge] += Rational(s.forward ? 1 : -1);
    return ne - rational_rank(d1) - rational_rank(d2);
}

// ---- geometry of shaped faces ----

// Shape coordinates of each boundary corner: corner k is where step k starts.
inline std::vector<Vec2> face_coordinates(const Complex& c, const Face& f) {
    const Shape& s = cached_shape(*f.shape);
    int n = int(f.boundary.size());
    bool refl = c.reflected(f);
    std::vector<Vec2> out;
    for (int k = 0; k < n; ++k) {
        int j = c.side_of(f, k);
        out.push_back(refl ? s.head(j) : s.tail(j));
    }
    return out;
}

inline Quad face_scale(const Complex& c, const Face& f) {
    const Shape& s = cached_shape(*f.shape);
    return c.edges[f.boundary[0].edge].length / s.lengths[c.side_of(f, 0)];
}

struct ShapeMatch {
    std::string shape;
    std::vector<int> sides;
};

// Find a catalog triangle similar to the given corner list; rotations tried before reflections.
inline std::optional<ShapeMatch> match_triangle(const std::vector<Vec2>& p) {
    if (p.size() != 3) return std::nullopt;
    if (cross(p[1] - p[0], p[2] - p[0]).is_zero()) return std::nullopt;
    std::vector<Quad> sq(3);
    for (int i = 0; i < 3; ++i) { Vec2 e = p[(i + 1) % 3] - p[i]; sq[i] = dot(e, e); }
    for (const char* name : {"TriQ244", "TriH236", "Equilateral"}) {
        const Shape& s = cached_shape(name);
        for (bool refl : {false, true})
            for (int k = 0; k < 3; ++k) {
                std::vector<int> sides(3);
                for (int i = 0; i < 3; ++i) sides[i] = refl ? ((k - i) % 3 + 3) % 3 : (k + i) % 3;
                Quad ratio = sq[0] / (s.lengths[sides[0]] * s.lengths[sides[0]]);
                bool ok = true;
                for (int i = 1; i < 3 && ok; ++i) ok = sq[i] / (s.lengths[sides[i]] * s.lengths[sides[i]]) == ratio;
                if (ok) return ShapeMatch{name, sides};
            }
    }
    return std::nullopt;
}

inline Quad exact_length(const Vec2& v, const std::string& what) {
    auto r = sqrt_exact(dot(v, v));
    if (!r) throw std::runtime_error("length of " + what + " leaves Q(sqrt2,sqrt3)");
    return *r;
}

// ---- subdivision ----

enum class SubdivisionMode { barycentric, altitude };

inline Complex subdivide_barycentric(const Complex& c) {
    Complex out;
    for (const auto& v : c.vertices) out.add_vertex(v);
    std::vector<std::array<int, 2>> halves(c.edges.size());
    for (int e = 0; e < int(c.edges.size()); ++e) {
        const Edge& ed = c.edges[e];
        std::string mid = "m:" + ed.id;
        out.add_vertex(mid);
        Quad h = ed.length * Quad(Rational(1, 2));
        halves[e][0] = out.add_edge(ed.id + ".0", ed.ends[0], mid, h);
        halves[e][1] = out.add_edge(ed.id + ".1", mid, ed.ends[1], h);
    }
    for (const auto& f : c.faces) {
        int n = int(f.boundary.size());
        std::string center = "c:" + f.id;
        out.add_vertex(center);
        std::vector<Vec2> corners;
        Vec2 cen;
        Quad lam(1);
        if (f.shape) {
            corners = face_coordinates(c, f);
            lam = face_scale(c, f);
            const Shape& s = cached_shape(*f.shape);
            if (s.sides() == 3) {
                cen = Quad(Rational(1, 3)) * (corners[0] + corners[1] + corners[2]);
            } else {
                for (const auto& p : corners) cen = cen + p;
                cen = Quad(Rational(1, n)) * cen;
            }
        }
        // spoke lengths per boundary position; a face whose spokes leave the field is
        // treated like an untagged one (placeholder lengths, untagged pieces)
        std::vector<Quad> lc(n, Quad(1)), lm(n, Quad(1));
        bool exact = bool(f.shape);
        for (int k = 0; k < n && exact; ++k) {
            Vec2 mid = Quad(Rational(1, 2)) * (corners[k] + corners[(k + 1) % n]);
            auto rc = sqrt_exact(dot(corners[k] - cen, corners[k] - cen));
            auto rm = sqrt_exact(dot(mid - cen, mid - cen));
            if (!rc || !rm) { exact = false; break; }
            lc[k] = lam * *rc;
            lm[k] = lam * *rm;
        }
        if (!exact) {
            lc.assign(n, Quad(1));
            lm.assign(n, Quad(1));
        }
        std::vector<int> to_corner(n), to_mid(n);
        for (int k = 0; k < n; ++k) {
            const Step& st = f.boundary[k];
            to_corner[k] = out.add_edge(f.id + ".v" + std::to_string(k), center, c.step_tail(st), lc[k]);
            to_mid[k] = out.add_edge(f.id + ".m" + std::to_string(k), center, "m:" + c.edges[st.edge].id, lm[k]);
        }
        for (int k = 0; k < n; ++k) {
            const Step& st = f.boundary[k];
            int first_half = st.forward ? halves[st.edge][0] : halves[st.edge][1];
            int second_half = st.forward ? halves[st.edge][1] : halves[st.edge][0];
            // center -> corner k -> midpoint k -> center, then center -> midpoint k -> corner k+1 -> center
            Face a{f.id + "." + std::to_string(2 * k), {{to_corner[k], true}, {first_half, st.forward}, {to_mid[k], false}}, {}, {}};
            Face b{f.id + "." + std::to_string(2 * k + 1), {{to_mid[k], true}, {second_half, st.forward}, {to_corner[(k + 1) % n], false}}, {}, {}};
            if (exact) {
                Vec2 mid = Quad(Rational(1, 2)) * (corners[k] + corners[(k + 1) % n]);
                if (auto m = match_triangle({cen, corners[k], mid})) { a.shape = m->shape; a.sides = m->sides; }
                if (auto m = match_triangle({cen, mid, corners[(k + 1) % n]})) { b.shape = m->shape; b.sides = m->sides; }
            }
            out.add_face(a);
            out.add_face(b);
        }
    }
    return out;
}

inline Complex subdivide_altitude(const Complex& c) {
    // right angle opposite the hypotenuse side, foot position along the hypotenuse side
    struct Split { int k_hyp; Quad t_side; };
    std::vector<Split> splits(c.faces.size());
    std::map<int, Quad> foot;  // edge -> canonical foot position
    std::map<int, int> hyp_uses;
    auto deg = c.degrees();
    for (int fi = 0; fi < int(c.faces.size()); ++fi) {
        const Face& f = c.faces[fi];
        if (!f.shape || (*f.shape != "TriQ244" && *f.shape != "TriH236"))
            throw std::runtime_error("altitude subdivision needs right triangles; face " + f.id + " is not one");
        const Shape& s = cached_shape(*f.shape);
        int hyp = 1;  // both right triangles put the hypotenuse on side 1, right angle at vertex 0
        Vec2 q = s.tail(hyp), r = s.head(hyp), p = s.verts[0];
        Quad t = dot(p - q, r - q) / dot(r - q, r - q);
        int k = -1;
        for (int i = 0; i < 3; ++i) if (c.side_of(f, i) == hyp) k = i;
        const Step& st = f.boundary[k];
        bool agree = st.forward == !c.reflected(f);
        Quad tc = agree ? t : Quad(1) - t;
        splits[fi] = {k, t};
        auto it = foot.find(st.edge);
        if (it != foot.end() && it->second != tc)
            throw std::runtime_error("altitude feet disagree on edge " + c.edges[st.edge].id);
        foot[st.edge] = tc;
        ++hyp_uses[st.edge];
    }
    for (auto& [e, n] : hyp_uses)
        if (n != deg[e]) throw std::runtime_error("edge " + c.edges[e].id + " is a hypotenuse in some faces but not all");
    Complex out;
    for (const auto& v : c.vertices) out.add_vertex(v);
    std::map<int, std::array<int, 2>> halves;
    std::vector<int> same(c.edges.size(), -1);
    for (int e = 0; e < int(c.edges.size()); ++e) {
        const Edge& ed = c.edges[e];
        auto it = foot.find(e);
        if (it == foot.end()) { same[e] = out.add_edge(ed.id, ed.ends[0], ed.ends[1], ed.length); continue; }
        std::string ft = "f:" + ed.id;
        out.add_vertex(ft);
        halves[e][0] = out.add_edge(ed.id + ".0", ed.ends[0], ft, ed.length * it->second);
        halves[e][1] = out.add_edge(ed.id + ".1", ft, ed.ends[1], ed.length * (Quad(1) - it->second));
    }
    for (int fi = 0; fi < int(c.faces.size()); ++fi) {
        const Face& f = c.faces[fi];
        int k = splits[fi].k_hyp;
        const Step& hs = f.boundary[k];
        const Step& after = f.boundary[(k + 1) % 3];
        const Step& before = f.boundary[(k + 2) % 3];
        std::vector<Vec2> corners = face_coordinates(c, f);
        Quad lam = face_scale(c, f);
        Vec2 apex = corners[(k + 2) % 3];
        Vec2 ftp = corners[k] + splits[fi].t_side * (corners[(k + 1) % 3] - corners[k]);
        if (c.reflected(f)) ftp = corners[k] + (Quad(1) - splits[fi].t_side) * (corners[(k + 1) % 3] - corners[k]);
        int alt = out.add_edge(f.id + ".alt", c.step_tail(before), "f:" + c.edges[hs.edge].id,
                               lam * exact_length(ftp - apex, "the altitude of " + f.id));
        int h1 = hs.forward ? halves[hs.edge][0] : halves[hs.edge][1];
        int h2 = hs.forward ? halves[hs.edge][1] : halves[hs.edge][0];
        // piece 0: apex -> hyp start -> foot -> apex; piece 1: apex -> foot -> hyp end -> apex
        Face a{f.id + ".0", {{same[before.edge], before.forward}, {h1, hs.forward}, {alt, false}}, {}, {}};
        Face b{f.id + ".1", {{alt, true}, {h2, hs.forward}, {same[after.edge], after.forward}}, {}, {}};
        if (auto m = match_triangle({apex, corners[k], ftp})) { a.shape = m->shape; a.sides = m->sides; }
        if (auto m = match_triangle({apex, ftp, corners[(k + 1) % 3]})) { b.shape = m->shape; b.sides = m->sides; }
        out.add_face(a);
        out.add_face(b);
    }
    return out;
}

inline Complex subdivide(const Complex& c, SubdivisionMode mode) {
    return mode == SubdivisionMode::barycentric ? subdivide_barycentric(c) : subdivide_altitude(c);
}

// ---- Wise complex (nerve of the closed 2-cells) ----

struct Nerve {
    std::vector<std::string> cells;  // faces, then cells attached to bare edges
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 3>> triangles;
};

inline Nerve wise_complex(const Complex& c) {
    Nerve n;
    std::vector<std::set<std::string>> verts;
    for (int f : c.face_order()) {
        n.cells.push_back(c.faces[f].id);
        std::set<std::string> vs;
        for (const auto& s : c.faces[f].boundary) { vs.insert(c.edges[s.edge].ends[0]); vs.insert(c.edges[s.edge].ends[1]); }
        verts.push_back(vs);
    }
    auto deg = c.degrees();
    for (int e : c.edge_order()) {
        if (deg[e] != 0) continue;
        n.cells.push_back("cell:" + c.edges[e].id);
        verts.push_back({c.edges[e].ends[0], c.edges[e].ends[1]});
    }
    int m = int(n.cells.size());
    auto meet = [&](std::initializer_list<int> ids) {
        std::vector<int> v(ids);
        for (const auto& x : verts[v[0]]) {
            bool all = true;
            for (std::size_t i = 1; i < v.size() && all; ++i) all = verts[v[i]].count(x) > 0;
            if (all) return true;
        }
        return false;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (!meet({i, j})) continue;
            n.edges.push_back({i, j});
            for (int k = j + 1; k < m; ++k)
                if (meet({i, j, k})) n.triangles.push_back({i, j, k});
        }
    return n;
}

}  // namespace tits
