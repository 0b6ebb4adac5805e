// Planar van Kampen diagrams: validation, reducedness, strips, separating vertices,
// minimal-area search and corner subwords.
#pragma once

#include "complex.hpp"
#include "words.hpp"

#include <json.hpp>

#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace tits {

struct DEdge {
    std::string id;
    std::string ends[2];
    char label = 'a';  // generator read along ends[0] -> ends[1]
};

struct Region {
    std::string id;
    std::vector<Step> boundary;  // counterclockwise, region on the left
};

class PlanarDiagram {
public:
    std::vector<std::string> vertices;
    std::vector<DEdge> edges;
    std::vector<Region> regions;
    std::vector<Step> outer;  // boundary path of M, counterclockwise (M on the left)

    int vertex_index(const std::string& v) const {
        for (int i = 0; i < int(vertices.size()); ++i)
            if (vertices[i] == v) return i;
        return -1;
    }
    int edge_index(const std::string& e) const {
        for (int i = 0; i < int(edges.size()); ++i)
            if (edges[i].id == e) return i;
        return -1;
    }
    int region_index(const std::string& r) const {
        for (int i = 0; i < int(regions.size()); ++i)
            if (regions[i].id == r) return i;
        return -1;
    }

    const std::string& tail(const Step& s) const { return edges[s.edge].ends[s.forward ? 0 : 1]; }
    const std::string& head(const Step& s) const { return edges[s.edge].ends[s.forward ? 1 : 0]; }
    char label(const Step& s) const { return s.forward ? edges[s.edge].label : inv(edges[s.edge].label); }
    Word word(const std::vector<Step>& path) const {
        Word w;
        for (const auto& s : path) w.push_back(label(s));
        return w;
    }
    Word region_word(int r) const { return word(regions[r].boundary); }
    Word boundary_word() const { return word(outer); }

    // faces 0..R-1 are regions, face R is the outer face (traversed with the outside on the left)
    int outer_face() const { return int(regions.size()); }
    std::vector<Step> face_cycle(int f) const {
        if (f < int(regions.size())) return regions[f].boundary;
        std::vector<Step> c;
        for (auto it = outer.rbegin(); it != outer.rend(); ++it) c.push_back({it->edge, !it->forward});
        return c;
    }
};

inline int dart_id(const Step& s) { return 2 * s.edge + (s.forward ? 0 : 1); }
inline Step reverse_step(const Step& s) { return {s.edge, !s.forward}; }

// ---- file format ----

inline PlanarDiagram diagram_from_json(const nlohmann::json& j) {
    PlanarDiagram d;
    auto steps = [&](const nlohmann::json& arr, const std::string& where) {
        std::vector<Step> out;
        for (const auto& st : arr) {
            if (!st.is_array() || st.size() != 2) throw InputError(where + ": steps are [edge, \"+\"|\"-\"]");
            int e = d.edge_index(st[0].get<std::string>());
            if (e < 0) throw InputError(where + ": unknown edge " + st[0].get<std::string>());
            std::string sign = st[1].get<std::string>();
            if (sign != "+" && sign != "-") throw InputError(where + ": orientation must be + or -");
            out.push_back({e, sign == "+"});
        }
        return out;
    };
    try {
        for (const auto& v : j.at("vertices")) d.vertices.push_back(v.get<std::string>());
        for (const auto& e : j.at("edges")) {
            std::string lab = e.at("label").get<std::string>();
            if (lab.size() != 1 || !std::islower((unsigned char)lab[0])) throw InputError("edge " + e.at("id").get<std::string>() + ": label must be a lowercase generator");
            d.edges.push_back({e.at("id").get<std::string>(), {e.at("ends")[0].get<std::string>(), e.at("ends")[1].get<std::string>()}, lab[0]});
        }
        for (const auto& r : j.at("regions")) {
            std::string id = r.at("id").get<std::string>();
            d.regions.push_back({id, steps(r.at("boundary"), "region " + id)});
        }
        d.outer = steps(j.at("outer"), "outer");
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("malformed diagram: ") + ex.what());
    }
    return d;
}

inline nlohmann::json diagram_to_json(const PlanarDiagram& d) {
    auto steps = [&](const std::vector<Step>& p) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& s : p) a.push_back({d.edges[s.edge].id, s.forward ? "+" : "-"});
        return a;
    };
    nlohmann::json j;
    j["vertices"] = d.vertices;
    j["edges"] = nlohmann::json::array();
    for (const auto& e : d.edges) j["edges"].push_back({{"id", e.id}, {"ends", {e.ends[0], e.ends[1]}}, {"label", std::string(1, e.label)}});
    j["regions"] = nlohmann::json::array();
    for (const auto& r : d.regions) j["regions"].push_back({{"id", r.id}, {"boundary", steps(r.boundary)}});
    j["outer"] = steps(d.outer);
    // shared-edge table (informational, ignored on input)
    std::vector<std::string> side(2 * d.edges.size(), "outer");
    for (const auto& r : d.regions)
        for (const auto& s : r.boundary) side[dart_id(s)] = r.id;
    j["shared"] = nlohmann::json::array();
    for (std::size_t e = 0; e < d.edges.size(); ++e) j["shared"].push_back({d.edges[e].id, side[2 * e], side[2 * e + 1]});
    return j;
}

// regions become untagged faces; used as a carrier for hypergraph tracing
inline Complex diagram_to_complex(const PlanarDiagram& d) {
    Complex c;
    for (const auto& v : d.vertices) c.add_vertex(v);
    for (const auto& e : d.edges) c.add_edge(e.id, e.ends[0], e.ends[1]);
    for (const auto& r : d.regions) {
        Face f;
        f.id = r.id;
        f.boundary = r.boundary;
        c.add_face(f);
    }
    return c;
}

// ---- combinatorial map ----

// A region given by its counterclockwise label word and the vertices it visits.
struct RegionWalk {
    std::string id;
    Word word;
    std::vector<std::string> vertices;  // vertices[k] is the tail of word[k]
};

// Glue regions along equal (tail, label, head) edges; the outer path is read off the
// darts used once. The boundary must be a single simple cycle.
inline PlanarDiagram diagram_from_walks(const std::vector<RegionWalk>& walks) {
    PlanarDiagram d;
    std::map<std::tuple<std::string, char, std::string>, int> edge_at;
    auto vertex = [&](const std::string& v) {
        if (d.vertex_index(v) < 0) d.vertices.push_back(v);
    };
    std::set<std::pair<int, bool>> used;
    for (const auto& w : walks) {
        if (w.word.size() != w.vertices.size()) throw InputError("region " + w.id + ": word and vertex list differ in length");
        Region r{w.id, {}};
        for (std::size_t k = 0; k < w.word.size(); ++k) {
            const std::string& from = w.vertices[k];
            const std::string& to = w.vertices[(k + 1) % w.vertices.size()];
            vertex(from);
            char x = w.word[k];
            std::string t = positive(x) ? from : to, h = positive(x) ? to : from;
            auto key = std::make_tuple(t, gen(x), h);
            auto it = edge_at.find(key);
            int e;
            if (it == edge_at.end()) {
                e = int(d.edges.size());
                d.edges.push_back({"e" + std::to_string(e), {t, h}, gen(x)});
                edge_at[key] = e;
            } else e = it->second;
            Step s{e, positive(x)};
            if (!used.insert({s.edge, s.forward}).second) throw InputError("region " + w.id + " reuses a dart of edge " + d.edges[e].id);
            r.boundary.push_back(s);
        }
        d.regions.push_back(r);
    }
    std::map<std::string, std::vector<Step>> out_of;
    for (const auto& [e, fwd] : used)
        if (!used.count({e, !fwd})) {
            Step s{e, fwd};
            out_of[d.tail(s)].push_back(s);
        }
    if (out_of.empty()) return d;
    for (const auto& [v, ss] : out_of)
        if (ss.size() != 1) throw InputError("boundary is not a simple cycle at " + v);
    std::string start = out_of.begin()->first;
    std::string cur = start;
    do {
        Step s = out_of.at(cur).front();
        d.outer.push_back(s);
        cur = d.head(s);
        if (d.outer.size() > used.size()) throw InputError("boundary does not close");
    } while (cur != start);
    std::size_t boundary_darts = 0;
    for (const auto& [v, ss] : out_of) boundary_darts += ss.size();
    if (d.outer.size() != boundary_darts) throw InputError("boundary is not a single cycle");
    return d;
}

struct DiagramMap {
    std::vector<int> face_of;          // dart -> face (outer = R), -1 if unused
    std::vector<int> pos_in_face;      // dart -> position in its face cycle
    std::vector<int> orbit_of;         // dart -> vertex orbit
    std::vector<std::vector<int>> orbits;
    std::map<std::string, int> valence;
    std::set<std::string> on_boundary;  // vertices of the outer path
    std::vector<std::string> problems;
};

inline DiagramMap diagram_map(const PlanarDiagram& d) {
    DiagramMap m;
    int D = 2 * int(d.edges.size());
    m.face_of.assign(D, -1);
    m.pos_in_face.assign(D, -1);
    std::vector<std::vector<Step>> cycles;
    for (int f = 0; f <= d.outer_face(); ++f) cycles.push_back(d.face_cycle(f));
    for (int f = 0; f < int(cycles.size()); ++f)
        for (int k = 0; k < int(cycles[f].size()); ++k) {
            int di = dart_id(cycles[f][k]);
            std::string fname = f < d.outer_face() ? d.regions[f].id : "outer";
            if (m.face_of[di] >= 0) m.problems.push_back("dart " + d.edges[cycles[f][k].edge].id + (cycles[f][k].forward ? "+" : "-") + " used twice (" + fname + ")");
            else { m.face_of[di] = f; m.pos_in_face[di] = k; }
        }
    for (int di = 0; di < D; ++di)
        if (m.face_of[di] < 0) m.problems.push_back("dart " + d.edges[di / 2].id + (di % 2 ? "-" : "+") + " lies on no face");
    if (!m.problems.empty()) return m;
    // vertex rotation: d -> next dart after reverse(d) in its face
    m.orbit_of.assign(D, -1);
    auto next_around = [&](int di) {
        int r = di ^ 1;
        int f = m.face_of[r];
        const auto& cyc = cycles[f];
        return dart_id(cyc[(m.pos_in_face[r] + 1) % cyc.size()]);
    };
    for (int di = 0; di < D; ++di) {
        if (m.orbit_of[di] >= 0) continue;
        int o = int(m.orbits.size());
        m.orbits.push_back({});
        int x = di;
        do {
            m.orbit_of[x] = o;
            m.orbits[o].push_back(x);
            x = next_around(x);
        } while (x != di);
    }
    auto tail_of = [&](int di) { return d.edges[di / 2].ends[di % 2 ? 1 : 0]; };
    std::map<std::string, int> orbit_count;
    for (const auto& orb : m.orbits) {
        std::string v = tail_of(orb[0]);
        for (int x : orb)
            if (tail_of(x) != v) m.problems.push_back("rotation at " + v + " mixes vertex " + tail_of(x));
        ++orbit_count[v];
        m.valence[v] += int(orb.size());
    }
    for (auto& [v, c] : orbit_count)
        if (c > 1) m.problems.push_back("vertex " + v + " has " + std::to_string(c) + " separate rotations");
    for (const auto& s : d.outer) m.on_boundary.insert(d.tail(s));
    return m;
}

// ---- validation ----

struct DiagramVerdict {
    std::vector<std::string> problems;
    std::vector<std::string> mirror_edges;  // edges shared by a cancelling pair
    long euler = 0;
    bool valid() const { return problems.empty(); }
    bool reduced() const { return mirror_edges.empty(); }
};

// R1 read from e equals R2 read backwards from e
inline bool mirror_pair_at(const PlanarDiagram& d, const DiagramMap& m, int e) {
    int f1 = m.face_of[2 * e], f2 = m.face_of[2 * e + 1];
    if (f1 == d.outer_face() || f2 == d.outer_face() || f1 < 0 || f2 < 0) return false;
    const auto& c1 = d.regions[f1].boundary;
    const auto& c2 = d.regions[f2].boundary;
    int n1 = int(c1.size()), n2 = int(c2.size());
    if (n1 != n2) return false;
    int p1 = m.pos_in_face[2 * e], p2 = m.pos_in_face[2 * e + 1];
    for (int k = 0; k < n1; ++k) {
        char x = d.label(c1[(p1 + k) % n1]);
        char y = k == 0 ? inv(d.label(c2[p2])) : inv(d.label(c2[((p2 - k) % n2 + n2) % n2]));
        if (x != y) return false;
    }
    return true;
}

inline DiagramVerdict validate_diagram(const PlanarDiagram& d, const Presentation* p = nullptr) {
    DiagramVerdict v;
    std::set<std::string> seen;
    for (const auto& x : d.vertices)
        if (!seen.insert("v:" + x).second) v.problems.push_back("duplicate vertex " + x);
    for (const auto& e : d.edges) {
        if (!seen.insert("e:" + e.id).second) v.problems.push_back("duplicate edge " + e.id);
        for (const auto& end : e.ends)
            if (d.vertex_index(end) < 0) v.problems.push_back("edge " + e.id + " references unknown vertex " + end);
    }
    for (const auto& r : d.regions)
        if (!seen.insert("r:" + r.id).second) v.problems.push_back("duplicate region " + r.id);
    if (!v.problems.empty()) return v;
    auto closed = [&](const std::vector<Step>& c, const std::string& name) {
        if (c.empty()) { v.problems.push_back(name + " has an empty boundary"); return; }
        for (std::size_t k = 0; k < c.size(); ++k)
            if (d.head(c[k]) != d.tail(c[(k + 1) % c.size()])) { v.problems.push_back(name + " boundary is not closed at step " + std::to_string(k)); return; }
    };
    for (const auto& r : d.regions) closed(r.boundary, "region " + r.id);
    if (!d.edges.empty()) closed(d.outer, "outer path");
    if (!v.problems.empty()) return v;
    DiagramMap m = diagram_map(d);
    v.problems.insert(v.problems.end(), m.problems.begin(), m.problems.end());
    if (!v.problems.empty()) return v;
    long V = 0;
    for (const auto& x : d.vertices)
        if (m.valence.count(x) || d.edges.empty()) ++V;
    if (V != long(d.vertices.size())) v.problems.push_back("isolated vertex");
    v.euler = long(d.vertices.size()) - long(d.edges.size()) + long(d.regions.size()) + 1;
    if (v.euler != 2) v.problems.push_back("Euler characteristic " + std::to_string(v.euler) + " (expected 2)");
    if (p) {
        auto sym = symmetrized_words(*p);
        for (int r = 0; r < int(d.regions.size()); ++r)
            if (!sym.count(d.region_word(r))) v.problems.push_back("region " + d.regions[r].id + " label " + d.region_word(r) + " is not a relator");
    }
    for (int e = 0; e < int(d.edges.size()); ++e)
        if (mirror_pair_at(d, m, e)) v.mirror_edges.push_back(d.edges[e].id);
    return v;
}

// ---- strips ----

struct StripArc {
    std::vector<int> steps;  // positions in the region boundary
    int other = -1;          // face on the far side (outer face = number of regions)
};

// drop valence-1 vertices and their edges until none are left
inline PlanarDiagram spike_free_core(const PlanarDiagram& d, std::vector<std::string>* spikes = nullptr) {
    PlanarDiagram c = d;
    while (true) {
        DiagramMap m = diagram_map(c);
        if (!m.problems.empty()) return c;
        std::string spike;
        for (const auto& x : c.vertices)
            if (m.valence.count(x) && m.valence[x] == 1) { spike = x; break; }
        if (spike.empty()) return c;
        if (spikes) spikes->push_back(spike);
        int e = -1;
        for (int i = 0; i < int(c.edges.size()); ++i)
            if (c.edges[i].ends[0] == spike || c.edges[i].ends[1] == spike) e = i;
        std::vector<Step> outer;
        for (const auto& s : c.outer)
            if (s.edge != e) outer.push_back({s.edge > e ? s.edge - 1 : s.edge, s.forward});
        for (auto& r : c.regions)
            for (auto& s : r.boundary)
                if (s.edge > e) --s.edge;
        c.outer = outer;
        c.edges.erase(c.edges.begin() + e);
        c.vertices.erase(std::find(c.vertices.begin(), c.vertices.end(), spike));
    }
}

inline std::vector<StripArc> region_arcs(const PlanarDiagram& d, const DiagramMap& m, int r) {
    const auto& b = d.regions[r].boundary;
    int n = int(b.size());
    auto other = [&](int k) { return m.face_of[dart_id(b[k]) ^ 1]; };
    auto split = [&](int k) { return m.valence.at(d.tail(b[k])) >= 3; };
    int start = -1;
    for (int k = 0; k < n; ++k)
        if (split(k)) { start = k; break; }
    std::vector<StripArc> arcs;
    if (start < 0) {
        // no branch vertex: the boundary is a single arc (it may still change sides only at spikes)
        StripArc a;
        for (int k = 0; k < n; ++k) a.steps.push_back(k);
        a.other = other(0);
        arcs.push_back(a);
        return arcs;
    }
    for (int i = 0; i < n; ++i) {
        int k = (start + i) % n;
        if (split(k) || arcs.empty()) arcs.push_back({{}, other(k)});
        arcs.back().steps.push_back(k);
    }
    return arcs;
}

inline int interior_degree(const PlanarDiagram& d, const DiagramMap& m, int r) {
    int i = 0;
    for (const auto& a : region_arcs(d, m, r))
        if (a.other != d.outer_face()) ++i;
    return i;
}

// number of interior edges once valence-2 vertices are forgotten
inline int suppressed_interior_edges(const PlanarDiagram& d, const DiagramMap& m) {
    int count = 0;
    std::vector<bool> seen(2 * d.edges.size(), false);
    for (int r = 0; r < int(d.regions.size()); ++r)
        for (const auto& a : region_arcs(d, m, r)) {
            if (a.other == d.outer_face()) continue;
            int first = dart_id(d.regions[r].boundary[a.steps[0]]);
            if (seen[first ^ 1]) continue;  // counted from the other side
            seen[first] = true;
            for (int k : a.steps) seen[dart_id(d.regions[r].boundary[k])] = true;
            ++count;
        }
    return count;
}

// is M minus the closure of the given regions connected
inline bool complement_connected(const PlanarDiagram& d, const std::vector<int>& removed) {
    std::set<int> rem(removed.begin(), removed.end());
    std::set<int> cl_edges;
    std::set<std::string> cl_verts;
    for (int r : removed)
        for (const auto& s : d.regions[r].boundary) {
            cl_edges.insert(s.edge);
            cl_verts.insert(d.tail(s));
            cl_verts.insert(d.head(s));
        }
    // nodes: regions, then edges, then vertices
    int R = int(d.regions.size()), E = int(d.edges.size()), V = int(d.vertices.size());
    std::vector<int> parent(R + E + V);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    std::vector<bool> alive(R + E + V, false);
    for (int r = 0; r < R; ++r) alive[r] = !rem.count(r);
    for (int e = 0; e < E; ++e) alive[R + e] = !cl_edges.count(e);
    for (int v = 0; v < V; ++v) alive[R + E + v] = !cl_verts.count(d.vertices[v]);
    for (int r = 0; r < R; ++r) {
        if (!alive[r]) continue;
        for (const auto& s : d.regions[r].boundary)
            if (alive[R + s.edge]) unite(r, R + s.edge);
    }
    for (int e = 0; e < E; ++e) {
        if (!alive[R + e]) continue;
        for (const auto& end : d.edges[e].ends) {
            int v = d.vertex_index(end);
            if (alive[R + E + v]) unite(R + e, R + E + v);
        }
    }
    std::set<int> roots;
    for (int x = 0; x < R + E + V; ++x)
        if (alive[x]) roots.insert(find(x));
    return roots.size() <= 1;
}

struct StripReport {
    std::vector<std::string> spikes;
    std::map<std::string, int> interior_degree;  // on the spike-free core
    int interior_edges = 0;                      // after valence-2 suppression
    std::vector<std::string> simple_boundary;
    std::vector<std::string> singleton;
    std::vector<std::vector<std::string>> compound;
    bool c4 = false, t4 = false;
    std::string trichotomy;  // "i", "ii", "iii", "none" or "n/a"
    std::string note;
};

inline StripReport find_strips(const PlanarDiagram& input) {
    StripReport rep;
    PlanarDiagram d = spike_free_core(input, &rep.spikes);
    DiagramMap m = diagram_map(d);
    if (!m.problems.empty()) { rep.trichotomy = "n/a"; rep.note = "invalid diagram: " + m.problems.front(); return rep; }
    int R = int(d.regions.size());
    std::vector<int> idx(R);
    std::vector<std::vector<StripArc>> arcs(R);
    for (int r = 0; r < R; ++r) {
        arcs[r] = region_arcs(d, m, r);
        idx[r] = 0;
        for (const auto& a : arcs[r])
            if (a.other != d.outer_face()) ++idx[r];
        rep.interior_degree[d.regions[r].id] = idx[r];
    }
    rep.interior_edges = suppressed_interior_edges(d, m);
    auto touches_outside = [&](int r) {
        for (const auto& s : d.regions[r].boundary)
            if (m.on_boundary.count(d.tail(s))) return true;
        return false;
    };
    std::vector<bool> simple(R, false);
    for (int r = 0; r < R; ++r) {
        simple[r] = touches_outside(r) && complement_connected(d, {r});
        if (simple[r]) rep.simple_boundary.push_back(d.regions[r].id);
        if (simple[r] && idx[r] <= 1) rep.singleton.push_back(d.regions[r].id);
    }
    // arcs shared between two regions
    auto shared_arcs = [&](int a, int b) {
        int n = 0;
        for (const auto& x : arcs[a])
            if (x.other == b) ++n;
        return n;
    };
    auto vertex_set = [&](int r) {
        std::set<std::string> s;
        for (const auto& st : d.regions[r].boundary) s.insert(d.tail(st));
        return s;
    };
    auto single_edge_contact = [&](int a, int b) {
        if (shared_arcs(a, b) != 1) return false;
        std::set<std::string> arc_verts;
        for (const auto& x : arcs[a])
            if (x.other == b) {
                for (int k : x.steps) {
                    arc_verts.insert(d.tail(d.regions[a].boundary[k]));
                    arc_verts.insert(d.head(d.regions[a].boundary[k]));
                }
            }
        auto va = vertex_set(a), vb = vertex_set(b);
        for (const auto& v : va)
            if (vb.count(v) && !arc_verts.count(v)) return false;
        return true;
    };
    std::set<std::vector<int>> chains;
    std::vector<int> chain;
    std::function<void(int)> extend = [&](int r) {
        chain.push_back(r);
        for (int nx = 0; nx < R; ++nx) {
            if (std::find(chain.begin(), chain.end(), nx) != chain.end()) continue;
            if (!single_edge_contact(r, nx)) continue;
            bool clean = true;  // no contact with earlier, non-adjacent members
            for (std::size_t k = 0; k + 1 < chain.size(); ++k)
                if (shared_arcs(chain[k], nx) > 0) clean = false;
            if (!clean) continue;
            if (idx[nx] == 2) {
                std::vector<int> c = chain;
                c.push_back(nx);
                if (complement_connected(d, c)) {
                    if (c.front() > c.back()) std::reverse(c.begin(), c.end());
                    chains.insert(c);
                }
            } else if (idx[nx] == 3) {
                extend(nx);
            }
        }
        chain.pop_back();
    };
    for (int r = 0; r < R; ++r)
        if (idx[r] == 2) extend(r);
    for (const auto& c : chains) {
        std::vector<std::string> ids;
        for (int r : c) ids.push_back(d.regions[r].id);
        rep.compound.push_back(ids);
    }
    // C(4)-T(4) read on the diagram
    rep.t4 = true;
    for (const auto& [v, val] : m.valence)
        if (!m.on_boundary.count(v) && val < 4) rep.t4 = false;
    rep.c4 = true;
    for (int r = 0; r < R; ++r)
        if (!touches_outside(r) && int(arcs[r].size()) < 4) rep.c4 = false;
    if (R <= 1) { rep.trichotomy = "n/a"; rep.note = "more than one region required"; return rep; }
    if (!rep.c4 || !rep.t4) { rep.trichotomy = "n/a"; rep.note = "diagram is not C(4)-T(4)"; return rep; }
    int s = int(rep.singleton.size()), c = int(rep.compound.size());
    if (s >= 2) rep.trichotomy = "i";
    else if (s == 1 && c >= 2) rep.trichotomy = "ii";
    else if (c >= 4) rep.trichotomy = "iii";
    else rep.trichotomy = "none";
    if (!rep.spikes.empty()) rep.note = "evaluated on the spike-free core";
    return rep;
}

inline nlohmann::json strip_report_json(const StripReport& r) {
    nlohmann::json j;
    j["spikes"] = r.spikes;
    j["interior_degree"] = r.interior_degree;
    j["interior_edges"] = r.interior_edges;
    j["simple_boundary_regions"] = r.simple_boundary;
    j["singleton_strips"] = r.singleton;
    j["compound_strips"] = r.compound;
    j["c4"] = r.c4;
    j["t4"] = r.t4;
    j["case"] = r.trichotomy;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline std::string dual_graph_dot(const PlanarDiagram& d, const StripReport& rep) {
    DiagramMap m = diagram_map(d);
    std::ostringstream o;
    o << "graph dual {\n  outer [shape=box];\n";
    std::set<std::string> single(rep.singleton.begin(), rep.singleton.end());
    std::map<std::string, int> compound_of;
    for (std::size_t k = 0; k < rep.compound.size(); ++k)
        for (const auto& id : rep.compound[k]) compound_of.emplace(id, int(k));
    for (const auto& r : d.regions) {
        o << "  \"" << r.id << "\" [label=\"" << r.id;
        auto it = rep.interior_degree.find(r.id);
        if (it != rep.interior_degree.end()) o << " i=" << it->second;
        if (single.count(r.id)) o << " singleton";
        if (compound_of.count(r.id)) o << " compound" << compound_of[r.id];
        o << "\"];\n";
    }
    if (m.problems.empty())
        for (int e = 0; e < int(d.edges.size()); ++e) {
            int a = m.face_of[2 * e], b = m.face_of[2 * e + 1];
            auto name = [&](int f) { return f == d.outer_face() ? std::string("outer") : d.regions[f].id; };
            o << "  \"" << name(a) << "\" -- \"" << name(b) << "\" [label=\"" << d.edges[e].id << "\"];\n";
        }
    o << "}\n";
    return o.str();
}

// ---- separating vertices ----

struct Separation {
    std::string first, second;  // tails of the positive and negative halves
    int shift = 0;              // boundary position where the positive half starts
    bool exposed = false;
};

inline Separation separating_vertices(const PlanarDiagram& d, int r, int m) {
    Word w = d.region_word(r);
    int n = int(w.size());
    if (n != 2 * m) throw std::invalid_argument("region " + d.regions[r].id + " label " + w + " is not a dihedral relator for m=" + std::to_string(m));
    for (int s = 0; s < n; ++s) {
        Word x = rotate(w, s);
        char a = x[0], b = x[1 % n];
        if (!positive(a) || !positive(b) || a == b) continue;
        if (x == dihedral_relator(a, b, m)) {
            DiagramMap mp = diagram_map(d);
            const auto& bd = d.regions[r].boundary;
            Separation sep{d.tail(bd[s]), d.tail(bd[(s + m) % n]), s, false};
            sep.exposed = mp.on_boundary.count(sep.first) && mp.on_boundary.count(sep.second);
            return sep;
        }
    }
    throw std::invalid_argument("region " + d.regions[r].id + " label " + w + " is not a dihedral relator for m=" + std::to_string(m));
}

// ---- minimal-area search ----

struct SearchOutcome {
    std::optional<PlanarDiagram> diagram;
    int area = -1;
    long states = 0;
};

namespace detail {

struct Move {
    int kind = 0;  // 0 fold, 1 glue
    int pos = 0;
    Word relator;
    int matched = 0;
};

struct Searcher {
    std::vector<Word> rels;  // distinct symmetrized words
    std::unordered_map<std::string, int> failed;  // canonical hole -> largest area known insufficient
    long states = 0;
    std::vector<Move> moves;

    bool solve(const Word& w, int k) {
        ++states;
        if (w.empty()) return true;
        // cancel an adjacent inverse pair first; folding never costs area
        int n = int(w.size());
        for (int i = 0; i < n; ++i)
            if (w[i] == inv(w[(i + 1) % n]) && n >= 2) {
                Word nw;
                if (i + 1 < n) nw = w.substr(0, i) + w.substr(i + 2);
                else nw = w.substr(1, n - 2);
                moves.push_back({0, i, "", 0});
                if (solve(nw, k)) return true;
                moves.pop_back();
                return false;
            }
        if (k == 0) return false;
        std::string key = least_rotation(w).first;
        auto it = failed.find(key);
        if (it != failed.end() && it->second >= k) return false;
        for (int i = 0; i < n; ++i)
            for (const Word& r : rels) {
                if (r[0] != w[i]) continue;
                int L = 0;
                while (L < int(r.size()) && L < n && r[L] == w[(i + L) % n]) ++L;
                for (int l = 1; l <= L; ++l) {
                    Word q = r.substr(l);
                    Word nw;
                    // hole minus w[i..i+l) plus the inverse of the new path
                    for (int t = 0; t < n - l; ++t) nw.push_back(w[(i + l + t) % n]);
                    nw += inverse(q);
                    moves.push_back({1, i, r, l});
                    if (solve(nw, k - 1)) return true;
                    moves.pop_back();
                }
            }
        failed[key] = std::max(failed[key], k);
        return false;
    }
};

}  // namespace detail

// Replays a move list into a concrete planar diagram.
inline PlanarDiagram build_from_moves(const Word& boundary, const std::vector<detail::Move>& moves) {
    struct E { char label; int alias = -1; bool flip = false; };
    std::vector<E> edges;
    std::vector<Step> hole, outer;
    std::vector<std::vector<Step>> regions;
    for (char x : boundary) {
        edges.push_back({gen(x)});
        Step s{int(edges.size()) - 1, positive(x)};
        outer.push_back(s);
        hole.push_back(s);
    }
    auto resolve = [&](Step s) {
        while (edges[s.edge].alias >= 0) {
            bool f = edges[s.edge].flip;
            s = {edges[s.edge].alias, f ? !s.forward : s.forward};
        }
        return s;
    };
    for (const auto& mv : moves) {
        int n = int(hole.size());
        if (mv.kind == 0) {
            int i = mv.pos, j = (mv.pos + 1) % n;
            Step a = resolve(hole[i]), b = resolve(hole[j]);
            if (a.edge != b.edge) {
                // b becomes the reverse of a
                edges[b.edge].alias = a.edge;
                edges[b.edge].flip = (b.forward == a.forward);
            }
            std::vector<Step> nh;
            for (int t = 0; t < n; ++t)
                if (t != i && t != j) nh.push_back(hole[t]);
            if (j == 0) {
                // pair wrapped around; keep cyclic order starting after j
                nh.clear();
                for (int t = 1; t < n - 1; ++t) nh.push_back(hole[t]);
            }
            hole = nh;
        } else {
            int i = mv.pos, l = mv.matched;
            std::vector<Step> region;
            for (int t = 0; t < l; ++t) region.push_back(hole[(i + t) % n]);
            std::vector<Step> q;
            for (std::size_t t = l; t < mv.relator.size(); ++t) {
                char x = mv.relator[t];
                edges.push_back({gen(x)});
                q.push_back({int(edges.size()) - 1, positive(x)});
            }
            region.insert(region.end(), q.begin(), q.end());
            regions.push_back(region);
            std::vector<Step> nh;
            for (int t = 0; t < n - l; ++t) nh.push_back(hole[(i + l + t) % n]);
            for (auto it = q.rbegin(); it != q.rend(); ++it) nh.push_back(reverse_step(*it));
            hole = nh;
        }
    }
    // renumber surviving edges and derive vertices from the face cycles
    std::vector<int> newid(edges.size(), -1);
    int E_ = 0;
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e].alias < 0) newid[e] = E_++;
    auto fix = [&](Step s) { s = resolve(s); return Step{newid[s.edge], s.forward}; };
    for (auto& s : outer) s = fix(s);
    for (auto& r : regions)
        for (auto& s : r) s = fix(s);
    std::vector<int> parent(2 * E_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto tail = [](const Step& s) { return 2 * s.edge + (s.forward ? 0 : 1); };
    auto head = [](const Step& s) { return 2 * s.edge + (s.forward ? 1 : 0); };
    auto glue_cycle = [&](const std::vector<Step>& c) {
        for (std::size_t k = 0; k < c.size(); ++k) parent[find(head(c[k]))] = find(tail(c[(k + 1) % c.size()]));
    };
    for (const auto& r : regions) glue_cycle(r);
    glue_cycle(outer);
    PlanarDiagram d;
    std::map<int, std::string> vname;
    auto vertex = [&](int node) {
        int root = find(node);
        auto it = vname.find(root);
        if (it != vname.end()) return it->second;
        std::string nm = "v" + std::to_string(vname.size());
        vname[root] = nm;
        d.vertices.push_back(nm);
        return nm;
    };
    // name vertices along the boundary first, then region by region
    for (const auto& s : outer) vertex(tail(s));
    for (const auto& r : regions)
        for (const auto& s : r) vertex(tail(s));
    std::vector<char> label(E_);
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (newid[e] >= 0) label[newid[e]] = edges[e].label;
    for (int e = 0; e < E_; ++e) d.edges.push_back({"e" + std::to_string(e), {vertex(2 * e), vertex(2 * e + 1)}, label[e]});
    for (std::size_t r = 0; r < regions.size(); ++r) d.regions.push_back({"R" + std::to_string(r), regions[r]});
    d.outer = outer;
    return d;
}

inline SearchOutcome search_disc_diagram(const Word& boundary, const Presentation& p, int max_area) {
    SearchOutcome out;
    detail::Searcher s;
    for (const auto& w : symmetrized_words(p)) s.rels.push_back(w);
    if (boundary.empty()) {
        PlanarDiagram d;
        d.vertices = {"v0"};
        out.diagram = d;
        out.area = 0;
        return out;
    }
    for (int k = 0; k <= max_area; ++k) {
        s.moves.clear();
        if (s.solve(boundary, k)) {
            out.diagram = build_from_moves(boundary, s.moves);
            out.area = int(out.diagram->regions.size());
            break;
        }
    }
    out.states = s.states;
    return out;
}

// ---- corner subwords ----

struct CornerInterval {
    int start = 0;   // position in the word
    int length = 0;
    Word subword;
    std::string region;
};

struct CornerResult {
    std::optional<std::pair<CornerInterval, CornerInterval>> words;
    bool overlap = false;
    int area = -1;
    std::string status;  // "found", "no pair in diagram", "bound exhausted"
};

// maximal syllables of a cyclic word, as a position -> syllable index map
inline std::vector<int> cyclic_syllables(const Word& u) {
    int n = int(u.size());
    std::vector<int> syl(n, 0);
    int start = -1;
    for (int k = 0; k < n && start < 0; ++k)
        if (gen(u[k]) != gen(u[(k + n - 1) % n])) start = k;
    if (start < 0) return syl;  // a single syllable
    int id = 0;
    for (int t = 0; t < n; ++t) {
        int k = (start + t) % n;
        if (t > 0 && gen(u[k]) != gen(u[(k + n - 1) % n])) ++id;
        syl[k] = id;
    }
    return syl;
}

inline std::vector<CornerInterval> corner_candidates(const PlanarDiagram& d, int m) {
    std::vector<CornerInterval> out;
    std::map<int, int> at;  // dart -> position in the boundary path
    for (int k = 0; k < int(d.outer.size()); ++k) at[dart_id(d.outer[k])] = k;
    int n = int(d.outer.size());
    for (int r = 0; r < int(d.regions.size()); ++r) {
        Separation sep;
        try { sep = separating_vertices(d, r, m); } catch (const std::invalid_argument&) { continue; }
        const auto& b = d.regions[r].boundary;
        for (int half = 0; half < 2; ++half) {
            int s0 = (sep.shift + half * m) % int(b.size());
            bool visible = true;
            for (int t = 0; t < m; ++t)
                if (!at.count(dart_id(b[(s0 + t) % b.size()]))) visible = false;
            if (!visible) continue;
            int p0 = at[dart_id(b[s0])];
            bool consecutive = true;
            for (int t = 0; t < m; ++t)
                if (at[dart_id(b[(s0 + t) % b.size()])] != (p0 + t) % n) consecutive = false;
            if (!consecutive) continue;
            Word sub;
            for (int t = 0; t < m; ++t) sub.push_back(d.label(b[(s0 + t) % b.size()]));
            out.push_back({p0, m, sub, d.regions[r].id});
        }
    }
    std::sort(out.begin(), out.end(), [](const CornerInterval& a, const CornerInterval& b) { return a.start != b.start ? a.start < b.start : a.region < b.region; });
    return out;
}

inline Presentation dihedral_artin_presentation(int m) { return {{'a', 'b'}, {dihedral_relator('a', 'b', m)}}; }

// Searched on the least rotation of u so the answer moves with cyclic shifts; positions refer to u.
inline CornerResult corner_subwords(const Word& u, int m, int max_area) {
    CornerResult res;
    auto [canon, shift] = least_rotation(u);
    auto found = search_disc_diagram(canon, dihedral_artin_presentation(m), max_area);
    if (!found.diagram) { res.status = "bound exhausted"; return res; }
    res.area = found.area;
    auto cands = corner_candidates(*found.diagram, m);
    int n = int(u.size());
    auto syl = cyclic_syllables(canon);
    auto syllables_of = [&](const CornerInterval& c) {
        std::set<int> s;
        for (int t = 0; t < c.length; ++t) s.insert(syl[(c.start + t) % n]);
        return s;
    };
    auto overlaps = [&](const CornerInterval& a, const CornerInterval& b) {
        for (int t = 0; t < a.length; ++t)
            for (int q = 0; q < b.length; ++q)
                if ((a.start + t) % n == (b.start + q) % n) return true;
        return false;
    };
    std::optional<std::pair<CornerInterval, CornerInterval>> best;
    bool best_overlap = true;
    for (std::size_t i = 0; i < cands.size(); ++i)
        for (std::size_t j = i + 1; j < cands.size(); ++j) {
            auto si = syllables_of(cands[i]), sj = syllables_of(cands[j]);
            bool disjoint = true;
            for (int x : si)
                if (sj.count(x)) disjoint = false;
            if (!disjoint) continue;
            bool ov = overlaps(cands[i], cands[j]);
            if (!best || (best_overlap && !ov)) { best = std::make_pair(cands[i], cands[j]); best_overlap = ov; }
        }
    if (!best) { res.status = "no pair in diagram"; return res; }
    // back to positions in u: canon[k] = u[(k + shift) % n]
    best->first.start = int((best->first.start + shift) % n);
    best->second.start = int((best->second.start + shift) % n);
    if (best->second.start < best->first.start) std::swap(best->first, best->second);
    res.words = best;
    res.overlap = best_overlap;
    res.status = "found";
    return res;
}

}  // namespace tits
