// tits: command-line front end for the recurrence, diagram and Artin-group tools.
//
// Every command prints a JSON run report on stdout (or a flat text rendering with
// --format text). Exit codes: 0 pass, 1 violation, 2 input error.

#include "tits/artin.hpp"
#include "tits/certify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace tits;

namespace {

struct Report {
    std::string command;
    std::string digest_input;  // bytes of every input, concatenated
    json verdicts = json::object();
    std::vector<std::string> artifacts;
    int exit_code = 0;

    void violation() { exit_code = std::max(exit_code, 1); }
};

std::string read_file(const std::string& path, Report& rep) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    rep.digest_input += ss.str();
    rep.digest_input.push_back('\0');
    return ss.str();
}

json read_json(const std::string& path, Report& rep) {
    std::string text = read_file(path, rep);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& text, Report& rep) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
    rep.artifacts.push_back(path);
}

std::string fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream o;
    o << std::hex << std::setw(16) << std::setfill('0') << h;
    return o.str();
}

// largest coefficient bit-size over every string in the report that parses as an exact scalar
int max_bits(const json& j) {
    int best = 0;
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (!s.empty() && s.find_first_not_of("0123456789/+-*sqrt ") == std::string::npos) {
            try {
                best = Quad::parse(s).bit_size();
            } catch (const std::exception&) {
            }
        }
    } else if (j.is_structured()) {
        for (const auto& x : j) best = std::max(best, max_bits(x));
    }
    return best;
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object() && !j.empty()) {
        for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

// ---- complex commands ----

Complex load_complex(const std::string& path, Report& rep) {
    try {
        return complex_from_json(read_json(path, rep));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

json violations_json(const std::vector<Violation>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back({{"kind", v.kind}, {"where", v.where}});
    return a;
}

json gallery_json(const Complex& c) {
    json a = json::array();
    for (const auto& g : gallery_components(c)) {
        json faces = json::array();
        for (int f : g.faces) faces.push_back(c.faces[f].id);
        a.push_back({{"faces", faces}, {"kind", to_string(g.kind)}, {"euler", g.euler}, {"boundary_edges", g.boundary_edges.size()}});
    }
    return a;
}

void cmd_validate(const std::string& file, Report& rep) {
    Complex c = load_complex(file, rep);
    auto vs = validate(c);
    rep.verdicts["violations"] = violations_json(vs);
    rep.verdicts["valid"] = vs.empty();
    if (!vs.empty()) { rep.violation(); return; }
    rep.verdicts["classification"] = to_string(classify_complex(c));
}

void cmd_analyze(const std::string& file, Report& rep) {
    Complex c = load_complex(file, rep);
    auto vs = validate(c);
    rep.verdicts["violations"] = violations_json(vs);
    if (!vs.empty()) { rep.violation(); return; }
    auto deg = c.degrees();
    json d = json::object();
    for (int e : c.edge_order()) d[c.edges[e].id] = deg[e];
    rep.verdicts["degrees"] = d;
    rep.verdicts["classification"] = to_string(classify_complex(c));
    rep.verdicts["euler"] = c.euler();
    rep.verdicts["galleries"] = gallery_json(c);
    int spheres = 0;
    for (const auto& g : gallery_components(c)) spheres += g.kind == GalleryKind::sphere;
    rep.verdicts["spheres"] = spheres;
}

void cmd_collapse(const std::string& file, const std::string& out, bool cone, Report& rep) {
    Complex c = load_complex(file, rep);
    auto res = collapse_free_edges(c);
    Complex r = res.result;
    rep.verdicts["removed_faces"] = res.removed_faces;
    rep.verdicts["confluent"] = res.confluent;
    rep.verdicts["euler_before"] = c.euler();
    rep.verdicts["euler_after"] = r.euler();
    if (cone) {
        r = cone_off_spheres(r);
        rep.verdicts["euler_after_coning"] = r.euler();
    }
    rep.verdicts["classification"] = to_string(classify_complex(r));
    if (!res.confluent) rep.violation();
    if (!out.empty()) write_file(out, complex_to_json(r).dump(2) + "\n", rep);
}

void cmd_subdivide(const std::string& file, const std::string& mode, const std::string& out, Report& rep) {
    Complex c = load_complex(file, rep);
    SubdivisionMode m;
    if (mode == "barycentric") m = SubdivisionMode::barycentric;
    else if (mode == "altitude") m = SubdivisionMode::altitude;
    else throw InputError("unknown subdivision mode " + mode);
    Complex s = subdivide(c, m);
    rep.verdicts["euler_before"] = c.euler();
    rep.verdicts["euler_after"] = s.euler();
    rep.verdicts["faces"] = s.faces.size();
    auto vs = validate(s);
    rep.verdicts["violations"] = violations_json(vs);
    if (!vs.empty()) rep.violation();
    if (!out.empty()) write_file(out, complex_to_json(s).dump(2) + "\n", rep);
}

void cmd_wise(const std::string& file, Report& rep) {
    Complex c = load_complex(file, rep);
    auto n = wise_complex(c);
    rep.verdicts["vertices"] = n.cells.size();
    rep.verdicts["edges"] = n.edges.size();
    rep.verdicts["triangles"] = n.triangles.size();
    rep.verdicts["cells"] = n.cells;
    rep.verdicts["euler"] = long(n.cells.size()) - long(n.edges.size()) + long(n.triangles.size());
}

void cmd_recurrence(const std::string& file, bool simply_connected, const std::string& dot, Report& rep) {
    Complex c = load_complex(file, rep);
    auto vs = validate(c);
    if (!vs.empty()) {
        rep.verdicts["violations"] = violations_json(vs);
        rep.violation();
        return;
    }
    auto r = check_recurrence(c, simply_connected);
    json faces = json::object();
    for (auto& [f, n] : r.tokens_per_face) faces[f] = n;
    rep.verdicts["tokens"] = r.token_count;
    rep.verdicts["tokens_per_face"] = faces;
    rep.verdicts["arcs"] = r.arc_count;
    rep.verdicts["dead_ends"] = r.dead_ends;
    rep.verdicts["condition_ii"] = {{"holds", r.fail_ii.empty()}, {"failures", r.fail_ii}};
    rep.verdicts["condition_iii"] = {{"holds", r.fail_iii.empty()}, {"failures", r.fail_iii}};
    rep.verdicts["condition_iv"] = {{"holds", r.fail_iv.empty()}, {"edges", r.fail_iv}};
    rep.verdicts["problems"] = r.problems;
    rep.verdicts["first_betti"] = r.b1;
    rep.verdicts["digraph_has_cycle"] = r.digraph_has_cycle;
    if (r.v) {
        rep.verdicts["condition_v"] = {{"holds", r.v->holds()}, {"acyclic", r.v->acyclic}, {"no_return", r.v->no_return}, {"witness_length", r.v->witness.size()}};
    } else {
        rep.verdicts["condition_v"] = {{"holds", nullptr}, {"note", "not checked: pass --assert-simply-connected to assert the complex is simply connected"}};
    }
    rep.verdicts["pass"] = r.pass();
    if (!r.pass()) rep.violation();
    if (!dot.empty() && r.fail_ii.empty() && r.fail_iii.empty()) {
        DirectionSet ds(c);
        write_file(dot, digraph_dot(ds, build_markov(ds)), rep);
    }
}

void cmd_markov(const std::string& file, const std::string& dot, const std::string& text, Report& rep) {
    Complex c = load_complex(file, rep);
    DirectionSet ds(c);
    auto d = build_markov(ds);
    rep.verdicts["nodes"] = d.nodes.size();
    rep.verdicts["arcs"] = d.arcs.size();
    rep.verdicts["dead_ends"] = d.dead_ends.size();
    rep.verdicts["problems"] = d.problems;
    auto rows = check_row_sums(d);
    auto cols = check_stationary_uniform(d);
    auto side = [&](const StochasticCheck& s) {
        json j = {{"ok", s.ok}};
        if (!s.ok) j["witness"] = {{"node", ds.label(d.nodes[s.witness])}, {"sum", s.sum.str()}};
        return j;
    };
    rep.verdicts["row_sums"] = side(rows);
    rep.verdicts["column_sums"] = side(cols);
    if (!rows.ok || !cols.ok || !d.problems.empty()) rep.violation();
    if (!dot.empty()) write_file(dot, digraph_dot(ds, d), rep);
    if (!text.empty()) write_file(text, digraph_text(ds, d), rep);
}

void cmd_certify(const std::string& file, const std::string& out, Report& rep) {
    Complex c = load_complex(file, rep);
    DirectionSet ds(c);
    try {
        auto cert = build_dumbbell(ds);
        json j = certificate_json(ds, cert);
        rep.verdicts["certificate"] = j;
        rep.verdicts["issued"] = true;
        if (!out.empty()) write_file(out, j.dump(2) + "\n", rep);
    } catch (const NoThickBase& e) {
        rep.verdicts["issued"] = false;
        rep.verdicts["reason"] = e.what();
        rep.violation();
    } catch (const NotRecurrent& e) {
        rep.verdicts["issued"] = false;
        rep.verdicts["reason"] = e.what();
        rep.violation();
    }
}

void cmd_verify(const std::string& file, const std::string& cert, Report& rep) {
    Complex c = load_complex(file, rep);
    DirectionSet ds(c);
    auto v = verify_certificate(ds, read_json(cert, rep));
    rep.verdicts["valid"] = v.valid();
    rep.verdicts["failures"] = v.failures;
    if (!v.valid()) rep.violation();
}

// ---- presentations and diagrams ----

Presentation load_presentation(const std::string& path, Report& rep) {
    try {
        return presentation_from_json(read_json(path, rep));
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(path + ": " + e.what());
    }
}

PlanarDiagram load_diagram(const std::string& path, Report& rep) {
    try {
        return diagram_from_json(read_json(path, rep));
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

void cmd_pieces(const std::string& file, Report& rep) {
    auto p = load_presentation(file, rep);
    rep.verdicts["presentation"] = presentation_str(p);
    rep.verdicts["pieces"] = piece_table_json(compute_pieces(p));
}

void cmd_sc_check(const std::string& file, std::vector<std::string> checks, Report& rep) {
    auto p = load_presentation(file, rep);
    auto t = compute_pieces(p);
    if (checks.empty()) checks = {"C(4)", "C(6)", "B(6)", "T(4)"};
    rep.verdicts["presentation"] = presentation_str(p);
    json res = json::object();
    for (const auto& ch : checks) {
        ScVerdict v;
        int n = 0;
        if (std::sscanf(ch.c_str(), "C(%d)", &n) == 1) v = check_C(t, n);
        else if (ch == "B(6)") v = check_B6(t);
        else if (std::sscanf(ch.c_str(), "T(%d)", &n) == 1) v = check_T(p, n);
        else throw InputError("unknown condition " + ch + " (use C(n), B(6), T(q))");
        res[ch] = verdict_json(v);
        if (!v.holds) rep.violation();
    }
    rep.verdicts["conditions"] = res;
}

void cmd_diagram_validate(const std::string& file, const std::string& pres, Report& rep) {
    auto d = load_diagram(file, rep);
    std::optional<Presentation> p;
    if (!pres.empty()) p = load_presentation(pres, rep);
    auto v = validate_diagram(d, p ? &*p : nullptr);
    rep.verdicts["valid"] = v.valid();
    rep.verdicts["reduced"] = v.reduced();
    rep.verdicts["problems"] = v.problems;
    json mirrors = json::array();
    for (const auto& e : v.mirror_edges) mirrors.push_back(e);
    rep.verdicts["mirror_edges"] = mirrors;
    rep.verdicts["euler"] = v.euler;
    rep.verdicts["boundary_word"] = d.boundary_word();
    if (!v.valid() || !v.reduced()) rep.violation();
}

void cmd_diagram_strips(const std::string& file, const std::string& dot, Report& rep) {
    auto d = load_diagram(file, rep);
    auto v = validate_diagram(d);
    if (!v.valid()) {
        rep.verdicts["problems"] = v.problems;
        rep.violation();
        return;
    }
    auto r = find_strips(d);
    rep.verdicts["strips"] = strip_report_json(r);
    if (!dot.empty()) write_file(dot, dual_graph_dot(d, r), rep);
}

void cmd_diagram_search(const std::string& pres, const std::string& word, int max_area, const std::string& out, Report& rep) {
    auto p = load_presentation(pres, rep);
    try { check_word(word); } catch (const std::invalid_argument& e) { throw InputError(e.what()); }
    auto r = search_disc_diagram(word, p, max_area);
    rep.verdicts["word"] = word;
    rep.verdicts["max_area"] = max_area;
    rep.verdicts["states"] = r.states;
    if (!r.diagram) {
        rep.verdicts["found"] = false;
        rep.verdicts["note"] = "no disc diagram of area <= " + std::to_string(max_area);
        rep.violation();
        return;
    }
    rep.verdicts["found"] = true;
    rep.verdicts["area"] = r.area;
    rep.verdicts["diagram"] = diagram_to_json(*r.diagram);
    if (!out.empty()) write_file(out, diagram_to_json(*r.diagram).dump(2) + "\n", rep);
}

void cmd_corner(const std::string& word, int m, int max_area, Report& rep) {
    try { check_word(word); } catch (const std::invalid_argument& e) { throw InputError(e.what()); }
    if (m < 2) throw InputError("m must be at least 2");
    auto r = corner_subwords(word, m, max_area);
    rep.verdicts["word"] = word;
    rep.verdicts["status"] = r.status;
    rep.verdicts["area"] = r.area;
    json ws = json::array();
    auto one = [](const CornerInterval& w) { return json{{"start", w.start}, {"length", w.length}, {"subword", w.subword}, {"region", w.region}}; };
    if (r.words) {
        ws.push_back(one(r.words->first));
        ws.push_back(one(r.words->second));
    }
    rep.verdicts["subwords"] = ws;
    rep.verdicts["overlap"] = r.overlap;
    if (!r.words) rep.violation();
}

// ---- Artin groups ----

LabeledGraph load_graph(const std::string& path, Report& rep) { return graph_from_json(read_json(path, rep)); }

Target parse_target(const std::string& t) {
    if (t == "artin") return Target::artin;
    if (t == "coxeter") return Target::coxeter;
    throw InputError("unknown target " + t);
}

void cmd_present(const std::string& file, const std::string& target, Report& rep) {
    auto g = load_graph(file, rep);
    auto p = standard_presentation(g, parse_target(target));
    rep.verdicts["presentation"] = presentation_to_json(p);
    rep.verdicts["text"] = presentation_str(p);
}

void cmd_classify(const std::string& file, Report& rep) {
    auto g = load_graph(file, rep);
    rep.verdicts["flags"] = flags_json(classify_graph(g));
}

CayleyBall make_ball(const LabeledGraph& g, const std::string& target, int radius, std::size_t cap) {
    if (radius < 0) throw InputError("radius must be non-negative");
    if (target == "coxeter") return coxeter_ball(g, radius, cap);
    if (target == "artin-dihedral") {
        if (g.vertices.size() != 2 || g.edges.size() != 1) throw InputError("artin-dihedral balls need a single edge");
        return artin_dihedral_ball(g, radius, cap);
    }
    throw InputError("unknown ball target " + target);
}

void cmd_ball(const std::string& file, const std::string& target, int radius, std::size_t cap, const std::string& out, Report& rep) {
    auto g = load_graph(file, rep);
    auto b = make_ball(g, target, radius, cap);
    rep.verdicts["vertices"] = b.complex.vertices.size();
    rep.verdicts["edges"] = b.complex.edges.size();
    rep.verdicts["faces"] = b.complex.faces.size();
    rep.verdicts["root"] = b.root;
    rep.verdicts["names"] = b.names;
    if (!out.empty()) write_file(out, complex_to_json(b.complex).dump(2) + "\n", rep);
}

void cmd_hypergraph(const std::string& file, const std::string& edge, const std::string& dot, Report& rep) {
    Complex c = load_complex(file, rep);
    std::vector<Hypergraph> hs;
    if (edge.empty()) hs = all_hypergraphs(c);
    else {
        int e = c.edge_index(edge);
        if (e < 0) throw InputError("unknown edge " + edge);
        hs.push_back(trace_hypergraph(c, e));
    }
    json a = json::array();
    bool forests = true;
    std::string dots;
    for (const auto& h : hs) {
        a.push_back(hypergraph_json(c, h));
        forests = forests && h.forest;
        dots += hypergraph_dot(c, h);
    }
    rep.verdicts["hypergraphs"] = a;
    rep.verdicts["all_forests"] = forests;
    rep.verdicts["note"] = "tree-ness is checked inside this finite complex only";
    if (!forests) rep.violation();
    if (!dot.empty()) write_file(dot, dots, rep);
}

void cmd_example_a2(bool trace, const std::string& out, Report& rep) {
    auto d = example_A2_diagram();
    auto g = example_A2_graph();
    auto p = standard_presentation(g, Target::artin);
    auto v = validate_diagram(d, &p);
    rep.verdicts["graph"] = graph_to_json(g);
    rep.verdicts["regions"] = d.regions.size();
    rep.verdicts["valid"] = v.valid();
    rep.verdicts["reduced"] = v.reduced();
    json labels = json::object();
    for (int r = 0; r < int(d.regions.size()); ++r) labels[d.regions[r].id] = d.region_word(r);
    rep.verdicts["labels"] = labels;
    if (!v.valid() || !v.reduced()) rep.violation();
    if (trace) {
        auto cr = hypergraph_cycle_report(diagram_to_complex(d));
        rep.verdicts["cycle"] = {{"found", cr.found}, {"faces", cr.faces}, {"edges", cr.edges}, {"length", cr.faces.size()}};
        rep.verdicts["tree"] = !cr.found;
        if (cr.found) rep.violation();
    }
    if (!out.empty()) write_file(out, diagram_to_json(d).dump(2) + "\n", rep);
}

void cmd_blocks(const std::string& file, const std::string& word, Report& rep) {
    auto g = load_graph(file, rep);
    try { check_word(word); } catch (const std::invalid_argument& e) { throw InputError(e.what()); }
    auto r = block_factorization(word, g);
    json bs = json::array();
    for (const auto& b : r.blocks) {
        json j = {{"start", b.start}, {"word", b.word}, {"alphabet", b.alphabet}, {"m", b.m}, {"coxeter", b.coxeter}};
        if (!b.form.empty()) j["form"] = {{"pattern", b.form}, {"k", b.k}, {"l", b.l}};
        bs.push_back(j);
    }
    rep.verdicts["blocks"] = bs;
    rep.verdicts["errors"] = r.errors;
    if (!r.errors.empty()) throw InputError(r.errors.front());
}

void cmd_wall_probe(const std::string& file, int radius, std::size_t cap, const std::string& sigma, const std::string& tau,
                    const std::string& wall_edge, Report& rep) {
    auto g = load_graph(file, rep);
    auto b = coxeter_ball(g, radius, cap);
    const Complex& c = b.complex;
    rep.verdicts["ball"] = {{"vertices", c.vertices.size()}, {"edges", c.edges.size()}, {"faces", c.faces.size()}};
    auto flags = classify_graph(g);
    rep.verdicts["hypothesis"] = !flags.triangle_with_2;
    if (sigma.empty()) {
        auto sw = probe_all(c);
        rep.verdicts["probes"] = sw.pairs;
        rep.verdicts["passed"] = sw.passed;
        rep.verdicts["by_selection_rule"] = sw.by_rule;
        rep.verdicts["failures"] = sw.failures;
        if (!sw.failures.empty()) {
            rep.verdicts["caveat"] = ProbeResult{}.caveat;
            rep.violation();
        }
        return;
    }
    int s = c.face_index(sigma), t = c.face_index(tau), e = c.edge_index(wall_edge);
    if (s < 0 || t < 0) throw InputError("unknown face");
    if (e < 0) throw InputError("unknown wall edge " + wall_edge);
    WallIndex wi = index_walls(c);
    ProbeResult r;
    try {
        r = coxeter_wall_probe(c, wi, s, t, wi.edge_wall[e]);
    } catch (const std::invalid_argument& ex) {
        throw InputError(ex.what());
    }
    rep.verdicts["found"] = r.found;
    json cands = json::array();
    for (const auto& pc : r.candidates)
        cands.push_back({{"wall_edge", c.edges[wi.walls[pc.wall].vertices.front()].id}, {"equal", pc.equal}, {"disjoint", pc.disjoint}, {"crossing_face", pc.witness}});
    rep.verdicts["candidates"] = cands;
    if (r.found) {
        rep.verdicts["rule"] = r.rule;
        rep.verdicts["wall"] = hypergraph_json(c, wi.walls[r.wall]);
    } else {
        rep.verdicts["caveat"] = r.caveat;
        rep.violation();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recurrence, free-subgroup certificates, diagrams and Artin-group walls"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    Report rep;
    std::function<void()> action;
    std::string file, file2, out, dot, text, mode = "barycentric", target, word, edge, sigma, tau, pres;
    bool flag = false;
    int max_area = 6, radius = 3, m = 4;
    std::size_t cap = 20000;
    std::vector<std::string> checks;

    auto cmd = [&](CLI::App* parent, const std::string& name, const std::string& help) { return parent->add_subcommand(name, help); };

    auto* v = cmd(&app, "validate", "check a complex file and classify it");
    v->add_option("file", file)->required();
    v->callback([&] { action = [&] { cmd_validate(file, rep); }; });

    auto* an = cmd(&app, "analyze", "degrees, essential/thick, gallery components, spheres");
    an->add_option("file", file)->required();
    an->callback([&] { action = [&] { cmd_analyze(file, rep); }; });

    auto* co = cmd(&app, "collapse", "remove faces with free edges");
    co->add_option("file", file)->required();
    co->add_option("--out", out);
    co->add_flag("--cone-spheres", flag, "also cone off sphere components");
    co->callback([&] { action = [&] { cmd_collapse(file, out, flag, rep); }; });

    auto* sd = cmd(&app, "subdivide", "barycentric or altitude subdivision");
    sd->add_option("file", file)->required();
    sd->add_option("--mode", mode)->check(CLI::IsMember({"barycentric", "altitude"}));
    sd->add_option("--out", out);
    sd->callback([&] { action = [&] { cmd_subdivide(file, mode, out, rep); }; });

    auto* wi = cmd(&app, "wise", "nerve of the covering by closed 2-cells");
    wi->add_option("file", file)->required();
    wi->callback([&] { action = [&] { cmd_wise(file, rep); }; });

    auto* re = cmd(&app, "recurrence", "check conditions (i)-(v)");
    re->add_option("file", file)->required();
    re->add_flag("--assert-simply-connected", flag, "assert the complex is simply connected, enabling condition (v)");
    re->add_option("--dot", dot);
    re->callback([&] { action = [&] { cmd_recurrence(file, flag, dot, rep); }; });

    auto* mk = cmd(&app, "markov", "transition digraph and its stochastic checks");
    mk->add_option("file", file)->required();
    mk->add_option("--dot", dot);
    mk->add_option("--text", text);
    mk->callback([&] { action = [&] { cmd_markov(file, dot, text, rep); }; });

    auto* cf = cmd(&app, "certify-free", "emit a dumbbell certificate");
    cf->add_option("file", file)->required();
    cf->add_option("--out", out);
    cf->callback([&] { action = [&] { cmd_certify(file, out, rep); }; });

    auto* vc = cmd(&app, "verify-cert", "re-check a stored certificate");
    vc->add_option("file", file)->required();
    vc->add_option("certificate", file2)->required();
    vc->callback([&] { action = [&] { cmd_verify(file, file2, rep); }; });

    auto* pc = cmd(&app, "pieces", "piece table of a presentation");
    pc->add_option("file", file)->required();
    pc->callback([&] { action = [&] { cmd_pieces(file, rep); }; });

    auto* sc = cmd(&app, "sc-check", "small-cancellation conditions");
    sc->add_option("file", file)->required();
    sc->add_option("--check", checks, "C(n), B(6) or T(q); repeatable");
    sc->callback([&] { action = [&] { cmd_sc_check(file, checks, rep); }; });

    auto* dg = cmd(&app, "diagram", "planar diagram tools");
    dg->require_subcommand(1);
    auto* dv = cmd(dg, "validate", "validate a diagram file");
    dv->add_option("file", file)->required();
    dv->add_option("--presentation", pres);
    dv->callback([&] { action = [&] { cmd_diagram_validate(file, pres, rep); }; });
    auto* ds = cmd(dg, "strips", "strip report and trichotomy");
    ds->add_option("file", file)->required();
    ds->add_option("--dot", dot);
    ds->callback([&] { action = [&] { cmd_diagram_strips(file, dot, rep); }; });
    auto* dsr = cmd(dg, "search", "minimal-area disc diagram for a word");
    dsr->add_option("presentation", pres)->required();
    dsr->add_option("word", word)->required();
    dsr->add_option("--max-area", max_area);
    dsr->add_option("--out", out);
    dsr->callback([&] { action = [&] { cmd_diagram_search(pres, word, max_area, out, rep); }; });

    auto* cs = cmd(&app, "corner-subwords", "two p_m subwords of a trivial word");
    cs->add_option("word", word)->required();
    cs->add_option("--m", m);
    cs->add_option("--max-area", max_area);
    cs->callback([&] { action = [&] { cmd_corner(word, m, max_area, rep); }; });

    auto* ar = cmd(&app, "artin", "Artin and Coxeter groups of labeled graphs");
    ar->require_subcommand(1);
    target = "artin";
    auto* ap = cmd(ar, "present", "standard presentation");
    ap->add_option("graph", file)->required();
    ap->add_option("--target", target);
    ap->callback([&] { action = [&] { cmd_present(file, target, rep); }; });
    auto* acl = cmd(ar, "classify", "graph flags");
    acl->add_option("graph", file)->required();
    acl->callback([&] { action = [&] { cmd_classify(file, rep); }; });
    auto* ab = cmd(ar, "ball", "Cayley ball as a complex");
    ab->add_option("graph", file)->required();
    ab->add_option("--target", target, "coxeter or artin-dihedral")->required();
    ab->add_option("--radius", radius);
    ab->add_option("--cap", cap);
    ab->add_option("--out", out);
    ab->callback([&] { action = [&] { cmd_ball(file, target, radius, cap, out, rep); }; });
    auto* ah = cmd(ar, "hypergraph", "trace hypergraphs of a complex");
    ah->add_option("file", file)->required();
    ah->add_option("--edge", edge);
    ah->add_option("--dot", dot);
    ah->callback([&] { action = [&] { cmd_hypergraph(file, edge, dot, rep); }; });
    auto* ae = cmd(ar, "example-a2", "the 12-region diagram over a triangle with a 2-label");
    ae->add_flag("--trace", flag, "trace its hypergraphs");
    ae->add_option("--out", out);
    ae->callback([&] { action = [&] { cmd_example_a2(flag, out, rep); }; });
    auto* abl = cmd(ar, "blocks", "block factorization of a word");
    abl->add_option("graph", file)->required();
    abl->add_option("word", word)->required();
    abl->callback([&] { action = [&] { cmd_blocks(file, word, rep); }; });
    auto* aw = cmd(ar, "wall-probe", "disjoint-or-equal walls across adjacent faces of a Coxeter ball");
    aw->add_option("graph", file)->required();
    aw->add_option("--radius", radius);
    aw->add_option("--cap", cap);
    aw->add_option("--sigma", sigma);
    aw->add_option("--tau", tau);
    aw->add_option("--wall-edge", edge);
    aw->callback([&] { action = [&] { cmd_wall_probe(file, radius, cap, sigma, tau, edge, rep); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : 2;
    }
    for (int i = 1; i < argc; ++i) {
        if (i > 1) rep.command += " ";
        rep.command += argv[i];
    }
    try {
        action();
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    json j;
    j["command"] = rep.command;
    j["input_digest"] = fnv1a(rep.digest_input);
    j["verdicts"] = rep.verdicts;
    j["artifacts"] = rep.artifacts;
    j["max_bit_size"] = max_bits(rep.verdicts);
    j["exit"] = rep.exit_code;
    if (format == "text") {
        flatten(j, "", std::cout);
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return rep.exit_code;
}
