// Dumbbell certificates: two recurrent loops at a thick edge joined through the base point.
#pragma once

#include "recurrence.hpp"

namespace tits {

struct ThickBase {
    int edge = -1;
    Quad t;
    Token v1, v2, v3;
};

struct NoThickBase : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Least thick edge (natural id order) with a point carrying perpendicular tokens in
// three face traversals; the least point and the first three tokens are taken.
inline std::optional<ThickBase> find_thick_base(const DirectionSet& ds) {
    const Complex& c = ds.complex();
    auto deg = c.degrees();
    auto tokens = ds.instantiate();
    bool thick = false;
    for (int e : c.edge_order()) {
        if (deg[e] < 3) continue;
        thick = true;
        std::vector<Token> perp;
        for (const auto& tk : tokens)
            if (tk.edge == e && tk.perpendicular()) perp.push_back(tk);
        std::vector<Quad> ts;
        for (const auto& tk : perp)
            if (std::find(ts.begin(), ts.end(), tk.t) == ts.end()) ts.push_back(tk.t);
        std::sort(ts.begin(), ts.end(), Quad::lex_less);
        for (const Quad& t : ts) {
            std::vector<Token> at;
            for (const auto& tk : perp)
                if (tk.t == t) at.push_back(tk);
            if (at.size() < 3) continue;
            return ThickBase{e, t, at[0], at[1], at[2]};
        }
        throw std::runtime_error("condition (iv) violated on edge " + c.edges[e].id);
    }
    (void)thick;
    return std::nullopt;
}

struct CertificatePath {
    std::string name;
    std::vector<Token> tokens;
};

struct DumbbellCertificate {
    ThickBase base;
    std::vector<CertificatePath> paths;  // C, C'', C'
};

inline DumbbellCertificate build_dumbbell(const DirectionSet& ds) {
    auto base = find_thick_base(ds);
    if (!base) throw NoThickBase("no thick base");
    auto d = build_markov(ds);
    if (!d.problems.empty()) throw NotRecurrent("digraph incomplete: " + d.problems.front());
    if (!check_stationary_uniform(d).ok) throw NotRecurrent("digraph is not doubly stochastic");
    int i1 = d.index_of(base->v1), i2 = d.index_of(base->v2), i3 = d.index_of(base->v3);
    auto run = [&](const std::string& name, int a, int b) {
        auto cyc = find_recurrent_cycle(ds, d, a, b);
        CertificatePath p{name, {}};
        for (std::size_t i = 1; i < cyc.size(); ++i) p.tokens.push_back(d.nodes[cyc[i]]);
        return p;
    };
    DumbbellCertificate cert{*base, {}};
    cert.paths.push_back(run("C", i1, i2));
    cert.paths.push_back(run("C''", i1, i3));
    cert.paths.push_back(run("C'", i2, i3));
    return cert;
}

inline nlohmann::json point_json(const Vec2& p) { return nlohmann::json::array({p.x.str(), p.y.str()}); }

inline nlohmann::json certificate_json(const DirectionSet& ds, const DumbbellCertificate& cert) {
    const Complex& c = ds.complex();
    nlohmann::json j;
    j["base"] = {{"edge", c.edges[cert.base.edge].id}, {"t", cert.base.t.str()}};
    j["directions"] = {{"v1", ds.to_json(cert.base.v1)}, {"v2", ds.to_json(cert.base.v2)}, {"v3", ds.to_json(cert.base.v3)}};
    j["paths"] = nlohmann::json::object();
    for (const auto& p : cert.paths) {
        nlohmann::json steps = nlohmann::json::array();
        Quad total;
        for (const auto& tk : p.tokens) {
            Chord ch = ds.chord_of(tk);
            Quad len = face_scale(c, c.faces[tk.face]) * ch.length;
            total += len;
            steps.push_back({{"token", ds.to_json(tk)}, {"from", point_json(ch.from)}, {"to", point_json(ch.to)}, {"length", len.str()}});
        }
        j["paths"][p.name] = {{"steps", steps}, {"length", total.str()}};
    }
    return j;
}

struct CertificateVerdict {
    std::vector<std::string> failures;  // "clause: detail"
    bool valid() const { return failures.empty(); }
    bool has(const std::string& clause) const {
        for (const auto& f : failures)
            if (f.rfind(clause, 0) == 0) return true;
        return false;
    }
};

// Re-check a stored certificate against the complex alone.
inline CertificateVerdict verify_certificate(const DirectionSet& ds, const nlohmann::json& j) {
    CertificateVerdict v;
    const Complex& c = ds.complex();
    auto fail = [&](const std::string& clause, const std::string& detail) { v.failures.push_back(clause + ": " + detail); };
    try {
        int e = c.edge_index(j.at("base").at("edge").get<std::string>());
        if (e < 0) { fail("malformed certificate", "unknown base edge"); return v; }
        Quad t = Quad::parse(j.at("base").at("t").get<std::string>());
        std::map<std::string, Token> dirs;
        for (const char* k : {"v1", "v2", "v3"}) dirs[k] = ds.from_json(j.at("directions").at(k));
        auto at_base = [&](const Token& tk) { return tk.edge == e && tk.t == t && tk.perpendicular() && ds.in_model(tk); };
        for (auto& [k, tk] : dirs)
            if (!at_base(tk)) fail("terminal direction", k + " is not a perpendicular direction at the base point");
        auto same_class = [](const Token& x, const Token& y) { return x.face == y.face && x.pos == y.pos; };
        if (same_class(dirs["v1"], dirs["v2"]) || same_class(dirs["v1"], dirs["v3"]) || same_class(dirs["v2"], dirs["v3"]))
            fail("direction classes", "v1, v2, v3 are not three distinct face traversals");
        struct Contract { const char* name; const char* from; const char* to; };
        for (const Contract& ct : {Contract{"C", "v2", "v1"}, Contract{"C''", "v3", "v1"}, Contract{"C'", "v3", "v2"}}) {
            const auto& jp = j.at("paths").at(ct.name);
            const auto& steps = jp.at("steps");
            if (steps.empty()) { fail("terminal direction", std::string(ct.name) + " is empty"); continue; }
            std::vector<Token> toks;
            for (const auto& s : steps) toks.push_back(ds.from_json(s.at("token")));
            Quad total;
            bool chords_ok = true;
            for (std::size_t i = 0; i < toks.size(); ++i) {
                const auto& s = steps[i];
                std::string where = std::string(ct.name) + " step " + std::to_string(i);
                if (!ds.in_model(toks[i])) { fail("junction not geodesic", where + " is not a direction of A"); chords_ok = false; continue; }
                Chord ch;
                try { ch = ds.chord_of(toks[i]); } catch (const VertexHit&) {
                    fail("vertex avoidance", where + " chord meets a vertex");
                    chords_ok = false;
                    continue;
                }
                Quad len = face_scale(c, c.faces[toks[i].face]) * ch.length;
                total += len;
                if (s.at("from") != point_json(ch.from) || s.at("to") != point_json(ch.to) || s.at("length").get<std::string>() != len.str())
                    fail("chord data", where + " stored chord differs from the recomputed one");
                if (i + 1 < toks.size()) {
                    Token end = ds.I(toks[i]);
                    auto hs = ds.H(end);
                    if (std::find(hs.begin(), hs.end(), toks[i + 1]) == hs.end())
                        fail("junction not geodesic", where + " to " + std::to_string(i + 1));
                }
            }
            if (!(toks.front() == dirs[ct.from])) fail("terminal direction", std::string(ct.name) + " does not start at " + ct.from);
            if (chords_ok) {
                Token last_end = ds.I(toks.back());
                if (!(last_end == dirs[ct.to])) fail("terminal direction", std::string(ct.name) + " does not return to " + ct.to);
                if (jp.at("length").get<std::string>() != total.str()) fail("chord data", std::string(ct.name) + " total length differs");
            }
        }
    } catch (const nlohmann::json::exception& ex) {
        fail("malformed certificate", ex.what());
    } catch (const std::exception& ex) {
        fail("malformed certificate", ex.what());
    }
    return v;
}

}  // namespace tits
