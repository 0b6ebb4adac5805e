#include <catch_amalgamated.hpp>

#include "tits/certify.hpp"
#include "tits/fixtures.hpp"

using namespace tits;

TEST_CASE("thick base on the closed thick fixtures") {
    Complex t = fixtures::theta_circle();
    DirectionSet ds(t);
    auto base = find_thick_base(ds);
    REQUIRE(base);
    CHECK(t.degrees()[base->edge] == 3);
    for (const Token* v : {&base->v1, &base->v2, &base->v3}) {
        CHECK(v->edge == base->edge);
        CHECK(v->t == base->t);
        CHECK(v->perpendicular());
    }
    CHECK_FALSE(base->v1.face == base->v2.face);
    CHECK_FALSE(base->v2.face == base->v3.face);

    Complex p = fixtures::pillow();
    CHECK_FALSE(find_thick_base(DirectionSet(p)).has_value());

    // four pages: the first three perpendicular tokens in face order
    Complex four = fixtures::theta_circle(4);
    DirectionSet fs(four);
    auto b4 = find_thick_base(fs);
    REQUIRE(b4);
    CHECK(four.faces[b4->v1.face].id == "S0");
    CHECK(four.faces[b4->v2.face].id == "S1");
    CHECK(four.faces[b4->v3.face].id == "S2");
}

TEST_CASE("build then verify on every thick fixture") {
    for (Complex c : {fixtures::theta_circle(), fixtures::theta_circle(4), fixtures::thick_pillow(),
                      fixtures::theta_circle_two_components()}) {
        DirectionSet ds(c);
        auto cert = build_dumbbell(ds);
        REQUIRE(cert.paths.size() == 3);
        for (const auto& p : cert.paths) CHECK(p.tokens.size() >= 1);
        auto j = certificate_json(ds, cert);
        auto v = verify_certificate(ds, j);
        for (const auto& f : v.failures) UNSCOPED_INFO(f);
        CHECK(v.valid());
        // byte-identical on a rebuild
        CHECK(certificate_json(ds, build_dumbbell(ds)).dump() == j.dump());
    }
}

TEST_CASE("two components: the certificate lives in the least-id one") {
    Complex c = fixtures::theta_circle_two_components();
    DirectionSet ds(c);
    auto cert = build_dumbbell(ds);
    // c0_1 has degree 2 (one face, twice); the loop is the least thick edge
    CHECK(c.edges[cert.base.edge].id == "lp_1");
    for (const auto& p : cert.paths)
        for (const auto& tk : p.tokens) CHECK(c.faces[tk.face].id.substr(c.faces[tk.face].id.size() - 2) == "_1");
}

TEST_CASE("chords of a certificate never touch a vertex") {
    Complex c = fixtures::theta_circle();
    DirectionSet ds(c);
    auto cert = build_dumbbell(ds);
    for (const auto& p : cert.paths)
        for (const auto& tk : p.tokens) {
            Chord ch = ds.chord_of(tk);
            CHECK_FALSE(ch.end.t.is_zero());
            CHECK_FALSE(ch.end.t == Quad(1));
        }
}

TEST_CASE("perturbed certificates name the broken clause") {
    Complex c = fixtures::theta_circle();
    DirectionSet ds(c);
    auto j = certificate_json(ds, build_dumbbell(ds));

    auto bent = j;
    auto& steps = bent["paths"]["C"]["steps"];
    REQUIRE(steps.size() >= 2);
    // swap the second token for another direction at the same point
    steps[1]["token"]["alpha"] = "1/2";
    CHECK(verify_certificate(ds, bent).has("junction not geodesic"));

    auto off = j;
    off["directions"]["v1"]["t"] = "1/2";
    CHECK(verify_certificate(ds, off).has("terminal direction"));

    auto same = j;
    same["directions"]["v2"] = same["directions"]["v1"];
    CHECK(verify_certificate(ds, same).has("direction classes"));

    auto junk = j;
    junk.erase("paths");
    CHECK(verify_certificate(ds, junk).has("malformed certificate"));
}

TEST_CASE("non-thick input has no certificate") {
    Complex p = fixtures::pillow();
    DirectionSet ds(p);
    CHECK_THROWS_AS(build_dumbbell(ds), NoThickBase);
}
