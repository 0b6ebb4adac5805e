#include <catch_amalgamated.hpp>

#include <fstream>
#include <numeric>

#include "tits/fixtures.hpp"

using namespace tits;

namespace {

long chi(const Complex& c) { return long(c.vertices.size()) - long(c.edges.size()) + long(c.faces.size()); }

// Edge degrees counted by a direct scan of boundary steps, traversals with multiplicity.
std::vector<int> scan_degrees(const Complex& c) {
    std::vector<int> d(c.edges.size(), 0);
    for (const auto& f : c.faces)
        for (const auto& s : f.boundary) ++d[s.edge];
    return d;
}

bool has_free_face(const Complex& c) {
    auto d = scan_degrees(c);
    for (const auto& f : c.faces)
        for (const auto& s : f.boundary)
            if (d[s.edge] == 1) return true;
    return false;
}

Complex unit_square_face() {
    Complex c;
    for (auto v : {"p0", "p1", "p2", "p3"}) c.add_vertex(v);
    for (int i = 0; i < 4; ++i) c.add_edge("e" + std::to_string(i), "p" + std::to_string(i), "p" + std::to_string((i + 1) % 4));
    c.add_face(fixtures::face(c, "S", {{"e0", true}, {"e1", true}, {"e2", true}, {"e3", true}}, "UnitSquare"));
    return c;
}

}  // namespace

TEST_CASE("every shipped fixture validates") {
    for (auto& [name, c] : fixtures::all()) {
        CAPTURE(name);
        CHECK(validate(c).empty());
    }
}

TEST_CASE("validation names open boundaries and length mismatches") {
    Complex c = fixtures::lone_triangle();
    c.faces[0].boundary[1].forward = false;
    auto v = validate(c);
    REQUIRE_FALSE(v.empty());
    CHECK(v[0].kind == "open face boundary");

    Complex d = fixtures::lone_triangle();
    d.edges[0].length = Quad(2);
    auto w = validate(d);
    REQUIRE(w.size() == 1);
    CHECK(w[0].kind == "side length mismatch");
}

TEST_CASE("edge degree sum equals total boundary length") {
    for (auto& [name, c] : fixtures::all()) {
        auto d = c.degrees();
        long perim = 0;
        for (const auto& f : c.faces) perim += long(f.boundary.size());
        CHECK(std::accumulate(d.begin(), d.end(), 0L) == perim);
        CHECK(d == scan_degrees(c));
    }
}

TEST_CASE("essential and thick classification matches a degree scan") {
    for (auto& [name, c] : fixtures::all()) {
        CAPTURE(name);
        auto d = scan_degrees(c);
        std::set<std::string> used;
        for (const auto& e : c.edges) { used.insert(e.ends[0]); used.insert(e.ends[1]); }
        bool essential = used.size() == c.vertices.size() && std::all_of(d.begin(), d.end(), [](int x) { return x >= 2; });
        bool deg3 = std::any_of(d.begin(), d.end(), [](int x) { return x >= 3; });
        Essential want = !essential ? Essential::not_essential : deg3 ? Essential::thick : Essential::essential;
        CHECK(classify_complex(c) == want);
    }
    CHECK(classify_complex(fixtures::lone_triangle()) == Essential::not_essential);
    CHECK(classify_complex(fixtures::pillow()) == Essential::essential);
    CHECK(classify_complex(fixtures::theta_circle()) == Essential::thick);
}

TEST_CASE("collapse is confluent, idempotent and keeps the Euler characteristic") {
    for (auto& [name, c] : fixtures::all()) {
        CAPTURE(name);
        auto r = collapse_free_edges(c);
        CHECK(r.confluent);
        CHECK(chi(r.result) == chi(c));
        CHECK_FALSE(has_free_face(r.result));
        auto again = collapse_free_edges(r.result);
        CHECK(again.removed_faces.empty());
        CHECK(complex_to_json(again.result) == complex_to_json(r.result));
    }
    auto lone = collapse_free_edges(fixtures::lone_triangle()).result;
    CHECK(lone.vertices.size() == 3);
    CHECK(lone.edges.size() <= 3);
    CHECK(lone.faces.empty());
    CHECK(collapse_free_edges(fixtures::hexagon_disk()).result.faces.empty());
    auto p = collapse_free_edges(fixtures::pillow());
    CHECK(p.removed_faces.empty());
    CHECK(p.result.faces.size() == 2);
}

TEST_CASE("gallery components partition the faces") {
    for (auto& [name, c] : fixtures::all()) {
        CAPTURE(name);
        std::vector<int> seen;
        for (const auto& g : gallery_components(c)) {
            seen.insert(seen.end(), g.faces.begin(), g.faces.end());
            if (g.kind == GalleryKind::sphere) CHECK(g.euler == 2);
        }
        std::sort(seen.begin(), seen.end());
        std::vector<int> all(c.faces.size());
        std::iota(all.begin(), all.end(), 0);
        CHECK(seen == all);
    }
    auto two = gallery_components(fixtures::two_pillows());
    REQUIRE(two.size() == 2);
    CHECK(two[0].kind == GalleryKind::sphere);
    CHECK(two[1].kind == GalleryKind::sphere);
    auto book = gallery_components(fixtures::book(3));
    REQUIRE(book.size() == 1);
    CHECK(book[0].kind == GalleryKind::not_pseudomanifold);
    auto torus = gallery_components(fixtures::flat_torus());
    REQUIRE(torus.size() == 1);
    CHECK(torus[0].kind == GalleryKind::closed_surface);
    CHECK(torus[0].euler == 0);
    CHECK(fixtures::flat_torus().faces.size() == 8);
}

TEST_CASE("coning off spheres") {
    Complex p = cone_off_spheres(fixtures::pillow());
    CHECK(p.vertices.size() == 4);
    CHECK(p.edges.size() == 3);
    CHECK(p.faces.empty());
    // a sphere (chi 2) becomes a cone (chi 1)
    CHECK(chi(p) == 1);

    Complex t = fixtures::flat_torus();
    CHECK(complex_to_json(cone_off_spheres(t)) == complex_to_json(t));

    Complex pb = fixtures::pillow_on_book();
    Complex out = cone_off_spheres(pb);
    long spheres = 0;
    for (const auto& g : gallery_components(pb)) spheres += g.kind == GalleryKind::sphere;
    CHECK(spheres == 1);
    CHECK(chi(out) == chi(pb) - spheres);
    CHECK(out.faces.size() == pb.faces.size() - 2);
}

TEST_CASE("barycentric subdivision multiplies faces by 2n and keeps chi") {
    for (auto& [name, c] : fixtures::all()) {
        CAPTURE(name);
        long want = 0;
        for (const auto& f : c.faces) want += 2 * long(f.boundary.size());
        Complex s = subdivide(c, SubdivisionMode::barycentric);
        CHECK(long(s.faces.size()) == want);
        CHECK(chi(s) == chi(c));
        CHECK(validate(s).empty());
    }
    Complex one = subdivide_barycentric(fixtures::lone_triangle());
    REQUIRE(one.faces.size() == 6);
    for (const auto& f : one.faces) CHECK(f.shape == std::optional<std::string>("TriH236"));
    CHECK(subdivide_barycentric(unit_square_face()).faces.size() == 8);
}

TEST_CASE("altitude subdivision halves right triangles") {
    Complex p = fixtures::pillow();
    Complex s = subdivide(p, SubdivisionMode::altitude);
    CHECK(s.faces.size() == 4);
    CHECK(chi(s) == chi(p));
    CHECK(validate(s).empty());
    Quad half_root2(0, Rational(1, 2), 0, 0);
    for (const auto& f : s.faces) {
        CHECK(f.shape == std::optional<std::string>("TriQ244"));
        // similar with ratio sqrt2/2, so area halves: legs sqrt2/2, hypotenuse 1
        std::vector<Quad> lens;
        for (const auto& st : f.boundary) lens.push_back(s.edges[st.edge].length);
        std::sort(lens.begin(), lens.end());
        CHECK(lens == std::vector<Quad>{half_root2, half_root2, Quad(1)});
    }
    CHECK_THROWS(subdivide(fixtures::lone_triangle(), SubdivisionMode::altitude));
}

TEST_CASE("nerve of the 2-cells") {
    auto lone = wise_complex(fixtures::lone_triangle());
    CHECK(lone.cells.size() == 1);
    CHECK(lone.edges.empty());
    auto pillow = wise_complex(fixtures::pillow());
    CHECK(pillow.cells.size() == 2);
    CHECK(pillow.edges.size() == 1);
    auto book = wise_complex(fixtures::book(3));
    CHECK(book.cells.size() == 3);
    CHECK(book.edges.size() == 3);
    CHECK(book.triangles.size() == 1);
    for (auto& [name, c] : fixtures::all()) {
        long bare = 0;
        for (int d : scan_degrees(c)) bare += d == 0;
        CHECK(long(wise_complex(c).cells.size()) == long(c.faces.size()) + bare);
    }
}

TEST_CASE("first Betti number against chi = b0 - b1 + b2 on known surfaces") {
    // pillow: sphere; flat torus: b0 = b2 = 1
    CHECK(first_betti(fixtures::pillow()) == 0);
    CHECK(first_betti(fixtures::flat_torus()) == 2);
    CHECK(first_betti(fixtures::barycentric_torus()) == 2);
    CHECK(first_betti(fixtures::barycentric_triangle()) == 0);
    // theta graph on two vertices with n pages glued to n edges plus the circle: b1 = n
    CHECK(first_betti(fixtures::theta_circle()) == 3);
}

TEST_CASE("complex files round trip and shipped files match the builders") {
    for (auto& [name, c] : fixtures::all()) {
        CAPTURE(name);
        auto j = complex_to_json(c);
        CHECK(complex_to_json(complex_from_json(j)) == j);
        std::ifstream in(std::string(TITS_SOURCE_DIR) + "/fixtures/" + name + ".cx");
        REQUIRE(in);
        CHECK(nlohmann::json::parse(in) == j);
    }
    CHECK_THROWS_AS(complex_from_json(nlohmann::json::parse(R"({"vertices":[]})")), InputError);
}
