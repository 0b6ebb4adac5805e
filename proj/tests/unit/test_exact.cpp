#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "tits/exact.hpp"

using namespace tits;

namespace {

// floating oracle, pinned tolerance
constexpr double kTol = 1e-9;

double approx(const Quad& q) {
    auto r = [](const Rational& x) { return double(x.num()) / double(x.den()); };
    return r(q.a()) + r(q.b()) * std::sqrt(2.0) + r(q.c()) * std::sqrt(3.0) + r(q.d()) * std::sqrt(6.0);
}

Quad random_quad(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    auto r = [&] { return Rational(num(rng), den(rng)); };
    return {r(), r(), r(), r()};
}

}  // namespace

TEST_CASE("rational normal form and order") {
    Rational x(6, -4);
    CHECK(x.num() == -3);
    CHECK(x.den() == 2);
    CHECK(x.str() == "-3/2");
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic agrees with a brute cross-multiplication oracle") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 40);
    for (int i = 0; i < 500; ++i) {
        long p = num(rng), q = den(rng), r = num(rng), s = den(rng);
        Rational x(p, q), y(r, s);
        Rational sum = x + y, prod = x * y;
        CHECK(sum.num() * (q * s) == (p * s + r * q) * sum.den());
        CHECK(prod.num() * (q * s) == (p * r) * prod.den());
        CHECK((x < y) == (p * s < r * q));
    }
}

TEST_CASE("quad arithmetic matches floating evaluation") {
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        Quad x = random_quad(rng), y = random_quad(rng);
        CHECK(std::abs(approx(x * y) - approx(x) * approx(y)) < kTol);
        CHECK(std::abs(approx(x + y) - (approx(x) + approx(y))) < kTol);
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == Quad(1));
            CHECK(std::abs(approx(y / x) - approx(y) / approx(x)) < kTol);
        }
        double v = approx(x);
        if (std::abs(v) > kTol) CHECK(x.sign() == (v > 0 ? 1 : -1));
    }
}

TEST_CASE("quad sign on near cancellations") {
    // 1393^2 = 2 * 985^2 - 1 and 99^2 = 2 * 70^2 + 1
    CHECK(Quad(1393, -985, 0, 0).sign() == -1);
    CHECK(Quad(99, -70, 0, 0).sign() == 1);
    CHECK(Quad(-99, 70, 0, 0).sign() == -1);
    // 5 sqrt2 - 4 sqrt3 + sqrt6 - 2: floating value decides
    Quad z(-2, 5, -4, 1);
    CHECK(z.sign() == (approx(z) > 0 ? 1 : -1));
    CHECK((Quad::sqrt2() * Quad::sqrt3()) == Quad::sqrt6());
}

TEST_CASE("quad parse and print round trip") {
    for (const char* s : {"0", "3/4", "1/2*sqrt3", "-1/4*sqrt2 + 1/4*sqrt6", "2 + sqrt3"}) {
        Quad q = Quad::parse(s);
        CHECK(Quad::parse(q.str()) == q);
    }
    CHECK(Quad::parse("2+sqrt3") == Quad(2, 0, 1, 0));
    CHECK_THROWS(Quad::parse("sqrt5"));
}

TEST_CASE("exact square roots") {
    auto root = sqrt_exact(Quad::parse("2 + sqrt3"));
    REQUIRE(root);
    CHECK(*root * *root == Quad::parse("2 + sqrt3"));
    CHECK(root->sign() > 0);
    CHECK(sqrt_exact(Quad(Rational(9, 16))) == Quad(Rational(3, 4)));
    CHECK(sqrt_exact(Quad(3)) == Quad::sqrt3());
    CHECK_FALSE(sqrt_exact(Quad(5)).has_value());
}

TEST_CASE("unit directions at multiples of pi/12") {
    for (int k = 0; k < 24; ++k) {
        Vec2 u = unit_at(k);
        CHECK(dot(u, u) == Quad(1));
        double th = k * M_PI / 12;
        CHECK(std::abs(approx(u.x) - std::cos(th)) < kTol);
        CHECK(std::abs(approx(u.y) - std::sin(th)) < kTol);
    }
}
