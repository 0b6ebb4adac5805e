// Exact arithmetic: rationals with 64-bit parts and the biquadratic field Q(sqrt2, sqrt3).
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <cctype>
#include <cmath>
#include <optional>
#include <vector>

namespace tits {

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    int sign() const { return (num_ > 0) - (num_ < 0); }
    bool is_zero() const { return num_ == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const { Rational r; r.num_ = -num_; r.den_ = den_; return r; }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }
    // bits needed for the larger of numerator and denominator
    int bit_size() const {
        auto bits = [](std::int64_t v) { int b = 0; std::uint64_t u = v < 0 ? -std::uint64_t(v) : std::uint64_t(v); while (u) { ++b; u >>= 1; } return b; };
        return std::max(bits(num_), bits(den_));
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s));
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad rational '" + s + "'");
        }
    }

private:
    using i128 = __int128;
    std::int64_t num_ = 0, den_ = 1;

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) { i128 t = a % b; a = b; b = t; }
        return a;
    }
    static Rational make(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr i128 lim = i128(INT64_MAX);
        if (n > lim || n < -lim || d > lim) throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = std::int64_t(n);
        r.den_ = std::int64_t(d);
        return r;
    }
    void assign(std::int64_t n, std::int64_t d) { *this = make(n, d); }
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// a + b*sqrt2 + c*sqrt3 + d*sqrt6
class Quad {
public:
    Quad() = default;
    Quad(std::int64_t v) : a_(v) {}
    Quad(Rational a) : a_(a) {}
    Quad(Rational a, Rational b, Rational c, Rational d) : a_(a), b_(b), c_(c), d_(d) {}

    static Quad sqrt2() { return {0, 1, 0, 0}; }
    static Quad sqrt3() { return {0, 0, 1, 0}; }
    static Quad sqrt6() { return {0, 0, 0, 1}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }
    bool is_rational() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && is_rational(); }

    friend Quad operator+(const Quad& x, const Quad& y) { return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_}; }
    friend Quad operator-(const Quad& x, const Quad& y) { return {x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_}; }
    Quad operator-() const { return {-a_, -b_, -c_, -d_}; }
    friend Quad operator*(const Quad& x, const Quad& y) {
        return {x.a_ * y.a_ + Rational(2) * x.b_ * y.b_ + Rational(3) * x.c_ * y.c_ + Rational(6) * x.d_ * y.d_,
                x.a_ * y.b_ + x.b_ * y.a_ + Rational(3) * (x.c_ * y.d_ + x.d_ * y.c_),
                x.a_ * y.c_ + x.c_ * y.a_ + Rational(2) * (x.b_ * y.d_ + x.d_ * y.b_),
                x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_};
    }
    friend Quad operator/(const Quad& x, const Quad& y) { return x * y.inverse(); }
    Quad& operator+=(const Quad& o) { return *this = *this + o; }
    Quad& operator-=(const Quad& o) { return *this = *this - o; }
    Quad& operator*=(const Quad& o) { return *this = *this * o; }
    Quad& operator/=(const Quad& o) { return *this = *this / o; }

    Quad conj2() const { return {a_, -b_, c_, -d_}; }
    Quad conj3() const { return {a_, b_, -c_, -d_}; }

    Quad inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(sqrt2,sqrt3)");
        Quad n1 = *this * conj2();          // lies in Q(sqrt3)
        Quad n = n1 * n1.conj3();           // rational
        return conj2() * n1.conj3() * Quad(Rational(1) / n.a_);
    }

    int sign() const {
        // x = P + sqrt3*Q with P, Q in Q(sqrt2)
        int sp = sign2(a_, b_), sq = sign2(c_, d_);
        if (sq == 0) return sp;
        if (sp == 0 || sp == sq) return sq;
        // opposite signs: compare P^2 with 3 Q^2
        Rational pa = a_ * a_ + Rational(2) * b_ * b_, pb = Rational(2) * a_ * b_;
        Rational qa = c_ * c_ + Rational(2) * d_ * d_, qb = Rational(2) * c_ * d_;
        return sp * sign2(pa - Rational(3) * qa, pb - Rational(3) * qb);
    }

    friend bool operator==(const Quad& x, const Quad& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }
    friend bool operator<(const Quad& x, const Quad& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Quad& x, const Quad& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const Quad& x, const Quad& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const Quad& x, const Quad& y) { return (x - y).sign() >= 0; }

    // total order on coefficients, used for containers only
    static bool lex_less(const Quad& x, const Quad& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        if (x.b_ != y.b_) return x.b_ < y.b_;
        if (x.c_ != y.c_) return x.c_ < y.c_;
        return x.d_ < y.d_;
    }

    double approx() const {
        auto f = [](const Rational& r) { return double(r.num()) / double(r.den()); };
        return f(a_) + f(b_) * 1.4142135623730951 + f(c_) * 1.7320508075688772 + f(d_) * 2.449489742783178;
    }

    int bit_size() const { return std::max(std::max(a_.bit_size(), b_.bit_size()), std::max(c_.bit_size(), d_.bit_size())); }

    std::string str() const {
        std::string out;
        auto term = [&](const Rational& r, const char* root) {
            if (r.is_zero()) return;
            std::string body = root ? (r == Rational(1) ? std::string(root) : r.str() + "*" + root) : r.str();
            if (root && r == Rational(-1)) body = std::string("-") + root;
            if (out.empty()) { out = body; return; }
            if (body[0] == '-') out += " - " + body.substr(1);
            else out += " + " + body;
        };
        term(a_, nullptr);
        term(b_, "sqrt2");
        term(c_, "sqrt3");
        term(d_, "sqrt6");
        return out.empty() ? "0" : out;
    }

    // terms: "<rat>", "<rat>*sqrtK", "sqrtK", "sqrtK/<int>", joined by + or -
    static Quad parse(const std::string& text) {
        std::string s;
        for (char ch : text) if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
        if (s.empty()) throw std::invalid_argument("empty scalar");
        Quad out;
        std::size_t i = 0;
        while (i < s.size()) {
            int sgn = 1;
            if (s[i] == '+' || s[i] == '-') { if (s[i] == '-') sgn = -1; ++i; }
            std::size_t j = i;
            while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
            std::string t = s.substr(i, j - i);
            if (t.empty()) throw std::invalid_argument("bad scalar '" + text + "'");
            out += Quad(Rational(sgn)) * term_value(t, text);
            i = j;
        }
        return out;
    }

private:
    Rational a_, b_, c_, d_;

    static int sign2(const Rational& p, const Rational& q) {
        int sp = p.sign(), sq = q.sign();
        if (sq == 0) return sp;
        if (sp == 0 || sp == sq) return sq;
        return sp * (p * p - Rational(2) * q * q).sign();
    }

    static Quad root(const std::string& r, const std::string& text) {
        if (r == "sqrt2") return sqrt2();
        if (r == "sqrt3") return sqrt3();
        if (r == "sqrt6") return sqrt6();
        throw std::invalid_argument("bad scalar '" + text + "'");
    }
    static Quad term_value(const std::string& t, const std::string& text) {
        auto star = t.find('*');
        if (star != std::string::npos) return Quad(Rational::parse(t.substr(0, star))) * root(t.substr(star + 1), text);
        if (t.rfind("sqrt", 0) == 0) {
            auto slash = t.find('/');
            if (slash == std::string::npos) return root(t, text);
            return root(t.substr(0, slash), text) * Quad(Rational(1) / Rational::parse(t.substr(slash + 1)));
        }
        return Quad(Rational::parse(t));
    }
};

inline std::ostream& operator<<(std::ostream& os, const Quad& q) { return os << q.str(); }

// Rational approximation with bounded denominator (continued fractions).
inline Rational rational_near(double v, std::int64_t max_den = 1000000) {
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double x = v;
    for (int i = 0; i < 40; ++i) {
        double fl = std::floor(x);
        if (std::fabs(fl) > 1e15) break;
        auto ai = std::int64_t(fl);
        std::int64_t p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = x - fl;
        if (frac < 1e-12) break;
        x = 1.0 / frac;
    }
    return Rational(p1, q1);
}

// Square root inside Q(sqrt2, sqrt3) when it exists there, verified exactly.
inline std::optional<Quad> sqrt_exact(const Quad& x) {
    if (x.sign() < 0) return std::nullopt;
    if (x.is_zero()) return Quad(0);
    auto f = [](const Rational& r) { return double(r.num()) / double(r.den()); };
    double conj[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double s2 = i ? -1 : 1, s3 = j ? -1 : 1;
            double v = f(x.a()) + s2 * f(x.b()) * std::sqrt(2.0) + s3 * f(x.c()) * std::sqrt(3.0) + s2 * s3 * f(x.d()) * std::sqrt(6.0);
            if (v < -1e-9) return std::nullopt;
            conj[i][j] = std::sqrt(std::max(v, 0.0));
        }
    for (int mask = 0; mask < 8; ++mask) {
        double y[2][2] = {{conj[0][0], conj[0][1] * ((mask & 1) ? -1 : 1)},
                          {conj[1][0] * ((mask & 2) ? -1 : 1), conj[1][1] * ((mask & 4) ? -1 : 1)}};
        double a = (y[0][0] + y[0][1] + y[1][0] + y[1][1]) / 4;
        double b = (y[0][0] + y[0][1] - y[1][0] - y[1][1]) / (4 * std::sqrt(2.0));
        double c = (y[0][0] - y[0][1] + y[1][0] - y[1][1]) / (4 * std::sqrt(3.0));
        double d = (y[0][0] - y[0][1] - y[1][0] + y[1][1]) / (4 * std::sqrt(6.0));
        try {
            Quad cand(rational_near(a, 10000), rational_near(b, 10000), rational_near(c, 10000), rational_near(d, 10000));
            if (cand.sign() >= 0 && cand * cand == x) return cand;
        } catch (const std::overflow_error&) {
        }
    }
    return std::nullopt;
}

struct Vec2 {
    Quad x, y;
    friend Vec2 operator+(const Vec2& p, const Vec2& q) { return {p.x + q.x, p.y + q.y}; }
    friend Vec2 operator-(const Vec2& p, const Vec2& q) { return {p.x - q.x, p.y - q.y}; }
    friend Vec2 operator*(const Quad& s, const Vec2& p) { return {s * p.x, s * p.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    friend bool operator==(const Vec2& p, const Vec2& q) { return p.x == q.x && p.y == q.y; }
    friend bool operator!=(const Vec2& p, const Vec2& q) { return !(p == q); }
    Vec2 rot90() const { return {-y, x}; }
    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

inline Quad dot(const Vec2& p, const Vec2& q) { return p.x * q.x + p.y * q.y; }
inline Quad cross(const Vec2& p, const Vec2& q) { return p.x * q.y - p.y * q.x; }

// cos and sin of k*pi/12
inline Vec2 unit_at(int k) {
    k = ((k % 24) + 24) % 24;
    // cos(j*pi/12) for j = 0..6
    static const Quad c[7] = {
        Quad(1),
        Quad(0, Rational(1, 4), 0, Rational(1, 4)),
        Quad(0, 0, Rational(1, 2), 0),
        Quad(0, Rational(1, 2), 0, 0),
        Quad(Rational(1, 2)),
        Quad(0, Rational(-1, 4), 0, Rational(1, 4)),
        Quad(0),
    };
    auto cosk = [&](int j) -> Quad {
        j = ((j % 24) + 24) % 24;
        if (j <= 6) return c[j];
        if (j <= 12) return -c[12 - j];
        if (j <= 18) return -c[j - 12];
        return c[24 - j];
    };
    return {cosk(k), cosk(k - 6)};
}

} // namespace tits
