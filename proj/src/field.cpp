#include "scf/field.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace scf {

const char* index_class_name(IndexClass c) {
    switch (c) {
        case IndexClass::One: return "1";
        case IndexClass::Three: return "3";
        case IndexClass::TwentySeven: return "27";
        default: return "other";
    }
}

i64 normalize(i64 m) {
    if (m < INT64_MIN + 3) throw std::invalid_argument("normalize: m out of range");
    return m >= -1 ? m : -m - 3;
}

SimplestCubicField build_field(i64 m_in) {
    SimplestCubicField F;
    F.m = normalize(m_in);
    i64 m = F.m;
    i128 D = (i128)m * m + 3 * (i128)m + 9;
    if (D > (i128)UINT64_MAX) throw std::invalid_argument("build_field: m out of supported range");
    F.D = (u64)D;
    F.D_factors = factorize(F.D);
    auto [b, c] = cubefree_decompose(F.D_factors);
    F.b = (u64)b;
    F.c = (u64)c;

    i64 m3 = ((m % 3) + 3) % 3;
    i64 m9 = ((m % 9) + 9) % 9;
    i64 m27 = ((m % 27) + 27) % 27;
    F.r3 = (m3 != 0) ? 0 : (m9 == 3 ? 3 : 2);
    assert(F.r3 == F.D_factors.exponent_of(3));

    F.gamma = (m3 != 0 || m27 == 12) ? 1 : 9;
    u64 f = (u64)F.gamma;
    for (const auto& [p, e] : factorize(F.b).factors)
        if (p != 3) f *= (u64)p;
    F.conductor = f;
    F.field_disc = (u128)f * f;
    if (F.D % f != 0) throw std::runtime_error("build_field: conductor does not divide D");
    F.index = F.D / f;

    // closed form: index = 3^k * prod p^t, t = e-1 unless 3 | e, in which case t = e
    F.k = (m3 != 0 || m9 == 0 || m9 == 6) ? 0 : (m27 == 12 ? 3 : 1);
    u64 closed = 1;
    for (int i = 0; i < F.k; ++i) closed *= 3;
    for (const auto& [p, e] : F.D_factors.factors) {
        if (p == 3) continue;
        int t = (e % 3 != 0) ? e - 1 : e;
        for (int i = 0; i < t; ++i) closed *= (u64)p;
    }
    if (closed != F.index)
        throw std::runtime_error("build_field: index closed form mismatch at m = " + std::to_string(m));

    F.index_class = F.index == 1    ? IndexClass::One
                    : F.index == 3  ? IndexClass::Three
                    : F.index == 27 ? IndexClass::TwentySeven
                                    : IndexClass::Other;
    return F;
}

namespace {

// One cubic with exact integer coefficients x^3 + a2 x^2 + a1 x + a0.
struct Cubic {
    long double a2, a1, a0;
    long double eval(long double x) const { return ((x + a2) * x + a1) * x + a0; }
    long double deriv(long double x) const { return (3.0L * x + 2.0L * a2) * x + a1; }
    long double polish(long double x, int iters) const {
        for (int i = 0; i < iters; ++i) {
            long double d = deriv(x);
            if (d == 0.0L) break;
            x -= eval(x) / d;
        }
        return x;
    }
};

}  // namespace

RealRoots real_roots(i64 m, int precision_bits) {
    // Depressed form: with Y = 3X - m,  Y^3 - 3 D Y - (2m+3) D = 0, D = m^2+3m+9.
    // Y = 2 sqrt(D) cos(theta), cos(3 theta) = (2m+3) / (2 sqrt(D)).
    long double md = (long double)m;
    long double D = md * md + 3.0L * md + 9.0L;
    long double s = sqrtl(D);
    long double u = (2.0L * md + 3.0L) / (2.0L * s);
    if (u > 1.0L) u = 1.0L;
    if (u < -1.0L) u = -1.0L;
    long double theta = acosl(u) / 3.0L;
    const long double tau = 2.0L * 3.14159265358979323846264338327950288L / 3.0L;

    RealRoots out;
    out.precision_bits = precision_bits <= 53 ? 53 : 64;
    Cubic f{-md, -(md + 3.0L), -1.0L};            // f_m
    Cubic g{-(md + 3.0L), md, 1.0L};              // roots are alpha+1
    Cubic h{3.0L - md, -3.0L * md, -(2.0L * md + 3.0L)};  // roots are alpha-1
    int iters = precision_bits <= 53 ? 3 : 4;

    std::array<long double, 3> a{};
    for (int j = 0; j < 3; ++j) {
        long double Y = 2.0L * s * cosl(theta + tau * (long double)j);
        a[j] = (Y + md) / 3.0L;
    }
    std::sort(a.begin(), a.end(), std::greater<>());
    for (int j = 0; j < 3; ++j) {
        out.alpha[j] = f.polish(a[j], iters);
        out.alpha_plus1[j] = g.polish(a[j] + 1.0L, iters);
        out.alpha_minus1[j] = h.polish(a[j] - 1.0L, iters);
    }
    if (precision_bits <= 53) {
        for (int j = 0; j < 3; ++j) {
            out.alpha[j] = (double)out.alpha[j];
            out.alpha_plus1[j] = (double)out.alpha_plus1[j];
            out.alpha_minus1[j] = (double)out.alpha_minus1[j];
        }
    }
    return out;
}

Rational::Rational(i64 n, i64 d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

namespace {

struct Rat128 {
    i128 num;
    i128 den;
    void reduce() {
        if (den < 0) { num = -num; den = -den; }
        u128 a = num < 0 ? (u128)(-num) : (u128)num;
        u128 b = (u128)den;
        u128 g = gcd_u128(a, b);
        if (g > 1) { num /= (i128)g; den /= (i128)g; }
    }
    Rat128 operator*(const Rat128& o) const {
        Rat128 r{num * o.num, den * o.den};
        r.reduce();
        return r;
    }
    Rat128 operator+(const Rat128& o) const {
        Rat128 r{num * o.den + o.num * den, den * o.den};
        r.reduce();
        return r;
    }
    bool operator==(const Rat128& o) const { return num * o.den == o.num * den; }
};

Rat128 rat(i128 n, i128 d = 1) {
    Rat128 r{n, d};
    r.reduce();
    return r;
}

}  // namespace

bool reduced_form_check(i64 m, const Rational& X) {
    // 27 f_m((X+m)/3) vs X^3 - 3 D X - (2m+3) D, exactly over Q.
    Rat128 x = rat(X.num, X.den);
    i128 D = (i128)m * m + 3 * (i128)m + 9;
    Rat128 t = (x + rat(m)) * rat(1, 3);
    Rat128 fm = t * t * t + t * t * rat(-m) + t * rat(-(i128)m - 3) + rat(-1);
    Rat128 lhs = fm * rat(27);
    Rat128 rhs = x * x * x + x * rat(-3 * D) + rat(-(2 * (i128)m + 3) * D);
    return lhs == rhs;
}

i128 poly_discriminant(i64 m) {
    // disc(x^3 + b x^2 + c x + d) = 18 b c d - 4 b^3 d + b^2 c^2 - 4 c^3 - 27 d^2
    i128 b = -(i128)m, c = -((i128)m + 3), d = -1;
    return 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c - 27 * d * d;
}

}  // namespace scf
