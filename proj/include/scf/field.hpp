#pragma once

// The simplest cubic field L_m = Q(alpha), alpha a root of
//   f_m(X) = X^3 - m X^2 - (m+3) X - 1,
// with D = m^2 + 3m + 9: discriminant base, conductor, index and real roots.

#include <array>
#include <cstdint>
#include <optional>

#include "scf/arith.hpp"

namespace scf {

enum class IndexClass : std::uint8_t { One, Three, TwentySeven, Other };

const char* index_class_name(IndexClass c);

struct SimplestCubicField {
    i64 m = 0;             // canonical representative, m >= -1
    u64 D = 0;             // m^2 + 3m + 9
    Factorization D_factors;
    u64 b = 0, c = 0;      // D = b * c^3, b cubefree
    int r3 = 0;            // exponent of 3 in D, one of {0, 2, 3}
    int gamma = 1;         // 1 or 9
    u64 conductor = 0;     // f
    u128 field_disc = 0;   // f^2
    u64 index = 0;         // D / f = [O_L : Z[alpha]]
    int k = 0;             // 3-exponent of the index, one of {0, 1, 3}
    IndexClass index_class = IndexClass::One;
};

// L_m = L_{-m-3}; canonical representative has m >= -1.
i64 normalize(i64 m);

// All invariants populated; the conductor is gamma * prod of primes p != 3
// dividing the cubefree part b, and the closed-form index 3^k * prod p^t is
// cross-checked against D / conductor.
SimplestCubicField build_field(i64 m);

struct RealRoots {
    // alpha[0] > alpha[1] > alpha[2]; companions polished independently so each
    // carries full relative precision (alpha+1 and alpha-1 are units/norm data).
    std::array<long double, 3> alpha{};
    std::array<long double, 3> alpha_plus1{};
    std::array<long double, 3> alpha_minus1{};
    int precision_bits = 0;
};

// Trigonometric closed form for the (totally real) cubic, then Newton polish.
// precision_bits <= 53 evaluates in double, otherwise in long double.
RealRoots real_roots(i64 m, int precision_bits = 64);

// Exact rational arithmetic sample check of the reduced-form identity
//   27 f_m((X+m)/3) = X^3 - 3 D X - (2m+3) D.
struct Rational {
    i64 num = 0;
    i64 den = 1;
    Rational() = default;
    Rational(i64 n, i64 d = 1);
};

bool reduced_form_check(i64 m, const Rational& X);

// disc(f_m) computed from the coefficients; equals D^2.
i128 poly_discriminant(i64 m);

}  // namespace scf
