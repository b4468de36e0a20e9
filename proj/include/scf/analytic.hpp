#pragma once

// |L(1,chi)|^2 for the cubic character pair, class-number lower bounds, and
// the search cutoffs they imply.

#include <optional>

#include "scf/character.hpp"

namespace scf {

enum class LMethod { finite_sum, euler_product };

struct LValue {
    double abs_squared = 0;
    u64 terms = 0;  // f - 1 for the finite sum; number of primes for the Euler product
    LMethod method = LMethod::finite_sum;
    double est_error = 0;
};

// Finite character sum  |L(1,chi)|^2 = (1/f) |sum_{a<f} chi(a) log(2 sin(pi a/f))|^2
// (chi even and primitive). Compensated summation, terms paired as a and f-a.
LValue l1_abs_squared(const CubicCharacterPair& chi);

// Same sum evaluated in extended precision; escalation path for rounding failures.
LValue l1_abs_squared_ld(const CubicCharacterPair& chi);

// Truncated Euler product over primes < prime_limit; independent cross-estimate.
LValue l1_euler_product(const CubicCharacterPair& chi, u64 prime_limit = 100000);

// h > 0.023 f^0.946 / (log D)^2, valid for f > 10^5.
std::optional<double> lettl_bound(double f, double D);

// h > f / (e (log D)^2 log f), valid for f > 2 sqrt(3) 10^4.
std::optional<double> louboutin_bound(double f, double D);

enum class BoundKind { Louboutin, Lettl };

// Lower bound evaluated at real f = D(m)/index; absent when the gate fails.
std::optional<double> scaled_bound(int index, i64 m, BoundKind kind);

struct Cutoff {
    i64 M = 0;            // smallest M with bound > hmax for all m >= M
    double bound_at_M = 0;
};

// Smallest M such that the gated bound exceeds hmax for every m >= M; the
// growth of the bound is verified numerically on [M, 10M].
Cutoff cutoff_m(int index, double hmax, BoundKind kind = BoundKind::Louboutin);

}  // namespace scf
