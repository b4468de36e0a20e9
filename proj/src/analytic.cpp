#include "scf/analytic.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace scf {

namespace {

constexpr std::uint8_t kUnset = 255;

// Character exponent e(a) for all 1 <= a < f via a linear sieve: e is
// completely multiplicative, so only primes need the local power residues.
// Values 0,1,2 are exponents of omega; 3 marks gcd(a, f) > 1.
void sieve_exponents(const CubicCharacterPair& chi, std::vector<std::uint8_t>& cls) {
    const u64 f = chi.modulus;
    cls.assign(f, kUnset);
    struct LocalCtx {
        bool is_nine;
        u64 p;
        u64 exp;       // (p-1)/3
        u64 omega;     // smaller cube root of unity mod p
        int eps;
        Montgomery mg;
    };
    std::vector<LocalCtx> ctx;
    ctx.reserve(chi.locals.size());
    for (size_t i = 0; i < chi.locals.size(); ++i) {
        const auto& lc = chi.locals[i];
        ctx.push_back({lc.is_nine, lc.q, lc.is_nine ? 0 : (lc.q - 1) / 3, lc.omega, chi.eps[i],
                       Montgomery(lc.is_nine ? 9 : lc.q)});
    }
    auto prime_class = [&](u64 q) -> std::uint8_t {
        int acc = 0;
        for (const auto& c : ctx) {
            int le;
            if (c.is_nine) {
                static constexpr int tab[9] = {3, 0, 1, 3, 2, 2, 3, 1, 0};
                le = tab[q % 9];
            } else {
                u64 r = q % c.p;
                if (r == 0) {
                    le = 3;
                } else {
                    u64 t = c.mg.from(c.mg.pow(c.mg.to(r), c.exp));
                    le = (t == 1) ? 0 : (t == c.omega ? 1 : 2);
                }
            }
            if (le == 3) return 3;
            acc += c.eps * le;
        }
        return (std::uint8_t)(acc % 3);
    };

    std::vector<u32> primes;
    primes.reserve(f > 16 ? (size_t)((double)f / std::log((double)f) * 1.2) : 8);
    if (f > 1) cls[1] = 0;
    for (u64 n = 2; n < f; ++n) {
        if (cls[n] == kUnset) {
            primes.push_back((u32)n);
            cls[n] = prime_class(n);
        }
        for (u32 p : primes) {
            u64 np = n * p;
            if (np >= f) break;
            std::uint8_t a = cls[p], b = cls[n];
            cls[np] = (a == 3 || b == 3) ? 3 : (std::uint8_t)((a + b) % 3);
            if (n % p == 0) break;
        }
    }
}

template <typename Real>
struct Kahan {
    Real sum = 0, carry = 0;
    void add(Real x) {
        Real y = x - carry;
        Real t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

template <typename Real>
LValue finite_sum_impl(const CubicCharacterPair& chi) {
    const u64 f = chi.modulus;
    if (f < 7) throw std::invalid_argument("l1_abs_squared: conductor too small");
    thread_local std::vector<std::uint8_t> cls;
    sieve_exponents(chi, cls);

    const Real pi = (Real)3.14159265358979323846264338327950288L;
    Kahan<Real> S[3];
    Kahan<Real> absw;
    const Real invf = (Real)1 / (Real)f;
    for (u64 a = 1; 2 * a < f; ++a) {
        std::uint8_t c = cls[a];
        if (c == 3) continue;
        Real w;
        if constexpr (sizeof(Real) == sizeof(double))
            w = std::log(2.0 * std::sin(pi * (Real)a * invf));
        else
            w = logl(2.0L * sinl(pi * (Real)a * invf));
        S[c].add(w);
        absw.add(w < 0 ? -w : w);
    }
    // chi is even: a and f-a contribute equally
    Real s0 = 2 * S[0].sum, s1 = 2 * S[1].sum, s2 = 2 * S[2].sum;
    if (s1 > s2) std::swap(s1, s2);  // conjugation swaps s1 and s2; canonicalize for bit-identical output
    Real abs2 = (s0 * s0 + s1 * s1 + s2 * s2 - s0 * s1 - s1 * s2 - s2 * s0) * invf;

    LValue out;
    out.abs_squared = (double)abs2;
    out.terms = f - 1;
    out.method = LMethod::finite_sum;
    Real eps = sizeof(Real) == sizeof(double) ? (Real)DBL_EPSILON : (Real)LDBL_EPSILON;
    Real smax = std::abs((double)s0) + std::abs((double)s1) + std::abs((double)s2);
    out.est_error = (double)(8 * eps * (2 * absw.sum) * smax * invf + 4 * eps * abs2);
    return out;
}

}  // namespace

LValue l1_abs_squared(const CubicCharacterPair& chi) { return finite_sum_impl<double>(chi); }

LValue l1_abs_squared_ld(const CubicCharacterPair& chi) { return finite_sum_impl<long double>(chi); }

LValue l1_euler_product(const CubicCharacterPair& chi, u64 prime_limit) {
    // |L(1,chi)|^2 = prod_p |1 - chi(p)/p|^{-2}; for chi(p) = omega^j,
    // |1 - omega^j/p|^2 = 1 - 2cos(2 pi j/3)/p + 1/p^2.
    double logsum = 0;
    u64 nprimes = 0;
    for (u32 p : small_primes()) {
        if (p >= prime_limit) break;
        CubicClass v = evaluate(chi, false, (i64)p);
        if (v == CubicClass::Zero) continue;
        double c = (v == CubicClass::Unity) ? 1.0 : -0.5;
        double inv = 1.0 / (double)p;
        logsum -= std::log(1.0 - 2.0 * c * inv + inv * inv);
        ++nprimes;
    }
    LValue out;
    out.abs_squared = std::exp(logsum);
    out.terms = nprimes;
    out.method = LMethod::euler_product;
    out.est_error = out.abs_squared * 0.10;  // advisory truncation band
    return out;
}

std::optional<double> lettl_bound(double f, double D) {
    if (!(f > 1e5)) return std::nullopt;
    double lg = std::log(D);
    return 0.023 * std::pow(f, 0.946) / (lg * lg);
}

std::optional<double> louboutin_bound(double f, double D) {
    static const double gate = 2.0 * std::sqrt(3.0) * 1e4;
    if (!(f > gate)) return std::nullopt;
    double lg = std::log(D);
    return f / (std::exp(1.0) * lg * lg * std::log(f));
}

std::optional<double> scaled_bound(int index, i64 m, BoundKind kind) {
    double D = (double)m * (double)m + 3.0 * (double)m + 9.0;
    double f = D / (double)index;
    return kind == BoundKind::Louboutin ? louboutin_bound(f, D) : lettl_bound(f, D);
}

Cutoff cutoff_m(int index, double hmax, BoundKind kind) {
    if (index != 1 && index != 3 && index != 27) throw std::invalid_argument("cutoff_m: index must be 1, 3 or 27");
    const i64 cap = 100000000;
    i64 last_bad = 1;
    for (i64 m = 2; m < cap; ++m) {
        auto b = scaled_bound(index, m, kind);
        if (!b || *b <= hmax) last_bad = m;
        else if (m > 4 * last_bad + 1000 && *b > 2 * hmax) break;
    }
    i64 M = last_bad + 1;
    auto bM = scaled_bound(index, M, kind);
    if (!bM) throw std::runtime_error("cutoff_m: gate fails at crossing");
    double prev = *bM;
    for (i64 t = M + 1; t <= 10 * M; ++t) {
        auto b = scaled_bound(index, t, kind);
        if (!b || *b <= prev) throw std::runtime_error("cutoff_m: bound not increasing past crossing");
        prev = *b;
    }
    return {M, *bM};
}

}  // namespace scf
