#include <gmpxx.h>
#include <mpfr.h>

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "scf/units.hpp"

// Saturation of E = <alpha, alpha+1> inside the full unit group. A candidate
// q-th root eta with eta^q = +- alpha^a (alpha+1)^b is reconstructed from the
// real embeddings at 256-bit precision, rounded to coordinates in
// (1/index) Z[alpha], and then the identity is verified exactly over Q, which
// also certifies eta as a unit of O (its q-th power and inverse q-th power are
// algebraic integers).

namespace scf {

namespace {

constexpr int kPrec = 256;

struct MR {
    mpfr_t v;
    MR() { mpfr_init2(v, kPrec); mpfr_set_zero(v, 1); }
    MR(const MR& o) { mpfr_init2(v, kPrec); mpfr_set(v, o.v, MPFR_RNDN); }
    explicit MR(long x) { mpfr_init2(v, kPrec); mpfr_set_si(v, x, MPFR_RNDN); }
    explicit MR(long double x) { mpfr_init2(v, kPrec); mpfr_set_ld(v, x, MPFR_RNDN); }
    ~MR() { mpfr_clear(v); }
    MR& operator=(const MR& o) {
        mpfr_set(v, o.v, MPFR_RNDN);
        return *this;
    }
    MR operator+(const MR& o) const { MR r; mpfr_add(r.v, v, o.v, MPFR_RNDN); return r; }
    MR operator-(const MR& o) const { MR r; mpfr_sub(r.v, v, o.v, MPFR_RNDN); return r; }
    MR operator*(const MR& o) const { MR r; mpfr_mul(r.v, v, o.v, MPFR_RNDN); return r; }
    MR operator/(const MR& o) const { MR r; mpfr_div(r.v, v, o.v, MPFR_RNDN); return r; }
    MR operator-() const { MR r; mpfr_neg(r.v, v, MPFR_RNDN); return r; }
    double to_double() const { return mpfr_get_d(v, MPFR_RNDN); }
};

MR mr_abs(const MR& x) { MR r; mpfr_abs(r.v, x.v, MPFR_RNDN); return r; }
MR mr_log(const MR& x) { MR r; mpfr_log(r.v, x.v, MPFR_RNDN); return r; }
MR mr_exp(const MR& x) { MR r; mpfr_exp(r.v, x.v, MPFR_RNDN); return r; }

using QPoly = std::array<mpq_class, 3>;  // c0 + c1 X + c2 X^2 in Q[X]/(f_m)

QPoly qp_const(long c) { return {mpq_class(c), mpq_class(0), mpq_class(0)}; }

QPoly qp_mul(const QPoly& A, const QPoly& B, long m) {
    mpq_class d0 = A[0] * B[0];
    mpq_class d1 = A[0] * B[1] + A[1] * B[0];
    mpq_class d2 = A[0] * B[2] + A[1] * B[1] + A[2] * B[0];
    mpq_class d3 = A[1] * B[2] + A[2] * B[1];
    mpq_class d4 = A[2] * B[2];
    // X^3 = m X^2 + (m+3) X + 1
    d3 += d4 * m;
    d2 += d4 * (m + 3);
    d1 += d4;
    d2 += d3 * m;
    d1 += d3 * (m + 3);
    d0 += d3;
    return {d0, d1, d2};
}

QPoly qp_pow(QPoly base, u64 e, long m) {
    QPoly r = qp_const(1);
    while (e > 0) {
        if (e & 1) r = qp_mul(r, base, m);
        base = qp_mul(base, base, m);
        e >>= 1;
    }
    return r;
}

bool qp_eq(const QPoly& A, const QPoly& B) { return A[0] == B[0] && A[1] == B[1] && A[2] == B[2]; }

QPoly qp_neg(const QPoly& A) { return {-A[0], -A[1], -A[2]}; }

struct Generator {
    QPoly poly;
    std::array<MR, 3> logs;   // log |sigma_i(g)|
    std::array<int, 3> sign;  // sign of sigma_i(g)
};

struct SatCtx {
    long m;
    u64 index;
    std::array<MR, 3> root;   // embeddings of alpha, descending
    Generator g1, g2;

    MR eval_at_root(const QPoly& P, int i) const {
        // exact rational coefficients evaluated at the mpfr root
        MR c0, c1, c2;
        mpfr_set_q(c0.v, P[0].get_mpq_t(), MPFR_RNDN);
        mpfr_set_q(c1.v, P[1].get_mpq_t(), MPFR_RNDN);
        mpfr_set_q(c2.v, P[2].get_mpq_t(), MPFR_RNDN);
        return (c2 * root[i] + c1) * root[i] + c0;
    }

    double regulator() const {
        MR det = g1.logs[0] * g2.logs[1] - g1.logs[1] * g2.logs[0];
        return std::abs(det.to_double());
    }
};

void refine_roots(SatCtx& ctx, const RealRoots& seed) {
    MR mm((long)ctx.m);
    for (int i = 0; i < 3; ++i) {
        MR x((long double)seed.alpha[i]);
        for (int it = 0; it < 6; ++it) {
            // f(x) = x^3 - m x^2 - (m+3) x - 1
            MR f = ((x - mm) * x - (mm + MR(3L))) * x - MR(1L);
            MR fp = (MR(3L) * x - MR(2L) * mm) * x - (mm + MR(3L));
            x = x - f / fp;
        }
        ctx.root[i] = x;
    }
}

// Lagrange interpolation: the polynomial of degree < 3 taking value eta_i at
// root_i, coefficients in mpfr.
std::array<MR, 3> interpolate(const SatCtx& ctx, const std::array<MR, 3>& eta) {
    std::array<MR, 3> coef = {MR(0L), MR(0L), MR(0L)};
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        MR denom = (ctx.root[i] - ctx.root[j]) * (ctx.root[i] - ctx.root[k]);
        MR w = eta[i] / denom;
        // (X - r_j)(X - r_k) = X^2 - (r_j + r_k) X + r_j r_k
        coef[0] = coef[0] + w * ctx.root[j] * ctx.root[k];
        coef[1] = coef[1] - w * (ctx.root[j] + ctx.root[k]);
        coef[2] = coef[2] + w;
    }
    return coef;
}

// Attempt the refinement g1^a * g2^b = eta^q. Returns the verified eta.
bool try_root(SatCtx& ctx, u64 q, u64 a, u64 b, Generator& out) {
    std::array<MR, 3> glog;
    std::array<int, 3> gsign;
    for (int i = 0; i < 3; ++i) {
        glog[i] = (MR((long)a) * ctx.g1.logs[i] + MR((long)b) * ctx.g2.logs[i]) / MR((long)q);
        int s = 1;
        if (a & 1) s *= ctx.g1.sign[i];
        if (b & 1) s *= ctx.g2.sign[i];
        gsign[i] = s;
    }

    QPoly gamma = qp_mul(qp_pow(ctx.g1.poly, a, ctx.m), qp_pow(ctx.g2.poly, b, ctx.m), ctx.m);

    // sign patterns for eta: odd q has the unique real q-th root per embedding;
    // q = 2 needs gamma (or -gamma) totally positive and a sign search.
    std::vector<std::array<int, 3>> patterns;
    if (q % 2 == 1) {
        patterns.push_back(gsign);
    } else {
        bool allpos = gsign[0] > 0 && gsign[1] > 0 && gsign[2] > 0;
        bool allneg = gsign[0] < 0 && gsign[1] < 0 && gsign[2] < 0;
        if (!allpos && !allneg) return false;
        for (int s1 : {1, -1})
            for (int s2 : {1, -1}) patterns.push_back({1, s1, s2});
    }

    for (const auto& pat : patterns) {
        std::array<MR, 3> eta;
        for (int i = 0; i < 3; ++i) {
            eta[i] = mr_exp(glog[i]);
            if (pat[i] < 0) eta[i] = -eta[i];
        }
        auto coef = interpolate(ctx, eta);
        // coordinates lie in (1/index) Z
        QPoly cand;
        bool plausible = true;
        for (int j = 0; j < 3 && plausible; ++j) {
            MR scaled = coef[j] * MR((long)ctx.index);
            mpz_class n;
            mpfr_get_z(n.get_mpz_t(), scaled.v, MPFR_RNDN);
            MR err;
            mpfr_sub_z(err.v, scaled.v, n.get_mpz_t(), MPFR_RNDN);
            mpfr_abs(err.v, err.v, MPFR_RNDN);
            if (mpfr_cmp_d(err.v, 0.05) > 0) plausible = false;
            cand[j] = mpq_class(n) / mpq_class((unsigned long)ctx.index);
            cand[j].canonicalize();
        }
        if (!plausible) continue;
        QPoly powq = qp_pow(cand, q, ctx.m);
        bool plus = qp_eq(powq, gamma);
        bool minus = !plus && qp_eq(powq, qp_neg(gamma));
        if (plus || minus) {
            out.poly = cand;
            out.logs = glog;
            out.sign = pat;
            return true;
        }
    }
    return false;
}

}  // namespace

UnitGroupInfo saturate_unit_group(const SimplestCubicField& field) {
    UnitGroupInfo info;
    RegulatorReport base = regulator_E(field.m, 64);
    info.reg_E = base.reg_E;
    info.unit_index = 1;
    info.reg_full = base.reg_E;
    info.proven = true;
    if (field.index == 1) return info;  // E is the full unit group

    if (field.m > (i64)1e9) throw std::invalid_argument("saturate_unit_group: m out of range");
    SatCtx ctx;
    ctx.m = (long)field.m;
    ctx.index = field.index;
    RealRoots seed = real_roots(field.m, 64);
    refine_roots(ctx, seed);

    ctx.g1.poly = {mpq_class(0), mpq_class(1), mpq_class(0)};  // alpha
    ctx.g2.poly = {mpq_class(1), mpq_class(1), mpq_class(0)};  // alpha + 1
    for (int i = 0; i < 3; ++i) {
        MR a = ctx.root[i];
        MR a1 = ctx.root[i] + MR(1L);
        ctx.g1.logs[i] = mr_log(mr_abs(a));
        ctx.g1.sign[i] = mpfr_sgn(a.v) >= 0 ? 1 : -1;
        ctx.g2.logs[i] = mr_log(mr_abs(a1));
        ctx.g2.sign[i] = mpfr_sgn(a1.v) >= 0 ? 1 : -1;
    }

    const double rlow = regulator_lower_bound((double)field.field_disc);
    int refinements = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        double reg = ctx.regulator();
        double ubound = 1.25 * reg / rlow;
        for (u32 q : small_primes()) {
            if ((double)q > ubound) break;
            // representatives of P^1(F_q): (1, t) and (0, 1)
            Generator eta;
            bool found = false;
            for (u64 t = 0; t <= q && !found; ++t) {
                u64 a = (t == q) ? 0 : 1;
                u64 b = (t == q) ? 1 : t;
                if (try_root(ctx, q, a, b, eta)) {
                    if (a == 1)
                        ctx.g1 = eta;
                    else
                        ctx.g2 = eta;
                    info.unit_index *= q;
                    found = changed = true;
                }
            }
            if (found) break;  // re-derive the bound against the enlarged lattice
        }
        if (++refinements > 64) throw std::runtime_error("saturate_unit_group: refinement budget exhausted");
    }
    info.reg_full = ctx.regulator();
    return info;
}

}  // namespace scf
