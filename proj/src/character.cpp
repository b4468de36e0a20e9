#include "scf/character.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>

namespace scf {

namespace {

// order-3 character of (Z/9)^x with kernel {1, 8}; label chi(2) = omega
constexpr std::array<int, 9> kMod9Exp = {
    /*0*/ 3, /*1*/ 0, /*2*/ 1, /*3*/ 3, /*4*/ 2, /*5*/ 2, /*6*/ 3, /*7*/ 1, /*8*/ 0};

}  // namespace

std::string CubicCharacterPair::class_id() const {
    std::string s = std::to_string(modulus) + ":";
    for (int e : eps) s += char('0' + e);
    return s;
}

int local_exponent(const LocalComponent& lc, u64 a) {
    if (lc.is_nine) return kMod9Exp[a % 9];
    u64 p = lc.q;
    u64 r = a % p;
    if (r == 0) return 3;
    u64 t = pow_mod(r, (p - 1) / 3, p);
    if (t == 1) return 0;
    return t == lc.omega ? 1 : 2;
}

std::vector<CubicCharacterPair> enumerate_pairs(u64 f) {
    std::vector<LocalComponent> locals;
    u64 rest = f;
    if (f % 9 == 0) {
        locals.push_back({9, true, 0});
        rest = f / 9;
    }
    if (rest % 3 == 0) throw std::invalid_argument("enumerate_pairs: invalid conductor shape");
    for (const auto& [p, e] : factorize(rest).factors) {
        if (e != 1 || p % 6 != 1) throw std::invalid_argument("enumerate_pairs: invalid conductor shape");
        locals.push_back({(u64)p, false, omega_root((u64)p)});
    }
    if (locals.empty()) throw std::invalid_argument("enumerate_pairs: invalid conductor shape");
    std::sort(locals.begin(), locals.end(), [](const LocalComponent& a, const LocalComponent& b) { return a.q < b.q; });

    size_t r = locals.size();
    std::vector<CubicCharacterPair> out;
    for (u64 mask = 0; mask < (u64(1) << (r - 1)); ++mask) {
        CubicCharacterPair chi;
        chi.modulus = f;
        chi.locals = locals;
        chi.eps.assign(r, 1);
        for (size_t i = 1; i < r; ++i)
            if (mask & (u64(1) << (i - 1))) chi.eps[i] = 2;
        out.push_back(std::move(chi));
    }
    return out;
}

CubicClass evaluate(const CubicCharacterPair& chi, bool conj, i64 a) {
    u64 r = (u64)(((a % (i64)chi.modulus) + (i64)chi.modulus) % (i64)chi.modulus);
    int e = 0;
    for (size_t i = 0; i < chi.locals.size(); ++i) {
        int le = local_exponent(chi.locals[i], r);
        if (le == 3) return CubicClass::Zero;
        e += chi.eps[i] * le;
    }
    e %= 3;
    if (conj) e = (3 - e) % 3;
    return (CubicClass)e;
}

namespace {

struct PolyMod {
    // elements of F_q[X]/(f_m), degree < 3
    u64 c0, c1, c2;
};

PolyMod poly_mul(const PolyMod& A, const PolyMod& B, u64 q, u64 mq, u64 mq3) {
    // f_m: X^3 = m X^2 + (m+3) X + 1 (coefficients already reduced mod q)
    u64 d0 = mul_mod(A.c0, B.c0, q);
    u64 d1 = (mul_mod(A.c0, B.c1, q) + mul_mod(A.c1, B.c0, q)) % q;
    u64 d2 = ((u128)mul_mod(A.c0, B.c2, q) + mul_mod(A.c1, B.c1, q) + mul_mod(A.c2, B.c0, q)) % q;
    u64 d3 = (mul_mod(A.c1, B.c2, q) + mul_mod(A.c2, B.c1, q)) % q;
    u64 d4 = mul_mod(A.c2, B.c2, q);
    // fold X^4 = m X^3 + (m+3) X^2 + X, then X^3
    d3 = (d3 + mul_mod(d4, mq, q)) % q;
    d2 = (d2 + mul_mod(d4, mq3, q)) % q;
    d1 = (d1 + d4) % q;
    d2 = (d2 + mul_mod(d3, mq, q)) % q;
    d1 = (d1 + mul_mod(d3, mq3, q)) % q;
    d0 = (d0 + d3) % q;
    return {d0, d1, d2};
}

}  // namespace

bool splits_completely(i64 m, u64 q) {
    // X^q mod (q, f_m) == X  <=>  f_m splits into linear factors (f_m separable mod q)
    u64 mq = (u64)(((m % (i64)q) + (i64)q) % (i64)q);
    u64 mq3 = (mq + 3) % q;
    PolyMod x{0, 1, 0};
    PolyMod r{1, 0, 0};
    u64 e = q;
    PolyMod base = x;
    while (e > 0) {
        if (e & 1) r = poly_mul(r, base, q, mq, mq3);
        base = poly_mul(base, base, q, mq, mq3);
        e >>= 1;
    }
    return r.c0 == 0 && r.c1 == 1 && r.c2 == 0;
}

CubicCharacterPair select_for_field(const SimplestCubicField& field) {
    auto candidates = enumerate_pairs(field.conductor);
    if (candidates.size() == 1) return candidates[0];

    std::vector<char> alive(candidates.size(), 1);
    size_t nalive = candidates.size();
    int probes = 0;
    for (u32 q : small_primes()) {
        if (q <= 3 || field.D % q == 0) continue;
        bool split = splits_completely(field.m, q);
        for (size_t i = 0; i < candidates.size(); ++i) {
            if (!alive[i]) continue;
            bool ker = evaluate(candidates[i], false, (i64)q) == CubicClass::Unity;
            if (ker != split) {
                alive[i] = 0;
                --nalive;
            }
        }
        if (nalive == 1) {
            for (size_t i = 0; i < candidates.size(); ++i)
                if (alive[i]) return candidates[i];
        }
        if (nalive == 0) throw std::runtime_error("select_for_field: no candidate matches splitting data");
        if (++probes >= 100) break;
    }
    throw std::runtime_error("select_for_field: ambiguous after 100 probes (m = " + std::to_string(field.m) + ")");
}

}  // namespace scf
