#include "scf/arith.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <numeric>

namespace scf {

std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + (int)(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string to_string_i128(i128 v) {
    if (v < 0) return "-" + to_string_u128((u128)(-v));
    return to_string_u128((u128)v);
}

u128 Factorization::recompose() const {
    u128 r = 1;
    for (const auto& [p, e] : factors)
        for (int i = 0; i < e; ++i) r *= p;
    return r;
}

int Factorization::exponent_of(u128 p) const {
    for (const auto& f : factors)
        if (f.prime == p) return f.exp;
    return 0;
}

u64 mul_mod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 mod) {
    if (mod == 1) return 0;
    u64 r = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = (u64)std::sqrt((double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n && (r + 1) != 0) ++r;
    return r;
}

Montgomery::Montgomery(u64 modulus) : n(modulus) {
    assert(n & 1);
    // ninv = -n^{-1} mod 2^64 by Newton iteration
    u64 inv = n;
    for (int i = 0; i < 5; ++i) inv *= 2 - n * inv;
    ninv = ~inv + 1;  // -(n^{-1})
    // r2 = 2^128 mod n
    u128 r = (u128)1 << 64;
    r %= n;
    r2 = (u64)((r * r) % n);
}

u64 Montgomery::pow(u64 a_mont, u64 e) const {
    u64 r = to(1);
    u64 b = a_mont;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

namespace {

// 128-bit modular multiply for the (rare) inputs above 2^64: shift-add.
u128 mul_mod_u128(u128 a, u128 b, u128 m) {
    a %= m;
    b %= m;
    if (a == 0 || b == 0) return 0;
    if (m <= (u128)UINT64_MAX) return (u128)mul_mod((u64)a, (u64)b, (u64)m);
    u128 r = 0;
    while (b > 0) {
        if (b & 1) {
            r += a;
            if (r >= m) r -= m;
        }
        a <<= 1;
        if (a >= m) a -= m;
        b >>= 1;
    }
    return r;
}

u128 pow_mod_u128(u128 base, u128 exp, u128 mod) {
    u128 r = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = mul_mod_u128(r, base, mod);
        base = mul_mod_u128(base, base, mod);
        exp >>= 1;
    }
    return r;
}

bool miller_rabin_u64(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    Montgomery mg(n);
    u64 x = mg.pow(mg.to(a % n), d);
    u64 one = mg.to(1), neg = mg.to(n - 1);
    if (x == one || x == neg) return true;
    for (int i = 1; i < s; ++i) {
        x = mg.mul(x, x);
        if (x == neg) return true;
    }
    return false;
}

bool miller_rabin_u128(u128 n, u128 a) {
    a %= n;
    if (a == 0) return true;
    u128 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    u128 x = pow_mod_u128(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod_u128(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// First 12 primes: deterministic for all n < 2^64 (covers up to 3.18e23).
constexpr std::array<u64, 12> kWitness64 = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
// Extended fixed battery for n >= 2^64 (probable-prime verdict).
constexpr std::array<u64, 20> kWitnessBig = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                             31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

u64 brent_rho(u64 n, u64 seed) {
    // Brent's variant of Pollard rho with batched gcd.
    Montgomery mg(n);
    u64 c = mg.to(seed);
    u64 y = mg.to(seed + 1), m = 128, g = 1, q = mg.to(1), x = 0, ys = 0;
    u64 r = 1;
    auto step = [&](u64 v) {
        u64 t = mg.mul(v, v);
        t += c;
        if (t >= n) t -= n;
        return t;
    };
    do {
        x = y;
        for (u64 i = 0; i < r; ++i) y = step(y);
        u64 k = 0;
        while (k < r && g == 1) {
            ys = y;
            u64 lim = std::min(m, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = step(y);
                u64 diff = x > y ? x - y : y - x;
                if (diff == 0) return n;  // full cycle mod n: this seed fails
                q = mg.mul(q, diff);
            }
            // q is a unit multiple of the true product mod n; gcd unaffected
            g = std::gcd(q, n);
            k += m;
        }
        r <<= 1;
        if (r == 0) return n;
    } while (g == 1);
    if (g == n) {
        // backtrack
        g = 1;
        do {
            ys = step(ys);
            u64 diff = x > ys ? x - ys : ys - x;
            if (diff == 0) break;
            g = std::gcd(diff, n);
        } while (g == 1);
    }
    return g;
}

u128 brent_rho_u128(u128 n, u128 seed) {
    u128 x = seed, y = seed, c = (seed >> 1) | 1, d = 1;
    auto step = [&](u128 v) { return (mul_mod_u128(v, v, n) + c) % n; };
    int limit = 1 << 22;
    while (limit-- > 0) {
        x = step(x);
        y = step(step(y));
        u128 diff = x > y ? x - y : y - x;
        if (diff == 0) return n;
        d = gcd_u128(diff, n);
        if (d != 1) return d;
    }
    return n;
}

void factor_rec(u128 n, std::vector<u128>& out, int depth) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    if (depth > 96) throw std::runtime_error("factorize: recursion budget exhausted");
    u128 d = n;
    if (n <= (u128)UINT64_MAX) {
        u64 n64 = (u64)n;
        if ((n64 & 1) == 0) {
            out.push_back(2);
            factor_rec(n >> 1, out, depth + 1);
            return;
        }
        // perfect square shortcut: rho is slow on p^2
        u64 s = isqrt_u64(n64);
        if (s * s == n64) {
            factor_rec(s, out, depth + 1);
            factor_rec(s, out, depth + 1);
            return;
        }
        for (u64 seed = 3; ; seed += 2) {
            u64 g = brent_rho(n64, seed);
            if (g != 1 && g != n64) { d = g; break; }
            if (seed > 3 + 2 * 64) throw std::runtime_error("factorize: rho failed on " + to_string_u128(n));
        }
    } else {
        for (u128 seed = 3; ; seed += 2) {
            u128 g = brent_rho_u128(n, seed);
            if (g != 1 && g != n) { d = g; break; }
            if (seed > 3 + 2 * 64) throw std::runtime_error("factorize: rho failed on " + to_string_u128(n));
        }
    }
    factor_rec(d, out, depth + 1);
    factor_rec(n / d, out, depth + 1);
}

}  // namespace

bool is_prime(u128 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n <= (u128)UINT64_MAX) {
        u64 n64 = (u64)n;
        for (u64 a : kWitness64)
            if (!miller_rabin_u64(n64, a)) return false;
        return true;
    }
    for (u64 a : kWitnessBig)
        if (!miller_rabin_u128(n, a)) return false;
    return true;  // probable prime; factorize() marks the result accordingly
}

const std::vector<u32>& small_primes() {
    static std::vector<u32> primes = [] {
        const u32 limit = 1000000;
        std::vector<bool> comp(limit + 1, false);
        std::vector<u32> out;
        for (u32 i = 2; i <= limit; ++i) {
            if (!comp[i]) {
                out.push_back(i);
                for (u64 j = (u64)i * i; j <= limit; j += i) comp[j] = true;
            }
        }
        return out;
    }();
    return primes;
}

Factorization factorize(u128 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    if (n >> 126) throw std::invalid_argument("factorize: n out of range");
    Factorization out;
    out.value = n;
    if (n == 1) return out;

    u128 rem = n;
    std::vector<u128> primes_found;
    for (u32 p : small_primes()) {
        if ((u128)p * p * p > rem) break;  // remaining part has at most 2 prime factors
        while (rem % p == 0) {
            primes_found.push_back(p);
            rem /= p;
        }
    }
    if (rem > 1) {
        if (is_prime(rem)) {
            primes_found.push_back(rem);
        } else if (rem <= (u128)UINT64_MAX && [&] {
                       u64 s = isqrt_u64((u64)rem);
                       return (u128)s * s == rem;
                   }()) {
            u64 s = isqrt_u64((u64)rem);
            primes_found.push_back(s);
            primes_found.push_back(s);
        } else {
            factor_rec(rem, primes_found, 0);
        }
    }
    std::sort(primes_found.begin(), primes_found.end());
    for (u128 p : primes_found) {
        if (!out.factors.empty() && out.factors.back().prime == p)
            out.factors.back().exp++;
        else
            out.factors.push_back({p, 1});
        if (p > (u128)UINT64_MAX) out.probable = true;
    }
    // never return a partial factorization
    if (out.recompose() != n) throw std::runtime_error("factorize: recomposition mismatch for " + to_string_u128(n));
    for (const auto& f : out.factors)
        if (!is_prime(f.prime))
            throw std::runtime_error("factorize: composite alleged factor " + to_string_u128(f.prime));
    return out;
}

std::pair<u128, u128> cubefree_decompose(const Factorization& f) {
    u128 b = 1, c = 1;
    for (const auto& [p, e] : f.factors) {
        for (int i = 0; i < e % 3; ++i) b *= p;
        for (int i = 0; i < e / 3; ++i) c *= p;
    }
    return {b, c};
}

std::pair<u128, u128> cubefree_decompose(u128 n) { return cubefree_decompose(factorize(n)); }

u64 omega_root(u64 p) {
    if (p % 3 != 1) throw std::invalid_argument("omega_root: p must be 1 mod 3");
    Montgomery mg(p);
    for (u64 g = 2;; ++g) {
        u64 t = mg.from(mg.pow(mg.to(g), (p - 1) / 3));
        if (t != 1) {
            u64 other = p - 1 - t;  // r^2 = -r-1 mod p
            return std::min(t, other);
        }
    }
}

CubicClass cubic_residue_class(i64 a, u64 p) {
    if (p % 3 != 1 || !is_prime(p)) throw std::invalid_argument("cubic_residue_class: p must be prime, 1 mod 3");
    u64 r = ((a % (i64)p) + (i64)p) % (i64)p;
    if (r == 0) return CubicClass::Zero;
    u64 t = pow_mod(r, (p - 1) / 3, p);
    if (t == 1) return CubicClass::Unity;
    u64 w = omega_root(p);
    if (t == w) return CubicClass::Omega;
    assert(t == p - 1 - w);
    return CubicClass::OmegaBar;
}

std::vector<u64> divisors_u64(const Factorization& f) {
    std::vector<u64> divs{1};
    for (const auto& [p, e] : f.factors) {
        size_t n = divs.size();
        u64 pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= (u64)p;
            for (size_t j = 0; j < n; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace scf
