#pragma once

// Exact integer arithmetic services: primality, factorization, cubefree
// decomposition, cubic residue classes. Everything here is a pure function
// and safe for concurrent use.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scf {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

std::string to_string_u128(u128 v);
std::string to_string_i128(i128 v);

struct PrimePower {
    u128 prime;
    int exp;
};

struct Factorization {
    u128 value = 1;
    std::vector<PrimePower> factors;  // primes strictly increasing, exponents >= 1
    bool probable = false;            // a factor above 2^64 passed only a fixed MR battery

    u128 recompose() const;
    // exponent of p in value, 0 if absent
    int exponent_of(u128 p) const;
};

// Deterministic for all n < 2^64 (Miller-Rabin over the first 12 prime bases);
// above 2^64 a fixed extended witness set is used and callers should treat the
// answer as "probable prime".
bool is_prime(u128 n);

// Complete factorization for 1 <= n < 2^126. Trial division over sieved small
// primes, then Pollard-Brent rho with a fixed seed sequence (seed increments on
// retry). Throws if a cofactor cannot be split within the retry budget.
Factorization factorize(u128 n);

// n = b * c^3 with b cubefree; unique.
std::pair<u128, u128> cubefree_decompose(u128 n);
std::pair<u128, u128> cubefree_decompose(const Factorization& f);

// Classification of a mod p by the cubic residue character, p prime = 1 (mod 3).
// "Omega" is the class of the smaller nontrivial cube root of unity in [0, p);
// only the conjugation class is meaningful downstream.
enum class CubicClass : std::uint8_t { Unity = 0, Omega = 1, OmegaBar = 2, Zero = 3 };

CubicClass cubic_residue_class(i64 a, u64 p);

// Smaller root r of x^2 + x + 1 mod p (the "omega" label); p prime = 1 (mod 3).
u64 omega_root(u64 p);

// Shared modular kernels.
u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 mod);
u64 isqrt_u64(u64 n);

inline u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Montgomery arithmetic for a fixed odd modulus; used in powmod-heavy loops.
struct Montgomery {
    u64 n = 0, ninv = 0, r2 = 0;
    explicit Montgomery(u64 modulus);
    u64 to(u64 x) const { return redc((u128)x * r2); }
    u64 from(u64 x) const { return redc(x); }
    u64 mul(u64 a, u64 b) const { return redc((u128)a * b); }
    u64 pow(u64 a_mont, u64 e) const;
    u64 redc(u128 t) const {
        u64 mchi = (u64)t * ninv;
        u128 s = t + (u128)mchi * n;
        u64 r = (u64)(s >> 64);
        return r >= n ? r - n : r;
    }
};

// Primes below 10^6 (ascending), built once, shared.
const std::vector<u32>& small_primes();

// All positive divisors of value, ascending.
std::vector<u64> divisors_u64(const Factorization& f);

}  // namespace scf
