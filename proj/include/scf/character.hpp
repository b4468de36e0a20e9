#pragma once

// Primitive cubic Dirichlet characters modulo a conductor f of the shape
// 9, p1...pr, or 9*p1...p_{r-1} with distinct primes p = 1 (mod 6).
// A character pair (chi, chibar) is represented up to conjugation: local
// components sorted by modulus with the first exponent fixed to 1.

#include <string>
#include <vector>

#include "scf/arith.hpp"
#include "scf/field.hpp"

namespace scf {

struct LocalComponent {
    u64 q = 0;          // prime-power factor of f: either 9 or a prime p = 1 (mod 6)
    bool is_nine = false;
    u64 omega = 0;      // for prime components: smaller root of x^2+x+1 mod p
};

struct CubicCharacterPair {
    u64 modulus = 0;
    std::vector<LocalComponent> locals;  // sorted by q
    std::vector<int> eps;                // exponent in {1,2} per local, eps[0] == 1

    bool operator==(const CubicCharacterPair& o) const {
        return modulus == o.modulus && eps == o.eps;
    }
    std::string class_id() const;
};

// Index of a in the local cubic character: 0,1,2 for units, 3 for non-coprime.
int local_exponent(const LocalComponent& lc, u64 a);

// The 2^(r-1) conjugation classes of primitive cubic characters mod f
// (exactly 1 when f = 9). Throws on a conductor of invalid shape.
std::vector<CubicCharacterPair> enumerate_pairs(u64 f);

// chi(a) in {0, 1, omega, omegabar}; conj selects the conjugate representative.
CubicClass evaluate(const CubicCharacterPair& chi, bool conj, i64 a);

// Number of roots of f_m modulo prime q not dividing disc: 0 or 3.
bool splits_completely(i64 m, u64 q);

// The unique pair whose kernel matches the splitting behaviour of f_m: for
// probe primes q not dividing 3D, chi(q) = 1 iff q splits completely in L_m.
// Throws if zero or more than one class survives 100 probes.
CubicCharacterPair select_for_field(const SimplestCubicField& field);

}  // namespace scf
