#pragma once

// Class number via h = f |L(1,chi)|^2 / (4 R). The explicit-unit regulator
// Reg(E) equals u * R for the unit index u = [O^x : E]; u is 1 for monogenic
// fields and resolved by saturation otherwise, so the reported H_rounded is
// the class number itself.

#include <optional>

#include "scf/analytic.hpp"
#include "scf/character.hpp"
#include "scf/units.hpp"

namespace scf {

struct ConstraintRecord {
    bool evaluated = false;   // true when h was resolved and the checks ran
    bool mod3 = true;         // h = 0 or 1 (mod 3)
    bool allowed_small = true;  // membership in the admissible h < 43 list
    bool cong_i = true;       // h = 1 (mod 3)  <=>  f = 9 or f prime
    bool cong_ii = true;      // 3^(r-1) | h for f with r local factors
    bool all_pass() const { return mod3 && allowed_small && cong_i && cong_ii; }
};

struct ClassNumberReport {
    SimplestCubicField field;
    CubicCharacterPair chi;
    LValue l_value;
    double reg_E = 0;            // regulator of <alpha, alpha+1>
    double H_raw = 0;            // f |L|^2 / (4 reg_E) = h / u
    u64 unit_index = 1;          // u, proven (index 1) or saturated
    bool unit_index_proven = false;
    u64 H_rounded = 0;           // resolved class number h
    double round_residual = 0;   // H_raw * u - H_rounded
    bool resolved = false;
    bool escalated = false;      // extended-precision L-sum was needed
    ConstraintRecord constraints;
    std::optional<u64> unit_index_hint;  // set by cross_check
};

ClassNumberReport class_number(i64 m);

// Membership in the set of class numbers < 43 admissible for the family
// (h = A^2 + 3B^2; equivalently every prime = 2 mod 3 divides h evenly).
bool allowed_small_h(u64 h);

// The explicit admissible list; equality with the brute-force filter is
// asserted by refdata validation.
const std::vector<u64>& allowed_h_list();

ConstraintRecord congruence_checks(const ClassNumberReport& rep);

// Validates H_raw against a reference class number: expected_h / H_raw must be
// a positive integer (the unit index), and 1 when the field is monogenic.
// Returns u and records it in the report. Throws on a non-integer ratio.
u64 cross_check(ClassNumberReport& rep, u64 expected_h);

}  // namespace scf
