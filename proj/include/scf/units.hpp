#pragma once

// Regulator of the explicit unit subgroup E = <-1, alpha, alpha+1>, and the
// saturation of E inside the full unit group.

#include "scf/field.hpp"

namespace scf {

struct RegulatorReport {
    double reg_E = 0;
    double log_matrix[2][2] = {{0, 0}, {0, 0}};  // rows: alpha, alpha+1; cols: embeddings
    int precision_bits = 0;
};

// |det [[log|alpha_i|, log|alpha_i+1|]]| over the two largest embeddings.
RegulatorReport regulator_E(i64 m, int precision_bits = 64);

// Same determinant from an explicit embedding pair (i, j); used for the
// minor-invariance checks.
double regulator_from_embeddings(const RealRoots& roots, int i, int j);

// Cusick's lower bound for the regulator of a totally real cubic field of
// discriminant d: R > (log(d/4))^2 / 16.
double regulator_lower_bound(double field_disc);

struct UnitGroupInfo {
    double reg_E = 0;       // regulator of <alpha, alpha+1>
    double reg_full = 0;    // reg_E / unit_index
    u64 unit_index = 1;     // [O^x : E], certified by exact q-th root identities
    bool proven = false;    // true when index==1 theorem applies or saturation ran to its bound
};

// Enlarges <alpha, alpha+1> to the full unit group by testing q-th roots of
// alpha^a (alpha+1)^b for primes q up to 1.25 * reg_E / regulator_lower_bound.
// Each successful root is verified exactly in Q[X]/(f_m).
UnitGroupInfo saturate_unit_group(const SimplestCubicField& field);

}  // namespace scf
