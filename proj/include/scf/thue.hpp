#pragma once

// The binary cubic form F_m(X,Y) = X^3 - m X^2 Y - (m+3) X Y^2 - Y^3,
// bounded divisor-constrained Thue search, Galois orbits, and detection of
// field coincidences L_m = L_n through the target formula
//   N = m + D x y (x+y) / F_m(x,y).

#include <map>
#include <vector>

#include "scf/character.hpp"
#include "scf/field.hpp"

namespace scf {

struct ThueSolution {
    i64 m = 0;
    i64 x = 0, y = 0;
    u64 lambda = 0;              // F_m(x, y), a positive divisor of D
    bool trivial = false;        // xy(x+y) == 0
    std::pair<i64, i64> orbit_rep;  // lexicographically smallest of the 3-orbit
    i64 target_n = 0;            // normalized coincidence target (nontrivial only)
    bool target_valid = false;   // lambda divides D, so the target is exact
};

// Exact value of F_m; throws if it exceeds the i128 range (never for the
// supported |x|,|y|,|m| <= 2^40).
i128 thue_eval(i64 m, i64 x, i64 y);

// Orbit of the Galois action (x, y) -> (y, -x-y).
std::pair<i64, i64> orbit_representative(i64 x, i64 y);

// All (x, y) with max(|x|,|y|) <= B and F_m(x,y) in lambdas (positive values),
// in ascending (y, x) order. lambdas must be sorted ascending.
std::vector<ThueSolution> solve_bounded(i64 m, const std::vector<u64>& lambdas, i64 B);

struct CoincidenceTarget {
    i64 N = 0;
    i64 n = 0;  // normalize(N)
};

// Requires xy(x+y) != 0 and F_m(x,y) a positive divisor of D (then the
// division is exact). Throws otherwise.
CoincidenceTarget coincidence_target(i64 m, i64 x, i64 y);

struct CoincidencePair {
    i64 m = 0, n = 0;  // m < n
    u64 shared_conductor = 0;
    std::vector<ThueSolution> witnesses_m, witnesses_n;
};

// All coincident pairs m < n <= M, found by the Thue search with bound B and
// cross-certified by equality of the selected character pairs. A mismatch
// between the two certification routes throws.
std::vector<CoincidencePair> coincidence_scan(i64 M, i64 B = 2000, int threads = 1);

struct Count66Result {
    int total = 0;
    // per (m, normalized target n): number of solutions on the m side
    std::map<std::pair<i64, i64>, int> per_endpoint;
    bool orbit_structure_ok = false;  // every endpoint group is one full 3-orbit
};

// Nontrivial solution count over the coincidence m-set; 66 when the bound
// captures every solution. Optionally restricted to a sub-set of m values.
Count66Result count_nontrivial_66(i64 B = 2000, const std::vector<i64>* restrict_m = nullptr);

// Largest m that can participate in a coincidence; ceiling for exhaustive scans.
constexpr i64 kCoincidenceCeiling = 35731;

}  // namespace scf
