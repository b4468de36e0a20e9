#pragma once

// Range drivers: the h <= 1000 per-subcase enumerations, the h < 16 sweep
// with the lower-bound pre-filter, and verification of the embedded tables.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scf/classno.hpp"

namespace scf {

enum class Subcase { None, PrimeF, CompositeF, NineP, NineS };

Subcase subcase_from_string(const std::string& s);
const char* subcase_name(Subcase s);

struct ScanRow {
    i64 m = 0;
    u64 D = 0;
    std::string D_factors;  // "p^e*p^e"
    u64 conductor = 0;
    u64 index = 0;
    IndexClass index_class = IndexClass::One;
    std::optional<u64> h;   // empty when unresolved
    u64 unit_index = 1;
    bool constraints_pass = false;
    bool resolved = false;
};

struct ScanSummary {
    std::string filter;
    std::map<u64, u64> h_buckets;
    u64 total = 0;
    u64 unresolved = 0;
    i64 m_lo = 0, m_hi = 0;
    double seconds = 0;  // excluded from serialized output (determinism)
};

struct ScanResult {
    std::vector<ScanRow> rows;  // ascending m
    ScanSummary summary;
};

// The arithmetic filters of the h <= 1000 survey. index is 1, 3 or 27;
// Subcase::None adds the special rows (m = 0 for index 1, m = 3 for index 3).
bool scan_filter(int index, Subcase sub, i64 m);

// Rows with resolved h <= hmax (unresolved rows are kept and flagged).
ScanResult scan_small_class(i64 m_lo, i64 m_hi, int index, Subcase sub, u64 hmax, int threads = 0);

// Full-range sweep for h < 16. With prefilter, m is skipped when a valid
// lower bound already forces h >= 16; conductors come from a polynomial
// factor sieve over blocks of m.
ScanResult scan_h_below_16(i64 m_lo, i64 m_hi, bool prefilter = true, int threads = 0);

struct TableRowResult {
    i64 m = 0;
    bool pass = false;
    std::string stage;  // failing stage, empty when pass
    u64 unit_index = 1;
};

struct TableVerifyResult {
    std::vector<TableRowResult> rows;
    int passed = 0, failed = 0;
};

// Recomputes every embedded reference row: factorization, conductor, index,
// congruence tag, and the integer ratio h_table / H_raw (equal to 1 for
// monogenic rows).
TableVerifyResult verify_tables(int threads = 0);

// Conductor of m^2+3m+9 for every m in [lo, hi) by sieving the polynomial's
// prime factors; exposed for tests.
std::vector<u64> conductor_block(i64 lo, i64 hi);

int resolve_threads(int requested);

}  // namespace scf
