#pragma once

// Embedded machine-readable reference results used as golden oracles:
// the 138 rows of the h < 16 tables, the per-subcase enumeration rows of the
// h <= 1000 survey, and assorted small sets (coincidence pairs, admissible
// class numbers, special Thue solutions).

#include <array>
#include <map>
#include <string>
#include <vector>

#include "scf/arith.hpp"

namespace scf {

struct ReferenceRow {
    int table_id = 0;  // 1..7 for h = 1,3,4,7,9,12,13
    i64 m = 0;
    u64 h = 0;
    std::string mod_tag;  // congruence class of m: n0mod3 / 0mod9 / 6mod9 / 3mod27 / 12mod27 / 21mod27
    std::vector<std::pair<u64, int>> D_factors;
};

struct Section3Row {
    int section = 0;  // 0..7, see data header
    i64 m = 0;
    u64 printed = 0;  // D / {1,1,9,9,27,27,27,27}
    u64 h = 0;
};

struct ReferenceSets {
    std::vector<std::pair<i64, i64>> coincidence_pairs;       // |S| = 11
    std::map<i64, u64> coincidence_conductor;                 // representative m -> f
    std::vector<i64> coincidence_m_values;                    // the 11 participating m
    std::array<u64, 8> section3_counts;                       // 149,308,56,67,34,45,45,97
    std::vector<u64> allowed_h_lt43;                          // 17 values
    std::map<u64, std::vector<i64>> h16_buckets;              // h -> sorted m list (from the tables)
    // type-A / type-B small class number lists (with the m = 12 correction applied)
    std::vector<i64> typeA_h1, typeA_h4, typeA_h7, typeA_h13;
    std::vector<i64> typeB_h1, typeB_h4, typeB_h7, typeB_h13, typeB_h28, typeB_h31, typeB_h37;
    std::vector<i64> h3_prime_pair, h3_nine_p;
};

// Parsed and validated on first use; any invariant failure throws.
const std::vector<ReferenceRow>& reference_rows();
const std::vector<Section3Row>& section3_rows();
const ReferenceSets& reference_sets();

// Parses the bundled plain-text tables (whitespace-separated columns,
// '#' comments); exposed for the file-format tests.
std::vector<ReferenceRow> parse_reference_rows(const std::string& text);

// Congruence tag of m: n0mod3 / 0mod9 / 6mod9 / 3mod27 / 12mod27 / 21mod27.
std::string mod_tag_of(i64 m);

// "p^e*p^e" rendering used by the data files and the CSV output.
std::string render_factorization(const std::vector<std::pair<u64, int>>& factors);
std::string render_factorization(const Factorization& f);

}  // namespace scf
