#include "scf/refdata.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "scf/classno.hpp"

namespace scf {

// Raw table text compiled in at build time (see data/ and CMake).
extern const char* kReferenceTablesText;
extern const char* kSection3RowsText;

std::string mod_tag_of(i64 m) {
    i64 m3 = ((m % 3) + 3) % 3;
    if (m3 != 0) return "n0mod3";
    i64 m9 = ((m % 9) + 9) % 9;
    if (m9 == 0) return "0mod9";
    if (m9 == 6) return "6mod9";
    i64 m27 = ((m % 27) + 27) % 27;
    return std::to_string(m27) + "mod27";
}

namespace {

std::vector<std::pair<u64, int>> parse_factor_string(const std::string& s) {
    std::vector<std::pair<u64, int>> out;
    std::stringstream ss(s);
    std::string term;
    while (std::getline(ss, term, '*')) {
        auto caret = term.find('^');
        if (caret == std::string::npos) throw std::runtime_error("refdata: bad factor term " + term);
        out.push_back({std::stoull(term.substr(0, caret)), std::stoi(term.substr(caret + 1))});
    }
    return out;
}

}  // namespace

std::string render_factorization(const std::vector<std::pair<u64, int>>& factors) {
    std::string s;
    for (const auto& [p, e] : factors) {
        if (!s.empty()) s += '*';
        s += std::to_string(p) + "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

std::string render_factorization(const Factorization& f) {
    std::vector<std::pair<u64, int>> v;
    for (const auto& pp : f.factors) v.push_back({(u64)pp.prime, pp.exp});
    return render_factorization(v);
}

std::vector<ReferenceRow> parse_reference_rows(const std::string& text) {
    std::vector<ReferenceRow> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ls(line);
        ReferenceRow r;
        std::string fac;
        if (!(ls >> r.table_id >> r.m >> r.h >> r.mod_tag >> fac))
            throw std::runtime_error("refdata: malformed row: " + line);
        r.D_factors = parse_factor_string(fac);
        rows.push_back(std::move(r));
    }
    return rows;
}

const std::vector<ReferenceRow>& reference_rows() {
    static const std::vector<ReferenceRow> rows = [] {
        auto rs = parse_reference_rows(kReferenceTablesText);
        if (rs.size() != 138) throw std::runtime_error("refdata: expected 138 rows");
        static const std::array<u64, 8> perh = {0, 26, 31, 11, 10, 36, 21, 3};
        std::array<u64, 8> got{};
        static const std::array<u64, 8> hof = {0, 1, 3, 4, 7, 9, 12, 13};
        for (const auto& r : rs) {
            if (r.table_id < 1 || r.table_id > 7) throw std::runtime_error("refdata: bad table id");
            ++got[r.table_id];
            if (r.h != hof[r.table_id]) throw std::runtime_error("refdata: table/h mismatch");
            u128 D = 1;
            for (const auto& [p, e] : r.D_factors)
                for (int i = 0; i < e; ++i) D *= p;
            if (D != (u128)((i128)r.m * r.m + 3 * (i128)r.m + 9))
                throw std::runtime_error("refdata: factorization does not recompose at m = " + std::to_string(r.m));
            if (r.mod_tag != mod_tag_of(r.m))
                throw std::runtime_error("refdata: mod-27 tag mismatch at m = " + std::to_string(r.m));
        }
        for (int t = 1; t <= 7; ++t)
            if (got[t] != perh[t]) throw std::runtime_error("refdata: per-table count mismatch");
        return rs;
    }();
    return rows;
}

const std::vector<Section3Row>& section3_rows() {
    static const std::vector<Section3Row> rows = [] {
        std::vector<Section3Row> rs;
        std::stringstream ss{std::string(kSection3RowsText)};
        std::string line;
        static const u64 divisor[8] = {1, 1, 9, 9, 27, 27, 27, 27};
        static const u64 counts[8] = {149, 308, 56, 67, 34, 45, 45, 97};
        u64 got[8] = {};
        while (std::getline(ss, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::stringstream ls(line);
            Section3Row r;
            if (!(ls >> r.section >> r.m >> r.printed >> r.h))
                throw std::runtime_error("refdata: malformed section3 row: " + line);
            u128 D = (u128)((i128)r.m * r.m + 3 * (i128)r.m + 9);
            if ((u128)r.printed * divisor[r.section] != D)
                throw std::runtime_error("refdata: section3 column mismatch at m = " + std::to_string(r.m));
            if (r.h < 1 || r.h > 1000) throw std::runtime_error("refdata: section3 h out of range");
            ++got[r.section];
            rs.push_back(r);
        }
        for (int s = 0; s < 8; ++s)
            if (got[s] != counts[s]) throw std::runtime_error("refdata: section3 count mismatch");
        return rs;
    }();
    return rows;
}

const ReferenceSets& reference_sets() {
    static const ReferenceSets sets = [] {
        ReferenceSets s;
        s.coincidence_pairs = {{-1, 5}, {-1, 12}, {-1, 1259}, {5, 12},  {5, 1259}, {12, 1259},
                               {0, 3},  {0, 54},  {3, 54},    {1, 66},  {2, 2389}};
        s.coincidence_conductor = {{-1, 7}, {5, 7},  {12, 7}, {1259, 7}, {0, 9},    {3, 9},
                                   {54, 9}, {1, 13}, {66, 13}, {2, 19},  {2389, 19}};
        s.coincidence_m_values = {-1, 0, 1, 2, 3, 5, 12, 54, 66, 1259, 2389};
        s.section3_counts = {149, 308, 56, 67, 34, 45, 45, 97};
        s.allowed_h_lt43 = {1, 3, 4, 7, 9, 12, 13, 16, 19, 21, 25, 27, 28, 31, 36, 37, 39};

        if (s.coincidence_pairs.size() != 11) throw std::runtime_error("refdata: |S| != 11");
        u64 t1 = 0, t2 = 0, t3 = 0;
        for (int i = 0; i < 4; ++i) t1 += s.section3_counts[i];
        for (int i = 4; i < 6; ++i) t2 += s.section3_counts[i];
        for (int i = 6; i < 8; ++i) t3 += s.section3_counts[i];
        if (t1 + 1 != 581 || t2 + 1 != 80 || t3 != 142) throw std::runtime_error("refdata: section3 totals");

        // admissible list must equal the representability filter h = A^2 + 3B^2
        std::vector<u64> brute;
        for (u64 h = 1; h < 43; ++h)
            if (allowed_small_h(h)) brute.push_back(h);
        if (brute != s.allowed_h_lt43) throw std::runtime_error("refdata: admissible h list mismatch");

        for (const auto& r : reference_rows()) s.h16_buckets[r.h].push_back(r.m);
        for (auto& [h, v] : s.h16_buckets) std::sort(v.begin(), v.end());

        s.typeA_h1 = {-1, 1, 2, 4, 7, 8, 10};
        s.typeA_h4 = {11, 17, 23, 25, 29};
        s.typeA_h7 = {16, 28, 32, 38, 43, 49};
        s.typeA_h13 = {31};
        s.typeB_h1 = {12, 39, 93};
        s.typeB_h4 = {120, 228};
        s.typeB_h7 = {255, 309};
        s.typeB_h13 = {498};
        s.typeB_h28 = {336, 822};
        s.typeB_h31 = {795};
        s.typeB_h37 = {471};
        s.h3_prime_pair = {13, 14, 19, 20, 22};
        s.h3_nine_p = {6, 9, 15, 18};
        return s;
    }();
    return sets;
}

}  // namespace scf
