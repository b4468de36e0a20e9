#include <doctest.h>

#include "scf/refdata.hpp"

using namespace scf;

TEST_SUITE("refdata") {

TEST_CASE("reference rows load and validate") {
    const auto& rows = reference_rows();
    CHECK(rows.size() == 138);
    int per_table[8] = {};
    for (const auto& r : rows) ++per_table[r.table_id];
    CHECK(per_table[1] == 26);
    CHECK(per_table[2] == 31);
    CHECK(per_table[3] == 11);
    CHECK(per_table[4] == 10);
    CHECK(per_table[5] == 36);
    CHECK(per_table[6] == 21);
    CHECK(per_table[7] == 3);
}

TEST_CASE("notable rows present") {
    auto find = [&](i64 m) -> const ReferenceRow* {
        for (const auto& r : reference_rows())
            if (r.m == m) return &r;
        return nullptr;
    };
    const ReferenceRow* r = find(506370);
    REQUIRE(r != nullptr);
    CHECK(r->h == 1);
    CHECK(render_factorization(r->D_factors) == "3^3*193^3*1321^1");
    r = find(6440111);
    REQUIRE(r != nullptr);
    CHECK(r->h == 4);
    CHECK(render_factorization(r->D_factors) == "7^3*229^3*10069^1");
    r = find(1376233);
    REQUIRE(r != nullptr);
    CHECK(r->h == 3);
    CHECK(render_factorization(r->D_factors) == "7^1*13^3*43^3*1549^1");
    r = find(12);  // the corrected row
    REQUIRE(r != nullptr);
    CHECK(r->h == 1);
    CHECK(r->mod_tag == "12mod27");
}

TEST_CASE("h = 13 bucket") {
    const auto& sets = reference_sets();
    CHECK(sets.h16_buckets.at(13) == std::vector<i64>{31, 498, 36435});
}

TEST_CASE("section 3 rows load and validate") {
    const auto& rows = section3_rows();
    CHECK(rows.size() == 801);
    u64 per[8] = {};
    for (const auto& r : rows) ++per[r.section];
    const auto& counts = reference_sets().section3_counts;
    for (int s = 0; s < 8; ++s) CHECK(per[s] == counts[s]);
    // the corrected index-27 h=1 triple
    std::vector<i64> h1_27;
    for (const auto& r : rows)
        if (r.section == 6 && r.h == 1) h1_27.push_back(r.m);
    CHECK(h1_27 == std::vector<i64>{12, 39, 93});
}

TEST_CASE("reference sets") {
    const auto& s = reference_sets();
    CHECK(s.coincidence_pairs.size() == 11);
    CHECK(s.coincidence_conductor.at(-1) == 7);
    CHECK(s.coincidence_conductor.at(54) == 9);
    CHECK(s.coincidence_conductor.at(66) == 13);
    CHECK(s.coincidence_conductor.at(2389) == 19);
    CHECK(s.allowed_h_lt43.size() == 17);
    CHECK(s.typeB_h1 == std::vector<i64>{12, 39, 93});
    CHECK(s.h3_prime_pair == std::vector<i64>{13, 14, 19, 20, 22});
    CHECK(s.h3_nine_p == std::vector<i64>{6, 9, 15, 18});
}

TEST_CASE("format parser rejects malformed rows") {
    CHECK_THROWS(parse_reference_rows("1 7 1 n0mod3"));          // missing factorization
    CHECK_THROWS(parse_reference_rows("1 7 1 n0mod3 7"));        // missing exponent
    CHECK(parse_reference_rows("# comment\n\n1 7 1 n0mod3 7^1").size() == 1);
    auto rows = parse_reference_rows("3 11 4 n0mod3 163^1");
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].table_id == 3);
    CHECK(rows[0].m == 11);
    CHECK(rows[0].D_factors == std::vector<std::pair<u64, int>>{{163, 1}});
}

TEST_CASE("mod tags") {
    CHECK(mod_tag_of(-1) == "n0mod3");
    CHECK(mod_tag_of(0) == "0mod9");
    CHECK(mod_tag_of(6) == "6mod9");
    CHECK(mod_tag_of(3) == "3mod27");
    CHECK(mod_tag_of(12) == "12mod27");
    CHECK(mod_tag_of(21) == "21mod27");
    CHECK(mod_tag_of(57) == "3mod27");
}

}  // TEST_SUITE
