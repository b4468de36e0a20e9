#include <doctest.h>

#include <set>

#include "scf/refdata.hpp"
#include "scf/scan.hpp"

using namespace scf;

TEST_SUITE("scan") {

TEST_CASE("index-1 subcases partition the survivors") {
    for (i64 m = -1; m <= 2000; ++m) {
        int hits = 0;
        for (Subcase s : {Subcase::PrimeF, Subcase::CompositeF, Subcase::NineP, Subcase::NineS})
            if (scan_filter(1, s, m)) ++hits;
        CHECK(hits <= 1);
        bool any = hits == 1 || m == 0;
        CHECK(scan_filter(1, Subcase::None, m) == any);
        // subcase filters admit exactly the index-1 fields of their shape
        if (any) CHECK(build_field(m).index == 1);
    }
}

TEST_CASE("filters agree with the index classification") {
    for (i64 m = -1; m <= 3000; ++m) {
        if (scan_filter(3, Subcase::None, m)) CHECK(build_field(m).index == 3);
        if (scan_filter(27, Subcase::None, m)) CHECK(build_field(m).index == 27);
    }
}

TEST_CASE("conductor sieve matches build_field") {
    auto f = conductor_block(-1, 3000);
    for (i64 m = -1; m < 3000; ++m) REQUIRE(f[(size_t)(m + 1)] == build_field(m).conductor);
    // a window far out
    auto g = conductor_block(1000000, 1000500);
    for (i64 m = 1000000; m < 1000500; ++m) REQUIRE(g[(size_t)(m - 1000000)] == build_field(m).conductor);
}

TEST_CASE("small scan reproduces the printed rows") {
    // index 1, prime conductor, m <= 150
    ScanResult r = scan_small_class(-1, 150, 1, Subcase::PrimeF, 1000, 1);
    std::set<std::pair<i64, u64>> got;
    for (const auto& row : r.rows) {
        REQUIRE(row.resolved);
        got.insert({row.m, *row.h});
    }
    std::set<std::pair<i64, u64>> want;
    for (const auto& s : section3_rows())
        if (s.section == 0 && s.m <= 150) want.insert({s.m, s.h});
    CHECK(got == want);
}

TEST_CASE("scan determinism under threading") {
    ScanResult a = scan_small_class(-1, 400, 1, Subcase::PrimeF, 1000, 1);
    ScanResult b = scan_small_class(-1, 400, 1, Subcase::PrimeF, 1000, 3);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].m == b.rows[i].m);
        CHECK(a.rows[i].h == b.rows[i].h);
        CHECK(a.rows[i].D_factors == b.rows[i].D_factors);
    }
}

TEST_CASE("h16 short range with and without the prefilter") {
    ScanResult pre = scan_h_below_16(-1, 500, true, 1);
    ScanResult all = scan_h_below_16(-1, 500, false, 1);
    REQUIRE(pre.rows.size() == all.rows.size());
    for (size_t i = 0; i < pre.rows.size(); ++i) {
        CHECK(pre.rows[i].m == all.rows[i].m);
        CHECK(pre.rows[i].h == all.rows[i].h);
    }
    std::set<i64> got;
    for (const auto& r : pre.rows) got.insert(r.m);
    std::set<i64> want;
    for (const auto& ref : reference_rows())
        if (ref.m <= 500) want.insert(ref.m);
    CHECK(got == want);
}

TEST_CASE("verify_tables passes on every row") {
    TableVerifyResult r = verify_tables(1);
    CHECK(r.passed == 138);
    CHECK(r.failed == 0);
    for (const auto& row : r.rows)
        if (!row.pass) MESSAGE("failed m=", row.m, " stage=", row.stage);
}

TEST_CASE("degenerate ranges") {
    CHECK(scan_small_class(10, 5, 1, Subcase::None, 1000, 1).rows.empty());
    CHECK(scan_h_below_16(10, 5, true, 1).rows.empty());
}

TEST_CASE("subcase parsing") {
    CHECK(subcase_from_string("prime_f") == Subcase::PrimeF);
    CHECK(subcase_from_string("all") == Subcase::None);
    CHECK_THROWS(subcase_from_string("bogus"));
    CHECK_THROWS(scan_filter(3, Subcase::PrimeF, 21));
    CHECK_THROWS(scan_filter(2, Subcase::None, 21));
}

}  // TEST_SUITE
