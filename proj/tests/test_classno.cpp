#include <doctest.h>

#include <cmath>

#include "scf/classno.hpp"

using namespace scf;

TEST_SUITE("classno") {

TEST_CASE("class number examples") {
    CHECK(class_number(-1).H_rounded == 1);
    CHECK(class_number(6).H_rounded == 3);
    CHECK(class_number(11).H_rounded == 4);
    CHECK(class_number(64).H_rounded == 16);
    CHECK(class_number(31).H_rounded == 13);
    for (i64 m : {-1, 6, 11, 64, 31}) {
        ClassNumberReport r = class_number(m);
        CHECK(r.resolved);
        CHECK(std::abs(r.round_residual) < 1e-3 * std::max(1.0, (double)r.H_rounded));
        CHECK_FALSE(r.escalated);
        CHECK(r.constraints.all_pass());
    }
}

TEST_CASE("admissible small class numbers") {
    CHECK(allowed_small_h(12));
    CHECK_FALSE(allowed_small_h(2));
    CHECK(allowed_small_h(25));
    CHECK_THROWS(allowed_small_h(0));
    CHECK_THROWS(allowed_small_h(43));
    // brute-force filter equals the explicit list
    std::vector<u64> brute;
    for (u64 h = 1; h < 43; ++h)
        if (allowed_small_h(h)) brute.push_back(h);
    CHECK(brute == allowed_h_list());
}

TEST_CASE("congruence checks") {
    ClassNumberReport r13 = class_number(13);  // f = 7 * 31, r = 2, h = 3
    CHECK(r13.constraints.evaluated);
    CHECK(r13.constraints.cong_ii);
    CHECK(r13.constraints.cong_i);  // h = 3 != 1 mod 3, f composite: both sides false

    ClassNumberReport rm1 = class_number(-1);  // f prime, h = 1
    CHECK(rm1.constraints.cong_i);

    ClassNumberReport r40 = class_number(40);  // f = 7*13*19, r = 3, h = 9
    CHECK(r40.H_rounded == 9);
    CHECK(r40.constraints.cong_ii);
}

TEST_CASE("cross check against reference values") {
    ClassNumberReport rm1 = class_number(-1);
    CHECK(cross_check(rm1, 1) == 1);
    CHECK(rm1.unit_index_hint == 1);

    ClassNumberReport r12 = class_number(12);
    CHECK(cross_check(r12, 1) == 13);  // observed unit index of the partner field

    ClassNumberReport r21 = class_number(21);
    CHECK(cross_check(r21, 3) == 1);

    // wrong reference values must be rejected
    ClassNumberReport bad = class_number(-1);
    CHECK_THROWS(cross_check(bad, 2));  // monogenic with u = 2
    ClassNumberReport bad2 = class_number(11);
    CHECK_THROWS(cross_check(bad2, 3));  // 3/4 is not an integer
}

TEST_CASE("tau partner has the same class number") {
    for (i64 m : {4, 13, 26, 64, 100}) {
        CHECK(class_number(m).H_rounded == class_number(-m - 3).H_rounded);
    }
}

TEST_CASE("unit index bookkeeping") {
    ClassNumberReport r = class_number(5);
    CHECK(r.field.index == 7);
    CHECK(r.unit_index == 7);
    CHECK_FALSE(r.unit_index_proven == false);  // saturation marks proven
    CHECK(r.H_raw == doctest::Approx(1.0 / 7.0).epsilon(1e-9));
    CHECK(r.H_rounded == 1);

    ClassNumberReport r0 = class_number(0);
    CHECK(r0.unit_index == 1);
    CHECK(r0.unit_index_proven);
}

TEST_CASE("precision escalation does not move any resolved class number") {
    for (i64 m : {-1, 0, 3, 5, 6, 11, 12, 16, 21, 24, 26, 31, 54, 64, 66, 93, 1259, 2389}) {
        ClassNumberReport r = class_number(m);
        REQUIRE(r.resolved);
        LValue ld = l1_abs_squared_ld(r.chi);
        double H = (double)r.field.conductor * ld.abs_squared / (4.0 * r.reg_E) * (double)r.unit_index;
        CHECK((u64)std::llround(H) == r.H_rounded);
    }
}

TEST_CASE("monogenic constraint sweep below 1200") {
    for (i64 m = -1; m <= 1200; ++m) {
        SimplestCubicField F = build_field(m);
        if (F.index != 1) continue;
        ClassNumberReport r = class_number(m);
        REQUIRE(r.resolved);
        if (r.H_rounded < 43) REQUIRE(allowed_small_h(r.H_rounded));
        REQUIRE(r.constraints.all_pass());
    }
}

}  // TEST_SUITE
