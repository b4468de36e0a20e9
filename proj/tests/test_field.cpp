#include <doctest.h>

#include <cmath>
#include <random>

#include "scf/field.hpp"

using namespace scf;

TEST_SUITE("field") {

TEST_CASE("normalize") {
    CHECK(normalize(-8) == 5);
    CHECK(normalize(5) == 5);
    CHECK(normalize(-2) == -1);
    CHECK(normalize(-1) == -1);
    CHECK_THROWS(normalize(INT64_MIN));
    for (i64 m = -50; m <= 50; ++m) {
        CHECK(normalize(m) >= -1);
        CHECK(normalize(normalize(m)) == normalize(m));
        CHECK(normalize(-m - 3) == normalize(m));
    }
}

TEST_CASE("build_field examples") {
    SimplestCubicField F = build_field(54);
    CHECK(F.D == 3087);
    CHECK(F.conductor == 9);
    CHECK(F.index == 343);
    CHECK(F.b == 9);
    CHECK(F.c == 7);

    F = build_field(12);
    CHECK(F.D == 189);
    CHECK(F.conductor == 7);
    CHECK(F.index == 27);
    CHECK(F.index_class == IndexClass::TwentySeven);
    CHECK(F.gamma == 1);
    CHECK(F.k == 3);

    F = build_field(13);
    CHECK(F.conductor == 217);
    CHECK(F.index == 1);
    CHECK(F.index_class == IndexClass::One);

    F = build_field(5);
    CHECK(F.conductor == 7);
    CHECK(F.index == 7);
    CHECK(F.index_class == IndexClass::Other);

    F = build_field(0);
    CHECK(F.conductor == 9);
    CHECK(F.index == 1);
    CHECK(F.r3 == 2);
    CHECK(F.gamma == 9);
}

TEST_CASE("conductor and index invariants for m <= 10^5") {
    for (i64 m = -1; m <= 100000; ++m) {
        SimplestCubicField F = build_field(m);  // throws internally if the closed form disagrees
        REQUIRE((u128)F.conductor * F.index == F.D);
        REQUIRE(F.field_disc == (u128)F.conductor * F.conductor);
        // conductor shape: 9, or distinct primes = 1 (mod 6), or 9 * such
        u64 rest = F.conductor;
        if (rest % 9 == 0) rest /= 9;
        REQUIRE(rest % 3 != 0);
        for (const auto& [p, e] : factorize(rest).factors) {
            REQUIRE(e == 1);
            REQUIRE(p % 6 == 1);
        }
        // r3 from the congruence class
        int r3 = (F.m % 3 != 0) ? 0 : (F.m % 9 == 3 ? 3 : 2);
        REQUIRE(F.r3 == r3);
        // every prime p != 3 dividing D is 1 mod 6
        for (const auto& [p, e] : F.D_factors.factors)
            if (p != 3) REQUIRE(p % 6 == 1);
    }
}

TEST_CASE("tau invariance") {
    for (i64 m : {-100, -37, -9, -2, 3, 17, 500}) {
        SimplestCubicField a = build_field(m), b = build_field(-m - 3);
        CHECK(a.m == b.m);
        CHECK(a.D == b.D);
        CHECK(a.conductor == b.conductor);
        CHECK(a.index == b.index);
    }
}

TEST_CASE("monogenic iff squarefree conditions, m <= 10^4") {
    for (i64 m = -1; m <= 10000; ++m) {
        SimplestCubicField F = build_field(m);
        bool cor = false;
        if (m == 0) {
            cor = true;
        } else if (F.m % 3 != 0) {
            cor = true;
            for (const auto& pp : F.D_factors.factors)
                if (pp.exp > 1) cor = false;
        } else if (F.m % 9 == 0 || F.m % 9 == 6) {
            cor = true;
            for (const auto& pp : F.D_factors.factors)
                if ((pp.prime == 3 && pp.exp != 2) || (pp.prime != 3 && pp.exp > 1)) cor = false;
        }
        REQUIRE((F.index_class == IndexClass::One) == cor);
    }
}

TEST_CASE("polynomial discriminant equals D^2") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        i64 m = (i64)(rng() % 2000000) - 1;
        i128 D = (i128)m * m + 3 * m + 9;
        CHECK(poly_discriminant(m) == D * D);
    }
}

TEST_CASE("real roots of the conductor-7 field") {
    // independent closed form: roots of X^3 + X^2 - 2X - 1 are 2cos(2 pi k/7)
    const long double pi = 3.14159265358979323846264338327950288L;
    long double e1 = 2.0L * cosl(2.0L * pi / 7.0L);
    long double e2 = 2.0L * cosl(4.0L * pi / 7.0L);
    long double e3 = 2.0L * cosl(6.0L * pi / 7.0L);
    RealRoots r = real_roots(-1, 64);
    CHECK(std::abs((double)(r.alpha[0] - e1)) < 1e-15);
    CHECK(std::abs((double)(r.alpha[1] - e2)) < 1e-15);
    CHECK(std::abs((double)(r.alpha[2] - e3)) < 1e-15);
    CHECK((double)r.alpha[0] == doctest::Approx(1.24698).epsilon(1e-5));
    CHECK((double)r.alpha[1] == doctest::Approx(-0.44504).epsilon(1e-4));
    CHECK((double)r.alpha[2] == doctest::Approx(-1.80194).epsilon(1e-5));
}

TEST_CASE("real roots of the conductor-9 field") {
    RealRoots r = real_roots(0, 64);
    CHECK((double)r.alpha[0] == doctest::Approx(1.87939).epsilon(1e-5));
    CHECK((double)r.alpha[1] == doctest::Approx(-0.34730).epsilon(1e-4));
    CHECK((double)r.alpha[2] == doctest::Approx(-1.53209).epsilon(1e-5));
}

TEST_CASE("root products and norm identities") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 1000; ++i) {
        i64 m = (i64)(rng() % 1000000) - 1;
        RealRoots r = real_roots(m, 64);
        CHECK(r.alpha[0] > r.alpha[1]);
        CHECK(r.alpha[1] > r.alpha[2]);
        long double na = r.alpha[0] * r.alpha[1] * r.alpha[2];
        long double nap1 = r.alpha_plus1[0] * r.alpha_plus1[1] * r.alpha_plus1[2];
        long double nam1 = r.alpha_minus1[0] * r.alpha_minus1[1] * r.alpha_minus1[2];
        CHECK(std::abs((double)(na - 1.0L)) < 1e-9);
        CHECK(std::abs((double)(nap1 + 1.0L)) < 1e-9);
        CHECK(std::abs((double)((nam1 - (2.0L * m + 3)) / (2.0L * m + 3))) < 1e-9);
        // residuals: f(alpha) small relative to the leading scale
        for (int j = 0; j < 3; ++j) {
            long double x = r.alpha[j];
            long double f = ((x - m) * x - (m + 3)) * x - 1.0L;
            long double scale = (std::abs((double)x) + 1) * (std::abs((double)x) + 1) * (std::abs((double)x) + 1) +
                                std::abs((double)m) * 10.0L + 10.0L;
            CHECK(std::abs((double)f) < 1e-15 * (double)scale);
        }
    }
}

TEST_CASE("galois action permutes the roots cyclically") {
    for (i64 m : {-1, 0, 1, 2, 7, 30, 1000, 99999}) {
        RealRoots r = real_roots(m, 64);
        // sigma: alpha -> -1/(alpha+1) maps the root set to itself in a 3-cycle
        for (int j = 0; j < 3; ++j) {
            long double img = -1.0L / r.alpha_plus1[j];
            long double best = 1e30L;
            int to = -1;
            for (int k = 0; k < 3; ++k)
                if (fabsl(img - r.alpha[k]) < best) { best = fabsl(img - r.alpha[k]); to = k; }
            CHECK(to != j);
            CHECK((double)best < 1e-10 * (1.0 + std::abs((double)r.alpha[to])));
        }
    }
}

TEST_CASE("reduced form identity at rational samples") {
    CHECK(reduced_form_check(2, Rational(0)));
    CHECK(reduced_form_check(0, Rational(3)));
    CHECK(reduced_form_check(-1, Rational(1)));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        i64 m = (i64)(rng() % 20001) - 1;
        i64 num = (i64)(rng() % 2001) - 1000;
        i64 den = (i64)(rng() % 50) + 1;
        CHECK(reduced_form_check(m, Rational(num, den)));
    }
}

}  // TEST_SUITE
