#include <doctest.h>

#include <numeric>
#include <random>

#include "scf/arith.hpp"

using namespace scf;

namespace {

std::vector<std::pair<u64, int>> trial_factor(u64 n) {
    std::vector<std::pair<u64, int>> out;
    for (u64 d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        if (e) out.push_back({d, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

}  // namespace

TEST_SUITE("arith") {

TEST_CASE("is_prime examples") {
    CHECK(is_prime(7));
    CHECK(is_prime(1063));
    CHECK_FALSE(is_prime(217));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
}

TEST_CASE("is_prime agrees with a sieve below 10^7") {
    const u64 N = 10000000;
    std::vector<bool> comp(N, false);
    for (u64 i = 2; i < N; ++i)
        if (!comp[i])
            for (u64 j = i * i; j < N; j += i) comp[j] = true;
    u64 mismatches = 0;
    for (u64 n = 0; n < N; ++n)
        if (is_prime(n) != (n >= 2 && !comp[n])) ++mismatches;
    CHECK(mismatches == 0);
}

TEST_CASE("factorize examples") {
    auto f = factorize(217);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == 7);
    CHECK(f.factors[0].exp == 1);
    CHECK(f.factors[1].prime == 31);
    CHECK(f.factors[1].exp == 1);

    f = factorize(3087);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == 3);
    CHECK(f.factors[0].exp == 2);
    CHECK(f.factors[1].prime == 7);
    CHECK(f.factors[1].exp == 3);

    CHECK(factorize(1).factors.empty());
    CHECK_THROWS(factorize(0));
}

TEST_CASE("factorize matches trial division up to 10^6") {
    for (u64 n = 1; n <= 1000000; ++n) {
        Factorization f = factorize(n);
        if (f.recompose() != n) {
            REQUIRE(f.recompose() == n);  // report the first failure only
        }
        if ((n & 0xfff) == 1) {  // full list comparison on a deterministic subsample
            auto ref = trial_factor(n);
            REQUIRE(f.factors.size() == ref.size());
            for (size_t i = 0; i < ref.size(); ++i) {
                CHECK((u64)f.factors[i].prime == ref[i].first);
                CHECK(f.factors[i].exp == ref[i].second);
            }
        }
    }
}

TEST_CASE("factorize splits rho-hard semiprimes") {
    // 559 synchronizes the trajectories of both prime factors for early seeds
    for (u64 n : {559ull, 1000003ull * 1000033ull, 1000000007ull * 1000000009ull,
                  2147483647ull * 2147483629ull}) {
        Factorization f = factorize(n);
        CHECK(f.recompose() == n);
        CHECK(f.factors.size() == 2);
        CHECK_FALSE(f.probable);
    }
    Factorization sq = factorize((u128)2147483647 * 2147483647);
    REQUIRE(sq.factors.size() == 1);
    CHECK(sq.factors[0].exp == 2);
}

TEST_CASE("factorize above 2^64") {
    u128 p = 2305843009213693951ull;  // 2^61 - 1
    u128 n = p * 2147483647ull;
    Factorization f = factorize(n);
    CHECK(f.recompose() == n);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == 2147483647ull);
    CHECK(f.factors[1].prime == p);
}

TEST_CASE("cubefree decomposition") {
    auto [b1, c1] = cubefree_decompose(3087);
    CHECK(b1 == 9);
    CHECK(c1 == 7);
    auto [b2, c2] = cubefree_decompose(189);
    CHECK(b2 == 7);
    CHECK(c2 == 3);
    auto [b3, c3] = cubefree_decompose(13);
    CHECK(b3 == 13);
    CHECK(c3 == 1);

    // multiplicative on coprime arguments
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        u64 x = rng() % 100000 + 1, y = rng() % 100000 + 1;
        if (std::gcd(x, y) != 1) continue;
        auto [bx, cx] = cubefree_decompose(x);
        auto [by, cy] = cubefree_decompose(y);
        auto [bxy, cxy] = cubefree_decompose((u128)x * y);
        CHECK(bxy == bx * by);
        CHECK(cxy == cx * cy);
    }
}

TEST_CASE("cubic residue classes") {
    CHECK(cubic_residue_class(1, 7) == CubicClass::Unity);
    CHECK(cubic_residue_class(6, 7) == CubicClass::Unity);  // 6 = (-1)^3 mod 7
    CHECK(cubic_residue_class(3, 7) != CubicClass::Unity);  // cubes mod 7 are {1, 6}
    CHECK(cubic_residue_class(3, 7) != CubicClass::Zero);
    CHECK(cubic_residue_class(14, 7) == CubicClass::Zero);
    CHECK_THROWS(cubic_residue_class(2, 5));
    CHECK_THROWS(cubic_residue_class(2, 11));

    // unity iff nonzero cube, by brute force for p < 200
    for (u64 p : {7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97, 103, 109, 127, 139, 151, 157, 163, 181, 193, 199}) {
        std::vector<bool> cube(p, false);
        for (u64 x = 1; x < p; ++x) cube[x * x % p * x % p] = true;
        int omegas = 0, omegabars = 0;
        for (u64 a = 0; a < p; ++a) {
            CubicClass c = cubic_residue_class((i64)a, p);
            CHECK((c == CubicClass::Unity) == (a != 0 && cube[a]));
            CHECK((c == CubicClass::Zero) == (a == 0));
            if (c == CubicClass::Omega) ++omegas;
            if (c == CubicClass::OmegaBar) ++omegabars;
        }
        CHECK(omegas == (int)(p - 1) / 3);
        CHECK(omegas == omegabars);
    }
    // negative arguments reduce mod p
    CHECK(cubic_residue_class(-1, 7) == CubicClass::Unity);
    CHECK(cubic_residue_class(-4, 7) == cubic_residue_class(3, 7));
}

TEST_CASE("modular kernels") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        u64 m = (rng() % 1000000) * 2 + 3;
        u64 a = rng() % m, e = rng() % 100000;
        Montgomery mg(m);
        CHECK(mg.from(mg.pow(mg.to(a), e)) == pow_mod(a, e, m));
    }
    for (u64 n : std::vector<u64>{0, 1, 2, 3, 15, 16, 17, 1000000, UINT32_MAX}) {
        u64 s = isqrt_u64(n);
        CHECK(s * s <= n);
        CHECK((s + 1) * (s + 1) > n);
    }
}

TEST_CASE("divisors") {
    auto d = divisors_u64(factorize(189));  // 3^3 * 7
    CHECK(d == std::vector<u64>{1, 3, 7, 9, 21, 27, 63, 189});
    CHECK(divisors_u64(factorize(1)) == std::vector<u64>{1});
}

}  // TEST_SUITE
