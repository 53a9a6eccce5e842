#include "divtop/shadow.hpp"

#include <random>

#include <doctest.h>

using namespace divtop;

TEST_CASE("binomials") {
    CHECK(binomial64(5, 2) == 10);
    CHECK(binomial64(7, 0) == 1);
    CHECK(binomial64(2, 3) == 0);
    CHECK(binomial64(62, 31) == 465428353255261088ull);
    CHECK_THROWS_AS(binomial64(100, 50), std::overflow_error);
    CHECK(binomial_big(100, 50) ==
          BigInt("100891344545564193334812497256"));
    CHECK(binomial_big(3, 7) == 0);
}

TEST_CASE("cascade spec examples") {
    const CascadeRep r52 = cascade(5, 2);
    REQUIRE(r52.digits.size() == 2);
    CHECK(r52.digits[0] == std::pair<uint64_t, unsigned>{3, 2});
    CHECK(r52.digits[1] == std::pair<uint64_t, unsigned>{2, 1});

    const CascadeRep r0 = cascade(0, 3);
    CHECK(r0.digits.empty());

    const CascadeRep r103 = cascade(10, 3);
    REQUIRE(r103.digits.size() == 1);
    CHECK(r103.digits[0] == std::pair<uint64_t, unsigned>{5, 3});
}

TEST_CASE("shadow spec examples") {
    CHECK(lower_shadow(5, 2) == 4);   // C(3,1) + C(2,0)
    CHECK(upper_shadow(5, 2) == 3);   // C(2,1) + C(1,0)
    CHECK(lower_shadow(10, 3) == 10); // C(5,2)
    CHECK(upper_shadow(10, 3) == 6);  // C(4,2)
    for (unsigned k = 1; k <= 6; k++) {
        CHECK(lower_shadow(0, k) == 0);
        CHECK(upper_shadow(0, k) == 0);
    }
}

TEST_CASE("cascade reconstruction, strict decrease, uniqueness bound") {
    for (unsigned k = 1; k <= 9; k++) {
        for (uint64_t n = 0; n <= 20000; n++) {
            const CascadeRep rep = cascade(n, k);
            CHECK(rep.reconstruct() == n);
            for (size_t i = 0; i < rep.digits.size(); i++) {
                const auto [a, j] = rep.digits[i];
                CHECK(a >= j);
                CHECK(j >= 1);
                if (i > 0) CHECK(a < rep.digits[i - 1].first);
            }
        }
    }
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<uint64_t> dist(1, 1000000000000ull);
    for (int trial = 0; trial < 2000; trial++) {
        const uint64_t n = dist(rng);
        const unsigned k = 1 + static_cast<unsigned>(rng() % 12);
        CHECK(cascade(n, k).reconstruct() == n);
    }
}

TEST_CASE("cascade digits are well-formed across the full verification range") {
    uint64_t violations = 0;
    for (unsigned k = 1; k <= 12; k++)
        for (uint64_t n = 0; n <= 1000000; n++) {
            const CascadeRep rep = cascade(n, k);
            if (rep.reconstruct() != n) violations++;
            uint64_t prev = UINT64_MAX;
            for (const auto& [a, j] : rep.digits) {
                if (a < j || a >= prev) violations++;
                prev = a;
            }
        }
    CHECK(violations == 0);
}

TEST_CASE("shadows are monotone in n on the tested range") {
    for (unsigned k = 1; k <= 6; k++) {
        uint64_t prev_lo = 0, prev_up = 0;
        for (uint64_t n = 0; n <= 30000; n++) {
            const uint64_t lo = lower_shadow(n, k);
            const uint64_t up = upper_shadow(n, k);
            CHECK(lo >= prev_lo);
            CHECK(up >= prev_up);
            prev_lo = lo;
            prev_up = up;
        }
    }
}

TEST_CASE("shadow inequalities on sigma data") {
    const SieveTable t = build_sieve(100000);
    const WeightCounters c(t, 100000);

    const ShadowReport r10 = verify_shadow_inequalities(10, c);
    CHECK(r10.ok);
    REQUIRE(!r10.family1.empty());
    CHECK(r10.family1[0].k == 1);
    CHECK(r10.family1[0].lhs == 0);  // sigma_2^odd(10) = 0
    CHECK(r10.family1[0].rhs == 2);  // sigma_1^odd(5) = |{3,5}|

    const ShadowReport r1 = verify_shadow_inequalities(1, c);
    CHECK(r1.ok);
    for (const auto& row : r1.family1) {
        CHECK(row.lhs == 0);
        CHECK(row.rhs == 0);
    }

    for (uint64_t n = 1; n <= 3000; n++) CHECK(verify_shadow_inequalities(n, c).ok);
}

TEST_CASE("truncated chi dual evaluation") {
    const SieveTable t = build_sieve(10000);
    const WeightCounters c(t, 10000);
    CHECK(chi_truncated(10, 1, c) == 2);  // sigma_1^odd(5)
    for (unsigned k = 1; k <= 6; k++) CHECK(chi_truncated(1, k, c) == 0);
    CHECK(chi_truncated(300, 2, c) == c.sigma_k_odd(2, 150));
    for (uint64_t n = 1; n <= 800; n++)
        for (unsigned k = 1; k <= static_cast<unsigned>(c.max_weight()) + 2; k++)
            CHECK_NOTHROW(chi_truncated(n, k, c));
}

TEST_CASE("f-vector/Betti relations") {
    const SieveTable t = build_sieve(10000);
    const WeightCounters c(t, 10000);

    const FBetaReport r10 = verify_fbeta_relations(10, c);
    CHECK(r10.ok);
    REQUIRE(!r10.rows.empty());
    CHECK(r10.rows[0].lower.lhs == 0);  // chi_1 + beta_1 = 0 at n = 10
    CHECK(r10.rows[0].lower.rhs == 2);

    const FBetaReport r2 = verify_fbeta_relations(2, c);
    CHECK(r2.ok);
    for (const auto& row : r2.rows) {
        CHECK(row.lower.lhs == 0);
        CHECK(row.upper.lhs == 0);
    }

    for (uint64_t n = 1; n <= 1200; n++) CHECK(verify_fbeta_relations(n, c).ok);
}
