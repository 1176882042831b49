#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "modcensus/factor.hpp"
#include "modcensus/orbit.hpp"

using namespace modcensus;

TEST_CASE("orbit_stats worked examples") {
    for (std::uint64_t n : {2ull, 5ull, 12ull, 97ull}) {
        const OrbitStats s = orbit_stats(1, n);
        CHECK(s.sigma == 1);
        CHECK(s.tau == 0);
    }
    // square root of unity
    CHECK(orbit_stats(3, 4).sigma == 2);
    CHECK(orbit_stats(3, 4).tau == 0);
    // idempotent
    CHECK(orbit_stats(0, 4).sigma == 1);
    CHECK(orbit_stats(0, 4).tau == 1);
    // sequence 1, 2, 0, 0, ...
    CHECK(orbit_stats(2, 4).sigma == 1);
    CHECK(orbit_stats(2, 4).tau == 2);
    // Z_1: x^0 is the residue of 1 mod 1, i.e. 0
    CHECK(orbit_stats(0, 1).sigma == 1);
    CHECK(orbit_stats(0, 1).tau == 0);

    CHECK_THROWS_AS(orbit_stats(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(orbit_stats(0, 0), std::invalid_argument);
}

TEST_CASE("census_by_orbit examples") {
    const OrbitCensus c1 = census_by_orbit(1);
    REQUIRE(c1.counts.size() == 1);
    CHECK(c1.counts.at({1, 0}) == 1);

    const OrbitCensus c4 = census_by_orbit(4);
    CHECK(c4.counts.at({1, 0}) == 1);
    CHECK(c4.counts.at({2, 0}) == 1);
    CHECK(c4.counts.at({1, 1}) == 1);
    CHECK(c4.counts.at({1, 2}) == 1);

    const OrbitCensus c12 = census_by_orbit(12);
    std::uint64_t total = 0;
    std::uint64_t units = 0;
    for (const auto& [key, count] : c12.counts) {
        total += count;
        if (key.second == 0) units += count;
    }
    CHECK(total == 12);
    CHECK(units == 4);  // = phi(12)
}

TEST_CASE("count_predicate examples") {
    CHECK(count_predicate(21, Predicate::sigma_divides, 3) == 8);
    CHECK(count_predicate(21, Predicate::sigma_divides, 1) == 4);
    CHECK(count_predicate(8, Predicate::nilpotent) == 4);
    CHECK(count_predicate(12, Predicate::idempotent) == 4);
}

TEST_CASE("budget errors") {
    CHECK_THROWS_AS(census_by_orbit(kDefaultBruteBudget + 1), budget_error);
    CHECK_THROWS_AS(orbit_profile(2'000'000, 1'000'000), budget_error);
    CHECK_THROWS_AS(count_predicate(2'000'000, Predicate::nilpotent, 0, 1'000'000),
                    budget_error);
}

TEST_CASE("orbit congruences and unit counts up to 2000") {
    const SpfTable table = build_spf_table(2000);
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        const auto profile = orbit_profile(n);
        const auto f = factorize(n, table);
        const std::uint64_t phi = totient(f);
        const auto ok = omega_kernel(f);

        std::uint64_t tau0 = 0, idem = 0, nil = 0, nil_by_kernel = 0;
        for (std::uint64_t x = 0; x < n; ++x) {
            const OrbitRecord& r = profile[x];
            REQUIRE(r.sigma >= 1);
            REQUIRE(r.tau + r.sigma <= n + 1);
            // x^(tau+sigma) = x^tau, and tau is minimal
            CHECK(powmod(x, r.tau + r.sigma, n) == powmod(x, r.tau, n));
            if (r.tau >= 1)
                CHECK(powmod(x, r.tau - 1 + r.sigma, n) != powmod(x, r.tau - 1, n));
            if (r.tau == 0) ++tau0;
            if (r.sigma == 1 && r.tau <= 1) ++idem;
            if (r.nilpotent) ++nil;
            if (x % ok.kernel == 0) ++nil_by_kernel;
        }
        CHECK(tau0 == phi);
        CHECK(idem == (std::uint64_t{1} << ok.omega));
        CHECK(nil == nil_by_kernel);
    }
}

TEST_CASE("x^(k+m) = x^k for some k >= 1 iff sigma divides m") {
    for (std::uint64_t n = 1; n <= 200; ++n) {
        const auto profile = orbit_profile(n);
        for (std::uint64_t x = 0; x < n; ++x) {
            // direct sequence values x^1 .. x^(n+13)
            std::vector<std::uint64_t> seq(n + 14);
            seq[0] = 1 % n;
            for (std::size_t k = 1; k < seq.size(); ++k) seq[k] = seq[k - 1] * x % n;
            for (std::uint64_t m = 1; m <= 12; ++m) {
                bool holds = false;
                for (std::uint64_t k = 1; k + m < seq.size() && !holds; ++k)
                    holds = seq[k + m] == seq[k];
                CHECK(holds == (m % profile[x].sigma == 0));
            }
        }
    }
}

TEST_CASE("powmod") {
    CHECK(powmod(3, 0, 7) == 1);
    CHECK(powmod(3, 6, 7) == 1);
    CHECK(powmod(2, 10, 1000) == 24);
    CHECK(powmod(0, 5, 1) == 0);
    // 64-bit-safe path
    CHECK(powmod(2, 64, (std::uint64_t{1} << 61) - 1) == 8);
}
