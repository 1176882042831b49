#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include <gmpxx.h>

#include "modcensus/summatory.hpp"

using namespace modcensus;

TEST_CASE("sieved value prefixes") {
    const SpfTable table = build_spf_table(10);
    const auto phi = sieve_function_values(FunctionId::phi, 10, table);
    CHECK(phi == std::vector<std::uint64_t>{0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4});
    const auto z = sieve_function_values(FunctionId::z, 8, table);
    CHECK(z == std::vector<std::uint64_t>{0, 1, 1, 1, 2, 1, 1, 1, 4});
    const auto a = sieve_function_values(FunctionId::a, 4, table);
    CHECK(a == std::vector<std::uint64_t>{0, 1, 2, 3, 3});
}

TEST_CASE("parallel sieve equals the serial reference") {
    const std::uint64_t N = 100'000;
    const SpfTable table = build_spf_table(N);
    for (FunctionId id : {FunctionId::a, FunctionId::m, FunctionId::g, FunctionId::psi,
                          FunctionId::sigma_le3, FunctionId::kappa}) {
        const auto serial = sieve_function_values_serial(id, N, table);
        CHECK(sieve_function_values(id, N, table, 1) == serial);
        CHECK(sieve_function_values(id, N, table, 3) == serial);
        CHECK(sieve_function_values(id, N, table, 8) == serial);
    }
    // h is brute-force only; keep the range small
    const SpfTable small = build_spf_table(2000);
    CHECK(sieve_function_values(FunctionId::h, 2000, small, 4) ==
          sieve_function_values_serial(FunctionId::h, 2000, small));
}

TEST_CASE("h cannot be sieved above the brute-force budget") {
    const SpfTable table = build_spf_table(16);
    CHECK_THROWS_AS(
        summatory_table(FunctionId::h, kDefaultBruteBudget + 1, {1000}, 1),
        budget_error);
    (void)table;
}

TEST_CASE("summatory exactness against the orbit oracle at 2000") {
    std::array<int128, 16> oracle_sums{};
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        const OracleValues oracle = oracle_census(n);
        for (FunctionId id : kCensusFunctions)
            oracle_sums[static_cast<std::size_t>(id)] += oracle[id];
        oracle_sums[static_cast<std::size_t>(FunctionId::n_minus_m)] +=
            n - oracle[FunctionId::m];
    }
    for (FunctionId id : kCensusFunctions) {
        const auto rows = summatory_table(id, 2000, {2000});
        REQUIRE(rows.size() == 1);
        CAPTURE(function_info(id).name);
        CHECK(rows[0].exact_sum == oracle_sums[static_cast<std::size_t>(id)]);
    }
    const auto nm = summatory_table(FunctionId::n_minus_m, 2000, {2000});
    CHECK(nm[0].exact_sum == oracle_sums[static_cast<std::size_t>(FunctionId::n_minus_m)]);
}

TEST_CASE("block-partition determinism") {
    const std::vector<std::uint64_t> cps = {10, 1000, 99'999, 100'000};
    const auto reference = summatory_table(FunctionId::a, 100'000, cps, 1);
    REQUIRE(reference.size() == 4);
    CHECK(reference[0].exact_sum == 49);
    CHECK(reference[1].exact_sum == 440'876);
    CHECK(reference[3].exact_sum == 4'407'574'808);
    for (int threads : {2, 5, 8}) {
        const auto rows = summatory_table(FunctionId::a, 100'000, cps, threads);
        REQUIRE(rows.size() == reference.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(rows[i].checkpoint == reference[i].checkpoint);
            CHECK(rows[i].exact_sum == reference[i].exact_sum);
            CHECK(rows[i].ratio == reference[i].ratio);
        }
    }
}

TEST_CASE("frozen checkpoint sums") {
    CHECK(summatory_table(FunctionId::phi, 10'000, {10'000})[0].exact_sum == 30'397'486);
    CHECK(summatory_table(FunctionId::a, 1000, {1000})[0].exact_sum == 440'876);
    CHECK(summatory_table(FunctionId::u, 1000, {1000})[0].exact_sum == 13'587);
    CHECK(summatory_table(FunctionId::v, 1000, {1000})[0].exact_sum == 26'856);
    CHECK(summatory_table(FunctionId::w, 1000, {1000})[0].exact_sum == 20'367);
    CHECK(summatory_table(FunctionId::z, 1000, {1000})[0].exact_sum == 5'764);
    CHECK(summatory_table(FunctionId::kappa, 1000, {1000})[0].exact_sum == 351'964);
    CHECK(summatory_table(FunctionId::idem2omega, 10'000, {10'000})[0].exact_sum == 63'869);

    // the half-period sum trails N^2/2 by ~(3/4)/ln N; at 10^4 the measured
    // ratio is 0.91009026
    const auto m_rows = summatory_table(FunctionId::m, 10'000, {10'000});
    CHECK(m_rows[0].exact_sum == 45'504'513);
    CHECK(*m_rows[0].ratio == doctest::Approx(45'504'513 / 5e7).epsilon(1e-12));
}

TEST_CASE("frozen sums at one million") {
    const SpfTable table = build_spf_table(1'000'000);
    const struct {
        FunctionId id;
        std::int64_t sum;
    } expected[] = {
        {FunctionId::phi, 303'963'552'392},
        {FunctionId::idem2omega, 9'185'685},
        {FunctionId::a, 440'756'903'048},
        {FunctionId::b, 477'176'693'234},
        {FunctionId::c, 490'145'889'128},
        {FunctionId::u, 71'963'479},
        {FunctionId::v, 171'968'274},
        {FunctionId::w, 132'419'845},
        {FunctionId::m, 471'259'421'359},
        {FunctionId::n_minus_m, 28'741'078'641},
        {FunctionId::z, 26'242'326},
        {FunctionId::kappa, 352'218'412'502},
        {FunctionId::g, 17'779'282'623},
    };
    for (const auto& [id, sum] : expected) {
        CAPTURE(function_info(id).name);
        CHECK(summatory_table(id, table, 1'000'000, {1'000'000})[0].exact_sum == sum);
    }
}

TEST_CASE("monotone dominance of the transient-count sums") {
    const std::vector<std::uint64_t> cps = {10, 100, 1000, 10'000};
    const auto phi = summatory_table(FunctionId::phi, 10'000, cps);
    const auto a = summatory_table(FunctionId::a, 10'000, cps);
    const auto b = summatory_table(FunctionId::b, 10'000, cps);
    const auto c = summatory_table(FunctionId::c, 10'000, cps);
    for (std::size_t i = 0; i < cps.size(); ++i) {
        const int128 all = static_cast<int128>(cps[i]) * (cps[i] + 1) / 2;
        CHECK(phi[i].exact_sum <= a[i].exact_sum);
        CHECK(a[i].exact_sum <= b[i].exact_sum);
        CHECK(b[i].exact_sum <= c[i].exact_sum);
        CHECK(c[i].exact_sum <= all);
    }
}

TEST_CASE("asymptote discrepancy trends over checkpoint decades") {
    const SpfTable table = build_spf_table(1'000'000);
    const std::vector<std::uint64_t> decades = {1000, 10'000, 100'000, 1'000'000};

    // |sum a / (A N^2) - 1| shrinks monotonically across decades
    const auto a_rows = summatory_table(FunctionId::a, table, 1'000'000, decades);
    for (std::size_t i = 1; i < a_rows.size(); ++i)
        CHECK(std::abs(*a_rows[i].ratio - 1) < std::abs(*a_rows[i - 1].ratio - 1));

    // both half-period ratios move toward 1 between 10^3 and 10^6
    const std::vector<std::uint64_t> ends = {1000, 1'000'000};
    for (FunctionId id : {FunctionId::m, FunctionId::n_minus_m}) {
        const auto rows = summatory_table(id, table, 1'000'000, ends);
        CAPTURE(function_info(id).name);
        CHECK(std::abs(*rows[1].ratio - 1) < std::abs(*rows[0].ratio - 1));
    }
}

TEST_CASE("predicted asymptotes") {
    CHECK(predicted_asymptote(FunctionId::phi, 1000) ==
          doctest::Approx(303'963.550927013).epsilon(1e-10));
    CHECK(predicted_asymptote(FunctionId::a, 1000) ==
          doctest::Approx(440'756.919862585).epsilon(1e-10));
    CHECK(predicted_asymptote(FunctionId::g, 1000) ==
          doctest::Approx(0.233722383512001 * 1e6 / std::log(1e3)).epsilon(1e-10));
    CHECK(predicted_asymptote(FunctionId::m, 1000) == 5e5);
    CHECK(predicted_asymptote(FunctionId::n_minus_m, 1000) ==
          doctest::Approx(0.375 * 1e6 / std::log(1e3)).epsilon(1e-12));
    CHECK(predicted_asymptote(FunctionId::idem2omega, 1000) ==
          doctest::Approx(0.607927101854027 * 1000 * std::log(1e3)).epsilon(1e-10));
    for (FunctionId id : {FunctionId::u, FunctionId::v, FunctionId::w,
                          FunctionId::sigma_le3, FunctionId::z, FunctionId::kappa,
                          FunctionId::psi, FunctionId::h})
        CHECK_THROWS_AS(predicted_asymptote(id, 1000), no_asymptote_error);
}

TEST_CASE("checkpoint validation") {
    CHECK_THROWS_AS(summatory_table(FunctionId::phi, 100, {5}), std::invalid_argument);
    CHECK_THROWS_AS(summatory_table(FunctionId::phi, 100, {10, 10}), std::invalid_argument);
    CHECK_THROWS_AS(summatory_table(FunctionId::phi, 100, {200}), std::invalid_argument);
    CHECK_THROWS_AS(kernel_reciprocal_diagnostics(100, {2}), std::invalid_argument);
}

TEST_CASE("kernel reciprocal sums: exact tier") {
    const auto rows = kernel_reciprocal_diagnostics(16, {10, 16});
    REQUIRE(rows.size() == 2);

    // independent oracle: kappa(1..10) = 1,2,3,2,5,6,7,2,3,10
    mpq_class s10(0);
    for (unsigned long k : {1ul, 2ul, 3ul, 2ul, 5ul, 6ul, 7ul, 2ul, 3ul, 10ul})
        s10 += mpq_class(1, k);
    CHECK(rows[0].exact == s10.get_str());

    mpq_class s16 = s10;
    for (unsigned long k : {11ul, 6ul, 13ul, 14ul, 15ul, 2ul}) s16 += mpq_class(1, k);
    CHECK(rows[1].exact == s16.get_str());
    CHECK(rows[1].exact == "71303/15015");
    CHECK(rows[1].sum == doctest::Approx(s16.get_d()).epsilon(1e-15));
}

TEST_CASE("kernel reciprocal sums: floating tier and de Bruijn ratio") {
    const auto rows = kernel_reciprocal_diagnostics(100'000, {10'000, 100'000});
    REQUIRE(rows.size() == 2);
    CHECK_FALSE(rows[0].exact.empty());
    CHECK(rows[1].exact.empty());
    CHECK(rows[0].sum == doctest::Approx(45.4731883441603).epsilon(1e-9));
    CHECK(rows[1].sum == doctest::Approx(82.4837563603424).epsilon(1e-9));
    for (const auto& row : rows) {
        CHECK(row.debruijn_ratio > 0.0);
        CHECK(row.debruijn_ratio < 2.0);
    }
}

TEST_CASE("int128 formatting") {
    CHECK(to_string(int128{0}) == "0");
    CHECK(to_string(int128{-42}) == "-42");
    const int128 big = int128{1'000'000'000'000'000'000} * 1'000;
    CHECK(to_string(big) == "1000000000000000000000");
}
