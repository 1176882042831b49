// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Run a single criterion by passing its number.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "modcensus/cli.hpp"
#include "modcensus/constants.hpp"
#include "modcensus/functions.hpp"
#include "modcensus/summatory.hpp"

using namespace modcensus;

namespace {

int failures = 0;

struct Criterion {
    int number;
    std::string label;
    bool ok = true;
    std::vector<std::string> details;

    Criterion(int n, std::string l) : number(n), label(std::move(l)) {}

    void check(bool pass, const std::string& what) {
        details.push_back(std::string(pass ? "ok  " : "FAIL") + "  " + what);
        if (!pass) ok = false;
    }

    void finish() {
        for (const std::string& d : details) std::printf("    %s\n", d.c_str());
        std::printf("criterion %d (%s): %s\n", number, label.c_str(),
                    ok ? "PASS" : "FAIL");
        if (!ok) ++failures;
    }
};

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

// 1. Constants reproduction to all 12 published digits.
void criterion_constants() {
    Criterion c{1, "constants reproduction"};
    const struct {
        ConstantId id;
        double published;
    } cases[] = {
        {ConstantId::A, 0.440756919862},
        {ConstantId::B, 0.477176626987},
        {ConstantId::C, 0.490145568004},
        {ConstantId::Atilde, 0.233722383512},
        {ConstantId::three_over_pi_sq, 0.303963550927},
    };
    for (const auto& [id, published] : cases) {
        const auto t0 = std::chrono::steady_clock::now();
        const ConstantEstimate est = euler_product(id, 5e-13);
        const double diff =
            std::abs(static_cast<double>(est.value - static_cast<qreal>(published)));
        c.check(diff < 1e-12 + est.tail_bound && est.tail_bound < 5e-13,
                fmt("%s = %s  (published prefix diff %.2e, tail %.2e, %.2fs)",
                    constant_name(id), qreal_to_string(est.value, 15).c_str(), diff,
                    est.tail_bound, seconds_since(t0)));
    }
    c.finish();
}

// 2. Formula-vs-oracle sweep over all n <= 2000 and all fifteen ids.
void criterion_sweep() {
    Criterion c{2, "formula-vs-oracle sweep to 2000"};
    const auto t0 = std::chrono::steady_clock::now();
    const auto mismatch = verify_formulas(2000);
    if (mismatch)
        c.check(false, fmt("mismatch at n=%llu fn=%s formula=%llu oracle=%llu",
                           static_cast<unsigned long long>(mismatch->n),
                           function_info(mismatch->id).name,
                           static_cast<unsigned long long>(mismatch->formula),
                           static_cast<unsigned long long>(mismatch->oracle)));
    else
        c.check(true, fmt("15 functions x 2000 moduli, zero mismatches (%.2fs)",
                          seconds_since(t0)));
    c.finish();
}

// 3. The worked sigma <= 3 identity and its non-multiplicativity.
void criterion_worked_identity() {
    Criterion c{3, "worked sigma<=3 identity"};
    const std::uint64_t at21 = count_sigma_le3(factorize(21));
    const std::uint64_t at3 = count_sigma_le3(factorize(3));
    const std::uint64_t at7 = count_sigma_le3(factorize(7));
    c.check(at21 == 13, fmt("value at 21 = %llu (want 13)", (unsigned long long)at21));
    c.check(at3 == 3, fmt("value at 3 = %llu (want 3)", (unsigned long long)at3));
    c.check(at7 == 5, fmt("value at 7 = %llu (want 5)", (unsigned long long)at7));
    c.check(at21 != at3 * at7, "13 != 3*5: not multiplicative");
    c.finish();
}

// 4. All eight Dirichlet identities at N = 10^6, P = 10^5.
void criterion_dirichlet() {
    Criterion c{4, "dirichlet identity checks"};
    const auto t0 = std::chrono::steady_clock::now();
    const SeriesId shifted[] = {SeriesId::a, SeriesId::b, SeriesId::c, SeriesId::m};
    const SeriesId plain[] = {SeriesId::u, SeriesId::v, SeriesId::w, SeriesId::z};
    for (SeriesId id : shifted) {
        const SeriesCheckReport r = dirichlet_identity_check(id, 2.0, 1'000'000, 100'000);
        c.check(r.discrepancy <= r.combined_bound(),
                fmt("%s at s=2: |lhs-rhs| = %.3e <= %.3e", series_name(id), r.discrepancy,
                    r.combined_bound()));
    }
    for (SeriesId id : plain) {
        const SeriesCheckReport r = dirichlet_identity_check(id, 3.0, 1'000'000, 100'000);
        c.check(r.discrepancy <= r.combined_bound(),
                fmt("%s at s=3: |lhs-rhs| = %.3e <= %.3e", series_name(id), r.discrepancy,
                    r.combined_bound()));
    }
    c.details.push_back(fmt("      (total %.2fs)", seconds_since(t0)));
    c.finish();
}

// 5. Lattice-sum cross-check of A.
void criterion_joshi() {
    Criterion c{5, "lattice-sum cross-check of A"};
    const JoshiSum joshi = joshi_sum(1'000'000);
    const ConstantEstimate a = euler_product(ConstantId::A);
    const double diff = std::abs(joshi.value - static_cast<double>(a.value));
    c.check(diff < 1e-5, fmt("|joshi(10^6) - A| = %.3e < 1e-5 (tail bound %.3e)", diff,
                             joshi.tail_bound));
    c.finish();
}

// 6. Summatory asymptotics at N = 10^6: two absolute windows plus five
// 10^3-vs-10^6 trend checks.
void criterion_summatory() {
    Criterion c{6, "summatory asymptotics"};
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::uint64_t> cps = {1000, 1'000'000};
    const SpfTable table = build_spf_table(1'000'000);

    auto ratios = [&](FunctionId id) {
        const auto rows = summatory_table(id, table, 1'000'000, cps);
        return std::pair(*rows[0].ratio, *rows[1].ratio);
    };

    const auto [phi3, phi6] = ratios(FunctionId::phi);
    c.check(0.999 <= phi6 && phi6 <= 1.001,
            fmt("sum phi / ((3/pi^2) N^2) = %.9f in [0.999, 1.001]", phi6));

    const auto [m3, m6] = ratios(FunctionId::m);
    c.check(0.99 <= m6 && m6 <= 1.01,
            fmt("sum m / (N^2/2) = %.9f in [0.99, 1.01]", m6));

    const struct {
        FunctionId id;
        const char* label;
    } trends[] = {
        {FunctionId::a, "sum a / (A N^2)"},
        {FunctionId::b, "sum b / (B N^2)"},
        {FunctionId::c, "sum c / (C N^2)"},
        {FunctionId::n_minus_m, "sum (n-m) / ((3/8) N^2/ln N)"},
        {FunctionId::g, "sum g / (Atilde N^2/ln N)"},
    };
    for (const auto& [id, label] : trends) {
        const auto [r3, r6] = ratios(id);
        c.check(std::abs(r6 - 1) < std::abs(r3 - 1),
                fmt("%s: |ratio-1| shrinks %.6f -> %.6f", label, std::abs(r3 - 1),
                    std::abs(r6 - 1)));
    }
    c.details.push_back(fmt("      (total %.2fs)", seconds_since(t0)));
    c.finish();
}

// 7. Bit-identical summatory output across thread counts.
void criterion_determinism() {
    Criterion c{7, "thread-count determinism"};
    auto run = [](const char* threads) {
        std::ostringstream out, err;
        const int code = cli::run({"--threads", threads, "sum", "--fn", "a", "--max",
                                   "1000000"},
                                  out, err);
        return std::pair(code, out.str());
    };
    const auto [code1, out1] = run("1");
    const auto [code8, out8] = run("8");
    c.check(code1 == 0 && code8 == 0, "both invocations succeed");
    c.check(out1 == out8, fmt("byte-identical output at --threads 1 and 8 (%zu bytes)",
                              out1.size()));
    c.finish();
}

// 8. Slow-convergence substitutes: diagnostics emitted, the product and the
// direct sum of the Schwarz objective agree at y = 1, and the minimizer
// passes the local-minimality probe.
void criterion_diagnostics() {
    Criterion c{8, "kernel diagnostics and Schwarz probe"};
    const auto rows = kernel_reciprocal_diagnostics(100'000, {100, 10'000, 100'000});
    c.check(rows.size() == 3, "diagnostic rows emitted at 10^2, 10^4, 10^5");
    for (const auto& row : rows)
        c.check(row.sum > 1 && row.debruijn_ratio > 0 && row.debruijn_ratio < 2,
                fmt("S(%llu) = %.6f, de Bruijn ratio %.4f",
                    static_cast<unsigned long long>(row.checkpoint), row.sum,
                    row.debruijn_ratio));

    const double product = kernel_reciprocal_dirichlet_product(1.0, 1'000'000);
    const double direct = kernel_reciprocal_dirichlet_direct(1.0, 100'000);
    c.check(std::abs(product - direct) < 1e-3,
            fmt("objective at y=1: product %.8f vs direct sum %.8f, gap %.2e < 1e-3",
                product, direct, std::abs(product - direct)));

    const SchwarzProbe probe = schwarz_probe(100'000, 1e-10);
    auto objective = [&](double y) {
        return y * std::log(1e5) +
               std::log(kernel_reciprocal_dirichlet_product(y, 1'000'000));
    };
    const double at_min = objective(probe.y_star);
    c.check(objective(probe.y_star * 1.05) > at_min &&
                objective(probe.y_star * 0.95) > at_min,
            fmt("y* = %.6f is a local minimum; Schwarz ratio %.4f recorded",
                probe.y_star, probe.schwarz_ratio));
    c.finish();
}

}  // namespace

int main(int argc, char** argv) {
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    const struct {
        int number;
        void (*run)();
    } criteria[] = {
        {1, criterion_constants},   {2, criterion_sweep},
        {3, criterion_worked_identity}, {4, criterion_dirichlet},
        {5, criterion_joshi},       {6, criterion_summatory},
        {7, criterion_determinism}, {8, criterion_diagnostics},
    };
    for (const auto& [number, run] : criteria)
        if (only == 0 || only == number) run();
    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
