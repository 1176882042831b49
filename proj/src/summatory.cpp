#include "modcensus/summatory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <gmpxx.h>

#include "modcensus/constants.hpp"
#include "modcensus/detail/kahan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace modcensus {

namespace {

// Fixed block size: the block grid depends only on N and the checkpoints,
// never on the thread count, so parallel results are bit-identical.
constexpr std::uint64_t kSieveBlock = std::uint64_t{1} << 16;

int resolve_threads(int threads) {
#ifdef _OPENMP
    return threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
    return 1;
#endif
}

void check_checkpoints(const std::vector<std::uint64_t>& checkpoints, std::uint64_t N,
                       std::uint64_t lowest) {
    std::uint64_t prev = 0;
    for (std::uint64_t cp : checkpoints) {
        if (cp < lowest || cp > N)
            throw std::invalid_argument("checkpoints must lie in [" +
                                        std::to_string(lowest) + ", N]");
        if (cp <= prev) throw std::invalid_argument("checkpoints must be strictly ascending");
        prev = cp;
    }
}

// Block boundaries: multiples of the block size plus every checkpoint.
std::vector<std::uint64_t> block_bounds(std::uint64_t N,
                                        const std::vector<std::uint64_t>& checkpoints) {
    std::vector<std::uint64_t> bounds;
    for (std::uint64_t b = kSieveBlock; b < N; b += kSieveBlock) bounds.push_back(b);
    bounds.push_back(N);
    bounds.insert(bounds.end(), checkpoints.begin(), checkpoints.end());
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
    return bounds;
}

void check_sievable(FunctionId id, std::uint64_t N) {
    if (id == FunctionId::h && N > kDefaultBruteBudget)
        throw budget_error(
            "h has no closed form; sieving it beyond the brute-force budget of " +
            std::to_string(kDefaultBruteBudget) + " is unsupported");
}

std::uint64_t kappa_of(std::uint64_t n, const SpfTable& table) {
    std::uint64_t k = 1;
    while (n > 1) {
        std::uint64_t p = table.spf[n];
        k *= p;
        while (n % p == 0) n /= p;
    }
    return k;
}

}  // namespace

std::string to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string digits;
    while (u > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::vector<std::uint64_t> sieve_function_values(FunctionId id, std::uint64_t N,
                                                 const SpfTable& table, int threads) {
    if (N == 0 || N > table.limit)
        throw std::invalid_argument("sieve_function_values: need 1 <= N <= table.limit");
    check_sievable(id, N);
    std::vector<std::uint64_t> values(N + 1, 0);
    const auto bounds = block_bounds(N, {});
    const int nt = resolve_threads(threads);
#pragma omp parallel num_threads(nt)
    {
        FactoredInteger f;
#pragma omp for schedule(dynamic)
        for (std::int64_t bi = 0; bi < static_cast<std::int64_t>(bounds.size()); ++bi) {
            const std::uint64_t lo = bi == 0 ? 1 : bounds[bi - 1] + 1;
            const std::uint64_t hi = bounds[bi];
            for (std::uint64_t n = lo; n <= hi; ++n) {
                factorize_into(n, table, f);
                values[n] = evaluate(id, f, &table);
            }
        }
    }
    return values;
}

std::vector<std::uint64_t> sieve_function_values_serial(FunctionId id, std::uint64_t N,
                                                        const SpfTable& table) {
    if (N == 0 || N > table.limit)
        throw std::invalid_argument("sieve_function_values: need 1 <= N <= table.limit");
    check_sievable(id, N);
    std::vector<std::uint64_t> values(N + 1, 0);
    FactoredInteger f;
    for (std::uint64_t n = 1; n <= N; ++n) {
        factorize_into(n, table, f);
        values[n] = evaluate(id, f, &table);
    }
    return values;
}

std::vector<SummatoryRow> summatory_table(FunctionId id, const SpfTable& table,
                                          std::uint64_t N,
                                          const std::vector<std::uint64_t>& checkpoints,
                                          int threads) {
    if (N == 0 || N > table.limit)
        throw std::invalid_argument("summatory_table: need 1 <= N <= table.limit");
    check_checkpoints(checkpoints, N, 10);
    check_sievable(id, N);

    const auto bounds = block_bounds(N, checkpoints);
    std::vector<int128> partial(bounds.size(), 0);
    const int nt = resolve_threads(threads);
#pragma omp parallel num_threads(nt)
    {
        FactoredInteger f;
#pragma omp for schedule(dynamic)
        for (std::int64_t bi = 0; bi < static_cast<std::int64_t>(bounds.size()); ++bi) {
            const std::uint64_t lo = bi == 0 ? 1 : bounds[bi - 1] + 1;
            const std::uint64_t hi = bounds[bi];
            int128 sum = 0;
            for (std::uint64_t n = lo; n <= hi; ++n) {
                factorize_into(n, table, f);
                sum += evaluate(id, f, &table);
            }
            partial[bi] = sum;
        }
    }

    const bool predicted_known = function_info(id).has_asymptote;
    std::vector<SummatoryRow> rows;
    int128 running = 0;
    std::size_t next_cp = 0;
    for (std::size_t bi = 0; bi < bounds.size(); ++bi) {
        running += partial[bi];
        if (next_cp < checkpoints.size() && bounds[bi] == checkpoints[next_cp]) {
            SummatoryRow row;
            row.checkpoint = checkpoints[next_cp];
            row.exact_sum = running;
            if (predicted_known) {
                row.predicted = predicted_asymptote(id, row.checkpoint);
                row.ratio = static_cast<double>(row.exact_sum) / *row.predicted;
            }
            rows.push_back(row);
            ++next_cp;
        }
    }
    return rows;
}

std::vector<SummatoryRow> summatory_table(FunctionId id, std::uint64_t N,
                                          const std::vector<std::uint64_t>& checkpoints,
                                          int threads) {
    const SpfTable table = build_spf_table(std::max<std::uint64_t>(N, 2));
    return summatory_table(id, table, N, checkpoints, threads);
}

double predicted_asymptote(FunctionId id, std::uint64_t N) {
    if (N < 3) throw std::invalid_argument("predicted_asymptote: N must be >= 3");
    static const double three_over_pi_sq =
        static_cast<double>(euler_product(ConstantId::three_over_pi_sq).value);
    static const double six_over_pi_sq =
        static_cast<double>(euler_product(ConstantId::six_over_pi_sq).value);
    const double Nd = static_cast<double>(N);
    const double lnN = std::log(Nd);
    auto euler = [](ConstantId cid) {
        return static_cast<double>(
            euler_product(cid, 5e-13, ProductStrategy::accelerated).value);
    };
    switch (id) {
        case FunctionId::phi: return three_over_pi_sq * Nd * Nd;
        case FunctionId::idem2omega: return six_over_pi_sq * Nd * lnN;
        case FunctionId::a: {
            static const double A = euler(ConstantId::A);
            return A * Nd * Nd;
        }
        case FunctionId::b: {
            static const double B = euler(ConstantId::B);
            return B * Nd * Nd;
        }
        case FunctionId::c: {
            static const double C = euler(ConstantId::C);
            return C * Nd * Nd;
        }
        case FunctionId::m: return 0.5 * Nd * Nd;
        case FunctionId::n_minus_m: return 0.375 * Nd * Nd / lnN;
        case FunctionId::g: {
            static const double Atilde = euler(ConstantId::Atilde);
            return Atilde * Nd * Nd / lnN;
        }
        default:
            throw no_asymptote_error(std::string("no known asymptote for ") +
                                     function_info(id).name);
    }
}

std::vector<KernelDiagnosticsRow> kernel_reciprocal_diagnostics(
    std::uint64_t N, const std::vector<std::uint64_t>& checkpoints) {
    // ln ln N must be positive for the de Bruijn ratio, so checkpoints start at 3
    if (N < 3) throw std::invalid_argument("kernel_reciprocal_diagnostics: N must be >= 3");
    check_checkpoints(checkpoints, N, 3);
    const SpfTable table = build_spf_table(N);

    // Exact rationals up to the exact tier; a single compensated sum in
    // ascending order carries the value beyond it.
    std::vector<KernelDiagnosticsRow> rows;
    detail::Kahan acc;
    mpq_class exact_sum(0);
    std::size_t next_cp = 0;
    for (std::uint64_t n = 1; n <= N && next_cp < checkpoints.size(); ++n) {
        const std::uint64_t kappa = kappa_of(n, table);
        acc.add(1.0 / static_cast<double>(kappa));
        if (n <= kExactKernelTier)
            exact_sum += mpq_class(1, static_cast<unsigned long>(kappa));
        if (n == checkpoints[next_cp]) {
            KernelDiagnosticsRow row;
            row.checkpoint = n;
            if (n <= kExactKernelTier) {
                row.sum = exact_sum.get_d();
                row.exact = exact_sum.get_str();
            } else {
                row.sum = acc.sum;
            }
            const double lnN = std::log(static_cast<double>(n));
            row.debruijn_ratio = std::log(row.sum) / std::sqrt(8 * lnN / std::log(lnN));
            rows.push_back(row);
            ++next_cp;
        }
    }
    return rows;
}

}  // namespace modcensus
