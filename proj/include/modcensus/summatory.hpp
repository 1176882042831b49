#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modcensus/functions.hpp"

namespace modcensus {

using int128 = __int128;

std::string to_string(int128 v);

/// One checkpoint of a partial-sum table. exact_sum is the exact integer
/// Sum_{n<=checkpoint} f(n); predicted/ratio are absent for ids whose
/// summatory growth is an open problem.
struct SummatoryRow {
    std::uint64_t checkpoint = 0;
    int128 exact_sum = 0;
    std::optional<double> predicted;
    std::optional<double> ratio;
};

/// values[n] = f(n) for 1 <= n <= N (values[0] = 0), computed by factoring
/// each n through the table. Parallel kernel; results are identical to the
/// serial reference for every thread count.
std::vector<std::uint64_t> sieve_function_values(FunctionId id, std::uint64_t N,
                                                 const SpfTable& table, int threads = 0);

/// Serial reference implementation kept for testing and benchmarking.
std::vector<std::uint64_t> sieve_function_values_serial(FunctionId id, std::uint64_t N,
                                                        const SpfTable& table);

/// Exact partial sums at the given ascending checkpoints (each in [10, N]).
/// Accumulation is in 128-bit integers and block-structured so the result is
/// bit-identical regardless of parallelism degree.
std::vector<SummatoryRow> summatory_table(FunctionId id, std::uint64_t N,
                                          const std::vector<std::uint64_t>& checkpoints,
                                          int threads = 0);
std::vector<SummatoryRow> summatory_table(FunctionId id, const SpfTable& table,
                                          std::uint64_t N,
                                          const std::vector<std::uint64_t>& checkpoints,
                                          int threads = 0);

/// Leading-order prediction for Sum_{n<=N} f(n). Supported ids: phi,
/// idem2omega, a, b, c, m, n_minus_m, g. Throws no_asymptote_error otherwise
/// (these growth rates are open problems).
double predicted_asymptote(FunctionId id, std::uint64_t N);

/// Diagnostics for S(N) = Sum_{n<=N} 1/kappa(n). Sums are exact rationals up
/// to the exact tier (10^4) and compensated doubles in ascending order above.
struct KernelDiagnosticsRow {
    std::uint64_t checkpoint = 0;
    double sum = 0;
    std::string exact;          // "p/q" within the exact tier, else empty
    double debruijn_ratio = 0;  // ln S(N) / sqrt(8 ln N / ln ln N)
};

inline constexpr std::uint64_t kExactKernelTier = 10'000;

std::vector<KernelDiagnosticsRow> kernel_reciprocal_diagnostics(
    std::uint64_t N, const std::vector<std::uint64_t>& checkpoints);

}  // namespace modcensus
