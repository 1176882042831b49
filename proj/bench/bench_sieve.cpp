// Compares the OpenMP sieve kernels against the serial reference and the
// parallel oracle sweep against a single-threaded one. Exits nonzero if any
// parallel result differs from its reference.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "modcensus/functions.hpp"
#include "modcensus/summatory.hpp"

using namespace modcensus;

namespace {

using clock_type = std::chrono::steady_clock;

double time_ms(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

bool bench_sieve(FunctionId id, std::uint64_t N, const SpfTable& table) {
    const auto t0 = clock_type::now();
    const auto serial = sieve_function_values_serial(id, N, table);
    const double serial_ms = time_ms(t0);

    const auto t1 = clock_type::now();
    const auto parallel = sieve_function_values(id, N, table);
    const double parallel_ms = time_ms(t1);

    const bool equal = serial == parallel;
    std::printf("  sieve %-10s N=%-9llu serial %8.1f ms   omp %8.1f ms   speedup %5.2fx   %s\n",
                function_info(id).name, static_cast<unsigned long long>(N), serial_ms,
                parallel_ms, serial_ms / parallel_ms, equal ? "match" : "MISMATCH");
    return equal;
}

bool bench_sweep(std::uint64_t max_n) {
    const auto t0 = clock_type::now();
    const auto serial = verify_formulas(max_n, 1);
    const double serial_ms = time_ms(t0);

    const auto t1 = clock_type::now();
    const auto parallel = verify_formulas(max_n);
    const double parallel_ms = time_ms(t1);

    const bool equal = !serial.has_value() && !parallel.has_value();
    std::printf("  oracle sweep to %-6llu       serial %8.1f ms   omp %8.1f ms   speedup %5.2fx   %s\n",
                static_cast<unsigned long long>(max_n), serial_ms, parallel_ms,
                serial_ms / parallel_ms, equal ? "match" : "MISMATCH");
    return equal;
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t N = 1'000'000;
    std::uint64_t sweep = 1500;
    if (argc > 1 && std::strcmp(argv[1], "--large") == 0) {
        N = 10'000'000;
        sweep = 2000;
    }

    std::printf("value sieves (parallel kernel vs serial reference)\n");
    const SpfTable table = build_spf_table(N);
    bool ok = true;
    for (FunctionId id : {FunctionId::phi, FunctionId::a, FunctionId::m, FunctionId::z,
                          FunctionId::g, FunctionId::sigma_le3})
        ok = bench_sieve(id, N, table) && ok;

    std::printf("orbit oracle sweep (all fifteen census functions)\n");
    ok = bench_sweep(sweep) && ok;

    if (!ok) {
        std::printf("parallel results diverged from the serial reference\n");
        return 1;
    }
    return 0;
}
