#include "modcensus/factor.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace modcensus {

std::uint64_t default_sieve_budget() {
    if (const char* env = std::getenv("MODCENSUS_SIEVE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 2) return v;
    }
    return std::uint64_t{1} << 28;
}

namespace {

std::uint64_t resolve_budget(std::uint64_t budget) {
    return budget == 0 ? default_sieve_budget() : budget;
}

}  // namespace

SpfTable build_spf_table(std::uint64_t N, std::uint64_t budget) {
    if (N < 2) throw std::invalid_argument("build_spf_table: N must be >= 2");
    budget = resolve_budget(budget);
    if (N > budget || N > std::numeric_limits<std::uint32_t>::max() - 1)
        throw budget_error("build_spf_table: N = " + std::to_string(N) +
                           " exceeds the sieve budget of " + std::to_string(budget) +
                           " entries");
    SpfTable t;
    t.limit = N;
    t.spf.assign(N + 1, 0);
    t.spf[1] = 1;
    for (std::uint64_t i = 2; i <= N; ++i) {
        if (t.spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= N; j += i)
            if (t.spf[j] == 0) t.spf[j] = static_cast<std::uint32_t>(i);
    }
    return t;
}

FactoredInteger factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    FactoredInteger f;
    f.n = n;
    if (n == 1) return f;
    auto strip = [&](std::uint64_t p) {
        std::uint32_t r = 0;
        while (n % p == 0) {
            n /= p;
            ++r;
        }
        if (r > 0) f.factors.push_back({p, r});
    };
    strip(2);
    strip(3);
    for (std::uint64_t d = 5; d <= n / d;) {
        strip(d);
        d += 2;
        if (d > n / d) break;
        strip(d);
        d += 4;  // wheel over 6k +- 1
    }
    if (n > 1) f.factors.push_back({n, 1});
    return f;
}

void factorize_into(std::uint64_t n, const SpfTable& table, FactoredInteger& out) {
    out.n = n;
    out.factors.clear();
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    if (n > table.limit)
        throw std::invalid_argument("factorize: n exceeds the table limit");
    while (n > 1) {
        std::uint64_t p = table.spf[n];
        std::uint32_t r = 0;
        while (n % p == 0) {
            n /= p;
            ++r;
        }
        out.factors.push_back({p, r});
    }
}

FactoredInteger factorize(std::uint64_t n, const SpfTable& table) {
    FactoredInteger f;
    factorize_into(n, table, f);
    return f;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("multiplicative value exceeds uint64 range");
    return out;
}

std::uint64_t checked_pow(std::uint64_t p, std::uint32_t r) {
    std::uint64_t out = 1;
    while (r--) out = checked_mul(out, p);
    return out;
}

std::uint64_t eval_multiplicative(PrimePowerRule rule, const FactoredInteger& n) {
    std::uint64_t out = 1;
    for (const auto& [p, r] : n.factors) out = checked_mul(out, rule(p, r));
    return out;
}

std::uint64_t totient(const FactoredInteger& n) {
    std::uint64_t out = 1;
    for (const auto& [p, r] : n.factors) {
        std::uint64_t pw = 1;
        for (std::uint32_t i = 1; i < r; ++i) pw *= p;
        out *= pw * (p - 1);
    }
    return out;
}

OmegaKernel omega_kernel(const FactoredInteger& n) {
    OmegaKernel ok;
    ok.omega = static_cast<std::uint32_t>(n.factors.size());
    for (const auto& [p, r] : n.factors) ok.kernel *= p;
    return ok;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t P, std::uint64_t budget) {
    if (P < 2) throw std::invalid_argument("primes_up_to: P must be >= 2");
    budget = resolve_budget(budget);
    if (P > budget)
        throw budget_error("primes_up_to: P = " + std::to_string(P) +
                           " exceeds the sieve budget of " + std::to_string(budget) +
                           " entries");
    std::vector<bool> composite(P + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= P; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        if (i > P / i) continue;
        for (std::uint64_t j = i * i; j <= P; j += i) composite[j] = true;
    }
    return primes;
}

}  // namespace modcensus
