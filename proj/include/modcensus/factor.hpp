#pragma once

#include <cstdint>
#include <vector>

#include "modcensus/errors.hpp"

namespace modcensus {

struct PrimePower {
    std::uint64_t p = 0;
    std::uint32_t r = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// An integer together with its full prime-power decomposition.
/// Invariants: primes strictly increasing, every exponent >= 1, and the
/// product of p^r equals n. n = 1 carries an empty factor list.
struct FactoredInteger {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;
};

/// Smallest-prime-factor table for 2..limit. Entries are 32-bit, so the
/// limit is capped at 2^32-1 independent of the memory budget.
/// Immutable once built; safe to share across threads.
struct SpfTable {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> spf;  // spf[i] valid for 2 <= i <= limit

    std::uint32_t operator[](std::uint64_t i) const { return spf[i]; }
};

/// Maximum number of sieve entries allowed per table. Taken from the
/// MODCENSUS_SIEVE_BUDGET environment variable when set, else 2^28.
std::uint64_t default_sieve_budget();

/// Builds the smallest-prime-factor table for 2..N.
/// Throws budget_error when N exceeds the budget (0 means default).
SpfTable build_spf_table(std::uint64_t N, std::uint64_t budget = 0);

/// Factorization by trial division; handles any n in [1, 2^63-1].
FactoredInteger factorize(std::uint64_t n);

/// Factorization via table lookup; requires n <= table.limit.
FactoredInteger factorize(std::uint64_t n, const SpfTable& table);

/// Allocation-free variant used by the sieve kernels.
void factorize_into(std::uint64_t n, const SpfTable& table, FactoredInteger& out);

using PrimePowerRule = std::uint64_t (*)(std::uint64_t p, std::uint32_t r);

/// Product of rule(p, r) over the factorization; 1 for n = 1.
/// Throws std::overflow_error when the product leaves uint64 range.
std::uint64_t eval_multiplicative(PrimePowerRule rule, const FactoredInteger& n);

std::uint64_t totient(const FactoredInteger& n);

struct OmegaKernel {
    std::uint32_t omega = 0;   // number of distinct prime factors
    std::uint64_t kernel = 1;  // product of the distinct prime factors
};

OmegaKernel omega_kernel(const FactoredInteger& n);

/// Exactly the primes <= P, ascending. Same budget rules as build_spf_table.
std::vector<std::uint64_t> primes_up_to(std::uint64_t P, std::uint64_t budget = 0);

/// a * b, throwing std::overflow_error on wrap.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

/// p^r in uint64 arithmetic, throwing std::overflow_error on wrap.
std::uint64_t checked_pow(std::uint64_t p, std::uint32_t r);

}  // namespace modcensus
