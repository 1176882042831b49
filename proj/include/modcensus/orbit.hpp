#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "modcensus/errors.hpp"

namespace modcensus {

inline constexpr std::uint64_t kDefaultBruteBudget = 1'000'000;

/// Period and transient length of the power sequence x^0, x^1, x^2, ... in Z_n.
/// sigma is the least m >= 1 with x^(k+m) = x^k for all large k; tau is the
/// least l >= 0 from which that periodicity holds.
struct OrbitStats {
    std::uint64_t x = 0;
    std::uint64_t sigma = 1;
    std::uint64_t tau = 0;
};

/// Per-element record produced by a full orbit sweep of Z_n.
struct OrbitRecord {
    std::uint32_t sigma = 1;
    std::uint32_t tau = 0;
    bool nilpotent = false;  // power sequence eventually reaches 0
};

struct OrbitCensus {
    std::uint64_t n = 0;
    // (sigma, tau) -> number of elements; values sum to n
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> counts;
};

/// Simulates the sequence from k = 0, recording the first index of each
/// residue; the first repeat at index j of a residue first seen at index i
/// yields tau = i, sigma = j - i. x^0 is the residue of 1 mod n (0 in Z_1).
OrbitStats orbit_stats(std::uint64_t x, std::uint64_t n);

/// (sigma, tau, nilpotent) for every x in Z_n, indexed by x.
/// Throws budget_error when n exceeds the brute-force budget.
std::vector<OrbitRecord> orbit_profile(std::uint64_t n,
                                       std::uint64_t budget = kDefaultBruteBudget);

OrbitCensus census_by_orbit(std::uint64_t n,
                            std::uint64_t budget = kDefaultBruteBudget);

enum class Predicate {
    tau_le,                 // tau(x) <= T
    sigma_divides,          // sigma(x) | T
    sigma_le,               // sigma(x) <= T
    sigma_divides_half_phi, // sigma(x) | ceil(#units / 2)
    nilpotent,              // x^k = 0 for some k >= 1
    unit_sigma_eq_phi,      // x a unit with sigma(x) = #units
    unit_sigma_eq_psi,      // x a unit with sigma(x) = max unit sigma
    idempotent,             // x^2 = x
};

/// Exact brute-force count of x in Z_n satisfying the predicate; T is the
/// parameter for tau_le / sigma_divides / sigma_le and ignored otherwise.
std::uint64_t count_predicate(std::uint64_t n, Predicate pred, std::uint64_t T = 0,
                              std::uint64_t budget = kDefaultBruteBudget);

/// (base^exp) mod n for any n >= 1.
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);

}  // namespace modcensus
