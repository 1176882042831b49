#include "modcensus/orbit.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace modcensus {

namespace {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % n);
}

// First-seen-index map over residues, reused across orbits of one Z_n via
// epoch stamping so repeated calls cost O(orbit length), not O(n).
struct OrbitScratch {
    std::vector<std::uint32_t> index;
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;

    void bind(std::uint64_t n) {
        if (index.size() < n) {
            index.assign(n, 0);
            stamp.assign(n, 0);
            epoch = 0;
        }
        if (++epoch == 0) {
            std::fill(stamp.begin(), stamp.end(), 0);
            epoch = 1;
        }
    }
};

constexpr std::uint64_t kScratchLimit = std::uint64_t{1} << 24;

struct RawStats {
    std::uint64_t sigma;
    std::uint64_t tau;
    bool nilpotent;
};

// n must fit the scratch path (n <= 2^32). The first repeated residue,
// first seen at index i and repeated at index j, gives tau = i, sigma = j-i.
RawStats orbit_run(std::uint64_t x, std::uint64_t n, OrbitScratch& s) {
    s.bind(n);
    std::uint64_t y = 1 % n;
    std::uint32_t k = 0;
    bool zero = (y == 0);
    const bool narrow = n <= (std::uint64_t{1} << 32);
    for (;;) {
        if (s.stamp[y] == s.epoch) {
            std::uint32_t i = s.index[y];
            return {k - i, i, zero};
        }
        s.stamp[y] = s.epoch;
        s.index[y] = k;
        y = narrow ? (y * x) % n : mulmod(y, x, n);
        ++k;
        if (y == 0) zero = true;
    }
}

RawStats orbit_run_sparse(std::uint64_t x, std::uint64_t n) {
    std::unordered_map<std::uint64_t, std::uint64_t> first;
    std::uint64_t y = 1 % n;
    std::uint64_t k = 0;
    bool zero = (y == 0);
    for (;;) {
        auto [it, inserted] = first.emplace(y, k);
        if (!inserted) return {k - it->second, it->second, zero};
        y = mulmod(y, x, n);
        ++k;
        if (y == 0) zero = true;
    }
}

thread_local OrbitScratch tls_scratch;

}  // namespace

OrbitStats orbit_stats(std::uint64_t x, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("orbit_stats: n must be positive");
    if (x >= n) throw std::invalid_argument("orbit_stats: x must satisfy 0 <= x < n");
    RawStats r = n <= kScratchLimit ? orbit_run(x, n, tls_scratch)
                                    : orbit_run_sparse(x, n);
    return {x, r.sigma, r.tau};
}

std::vector<OrbitRecord> orbit_profile(std::uint64_t n, std::uint64_t budget) {
    if (n == 0) throw std::invalid_argument("orbit_profile: n must be positive");
    if (n > budget || n >= (std::uint64_t{1} << 32))
        throw budget_error("orbit_profile: n = " + std::to_string(n) +
                           " exceeds the brute-force budget of " + std::to_string(budget));
    std::vector<OrbitRecord> out(n);
    for (std::uint64_t x = 0; x < n; ++x) {
        RawStats r = orbit_run(x, n, tls_scratch);
        out[x] = {static_cast<std::uint32_t>(r.sigma), static_cast<std::uint32_t>(r.tau),
                  r.nilpotent};
    }
    return out;
}

OrbitCensus census_by_orbit(std::uint64_t n, std::uint64_t budget) {
    OrbitCensus census;
    census.n = n;
    for (const OrbitRecord& r : orbit_profile(n, budget))
        ++census.counts[{r.sigma, r.tau}];
    return census;
}

std::uint64_t count_predicate(std::uint64_t n, Predicate pred, std::uint64_t T,
                              std::uint64_t budget) {
    const auto profile = orbit_profile(n, budget);
    std::uint64_t phi = 0;
    std::uint64_t psi = 0;
    for (const OrbitRecord& r : profile) {
        if (r.tau == 0) {
            ++phi;
            if (r.sigma > psi) psi = r.sigma;
        }
    }
    const std::uint64_t half_phi = (phi + 1) / 2;

    std::uint64_t count = 0;
    for (const OrbitRecord& r : profile) {
        bool hit = false;
        switch (pred) {
            case Predicate::tau_le: hit = r.tau <= T; break;
            case Predicate::sigma_divides: hit = T % r.sigma == 0; break;
            case Predicate::sigma_le: hit = r.sigma <= T; break;
            case Predicate::sigma_divides_half_phi: hit = half_phi % r.sigma == 0; break;
            case Predicate::nilpotent: hit = r.nilpotent; break;
            case Predicate::unit_sigma_eq_phi: hit = r.tau == 0 && r.sigma == phi; break;
            case Predicate::unit_sigma_eq_psi: hit = r.tau == 0 && r.sigma == psi; break;
            case Predicate::idempotent: hit = r.sigma == 1 && r.tau <= 1; break;
        }
        if (hit) ++count;
    }
    return count;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("powmod: n must be positive");
    std::uint64_t result = 1 % n;
    base %= n;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, n);
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    return result;
}

}  // namespace modcensus
