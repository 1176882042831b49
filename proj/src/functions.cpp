#include "modcensus/functions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace modcensus {

namespace {

std::uint64_t ipow(std::uint64_t p, std::uint32_t r) {
    std::uint64_t out = 1;
    while (r--) out *= p;
    return out;
}

// Prime-power rules. Branch conditions are congruence conditions on the
// exponent; all exponent arithmetic is exact integer arithmetic.

std::uint64_t pp_phi(std::uint64_t p, std::uint32_t r) {
    return ipow(p, r - 1) * (p - 1);
}

std::uint64_t pp_idem(std::uint64_t, std::uint32_t) { return 2; }

std::uint64_t pp_tau_le1(std::uint64_t p, std::uint32_t r) {
    return r == 1 ? p : ipow(p, r) - ipow(p, r - 1) + 1;
}

std::uint64_t pp_tau_le2(std::uint64_t p, std::uint32_t r) {
    if (r <= 2) return ipow(p, r);
    std::uint64_t root = (r % 2 == 1) ? ipow(p, (r - 1) / 2) : ipow(p, r / 2);
    return ipow(p, r) - ipow(p, r - 1) + root;
}

std::uint64_t pp_tau_le3(std::uint64_t p, std::uint32_t r) {
    if (r <= 3) return ipow(p, r);
    std::uint64_t root;
    switch (r % 3) {
        case 1: root = ipow(p, 2 * (r - 1) / 3); break;
        case 2: root = ipow(p, (2 * r - 1) / 3); break;
        default: root = ipow(p, 2 * r / 3); break;
    }
    return ipow(p, r) - ipow(p, r - 1) + root;
}

std::uint64_t pp_sigma_div1(std::uint64_t p, std::uint32_t r) {
    return r == 1 ? 2 : ipow(p, r - 1) + 1;
}

std::uint64_t pp_sigma_div2(std::uint64_t p, std::uint32_t r) {
    if (p == 2) return r <= 2 ? ipow(2, r) : ipow(2, r - 1) + 4;
    return r == 1 ? 3 : ipow(p, r - 1) + 2;
}

std::uint64_t pp_sigma_div3(std::uint64_t p, std::uint32_t r) {
    if (p == 3) return r == 1 ? 2 : ipow(3, r - 1) + 3;
    if (p % 3 == 2) return r == 1 ? 2 : ipow(p, r - 1) + 1;
    return r == 1 ? 4 : ipow(p, r - 1) + 3;
}

std::uint64_t pp_nilpotent(std::uint64_t p, std::uint32_t r) {
    return r == 1 ? 1 : ipow(p, r - 1);
}

std::uint64_t pp_kernel(std::uint64_t p, std::uint32_t) { return p; }

constexpr FunctionInfo kFunctionTable[] = {
    {FunctionId::phi, "phi", true, pp_phi, true},
    {FunctionId::idem2omega, "idem2omega", true, pp_idem, true},
    {FunctionId::a, "a", true, pp_tau_le1, true},
    {FunctionId::b, "b", true, pp_tau_le2, true},
    {FunctionId::c, "c", true, pp_tau_le3, true},
    {FunctionId::u, "u", true, pp_sigma_div1, false},
    {FunctionId::v, "v", true, pp_sigma_div2, false},
    {FunctionId::w, "w", true, pp_sigma_div3, false},
    {FunctionId::sigma_le3, "sigma_le3", false, nullptr, false},
    {FunctionId::m, "m", false, nullptr, true},
    {FunctionId::z, "z", true, pp_nilpotent, false},
    {FunctionId::kappa, "kappa", true, pp_kernel, false},
    {FunctionId::psi, "psi", false, nullptr, false},
    {FunctionId::g, "g", false, nullptr, true},
    {FunctionId::h, "h", false, nullptr, false},
    {FunctionId::n_minus_m, "n_minus_m", false, nullptr, true},
};

}  // namespace

const FunctionInfo& function_info(FunctionId id) {
    return kFunctionTable[static_cast<std::size_t>(id)];
}

std::optional<FunctionId> function_from_name(std::string_view name) {
    for (const FunctionInfo& info : kFunctionTable)
        if (name == info.name) return info.id;
    return std::nullopt;
}

std::uint64_t count_tau_le(const FactoredInteger& n, unsigned T) {
    switch (T) {
        case 1: return eval_multiplicative(pp_tau_le1, n);
        case 2: return eval_multiplicative(pp_tau_le2, n);
        case 3: return eval_multiplicative(pp_tau_le3, n);
    }
    throw std::invalid_argument("count_tau_le: T must be 1, 2, or 3");
}

std::uint64_t count_sigma_div(const FactoredInteger& n, unsigned T) {
    switch (T) {
        case 1: return eval_multiplicative(pp_sigma_div1, n);
        case 2: return eval_multiplicative(pp_sigma_div2, n);
        case 3: return eval_multiplicative(pp_sigma_div3, n);
    }
    throw std::invalid_argument("count_sigma_div: T must be 1, 2, or 3");
}

std::uint64_t count_sigma_le3(const FactoredInteger& n) {
    // sigma <= 3 iff sigma | 2 or sigma | 3; inclusion-exclusion on the
    // overlap sigma = 1.
    return count_sigma_div(n, 3) + count_sigma_div(n, 2) - count_sigma_div(n, 1);
}

std::uint64_t half_period_count(const FactoredInteger& f) {
    const std::uint64_t n = f.n;
    // n = 1, 2 sit outside the piecewise formula (the unit count is odd
    // there); the defining census gives m(1) = 1, m(2) = 2, which the final
    // branch also yields.
    if (n == 4) return 3;
    if (f.factors.size() == 1 && f.factors[0].p > 2) {
        const auto& [p, r] = f.factors[0];
        return ipow(p, r - 1) * (p + 1) / 2;
    }
    if (f.factors.size() == 2 && f.factors[0].p == 2 && f.factors[0].r == 1) {
        const auto& [p, r] = f.factors[1];
        return ipow(p, r - 1) * (p + 1);
    }
    return n;
}

std::uint64_t half_period_count(std::uint64_t n) {
    return half_period_count(factorize(n));
}

std::uint64_t nilpotent_count(const FactoredInteger& n) {
    return eval_multiplicative(pp_nilpotent, n);
}

std::uint64_t carmichael(const FactoredInteger& f) {
    std::uint64_t l = 1;
    for (const auto& [p, r] : f.factors) {
        std::uint64_t component;
        if (p == 2)
            component = r == 1 ? 1 : (r == 2 ? 2 : ipow(2, r - 2));
        else
            component = ipow(p, r - 1) * (p - 1);
        l = std::lcm(l, component);
    }
    return l;
}

std::uint64_t carmichael(std::uint64_t n) { return carmichael(factorize(n)); }

std::uint64_t primitive_root_count(const FactoredInteger& f, const SpfTable* table) {
    const std::uint64_t n = f.n;
    bool cyclic = n <= 4;
    if (!cyclic && f.factors.size() == 1 && f.factors[0].p > 2) cyclic = true;
    if (!cyclic && f.factors.size() == 2 && f.factors[0].p == 2 && f.factors[0].r == 1)
        cyclic = true;
    if (!cyclic) return 0;
    const std::uint64_t phi = totient(f);
    FactoredInteger phi_f = (table && phi >= 1 && phi <= table->limit)
                                ? factorize(phi, *table)
                                : factorize(phi);
    return totient(phi_f);
}

std::uint64_t primitive_root_count(std::uint64_t n) {
    return primitive_root_count(factorize(n), nullptr);
}

std::uint64_t max_order_count(std::uint64_t n, std::uint64_t budget) {
    if (n == 0) throw std::invalid_argument("max_order_count: n must be positive");
    if (n > budget)
        throw budget_error("max_order_count: n = " + std::to_string(n) +
                           " exceeds the brute-force budget of " + std::to_string(budget));
    if (n == 1) return 1;
    const std::uint64_t psi = carmichael(factorize(n));
    std::vector<std::uint64_t> psi_primes;
    for (const auto& [q, r] : factorize(psi).factors) psi_primes.push_back(q);

    std::uint64_t count = 0;
    for (std::uint64_t x = 1; x < n; ++x) {
        if (std::gcd(x, n) != 1) continue;
        // order(x) = psi iff x^psi = 1 and x^(psi/q) != 1 for all prime q | psi
        if (powmod(x, psi, n) != 1) continue;
        bool maximal = true;
        for (std::uint64_t q : psi_primes) {
            if (powmod(x, psi / q, n) == 1) {
                maximal = false;
                break;
            }
        }
        if (maximal) ++count;
    }
    return count;
}

std::uint64_t idempotent_count(const FactoredInteger& n) {
    const std::uint32_t omega = omega_kernel(n).omega;
    if (omega >= 64) throw std::overflow_error("idempotent_count: 2^omega overflows");
    return std::uint64_t{1} << omega;
}

std::uint64_t evaluate(FunctionId id, const FactoredInteger& f, const SpfTable* table,
                       std::uint64_t brute_budget) {
    switch (id) {
        case FunctionId::phi: return totient(f);
        case FunctionId::idem2omega: return idempotent_count(f);
        case FunctionId::a: return count_tau_le(f, 1);
        case FunctionId::b: return count_tau_le(f, 2);
        case FunctionId::c: return count_tau_le(f, 3);
        case FunctionId::u: return count_sigma_div(f, 1);
        case FunctionId::v: return count_sigma_div(f, 2);
        case FunctionId::w: return count_sigma_div(f, 3);
        case FunctionId::sigma_le3: return count_sigma_le3(f);
        case FunctionId::m: return half_period_count(f);
        case FunctionId::z: return nilpotent_count(f);
        case FunctionId::kappa: return omega_kernel(f).kernel;
        case FunctionId::psi: return carmichael(f);
        case FunctionId::g: return primitive_root_count(f, table);
        case FunctionId::h: return max_order_count(f.n, brute_budget);
        case FunctionId::n_minus_m: return f.n - half_period_count(f);
    }
    throw std::invalid_argument("evaluate: unknown function id");
}

std::uint64_t evaluate(FunctionId id, std::uint64_t n, std::uint64_t brute_budget) {
    return evaluate(id, factorize(n), nullptr, brute_budget);
}

OracleValues oracle_census(std::uint64_t n, std::uint64_t budget) {
    const auto profile = orbit_profile(n, budget);

    std::uint64_t phi = 0, psi = 0;
    for (const OrbitRecord& r : profile) {
        if (r.tau == 0) {
            ++phi;
            if (r.sigma > psi) psi = r.sigma;
        }
    }
    const std::uint64_t half_phi = (phi + 1) / 2;

    std::uint64_t idem = 0, a = 0, b = 0, c = 0, u = 0, v = 0, w = 0;
    std::uint64_t s3 = 0, m = 0, z = 0, g = 0, h = 0;
    for (const OrbitRecord& r : profile) {
        if (r.sigma == 1 && r.tau <= 1) ++idem;
        if (r.tau <= 1) ++a;
        if (r.tau <= 2) ++b;
        if (r.tau <= 3) ++c;
        if (r.sigma == 1) ++u;
        if (2 % r.sigma == 0) ++v;
        if (3 % r.sigma == 0) ++w;
        if (r.sigma <= 3) ++s3;
        if (half_phi % r.sigma == 0) ++m;
        if (r.nilpotent) ++z;
        if (r.tau == 0 && r.sigma == phi) ++g;
        if (r.tau == 0 && r.sigma == psi) ++h;
    }

    OracleValues out;
    auto set = [&out](FunctionId id, std::uint64_t v) {
        out.value[static_cast<std::size_t>(id)] = v;
    };
    set(FunctionId::phi, phi);
    set(FunctionId::idem2omega, idem);
    set(FunctionId::a, a);
    set(FunctionId::b, b);
    set(FunctionId::c, c);
    set(FunctionId::u, u);
    set(FunctionId::v, v);
    set(FunctionId::w, w);
    set(FunctionId::sigma_le3, s3);
    set(FunctionId::m, m);
    set(FunctionId::z, z);
    set(FunctionId::kappa, n / z);
    set(FunctionId::psi, psi);
    set(FunctionId::g, g);
    set(FunctionId::h, h);
    return out;
}

std::uint64_t oracle_value(FunctionId id, std::uint64_t n, std::uint64_t budget) {
    if (id == FunctionId::n_minus_m)
        return n - oracle_census(n, budget)[FunctionId::m];
    return oracle_census(n, budget)[id];
}

std::optional<Mismatch> verify_formulas(std::uint64_t max_n, int threads,
                                        std::uint64_t budget) {
    if (max_n == 0) throw std::invalid_argument("verify_formulas: max_n must be positive");
    if (max_n > budget)
        throw budget_error("verify_formulas: max_n exceeds the brute-force budget");
    const SpfTable table = build_spf_table(std::max<std::uint64_t>(max_n, 2));

    std::vector<Mismatch> found;
#ifdef _OPENMP
    const int requested = threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
    const int requested = 1;
#endif
#pragma omp parallel for schedule(dynamic, 16) num_threads(requested)
    for (std::int64_t n = 1; n <= static_cast<std::int64_t>(max_n); ++n) {
        const OracleValues oracle = oracle_census(static_cast<std::uint64_t>(n), budget);
        const FactoredInteger f = factorize(static_cast<std::uint64_t>(n), table);
        for (FunctionId id : kCensusFunctions) {
            const std::uint64_t formula = evaluate(id, f, &table, budget);
            if (formula != oracle[id]) {
#pragma omp critical
                found.push_back({id, static_cast<std::uint64_t>(n), formula, oracle[id]});
            }
        }
    }
    if (found.empty()) return std::nullopt;
    std::sort(found.begin(), found.end(), [](const Mismatch& l, const Mismatch& r) {
        return std::pair(l.n, static_cast<int>(l.id)) < std::pair(r.n, static_cast<int>(r.id));
    });
    return found.front();
}

}  // namespace modcensus
