#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "modcensus/factor.hpp"
#include "modcensus/orbit.hpp"

namespace modcensus {

/// The counting functions of the census, plus the derived n_minus_m series
/// used only for summatory prediction. The first fifteen ids form the
/// formula-vs-oracle sweep.
enum class FunctionId {
    phi,         // #units = #{tau = 0}
    idem2omega,  // #idempotents = 2^omega
    a,           // #{tau <= 1}
    b,           // #{tau <= 2}
    c,           // #{tau <= 3}
    u,           // #{sigma = 1}
    v,           // #{sigma | 2}
    w,           // #{sigma | 3}
    sigma_le3,   // #{sigma <= 3} = w - u + v
    m,           // #{sigma | ceil(phi/2)}
    z,           // #nilpotents = n / kappa
    kappa,       // square-free kernel
    psi,         // largest unit order (reduced totient)
    g,           // #units of order phi (primitive roots)
    h,           // #units of order psi
    n_minus_m,   // derived: n - m(n)
};

inline constexpr std::array<FunctionId, 15> kCensusFunctions = {
    FunctionId::phi, FunctionId::idem2omega, FunctionId::a,     FunctionId::b,
    FunctionId::c,   FunctionId::u,          FunctionId::v,     FunctionId::w,
    FunctionId::sigma_le3, FunctionId::m,    FunctionId::z,     FunctionId::kappa,
    FunctionId::psi, FunctionId::g,          FunctionId::h,
};

struct FunctionInfo {
    FunctionId id;
    const char* name;
    bool multiplicative;
    PrimePowerRule rule;  // prime-power rule when multiplicative, else null
    bool has_asymptote;
};

const FunctionInfo& function_info(FunctionId id);
std::optional<FunctionId> function_from_name(std::string_view name);

// Closed-form evaluators. T selects which bounded-transient (resp.
// bounded-period) count is wanted.
std::uint64_t count_tau_le(const FactoredInteger& n, unsigned T);     // T in {1,2,3}
std::uint64_t count_sigma_div(const FactoredInteger& n, unsigned T);  // T in {1,2,3}
std::uint64_t count_sigma_le3(const FactoredInteger& n);
std::uint64_t half_period_count(const FactoredInteger& n);
std::uint64_t half_period_count(std::uint64_t n);
std::uint64_t nilpotent_count(const FactoredInteger& n);
std::uint64_t carmichael(const FactoredInteger& n);
std::uint64_t carmichael(std::uint64_t n);
/// Nonzero exactly when the unit group is cyclic. The table, when given,
/// speeds up the inner totient-of-totient factorization.
std::uint64_t primitive_root_count(const FactoredInteger& n, const SpfTable* table = nullptr);
std::uint64_t primitive_root_count(std::uint64_t n);
/// Brute force; there is no closed form. Unit orders are tested against the
/// reduced totient by checking x^(psi/q) for each prime q | psi.
std::uint64_t max_order_count(std::uint64_t n, std::uint64_t budget = kDefaultBruteBudget);
std::uint64_t idempotent_count(const FactoredInteger& n);

/// Closed-form value of any function id (h falls back to brute force and is
/// subject to the budget).
std::uint64_t evaluate(FunctionId id, const FactoredInteger& n,
                       const SpfTable* table = nullptr,
                       std::uint64_t brute_budget = kDefaultBruteBudget);
std::uint64_t evaluate(FunctionId id, std::uint64_t n,
                       std::uint64_t brute_budget = kDefaultBruteBudget);

/// All fifteen census values of one n derived from a single orbit sweep,
/// indexed in kCensusFunctions order. Formula-free ground truth.
struct OracleValues {
    std::array<std::uint64_t, 15> value{};

    std::uint64_t operator[](FunctionId id) const {
        return value[static_cast<std::size_t>(id)];
    }
};

OracleValues oracle_census(std::uint64_t n, std::uint64_t budget = kDefaultBruteBudget);
std::uint64_t oracle_value(FunctionId id, std::uint64_t n,
                           std::uint64_t budget = kDefaultBruteBudget);

struct Mismatch {
    FunctionId id;
    std::uint64_t n = 0;
    std::uint64_t formula = 0;
    std::uint64_t oracle = 0;
};

/// Compares the closed forms against the orbit oracle for every n <= max_n
/// and all fifteen ids. Returns the mismatch with smallest (n, id), if any.
std::optional<Mismatch> verify_formulas(std::uint64_t max_n, int threads = 0,
                                        std::uint64_t budget = kDefaultBruteBudget);

}  // namespace modcensus
