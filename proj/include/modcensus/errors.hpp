#pragma once

#include <stdexcept>

namespace modcensus {

// A sieve, census, or brute-force request exceeds its configured budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A constant cannot be computed to the requested accuracy.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No asymptotic prediction exists for the requested function.
struct no_asymptote_error : std::domain_error {
    using std::domain_error::domain_error;
};

// The 1-d minimizer failed to bracket a minimum in its search window.
struct bracket_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace modcensus
