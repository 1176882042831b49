#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "modcensus/errors.hpp"

namespace modcensus {

// Working precision for all constants work is IEEE binary128 (~33 decimal
// digits): 12 target digits plus headroom for products of ~10^6 factors.
using qreal = __float128;

std::string qreal_to_string(qreal v, int digits = 33);

enum class ConstantId { A, B, C, Atilde, three_over_pi_sq, six_over_pi_sq };

const char* constant_name(ConstantId id);

/// A computed constant bracketing the true value: |true - value| <= tail_bound,
/// where tail_bound is derived analytically from the truncation parameters,
/// never fitted.
struct ConstantEstimate {
    ConstantId id;
    qreal value = 0;
    double tail_bound = 0;
    std::uint64_t prime_bound = 0;  // P: primes <= P handled directly
    unsigned series_depth = 0;      // K: power-series truncation (0 if direct)
};

enum class ProductStrategy { automatic, direct, accelerated };

/// Evaluates one constant as a tail-bounded Euler product.
///
/// Direct products run over primes <= P. The per-prime factor of A, B, C is
/// 1 - O(p^-3) or smaller, so P = 10^7 meets a 5e-13 target via the bound
/// |ln(1-x)| <= 2x for x <= 1/2 and an integral tail estimate.
///
/// The Atilde factor is 1 - O(p^-2) and needs acceleration: primes up to
/// 10^3 are multiplied directly and ln(factor) is expanded as a power
/// series in 1/p with exact rational coefficients (log_factor_series),
/// evaluated against prime zeta values for degrees 2..64.
///
/// Throws precision_error when target_error is below the 1e-13 floor or the
/// chosen strategy cannot reach it.
ConstantEstimate euler_product(ConstantId id, double target_error = 5e-13,
                               ProductStrategy strategy = ProductStrategy::automatic);

/// P(k) = Sum_p p^-k via Moebius inversion of ln zeta(jk).
qreal prime_zeta(unsigned k);

/// zeta(s) for real s > 1 by direct summation with an Euler-Maclaurin tail.
qreal riemann_zeta_real(qreal s);

/// Exact rational coefficients e_0..e_K with
///   ln(factor_id(p)) = Sum_{k=2..K} e_k p^-k + remainder,
/// |remainder| <= Sum_{k>K} 2^k p^-k for p >= 3 (the factor's singularities
/// in 1/p all lie outside radius 1/2, and |e_k| <= 2^k is asserted for the
/// computed range).
std::vector<mpq_class> log_factor_series(ConstantId id, unsigned K);

/// Truncation of the lattice-sum formula for A:
///   (3/pi^2) Sum_l (1/l^2) Prod_{p|l} p/(p+1).
struct JoshiSum {
    double value = 0;
    double tail_bound = 0;  // <= (3/pi^2)/L
    std::uint64_t terms = 0;
};

JoshiSum joshi_sum(std::uint64_t L);

enum class SeriesId { a, b, c, u, v, w, m, z };

const char* series_name(SeriesId id);

/// Result of comparing a truncated Dirichlet sum against its truncated
/// closed form; both truncation bounds are analytic.
struct SeriesCheckReport {
    SeriesId series;
    double s = 0;
    std::uint64_t sum_limit = 0;    // N: Dirichlet sum over n <= N
    std::uint64_t prime_bound = 0;  // P: closed form over primes <= P
    double lhs = 0;
    double rhs = 0;
    double discrepancy = 0;
    double lhs_bound = 0;
    double rhs_bound = 0;

    double combined_bound() const { return lhs_bound + rhs_bound; }
};

/// a, b, c, m are weight-(s+1) series and need s > 1; u, v, w, z are
/// weight-s and need s > 2. Throws std::domain_error outside the region.
SeriesCheckReport dirichlet_identity_check(SeriesId id, double s, std::uint64_t N,
                                           std::uint64_t P);

/// Probe of the variational bound for Sum_{n<=N} 1/kappa(n): minimizes
/// N^y * Sum_n 1/(kappa(n) n^y) over y, the series evaluated as the Euler
/// product Prod_p (1 + 1/(p(p^y - 1))).
struct SchwarzProbe {
    std::uint64_t n = 0;
    double y_star = 0;
    double min_value = 0;    // N^y* * Sum at the minimizer
    double kernel_sum = 0;   // Sum_{n<=N} 1/kappa(n)
    double schwarz_ratio = 0;
};

SchwarzProbe schwarz_probe(std::uint64_t N, double tol = 1e-10,
                           std::uint64_t prime_bound = 1'000'000);

/// Two independent evaluations of Sum_n 1/(kappa(n) n^y): the Euler product
/// over primes <= prime_bound, and the direct sum truncated at N.
double kernel_reciprocal_dirichlet_product(double y, std::uint64_t prime_bound);
double kernel_reciprocal_dirichlet_direct(double y, std::uint64_t N);

}  // namespace modcensus
