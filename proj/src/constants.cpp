#include "modcensus/constants.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "modcensus/detail/kahan.hpp"
#include "modcensus/factor.hpp"
#include "modcensus/summatory.hpp"

namespace modcensus {

namespace {

constexpr double kPrecisionFloor = 1e-13;

qreal qpow_uint(qreal x, std::uint64_t k) {
    qreal out = 1;
    while (k > 0) {
        if (k & 1) out *= x;
        x *= x;
        k >>= 1;
    }
    return out;
}

// B_2 .. B_32
struct BernoulliTerm {
    long long num;
    long long den;
};
constexpr BernoulliTerm kBernoulli[] = {
    {1, 6},         {-1, 30},         {1, 42},           {-1, 30},
    {5, 66},        {-691, 2730},     {7, 6},            {-3617, 510},
    {43867, 798},   {-174611, 330},   {854513, 138},     {-236364091, 2730},
    {8553103, 6},   {-23749461029, 870}, {8615841276005, 14322},
    {-7709321041217, 510},
};

int moebius(std::uint64_t n) {
    int sign = 1;
    for (const auto& [p, r] : factorize(n).factors) {
        if (r >= 2) return 0;
        sign = -sign;
    }
    return sign;
}

using Poly = std::vector<mpq_class>;

// log(f) as a truncated power series, f[0] == 1:
//   g_k = f_k - (1/k) * Sum_{j=1..k-1} j * g_j * f_{k-j}
Poly poly_log(const Poly& f, unsigned K) {
    Poly g(K + 1, mpq_class(0));
    for (unsigned k = 1; k <= K; ++k) {
        mpq_class acc = k < f.size() ? f[k] : mpq_class(0);
        mpq_class conv(0);
        for (unsigned j = 1; j < k; ++j) {
            if (k - j >= f.size()) continue;
            conv += mpq_class(static_cast<long>(j)) * g[j] * f[k - j];
        }
        acc -= conv / static_cast<long>(k);
        g[k] = acc;
    }
    return g;
}

Poly int_poly(std::initializer_list<long> coeffs) {
    Poly p;
    for (long c : coeffs) p.emplace_back(c);
    return p;
}

// Euler factor of each constant written as a rational function of t = 1/p.
struct FactorForm {
    Poly num;
    Poly den;
    qreal prefactor;
};

FactorForm factor_form(ConstantId id) {
    switch (id) {
        case ConstantId::A:
            // 1 - 1/(p^2(p+1)) = (1 + t - t^3) / (1 + t)
            return {int_poly({1, 1, 0, -1}), int_poly({1, 1}), qreal{1} / 2};
        case ConstantId::B:
            // 1 - 1/(p^2(p^2+p+1)) = (1 + t + t^2 - t^4) / (1 + t + t^2)
            return {int_poly({1, 1, 1, 0, -1}), int_poly({1, 1, 1}), qreal{1} / 2};
        case ConstantId::C:
            // 1 - 1/(p^2(p^3+p^2+p+1)) = (1 + t + t^2 + t^3 - t^5) / (1 + t + t^2 + t^3)
            return {int_poly({1, 1, 1, 1, 0, -1}), int_poly({1, 1, 1, 1}), qreal{1} / 2};
        case ConstantId::Atilde:
            // 1 - 1/(p(p-1)) = (1 - t - t^2) / (1 - t)
            return {int_poly({1, -1, -1}), int_poly({1, -1}), qreal{5} / 8};
        default:
            throw std::domain_error("constant has no Euler-factor expansion");
    }
}

qreal factor_term(ConstantId id, qreal p) {
    switch (id) {
        case ConstantId::A: return 1 / (p * p * (p + 1));
        case ConstantId::B: return 1 / (p * p * (p * p + p + 1));
        case ConstantId::C: return 1 / (p * p * (p * p * p + p * p + p + 1));
        case ConstantId::Atilde: return 1 / (p * (p - 1));
        default: throw std::domain_error("constant has no Euler-factor expansion");
    }
}

// Bound on |ln Prod_{p>P} (1 - term(p))| from |ln(1-x)| <= 2x for x <= 1/2
// and Sum_{n>P} n^-k <= P^(1-k)/(k-1).
double direct_log_tail(ConstantId id, double P) {
    switch (id) {
        case ConstantId::A: return 1.0 / (P * P);              // term < p^-3
        case ConstantId::B: return (2.0 / 3.0) / (P * P * P);  // term < p^-4
        case ConstantId::C: return 0.5 / (P * P * P * P);      // term < p^-5
        case ConstantId::Atilde: return 4.0 / P;               // term <= 2 p^-2
        default: return 0;
    }
}

ConstantEstimate intro_constant(ConstantId id) {
    const qreal pi_sq = M_PIq * M_PIq;
    ConstantEstimate est;
    est.id = id;
    est.value = (id == ConstantId::three_over_pi_sq ? qreal{3} : qreal{6}) / pi_sq;
    est.tail_bound = static_cast<double>(est.value * FLT128_EPSILON * 4);
    return est;
}

ConstantEstimate direct_product(ConstantId id, double target_error) {
    constexpr std::uint64_t kDirectPrimeBound = 10'000'000;
    const qreal prefactor = factor_form(id).prefactor;
    qreal product = 1;
    for (std::uint64_t p : primes_up_to(kDirectPrimeBound))
        product *= 1 - factor_term(id, static_cast<qreal>(p));

    ConstantEstimate est;
    est.id = id;
    est.value = prefactor * product;
    est.prime_bound = kDirectPrimeBound;
    est.tail_bound = static_cast<double>(
        est.value * expm1q(static_cast<qreal>(
                        direct_log_tail(id, static_cast<double>(kDirectPrimeBound)))));
    if (est.tail_bound > target_error)
        throw precision_error(std::string(constant_name(id)) +
                              ": direct product cannot reach the requested error; "
                              "use the accelerated strategy");
    return est;
}

ConstantEstimate accelerated_product(ConstantId id, double target_error) {
    constexpr std::uint64_t kBasePrimeBound = 1000;
    constexpr unsigned kSeriesDepth = 64;

    const FactorForm form = factor_form(id);
    const auto coeffs = log_factor_series(id, kSeriesDepth);
    const auto primes = primes_up_to(kBasePrimeBound);

    qreal log_sum = 0;
    for (std::uint64_t p : primes)
        log_sum += logq(1 - factor_term(id, static_cast<qreal>(p)));

    double pz_truncation = 0;
    for (unsigned k = 2; k <= kSeriesDepth; ++k) {
        if (coeffs[k] == 0) continue;
        qreal pzk = prime_zeta(k);
        for (std::uint64_t p : primes) pzk -= qpow_uint(qreal{1} / static_cast<qreal>(p), k);
        log_sum += static_cast<qreal>(coeffs[k].get_d()) * pzk;
        // ln zeta terms with jk > 128 are dropped inside prime_zeta
        pz_truncation += std::abs(coeffs[k].get_d()) * std::pow(2.0, 3.0 - (128 / k + 1) * static_cast<double>(k));
    }

    // Series remainder over p > P0: |e_k| <= 2^k gives
    // Sum_{p>P0} Sum_{k>K} (2/p)^k <= (1/(1-2/P0)) * 2^(K+1) * P0^-K / K.
    const double P0 = static_cast<double>(kBasePrimeBound);
    const double series_remainder = (1.0 / (1.0 - 2.0 / P0)) *
                                    std::pow(2.0, kSeriesDepth + 1) *
                                    std::pow(P0, -static_cast<double>(kSeriesDepth)) /
                                    kSeriesDepth;

    ConstantEstimate est;
    est.id = id;
    est.value = form.prefactor * expq(log_sum);
    est.prime_bound = kBasePrimeBound;
    est.series_depth = kSeriesDepth;
    est.tail_bound = static_cast<double>(est.value) *
                     std::expm1(series_remainder + pz_truncation);
    est.tail_bound = std::max(est.tail_bound, static_cast<double>(est.value * FLT128_EPSILON * 16));
    if (est.tail_bound > target_error)
        throw precision_error(std::string(constant_name(id)) +
                              ": accelerated product cannot reach the requested error");
    return est;
}

}  // namespace

const char* constant_name(ConstantId id) {
    switch (id) {
        case ConstantId::A: return "A";
        case ConstantId::B: return "B";
        case ConstantId::C: return "C";
        case ConstantId::Atilde: return "Atilde";
        case ConstantId::three_over_pi_sq: return "three_over_pi_sq";
        case ConstantId::six_over_pi_sq: return "six_over_pi_sq";
    }
    return "?";
}

std::string qreal_to_string(qreal v, int digits) {
    char buf[128];
    quadmath_snprintf(buf, sizeof buf, "%.*Qg", digits, v);
    return buf;
}

qreal riemann_zeta_real(qreal s) {
    if (!(s > 1)) throw std::domain_error("riemann_zeta_real: need s > 1");
    constexpr int M = 64;
    qreal sum = 0;
    for (int n = 1; n < M; ++n) sum += powq(static_cast<qreal>(n), -s);
    const qreal Ms = powq(static_cast<qreal>(M), -s);
    sum += Ms / 2 + Ms * M / (s - 1);

    // Euler-Maclaurin correction: B_2j/(2j)! * (s)(s+1)...(s+2j-2) * M^(1-s-2j)
    qreal rising = s;               // product of (2j-1) factors
    qreal factorial = 2;            // (2j)!
    qreal mpow = Ms / M;            // M^(1-s-2j)
    for (std::size_t j = 1; j <= std::size(kBernoulli); ++j) {
        const qreal term = (static_cast<qreal>(kBernoulli[j - 1].num) /
                            static_cast<qreal>(kBernoulli[j - 1].den)) *
                           rising * mpow / factorial;
        if (j < std::size(kBernoulli)) sum += term;
        // the last tabulated term serves as the remainder bound; at M = 64
        // it is far below quad epsilon for every s used here
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        factorial *= (2 * j + 1) * (2 * j + 2);
        mpow /= M * M;
    }
    return sum;
}

qreal prime_zeta(unsigned k) {
    if (k < 2) throw std::invalid_argument("prime_zeta: need k >= 2");
    // P(k) = Sum_j mu(j)/j * ln zeta(jk); terms with jk > 128 fall below
    // 2^-125 and are dropped.
    qreal total = 0;
    for (std::uint64_t j = 1; j * k <= 128; ++j) {
        const int mu = moebius(j);
        if (mu == 0) continue;
        total += static_cast<qreal>(mu) *
                 logq(riemann_zeta_real(static_cast<qreal>(j * k))) / static_cast<qreal>(j);
    }
    return total;
}

std::vector<mpq_class> log_factor_series(ConstantId id, unsigned K) {
    if (K < 2) throw std::invalid_argument("log_factor_series: need K >= 2");
    const FactorForm form = factor_form(id);
    const Poly log_num = poly_log(form.num, K);
    const Poly log_den = poly_log(form.den, K);
    Poly out(K + 1, mpq_class(0));
    for (unsigned k = 0; k <= K; ++k) out[k] = log_num[k] - log_den[k];
    if (out[0] != 0 || out[1] != 0)
        throw std::logic_error("log_factor_series: expansion must start at degree 2");
    mpz_class geometric(2);
    for (unsigned k = 2; k <= K; ++k) {
        geometric *= 2;
        if (abs(out[k]) > geometric)
            throw std::logic_error("log_factor_series: coefficient bound |e_k| <= 2^k failed");
    }
    return out;
}

ConstantEstimate euler_product(ConstantId id, double target_error,
                               ProductStrategy strategy) {
    if (target_error < kPrecisionFloor)
        throw precision_error("target error below the 1e-13 working-precision floor");
    if (id == ConstantId::three_over_pi_sq || id == ConstantId::six_over_pi_sq)
        return intro_constant(id);
    switch (strategy) {
        case ProductStrategy::direct: return direct_product(id, target_error);
        case ProductStrategy::accelerated: return accelerated_product(id, target_error);
        case ProductStrategy::automatic:
            return id == ConstantId::Atilde ? accelerated_product(id, target_error)
                                            : direct_product(id, target_error);
    }
    throw std::invalid_argument("euler_product: unknown strategy");
}

JoshiSum joshi_sum(std::uint64_t L) {
    if (L == 0) throw std::invalid_argument("joshi_sum: L must be positive");
    static const double kThreeOverPiSq =
        static_cast<double>(qreal{3} / (M_PIq * M_PIq));
    detail::Kahan acc;
    if (L == 1) {
        acc.add(1.0);
    } else {
        const SpfTable table = build_spf_table(L);
        for (std::uint64_t l = 1; l <= L; ++l) {
            double factor = 1.0;
            std::uint64_t rest = l;
            while (rest > 1) {
                const std::uint64_t p = table.spf[rest];
                factor *= static_cast<double>(p) / static_cast<double>(p + 1);
                while (rest % p == 0) rest /= p;
            }
            acc.add(factor / (static_cast<double>(l) * static_cast<double>(l)));
        }
    }
    JoshiSum out;
    out.terms = L;
    out.value = kThreeOverPiSq * acc.sum;
    out.tail_bound = kThreeOverPiSq / static_cast<double>(L);
    return out;
}

namespace {

struct SeriesTraits {
    FunctionId fn;
    bool weight_shifted;     // series in n^(s+1) rather than n^s
    double tail_coefficient; // per-prime factor bound: term <= coeff * p^-s
};

SeriesTraits series_traits(SeriesId id) {
    switch (id) {
        case SeriesId::a: return {FunctionId::a, true, 4};
        case SeriesId::b: return {FunctionId::b, true, 8};
        case SeriesId::c: return {FunctionId::c, true, 12};
        case SeriesId::u: return {FunctionId::u, false, 8};
        case SeriesId::v: return {FunctionId::v, false, 12};
        case SeriesId::w: return {FunctionId::w, false, 16};
        case SeriesId::m: return {FunctionId::m, true, 0};
        case SeriesId::z: return {FunctionId::z, false, 2};
    }
    throw std::invalid_argument("unknown series id");
}

double euler_factor(SeriesId id, double p, double s) {
    using std::pow;
    switch (id) {
        case SeriesId::a:
            return (pow(p, s + 2) - 2 * p + 1) /
                   (p * (pow(p, s + 1) - 1) * (pow(p, s) - 1));
        case SeriesId::b:
            return (pow(p, 3 * s + 2) + pow(p, 2 * s + 2) - 2 * pow(p, s + 1) +
                    pow(p, s) - 2 * p + 1) /
                   (p * (pow(p, 2 * s + 1) - 1) * (pow(p, 2 * s) - 1));
        case SeriesId::c:
            return (pow(p, 5 * s + 2) + pow(p, 4 * s + 2) + pow(p, 3 * s + 2) -
                    2 * pow(p, 2 * s + 1) + pow(p, 2 * s) - 2 * pow(p, s + 1) +
                    pow(p, s) - 2 * p + 1) /
                   (p * (pow(p, 3 * s + 1) - 1) * (pow(p, 3 * s) - 1));
        case SeriesId::u:
            return (2 * pow(p, s) - p - 1) /
                   (p * (pow(p, s) - 1) * (pow(p, s - 1) - 1));
        case SeriesId::v:
            return (3 * pow(p, s) - 2 * p - 1) /
                   (p * (pow(p, s) - 1) * (pow(p, s - 1) - 1));
        case SeriesId::w:
            if (std::fmod(p, 3.0) == 2.0)
                return (2 * pow(p, s) - p - 1) /
                       (p * (pow(p, s) - 1) * (pow(p, s - 1) - 1));
            return (4 * pow(p, s) - 3 * p - 1) /
                   (p * (pow(p, s) - 1) * (pow(p, s - 1) - 1));
        default:
            throw std::invalid_argument("series has no generic Euler factor");
    }
}

}  // namespace

const char* series_name(SeriesId id) {
    switch (id) {
        case SeriesId::a: return "a";
        case SeriesId::b: return "b";
        case SeriesId::c: return "c";
        case SeriesId::u: return "u";
        case SeriesId::v: return "v";
        case SeriesId::w: return "w";
        case SeriesId::m: return "m";
        case SeriesId::z: return "z";
    }
    return "?";
}

SeriesCheckReport dirichlet_identity_check(SeriesId id, double s, std::uint64_t N,
                                           std::uint64_t P) {
    const SeriesTraits traits = series_traits(id);
    if (traits.weight_shifted) {
        if (!(s > 1)) throw std::domain_error("series converges only for s > 1");
    } else {
        if (!(s > 2)) throw std::domain_error("series converges only for s > 2");
    }
    if (N < 100 || P < 100)
        throw std::invalid_argument("dirichlet_identity_check: need N, P >= 100");

    SeriesCheckReport report;
    report.series = id;
    report.s = s;
    report.sum_limit = N;
    report.prime_bound = P;

    // Dirichlet sum side, sieved values, fixed ascending order.
    {
        const SpfTable table = build_spf_table(N);
        const auto values = sieve_function_values(traits.fn, N, table);
        const double expo = traits.weight_shifted ? s + 1 : s;
        detail::Kahan acc;
        for (std::uint64_t n = 1; n <= N; ++n)
            acc.add(static_cast<double>(values[n]) /
                    std::pow(static_cast<double>(n), expo));
        report.lhs = acc.sum;
    }
    // f(n) <= n throughout, so the dropped terms are below n^-s (shifted
    // weight) or n^(1-s).
    report.lhs_bound = traits.weight_shifted
                           ? std::pow(static_cast<double>(N), 1 - s) / (s - 1)
                           : std::pow(static_cast<double>(N), 2 - s) / (s - 2);

    // Closed-form side.
    const auto primes = primes_up_to(P);
    const double log_tail =
        traits.tail_coefficient * std::pow(static_cast<double>(P), 1 - s) / (s - 1);
    switch (id) {
        case SeriesId::a:
        case SeriesId::b:
        case SeriesId::c:
        case SeriesId::u: {
            double prod = 1;
            for (std::uint64_t p : primes)
                prod *= 1 + euler_factor(id, static_cast<double>(p), s);
            report.rhs = prod;
            report.rhs_bound = prod * std::expm1(log_tail);
            break;
        }
        case SeriesId::v: {
            // exact 2-part: 1 + 2/2^s + 4/2^2s + (2^(s+2) - 6)/(2^2s (2^s-1)(2^(s-1)-1))
            const double two_s = std::pow(2.0, s);
            double prod = 1 + 2 / two_s + 4 / (two_s * two_s) +
                          (4 * two_s - 6) /
                              (two_s * two_s * (two_s - 1) * (std::pow(2.0, s - 1) - 1));
            for (std::uint64_t p : primes)
                if (p > 2) prod *= 1 + euler_factor(id, static_cast<double>(p), s);
            report.rhs = prod;
            report.rhs_bound = prod * std::expm1(log_tail);
            break;
        }
        case SeriesId::w: {
            // exact 3-part: 1 + 2/3^s + (2*3^s - 4)/(3^s (3^s-1)(3^(s-1)-1))
            const double three_s = std::pow(3.0, s);
            double prod = 1 + 2 / three_s +
                          (2 * three_s - 4) /
                              (three_s * (three_s - 1) * (std::pow(3.0, s - 1) - 1));
            for (std::uint64_t p : primes)
                if (p != 3) prod *= 1 + euler_factor(id, static_cast<double>(p), s);
            report.rhs = prod;
            report.rhs_bound = prod * std::expm1(log_tail);
            break;
        }
        case SeriesId::m: {
            // zeta(s) - 4^-(s+1) - (2^s+1)/2^(s+1) * Sum_{2<p<=P} (p-1)/(p(p^s-1))
            const double prefactor =
                (std::pow(2.0, s) + 1) / std::pow(2.0, s + 1);
            detail::Kahan acc;
            for (std::uint64_t p : primes) {
                if (p == 2) continue;
                const double pd = static_cast<double>(p);
                acc.add((pd - 1) / (pd * (std::pow(pd, s) - 1)));
            }
            report.rhs = static_cast<double>(riemann_zeta_real(static_cast<qreal>(s))) -
                         std::pow(4.0, -(s + 1)) - prefactor * acc.sum;
            // dropped prime terms are below 2 p^-s each
            report.rhs_bound =
                prefactor * 2 * std::pow(static_cast<double>(P), 1 - s) / (s - 1) + 1e-30;
            break;
        }
        case SeriesId::z: {
            double prod = 1;
            for (std::uint64_t p : primes) {
                const double pd = static_cast<double>(p);
                prod *= 1 + 1 / (pd * (std::pow(pd, s - 1) - 1));
            }
            report.rhs = prod;
            report.rhs_bound = prod * std::expm1(log_tail);
            break;
        }
    }
    report.discrepancy = std::abs(report.lhs - report.rhs);
    return report;
}

double kernel_reciprocal_dirichlet_product(double y, std::uint64_t prime_bound) {
    if (!(y > 0)) throw std::invalid_argument("need y > 0");
    double prod = 1;
    for (std::uint64_t p : primes_up_to(prime_bound)) {
        const double pd = static_cast<double>(p);
        prod *= 1 + 1 / (pd * (std::pow(pd, y) - 1));
    }
    return prod;
}

double kernel_reciprocal_dirichlet_direct(double y, std::uint64_t N) {
    if (!(y > 0)) throw std::invalid_argument("need y > 0");
    const SpfTable table = build_spf_table(std::max<std::uint64_t>(N, 2));
    detail::Kahan acc;
    for (std::uint64_t n = 1; n <= N; ++n) {
        std::uint64_t kappa = 1;
        std::uint64_t rest = n;
        while (rest > 1) {
            const std::uint64_t p = table.spf[rest];
            kappa *= p;
            while (rest % p == 0) rest /= p;
        }
        acc.add(1.0 / (static_cast<double>(kappa) * std::pow(static_cast<double>(n), y)));
    }
    return acc.sum;
}

SchwarzProbe schwarz_probe(std::uint64_t N, double tol, std::uint64_t prime_bound) {
    if (N < 16) throw std::invalid_argument("schwarz_probe: need N >= 16");
    if (tol < 1e-10) throw std::invalid_argument("schwarz_probe: need tol >= 1e-10");

    const auto primes = primes_up_to(prime_bound);
    std::vector<double> log_p;
    log_p.reserve(primes.size());
    for (std::uint64_t p : primes) log_p.push_back(std::log(static_cast<double>(p)));

    const double log_N = std::log(static_cast<double>(N));
    auto log_objective = [&](double y) {
        detail::Kahan acc;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            const double pd = static_cast<double>(primes[i]);
            acc.add(std::log1p(1 / (pd * (std::exp(y * log_p[i]) - 1))));
        }
        return y * log_N + acc.sum;
    };

    // Bracket by scanning a geometric y-grid down from 4 until the objective
    // turns back up.
    double y2 = 4.0, y1 = 0, y0 = 0;
    double f2 = log_objective(y2), f1 = 0, f0 = 0;
    bool bracketed = false;
    double hi = 0, lo = 0;
    y1 = y2 * 0.8;
    f1 = log_objective(y1);
    for (double y = y1 * 0.8; y > 1e-7; y *= 0.8) {
        y0 = y;
        f0 = log_objective(y0);
        if (f1 <= f2 && f1 <= f0) {
            lo = y0;
            hi = y2;
            bracketed = true;
            break;
        }
        y2 = y1; f2 = f1;
        y1 = y0; f1 = f0;
    }
    if (!bracketed)
        throw bracket_error("schwarz_probe: no interior minimum found in (0, 4]");

    // Golden-section refinement.
    const double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double fx1 = log_objective(x1);
    double fx2 = log_objective(x2);
    while (hi - lo > tol) {
        if (fx1 <= fx2) {
            hi = x2;
            x2 = x1;
            fx2 = fx1;
            x1 = hi - inv_phi * (hi - lo);
            fx1 = log_objective(x1);
        } else {
            lo = x1;
            x1 = x2;
            fx1 = fx2;
            x2 = lo + inv_phi * (hi - lo);
            fx2 = log_objective(x2);
        }
    }
    const double y_star = (lo + hi) / 2;
    const double log_min = log_objective(y_star);

    // Local-minimality probe.
    if (!(log_objective(y_star * 1.05) >= log_min &&
          log_objective(y_star * 0.95) >= log_min))
        throw bracket_error("schwarz_probe: computed point is not a local minimum");

    SchwarzProbe probe;
    probe.n = N;
    probe.y_star = y_star;
    probe.min_value = std::exp(log_min);

    const SpfTable table = build_spf_table(N);
    detail::Kahan kernel;
    for (std::uint64_t n = 1; n <= N; ++n) {
        std::uint64_t kappa = 1;
        std::uint64_t rest = n;
        while (rest > 1) {
            const std::uint64_t p = table.spf[rest];
            kappa *= p;
            while (rest % p == 0) rest /= p;
        }
        kernel.add(1.0 / static_cast<double>(kappa));
    }
    probe.kernel_sum = kernel.sum;

    const double scale = std::pow(2.0, -0.25) / std::sqrt(4 * M_PI) *
                         std::pow(std::log(log_N) / log_N, 0.25);
    probe.schwarz_ratio = probe.kernel_sum / (scale * probe.min_value);
    return probe;
}

}  // namespace modcensus
