#pragma once

// Closed-form antiderivatives of x^n/asin(x), x^{2k}/asin(x)^2 and
// x^n/ln(1+x), and their definite integrals over [0,1].
//
// Definite forms are evaluated from analytic limits, never numerically at
// the endpoints: sqrt(1-x^2) factors vanish at 1, and the gamma + ln(...)
// divergences of Ci/Ei at 0 cancel against the zero signed row sums, which
// turns lim_{x->0} of the even/log antiderivatives into the finite offsets
// sum coeff*ln(m) and sum coeff*ln(k+1).
//
// Row coefficients come from exact integer triangles up to a configurable
// index threshold; past it, a log-gamma floating-point path forms the
// coefficient * Si products directly (the coefficients themselves would
// need thousands of bits, but only an O(sqrt(n)) window around the peak
// contributes above 1e-22 relative).

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sinint/specfun.hpp"
#include "sinint/summation.hpp"
#include "sinint/triangles.hpp"

namespace sinint {

enum class Method { closed_form, closed_form_cancelled };

struct IntegralValue {
    double value;
    Method method;
    long row_index;
};

inline constexpr long default_exact_threshold = 512;

namespace detail {

inline constexpr long double ln2_l = 0.6931471805599453094172321214581765681L;

// ln(n!) in long double: direct log sum below 40, Stirling series with
// Bernoulli terms through B_18 above (truncation < 1e-30 there).
inline long double log_factorial(long n) {
    if (n < 2) return 0.0L;
    if (n < 40) {
        long double s = 0.0L;
        for (long i = 2; i <= n; ++i) s += std::log(static_cast<long double>(i));
        return s;
    }
    static constexpr long double half_ln_2pi = 0.9189385332046727417803297364056176398L;
    static constexpr long double c[9] = {
        1.0L / 12,       -1.0L / 360,       1.0L / 1260,
        -1.0L / 1680,    1.0L / 1188,       -691.0L / 360360,
        1.0L / 156,      -3617.0L / 122400, 43867.0L / 244188};
    const long double z = static_cast<long double>(n) + 1.0L;
    const long double zi = 1.0L / z;
    const long double zi2 = zi * zi;
    long double series = 0.0L;
    for (int i = 8; i >= 0; --i) series = series * zi2 + c[i];
    return (z - 0.5L) * std::log(z) - z + half_ln_2pi + series * zi;
}

// Si(m pi/2) for m = 1..max_m, shared across a whole series evaluation so
// that definite sums are table lookups in the hot loops.
class SiHalfPiTable {
public:
    explicit SiHalfPiTable(long max_m) : values_(static_cast<std::size_t>(max_m) + 1, 0.0) {
        for (long m = 1; m <= max_m; ++m)
            values_[static_cast<std::size_t>(m)] = si(static_cast<double>(m) * (std::numbers::pi / 2)).value;
    }
    double operator()(long m) const { return values_[static_cast<std::size_t>(m)]; }
    long max_m() const { return static_cast<long>(values_.size()) - 1; }

private:
    std::vector<double> values_;
};

struct InnerSum {
    long double value;
    long terms;
};

// Exact path for sum_k (-1)^(k+n) C(2n+1,k)(2n-2k+2)/((2n-k+2) 2^(2n+1))
//   * factor * Si(pi(n+1-k)),
// summed smallest multiplier first. Runs the binomial recurrence in exact
// integers, converting each coefficient at the last moment.
inline InnerSum odd_sum_exact(long n, long double factor, const SiHalfPiTable& tab) {
    // entries for k = n down to 0, i.e. multiplier 2 up to 2n+2
    std::vector<long double> coeffs(static_cast<std::size_t>(n) + 1);
    BigInt binom(1);  // C(2n+1, k)
    const unsigned scale = static_cast<unsigned>(2 * n + 1);
    for (long k = 0; k <= n; ++k) {
        if (k > 0) {
            binom.mul_small(static_cast<std::uint64_t>(2 * n + 2 - k));
            binom.div_exact_small(static_cast<std::uint64_t>(k));
        }
        BigInt c = binom;
        c.mul_small(static_cast<std::uint64_t>(2 * n - 2 * k + 2));
        c.div_exact_small(static_cast<std::uint64_t>(2 * n - k + 2));
        coeffs[static_cast<std::size_t>(k)] = c.to_long_double_scaled(scale);
    }
    NeumaierSumL acc;
    for (long k = n; k >= 0; --k) {
        long double w = coeffs[static_cast<std::size_t>(k)] * factor;
        if ((k + n) % 2 != 0) w = -w;
        acc.add(w * static_cast<long double>(tab(2 * (n + 1 - k))));
    }
    return {acc.value(), n + 1};
}

// Float path for the same sum with log(factor) folded in. Starts from the
// k = n coefficient via log-gamma and walks k downward through the
// significant window; everything below 1e-22 of the running peak is noise
// relative to the 1e-12 accuracy target and is dropped.
inline InnerSum odd_sum_float(long n, long double factor_log, const SiHalfPiTable& tab) {
    const long double log_u_n = log_factorial(2 * n + 1) - log_factorial(n) -
                                log_factorial(n + 1) +
                                std::log(2.0L / static_cast<long double>(n + 2)) -
                                static_cast<long double>(2 * n + 1) * ln2_l + factor_log;
    long double u = std::exp(log_u_n);
    long double umax = u;
    long double sign = 1.0L;  // (-1)^(k+n) at k = n
    NeumaierSumL acc;
    long terms = 0;
    for (long k = n; k >= 0; --k) {
        acc.add(sign * u * static_cast<long double>(tab(2 * (n + 1 - k))));
        ++terms;
        if (u < 1e-22L * umax) break;
        if (k > 0) {
            // u_{k-1} / u_k
            const long double r =
                static_cast<long double>(k) / static_cast<long double>(2 * n + 2 - k) *
                static_cast<long double>(2 * n - 2 * k + 4) / static_cast<long double>(2 * n - 2 * k + 2) *
                static_cast<long double>(2 * n - k + 2) / static_cast<long double>(2 * n - k + 3);
            u *= r;
            if (u > umax) umax = u;
            sign = -sign;
        }
    }
    return {acc.value(), terms};
}

inline InnerSum odd_definite_sum(long n, long double factor, long double factor_log,
                                 const SiHalfPiTable& tab, long exact_threshold) {
    if (n <= exact_threshold) return odd_sum_exact(n, factor, tab);
    return odd_sum_float(n, factor_log, tab);
}

// Exact path for the Si part of int_0^1 x^{2k}/asin(x)^2 dx:
//   2^{-2k} [ sum_{n=1}^{k} (-1)^n (2n-1)^2/(k+1-n) C(2k,k+n) Si((2n-1)pi/2)
//             + (-1)^(k+1) (2k+1) Si((2k+1)pi/2) ]
inline InnerSum invsq_sum_exact(long k, const SiHalfPiTable& tab) {
    NeumaierSumL acc;
    BigInt binom = binomial(static_cast<unsigned long>(2 * k),
                            static_cast<unsigned long>(k + 1));  // C(2k, k+n)
    const unsigned scale = static_cast<unsigned>(2 * k);
    for (long n = 1; n <= k; ++n) {
        if (n > 1) {
            binom.mul_small(static_cast<std::uint64_t>(k - n + 1));
            binom.div_exact_small(static_cast<std::uint64_t>(k + n));
        }
        BigInt c = binom;
        const std::uint64_t odd = static_cast<std::uint64_t>(2 * n - 1);
        c.mul_small(odd * odd);
        c.div_exact_small(static_cast<std::uint64_t>(k + 1 - n));
        long double w = c.to_long_double_scaled(scale);
        if (n % 2 != 0) w = -w;
        acc.add(w * static_cast<long double>(tab(2 * n - 1)));
    }
    long double top = std::ldexp(static_cast<long double>(2 * k + 1), static_cast<int>(-2 * k));
    if (k % 2 == 0) top = -top;  // (-1)^(k+1)
    acc.add(top * static_cast<long double>(tab(2 * k + 1)));
    return {acc.value(), k + 1};
}

// Float path, walking n upward from 1; the window above 1e-22 of the peak
// has width O(sqrt(k)).
inline InnerSum invsq_sum_float(long k, const SiHalfPiTable& tab) {
    // b_1 = C(2k, k+1) / (k 2^{2k})
    const long double log_b1 = log_factorial(2 * k) - log_factorial(k + 1) -
                               log_factorial(k - 1) -
                               std::log(static_cast<long double>(k)) -
                               static_cast<long double>(2 * k) * ln2_l;
    long double u = std::exp(log_b1);
    long double umax = u;
    long double sign = -1.0L;  // (-1)^n at n = 1
    NeumaierSumL acc;
    long terms = 0;
    for (long n = 1; n <= k; ++n) {
        acc.add(sign * u * static_cast<long double>(tab(2 * n - 1)));
        ++terms;
        if (u < 1e-22L * umax) break;
        if (n < k) {
            // b_{n+1} / b_n
            const long double r = static_cast<long double>(2 * n + 1) * (2 * n + 1) *
                                  static_cast<long double>(k + 1 - n) /
                                  (static_cast<long double>(2 * n - 1) * (2 * n - 1) *
                                   static_cast<long double>(k + n + 1));
            u *= r;
            if (u > umax) umax = u;
            sign = -sign;
        }
    }
    // standalone (2k+1)/2^{2k} term; underflows to an honest zero at large k
    long double top = std::exp(std::log(static_cast<long double>(2 * k + 1)) -
                                static_cast<long double>(2 * k) * ln2_l);
    if (k % 2 == 0) top = -top;
    acc.add(top * static_cast<long double>(tab(2 * k + 1)));
    ++terms;
    return {acc.value(), terms};
}

inline InnerSum invsq_definite_sum(long k, const SiHalfPiTable& tab, long exact_threshold) {
    if (k <= exact_threshold) return invsq_sum_exact(k, tab);
    return invsq_sum_float(k, tab);
}

}  // namespace detail

// Antiderivative of x^(2n+1)/asin(x), vanishing at x = 0.
inline double antideriv_odd(long n, double x) {
    if (n < 0) throw std::domain_error("antideriv_odd: need n >= 0");
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("antideriv_odd: need x in [0,1]");
    const double theta = std::asin(x);
    const CoefficientRow row = odd_row(n);
    NeumaierSumL acc;
    for (auto it = row.entries.rbegin(); it != row.entries.rend(); ++it)
        acc.add(it->numerator.to_long_double_scaled(row.scale_log2) *
                static_cast<long double>(si(it->multiplier * theta).value));
    return static_cast<double>(acc.value());
}

// Antiderivative of x^(2n)/asin(x). Each Ci term diverges at x = 0; for
// n >= 1 the divergences cancel and the limit is finite, but the function
// itself is only defined on (0, 1].
inline double antideriv_even(long n, double x) {
    if (n < 0) throw std::domain_error("antideriv_even: need n >= 0");
    if (!(x > 0.0 && x <= 1.0)) throw std::domain_error("antideriv_even: need x in (0,1]");
    const double theta = std::asin(x);
    const CoefficientRow row = even_row(n);
    NeumaierSumL acc;
    for (auto it = row.entries.rbegin(); it != row.entries.rend(); ++it)
        acc.add(it->numerator.to_long_double_scaled(row.scale_log2) *
                static_cast<long double>(ci(it->multiplier * theta).value));
    return static_cast<double>(acc.value());
}

// Antiderivative of x^(2k)/asin(x)^2 on (0,1): the Si row plus the
// algebraic -sqrt(1-x^2) x^(2k)/asin(x) term (whose 2^{2k} cancels the
// row scale).
inline double antideriv_invsq(long k, double x) {
    if (k < 1) throw std::domain_error("antideriv_invsq: need k >= 1");
    if (!(x > 0.0 && x < 1.0)) throw std::domain_error("antideriv_invsq: need x in (0,1)");
    const double theta = std::asin(x);
    const CoefficientRow row = invsq_row(k);
    NeumaierSumL acc;
    for (const auto& e : row.entries)
        acc.add(e.numerator.to_long_double_scaled(row.scale_log2) *
                static_cast<long double>(si(e.multiplier * theta).value));
    const long double algebraic =
        -std::sqrt(1.0L - static_cast<long double>(x) * x) *
        std::pow(static_cast<long double>(x), static_cast<long double>(2 * k)) /
        static_cast<long double>(theta);
    acc.add(algebraic);
    return static_cast<double>(acc.value());
}

// Antiderivative of x^n/ln(1+x) for x > 0.
inline double antideriv_log(long n, double x) {
    if (n < 0) throw std::domain_error("antideriv_log: need n >= 0");
    if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("antideriv_log: need finite x > 0");
    const long double u = std::log1p(static_cast<long double>(x));
    const CoefficientRow row = log_row(n);
    NeumaierSumL acc;
    for (const auto& e : row.entries)
        acc.add(e.numerator.to_long_double_scaled(row.scale_log2) *
                detail::ei_long(static_cast<long double>(e.multiplier) * u));
    return static_cast<double>(acc.value());
}

// int_0^1 x^(2n+1)/asin(x) dx via Si at integer multiples of pi.
inline IntegralValue integral_odd(long n, long exact_threshold = default_exact_threshold) {
    if (n < 0) throw std::domain_error("integral_odd: need n >= 0");
    const detail::SiHalfPiTable tab(2 * (n + 1));
    const auto s = detail::odd_definite_sum(n, 1.0L, 0.0L, tab, exact_threshold);
    return {static_cast<double>(s.value), Method::closed_form, n};
}

// int_0^1 x^(2n)/asin(x) dx for n >= 1, using the cancelled lower limit:
//   2^{-2n} sum_k coeff_k [Ci(m_k pi/2) - ln m_k].
// n = 0 is not representable this way (and the integral itself diverges:
// 1/asin x ~ 1/x at 0), so it is rejected.
inline IntegralValue integral_even(long n) {
    if (n < 1) throw std::domain_error("integral_even: need n >= 1");
    const CoefficientRow row = even_row(n);
    NeumaierSumL acc;
    for (auto it = row.entries.rbegin(); it != row.entries.rend(); ++it) {
        const long m = it->multiplier;
        const long double bracket =
            static_cast<long double>(ci(m * (std::numbers::pi / 2)).value) -
            std::log(static_cast<long double>(m));
        acc.add(it->numerator.to_long_double_scaled(row.scale_log2) * bracket);
    }
    return {static_cast<double>(acc.value()), Method::closed_form_cancelled, n};
}

// int_0^1 x^(2k)/asin(x)^2 dx: the algebraic term vanishes at both limits,
// leaving the Si row at pi/2 multiples.
inline IntegralValue integral_invsq(long k, long exact_threshold = default_exact_threshold) {
    if (k < 1) throw std::domain_error("integral_invsq: need k >= 1");
    const detail::SiHalfPiTable tab(2 * k + 1);
    const auto s = detail::invsq_definite_sum(k, tab, exact_threshold);
    return {static_cast<double>(s.value), Method::closed_form, k};
}

// int_0^1 x^n/ln(1+x) dx for n >= 1:
//   sum_k C(n,k) (-1)^(k+n) [Ei((k+1) ln 2) - ln(k+1)].
inline IntegralValue integral_log(long n) {
    if (n < 1) throw std::domain_error("integral_log: need n >= 1");
    const CoefficientRow row = log_row(n);
    NeumaierSumL acc;
    for (const auto& e : row.entries) {
        const long m = e.multiplier;
        const long double bracket =
            detail::ei_long(static_cast<long double>(m) * detail::ln2_l) -
            std::log(static_cast<long double>(m));
        acc.add(e.numerator.to_long_double_scaled(row.scale_log2) * bracket);
    }
    return {static_cast<double>(acc.value()), Method::closed_form_cancelled, n};
}

}  // namespace sinint
