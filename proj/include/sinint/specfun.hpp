#pragma once

// Sine, cosine and exponential integrals on the argument ranges the series
// engine needs: Si at integer multiples of pi up to ~1e5, Ci on (0, ~50],
// Ei on (0, ~50]. Power/defining series below a fixed switch point, the
// complex continued fraction for E1(ix) beyond it. Each result carries an
// absolute error estimate.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sinint {

struct SpecialValue {
    double value;
    double abs_error_estimate;
};

inline constexpr double euler_gamma = std::numbers::egamma;

namespace detail {

inline constexpr double sici_series_switch = 16.0;

// Modified Lentz evaluation of
//   E1(ix) = e^{-ix} / (ix+1 - 1/(ix+3 - 4/(ix+5 - 9/(...))))
// for x > 0, with E1(ix) = -Ci(x) + i(Si(x) - pi/2).
inline std::complex<double> e1_of_ix(double x) {
    constexpr double eps = 4e-16;
    constexpr double fpmin = 1e-290;
    std::complex<double> b(1.0, x);
    std::complex<double> c(1.0 / fpmin, 0.0);
    std::complex<double> d = 1.0 / b;
    std::complex<double> h = d;
    for (int i = 2; i <= 20000; ++i) {
        const double a = -static_cast<double>(i - 1) * (i - 1);
        b += 2.0;
        std::complex<double> t = a * d + b;
        if (std::abs(t) < fpmin) t = fpmin;
        d = 1.0 / t;
        c = b + a / c;
        if (std::abs(c) < fpmin) c = fpmin;
        std::complex<double> del = c * d;
        h *= del;
        if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < eps)
            return h * std::complex<double>(std::cos(x), -std::sin(x));
    }
    throw std::runtime_error("specfun: continued fraction for E1(ix) did not converge");
}

// sum_{k>=0} (-1)^k x^(2k+1) / ((2k+1)(2k+1)!), accumulated in long double
// because the alternating terms grow to ~5e4 near the switch point.
inline SpecialValue si_series(double x) {
    const long double x2 = static_cast<long double>(x) * x;
    long double term = x;
    long double sum = term;
    long double absum = std::fabs(term);
    for (int k = 0; k < 200; ++k) {
        term *= -x2 * static_cast<long double>(2 * k + 1) /
                (static_cast<long double>(2 * k + 3) * (2 * k + 3) * (2 * k + 2));
        sum += term;
        absum += std::fabs(term);
        if (std::fabs(term) < 1e-21L * absum) break;
    }
    const double v = static_cast<double>(sum);
    const double est = static_cast<double>(2e-19L * absum) + 1.2e-16 * std::fabs(v);
    return {v, est};
}

// gamma + ln z + sum_{k>=1} z^k/(k k!) carried in long double; consumers
// that cancel large alternating multiples of Ei need the extra digits.
inline long double ei_long(long double z) {
    long double term = z;
    long double sum = term;
    for (int k = 1; k < 800; ++k) {
        term *= z * static_cast<long double>(k) /
                (static_cast<long double>(k + 1) * (k + 1));
        sum += term;
        if (term < 1e-21L * sum) break;
    }
    return 0.5772156649015328606065120900824024310L + std::log(z) + sum;
}

// gamma + ln x + sum_{k>=1} (-1)^k x^(2k) / (2k (2k)!)
inline SpecialValue ci_series(double x) {
    const long double x2 = static_cast<long double>(x) * x;
    long double term = -x2 / 4.0L;
    long double sum = term;
    long double absum = std::fabs(term);
    for (int k = 1; k < 200; ++k) {
        term *= -x2 * static_cast<long double>(2 * k) /
                (static_cast<long double>(2 * k + 2) * (2 * k + 2) * (2 * k + 1));
        sum += term;
        absum += std::fabs(term);
        if (std::fabs(term) < 1e-21L * absum) break;
    }
    const long double v = euler_gamma + std::log(x) + sum;
    const double est = static_cast<double>(2e-19L * absum) +
                       1.2e-16 * (std::fabs(std::log(x)) + 1.0 + std::fabs(static_cast<double>(v)));
    return {static_cast<double>(v), est};
}

}  // namespace detail

// Si(x) = int_0^x sin(t)/t dt. Odd; defined for all finite x.
inline SpecialValue si(double x) {
    if (!std::isfinite(x)) throw std::domain_error("si: argument must be finite");
    const double ax = std::fabs(x);
    SpecialValue r;
    if (ax <= detail::sici_series_switch) {
        r = detail::si_series(ax);
    } else {
        const std::complex<double> h = detail::e1_of_ix(ax);
        r = {std::numbers::pi / 2 + h.imag(), 5e-16};
    }
    if (x < 0) r.value = -r.value;
    return r;
}

// Ci(x) = gamma + ln x + int_0^x (cos t - 1)/t dt, x > 0.
inline SpecialValue ci(double x) {
    if (!std::isfinite(x) || x <= 0.0) throw std::domain_error("ci: argument must be finite and > 0");
    if (x <= detail::sici_series_switch) return detail::ci_series(x);
    const std::complex<double> h = detail::e1_of_ix(x);
    return {-h.real(), 5e-16};
}

// Ei(z) = gamma + ln z + sum_{k>=1} z^k/(k k!), z > 0.
inline SpecialValue ei(double z) {
    if (!std::isfinite(z) || z <= 0.0) throw std::domain_error("ei: argument must be finite and > 0");
    long double term = z;
    long double sum = term;
    int terms = 1;
    for (int k = 1; k < 800; ++k) {
        term *= z * static_cast<long double>(k) /
                (static_cast<long double>(k + 1) * (k + 1));
        sum += term;
        ++terms;
        if (term < 1e-17L * sum) break;
    }
    const long double v = euler_gamma + std::log(z) + sum;
    const double est = 1.2e-16 * (std::fabs(static_cast<double>(v)) + std::fabs(std::log(z)) + 1.0) +
                       static_cast<double>(5.5e-20L * terms * sum);
    return {static_cast<double>(v), est};
}

}  // namespace sinint
