#include <catch2/catch.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "sinint/closedform.hpp"
#include "sinint/oracle.hpp"

using namespace sinint;
using std::numbers::pi;

namespace {

double oracle_integral(IntegrandKind kind, long n, double tol = 1e-11) {
    return integrate(integrand(kind, n), 0.0, 1.0, tol).value;
}

template <class F, class G>
double max_derivative_mismatch(F&& antideriv, G&& target, double lo, double hi,
                               double step) {
    double worst = 0;
    for (int p = 0; p < 20; ++p) {
        const double x = lo + (hi - lo) * (p + 0.5) / 20.0;
        const double d = differentiate(antideriv, x, step);
        const double f = target(x);
        worst = std::fmax(worst, std::fabs(d - f) / std::fmax(std::fabs(f), 1e-3));
    }
    return worst;
}

}  // namespace

TEST_CASE("antideriv_odd vanishes at 0 and matches Si(pi)/2 at 1 for n=0") {
    for (long n : {0L, 1L, 4L, 9L}) CHECK(antideriv_odd(n, 0.0) == 0.0);
    const double si_pi = si(pi).value;
    CHECK(antideriv_odd(0, 1.0) == Approx(si_pi / 2).epsilon(1e-14));
    CHECK(integral_odd(0).value == Approx(si_pi / 2).epsilon(1e-14));
    CHECK(integral_odd(0).value ==
          Approx(oracle_integral(IntegrandKind::odd_power_over_asin, 0)).margin(1e-11));
}

TEST_CASE("differentiation oracle: spot checks") {
    const double d_odd = differentiate([](double x) { return antideriv_odd(6, x); }, 0.5, 0.002);
    CHECK(std::fabs(d_odd - std::pow(0.5, 13) / std::asin(0.5)) <=
          1e-7 * (std::pow(0.5, 13) / std::asin(0.5)));

    const double d_even = differentiate([](double x) { return antideriv_even(6, x); }, 0.5, 0.002);
    CHECK(std::fabs(d_even - std::pow(0.5, 12) / std::asin(0.5)) <=
          1e-7 * (std::pow(0.5, 12) / std::asin(0.5)));

    const double a05 = std::asin(0.5);
    const double d_inv3 = differentiate([](double x) { return antideriv_invsq(3, x); }, 0.5, 0.002);
    CHECK(std::fabs(d_inv3 - std::pow(0.5, 6) / (a05 * a05)) <=
          1e-7 * (std::pow(0.5, 6) / (a05 * a05)));

    const double a09 = std::asin(0.9);
    const double d_inv4 = differentiate([](double x) { return antideriv_invsq(4, x); }, 0.9, 0.002);
    CHECK(std::fabs(d_inv4 - std::pow(0.9, 8) / (a09 * a09)) <=
          1e-7 * (std::pow(0.9, 8) / (a09 * a09)));

    const double d_log = differentiate([](double x) { return antideriv_log(1, x); }, 0.7, 0.005);
    CHECK(std::fabs(d_log - 0.7 / std::log(1.7)) <= 1e-7 * (0.7 / std::log(1.7)));

    const double d_log2 = differentiate([](double x) { return antideriv_log(2, x); }, 0.7, 0.005);
    CHECK(std::fabs(d_log2 - 0.49 / std::log(1.7)) <= 1e-6 * (0.49 / std::log(1.7)));
}

TEST_CASE("universal derivative identity: every kind, 20 interior points, 1e-6 relative") {
    for (long n : {0L, 1L, 2L, 6L})
        CHECK(max_derivative_mismatch(
                  [n](double x) { return antideriv_odd(n, x); },
                  [n](double x) { return std::pow(x, static_cast<double>(2 * n + 1)) / std::asin(x); },
                  0.30, 0.96, 0.002) <= 1e-6);
    for (long n : {0L, 1L, 3L, 6L})
        CHECK(max_derivative_mismatch(
                  [n](double x) { return antideriv_even(n, x); },
                  [n](double x) { return std::pow(x, static_cast<double>(2 * n)) / std::asin(x); },
                  0.30, 0.96, 0.002) <= 1e-6);
    for (long k : {1L, 3L, 4L})
        CHECK(max_derivative_mismatch(
                  [k](double x) { return antideriv_invsq(k, x); },
                  [k](double x) {
                      const double s = std::asin(x);
                      return std::pow(x, static_cast<double>(2 * k)) / (s * s);
                  },
                  0.30, 0.95, 0.002) <= 1e-6);
    for (long n : {0L, 1L, 2L, 5L})
        CHECK(max_derivative_mismatch(
                  [n](double x) { return antideriv_log(n, x); },
                  [n](double x) { return std::pow(x, static_cast<double>(n)) / std::log1p(x); },
                  0.25, 3.0, 0.01) <= 1e-6);
}

TEST_CASE("antideriv_even: finite limit for n >= 1, true divergence for n = 0") {
    for (long n : {1L, 2L, 5L}) {
        const double near = antideriv_even(n, 1e-6);
        const double nearer = antideriv_even(n, 1e-7);
        CHECK(std::fabs(near - nearer) < 1e-5);
        CHECK(std::isfinite(near));
    }
    CHECK(antideriv_even(0, 1e-8) < -10.0);  // Ci(asin x) ~ gamma + ln x
}

TEST_CASE("antideriv_even limit offset equals the scaled sum of coeff*ln(m)") {
    const long n = 3;
    const CoefficientRow row = even_row(n);
    long double offset = 0.0L;
    for (const auto& e : row.entries)
        offset += e.numerator.to_long_double_scaled(row.scale_log2) *
                  std::log(static_cast<long double>(e.multiplier));
    CHECK(antideriv_even(n, 1e-8) == Approx(static_cast<double>(offset)).margin(1e-10));
}

TEST_CASE("antideriv_invsq vanishes toward 0") {
    for (long k : {1L, 2L, 3L}) CHECK(std::fabs(antideriv_invsq(k, 1e-6)) < 1e-5);
}

TEST_CASE("antideriv_log single-term row equals Ei(ln 2) at x = 1") {
    CHECK(antideriv_log(0, 1.0) == Approx(ei(std::numbers::ln2).value).margin(1e-13));
}

TEST_CASE("integral_odd: spot values and oracle sweep n = 0..20") {
    const double si_pi = si(pi).value;
    const double si_2pi = si(2 * pi).value;
    CHECK(integral_odd(1).value == Approx((2 * si_pi - si_2pi) / 8).epsilon(1e-14));
    CHECK(integral_odd(1).value == Approx(0.2857).margin(1e-4));
    for (long n = 0; n <= 20; ++n) {
        const auto v = integral_odd(n);
        CHECK(v.method == Method::closed_form);
        CHECK(v.row_index == n);
        CHECK(std::fabs(v.value - oracle_integral(IntegrandKind::odd_power_over_asin, n)) <=
              1e-9);
    }
}

TEST_CASE("integral_odd is strictly decreasing in n") {
    double prev = integral_odd(0).value;
    for (long n = 1; n <= 20; ++n) {
        const double cur = integral_odd(n).value;
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("integral_even: oracle sweep n = 1..20 and cancelled method tag") {
    for (long n = 1; n <= 20; ++n) {
        const auto v = integral_even(n);
        CHECK(v.method == Method::closed_form_cancelled);
        CHECK(std::fabs(v.value - oracle_integral(IntegrandKind::even_power_over_asin, n)) <=
              1e-9);
    }
}

TEST_CASE("integral_invsq: oracle sweep k = 1..15 and the published k=3 combination") {
    for (long k = 1; k <= 15; ++k) {
        const auto v = integral_invsq(k);
        CHECK(v.method == Method::closed_form);
        CHECK(std::fabs(v.value - oracle_integral(IntegrandKind::power_over_asin_sq, k)) <=
              1e-9);
    }
    const double explicit3 =
        (-5 * si(pi / 2).value + 27 * si(3 * pi / 2).value - 25 * si(5 * pi / 2).value +
         7 * si(7 * pi / 2).value) /
        64.0;
    CHECK(integral_invsq(3).value == Approx(explicit3).epsilon(1e-13));
}

TEST_CASE("integral_log: oracle sweep n = 1..15 and the two-term n=1 form") {
    const double expect1 =
        ei(2 * std::numbers::ln2).value - ei(std::numbers::ln2).value - std::numbers::ln2;
    CHECK(integral_log(1).value == Approx(expect1).margin(1e-12));
    for (long n = 1; n <= 15; ++n) {
        const auto v = integral_log(n);
        CHECK(v.method == Method::closed_form_cancelled);
        CHECK(std::fabs(v.value - oracle_integral(IntegrandKind::power_over_log, n)) <= 1e-9);
    }
}

TEST_CASE("cancelled closed forms agree with the epsilon-limit evaluation") {
    for (long n : {1L, 3L, 5L}) {
        const double eps_limit = antideriv_even(n, 1.0) - antideriv_even(n, 1e-7);
        CHECK(std::fabs(integral_even(n).value - eps_limit) < 1e-5);
    }
    for (long n : {1L, 4L}) {
        const double eps_limit = antideriv_log(n, 1.0) - antideriv_log(n, 1e-7);
        CHECK(std::fabs(integral_log(n).value - eps_limit) < 1e-5);
    }
}

TEST_CASE("antiderivative differences reproduce oracle integrals on random subintervals") {
    std::mt19937_64 rng(97531);
    std::uniform_real_distribution<double> dist(0.05, 0.95);
    auto subinterval = [&] {
        double a = dist(rng), b = dist(rng);
        if (a > b) std::swap(a, b);
        if (b - a < 0.05) b += 0.05;
        return std::pair{a, b};
    };
    for (int trial = 0; trial < 5; ++trial) {
        const auto [a, b] = subinterval();
        const double f_odd = antideriv_odd(4, b) - antideriv_odd(4, a);
        const double q_odd =
            integrate(integrand(IntegrandKind::odd_power_over_asin, 4), a, b, 1e-12).value;
        CHECK(f_odd == Approx(q_odd).margin(1e-11));

        const double f_even = antideriv_even(3, b) - antideriv_even(3, a);
        const double q_even =
            integrate(integrand(IntegrandKind::even_power_over_asin, 3), a, b, 1e-12).value;
        CHECK(f_even == Approx(q_even).margin(1e-11));

        const double f_inv = antideriv_invsq(2, b) - antideriv_invsq(2, a);
        const double q_inv =
            integrate(integrand(IntegrandKind::power_over_asin_sq, 2), a, b, 1e-12).value;
        CHECK(f_inv == Approx(q_inv).margin(1e-11));

        const double f_log = antideriv_log(3, 1.0 + b) - antideriv_log(3, 1.0 + a);
        const double q_log = integrate(integrand(IntegrandKind::power_over_log, 3), 1.0 + a,
                                       1.0 + b, 1e-12)
                                 .value;
        CHECK(f_log == Approx(q_log).margin(1e-11));
    }
}

TEST_CASE("exact and log-gamma paths agree to 1e-12 across the threshold band") {
    for (long n = 480; n <= 544; n += 8) {
        const double exact = integral_odd(n, 1000000).value;
        const double fl = integral_odd(n, 1).value;
        CHECK(std::fabs(exact - fl) <= 1e-12 * std::fabs(exact));
    }
    for (long k = 480; k <= 544; k += 16) {
        const double exact = integral_invsq(k, 1000000).value;
        const double fl = integral_invsq(k, 1).value;
        CHECK(std::fabs(exact - fl) <= 1e-12 * std::fabs(exact));
    }
}

TEST_CASE("log-factorial helper matches exact factorials") {
    for (long n : {0L, 1L, 5L, 39L, 40L, 100L, 500L, 1000L}) {
        const long double exact = std::log(factorial(static_cast<unsigned long>(n))
                                               .to_long_double_scaled(0));
        CHECK(std::fabs(static_cast<double>(detail::log_factorial(n) - exact)) <=
              1e-15 * std::fmax(1.0, std::fabs(static_cast<double>(exact))));
    }
}

TEST_CASE("domain errors across the closed-form surface") {
    CHECK_THROWS_AS(antideriv_odd(-1, 0.5), std::domain_error);
    CHECK_THROWS_AS(antideriv_odd(0, -0.1), std::domain_error);
    CHECK_THROWS_AS(antideriv_odd(0, 1.1), std::domain_error);
    CHECK_THROWS_AS(antideriv_even(1, 0.0), std::domain_error);
    CHECK_THROWS_AS(antideriv_invsq(0, 0.5), std::domain_error);
    CHECK_THROWS_AS(antideriv_invsq(1, 1.0), std::domain_error);
    CHECK_THROWS_AS(antideriv_log(0, 0.0), std::domain_error);
    CHECK_THROWS_AS(antideriv_log(-1, 0.5), std::domain_error);
    CHECK_THROWS_AS(integral_odd(-1), std::domain_error);
    CHECK_THROWS_AS(integral_even(0), std::domain_error);
    CHECK_THROWS_AS(integral_invsq(0), std::domain_error);
    CHECK_THROWS_AS(integral_log(0), std::domain_error);
}
