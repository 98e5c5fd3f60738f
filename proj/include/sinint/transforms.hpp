#pragma once

// The double-series engine: arcsine-family power series coefficients
// combined with the closed-form integrals of x^m/asin(x) into the three
// headline series
//
//   theorem 1:  1    = sum_j  c_j  int_0^1 x^(2j+1)/asin(x) dx,
//                      c_j = (2j)! / (2^(2j) (j!)^2 (2j+1))
//   theorem 2:  pi/2 = sum_k 4 a_k int_0^1 x^(2k+3)/asin(x) dx,
//                      a_k = 2^(2k) (k!)^2 / ((2k+1)! (k+1))
//   theorem 3:  pi/4 = sum_n  b_n  int_0^1 x^(2n+1)/asin(x) dx,
//                      b_n = 2^(2n) / (n^2 C(2n,n)),  n >= 1
//
// plus the derived series sum_j c_j int_0^1 x^(2j+2)/asin(x)^2 dx, whose
// limit is int_0^1 x/asin(x) dx (taken from the quadrature oracle).
//
// Terms are positive and decay like index^(-5/2), so a raw partial sum is
// supplemented by an algebraic tail fit on the last decade of terms.
// Outer terms may be evaluated in parallel chunks, but reduction is a
// single fixed-order compensated pass, so results are bit-identical for
// any chunk size.

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sinint/closedform.hpp"
#include "sinint/oracle.hpp"
#include "sinint/summation.hpp"

namespace sinint {

struct SeriesTerm {
    long outer_index;
    double term_value;
    long inner_terms_evaluated;
};

struct ConvergenceReport {
    int theorem_id;  // 1, 2, 3; 0 identifies the derived section-2 series
    long terms_used;
    double partial_sum;
    double known_limit;
    double raw_error;
    bool extrapolated;
    double tail_exponent_fit;
    double extrapolated_value;
    double extrapolated_error;

    friend bool operator==(const ConvergenceReport&, const ConvergenceReport&) = default;
};

struct EvaluateOptions {
    bool compensated = true;
    bool extrapolate = false;
    int parallel_chunk = 64;
    long exact_threshold = default_exact_threshold;
};

namespace detail {

// Outer series coefficients, exact rational below the threshold and via
// log-gamma above it.

inline long double thm1_coeff_log(long j) {
    return log_factorial(2 * j) - 2.0L * log_factorial(j) -
           static_cast<long double>(2 * j) * ln2_l -
           std::log(static_cast<long double>(2 * j + 1));
}

inline long double thm2_coeff_log(long k) {
    // 4 * 2^(2k) (k!)^2 / ((2k+1)! (k+1))
    return static_cast<long double>(2 * k + 2) * ln2_l + 2.0L * log_factorial(k) -
           log_factorial(2 * k + 1) - std::log(static_cast<long double>(k + 1));
}

inline long double thm3_coeff_log(long n) {
    return static_cast<long double>(2 * n) * ln2_l + 2.0L * log_factorial(n) -
           log_factorial(2 * n) - 2.0L * std::log(static_cast<long double>(n));
}

inline long double thm1_coeff_exact(long j) {
    const BigInt c = binomial(static_cast<unsigned long>(2 * j), static_cast<unsigned long>(j));
    return c.to_long_double_scaled(2 * j) / static_cast<long double>(2 * j + 1);
}

inline long double thm2_coeff_exact(long k) {
    BigInt num = factorial(static_cast<unsigned long>(k));
    num = num * num;
    const long double fk2 = num.to_long_double_scaled(-(2 * k + 2));  // (k!)^2 2^(2k+2)
    const long double den =
        factorial(static_cast<unsigned long>(2 * k + 1)).to_long_double_scaled(0) *
        static_cast<long double>(k + 1);
    return fk2 / den;
}

inline long double thm3_coeff_exact(long n) {
    const BigInt c = binomial(static_cast<unsigned long>(2 * n), static_cast<unsigned long>(n));
    return std::ldexp(1.0L, static_cast<int>(2 * n)) /
           (c.to_long_double_scaled(0) * static_cast<long double>(n) * static_cast<long double>(n));
}

struct TheoremShape {
    long first_index;   // outer summation start
    long row_shift;     // inner row index = outer index + row_shift
};

inline TheoremShape theorem_shape(int theorem_id) {
    switch (theorem_id) {
        case 1: return {0, 0};
        case 2: return {0, 1};
        case 3: return {1, 0};
    }
    throw std::domain_error("theorem_id must be 1, 2 or 3");
}

inline long double theorem_coeff_log(int id, long i) {
    return id == 1 ? thm1_coeff_log(i) : id == 2 ? thm2_coeff_log(i) : thm3_coeff_log(i);
}

inline long double theorem_coeff_exact(int id, long i) {
    return id == 1 ? thm1_coeff_exact(i) : id == 2 ? thm2_coeff_exact(i) : thm3_coeff_exact(i);
}

// One outer term, evaluated as the literal double-sum summand: the outer
// coefficient is folded into every inner Si weight.
inline SeriesTerm theorem_term_with(int id, long i, const SiHalfPiTable& tab,
                                    long exact_threshold) {
    const auto shape = theorem_shape(id);
    if (i < shape.first_index)
        throw std::domain_error("theorem_term: outer index below the series start");
    const long row = i + shape.row_shift;
    InnerSum s{};
    if (row <= exact_threshold)
        s = odd_sum_exact(row, theorem_coeff_exact(id, i), tab);
    else
        s = odd_sum_float(row, theorem_coeff_log(id, i), tab);
    return {i, static_cast<double>(s.value), s.terms};
}

inline SeriesTerm sec2_term_with(long j, const SiHalfPiTable& tab, long exact_threshold) {
    if (j < 0) throw std::domain_error("derived_series_sec2: outer index below 0");
    const long k = j + 1;
    const auto s = invsq_definite_sum(k, tab, exact_threshold);
    const long double c =
        j <= exact_threshold ? thm1_coeff_exact(j) : std::exp(thm1_coeff_log(j));
    return {j, static_cast<double>(c * s.value), s.terms};
}

// Least-squares fit of ln(term) = ln A - p ln(index) over the last decade
// of outer indices, then the implied algebraic tail A (J+1/2)^(1-p)/(p-1).
struct TailFit {
    bool ok;
    double p;
    double tail;
};

inline TailFit fit_algebraic_tail(const std::vector<double>& terms, long first_index) {
    const long count = static_cast<long>(terms.size());
    const long last_index = first_index + count - 1;
    if (count < 80) return {false, 0.0, 0.0};
    const long window_lo = std::max(first_index, last_index / 10);
    long npts = 0;
    long double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (long idx = window_lo; idx <= last_index; ++idx) {
        const double t = terms[static_cast<std::size_t>(idx - first_index)];
        if (!(t > 0.0)) return {false, 0.0, 0.0};
        const long double x = std::log(static_cast<long double>(idx));
        const long double y = std::log(static_cast<long double>(t));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++npts;
    }
    if (npts < 8) return {false, 0.0, 0.0};
    const long double den = npts * sxx - sx * sx;
    if (den <= 0.0L) return {false, 0.0, 0.0};
    const long double slope = (npts * sxy - sx * sy) / den;  // = -p
    const long double p = -slope;
    if (!(p > 1.05L)) return {false, static_cast<double>(p), 0.0};
    const long double log_a = (sy - slope * sx) / npts;
    const long double tail = std::exp(log_a) *
                             std::pow(static_cast<long double>(last_index) + 0.5L, 1.0L - p) /
                             (p - 1.0L);
    return {true, static_cast<double>(p), static_cast<double>(tail)};
}

template <class TermFn>
std::vector<double> evaluate_terms(long first_index, long count, int parallel_chunk,
                                   TermFn&& term_of) {
    std::vector<double> terms(static_cast<std::size_t>(count));
    const int chunk = parallel_chunk > 0 ? parallel_chunk : 64;
    const long nchunks = (count + chunk - 1) / chunk;
    unsigned hw = std::thread::hardware_concurrency();
    unsigned workers = hw == 0 ? 1u : (hw > 8u ? 8u : hw);
    if (nchunks < 2 || workers < 2) {
        for (long i = 0; i < count; ++i)
            terms[static_cast<std::size_t>(i)] = term_of(first_index + i);
        return terms;
    }
    std::atomic<long> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            for (;;) {
                const long c = next.fetch_add(1, std::memory_order_relaxed);
                if (c >= nchunks) return;
                const long lo = c * chunk;
                const long hi = std::min(count, lo + chunk);
                for (long i = lo; i < hi; ++i)
                    terms[static_cast<std::size_t>(i)] = term_of(first_index + i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return terms;
}

inline ConvergenceReport reduce_report(int theorem_id, long first_index,
                                       const std::vector<double>& terms,
                                       double known_limit, const EvaluateOptions& opts) {
    double partial = 0.0;
    if (opts.compensated) {
        NeumaierSum acc;
        for (double t : terms) acc.add(t);
        partial = acc.value();
    } else {
        for (double t : terms) partial += t;
    }
    ConvergenceReport r{};
    r.theorem_id = theorem_id;
    r.terms_used = static_cast<long>(terms.size());
    r.partial_sum = partial;
    r.known_limit = known_limit;
    r.raw_error = std::fabs(known_limit - partial);
    r.extrapolated = false;
    r.tail_exponent_fit = 0.0;
    r.extrapolated_value = 0.0;
    r.extrapolated_error = 0.0;
    if (opts.extrapolate) {
        const auto fit = fit_algebraic_tail(terms, first_index);
        if (fit.ok) {
            r.extrapolated = true;
            r.tail_exponent_fit = fit.p;
            r.extrapolated_value = partial + fit.tail;
            r.extrapolated_error = std::fabs(known_limit - r.extrapolated_value);
        }
    }
    return r;
}

}  // namespace detail

// Coefficient of x^(2j+1) in the arcsine series: (2j)!/(2^(2j) (j!)^2 (2j+1)).
inline double arcsine_coeff(long j, long exact_threshold = default_exact_threshold) {
    if (j < 0) throw std::domain_error("arcsine_coeff: need j >= 0");
    if (j <= exact_threshold) return static_cast<double>(detail::thm1_coeff_exact(j));
    return static_cast<double>(std::exp(detail::thm1_coeff_log(j)));
}

// Coefficient of x^(2k+2) in asin(x)^2: 2^(2k) (k!)^2 / ((2k+1)! (k+1)),
// equivalently 2^(2k+2) / (2 (k+1)^2 C(2k+2, k+1)).
inline double arcsine_sq_coeff(long k, long exact_threshold = default_exact_threshold) {
    if (k < 0) throw std::domain_error("arcsine_sq_coeff: need k >= 0");
    if (k <= exact_threshold) return static_cast<double>(0.25L * detail::thm2_coeff_exact(k));
    return static_cast<double>(std::exp(detail::thm2_coeff_log(k)) * 0.25L);
}

inline double theorem_known_limit(int theorem_id) {
    switch (theorem_id) {
        case 1: return 1.0;
        case 2: return std::numbers::pi / 2;
        case 3: return std::numbers::pi / 4;
    }
    throw std::domain_error("theorem_id must be 1, 2 or 3");
}

// One outer term of a theorem series, evaluated from the literal statement
// (outer coefficient folded into each inner Si weight).
inline SeriesTerm theorem_term(int theorem_id, long i,
                               long exact_threshold = default_exact_threshold) {
    const auto shape = detail::theorem_shape(theorem_id);
    if (i < shape.first_index)
        throw std::domain_error("theorem_term: outer index below the series start");
    const detail::SiHalfPiTable tab(2 * (i + shape.row_shift + 1));
    return detail::theorem_term_with(theorem_id, i, tab, exact_threshold);
}

// The same term assembled the other way: series coefficient times the
// closed-form integral. Theorems 1-3 stand or fall on these two routes
// agreeing.
inline double theorem_term_via_integral(int theorem_id, long i,
                                        long exact_threshold = default_exact_threshold) {
    const auto shape = detail::theorem_shape(theorem_id);
    if (i < shape.first_index)
        throw std::domain_error("theorem_term_via_integral: outer index below the series start");
    const long row = i + shape.row_shift;
    const long double c = row <= exact_threshold
                              ? detail::theorem_coeff_exact(theorem_id, i)
                              : std::exp(detail::theorem_coeff_log(theorem_id, i));
    return static_cast<double>(c) * integral_odd(row, exact_threshold).value;
}

// Partial sum of the first J outer terms, with optional algebraic-tail
// extrapolation fitted on the last decade.
inline ConvergenceReport evaluate_theorem(int theorem_id, long terms_budget,
                                          EvaluateOptions opts = {}) {
    if (terms_budget < 8) throw std::domain_error("evaluate_theorem: need at least 8 terms");
    const auto shape = detail::theorem_shape(theorem_id);
    const detail::SiHalfPiTable tab(2 * (shape.first_index + terms_budget + shape.row_shift + 1));
    const auto terms = detail::evaluate_terms(
        shape.first_index, terms_budget, opts.parallel_chunk, [&](long i) {
            return detail::theorem_term_with(theorem_id, i, tab, opts.exact_threshold).term_value;
        });
    return detail::reduce_report(theorem_id, shape.first_index, terms,
                                 theorem_known_limit(theorem_id), opts);
}

// sum_j arcsine_coeff(j) int_0^1 x^(2j+2)/asin(x)^2 dx, compared against
// the quadrature value of int_0^1 x/asin(x) dx as the limit.
inline ConvergenceReport derived_series_sec2(long terms_budget, EvaluateOptions opts = {}) {
    if (terms_budget < 8) throw std::domain_error("derived_series_sec2: need at least 8 terms");
    const double limit =
        integrate(integrand(IntegrandKind::odd_power_over_asin, 0), 0.0, 1.0, 1e-12).value;
    const detail::SiHalfPiTable tab(2 * (terms_budget + 1) + 1);
    const auto terms =
        detail::evaluate_terms(0, terms_budget, opts.parallel_chunk, [&](long j) {
            return detail::sec2_term_with(j, tab, opts.exact_threshold).term_value;
        });
    return detail::reduce_report(0, 0, terms, limit, opts);
}

}  // namespace sinint
