#pragma once

// Exact integer generation of the two coefficient triangles behind the
// closed-form antiderivatives of x^n/asin(x), x^{2k}/asin(x)^2 and
// x^n/ln(1+x):
//
//   ballot triangle   C(n,k)(n-2k+1)/(n-k+1)          (A008315)
//   inverse-sq triangle (1-2n)^2/(k+1-n) C(2k,k+n)    (A156732 family)
//
// Rows are exact at any index; conversion to floating point happens only
// at evaluation time.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sinint/bigint.hpp"

namespace sinint {

enum class RowKind { odd_si, even_ci, invsq_si, log_ei };

inline const char* row_kind_name(RowKind k) {
    switch (k) {
        case RowKind::odd_si: return "odd_si";
        case RowKind::even_ci: return "even_ci";
        case RowKind::invsq_si: return "invsq_si";
        case RowKind::log_ei: return "log_ei";
    }
    return "?";
}

// value = numerator / 2^scale_log2
struct ExactCoefficient {
    BigInt numerator;
    unsigned scale_log2 = 0;

    long double to_long_double() const {
        return numerator.to_long_double_scaled(scale_log2);
    }
    double to_double() const { return static_cast<double>(to_long_double()); }
};

struct RowEntry {
    long multiplier;  // m in Si(m asin x), Ci(m asin x) or Ei(m ln(1+x))
    BigInt numerator;

    friend bool operator==(const RowEntry&, const RowEntry&) = default;
};

// One antiderivative expansion: signed integer numerators over a shared
// power-of-two scale, stored with k ascending (consumers rely on this).
struct CoefficientRow {
    RowKind kind;
    long row_index;
    unsigned scale_log2;
    std::vector<RowEntry> entries;

    ExactCoefficient coefficient(std::size_t i) const {
        return {entries.at(i).numerator, scale_log2};
    }

    BigInt signed_numerator_sum() const {
        BigInt s;
        for (const auto& e : entries) s += e.numerator;
        return s;
    }

    friend bool operator==(const CoefficientRow&, const CoefficientRow&) = default;
};

// C(n,k)(n-2k+1)/(n-k+1), exact for 0 <= k <= n/2.
inline BigInt ballot_coefficient(long n, long k) {
    if (n < 0 || k < 0 || 2 * k > n)
        throw std::domain_error("ballot_coefficient: need 0 <= k <= n/2");
    BigInt c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    c.mul_small(static_cast<std::uint64_t>(n - 2 * k + 1));
    c.div_exact_small(static_cast<std::uint64_t>(n - k + 1));
    return c;
}

// (1-2n)^2/(k+1-n) C(2k,k+n), exact for 1 <= n <= k.
inline BigInt invsq_coefficient(long k, long n) {
    if (k < 1 || n < 1 || n > k)
        throw std::domain_error("invsq_coefficient: need 1 <= n <= k");
    BigInt c = binomial(static_cast<unsigned long>(2 * k),
                        static_cast<unsigned long>(k + n));
    const std::uint64_t odd = static_cast<std::uint64_t>(2 * n - 1);
    c.mul_small(odd * odd);
    c.div_exact_small(static_cast<std::uint64_t>(k + 1 - n));
    return c;
}

// Expansion of int x^(2n+1)/asin(x) dx over Si((2n+2-2k) asin x):
// coefficient (-1)^(k+n) C(2n+1,k)(2n-2k+2)/(2n-k+2), scale 2^(2n+1).
inline CoefficientRow odd_row(long n) {
    if (n < 0) throw std::domain_error("odd_row: need n >= 0");
    CoefficientRow row{RowKind::odd_si, n, static_cast<unsigned>(2 * n + 1), {}};
    row.entries.reserve(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        BigInt c = ballot_coefficient(2 * n + 1, k);
        if ((k + n) % 2 != 0) c = -c;
        row.entries.push_back({2 * n + 2 - 2 * k, std::move(c)});
    }
    return row;
}

// Expansion of int x^(2n)/asin(x) dx over Ci((2n+1-2k) asin x):
// coefficient (-1)^(k+n) C(2n,k)(2n-2k+1)/(2n-k+1), scale 2^(2n).
// For n >= 1 the signed numerators sum to zero, which is what makes the
// definite form finite despite Ci's logarithmic blow-up at 0.
inline CoefficientRow even_row(long n) {
    if (n < 0) throw std::domain_error("even_row: need n >= 0");
    CoefficientRow row{RowKind::even_ci, n, static_cast<unsigned>(2 * n), {}};
    row.entries.reserve(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        BigInt c = ballot_coefficient(2 * n, k);
        if ((k + n) % 2 != 0) c = -c;
        row.entries.push_back({2 * n + 1 - 2 * k, std::move(c)});
    }
    return row;
}

// Si part of int x^(2k)/asin(x)^2 dx: entries (-1)^n (1-2n)^2/(k+1-n) C(2k,k+n)
// at multiplier 2n-1 for n = 1..k, plus (-1)^(k+1)(2k+1) at multiplier 2k+1;
// scale 2^(2k). The algebraic -sqrt(1-x^2) x^(2k)/asin(x) term lives in the
// closed-form evaluator, not in the row.
inline CoefficientRow invsq_row(long k) {
    if (k < 1) throw std::domain_error("invsq_row: need k >= 1");
    CoefficientRow row{RowKind::invsq_si, k, static_cast<unsigned>(2 * k), {}};
    row.entries.reserve(static_cast<std::size_t>(k) + 1);
    for (long n = 1; n <= k; ++n) {
        BigInt c = invsq_coefficient(k, n);
        if (n % 2 != 0) c = -c;
        row.entries.push_back({2 * n - 1, std::move(c)});
    }
    BigInt top(2 * k + 1);
    if (k % 2 == 0) top = -top;  // (-1)^(k+1)
    row.entries.push_back({2 * k + 1, std::move(top)});
    return row;
}

// Expansion of int x^n/ln(1+x) dx over Ei((k+1) ln(1+x)):
// coefficient (-1)^(k+n) C(n,k), scale 2^0.
inline CoefficientRow log_row(long n) {
    if (n < 0) throw std::domain_error("log_row: need n >= 0");
    CoefficientRow row{RowKind::log_ei, n, 0, {}};
    row.entries.reserve(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        BigInt c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        if ((k + n) % 2 != 0) c = -c;
        row.entries.push_back({k + 1, std::move(c)});
    }
    return row;
}

}  // namespace sinint
