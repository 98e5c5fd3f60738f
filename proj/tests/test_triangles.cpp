#include <catch2/catch.hpp>

#include <vector>

#include "sinint/triangles.hpp"

using namespace sinint;

namespace {

std::vector<long long> numerators(const CoefficientRow& row) {
    std::vector<long long> out;
    for (const auto& e : row.entries)
        out.push_back(std::stoll(e.numerator.to_string()));
    return out;
}

std::vector<long> multipliers(const CoefficientRow& row) {
    std::vector<long> out;
    for (const auto& e : row.entries) out.push_back(e.multiplier);
    return out;
}

}  // namespace

TEST_CASE("ballot triangle rows 13 and 12 match the published displays") {
    const std::vector<long long> row13{1, 12, 65, 208, 429, 572, 429};
    for (long k = 0; k <= 6; ++k)
        CHECK(ballot_coefficient(13, k) == BigInt(row13[static_cast<std::size_t>(k)]));
    const std::vector<long long> row12{1, 11, 54, 154, 275, 297, 132};
    for (long k = 0; k <= 6; ++k)
        CHECK(ballot_coefficient(12, k) == BigInt(row12[static_cast<std::size_t>(k)]));
    CHECK(ballot_coefficient(0, 0) == BigInt(1));
}

TEST_CASE("inverse-square triangle rows 3 and 4") {
    CHECK(invsq_coefficient(3, 1) == BigInt(5));
    CHECK(invsq_coefficient(3, 2) == BigInt(27));
    CHECK(invsq_coefficient(3, 3) == BigInt(25));
    CHECK(invsq_coefficient(4, 1) == BigInt(14));
    CHECK(invsq_coefficient(4, 2) == BigInt(84));
    CHECK(invsq_coefficient(4, 3) == BigInt(100));
    CHECK(invsq_coefficient(4, 4) == BigInt(49));
    CHECK(invsq_coefficient(1, 1) == BigInt(1));
}

TEST_CASE("triangle domain errors") {
    CHECK_THROWS_AS(ballot_coefficient(10, 6), std::domain_error);
    CHECK_THROWS_AS(ballot_coefficient(10, -1), std::domain_error);
    CHECK_THROWS_AS(ballot_coefficient(-1, 0), std::domain_error);
    CHECK_THROWS_AS(invsq_coefficient(3, 0), std::domain_error);
    CHECK_THROWS_AS(invsq_coefficient(3, 4), std::domain_error);
    CHECK_THROWS_AS(invsq_coefficient(0, 1), std::domain_error);
    CHECK_THROWS_AS(odd_row(-1), std::domain_error);
    CHECK_THROWS_AS(even_row(-1), std::domain_error);
    CHECK_THROWS_AS(invsq_row(0), std::domain_error);
    CHECK_THROWS_AS(log_row(-1), std::domain_error);
}

TEST_CASE("integrality holds through n = 200 (exact division never truncates)") {
    // div_exact_small throws std::logic_error on any nonzero remainder
    for (long n = 0; n <= 200; ++n)
        for (long k = 0; 2 * k <= n; ++k) CHECK_NOTHROW(ballot_coefficient(n, k));
    for (long k = 1; k <= 200; k += (k < 40 ? 1 : 13))
        for (long n = 1; n <= k; ++n) CHECK_NOTHROW(invsq_coefficient(k, n));
}

TEST_CASE("odd_row reproduces the x^13 expansion exactly") {
    const auto row = odd_row(6);
    CHECK(row.kind == RowKind::odd_si);
    CHECK(row.row_index == 6);
    CHECK(row.scale_log2 == 13);  // 2^13 = 8192
    CHECK(multipliers(row) == std::vector<long>{14, 12, 10, 8, 6, 4, 2});
    CHECK(numerators(row) == std::vector<long long>{1, -12, 65, -208, 429, -572, 429});
}

TEST_CASE("even_row reproduces the x^12 expansion exactly") {
    const auto row = even_row(6);
    CHECK(row.kind == RowKind::even_ci);
    CHECK(row.scale_log2 == 12);  // 2^12 = 4096
    CHECK(multipliers(row) == std::vector<long>{13, 11, 9, 7, 5, 3, 1});
    CHECK(numerators(row) == std::vector<long long>{1, -11, 54, -154, 275, -297, 132});
}

TEST_CASE("invsq_row reproduces the x^6 and x^8 expansions exactly") {
    const auto r3 = invsq_row(3);
    CHECK(r3.kind == RowKind::invsq_si);
    CHECK(r3.scale_log2 == 6);  // 2^6 = 64
    CHECK(multipliers(r3) == std::vector<long>{1, 3, 5, 7});
    CHECK(numerators(r3) == std::vector<long long>{-5, 27, -25, 7});

    const auto r4 = invsq_row(4);
    CHECK(r4.scale_log2 == 8);  // 2^8 = 256
    CHECK(multipliers(r4) == std::vector<long>{1, 3, 5, 7, 9});
    CHECK(numerators(r4) == std::vector<long long>{-14, 84, -100, 49, -9});
}

TEST_CASE("single-entry base rows") {
    const auto odd0 = odd_row(0);
    CHECK(multipliers(odd0) == std::vector<long>{2});
    CHECK(numerators(odd0) == std::vector<long long>{1});
    CHECK(odd0.scale_log2 == 1);

    const auto even0 = even_row(0);
    CHECK(multipliers(even0) == std::vector<long>{1});
    CHECK(numerators(even0) == std::vector<long long>{1});
    CHECK(even0.scale_log2 == 0);

    const auto odd1 = odd_row(1);
    CHECK(multipliers(odd1) == std::vector<long>{4, 2});
    CHECK(numerators(odd1) == std::vector<long long>{-1, 2});

    const auto log0 = log_row(0);
    CHECK(multipliers(log0) == std::vector<long>{1});
    CHECK(numerators(log0) == std::vector<long long>{1});
    CHECK(log0.scale_log2 == 0);

    const auto log1 = log_row(1);
    CHECK(multipliers(log1) == std::vector<long>{1, 2});
    CHECK(numerators(log1) == std::vector<long long>{-1, 1});
}

TEST_CASE("signed numerator sums vanish for even and log rows, n = 1..30") {
    for (long n = 1; n <= 30; ++n) {
        CHECK(even_row(n).signed_numerator_sum().is_zero());
        CHECK(log_row(n).signed_numerator_sum().is_zero());
    }
    // and do not vanish for n = 0
    CHECK(!even_row(0).signed_numerator_sum().is_zero());
    CHECK(!log_row(0).signed_numerator_sum().is_zero());
}

TEST_CASE("rows agree with the standalone triangle operations") {
    for (long n : {1L, 5L, 17L, 40L}) {
        const auto row = odd_row(n);
        for (long k = 0; k <= n; ++k) {
            BigInt expect = ballot_coefficient(2 * n + 1, k);
            if ((k + n) % 2 != 0) expect = -expect;
            CHECK(row.entries[static_cast<std::size_t>(k)].numerator == expect);
        }
        const auto erow = even_row(n);
        for (long k = 0; k <= n; ++k) {
            BigInt expect = ballot_coefficient(2 * n, k);
            if ((k + n) % 2 != 0) expect = -expect;
            CHECK(erow.entries[static_cast<std::size_t>(k)].numerator == expect);
        }
        const auto irow = invsq_row(n);
        for (long m = 1; m <= n; ++m) {
            BigInt expect = invsq_coefficient(n, m);
            if (m % 2 != 0) expect = -expect;
            CHECK(irow.entries[static_cast<std::size_t>(m - 1)].numerator == expect);
        }
    }
}

TEST_CASE("multipliers are strictly monotone in storage order for every kind") {
    for (long n : {0L, 1L, 2L, 7L, 23L, 64L}) {
        const auto mo = multipliers(odd_row(n));
        const auto me = multipliers(even_row(n));
        for (std::size_t i = 1; i < mo.size(); ++i) REQUIRE(mo[i] < mo[i - 1]);
        for (std::size_t i = 1; i < me.size(); ++i) REQUIRE(me[i] < me[i - 1]);
        const auto ml = multipliers(log_row(n));
        for (std::size_t i = 1; i < ml.size(); ++i) REQUIRE(ml[i] > ml[i - 1]);
        if (n >= 1) {
            const auto mi = multipliers(invsq_row(n));
            for (std::size_t i = 1; i < mi.size(); ++i) REQUIRE(mi[i] > mi[i - 1]);
        }
    }
}

TEST_CASE("exact coefficient float conversion carries the row scale") {
    const auto row = odd_row(6);
    // entry k=6: 429 / 8192
    CHECK(row.coefficient(6).to_double() == Approx(429.0 / 8192.0).epsilon(1e-15));
    const auto r3 = invsq_row(3);
    CHECK(r3.coefficient(0).to_double() == Approx(-5.0 / 64.0).epsilon(1e-15));
}
