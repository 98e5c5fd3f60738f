#pragma once

// Arbitrary-precision signed integers, sized for exact generation of
// binomial-coefficient triangles (rows up to a few thousand entries).
// Only the operations the coefficient machinery needs are provided:
// signed add/sub, full multiply, multiply/divide by 64-bit values,
// bit shifts, decimal output and scaled float conversion.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace sinint {

class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v < 0) {
            negative_ = true;
            // avoid overflow at LLONG_MIN
            limbs_.push_back(static_cast<std::uint64_t>(-(v + 1)) + 1u);
        } else if (v > 0) {
            limbs_.push_back(static_cast<std::uint64_t>(v));
        }
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_unsigned(std::uint64_t v) {
        BigInt r;
        if (v != 0) r.limbs_.push_back(v);
        return r;
    }

    static BigInt from_string(const std::string& s) {
        std::size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r.mul_small(10);
            r += BigInt(s[i] - '0');
        }
        if (neg && !r.is_zero()) r.negative_ = true;
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    bool is_negative() const { return negative_; }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.negative_ = !r.negative_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        r.negative_ = false;
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.negative_ != b.negative_)
            return a.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
        int c = cmp_mag(a, b);
        if (a.negative_) c = -c;
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    BigInt& operator+=(const BigInt& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        if (negative_ == o.negative_) {
            add_mag(limbs_, o.limbs_);
        } else {
            int c = cmp_mag(*this, o);
            if (c == 0) {
                limbs_.clear();
                negative_ = false;
            } else if (c > 0) {
                sub_mag(limbs_, o.limbs_);
            } else {
                std::vector<std::uint64_t> tmp = o.limbs_;
                sub_mag(tmp, limbs_);
                limbs_ = std::move(tmp);
                negative_ = o.negative_;
            }
        }
        trim();
        return *this;
    }

    BigInt& operator-=(const BigInt& o) { return *this += -o; }

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return {};
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            unsigned __int128 carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                unsigned __int128 cur =
                    static_cast<unsigned __int128>(a.limbs_[i]) * b.limbs_[j] +
                    r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint64_t>(cur);
                carry = cur >> 64;
            }
            r.limbs_[i + b.limbs_.size()] = static_cast<std::uint64_t>(carry);
        }
        r.negative_ = (a.negative_ != b.negative_);
        r.trim();
        return r;
    }

    BigInt& mul_small(std::uint64_t m) {
        if (m == 0 || is_zero()) {
            limbs_.clear();
            negative_ = false;
            return *this;
        }
        unsigned __int128 carry = 0;
        for (auto& limb : limbs_) {
            unsigned __int128 cur = static_cast<unsigned __int128>(limb) * m + carry;
            limb = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
        return *this;
    }

    // Floor division of the magnitude by d; returns the remainder.
    std::uint64_t divmod_small(std::uint64_t d) {
        if (d == 0) throw std::domain_error("BigInt: division by zero");
        unsigned __int128 rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | limbs_[i];
            limbs_[i] = static_cast<std::uint64_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<std::uint64_t>(rem);
    }

    // Division that must leave no remainder; used where integrality is
    // a theorem, so a nonzero remainder is a logic error, not bad input.
    BigInt& div_exact_small(std::uint64_t d) {
        std::uint64_t r = divmod_small(d);
        if (r != 0) throw std::logic_error("BigInt: inexact division");
        return *this;
    }

    BigInt& shift_left(unsigned bits) {
        if (is_zero() || bits == 0) return *this;
        unsigned limb_shift = bits / 64, bit_shift = bits % 64;
        std::size_t n = limbs_.size();
        limbs_.resize(n + limb_shift + 1, 0);
        for (std::size_t i = n; i-- > 0;) {
            std::uint64_t lo = limbs_[i] << bit_shift;
            std::uint64_t hi =
                bit_shift ? (limbs_[i] >> (64 - bit_shift)) : 0;
            limbs_[i + limb_shift] = 0;
            limbs_[i + limb_shift + 1] |= hi;
            limbs_[i + limb_shift] |= lo;
        }
        for (unsigned i = 0; i < limb_shift; ++i) limbs_[i] = 0;
        trim();
        return *this;
    }

    // Shift of the magnitude (rounds toward zero).
    BigInt& shift_right(unsigned bits) {
        unsigned limb_shift = bits / 64, bit_shift = bits % 64;
        if (limb_shift >= limbs_.size()) {
            limbs_.clear();
            negative_ = false;
            return *this;
        }
        limbs_.erase(limbs_.begin(), limbs_.begin() + limb_shift);
        if (bit_shift) {
            for (std::size_t i = 0; i < limbs_.size(); ++i) {
                std::uint64_t hi =
                    (i + 1 < limbs_.size()) ? (limbs_[i + 1] << (64 - bit_shift)) : 0;
                limbs_[i] = (limbs_[i] >> bit_shift) | hi;
            }
        }
        trim();
        return *this;
    }

    std::size_t bit_length() const {
        if (limbs_.empty()) return 0;
        std::uint64_t top = limbs_.back();
        std::size_t bits = (limbs_.size() - 1) * 64;
        while (top) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }

    // Value of this / 2^pow2 as long double. The top ~192 bits of the
    // magnitude are used, so the conversion is accurate to a unit in the
    // last place of the 64-bit long double mantissa.
    long double to_long_double_scaled(long pow2) const {
        if (limbs_.empty()) return 0.0L;
        std::size_t n = limbs_.size();
        long double m = 0.0L;
        std::size_t take = std::min<std::size_t>(n, 3);
        for (std::size_t i = 0; i < take; ++i) {
            m = m * 18446744073709551616.0L +
                static_cast<long double>(limbs_[n - 1 - i]);
        }
        long exp2 = static_cast<long>((n - take) * 64) - pow2;
        long double v = std::ldexp(m, static_cast<int>(exp2));
        return negative_ ? -v : v;
    }

    double to_double() const {
        return static_cast<double>(to_long_double_scaled(0));
    }

    std::string to_string() const {
        if (limbs_.empty()) return "0";
        std::string digits;
        BigInt t = abs();
        while (!t.is_zero()) {
            std::uint64_t chunk = t.divmod_small(10000000000000000000ull);  // 10^19
            char buf[20];
            if (t.is_zero())
                digits.insert(0, buf, std::snprintf(buf, sizeof buf, "%llu",
                                                    (unsigned long long)chunk));
            else
                digits.insert(0, buf, std::snprintf(buf, sizeof buf, "%019llu",
                                                    (unsigned long long)chunk));
        }
        return negative_ ? "-" + digits : digits;
    }

private:
    std::vector<std::uint64_t> limbs_;  // little-endian, no trailing zeros
    bool negative_ = false;

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) negative_ = false;
    }

    static int cmp_mag(const BigInt& a, const BigInt& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            if (a.limbs_[i] != b.limbs_[i])
                return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
        }
        return 0;
    }

    static void add_mag(std::vector<std::uint64_t>& a,
                        const std::vector<std::uint64_t>& b) {
        if (b.size() > a.size()) a.resize(b.size(), 0);
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            unsigned __int128 cur = carry + a[i] + (i < b.size() ? b[i] : 0);
            a[i] = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        if (carry) a.push_back(static_cast<std::uint64_t>(carry));
    }

    // requires |a| >= |b|
    static void sub_mag(std::vector<std::uint64_t>& a,
                        const std::vector<std::uint64_t>& b) {
        std::uint64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t bi = i < b.size() ? b[i] : 0;
            std::uint64_t before = a[i];
            std::uint64_t after = before - bi - borrow;
            borrow = (before < bi || (borrow && before == bi)) ? 1 : 0;
            a[i] = after;
        }
    }
};

inline BigInt factorial(unsigned long n) {
    BigInt r(1);
    for (unsigned long i = 2; i <= n; ++i) r.mul_small(i);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return {};
    if (k > n - k) k = n - k;
    BigInt c(1);
    for (unsigned long i = 1; i <= k; ++i) {
        c.mul_small(n - k + i);
        c.div_exact_small(i);
    }
    return c;
}

}  // namespace sinint
