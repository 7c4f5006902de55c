#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cvtfrac/error.hpp"

namespace cvtfrac {

/// Exact unbounded integer used for digit arithmetic. Only non-negative
/// values are accepted by the functions below.
using Natural = boost::multiprecision::cpp_int;

/// Radix of a positional number system; always >= 2.
class Base {
public:
    explicit Base(long long value) : value_(check(value)) {}

    [[nodiscard]] unsigned value() const noexcept { return value_; }
    operator unsigned() const noexcept { return value_; }  // NOLINT(google-explicit-constructor)

    friend bool operator==(Base, Base) = default;

private:
    static unsigned check(long long v) {
        if (v < 2 || v > 0xFFFFFFFFLL) {
            throw InvalidBase(v);
        }
        return static_cast<unsigned>(v);
    }

    unsigned value_;
};

/// A non-negative integer held as base-n digits, least significant first.
/// An empty digit sequence is zero.
class RadixNumber {
public:
    explicit RadixNumber(Base base) : base_(base) {}
    RadixNumber(Base base, std::vector<unsigned> digits);

    [[nodiscard]] Base base() const noexcept { return base_; }
    [[nodiscard]] const std::vector<unsigned>& digits() const noexcept { return digits_; }
    [[nodiscard]] std::size_t width() const noexcept { return digits_.size(); }

    /// Digit at position i, or 0 beyond the stored width.
    [[nodiscard]] unsigned digit(std::size_t i) const noexcept {
        return i < digits_.size() ? digits_[i] : 0U;
    }

    friend bool operator==(const RadixNumber&, const RadixNumber&) = default;

private:
    Base base_;
    std::vector<unsigned> digits_;
};

/// Digits of `value` in `base`, zero-padded to at least `min_width` digits.
RadixNumber to_digits(const Natural& value, Base base, std::size_t min_width = 0);
Natural from_digits(const RadixNumber& number);

/// Digit-level carry value: per-position carry floor((a_i + b_i) / n), shifted
/// one place toward the most significant end. The result has width
/// max(width(a), width(b)) + 1 with a zero least-significant digit.
RadixNumber cvt(const RadixNumber& a, const RadixNumber& b);

/// Digit-level carry-free sum (a_i + b_i) mod n.
RadixNumber sum_without_carry(const RadixNumber& a, const RadixNumber& b);

Natural cvt(const Natural& a, const Natural& b, Base base);
Natural sum_without_carry(const Natural& a, const Natural& b, Base base);

/// Machine-word carry value for table construction. Exact whenever a + b
/// does not overflow 64 bits; throws OutOfRange otherwise.
std::uint64_t cvt_u64(std::uint64_t a, std::uint64_t b, Base base);

}  // namespace cvtfrac
