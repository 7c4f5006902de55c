#include "cvtfrac/radix.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace cvtfrac {

namespace {

void require_non_negative(const Natural& v) {
    if (v < 0) {
        throw OutOfRange("negative operand " + v.str());
    }
}

void require_same_base(const RadixNumber& a, const RadixNumber& b) {
    if (a.base() != b.base()) {
        throw ArgumentError("operands use different bases (" + std::to_string(a.base().value()) +
                            " vs " + std::to_string(b.base().value()) + ")");
    }
}

}  // namespace

RadixNumber::RadixNumber(Base base, std::vector<unsigned> digits)
    : base_(base), digits_(std::move(digits)) {
    for (unsigned d : digits_) {
        if (d >= base_.value()) {
            throw OutOfRange("digit " + std::to_string(d) + " out of range for base " +
                             std::to_string(base_.value()));
        }
    }
}

RadixNumber to_digits(const Natural& value, Base base, std::size_t min_width) {
    require_non_negative(value);
    std::vector<unsigned> digits;
    Natural rest = value;
    const Natural radix = base.value();
    while (rest != 0) {
        Natural q;
        Natural r;
        boost::multiprecision::divide_qr(rest, radix, q, r);
        digits.push_back(r.convert_to<unsigned>());
        rest = std::move(q);
    }
    if (digits.size() < min_width) {
        digits.resize(min_width, 0U);
    }
    return RadixNumber(base, std::move(digits));
}

Natural from_digits(const RadixNumber& number) {
    Natural value = 0;
    const auto& digits = number.digits();
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        value *= number.base().value();
        value += *it;
    }
    return value;
}

RadixNumber cvt(const RadixNumber& a, const RadixNumber& b) {
    require_same_base(a, b);
    const unsigned n = a.base().value();
    const std::size_t width = std::max(a.width(), b.width());
    std::vector<unsigned> carry(width + 1, 0U);
    for (std::size_t i = 0; i < width; ++i) {
        // a_i + b_i <= 2n - 2, so the carry is 0 or 1.
        carry[i + 1] = (static_cast<unsigned long long>(a.digit(i)) + b.digit(i)) >= n ? 1U : 0U;
    }
    return RadixNumber(a.base(), std::move(carry));
}

RadixNumber sum_without_carry(const RadixNumber& a, const RadixNumber& b) {
    require_same_base(a, b);
    const unsigned long long n = a.base().value();
    const std::size_t width = std::max(a.width(), b.width());
    std::vector<unsigned> sum(width, 0U);
    for (std::size_t i = 0; i < width; ++i) {
        sum[i] = static_cast<unsigned>((static_cast<unsigned long long>(a.digit(i)) + b.digit(i)) % n);
    }
    return RadixNumber(a.base(), std::move(sum));
}

Natural cvt(const Natural& a, const Natural& b, Base base) {
    return from_digits(cvt(to_digits(a, base), to_digits(b, base)));
}

Natural sum_without_carry(const Natural& a, const Natural& b, Base base) {
    return from_digits(sum_without_carry(to_digits(a, base), to_digits(b, base)));
}

std::uint64_t cvt_u64(std::uint64_t a, std::uint64_t b, Base base) {
    std::uint64_t total = 0;
    if (__builtin_add_overflow(a, b, &total)) {
        throw OutOfRange("cvt_u64 operands overflow 64 bits");
    }
    const std::uint64_t n = base.value();
    std::uint64_t result = 0;
    std::uint64_t place = n;  // carry out of position i lands at position i + 1
    while (a != 0 || b != 0) {
        if (a % n + b % n >= n) {
            result += place;
        }
        a /= n;
        b /= n;
        // A carry at this position implies a + b >= place, so place can only
        // wrap at positions that never carry.
        place *= n;
    }
    return result;
}

}  // namespace cvtfrac
