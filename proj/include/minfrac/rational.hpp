#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace minfrac {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown by parse_rational on malformed text or a zero denominator.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Arbitrary-precision rational in canonical reduced form.
///
/// Invariants, enforced at construction:
///   - denominator > 0 (sign lives on the numerator),
///   - gcd(|numerator|, denominator) == 1,
///   - zero is exactly 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt num, BigInt den);
    Rational(const BigInt& num) : num_(num), den_(1) {}  // NOLINT: implicit by design
    Rational(int num) : num_(num), den_(1) {}            // NOLINT

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // exact, by cross-multiplication
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        return lhs < rhs ? std::strong_ordering::less
             : lhs > rhs ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

private:
    BigInt num_;
    BigInt den_;
};

/// Swaps numerator and denominator. Throws std::domain_error on zero.
Rational reciprocal(const Rational& x);

/// Splits a nonnegative rational into floor and fractional part,
/// with 0 <= frac < 1. Throws std::domain_error on negative input.
struct SplitResult {
    BigInt whole;
    Rational frac;
};
SplitResult split_integer(const Rational& x);

/// Parses "p/q", a plain decimal ("0.2021", ".75", "3."), or a bare
/// integer. Decimals convert exactly as digits over a power of ten;
/// scientific notation is rejected.
Rational parse_rational(std::string_view text);

/// Canonical rendering: "p/q" with no spaces ("0/1", "3/1", "-3/4").
std::string to_string(const Rational& x);

/// Decimal expansion truncated at `significant` significant digits,
/// zero-padded when the expansion terminates early. Never goes through
/// floating point.
std::string to_decimal_string(const Rational& x, int significant = 20);

}  // namespace minfrac
