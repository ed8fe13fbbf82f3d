#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fockasym {

using BigInt = mpz_class;

/**
 * Arbitrary-precision rational number.
 *
 * The value is always canonical: the denominator is positive and coprime
 * to the numerator, and zero is 0/1. Backed by GMP's mpq_t.
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n); // NOLINT(google-explicit-constructor)
    Rational(int n) : Rational(static_cast<std::int64_t>(n)) {} // NOLINT
    Rational(const BigInt& n);                                 // NOLINT
    Rational(const BigInt& num, const BigInt& den);
    Rational(std::int64_t num, std::int64_t den);

    /// Parses "p/q" or an integer literal. Anything resembling a float is rejected.
    static Rational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return value_.get_den(); }

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] bool is_perfect_square() const;

    /// Exact "p/q" (or "p" for integers).
    [[nodiscard]] std::string str() const;
    /// Decimal rendering with the given number of significant digits.
    [[nodiscard]] std::string decimal(int significant = 15) const;
    [[nodiscard]] double to_double() const { return value_.get_d(); }
    /// Natural logarithm of |x|; finite for any nonzero value regardless of magnitude.
    [[nodiscard]] double log_abs() const;

    [[nodiscard]] const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_{0};

    friend Rational pow(const Rational& base, std::int64_t exponent);
};

[[nodiscard]] Rational abs(const Rational& r);
/// Integer powers; negative exponents require a nonzero base.
[[nodiscard]] Rational pow(const Rational& base, std::int64_t exponent);
/// Square root when the argument is the square of a rational.
[[nodiscard]] Rational exact_sqrt(const Rational& r);

} // namespace fockasym

template <>
struct std::hash<fockasym::Rational> {
    std::size_t operator()(const fockasym::Rational& r) const noexcept;
};
