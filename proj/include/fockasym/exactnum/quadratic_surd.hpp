#pragma once

#include <string>

#include "fockasym/exactnum/rational.hpp"

namespace fockasym {

/**
 * Real number of the form coeff * sqrt(radicand) with rational parts.
 *
 * Scaled CLT moments with an odd number of factors carry a half-integer
 * power of N or of a variance; this keeps them exact. A radicand that is a
 * perfect square is folded into the coefficient, so rational values always
 * have radicand 1.
 */
class QuadraticSurd {
public:
    QuadraticSurd() = default;
    QuadraticSurd(Rational value) : coeff_(std::move(value)) {} // NOLINT(google-explicit-constructor)
    QuadraticSurd(Rational coeff, Rational radicand);

    [[nodiscard]] const Rational& coeff() const { return coeff_; }
    [[nodiscard]] const Rational& radicand() const { return radicand_; }
    [[nodiscard]] bool is_rational() const { return radicand_ == Rational(1) || coeff_.is_zero(); }
    [[nodiscard]] bool is_zero() const { return coeff_.is_zero(); }
    /// Value as a Rational; throws DomainError when irrational.
    [[nodiscard]] Rational to_rational() const;
    /// value^2, always rational.
    [[nodiscard]] Rational square() const { return coeff_ * coeff_ * radicand_; }

    /// "p/q" or "p/q*sqrt(r/s)".
    [[nodiscard]] std::string str() const;
    [[nodiscard]] std::string decimal(int significant = 15) const;
    [[nodiscard]] double log_abs() const;

    friend QuadraticSurd abs(const QuadraticSurd& x) { return {abs(x.coeff_), x.radicand_}; }
    friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) = default;

private:
    Rational coeff_;
    Rational radicand_{1};
};

/// |a - b| when the difference is itself a single surd (equal radicands or a zero operand).
[[nodiscard]] QuadraticSurd abs_difference(const QuadraticSurd& a, const QuadraticSurd& b);

} // namespace fockasym
