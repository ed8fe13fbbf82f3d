#pragma once

#include <cstddef>
#include <vector>

#include "fockasym/exactnum/rational.hpp"

namespace fockasym {

/**
 * Formal power series in t over Q, truncated modulo t^(K+1).
 *
 * Binary operations require equal orders; a mismatch throws DomainError
 * instead of silently truncating the longer operand.
 */
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order);
    /// Coefficients of t^0..t^K; shorter inputs are zero-padded, longer ones rejected.
    TruncatedSeries(std::size_t order, std::vector<Rational> coeffs);

    static TruncatedSeries constant(std::size_t order, const Rational& c);
    /// c0 + c1 t
    static TruncatedSeries linear(std::size_t order, const Rational& c0, const Rational& c1);

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& c);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
    friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
    void require_same_order(const TruncatedSeries& o) const;
    std::vector<Rational> coeffs_;
};

/// exp(s) mod t^(K+1); s must have zero constant term.
[[nodiscard]] TruncatedSeries series_exp(const TruncatedSeries& s);

/// num / den mod t^(K+1); den must have a nonzero constant term.
[[nodiscard]] TruncatedSeries series_quotient(const TruncatedSeries& num, const TruncatedSeries& den);

} // namespace fockasym
