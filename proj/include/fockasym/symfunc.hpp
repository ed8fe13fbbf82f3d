#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "fockasym/combinatorics.hpp"
#include "fockasym/exactnum.hpp"

namespace fockasym {

/// Parameters a_1, a_2, ... of a factorial Schur polynomial.
class ParameterSequence {
public:
    enum class Kind { AllZero, ShiftedConvention, GeometricQ };

    static ParameterSequence all_zero() { return ParameterSequence(Kind::AllZero, Rational(0), 0); }
    /// a_j = -j + 1
    static ParameterSequence shifted_convention() { return ParameterSequence(Kind::ShiftedConvention, Rational(0), 0); }
    /// a_j = -base^(j + offset)
    static ParameterSequence geometric_q(Rational base, std::int64_t offset);

    [[nodiscard]] Kind kind() const { return kind_; }
    /// a_j for j >= 1 (any integer j is accepted for GeometricQ).
    [[nodiscard]] Rational operator()(std::int64_t j) const;
    [[nodiscard]] std::string str() const;

private:
    ParameterSequence(Kind kind, Rational base, std::int64_t offset)
        : kind_(kind), base_(std::move(base)), offset_(offset) {}
    Kind kind_;
    Rational base_;
    std::int64_t offset_;
};

/// (x|a)^k = (x + a_1)(x + a_2)...(x + a_k)
[[nodiscard]] Rational factorial_power(const Rational& x, const ParameterSequence& a, int k);

/// Bialternant s_λ(z); negative entries are handled by factoring out (z_1...z_N)^{λ_N}.
/// Coincident or zero points throw DegenerateError.
[[nodiscard]] GaussianRational schur_eval(const Signature& lambda, std::span<const GaussianRational> z);

/// s_λ(1, ..., 1) by the Weyl product ∏_{i<j} (λ_i - λ_j + j - i)/(j - i).
[[nodiscard]] Rational schur_dimension_UN(const Signature& lambda, std::size_t N);

/// Shifted Schur polynomial s*_μ(x_1..x_N) as a ratio of falling-factorial determinants.
/// Trailing zero variables beyond ℓ(μ) are dropped first (stability); very long
/// remaining inputs are summed over reverse tableaux instead of determinants.
[[nodiscard]] Rational shifted_schur_eval(const IntegerPartition& mu, std::span<const Rational> x);

/// s*_μ(x) summed over reverse tableaux: entries weakly decreasing along rows,
/// strictly down columns, box α with entry k weighted by x_k - c(α).
[[nodiscard]] Rational shifted_schur_tableau(const IntegerPartition& mu, std::span<const Rational> x);

/// Factorial Schur s_μ(x | a) as det[(x_i|a)^{μ_j+N-j}] / det[(x_i|a)^{N-j}].
[[nodiscard]] Rational factorial_schur_eval(const IntegerPartition& mu, std::span<const Rational> x,
                                            const ParameterSequence& a);

/// s_μ(x | a) summed over semistandard tableaux, box α with entry k weighted by
/// x_k + a_{k + c(α)}. Polynomial in x, so coincident points are fine.
[[nodiscard]] Rational factorial_schur_tableau(const IntegerPartition& mu, std::span<const Rational> x,
                                               const ParameterSequence& a);

/// s*_μ(x; q) = s_μ(x | (-q^{j-N})), taking q2 = q^2 as the base.
/// More than 48 points are summed over tableaux rather than a determinant.
[[nodiscard]] Rational q_interp_schur_eval(const IntegerPartition& mu, std::span<const Rational> x,
                                           const Rational& q2);

/// det[h_{μ_i - i + j}] with h_k = 0 for k < 0.
[[nodiscard]] Rational jacobi_trudi_det(const IntegerPartition& mu, std::span<const Rational> h);

} // namespace fockasym
