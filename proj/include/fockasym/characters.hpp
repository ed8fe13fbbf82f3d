#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fockasym/combinatorics.hpp"
#include "fockasym/exactnum.hpp"

namespace fockasym {

/// Boundary point ω = (α⁺, α⁻, β⁺, β⁻, γ⁺, γ⁻) with finitely many nonzero entries.
struct OmegaParams {
    std::vector<Rational> alphaPlus;
    std::vector<Rational> alphaMinus;
    std::vector<Rational> betaPlus;
    std::vector<Rational> betaMinus;
    Rational gammaPlus;
    Rational gammaMinus;

    /// Throws ParameterError unless every list is nonnegative and weakly decreasing,
    /// γ± >= 0 and β⁺_1 + β⁻_1 <= 1.
    void validate() const;
};

/// Thoma parameters ω = (α, β): weakly decreasing, entries in [0,1], Σ(α_i + β_i) <= 1.
struct ThomaParams {
    std::vector<Rational> alpha;
    std::vector<Rational> beta;

    void validate() const;
};

/// ν_1 <= ν_2 <= ... given by an explicit prefix and a constant tail.
struct NuSequence {
    std::vector<std::int64_t> prefix;
    std::int64_t tail = 0;

    void validate() const;
    /// ν_j for j >= 1.
    [[nodiscard]] std::int64_t operator()(std::size_t j) const {
        return j <= prefix.size() ? prefix[j - 1] : tail;
    }
    [[nodiscard]] std::string str() const;
};

/// Coefficients h_0..h_K of Φ_ω(1 + t).
[[nodiscard]] TruncatedSeries phi_omega_h_series(const OmegaParams& omega, std::size_t K);

/// s_μ(ω) = det[h_{μ_i - i + j}(ω)].
[[nodiscard]] Rational s_mu_omega(const IntegerPartition& mu, const OmegaParams& omega);

/// χ^ω_ρ = ∏_k (Σ α_i^k + (-1)^{k-1} Σ β_i^k)^{m_k}; ρ must have no part equal to 1.
[[nodiscard]] Rational thoma_character_value(const ThomaParams& omega, const IntegerPartition& rho);

/// Integer character χ^λ_ρ by the Murnaghan–Nakayama rule. Cycles are removed longest
/// first; once only fixed points remain the value is the hook dimension of what is left.
[[nodiscard]] BigInt mn_character(const IntegerPartition& lambda, const IntegerPartition& rho);

/// χ^λ_ρ / dim λ.
[[nodiscard]] Rational mn_normalized_character(const IntegerPartition& lambda, const IntegerPartition& rho);

/// Coefficients h_0..h_K of ∏_{j>=0}(1 - q2^j t) / ∏_{j>=1}(1 - q2^{ν_j + j - 1} t),
/// reduced to finitely many factors by cancelling the common geometric tails.
[[nodiscard]] TruncatedSeries q_boundary_h_series(const NuSequence& nu, const Rational& q2, std::size_t K);

/// Exponents surviving the cancellation: numerator factors first, denominator second.
struct QBoundaryFactors {
    std::vector<std::int64_t> numerator;
    std::vector<std::int64_t> denominator;
};
[[nodiscard]] QBoundaryFactors q_boundary_factors(const NuSequence& nu);

/// s_μ(ω_ν) = det[h_{μ_i - i + j}(ω_ν)].
[[nodiscard]] Rational s_mu_omega_nu(const IntegerPartition& mu, const NuSequence& nu, const Rational& q2);

} // namespace fockasym
