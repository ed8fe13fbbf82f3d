#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "fockasym/exactnum.hpp"

namespace fockasym {

/// Λ_t(H) + drift·t, where H is c·1 or a square matrix acting on V.
class AffineProcessSpec {
public:
    static AffineProcessSpec scalar(GaussianRational c, GaussianRational drift = {});
    static AffineProcessSpec matrix(ExactMatrix m, GaussianRational drift = {});

    [[nodiscard]] bool is_scalar() const { return std::holds_alternative<GaussianRational>(op_); }
    [[nodiscard]] const GaussianRational& scalar_value() const { return std::get<GaussianRational>(op_); }
    [[nodiscard]] const ExactMatrix& matrix_value() const { return std::get<ExactMatrix>(op_); }
    [[nodiscard]] const GaussianRational& drift() const { return drift_; }
    [[nodiscard]] AffineProcessSpec without_drift() const;

    /// H v; throws ShapeError when a matrix does not match dim v.
    [[nodiscard]] std::vector<GaussianRational> apply(std::span<const GaussianRational> v) const;

private:
    AffineProcessSpec(std::variant<GaussianRational, ExactMatrix> op, GaussianRational drift)
        : op_(std::move(op)), drift_(std::move(drift)) {}
    std::variant<GaussianRational, ExactMatrix> op_;
    GaussianRational drift_;
};

/// ψ ∈ V. A state flagged unit must satisfy Σ|ψ_i|² = 1 exactly.
class CoherentState {
public:
    explicit CoherentState(std::vector<GaussianRational> v, bool unit = false);
    /// Unit-flagged state; throws InputError if the norm is not exactly 1.
    static CoherentState unit(std::vector<GaussianRational> v) { return CoherentState(std::move(v), true); }

    [[nodiscard]] const std::vector<GaussianRational>& vector() const { return v_; }
    [[nodiscard]] std::size_t dim() const { return v_.size(); }
    [[nodiscard]] bool is_unit() const { return unit_; }
    [[nodiscard]] Rational norm2() const;

private:
    std::vector<GaussianRational> v_;
    bool unit_;
};

/// ⟨v, w⟩ = Σ v_i conj(w_i), linear in the first argument.
[[nodiscard]] GaussianRational inner(std::span<const GaussianRational> v, std::span<const GaussianRational> w);

struct Interval {
    Rational s;
    Rational t;
};

/// Product of factors Λ over disjoint intervals; factors are (process index, interval index)
/// and their order is the operator product order.
struct IntervalAssignment {
    std::vector<Interval> intervals;
    std::vector<std::pair<std::size_t, std::size_t>> factors;
};

/// ⟨Λ_t(H_1)...Λ_t(H_n) e(ψ_t), e(φ_t)⟩ / ⟨e(ψ_t), e(φ_t)⟩ as a sum over set partitions of
/// ∏_B t⟨H_{i_1}...H_{i_k} ψ, φ⟩. Drifts must be zero.
[[nodiscard]] GaussianRational joint_moment_coherent(std::span<const AffineProcessSpec> ops, const CoherentState& psi,
                                                     const CoherentState& phi, const Rational& t);

inline constexpr std::size_t kMaxOracleFactors = 6;

/// Same quantity from the mixed derivative (-i)^n ∂^n/∂u_1...∂u_n exp(g(u) - g(0)),
/// g(u) = t⟨(1 + i u_1 H_1)...(1 + i u_n H_n) ψ, φ⟩, computed in the algebra u_j² = 0.
[[nodiscard]] GaussianRational joint_moment_oracle(std::span<const AffineProcessSpec> ops, const CoherentState& psi,
                                                   const CoherentState& phi, const Rational& t);

/// Moment of ∏ (Λ(H_f) + d_f·|I|) over disjoint intervals in the state ψ: independent
/// increments give a product over intervals, each a stationary single-interval moment.
[[nodiscard]] GaussianRational interval_joint_moment(const IntervalAssignment& assignment,
                                                     std::span<const AffineProcessSpec> specs,
                                                     const CoherentState& psi);

/// Single-interval moment of ∏ (Λ_t(H_f) + d_f t) in ψ.
[[nodiscard]] GaussianRational affine_moment(std::span<const AffineProcessSpec> ops, const CoherentState& psi,
                                             const Rational& t);

struct MeanVariance {
    GaussianRational mean;
    Rational variance;
};

/// mean = t⟨hψ, ψ⟩, variance = t‖hψ‖².
[[nodiscard]] MeanVariance mean_variance(const AffineProcessSpec& spec, const CoherentState& psi, const Rational& t);

/// Σ_k S(m, k) t^k, the m-th raw moment of Poisson(t).
[[nodiscard]] Rational touchard(int m, const Rational& t);

/// One factor c_p N_{t_τ} of a compound-Poisson monomial.
struct MonomialFactor {
    std::size_t process;
    std::size_t time;
};

/// E[∏_j c_{p_j} N_{t_{τ_j}}] for one rate-1 Poisson process N, by splitting into
/// independent increments over the grid.
[[nodiscard]] GaussianRational compound_poisson_moments(std::span<const GaussianRational> jumps,
                                                        std::span<const Rational> timeGrid,
                                                        std::span<const MonomialFactor> monomialOrder);

} // namespace fockasym
