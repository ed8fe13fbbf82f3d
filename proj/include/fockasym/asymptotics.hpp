#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fockasym/characters.hpp"
#include "fockasym/combinatorics.hpp"
#include "fockasym/exactnum.hpp"

namespace fockasym {

/// Signature λ(N) of length N whose scaled Frobenius coordinates approach ω.
/// Rows ⌊α_i N⌋, columns of ⌊β_i N⌋ boxes and a ⌊√N⌋ × ⌊γ√N⌋ rectangle, united on
/// each side. Throws ConstructionError when the two sides need more than N rows.
[[nodiscard]] Signature build_vk_sequence(const OmegaParams& omega, std::int64_t N);

/// Partition of exactly N whose rows and columns realize α and β; leftover boxes
/// are added greedily as a near-square block so they stay o(N) in every row and column.
[[nodiscard]] IntegerPartition build_thoma_diagram(const ThomaParams& omega, std::int64_t N);

/// λ(N)_{N+1-j} = ν_j for j = 1..N.
[[nodiscard]] Signature build_stabilizing_sequence(const NuSequence& nu, std::int64_t N);

enum class FamilyKind { Unitary, Symmetric, Quantum, Custom };

/// Largest N evaluated for the symmetric family.
inline constexpr std::int64_t kSymmetricMaxN = 40;

/// A list of central elements evaluated along one sequence of representations.
struct EigenvalueFamily {
    FamilyKind kind = FamilyKind::Custom;
    std::vector<IntegerPartition> members; // μ-list (unitary, quantum) or ρ-list (symmetric)
    OmegaParams omega;
    ThomaParams thoma;
    NuSequence nu;
    Rational q2;
    std::vector<Rational> scalars; // custom: f_i(N) = c_i for every N

    static EigenvalueFamily unitary(std::vector<IntegerPartition> mus, OmegaParams omega);
    static EigenvalueFamily symmetric(std::vector<IntegerPartition> rhos, ThomaParams thoma);
    static EigenvalueFamily quantum(std::vector<IntegerPartition> mus, NuSequence nu, Rational q2);
    static EigenvalueFamily custom(std::vector<Rational> scalars);

    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] std::string name() const;
    /// Throws on invalid parameters or a member outside the family's domain.
    void validate() const;
};

/// s*_{μ}(q2^{μ_i - i + 1}) / s*_{μ}(q2^{μ_i}) with ℓ(μ) variables: the scalar in front of Z^(q).
[[nodiscard]] Rational quantum_prefactor(const IntegerPartition& mu, const Rational& q2);

/// Eigenvalue f_i(N) of member i on λ(N).
[[nodiscard]] Rational family_eigenvalue(const EigenvalueFamily& fam, std::size_t i, std::int64_t N);

/// Power normalizer P_i(N): N^{|μ|} (unitary), 1 (symmetric, custom), q2^{-(N-1)|μ|} (quantum).
[[nodiscard]] Rational family_normalizer(const EigenvalueFamily& fam, std::size_t i, std::int64_t N);

/// Limit ℓ_i of f_i(N) / P_i(N): s_μ(ω), χ^ω_ρ, prefactor·s_μ(ω_ν), or the scalar.
[[nodiscard]] Rational family_limit(const EigenvalueFamily& fam, std::size_t i);

enum class Normalization {
    ByVariance, // divide by the standard deviation √(L t) |f_i(N)|
    ByPower,    // divide by P_i(N) √N
    Unnormalized,
};

[[nodiscard]] std::string to_string(Normalization n);

inline constexpr std::size_t kMaxCltFactors = 8;

/// ⟨X̃_1 ... X̃_m⟩ at time Lt: splitting [0, Lt) into L unit-t intervals gives
/// Σ_π L(L-1)...(L-|π|+1) ∏_B (block moment at time t), divided by ∏ D_i.
/// With centered = false the drifts are dropped and singleton blocks count.
[[nodiscard]] QuadraticSurd scaled_clt_moment(const EigenvalueFamily& fam, std::span<const std::size_t> indices,
                                              std::int64_t N, std::int64_t L, const Rational& t,
                                              Normalization norm, bool centered = true);

/// Σ over pair partitions of ∏ C(a, b); 0 for odd m.
[[nodiscard]] Rational wick_limit(const RationalMatrix& C, std::size_t m);

/// t ℓ_i ℓ_j for ByPower, sign(ℓ_i ℓ_j) for ByVariance.
[[nodiscard]] Rational limit_covariance(const EigenvalueFamily& fam, std::size_t i, std::size_t j, const Rational& t,
                                        Normalization norm);

struct ReportRow {
    std::size_t gridIndex = 0;
    std::int64_t N = 0;
    std::int64_t L = 0;
    QuadraticSurd value;
    QuadraticSurd limit;
    QuadraticSurd absError;
    /// log(e_prev / e) / log(g / g_prev) against the previous row; absent if either error is 0.
    std::optional<double> rate;
};

struct ConvergenceReport {
    std::string kind; // "lln" or "clt"
    std::string family;
    std::string normalization;
    std::vector<ReportRow> rows;
    /// Least-squares slope of -log(error) against log(grid) over nonzero errors.
    std::optional<double> fittedRate;
    std::optional<Rational> tolerance;
    /// Last error within tolerance; absent without a tolerance.
    std::optional<bool> passed;
};

/// Worker count for grid evaluation: FOCK_ASYMPTOTICS_THREADS if set and positive,
/// otherwise the hardware concurrency.
[[nodiscard]] unsigned grid_threads();

/// ⟨Λ_t(member i)⟩ / P_i(N) along gridN against t ℓ_i.
[[nodiscard]] ConvergenceReport lln_report(const EigenvalueFamily& fam, std::size_t i,
                                           std::span<const std::int64_t> gridN, const Rational& t,
                                           std::optional<Rational> tolerance = std::nullopt);

/// scaled_clt_moment with N = L along gridL against the Wick limit of limit_covariance.
[[nodiscard]] ConvergenceReport clt_report(const EigenvalueFamily& fam, std::span<const std::size_t> indices,
                                           std::span<const std::int64_t> gridL, const Rational& t,
                                           Normalization norm, std::optional<Rational> tolerance = std::nullopt);

} // namespace fockasym
