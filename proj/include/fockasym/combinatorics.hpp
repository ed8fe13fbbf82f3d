#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fockasym/exactnum.hpp"

namespace fockasym {

/// Young diagram stored as weakly decreasing positive parts.
class IntegerPartition {
public:
    IntegerPartition() = default;
    /// Trailing zeros are trimmed; negative or increasing parts throw InputError.
    explicit IntegerPartition(std::vector<int> parts);

    /// "2,1" or "" / "0" for the empty partition.
    static IntegerPartition parse(std::string_view text);

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] std::size_t length() const { return parts_.size(); }
    [[nodiscard]] int weight() const;
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    /// i-th part, 0-based; zero past the length.
    [[nodiscard]] int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    /// Diagram inclusion this ⊆ other.
    [[nodiscard]] bool contained_in(const IntegerPartition& other) const;
    [[nodiscard]] std::string str() const;

    friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) = default;

private:
    std::vector<int> parts_;
};

/// Highest weight of U(N): N weakly decreasing integers.
class Signature {
public:
    explicit Signature(std::vector<std::int64_t> entries);

    /// Partition padded with zeros to length N.
    static Signature from_partition(const IntegerPartition& p, std::size_t N);
    static Signature zero(std::size_t N) { return Signature(std::vector<std::int64_t>(N, 0)); }

    [[nodiscard]] std::size_t N() const { return entries_.size(); }
    [[nodiscard]] const std::vector<std::int64_t>& entries() const { return entries_; }
    [[nodiscard]] std::int64_t operator[](std::size_t i) const { return entries_.at(i); }

    /// λ⁺ = nonnegative entries read as a partition.
    [[nodiscard]] IntegerPartition positive_part() const;
    /// λ⁻ = negated negative entries, largest first.
    [[nodiscard]] IntegerPartition negative_part() const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::vector<std::int64_t> entries_;
};

/// Partition of {1..m} into disjoint ascending blocks.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    [[nodiscard]] std::size_t size() const { return blocks.size(); }
    [[nodiscard]] bool has_singleton() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// Modified Frobenius coordinates a_i = λ_i - i + 1/2, b_i = λ'_i - i + 1/2.
struct FrobeniusPair {
    std::vector<Rational> a;
    std::vector<Rational> b;
};

struct FrobeniusCoordinates {
    FrobeniusPair plus;
    FrobeniusPair minus;
};

inline constexpr int kMaxSetPartitionSize = 12;

/// All set partitions of {1..m}, ordered by restricted-growth string. Requires 1 <= m <= 12.
[[nodiscard]] std::vector<SetPartition> enumerate_set_partitions(int m);

/// All perfect matchings of {1..m}; empty for odd m.
[[nodiscard]] std::vector<SetPartition> enumerate_pair_partitions(int m);

[[nodiscard]] FrobeniusPair frobenius_coordinates(const IntegerPartition& lambda);
[[nodiscard]] FrobeniusCoordinates frobenius_coordinates(const Signature& lambda);

[[nodiscard]] IntegerPartition transpose_partition(const IntegerPartition& mu);

/// dim of the irreducible S(N)-module: N! / ∏ hooks. Requires |λ| = N.
[[nodiscard]] BigInt hook_dimension(const IntegerPartition& lambda, int N);

/// n(μ) = Σ (j-1) μ_j
[[nodiscard]] std::int64_t n_stat(const IntegerPartition& mu);

/// All partitions of n in reverse lexicographic order.
[[nodiscard]] std::vector<IntegerPartition> partitions_of(int n);

/// All partitions ν ⊆ μ, including ∅ and μ itself.
[[nodiscard]] std::vector<IntegerPartition> subpartitions(const IntegerPartition& mu);

/// True when outer/inner is a horizontal strip (at most one box per column).
[[nodiscard]] bool is_horizontal_strip(const IntegerPartition& outer, const IntegerPartition& inner);

[[nodiscard]] BigInt factorial(int n);
[[nodiscard]] BigInt binomial(int n, int k);
/// Stirling numbers of the second kind S(n, k).
[[nodiscard]] BigInt stirling2(int n, int k);
[[nodiscard]] BigInt bell_number(int n);
/// x (x-1) ... (x-k+1)
[[nodiscard]] Rational falling_factorial(const Rational& x, int k);
/// n (n-1) ... (n-k+1) for integer n; zero once a factor hits zero.
[[nodiscard]] BigInt falling_factorial(std::int64_t n, int k);

/// Multiset union ρ ∪ 1^ones.
[[nodiscard]] IntegerPartition pad_with_ones(const IntegerPartition& rho, int ones);

} // namespace fockasym
