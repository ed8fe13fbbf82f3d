#pragma once

// Seeded generators shared by the property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "fockasym/combinatorics.hpp"
#include "fockasym/exactnum.hpp"

namespace testsupport {

using fockasym::GaussianRational;
using fockasym::IntegerPartition;
using fockasym::Rational;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

    /// p/q with |p| <= bound, 1 <= q <= bound
    Rational rational(int bound = 10) { return {uniform(-bound, bound), uniform(1, bound)}; }
    Rational positive_rational(int bound = 10) { return {uniform(1, bound), uniform(1, bound)}; }

    GaussianRational gaussian(int bound = 10) { return {rational(bound), rational(bound)}; }

    std::vector<GaussianRational> gaussian_vector(std::size_t n, int bound = 10) {
        std::vector<GaussianRational> v;
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(gaussian(bound));
        }
        return v;
    }

    fockasym::ExactMatrix gaussian_matrix(std::size_t n, int bound = 10) {
        return fockasym::ExactMatrix(n, n, gaussian_vector(n * n, bound));
    }

    fockasym::RationalMatrix rational_matrix(std::size_t n, int bound = 10) {
        std::vector<Rational> e;
        for (std::size_t i = 0; i < n * n; ++i) {
            e.push_back(rational(bound));
        }
        return fockasym::RationalMatrix(n, n, std::move(e));
    }

    /// Random partition of weight exactly w.
    IntegerPartition partition(int w) {
        std::vector<int> parts;
        int left = w;
        int cap = w;
        while (left > 0) {
            const int p = uniform(1, std::min(left, cap));
            parts.push_back(p);
            left -= p;
            cap = p;
        }
        return IntegerPartition(parts);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace testsupport
