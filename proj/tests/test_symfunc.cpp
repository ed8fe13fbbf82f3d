#include <algorithm>
#include <functional>
#include <numeric>

#include "doctest.h"
#include "fockasym/errors.hpp"
#include "fockasym/symfunc.hpp"
#include "support.hpp"

using namespace fockasym;

namespace {

IntegerPartition P(std::vector<int> parts) { return IntegerPartition(std::move(parts)); }

std::vector<Rational> R(std::initializer_list<std::int64_t> xs) {
    std::vector<Rational> v;
    for (auto x : xs) {
        v.emplace_back(x);
    }
    return v;
}

std::vector<Rational> as_rationals(const Signature& s) {
    std::vector<Rational> v;
    for (auto e : s.entries()) {
        v.emplace_back(e);
    }
    return v;
}

// Fill the diagram box by box in reading order with entries 1..N. Semistandard:
// rows weakly increase, columns strictly increase. Reverse: both directions flipped.
template <class T>
T brute_tableau_sum(const IntegerPartition& mu, int N, bool reverse, const std::function<T(int, int)>& weight) {
    std::vector<std::pair<int, int>> boxes;
    for (std::size_t i = 0; i < mu.length(); ++i) {
        for (int j = 0; j < mu[i]; ++j) {
            boxes.emplace_back(static_cast<int>(i), j);
        }
    }
    std::vector<std::vector<int>> fill(mu.length(), std::vector<int>(static_cast<std::size_t>(mu[0]), 0));
    T total(0);
    std::function<void(std::size_t, T)> rec = [&](std::size_t b, T acc) {
        if (b == boxes.size()) {
            total += acc;
            return;
        }
        const auto [i, j] = boxes[b];
        for (int k = 1; k <= N; ++k) {
            if (j > 0) {
                const int left = fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
                if (reverse ? k > left : k < left) {
                    continue;
                }
            }
            if (i > 0) {
                const int up = fill[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
                if (reverse ? k >= up : k <= up) {
                    continue;
                }
            }
            fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
            rec(b + 1, acc * weight(k, j - i));
        }
    };
    rec(0, T(1));
    return total;
}

// h_k(z) by summing all monomials of degree k
GaussianRational complete_homogeneous(int k, const std::vector<GaussianRational>& z) {
    std::function<GaussianRational(int, std::size_t)> rec = [&](int left, std::size_t from) -> GaussianRational {
        if (left == 0) {
            return GaussianRational(1);
        }
        GaussianRational s(0);
        for (std::size_t i = from; i < z.size(); ++i) {
            s += z[i] * rec(left - 1, i);
        }
        return s;
    };
    return k < 0 ? GaussianRational(0) : rec(k, 0);
}

std::vector<Rational> distinct_points(testsupport::Gen& g, std::size_t n) {
    std::vector<Rational> v;
    while (v.size() < n) {
        const Rational x = g.rational(8);
        if (std::find(v.begin(), v.end(), x) == v.end()) {
            v.push_back(x);
        }
    }
    return v;
}

} // namespace

TEST_CASE("parameter sequences") {
    CHECK(ParameterSequence::all_zero()(7) == Rational(0));
    CHECK(ParameterSequence::shifted_convention()(1) == Rational(0));
    CHECK(ParameterSequence::shifted_convention()(4) == Rational(-3));
    const auto geo = ParameterSequence::geometric_q(Rational(1, 4), -3);
    CHECK(geo(1) == Rational(-16));
    CHECK(geo(3) == Rational(-1));
    CHECK(geo(4) == Rational(-1, 4));
    CHECK_THROWS_AS(ParameterSequence::geometric_q(Rational(0), 0), ParameterError);
    CHECK(factorial_power(Rational(5), ParameterSequence::shifted_convention(), 3) == Rational(60));
}

TEST_CASE("schur_eval examples") {
    const std::vector<GaussianRational> z{GaussianRational(Rational(2), Rational(1)), GaussianRational(5)};
    CHECK(schur_eval(Signature({1, 0}), z) == z[0] + z[1]);
    CHECK(schur_eval(Signature({1, 1}), z) == z[0] * z[1]);
    const std::vector<GaussianRational> w{GaussianRational(2), GaussianRational(3)};
    CHECK(schur_eval(Signature({2, 0}), w) == GaussianRational(19));
    const std::vector<GaussianRational> same{GaussianRational(2), GaussianRational(2)};
    CHECK_THROWS_AS(schur_eval(Signature({1, 0}), same), DegenerateError);
    CHECK_THROWS_AS(schur_eval(Signature({1, 0}), std::vector<GaussianRational>{1}), ShapeError);
}

TEST_CASE("schur_eval matches a brute-force tableau sum") {
    testsupport::Gen g(53);
    for (int trial = 0; trial < 40; ++trial) {
        const int N = g.uniform(1, 3);
        const IntegerPartition mu = g.partition(g.uniform(0, 4));
        if (static_cast<int>(mu.length()) > N) {
            continue;
        }
        std::vector<GaussianRational> z;
        while (static_cast<int>(z.size()) < N) {
            const GaussianRational c = g.gaussian(5);
            if (std::find(z.begin(), z.end(), c) == z.end()) {
                z.push_back(c);
            }
        }
        const auto sig = Signature::from_partition(mu, static_cast<std::size_t>(N));
        const GaussianRational brute = brute_tableau_sum<GaussianRational>(
            mu, N, false, [&](int k, int) { return z[static_cast<std::size_t>(k - 1)]; });
        CHECK(schur_eval(sig, z) == brute);
    }
}

TEST_CASE("Laurent signatures factor out a power of the determinant") {
    const std::vector<GaussianRational> z{GaussianRational(2), GaussianRational(Rational(1, 3))};
    const GaussianRational base = schur_eval(Signature({3, 1}), z);
    const GaussianRational shifted = schur_eval(Signature({1, -1}), z);
    CHECK(shifted == base / (z[0] * z[1] * z[0] * z[1]));
    CHECK(schur_eval(Signature({-1, -1}), z) == GaussianRational(1) / (z[0] * z[1]));
    const std::vector<GaussianRational> zero{GaussianRational(0), GaussianRational(1)};
    CHECK_THROWS_AS(schur_eval(Signature({0, -1}), zero), DegenerateError);
}

TEST_CASE("Jacobi-Trudi reproduces schur_eval") {
    testsupport::Gen g(59);
    for (int trial = 0; trial < 30; ++trial) {
        const IntegerPartition mu = g.partition(g.uniform(1, 5));
        const std::size_t N = mu.length() + static_cast<std::size_t>(g.uniform(0, 1));
        std::vector<Rational> x = distinct_points(g, N);
        std::vector<GaussianRational> z(x.begin(), x.end());
        std::vector<Rational> h;
        for (int k = 0; k <= mu[0] + static_cast<int>(mu.length()); ++k) {
            h.push_back(complete_homogeneous(k, z).re());
        }
        CHECK(GaussianRational(jacobi_trudi_det(mu, h)) == schur_eval(Signature::from_partition(mu, N), z));
    }
}

TEST_CASE("Jacobi-Trudi examples") {
    const auto h = R({1, 3, 5, 7});
    CHECK(jacobi_trudi_det(P({2}), h) == Rational(5));
    CHECK(jacobi_trudi_det(P({1, 1}), h) == Rational(9 - 5));
    CHECK(jacobi_trudi_det(P({2, 1}), R({1, 1, 1, 1})) == Rational(0));
    CHECK(jacobi_trudi_det(P({}), h) == Rational(1));
    CHECK_THROWS_AS(jacobi_trudi_det(P({3, 1}), h), BoundError);
}

TEST_CASE("Weyl dimension") {
    CHECK(schur_dimension_UN(Signature::zero(4), 4) == Rational(1));
    for (std::size_t N = 1; N <= 6; ++N) {
        CHECK(schur_dimension_UN(Signature::from_partition(P({1}), N), N) == Rational(static_cast<std::int64_t>(N)));
    }
    CHECK(schur_dimension_UN(Signature({2, 0}), 2) == Rational(3));
    CHECK(schur_dimension_UN(Signature({1, 0, -1}), 3) == Rational(8));
    // dimension = number of semistandard tableaux with entries <= N
    for (int N = 1; N <= 3; ++N) {
        for (int w = 0; w <= 4; ++w) {
            for (const auto& mu : partitions_of(w)) {
                if (static_cast<int>(mu.length()) > N) {
                    continue;
                }
                const Rational count =
                    brute_tableau_sum<Rational>(mu, N, false, [](int, int) { return Rational(1); });
                CHECK(schur_dimension_UN(Signature::from_partition(mu, static_cast<std::size_t>(N)),
                                         static_cast<std::size_t>(N)) == count);
            }
        }
    }
}

TEST_CASE("shifted Schur examples") {
    CHECK(shifted_schur_eval(P({}), R({4, 2})) == Rational(1));
    CHECK(shifted_schur_eval(P({2}), R({1, 0})) == Rational(0));
    CHECK(shifted_schur_eval(P({1}), R({5, 2, -1})) == Rational(6));
    CHECK(shifted_schur_eval(P({1, 1}), R({3, 2})) == Rational((3 + 1) * 2));
    for (std::int64_t N = 1; N <= 30; ++N) {
        std::vector<Rational> x(static_cast<std::size_t>(N), Rational(0));
        x[0] = Rational(N);
        CHECK(shifted_schur_eval(P({1}), x) / Rational(N) == Rational(1));
    }
    CHECK_THROWS_AS(shifted_schur_eval(P({1, 1, 1}), R({3, 2})), InputError);
}

TEST_CASE("shifted Schur determinant agrees with reverse tableaux") {
    testsupport::Gen g(61);
    for (int trial = 0; trial < 60; ++trial) {
        const IntegerPartition mu = g.partition(g.uniform(0, 5));
        const std::size_t N = std::max<std::size_t>(mu.length(), 1) + static_cast<std::size_t>(g.uniform(0, 2));
        std::vector<Rational> x;
        for (std::size_t i = 0; i < N; ++i) {
            x.push_back(g.rational(6));
        }
        std::vector<Rational> y(N);
        bool distinct = true;
        for (std::size_t i = 0; i < N; ++i) {
            y[i] = x[i] + Rational(static_cast<std::int64_t>(N - 1 - i));
            for (std::size_t j = 0; j < i; ++j) {
                distinct = distinct && y[i] != y[j];
            }
        }
        if (!distinct) {
            continue;
        }
        const Rational det = shifted_schur_eval(mu, x);
        CHECK(det == shifted_schur_tableau(mu, x));
        if (N <= 3 && mu.weight() <= 4) {
            const Rational brute = brute_tableau_sum<Rational>(
                mu, static_cast<int>(N), true,
                [&](int k, int c) { return x[static_cast<std::size_t>(k - 1)] - Rational(c); });
            CHECK(det == brute);
        }
    }
}

TEST_CASE("shifted Schur is symmetric in the shifted variables") {
    testsupport::Gen g(67);
    for (int trial = 0; trial < 50; ++trial) {
        const IntegerPartition mu = g.partition(g.uniform(0, 4));
        const std::size_t N = std::max<std::size_t>(mu.length(), 2) + static_cast<std::size_t>(g.uniform(0, 2));
        std::vector<std::int64_t> lam;
        int top = g.uniform(0, 6);
        for (std::size_t i = 0; i < N; ++i) {
            top = g.uniform(0, top);
            lam.push_back(top);
        }
        std::vector<std::size_t> sigma(N);
        std::iota(sigma.begin(), sigma.end(), 0);
        std::shuffle(sigma.begin(), sigma.end(), g.engine());
        // x_i -> x_{σ(i)} - σ(i) + i permutes the shifted points x_i + N - i
        std::vector<Rational> x(N);
        std::vector<Rational> permuted(N);
        for (std::size_t i = 0; i < N; ++i) {
            x[i] = Rational(lam[i]);
        }
        for (std::size_t i = 0; i < N; ++i) {
            permuted[i] = x[sigma[i]] + Rational(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(sigma[i]));
        }
        CHECK(shifted_schur_eval(mu, x) == shifted_schur_eval(mu, permuted));
    }
}

TEST_CASE("shifted Schur stability") {
    testsupport::Gen g(71);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t N = static_cast<std::size_t>(g.uniform(1, 6));
        const IntegerPartition lam = g.partition(g.uniform(0, 8));
        if (lam.length() > N) {
            continue;
        }
        const IntegerPartition mu = g.partition(g.uniform(0, 4));
        if (mu.length() > N) {
            continue;
        }
        std::vector<Rational> x = as_rationals(Signature::from_partition(lam, N));
        const Rational base = shifted_schur_eval(mu, x);
        x.emplace_back(0);
        CHECK(shifted_schur_eval(mu, x) == base);
        CHECK(shifted_schur_tableau(mu, x) == base);
    }
}

TEST_CASE("shifted Schur vanishes off the containment order") {
    for (int wm = 0; wm <= 6; ++wm) {
        for (const auto& mu : partitions_of(wm)) {
            for (int wl = 0; wl <= 6; ++wl) {
                for (const auto& lam : partitions_of(wl)) {
                    const std::size_t N = std::max<std::size_t>({mu.length(), lam.length(), 1});
                    const auto x = as_rationals(Signature::from_partition(lam, N));
                    const Rational v = shifted_schur_eval(mu, x);
                    if (!mu.contained_in(lam)) {
                        CHECK(v == Rational(0));
                    } else {
                        CHECK(v != Rational(0));
                    }
                }
            }
        }
    }
}

TEST_CASE("shifted Schur uses tableaux for long inputs") {
    std::vector<Rational> x(60, Rational(1));
    x[0] = Rational(3);
    x[1] = Rational(2);
    const Rational v = shifted_schur_eval(P({2, 1}), x);
    CHECK(v == shifted_schur_tableau(P({2, 1}), x));
    CHECK(v != Rational(0));
}

TEST_CASE("factorial Schur with zero parameters is the ordinary Schur polynomial") {
    testsupport::Gen g(73);
    for (int trial = 0; trial < 100; ++trial) {
        const IntegerPartition mu = g.partition(g.uniform(0, 5));
        const std::size_t N = std::max<std::size_t>(mu.length(), 1) + static_cast<std::size_t>(g.uniform(0, 2));
        const auto x = distinct_points(g, N);
        const std::vector<GaussianRational> z(x.begin(), x.end());
        const Rational f = factorial_schur_eval(mu, x, ParameterSequence::all_zero());
        CHECK(GaussianRational(f) == schur_eval(Signature::from_partition(mu, N), z));
    }
}

TEST_CASE("factorial Schur with shifted parameters at shifted points is the shifted Schur polynomial") {
    testsupport::Gen g(79);
    for (int trial = 0; trial < 60; ++trial) {
        const IntegerPartition mu = g.partition(g.uniform(0, 5));
        const std::size_t N = std::max<std::size_t>(mu.length(), 1) + static_cast<std::size_t>(g.uniform(0, 2));
        const IntegerPartition lam = g.partition(g.uniform(0, 7));
        if (lam.length() > N) {
            continue;
        }
        const auto x = as_rationals(Signature::from_partition(lam, N));
        std::vector<Rational> y(N);
        for (std::size_t i = 0; i < N; ++i) {
            y[i] = x[i] + Rational(static_cast<std::int64_t>(N - 1 - i));
        }
        CHECK(factorial_schur_eval(mu, y, ParameterSequence::shifted_convention()) == shifted_schur_eval(mu, x));
    }
}

TEST_CASE("factorial Schur determinant agrees with tableaux") {
    testsupport::Gen g(83);
    const std::vector<ParameterSequence> params{ParameterSequence::all_zero(), ParameterSequence::shifted_convention(),
                                                ParameterSequence::geometric_q(Rational(1, 4), -3),
                                                ParameterSequence::geometric_q(Rational(2, 3), 1)};
    for (int trial = 0; trial < 80; ++trial) {
        const IntegerPartition mu = g.partition(g.uniform(0, 5));
        const std::size_t N = std::max<std::size_t>(mu.length(), 1) + static_cast<std::size_t>(g.uniform(0, 2));
        const auto x = distinct_points(g, N);
        const auto& a = params[static_cast<std::size_t>(g.uniform(0, 3))];
        const Rational det = factorial_schur_eval(mu, x, a);
        CHECK(det == factorial_schur_tableau(mu, x, a));
        if (N <= 3 && mu.weight() <= 4) {
            const Rational brute = brute_tableau_sum<Rational>(mu, static_cast<int>(N), false, [&](int k, int c) {
                return x[static_cast<std::size_t>(k - 1)] + a(k + c);
            });
            CHECK(det == brute);
        }
    }
}

TEST_CASE("factorial Schur examples and degeneracy") {
    const auto a = ParameterSequence::geometric_q(Rational(1, 9), -1);
    CHECK(factorial_schur_eval(P({1}), R({7}), a) == Rational(6));
    CHECK_THROWS_AS(factorial_schur_eval(P({1}), R({2, 2}), a), DegenerateError);
    CHECK(factorial_schur_tableau(P({1, 1}), R({2, 2}), ParameterSequence::all_zero()) == Rational(4));
}

TEST_CASE("q-interpolation Schur") {
    const Rational q2(1, 4);
    CHECK(q_interp_schur_eval(P({}), R({3, 1}), q2) == Rational(1));
    CHECK(q_interp_schur_eval(P({1}), R({5}), q2) == Rational(4));
    // points q2^{λ_i - i + 1} for λ = (1, 0): (1/4, 1/4^{-1}) -> μ = (2) not inside λ
    const std::vector<Rational> pts{pow(q2, 1), pow(q2, -1)};
    CHECK(q_interp_schur_eval(P({2}), pts, q2) == Rational(0));
    CHECK(q_interp_schur_eval(P({1}), pts, q2) != Rational(0));
    CHECK_THROWS_AS(q_interp_schur_eval(P({1}), R({5}), Rational(1)), ParameterError);
    CHECK_THROWS_AS(q_interp_schur_eval(P({1}), R({5}), Rational(0)), ParameterError);
}

TEST_CASE("q-interpolation Schur vanishes off the containment order") {
    const Rational q2(1, 9);
    for (std::size_t N = 1; N <= 3; ++N) {
        for (int wl = 0; wl <= 4; ++wl) {
            for (const auto& lam : partitions_of(wl)) {
                if (lam.length() > N) {
                    continue;
                }
                std::vector<Rational> pts;
                for (std::size_t i = 0; i < N; ++i) {
                    pts.push_back(pow(q2, lam[i] - static_cast<std::int64_t>(i)));
                }
                for (int wm = 0; wm <= 4; ++wm) {
                    for (const auto& mu : partitions_of(wm)) {
                        if (mu.length() > N) {
                            continue;
                        }
                        const Rational v = q_interp_schur_eval(mu, pts, q2);
                        CHECK((v == Rational(0)) == !mu.contained_in(lam));
                    }
                }
            }
        }
    }
}

TEST_CASE("q-interpolation Schur uses tableaux for long inputs") {
    const Rational q2(1, 2);
    std::vector<Rational> pts;
    for (std::int64_t i = 0; i < 50; ++i) {
        pts.push_back(pow(q2, (i < 3 ? 2 : 1) - i));
    }
    const auto a = ParameterSequence::geometric_q(q2, -50);
    for (const auto& mu : {P({1}), P({2, 1}), P({1, 1, 1})}) {
        CHECK(q_interp_schur_eval(mu, pts, q2) == factorial_schur_eval(mu, pts, a));
    }
    // trailing points equal to -a_1 drop out: the q-analogue of stability
    std::vector<Rational> zeros;
    for (std::int64_t i = 0; i < 60; ++i) {
        zeros.push_back(pow(q2, -i));
    }
    CHECK(q_interp_schur_eval(P({2, 1}), zeros, q2) == Rational(0));
    auto repeated = zeros;
    repeated[1] = repeated[0];
    CHECK_THROWS_AS(q_interp_schur_eval(P({1}), repeated, q2), DegenerateError);
}
