#include "fockasym/symfunc.hpp"

#include <functional>
#include <map>
#include <vector>

#include "fockasym/errors.hpp"

namespace fockasym {

ParameterSequence ParameterSequence::geometric_q(Rational base, std::int64_t offset) {
    if (base.is_zero()) {
        throw ParameterError("geometric parameter base must be nonzero");
    }
    return ParameterSequence(Kind::GeometricQ, std::move(base), offset);
}

Rational ParameterSequence::operator()(std::int64_t j) const {
    switch (kind_) {
    case Kind::AllZero:
        return Rational(0);
    case Kind::ShiftedConvention:
        return Rational(1 - j);
    case Kind::GeometricQ:
        return -pow(base_, j + offset_);
    }
    return Rational(0);
}

std::string ParameterSequence::str() const {
    switch (kind_) {
    case Kind::AllZero:
        return "all-zero";
    case Kind::ShiftedConvention:
        return "shifted(a_j=1-j)";
    case Kind::GeometricQ:
        return "geometric(base=" + base_.str() + ",offset=" + std::to_string(offset_) + ")";
    }
    return {};
}

Rational factorial_power(const Rational& x, const ParameterSequence& a, int k) {
    Rational r(1);
    for (int j = 1; j <= k; ++j) {
        r *= x + a(j);
    }
    return r;
}

namespace {

template <class T>
T vandermonde(std::span<const T> y) {
    T v(1);
    for (std::size_t i = 0; i < y.size(); ++i) {
        for (std::size_t j = i + 1; j < y.size(); ++j) {
            v *= y[i] - y[j];
        }
    }
    return v;
}

// Sum over chains ∅ = κ_0 ⊂ κ_1 ⊂ ... ⊂ κ_L = μ of horizontal strips; the strip
// added at step s (1-based) gets letter letter_of(s) and each box weight(letter, content).
Rational strip_chain_sum(const IntegerPartition& mu, std::size_t steps,
                         const std::function<std::int64_t(std::size_t)>& letter_of,
                         const std::function<Rational(std::int64_t, int)>& weight) {
    const std::vector<IntegerPartition> states = subpartitions(mu);
    std::map<IntegerPartition, std::size_t> index;
    for (std::size_t k = 0; k < states.size(); ++k) {
        index.emplace(states[k], k);
    }

    struct Move {
        std::size_t from;
        std::size_t to;
        std::vector<int> contents;
    };
    std::vector<Move> moves;
    for (std::size_t from = 0; from < states.size(); ++from) {
        const IntegerPartition& nu = states[from];
        // κ_i ranges over [ν_i, min(μ_i, ν_{i-1})]
        std::vector<int> kappa(mu.length(), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t row) {
            if (row == mu.length()) {
                const IntegerPartition k(kappa);
                if (k == nu) {
                    return;
                }
                Move mv{from, index.at(k), {}};
                for (std::size_t i = 0; i < mu.length(); ++i) {
                    for (int c = nu[i]; c < kappa[i]; ++c) {
                        mv.contents.push_back(c - static_cast<int>(i));
                    }
                }
                moves.push_back(std::move(mv));
                return;
            }
            const int hi = row == 0 ? mu[0] : std::min(mu[row], nu[row - 1]);
            for (int v = nu[row]; v <= hi; ++v) {
                kappa[row] = v;
                rec(row + 1);
            }
        };
        rec(0);
    }

    std::vector<Rational> dp(states.size());
    dp[index.at(IntegerPartition())] = Rational(1);
    for (std::size_t s = 1; s <= steps; ++s) {
        const std::int64_t letter = letter_of(s);
        std::vector<Rational> next = dp; // empty strip
        for (const Move& mv : moves) {
            if (dp[mv.from].is_zero()) {
                continue;
            }
            Rational w = dp[mv.from];
            for (int c : mv.contents) {
                w *= weight(letter, c);
                if (w.is_zero()) {
                    break;
                }
            }
            next[mv.to] += w;
        }
        dp = std::move(next);
    }
    return dp[index.at(mu)];
}

constexpr std::size_t kDeterminantCutoff = 48;

} // namespace

GaussianRational schur_eval(const Signature& lambda, std::span<const GaussianRational> z) {
    const std::size_t N = lambda.N();
    if (z.size() != N) {
        throw ShapeError("schur_eval: " + std::to_string(z.size()) + " points for a signature of length " +
                         std::to_string(N));
    }
    const std::int64_t shift = lambda[N - 1];
    GaussianRational prefactor(1);
    if (shift != 0) {
        for (const auto& zi : z) {
            if (zi.is_zero() && shift < 0) {
                throw DegenerateError("schur_eval: zero point with a Laurent signature");
            }
            prefactor *= pow(zi, shift);
        }
    }
    const GaussianRational den = vandermonde(z);
    if (den.is_zero()) {
        throw DegenerateError("schur_eval: coincident evaluation points");
    }
    ExactMatrix num(N, N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            const std::int64_t e = lambda[j] - shift + static_cast<std::int64_t>(N - 1 - j);
            num(i, j) = pow(z[i], e);
        }
    }
    return prefactor * det_exact(num) / den;
}

Rational schur_dimension_UN(const Signature& lambda, std::size_t N) {
    if (lambda.N() != N) {
        throw ShapeError("schur_dimension_UN: signature length differs from N");
    }
    Rational r(1);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i + 1; j < N; ++j) {
            const auto gap = static_cast<std::int64_t>(j - i);
            r *= Rational(lambda[i] - lambda[j] + gap, gap);
        }
    }
    return r;
}

Rational shifted_schur_tableau(const IntegerPartition& mu, std::span<const Rational> x) {
    const std::size_t N = x.size();
    if (mu.length() > N) {
        return Rational(0);
    }
    return strip_chain_sum(
        mu, N, [N](std::size_t s) { return static_cast<std::int64_t>(N + 1 - s); },
        [&x](std::int64_t k, int c) { return x[static_cast<std::size_t>(k - 1)] - Rational(c); });
}

Rational shifted_schur_eval(const IntegerPartition& mu, std::span<const Rational> x) {
    if (mu.empty()) {
        return Rational(1);
    }
    if (mu.length() > x.size()) {
        throw InputError("shifted_schur_eval: " + mu.str() + " longer than the number of variables");
    }
    std::size_t N = x.size();
    while (N > mu.length() && x[N - 1].is_zero()) {
        --N;
    }
    const auto xs = x.first(N);
    if (N > kDeterminantCutoff) {
        return shifted_schur_tableau(mu, xs);
    }

    std::vector<Rational> y(N);
    for (std::size_t i = 0; i < N; ++i) {
        y[i] = xs[i] + Rational(static_cast<std::int64_t>(N - 1 - i));
    }
    // det[(y_i)^{↓N-j}] is the Vandermonde product in y
    const Rational den = vandermonde(std::span<const Rational>(y));
    if (den.is_zero()) {
        throw DegenerateError("shifted_schur_eval: coincident shifted points");
    }
    RationalMatrix num(N, N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            num(i, j) = falling_factorial(y[i], mu[j] + static_cast<int>(N - 1 - j));
        }
    }
    return det_exact(num) / den;
}

Rational factorial_schur_eval(const IntegerPartition& mu, std::span<const Rational> x,
                              const ParameterSequence& a) {
    const std::size_t N = x.size();
    if (mu.length() > N) {
        throw InputError("factorial_schur_eval: " + mu.str() + " longer than the number of variables");
    }
    if (N == 0) {
        return Rational(1);
    }
    // det[(x_i|a)^{N-j}] is the Vandermonde product in x for every parameter sequence
    const Rational den = vandermonde(x);
    if (den.is_zero()) {
        throw DegenerateError("factorial_schur_eval: coincident evaluation points");
    }
    RationalMatrix num(N, N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            num(i, j) = factorial_power(x[i], a, mu[j] + static_cast<int>(N - 1 - j));
        }
    }
    return det_exact(num) / den;
}

Rational factorial_schur_tableau(const IntegerPartition& mu, std::span<const Rational> x,
                                 const ParameterSequence& a) {
    const std::size_t N = x.size();
    if (mu.length() > N) {
        return Rational(0);
    }
    return strip_chain_sum(
        mu, N, [](std::size_t s) { return static_cast<std::int64_t>(s); },
        [&x, &a](std::int64_t k, int c) { return x[static_cast<std::size_t>(k - 1)] + a(k + c); });
}

Rational q_interp_schur_eval(const IntegerPartition& mu, std::span<const Rational> x, const Rational& q2) {
    if (q2.sign() <= 0 || q2 >= Rational(1)) {
        throw ParameterError("q2 must lie in (0,1), got " + q2.str());
    }
    const auto N = static_cast<std::int64_t>(x.size());
    const auto a = ParameterSequence::geometric_q(q2, -N);
    if (x.size() > kDeterminantCutoff) {
        if (mu.length() > x.size()) {
            throw InputError("q_interp_schur_eval: " + mu.str() + " longer than the number of variables");
        }
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (std::size_t j = i + 1; j < x.size(); ++j) {
                if (x[i] == x[j]) {
                    throw DegenerateError("q_interp_schur_eval: coincident points");
                }
            }
        }
        return factorial_schur_tableau(mu, x, a);
    }
    return factorial_schur_eval(mu, x, a);
}

Rational jacobi_trudi_det(const IntegerPartition& mu, std::span<const Rational> h) {
    const std::size_t n = mu.length();
    if (n == 0) {
        return Rational(1);
    }
    const std::size_t need = static_cast<std::size_t>(mu[0]) + n - 1;
    if (h.size() <= need) {
        throw BoundError("jacobi_trudi_det needs h_0..h_" + std::to_string(need) + ", got " +
                         std::to_string(h.size()) + " coefficients");
    }
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto k = static_cast<std::int64_t>(mu[i]) - static_cast<std::int64_t>(i) + static_cast<std::int64_t>(j);
            if (k >= 0) {
                m(i, j) = h[static_cast<std::size_t>(k)];
            }
        }
    }
    return det_exact(m);
}

} // namespace fockasym
