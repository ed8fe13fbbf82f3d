#include "fockasym/characters.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fockasym/errors.hpp"
#include "fockasym/symfunc.hpp"

namespace fockasym {
namespace {

void require_decreasing_nonnegative(const std::vector<Rational>& v, const char* name) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].sign() < 0) {
            throw ParameterError(std::string(name) + " has a negative entry");
        }
        if (i > 0 && v[i] > v[i - 1]) {
            throw ParameterError(std::string(name) + " must be weakly decreasing");
        }
    }
}

Rational power_sum(const std::vector<Rational>& v, int k) {
    Rational s(0);
    for (const auto& x : v) {
        s += pow(x, k);
    }
    return s;
}

} // namespace

void OmegaParams::validate() const {
    require_decreasing_nonnegative(alphaPlus, "alphaPlus");
    require_decreasing_nonnegative(alphaMinus, "alphaMinus");
    require_decreasing_nonnegative(betaPlus, "betaPlus");
    require_decreasing_nonnegative(betaMinus, "betaMinus");
    if (gammaPlus.sign() < 0 || gammaMinus.sign() < 0) {
        throw ParameterError("gamma parameters must be nonnegative");
    }
    const Rational b1 = betaPlus.empty() ? Rational(0) : betaPlus.front();
    const Rational b2 = betaMinus.empty() ? Rational(0) : betaMinus.front();
    if (b1 + b2 > Rational(1)) {
        throw ParameterError("betaPlus[0] + betaMinus[0] must not exceed 1");
    }
}

void ThomaParams::validate() const {
    require_decreasing_nonnegative(alpha, "alpha");
    require_decreasing_nonnegative(beta, "beta");
    Rational total(0);
    for (const auto& x : alpha) {
        total += x;
    }
    for (const auto& x : beta) {
        total += x;
    }
    if (total > Rational(1)) {
        throw ParameterError("Thoma parameters must satisfy sum(alpha) + sum(beta) <= 1");
    }
}

void NuSequence::validate() const {
    for (std::size_t i = 1; i < prefix.size(); ++i) {
        if (prefix[i] < prefix[i - 1]) {
            throw ParameterError("nu prefix must be weakly increasing");
        }
    }
    if (!prefix.empty() && tail < prefix.back()) {
        throw ParameterError("nu tail must be at least the last prefix entry");
    }
}

std::string NuSequence::str() const {
    std::ostringstream os;
    os << "prefix=[";
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        os << (i ? "," : "") << prefix[i];
    }
    os << "];tail=" << tail;
    return os.str();
}

TruncatedSeries phi_omega_h_series(const OmegaParams& omega, std::size_t K) {
    omega.validate();
    // z = 1 + t, so z - 1 = t and z^{-1} - 1 = u = -t + t^2 - ...
    std::vector<Rational> uc(K + 1);
    for (std::size_t k = 1; k <= K; ++k) {
        uc[k] = Rational(k % 2 == 0 ? 1 : -1);
    }
    const TruncatedSeries t = TruncatedSeries::linear(K, Rational(0), Rational(1));
    const TruncatedSeries u(K, uc);
    const TruncatedSeries one = TruncatedSeries::constant(K, Rational(1));

    TruncatedSeries num = series_exp(omega.gammaPlus * t + omega.gammaMinus * u);
    TruncatedSeries den = one;
    for (const auto& b : omega.betaPlus) {
        num *= one + b * t;
    }
    for (const auto& b : omega.betaMinus) {
        num *= one + b * u;
    }
    for (const auto& a : omega.alphaPlus) {
        den *= one - a * t;
    }
    for (const auto& a : omega.alphaMinus) {
        den *= one - a * u;
    }
    return series_quotient(num, den);
}

Rational s_mu_omega(const IntegerPartition& mu, const OmegaParams& omega) {
    if (mu.empty()) {
        omega.validate();
        return Rational(1);
    }
    const TruncatedSeries h = phi_omega_h_series(omega, static_cast<std::size_t>(mu[0]) + mu.length());
    return jacobi_trudi_det(mu, h.coeffs());
}

Rational thoma_character_value(const ThomaParams& omega, const IntegerPartition& rho) {
    omega.validate();
    Rational value(1);
    for (int k : rho.parts()) {
        if (k == 1) {
            throw DomainError("cycle type " + rho.str() + " has a fixed point; use a partition without parts equal to 1");
        }
        const Rational b = power_sum(omega.beta, k);
        value *= power_sum(omega.alpha, k) + (k % 2 == 0 ? -b : b);
    }
    return value;
}

namespace {

// Shapes are encoded by beta-sets {λ_i + ℓ - i}; a rim hook of length r moves one bead down by r.
class MnEvaluator {
public:
    explicit MnEvaluator(std::vector<int> cycles) : cycles_(std::move(cycles)) {
        std::sort(cycles_.begin(), cycles_.end(), std::greater<>());
        while (!cycles_.empty() && cycles_.back() == 1) {
            cycles_.pop_back();
        }
    }

    BigInt eval(const IntegerPartition& shape, std::size_t next) {
        if (next == cycles_.size()) {
            return hook_dimension(shape, shape.weight());
        }
        const auto key = std::make_pair(shape, next);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        const int r = cycles_[next];
        const std::size_t len = shape.length();
        std::vector<int> beta(len);
        for (std::size_t i = 0; i < len; ++i) {
            beta[i] = shape[i] + static_cast<int>(len - 1 - i);
        }
        BigInt total = 0;
        for (std::size_t i = 0; i < len; ++i) {
            const int target = beta[i] - r;
            if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) {
                continue;
            }
            int between = 0;
            for (int b : beta) {
                if (b > target && b < beta[i]) {
                    ++between;
                }
            }
            std::vector<int> moved = beta;
            moved[i] = target;
            std::sort(moved.begin(), moved.end(), std::greater<>());
            std::vector<int> parts(len);
            for (std::size_t k = 0; k < len; ++k) {
                parts[k] = moved[k] - static_cast<int>(len - 1 - k);
            }
            const BigInt sub = eval(IntegerPartition(parts), next + 1);
            if (between % 2 == 0) {
                total += sub;
            } else {
                total -= sub;
            }
        }
        memo_.emplace(key, total);
        return total;
    }

private:
    std::vector<int> cycles_;
    std::map<std::pair<IntegerPartition, std::size_t>, BigInt> memo_;
};

} // namespace

BigInt mn_character(const IntegerPartition& lambda, const IntegerPartition& rho) {
    if (lambda.weight() != rho.weight()) {
        throw InputError("character of " + lambda.str() + " on cycle type " + rho.str() + ": weights differ");
    }
    // memo table is local to each call, so concurrent callers share nothing
    MnEvaluator ev(rho.parts());
    return ev.eval(lambda, 0);
}

Rational mn_normalized_character(const IntegerPartition& lambda, const IntegerPartition& rho) {
    const BigInt chi = mn_character(lambda, rho);
    return {chi, hook_dimension(lambda, lambda.weight())};
}

QBoundaryFactors q_boundary_factors(const NuSequence& nu) {
    nu.validate();
    const auto J = static_cast<std::int64_t>(nu.prefix.size());
    // from j = J+1 on the denominator exponents are T, T+1, ... and cancel against the numerator
    const std::int64_t T = nu.tail + J;
    std::vector<std::int64_t> num;
    std::vector<std::int64_t> den;
    for (std::int64_t e = 0; e < T; ++e) {
        num.push_back(e);
    }
    for (std::int64_t e = T; e < 0; ++e) {
        den.push_back(e);
    }
    for (std::int64_t j = 1; j <= J; ++j) {
        den.push_back(nu(static_cast<std::size_t>(j)) + j - 1);
    }
    std::sort(num.begin(), num.end());
    std::sort(den.begin(), den.end());
    QBoundaryFactors out;
    std::set_difference(num.begin(), num.end(), den.begin(), den.end(), std::back_inserter(out.numerator));
    std::set_difference(den.begin(), den.end(), num.begin(), num.end(), std::back_inserter(out.denominator));
    return out;
}

TruncatedSeries q_boundary_h_series(const NuSequence& nu, const Rational& q2, std::size_t K) {
    if (q2.sign() <= 0 || q2 >= Rational(1)) {
        throw ParameterError("q2 must lie in (0,1), got " + q2.str());
    }
    const QBoundaryFactors f = q_boundary_factors(nu);
    const TruncatedSeries one = TruncatedSeries::constant(K, Rational(1));
    TruncatedSeries num = one;
    TruncatedSeries den = one;
    for (auto e : f.numerator) {
        num *= TruncatedSeries::linear(K, Rational(1), -pow(q2, e));
    }
    for (auto e : f.denominator) {
        den *= TruncatedSeries::linear(K, Rational(1), -pow(q2, e));
    }
    return series_quotient(num, den);
}

Rational s_mu_omega_nu(const IntegerPartition& mu, const NuSequence& nu, const Rational& q2) {
    const std::size_t K = mu.empty() ? 0 : static_cast<std::size_t>(mu[0]) + mu.length();
    const TruncatedSeries h = q_boundary_h_series(nu, q2, K);
    return jacobi_trudi_det(mu, h.coeffs());
}

} // namespace fockasym
