#include "fockasym/fock.hpp"

#include <bit>
#include <functional>
#include <string>

#include "fockasym/combinatorics.hpp"
#include "fockasym/errors.hpp"

namespace fockasym {

AffineProcessSpec AffineProcessSpec::scalar(GaussianRational c, GaussianRational drift) {
    return {std::move(c), std::move(drift)};
}

AffineProcessSpec AffineProcessSpec::matrix(ExactMatrix m, GaussianRational drift) {
    if (!m.is_square() || m.rows() == 0) {
        throw ShapeError("process operator must be a nonempty square matrix");
    }
    return {std::move(m), std::move(drift)};
}

AffineProcessSpec AffineProcessSpec::without_drift() const {
    AffineProcessSpec copy = *this;
    copy.drift_ = GaussianRational(0);
    return copy;
}

std::vector<GaussianRational> AffineProcessSpec::apply(std::span<const GaussianRational> v) const {
    if (is_scalar()) {
        std::vector<GaussianRational> out(v.begin(), v.end());
        for (auto& x : out) {
            x *= scalar_value();
        }
        return out;
    }
    return matrix_value().apply(v);
}

CoherentState::CoherentState(std::vector<GaussianRational> v, bool unit) : v_(std::move(v)), unit_(unit) {
    if (v_.empty()) {
        throw InputError("coherent state needs a nonempty vector");
    }
    if (unit_ && norm2() != Rational(1)) {
        throw InputError("state flagged unit has squared norm " + norm2().str());
    }
}

Rational CoherentState::norm2() const {
    Rational s(0);
    for (const auto& x : v_) {
        s += x.norm2();
    }
    return s;
}

GaussianRational inner(std::span<const GaussianRational> v, std::span<const GaussianRational> w) {
    if (v.size() != w.size()) {
        throw ShapeError("inner product of vectors of different dimension");
    }
    GaussianRational s(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += v[i] * w[i].conj();
    }
    return s;
}

namespace {

void check_common_dimension(std::span<const AffineProcessSpec> ops, std::size_t dim) {
    for (const auto& op : ops) {
        if (!op.is_scalar() && op.matrix_value().rows() != dim) {
            throw ShapeError("operator of dimension " + std::to_string(op.matrix_value().rows()) +
                             " on a state of dimension " + std::to_string(dim));
        }
    }
}

void check_moment_inputs(std::span<const AffineProcessSpec> ops, const CoherentState& psi, const CoherentState& phi,
                         const Rational& t) {
    if (t.sign() < 0) {
        throw InputError("negative time " + t.str());
    }
    if (psi.dim() != phi.dim()) {
        throw ShapeError("states of different dimension");
    }
    check_common_dimension(ops, psi.dim());
    for (const auto& op : ops) {
        if (!op.drift().is_zero()) {
            throw InputError("pure conservation moments need zero drift; use affine_moment");
        }
    }
}

// t⟨H_S ψ, φ⟩ for every subset S of factors, H_S the ascending-order product
// (the highest index acts first).
std::vector<GaussianRational> subset_values(std::span<const AffineProcessSpec> ops, const CoherentState& psi,
                                            const CoherentState& phi, const Rational& t) {
    const std::size_t n = ops.size();
    std::vector<GaussianRational> out(std::size_t{1} << n);
    for (std::size_t mask = 1; mask < out.size(); ++mask) {
        std::vector<GaussianRational> v = psi.vector();
        for (std::size_t k = n; k-- > 0;) {
            if ((mask >> k) & 1U) {
                v = ops[k].apply(v);
            }
        }
        out[mask] = GaussianRational(t) * inner(v, phi.vector());
    }
    return out;
}

} // namespace

GaussianRational joint_moment_coherent(std::span<const AffineProcessSpec> ops, const CoherentState& psi,
                                       const CoherentState& phi, const Rational& t) {
    check_moment_inputs(ops, psi, phi, t);
    const int n = static_cast<int>(ops.size());
    if (n == 0) {
        return GaussianRational(1);
    }
    const auto block = subset_values(ops, psi, phi, t);
    GaussianRational total(0);
    for (const auto& pi : enumerate_set_partitions(n)) {
        GaussianRational term(1);
        for (const auto& b : pi.blocks) {
            std::size_t mask = 0;
            for (int i : b) {
                mask |= std::size_t{1} << (i - 1);
            }
            term *= block[mask];
            if (term.is_zero()) {
                break;
            }
        }
        total += term;
    }
    return total;
}

GaussianRational joint_moment_oracle(std::span<const AffineProcessSpec> ops, const CoherentState& psi,
                                     const CoherentState& phi, const Rational& t) {
    check_moment_inputs(ops, psi, phi, t);
    const std::size_t n = ops.size();
    if (n > kMaxOracleFactors) {
        throw BoundError("nilpotent oracle supports at most " + std::to_string(kMaxOracleFactors) + " factors");
    }
    const std::size_t full = (std::size_t{1} << n) - 1;
    using Element = std::vector<GaussianRational>; // coefficient of u^S for each subset S

    const auto mul = [full](const Element& a, const Element& b) {
        Element c(full + 1);
        for (std::size_t s = 0; s <= full; ++s) {
            // enumerate submasks T of s
            for (std::size_t tm = s;; tm = (tm - 1) & s) {
                if (!a[tm].is_zero() && !b[s ^ tm].is_zero()) {
                    c[s] += a[tm] * b[s ^ tm];
                }
                if (tm == 0) {
                    break;
                }
            }
        }
        return c;
    };

    // g(u) - g(0): expanding ∏(1 + i u_j H_j) gives coefficient i^{|S|} t⟨H_S ψ, φ⟩ on u^S
    const auto block = subset_values(ops, psi, phi, t);
    Element g(full + 1);
    for (std::size_t s = 1; s <= full; ++s) {
        g[s] = pow(GaussianRational::i(), std::popcount(s)) * block[s];
    }
    // exp(g) = Σ_{k<=n} g^k / k!, since g^{n+1} = 0
    Element result(full + 1);
    result[0] = GaussianRational(1);
    Element power = result;
    for (std::size_t k = 1; k <= n; ++k) {
        power = mul(power, g);
        const GaussianRational inv_fact(Rational(BigInt(1), factorial(static_cast<int>(k))));
        for (std::size_t s = 0; s <= full; ++s) {
            result[s] += inv_fact * power[s];
        }
    }
    return pow(-GaussianRational::i(), static_cast<std::int64_t>(n)) * result[full];
}

GaussianRational affine_moment(std::span<const AffineProcessSpec> ops, const CoherentState& psi, const Rational& t) {
    const std::size_t n = ops.size();
    if (n >= 8 * sizeof(std::size_t)) {
        throw BoundError("too many factors");
    }
    GaussianRational total(0);
    // choose the factors that contribute their drift; the rest stay conservation operators
    for (std::size_t drift_mask = 0; drift_mask < (std::size_t{1} << n); ++drift_mask) {
        GaussianRational coeff(1);
        std::vector<AffineProcessSpec> rest;
        for (std::size_t k = 0; k < n; ++k) {
            if ((drift_mask >> k) & 1U) {
                coeff *= ops[k].drift() * GaussianRational(t);
            } else {
                rest.push_back(ops[k].without_drift());
            }
        }
        if (coeff.is_zero()) {
            continue;
        }
        total += coeff * joint_moment_coherent(rest, psi, psi, t);
    }
    return total;
}

GaussianRational interval_joint_moment(const IntervalAssignment& assignment, std::span<const AffineProcessSpec> specs,
                                       const CoherentState& psi) {
    if (!psi.is_unit()) {
        throw InputError("interval moments need a unit state");
    }
    const auto& iv = assignment.intervals;
    for (std::size_t k = 0; k < iv.size(); ++k) {
        if (!(iv[k].s < iv[k].t)) {
            throw InputError("interval " + std::to_string(k) + " is empty or reversed");
        }
        if (k > 0 && iv[k].s < iv[k - 1].t) {
            throw InputError("intervals must be ordered and disjoint");
        }
    }
    std::vector<std::vector<AffineProcessSpec>> per_interval(iv.size());
    for (const auto& [proc, idx] : assignment.factors) {
        if (proc >= specs.size() || idx >= iv.size()) {
            throw InputError("factor refers to a missing process or interval");
        }
        per_interval[idx].push_back(specs[proc]);
    }
    GaussianRational total(1);
    for (std::size_t k = 0; k < iv.size(); ++k) {
        if (per_interval[k].empty()) {
            continue;
        }
        total *= affine_moment(per_interval[k], psi, iv[k].t - iv[k].s);
    }
    return total;
}

MeanVariance mean_variance(const AffineProcessSpec& spec, const CoherentState& psi, const Rational& t) {
    if (!psi.is_unit()) {
        throw InputError("mean and variance need a unit state");
    }
    if (t.sign() < 0) {
        throw InputError("negative time " + t.str());
    }
    if (!spec.drift().is_zero()) {
        throw InputError("mean_variance expects a pure conservation process");
    }
    check_common_dimension(std::span(&spec, 1), psi.dim());
    const auto hpsi = spec.apply(psi.vector());
    Rational norm(0);
    for (const auto& x : hpsi) {
        norm += x.norm2();
    }
    return {GaussianRational(t) * inner(hpsi, psi.vector()), t * norm};
}

Rational touchard(int m, const Rational& t) {
    Rational s(0);
    for (int k = 0; k <= m; ++k) {
        s += Rational(stirling2(m, k)) * pow(t, k);
    }
    return s;
}

GaussianRational compound_poisson_moments(std::span<const GaussianRational> jumps, std::span<const Rational> timeGrid,
                                          std::span<const MonomialFactor> monomialOrder) {
    for (std::size_t k = 0; k < timeGrid.size(); ++k) {
        if (timeGrid[k].sign() < 0 || (k > 0 && !(timeGrid[k - 1] < timeGrid[k]))) {
            throw InputError("time grid must be nonnegative and strictly increasing");
        }
    }
    GaussianRational coeff(1);
    for (const auto& f : monomialOrder) {
        if (f.process >= jumps.size() || f.time >= timeGrid.size()) {
            throw InputError("monomial refers to a missing process or grid time");
        }
        coeff *= jumps[f.process];
    }
    // N_{t_k} = Δ_0 + ... + Δ_k with independent Δ_l ~ Poisson(t_l - t_{l-1});
    // expand each factor over the increments it contains
    const std::size_t m = monomialOrder.size();
    std::vector<int> counts(timeGrid.size(), 0);
    Rational moment(0);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == m) {
            Rational term(1);
            for (std::size_t l = 0; l < counts.size(); ++l) {
                if (counts[l] > 0) {
                    const Rational len = timeGrid[l] - (l == 0 ? Rational(0) : timeGrid[l - 1]);
                    term *= touchard(counts[l], len);
                }
            }
            moment += term;
            return;
        }
        for (std::size_t l = 0; l <= monomialOrder[j].time; ++l) {
            ++counts[l];
            rec(j + 1);
            --counts[l];
        }
    };
    rec(0);
    return coeff * GaussianRational(moment);
}

} // namespace fockasym
