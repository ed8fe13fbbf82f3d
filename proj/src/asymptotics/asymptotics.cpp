#include "fockasym/asymptotics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <thread>

#include "fockasym/errors.hpp"
#include "fockasym/fock.hpp"
#include "fockasym/symfunc.hpp"

namespace fockasym {
namespace {

std::int64_t floor_of(const Rational& x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
    if (!q.fits_slong_p()) {
        throw BoundError("value " + x.str() + " too large for a diagram coordinate");
    }
    return q.get_si();
}

// ⌊√x⌋ for x >= 0, using ⌊√x⌋ = ⌊√⌊x⌋⌋
std::int64_t floor_sqrt(const Rational& x) {
    const BigInt f = floor_of(x);
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
    return r.get_si();
}

// Union of rows of lengths a_i, columns of heights b_j and an s × w rectangle.
std::vector<std::int64_t> union_diagram(const std::vector<std::int64_t>& rows, const std::vector<std::int64_t>& cols,
                                        std::int64_t s, std::int64_t w) {
    std::int64_t len = static_cast<std::int64_t>(rows.size());
    for (auto b : cols) {
        len = std::max(len, b);
    }
    if (w > 0) {
        len = std::max(len, s);
    }
    std::vector<std::int64_t> out(static_cast<std::size_t>(len), 0);
    for (std::int64_t k = 0; k < len; ++k) {
        std::int64_t v = k < static_cast<std::int64_t>(rows.size()) ? rows[static_cast<std::size_t>(k)] : 0;
        std::int64_t from_cols = 0;
        for (auto b : cols) {
            from_cols += b > k ? 1 : 0;
        }
        v = std::max(v, from_cols);
        if (k < s) {
            v = std::max(v, w);
        }
        out[static_cast<std::size_t>(k)] = v;
    }
    while (!out.empty() && out.back() == 0) {
        out.pop_back();
    }
    return out;
}

std::vector<std::int64_t> scaled_floors(const std::vector<Rational>& v, std::int64_t N) {
    std::vector<std::int64_t> out;
    for (const auto& x : v) {
        out.push_back(floor_of(x * Rational(N)));
    }
    return out;
}

std::vector<std::int64_t> vk_side(const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
                                  const Rational& gamma, std::int64_t N) {
    const std::int64_t s = floor_sqrt(Rational(N));
    const std::int64_t w = gamma.is_zero() ? 0 : floor_sqrt(gamma * gamma * Rational(N));
    return union_diagram(scaled_floors(alpha, N), scaled_floors(beta, N), w > 0 ? s : 0, w);
}

void require_positive_n(std::int64_t N) {
    if (N <= 0) {
        throw InputError("N must be positive, got " + std::to_string(N));
    }
}

IntegerPartition to_partition(const std::vector<std::int64_t>& rows) {
    std::vector<int> parts;
    for (auto r : rows) {
        parts.push_back(static_cast<int>(r));
    }
    return IntegerPartition(parts);
}

} // namespace

Signature build_vk_sequence(const OmegaParams& omega, std::int64_t N) {
    require_positive_n(N);
    omega.validate();
    const auto plus = vk_side(omega.alphaPlus, omega.betaPlus, omega.gammaPlus, N);
    const auto minus = vk_side(omega.alphaMinus, omega.betaMinus, omega.gammaMinus, N);
    if (static_cast<std::int64_t>(plus.size() + minus.size()) > N) {
        throw ConstructionError("N=" + std::to_string(N) + ": positive part needs " + std::to_string(plus.size()) +
                                " rows and negative part " + std::to_string(minus.size()) + ", more than N");
    }
    std::vector<std::int64_t> entries(static_cast<std::size_t>(N), 0);
    for (std::size_t i = 0; i < plus.size(); ++i) {
        entries[i] = plus[i];
    }
    for (std::size_t i = 0; i < minus.size(); ++i) {
        entries[static_cast<std::size_t>(N) - 1 - i] = -minus[i];
    }
    return Signature(entries);
}

IntegerPartition build_thoma_diagram(const ThomaParams& omega, std::int64_t N) {
    require_positive_n(N);
    omega.validate();
    auto rows = union_diagram(scaled_floors(omega.alpha, N), scaled_floors(omega.beta, N), 0, 0);
    std::int64_t area = 0;
    for (auto r : rows) {
        area += r;
    }
    // add the remaining boxes one at a time at the addable corner closest to the
    // origin in the max-norm, so they form a near-square block
    for (; area < N; ++area) {
        std::size_t best_row = rows.size();
        std::int64_t best_key = -1;
        for (std::size_t k = 0; k <= rows.size(); ++k) {
            const std::int64_t c = k < rows.size() ? rows[k] : 0;
            const bool addable = k == 0 || rows[k - 1] > c;
            if (!addable) {
                continue;
            }
            const std::int64_t key = std::max(static_cast<std::int64_t>(k), c);
            if (best_key < 0 || key < best_key) {
                best_key = key;
                best_row = k;
            }
        }
        if (best_row == rows.size()) {
            rows.push_back(1);
        } else {
            ++rows[best_row];
        }
    }
    return to_partition(rows);
}

Signature build_stabilizing_sequence(const NuSequence& nu, std::int64_t N) {
    require_positive_n(N);
    nu.validate();
    std::vector<std::int64_t> entries(static_cast<std::size_t>(N));
    for (std::int64_t j = 1; j <= N; ++j) {
        entries[static_cast<std::size_t>(N - j)] = nu(static_cast<std::size_t>(j));
    }
    return Signature(entries);
}

EigenvalueFamily EigenvalueFamily::unitary(std::vector<IntegerPartition> mus, OmegaParams omega) {
    EigenvalueFamily f;
    f.kind = FamilyKind::Unitary;
    f.members = std::move(mus);
    f.omega = std::move(omega);
    f.validate();
    return f;
}

EigenvalueFamily EigenvalueFamily::symmetric(std::vector<IntegerPartition> rhos, ThomaParams thoma) {
    EigenvalueFamily f;
    f.kind = FamilyKind::Symmetric;
    f.members = std::move(rhos);
    f.thoma = std::move(thoma);
    f.validate();
    return f;
}

EigenvalueFamily EigenvalueFamily::quantum(std::vector<IntegerPartition> mus, NuSequence nu, Rational q2) {
    EigenvalueFamily f;
    f.kind = FamilyKind::Quantum;
    f.members = std::move(mus);
    f.nu = std::move(nu);
    f.q2 = std::move(q2);
    f.validate();
    return f;
}

EigenvalueFamily EigenvalueFamily::custom(std::vector<Rational> scalars) {
    EigenvalueFamily f;
    f.kind = FamilyKind::Custom;
    f.scalars = std::move(scalars);
    f.validate();
    return f;
}

std::size_t EigenvalueFamily::size() const { return kind == FamilyKind::Custom ? scalars.size() : members.size(); }

std::string EigenvalueFamily::name() const {
    switch (kind) {
    case FamilyKind::Unitary:
        return "unitary";
    case FamilyKind::Symmetric:
        return "symmetric";
    case FamilyKind::Quantum:
        return "quantum";
    case FamilyKind::Custom:
        return "custom";
    }
    return "unknown";
}

void EigenvalueFamily::validate() const {
    if (size() == 0) {
        throw InputError(name() + " family has no members");
    }
    switch (kind) {
    case FamilyKind::Unitary:
        omega.validate();
        break;
    case FamilyKind::Symmetric:
        thoma.validate();
        for (const auto& rho : members) {
            if (std::find(rho.parts().begin(), rho.parts().end(), 1) != rho.parts().end()) {
                throw DomainError("cycle type " + rho.str() + " has a part 1; fixed points are implied");
            }
        }
        break;
    case FamilyKind::Quantum:
        nu.validate();
        if (q2.sign() <= 0 || q2 >= Rational(1)) {
            throw ParameterError("q2 must lie in (0,1), got " + q2.str());
        }
        break;
    case FamilyKind::Custom:
        break;
    }
}

Rational quantum_prefactor(const IntegerPartition& mu, const Rational& q2) {
    if (q2.sign() <= 0 || q2 >= Rational(1)) {
        throw ParameterError("q2 must lie in (0,1), got " + q2.str());
    }
    const std::size_t n = mu.length();
    if (n == 0) {
        return Rational(1);
    }
    std::vector<Rational> shifted;
    std::vector<Rational> plain;
    for (std::size_t i = 0; i < n; ++i) {
        shifted.push_back(pow(q2, mu[i] - static_cast<std::int64_t>(i)));
        plain.push_back(pow(q2, mu[i]));
    }
    // plain points repeat whenever μ does, so both sides use the polynomial (tableau) form
    const auto a = ParameterSequence::geometric_q(q2, -static_cast<std::int64_t>(n));
    const Rational den = factorial_schur_tableau(mu, plain, a);
    if (den.is_zero()) {
        throw DegenerateError("s*_" + mu.str() + "(q^{2mu}; q^2) vanishes");
    }
    return factorial_schur_tableau(mu, shifted, a) / den;
}

namespace {

void check_member(const EigenvalueFamily& fam, std::size_t i) {
    if (i >= fam.size()) {
        throw InputError("member index " + std::to_string(i) + " outside a family of " + std::to_string(fam.size()));
    }
}

} // namespace

Rational family_eigenvalue(const EigenvalueFamily& fam, std::size_t i, std::int64_t N) {
    check_member(fam, i);
    require_positive_n(N);
    switch (fam.kind) {
    case FamilyKind::Unitary: {
        const Signature lambda = build_vk_sequence(fam.omega, N);
        std::vector<Rational> x;
        for (auto v : lambda.entries()) {
            x.emplace_back(v);
        }
        return shifted_schur_eval(fam.members[i], x);
    }
    case FamilyKind::Symmetric: {
        if (N > kSymmetricMaxN) {
            throw BoundError("symmetric family evaluated only for N <= " + std::to_string(kSymmetricMaxN));
        }
        const auto& rho = fam.members[i];
        if (rho.weight() > N) {
            throw DomainError("cycle type " + rho.str() + " does not fit in S_" + std::to_string(N));
        }
        const IntegerPartition lambda = build_thoma_diagram(fam.thoma, N);
        return mn_normalized_character(lambda, pad_with_ones(rho, static_cast<int>(N - rho.weight())));
    }
    case FamilyKind::Quantum: {
        const Signature lambda = build_stabilizing_sequence(fam.nu, N);
        std::vector<Rational> x;
        for (std::size_t k = 0; k < lambda.N(); ++k) {
            x.push_back(pow(fam.q2, lambda[k] - static_cast<std::int64_t>(k)));
        }
        return quantum_prefactor(fam.members[i], fam.q2) * q_interp_schur_eval(fam.members[i], x, fam.q2);
    }
    case FamilyKind::Custom:
        return fam.scalars[i];
    }
    throw InputError("unknown family");
}

Rational family_normalizer(const EigenvalueFamily& fam, std::size_t i, std::int64_t N) {
    check_member(fam, i);
    require_positive_n(N);
    switch (fam.kind) {
    case FamilyKind::Unitary:
        return pow(Rational(N), fam.members[i].weight());
    case FamilyKind::Quantum:
        return pow(fam.q2, -(N - 1) * static_cast<std::int64_t>(fam.members[i].weight()));
    case FamilyKind::Symmetric:
    case FamilyKind::Custom:
        return Rational(1);
    }
    throw InputError("unknown family");
}

Rational family_limit(const EigenvalueFamily& fam, std::size_t i) {
    check_member(fam, i);
    switch (fam.kind) {
    case FamilyKind::Unitary:
        return s_mu_omega(fam.members[i], fam.omega);
    case FamilyKind::Symmetric:
        return thoma_character_value(fam.thoma, fam.members[i]);
    case FamilyKind::Quantum:
        return quantum_prefactor(fam.members[i], fam.q2) * s_mu_omega_nu(fam.members[i], fam.nu, fam.q2);
    case FamilyKind::Custom:
        return fam.scalars[i];
    }
    throw InputError("unknown family");
}

std::string to_string(Normalization n) {
    switch (n) {
    case Normalization::ByVariance:
        return "variance";
    case Normalization::ByPower:
        return "power";
    case Normalization::Unnormalized:
        return "none";
    }
    return "unknown";
}

QuadraticSurd scaled_clt_moment(const EigenvalueFamily& fam, std::span<const std::size_t> indices, std::int64_t N,
                                std::int64_t L, const Rational& t, Normalization norm, bool centered) {
    const std::size_t m = indices.size();
    if (m > kMaxCltFactors) {
        throw BoundError("scaled moments support at most " + std::to_string(kMaxCltFactors) + " factors");
    }
    if (L < 1) {
        throw InputError("L must be at least 1");
    }
    if (t.sign() <= 0) {
        throw InputError("t must be positive, got " + t.str());
    }
    std::map<std::size_t, Rational> eigen;
    for (auto i : indices) {
        if (!eigen.contains(i)) {
            eigen.emplace(i, family_eigenvalue(fam, i, N));
        }
    }

    // block moments of the unit-t increments, one per subset of factors
    const CoherentState psi = CoherentState::unit({GaussianRational(1)});
    std::vector<AffineProcessSpec> specs;
    for (auto i : indices) {
        const Rational& f = eigen.at(i);
        specs.push_back(AffineProcessSpec::scalar(f, centered ? GaussianRational(-f) : GaussianRational(0)));
    }
    std::vector<Rational> block(std::size_t{1} << m);
    for (std::size_t mask = 1; mask < block.size(); ++mask) {
        std::vector<AffineProcessSpec> sub;
        for (std::size_t k = 0; k < m; ++k) {
            if ((mask >> k) & 1U) {
                sub.push_back(specs[k]);
            }
        }
        const GaussianRational v = affine_moment(sub, psi, t);
        if (!v.is_real()) {
            throw DomainError("complex block moment for real eigenvalues");
        }
        block[mask] = v.re();
    }

    Rational sum(0);
    if (m == 0) {
        sum = Rational(1);
    } else {
        for (const auto& pi : enumerate_set_partitions(static_cast<int>(m))) {
            if (centered && pi.has_singleton()) {
                continue;
            }
            if (static_cast<std::int64_t>(pi.size()) > L) {
                continue; // L(L-1)...(L-|π|+1) = 0
            }
            Rational term = falling_factorial(L, static_cast<int>(pi.size()));
            for (const auto& b : pi.blocks) {
                std::size_t mask = 0;
                for (int k : b) {
                    mask |= std::size_t{1} << (k - 1);
                }
                term *= block[mask];
            }
            sum += term;
        }
    }

    switch (norm) {
    case Normalization::Unnormalized:
        return sum;
    case Normalization::ByVariance: {
        // ∏ √(L t f_i²) = √R with R = (L t)^m ∏ f_i²
        Rational radicand = pow(Rational(L) * t, static_cast<std::int64_t>(m));
        for (auto i : indices) {
            radicand *= eigen.at(i) * eigen.at(i);
        }
        if (radicand.is_zero()) {
            throw DegenerateError("zero variance: an eigenvalue vanishes at N=" + std::to_string(N));
        }
        return {sum / radicand, radicand};
    }
    case Normalization::ByPower: {
        // ∏ P_i √N = (∏ P_i) √(N^m)
        Rational p(1);
        for (auto i : indices) {
            p *= family_normalizer(fam, i, N);
        }
        const Rational nm = pow(Rational(N), static_cast<std::int64_t>(m));
        return {sum / (p * nm), nm};
    }
    }
    throw InputError("unknown normalization");
}

Rational wick_limit(const RationalMatrix& C, std::size_t m) {
    if (m % 2 == 1) {
        return Rational(0);
    }
    if (C.rows() < m || C.cols() < m) {
        throw ShapeError("covariance matrix smaller than the number of factors");
    }
    if (m == 0) {
        return Rational(1);
    }
    Rational total(0);
    for (const auto& pi : enumerate_pair_partitions(static_cast<int>(m))) {
        Rational term(1);
        for (const auto& b : pi.blocks) {
            term *= C(static_cast<std::size_t>(b[0] - 1), static_cast<std::size_t>(b[1] - 1));
        }
        total += term;
    }
    return total;
}

Rational limit_covariance(const EigenvalueFamily& fam, std::size_t i, std::size_t j, const Rational& t,
                          Normalization norm) {
    const Rational li = family_limit(fam, i);
    const Rational lj = family_limit(fam, j);
    switch (norm) {
    case Normalization::ByPower:
        return t * li * lj;
    case Normalization::ByVariance:
        if (li.is_zero() || lj.is_zero()) {
            throw DegenerateError("variance normalization of a family member with limit 0");
        }
        return Rational((li * lj).sign());
    case Normalization::Unnormalized:
        break;
    }
    throw InputError("unnormalized moments have no limit covariance");
}

unsigned grid_threads() {
    if (const char* env = std::getenv("FOCK_ASYMPTOTICS_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

// Evaluates fn(k) for k = 0..n-1 on up to grid_threads() workers; results and the
// first exception (in grid order) are reported as if evaluated sequentially.
template <class T, class Fn>
std::vector<T> evaluate_grid(std::size_t n, Fn fn) {
    std::vector<std::optional<T>> results(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t k = next++; k < n; k = next++) {
            try {
                results[k] = fn(k);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::min<std::size_t>(grid_threads(), n);
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    std::vector<T> out;
    for (std::size_t k = 0; k < n; ++k) {
        if (errors[k]) {
            std::rethrow_exception(errors[k]);
        }
        out.push_back(std::move(*results[k]));
    }
    return out;
}

void require_increasing(std::span<const std::int64_t> grid) {
    if (grid.empty()) {
        throw InputError("empty grid");
    }
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (grid[k] <= 0 || (k > 0 && grid[k] <= grid[k - 1])) {
            throw InputError("grid must be positive and strictly increasing");
        }
    }
}

void finish_report(ConvergenceReport& report, std::span<const std::int64_t> grid) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t k = 0; k < report.rows.size(); ++k) {
        auto& row = report.rows[k];
        if (!row.absError.is_zero()) {
            xs.push_back(std::log(static_cast<double>(grid[k])));
            ys.push_back(-row.absError.log_abs());
        }
        if (k > 0) {
            const auto& prev = report.rows[k - 1].absError;
            if (!prev.is_zero() && !row.absError.is_zero()) {
                row.rate = (prev.log_abs() - row.absError.log_abs()) /
                           std::log(static_cast<double>(grid[k]) / static_cast<double>(grid[k - 1]));
            }
        }
    }
    if (xs.size() >= 2) {
        double mx = 0;
        double my = 0;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            mx += xs[k];
            my += ys[k];
        }
        mx /= static_cast<double>(xs.size());
        my /= static_cast<double>(xs.size());
        double sxy = 0;
        double sxx = 0;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            sxy += (xs[k] - mx) * (ys[k] - my);
            sxx += (xs[k] - mx) * (xs[k] - mx);
        }
        report.fittedRate = sxy / sxx;
    }
    if (report.tolerance) {
        const auto& last = report.rows.back().absError;
        report.passed = last.square() <= *report.tolerance * *report.tolerance;
    }
}

} // namespace

ConvergenceReport lln_report(const EigenvalueFamily& fam, std::size_t i, std::span<const std::int64_t> gridN,
                             const Rational& t, std::optional<Rational> tolerance) {
    require_increasing(gridN);
    if (t.sign() <= 0) {
        throw InputError("t must be positive, got " + t.str());
    }
    const Rational limit = t * family_limit(fam, i);
    ConvergenceReport report;
    report.kind = "lln";
    report.family = fam.name();
    report.normalization = to_string(Normalization::ByPower);
    report.tolerance = std::move(tolerance);
    report.rows = evaluate_grid<ReportRow>(gridN.size(), [&](std::size_t k) {
        const std::int64_t N = gridN[k];
        ReportRow row;
        row.gridIndex = k;
        row.N = N;
        row.L = N;
        const Rational value = t * family_eigenvalue(fam, i, N) / family_normalizer(fam, i, N);
        row.value = value;
        row.limit = limit;
        row.absError = abs(value - limit);
        return row;
    });
    finish_report(report, gridN);
    return report;
}

ConvergenceReport clt_report(const EigenvalueFamily& fam, std::span<const std::size_t> indices,
                             std::span<const std::int64_t> gridL, const Rational& t, Normalization norm,
                             std::optional<Rational> tolerance) {
    require_increasing(gridL);
    const std::size_t m = indices.size();
    RationalMatrix C(m, m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            C(a, b) = limit_covariance(fam, indices[a], indices[b], t, norm);
        }
    }
    const QuadraticSurd limit = wick_limit(C, m);
    ConvergenceReport report;
    report.kind = "clt";
    report.family = fam.name();
    report.normalization = to_string(norm);
    report.tolerance = std::move(tolerance);
    report.rows = evaluate_grid<ReportRow>(gridL.size(), [&](std::size_t k) {
        const std::int64_t L = gridL[k];
        ReportRow row;
        row.gridIndex = k;
        row.N = L;
        row.L = L;
        row.value = scaled_clt_moment(fam, indices, L, L, t, norm);
        row.limit = limit;
        row.absError = abs_difference(row.value, limit);
        return row;
    });
    finish_report(report, gridL);
    return report;
}

} // namespace fockasym
