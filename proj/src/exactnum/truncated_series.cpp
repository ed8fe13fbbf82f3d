#include "fockasym/exactnum/truncated_series.hpp"

#include <string>

#include "fockasym/errors.hpp"

namespace fockasym {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > order + 1) {
        throw DomainError("series has " + std::to_string(coeffs_.size()) +
                          " coefficients but order " + std::to_string(order));
    }
    coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::constant(std::size_t order, const Rational& c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::linear(std::size_t order, const Rational& c0, const Rational& c1) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c0;
    if (order >= 1) {
        s.coeffs_[1] = c1;
    }
    return s;
}

void TruncatedSeries::require_same_order(const TruncatedSeries& o) const {
    if (order() != o.order()) {
        throw DomainError("mixed truncation orders " + std::to_string(order()) + " and " +
                          std::to_string(o.order()));
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_same_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_same_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
    require_same_order(o);
    const std::size_t n = coeffs_.size();
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            if (!o.coeffs_[j].is_zero()) {
                out[i + j] += coeffs_[i] * o.coeffs_[j];
            }
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (!s[0].is_zero()) {
        throw DomainError("series_exp needs a zero constant term, got " + s[0].str());
    }
    // f = exp(s)  =>  n f_n = sum_{k=1}^{n} k s_k f_{n-k}
    const std::size_t K = s.order();
    std::vector<Rational> f(K + 1);
    f[0] = Rational(1);
    for (std::size_t n = 1; n <= K; ++n) {
        Rational acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (!s[k].is_zero()) {
                acc += Rational(static_cast<std::int64_t>(k)) * s[k] * f[n - k];
            }
        }
        f[n] = acc / Rational(static_cast<std::int64_t>(n));
    }
    return TruncatedSeries(K, std::move(f));
}

TruncatedSeries series_quotient(const TruncatedSeries& num, const TruncatedSeries& den) {
    if (num.order() != den.order()) {
        throw DomainError("series_quotient: mixed truncation orders");
    }
    if (den[0].is_zero()) {
        throw DomainError("series_quotient: denominator has zero constant term");
    }
    const std::size_t K = num.order();
    std::vector<Rational> q(K + 1);
    for (std::size_t n = 0; n <= K; ++n) {
        Rational acc = num[n];
        for (std::size_t k = 1; k <= n; ++k) {
            if (!den[k].is_zero()) {
                acc -= den[k] * q[n - k];
            }
        }
        q[n] = acc / den[0];
    }
    return TruncatedSeries(K, std::move(q));
}

} // namespace fockasym
