#include "fockasym/exactnum/quadratic_surd.hpp"

#include <cmath>

#include "fockasym/errors.hpp"
#include "fockasym/exactnum/decimal.hpp"

namespace fockasym {

QuadraticSurd::QuadraticSurd(Rational coeff, Rational radicand)
    : coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
    if (radicand_.sign() < 0) {
        throw DomainError("negative radicand " + radicand_.str());
    }
    if (coeff_.is_zero() || radicand_.is_zero()) {
        coeff_ = Rational(0);
        radicand_ = Rational(1);
    } else if (radicand_.is_perfect_square()) {
        coeff_ *= exact_sqrt(radicand_);
        radicand_ = Rational(1);
    }
}

Rational QuadraticSurd::to_rational() const {
    if (!is_rational()) {
        throw DomainError("irrational value " + str());
    }
    return coeff_;
}

std::string QuadraticSurd::str() const {
    if (is_rational()) {
        return coeff_.str();
    }
    return coeff_.str() + "*sqrt(" + radicand_.str() + ")";
}

std::string QuadraticSurd::decimal(int significant) const {
    return render_decimal_surd(coeff_.raw(), radicand_.raw(), significant);
}

double QuadraticSurd::log_abs() const { return coeff_.log_abs() + 0.5 * radicand_.log_abs(); }

QuadraticSurd abs_difference(const QuadraticSurd& a, const QuadraticSurd& b) {
    if (b.is_zero()) {
        return abs(a);
    }
    if (a.is_zero()) {
        return abs(b);
    }
    if (a.radicand() == b.radicand()) {
        return {abs(a.coeff() - b.coeff()), a.radicand()};
    }
    throw DomainError("difference of " + a.str() + " and " + b.str() + " is not a single surd");
}

} // namespace fockasym
