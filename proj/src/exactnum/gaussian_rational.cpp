#include "fockasym/exactnum/gaussian_rational.hpp"

#include <ostream>

#include "fockasym/errors.hpp"

namespace fockasym {

std::string GaussianRational::str() const {
    if (im_.is_zero()) {
        return re_.str();
    }
    if (re_.is_zero()) {
        return im_.str() + "i";
    }
    std::string sign = im_.sign() < 0 ? "-" : "+";
    return re_.str() + sign + abs(im_).str() + "i";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) {
        throw DomainError("division by zero");
    }
    if (o.im_.is_zero()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    Rational n = o.norm2();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

GaussianRational pow(const GaussianRational& base, std::int64_t exponent) {
    if (exponent < 0) {
        return pow(GaussianRational(1) / base, -exponent);
    }
    GaussianRational result(1);
    GaussianRational b = base;
    while (exponent > 0) {
        if ((exponent & 1) != 0) {
            result *= b;
        }
        exponent >>= 1;
        if (exponent > 0) {
            b *= b;
        }
    }
    return result;
}

} // namespace fockasym
