#pragma once

#include <iosfwd>
#include <string>

#include "fockasym/exactnum/rational.hpp"

namespace fockasym {

/// Element of Q(i): re + i*im with exact rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {} // NOLINT(google-explicit-constructor)
    GaussianRational(std::int64_t re) : re_(re) {}        // NOLINT
    GaussianRational(int re) : re_(re) {}                 // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    [[nodiscard]] const Rational& re() const { return re_; }
    [[nodiscard]] const Rational& im() const { return im_; }
    [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] bool is_real() const { return im_.is_zero(); }

    [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2
    [[nodiscard]] Rational norm2() const { return re_ * re_ + im_ * im_; }

    [[nodiscard]] std::string str() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

private:
    Rational re_;
    Rational im_;
};

[[nodiscard]] GaussianRational pow(const GaussianRational& base, std::int64_t exponent);

} // namespace fockasym
