#include <sstream>

#include "doctest.h"
#include "fockasym/errors.hpp"
#include "fockasym/exactnum.hpp"
#include "support.hpp"

using namespace fockasym;

namespace {

// Laplace expansion along the first row; exponential but obviously correct.
template <class T>
T cofactor_det(const DenseMatrix<T>& m) {
    const std::size_t n = m.rows();
    if (n == 0) {
        return T(1);
    }
    if (n == 1) {
        return m(0, 0);
    }
    T total(0);
    for (std::size_t col = 0; col < n; ++col) {
        DenseMatrix<T> minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != col) {
                    minor(r - 1, cc++) = m(r, c);
                }
            }
        }
        T term = m(0, col) * cofactor_det(minor);
        total = (col % 2 == 0) ? total + term : total - term;
    }
    return total;
}

TruncatedSeries random_series(testsupport::Gen& g, std::size_t K, bool zero_constant) {
    std::vector<Rational> c;
    for (std::size_t k = 0; k <= K; ++k) {
        c.push_back(k == 0 && zero_constant ? Rational(0) : g.rational(6));
    }
    return {K, c};
}

} // namespace

TEST_CASE("rational normalization and parsing") {
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational::parse("10/-4") == Rational(-5, 2));
    CHECK(Rational::parse(" 7 ") == Rational(7));
    CHECK(Rational::parse("-3/9").str() == "-1/3");
    CHECK_THROWS_AS(Rational::parse("0.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1e3"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational arithmetic chains stay reduced") {
    testsupport::Gen g(11);
    for (int trial = 0; trial < 200; ++trial) {
        Rational acc = g.rational();
        for (int step = 0; step < 6; ++step) {
            const Rational x = g.rational();
            switch (g.uniform(0, 3)) {
            case 0: acc += x; break;
            case 1: acc -= x; break;
            case 2: acc *= x; break;
            default:
                if (!x.is_zero()) {
                    acc /= x;
                }
            }
        }
        CHECK(acc.denominator() > 0);
        BigInt gcd;
        const BigInt num = acc.numerator();
        const BigInt den = acc.denominator();
        mpz_gcd(gcd.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        CHECK(gcd == 1);
    }
}

TEST_CASE("rational powers and square roots") {
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(1, 4), -2) == Rational(16));
    CHECK(pow(Rational(5), 0) == Rational(1));
    CHECK_THROWS_AS(pow(Rational(0), -1), DomainError);
    CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(Rational(9, 4).is_perfect_square());
    CHECK_FALSE(Rational(2).is_perfect_square());
}

TEST_CASE("decimal rendering matches printf %.15g") {
    const std::vector<std::pair<Rational, std::string>> cases = {
        {Rational(1, 3), "0.333333333333333"},
        {Rational(2, 3), "0.666666666666667"},
        {Rational(-1, 8), "-0.125"},
        {Rational(0), "0"},
        {Rational(123456789), "123456789"},
        {Rational(1, 10000000), "1e-07"},
        {Rational(1, 1000), "0.001"},
        {pow(Rational(10), 20), "1e+20"},
        {Rational(999999999999999999LL, 1000000000000000000LL), "1"},
        {Rational(3, 40), "0.075"},
    };
    for (const auto& [value, expected] : cases) {
        CHECK(value.decimal() == expected);
    }
    CHECK(Rational(1, 3).decimal(3) == "0.333");
    // agreement with the C library on values a double represents well
    testsupport::Gen g(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational x(g.uniform(-100000, 100000), 1 << g.uniform(0, 12));
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.15g", x.to_double());
        CHECK(x.decimal() == std::string(buf));
    }
}

TEST_CASE("quadratic surds") {
    const QuadraticSurd s(Rational(3), Rational(4));
    CHECK(s.is_rational());
    CHECK(s.to_rational() == Rational(6));
    const QuadraticSurd r(Rational(1), Rational(2));
    CHECK_FALSE(r.is_rational());
    CHECK(r.square() == Rational(2));
    CHECK(r.decimal() == "1.4142135623731");
    CHECK(QuadraticSurd(Rational(-1, 2), Rational(1, 3)).decimal() == "-0.288675134594813");
    CHECK(abs_difference(r, QuadraticSurd(Rational(0))) == r);
    CHECK(abs_difference(QuadraticSurd(Rational(1), Rational(3)), QuadraticSurd(Rational(3), Rational(3))) ==
          QuadraticSurd(Rational(2), Rational(3)));
    CHECK_THROWS_AS(abs_difference(r, QuadraticSurd(Rational(1), Rational(3))), DomainError);
    CHECK_THROWS_AS(QuadraticSurd(Rational(1), Rational(-1)), DomainError);
}

TEST_CASE("gaussian rationals form a field") {
    testsupport::Gen g(3);
    for (int trial = 0; trial < 100; ++trial) {
        const GaussianRational a = g.gaussian();
        const GaussianRational b = g.gaussian();
        const GaussianRational c = g.gaussian();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a * a.conj()).re() == a.norm2());
        CHECK((a * a.conj()).im().is_zero());
        CHECK(a.norm2() >= Rational(0));
        if (!b.is_zero()) {
            CHECK(a / b * b == a);
        }
    }
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK(pow(GaussianRational::i(), 4) == GaussianRational(1));
    CHECK(pow(GaussianRational::i(), -1) == -GaussianRational::i());
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), DomainError);
}

TEST_CASE("determinant examples") {
    CHECK(det_exact(ExactMatrix::identity(3)) == GaussianRational(1));
    const ExactMatrix m(2, 2, {1, 2, 3, 4});
    CHECK(det_exact(m) == GaussianRational(-2));
    CHECK_THROWS_AS(det_exact(ExactMatrix(2, 3)), ShapeError);
    CHECK_THROWS_AS(ExactMatrix(2, 2, {1, 2, 3}), ShapeError);
    const RationalMatrix singular(2, 2, {1, 2, 2, 4});
    CHECK(det_exact(singular) == Rational(0));
}

TEST_CASE("determinant agrees with cofactor expansion") {
    testsupport::Gen g(17);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = static_cast<std::size_t>(g.uniform(1, 5));
        const RationalMatrix r = g.rational_matrix(n);
        CHECK(det_exact(r) == cofactor_det(r));
        const ExactMatrix z = g.gaussian_matrix(n);
        CHECK(det_exact(z) == cofactor_det(z));
    }
}

TEST_CASE("determinant is multiplicative") {
    testsupport::Gen g(23);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(g.uniform(1, 4));
        const ExactMatrix a = g.gaussian_matrix(n);
        const ExactMatrix b = g.gaussian_matrix(n);
        CHECK(det_exact(a * b) == det_exact(a) * det_exact(b));
    }
}

TEST_CASE("series exp examples") {
    CHECK(series_exp(TruncatedSeries(4)) == TruncatedSeries::constant(4, Rational(1)));
    const Rational gamma(3, 5);
    const TruncatedSeries e = series_exp(TruncatedSeries::linear(3, Rational(0), gamma));
    CHECK(e[0] == Rational(1));
    CHECK(e[1] == gamma);
    CHECK(e[2] == gamma * gamma / Rational(2));
    CHECK(e[3] == gamma * gamma * gamma / Rational(6));
    const TruncatedSeries s(2, {Rational(0), Rational(1), Rational(1)});
    CHECK(series_exp(s) == TruncatedSeries(2, {Rational(1), Rational(1), Rational(3, 2)}));
    CHECK_THROWS_AS(series_exp(TruncatedSeries::constant(2, Rational(1))), DomainError);
}

TEST_CASE("series quotient examples") {
    const TruncatedSeries one = TruncatedSeries::constant(3, Rational(1));
    const TruncatedSeries one_minus_t = TruncatedSeries::linear(3, Rational(1), Rational(-1));
    CHECK(series_quotient(one, one_minus_t) == TruncatedSeries(3, {1, 1, 1, 1}));
    CHECK(series_quotient(one_minus_t, one_minus_t) == one);
    const TruncatedSeries num = TruncatedSeries::linear(2, Rational(1), Rational(1));
    const TruncatedSeries den = TruncatedSeries::linear(2, Rational(1), Rational(-1));
    CHECK(series_quotient(num, den) == TruncatedSeries(2, {1, 2, 2}));
    CHECK_THROWS_AS(series_quotient(one, TruncatedSeries::linear(3, Rational(0), Rational(1))), DomainError);
    CHECK_THROWS_AS(one + TruncatedSeries(4), DomainError);
    CHECK_THROWS_AS(TruncatedSeries(1, {1, 2, 3}), DomainError);
}

TEST_CASE("series exp turns sums into products") {
    testsupport::Gen g(29);
    for (std::size_t K = 0; K <= 8; ++K) {
        for (int trial = 0; trial < 5; ++trial) {
            const TruncatedSeries a = random_series(g, K, true);
            const TruncatedSeries b = random_series(g, K, true);
            CHECK(series_exp(a + b) == series_exp(a) * series_exp(b));
        }
    }
}

TEST_CASE("series quotient undoes multiplication") {
    testsupport::Gen g(31);
    for (std::size_t K = 0; K <= 8; ++K) {
        const TruncatedSeries a = random_series(g, K, true);
        TruncatedSeries d = random_series(g, K, false);
        if (d[0].is_zero()) {
            d += TruncatedSeries::constant(K, Rational(1));
        }
        CHECK(series_quotient(series_exp(a) * d, d) == series_exp(a));
    }
}
