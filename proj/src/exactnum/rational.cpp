#include "fockasym/exactnum/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "fockasym/errors.hpp"
#include "fockasym/exactnum/decimal.hpp"

namespace fockasym {

static_assert(sizeof(long) == sizeof(std::int64_t), "GMP long conversions assume LP64");

Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

Rational::Rational(const BigInt& n) : value_(n) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw ParseError("not an exact rational literal: '" + std::string(whole) + "'");
    }
    BigInt v(std::string(s), 10);
    return negative ? BigInt(-v) : v;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) {
        s.remove_suffix(1);
    }
    if (s.find_first_of(".eE") != std::string_view::npos) {
        throw ParseError("floating-point literal rejected (use p/q): '" + std::string(text) + "'");
    }
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(s, text));
    }
    BigInt num = parse_integer(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '+') {
        den_text.remove_prefix(1);
    }
    BigInt den = parse_integer(den_text, text);
    if (den == 0) {
        throw ParseError("zero denominator: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

bool Rational::is_perfect_square() const {
    if (sign() < 0) {
        return false;
    }
    return mpz_perfect_square_p(value_.get_num_mpz_t()) != 0 &&
           mpz_perfect_square_p(value_.get_den_mpz_t()) != 0;
}

std::string Rational::str() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int significant) const {
    return render_decimal(value_, significant);
}

double Rational::log_abs() const {
    if (is_zero()) {
        return -HUGE_VAL;
    }
    auto log_mpz = [](const mpz_class& z) {
        long exp2 = 0;
        double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
        return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
    };
    return log_mpz(value_.get_num()) - log_mpz(value_.get_den());
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, std::int64_t exponent) {
    if (exponent < 0) {
        if (base.is_zero()) {
            throw DomainError("zero raised to a negative power");
        }
        return pow(Rational(1) / base, -exponent);
    }
    mpz_class num;
    mpz_class den;
    auto e = static_cast<unsigned long>(exponent);
    mpz_pow_ui(num.get_mpz_t(), base.value_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.value_.get_den_mpz_t(), e);
    mpq_class v(num, den);
    return Rational(std::move(v));
}

Rational exact_sqrt(const Rational& r) {
    if (!r.is_perfect_square()) {
        throw DomainError("not the square of a rational: " + r.str());
    }
    mpz_class num;
    mpz_class den;
    mpz_sqrt(num.get_mpz_t(), r.raw().get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), r.raw().get_den_mpz_t());
    return Rational(num, den);
}

} // namespace fockasym

std::size_t std::hash<fockasym::Rational>::operator()(const fockasym::Rational& r) const noexcept {
    std::size_t h1 = std::hash<std::string>{}(r.numerator().get_str(16));
    std::size_t h2 = std::hash<std::string>{}(r.denominator().get_str(16));
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}
