#include "fockasym/exactnum/decimal.hpp"

#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <functional>

namespace fockasym {
namespace {

mpz_class pow10(long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return r;
}

// |v| * 10^k as an exact rational
mpq_class scaled(const mpq_class& v, long k) {
    mpq_class r = abs(v);
    if (k >= 0) {
        r *= mpq_class(pow10(k));
    } else {
        r /= mpq_class(pow10(-k));
    }
    return r;
}

mpz_class round_half_up(const mpq_class& x) {
    // x >= 0
    mpz_class twice = 2 * x.get_num() + x.get_den();
    mpz_class den = 2 * x.get_den();
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den.get_mpz_t());
    return q;
}

double log10_abs(const mpq_class& v) {
    auto l = [](const mpz_class& z) {
        long e = 0;
        double m = mpz_get_d_2exp(&e, z.get_mpz_t());
        return std::log10(std::fabs(m)) + static_cast<double>(e) * std::log10(2.0);
    };
    return l(v.get_num()) - l(v.get_den());
}

std::string format_digits(bool negative, const std::string& digits, long exponent, int significant) {
    // digits has exactly `significant` characters, value = 0.d1d2... * 10^(exponent+1)
    std::string out = negative ? "-" : "";
    if (exponent < -4 || exponent >= significant) {
        std::string mant = digits.substr(0, 1);
        std::string frac = digits.substr(1);
        while (!frac.empty() && frac.back() == '0') {
            frac.pop_back();
        }
        if (!frac.empty()) {
            mant += "." + frac;
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "e%c%02ld", exponent < 0 ? '-' : '+', std::labs(exponent));
        return out + mant + buf;
    }
    std::string intpart;
    std::string frac;
    if (exponent >= 0) {
        intpart = digits.substr(0, static_cast<std::size_t>(exponent) + 1);
        frac = digits.substr(static_cast<std::size_t>(exponent) + 1);
    } else {
        intpart = "0";
        frac = std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
    }
    while (!frac.empty() && frac.back() == '0') {
        frac.pop_back();
    }
    return out + intpart + (frac.empty() ? "" : "." + frac);
}

std::string render(bool negative, double log10_estimate, int significant,
                   const std::function<mpz_class(long)>& rounded_scaled) {
    long e = static_cast<long>(std::floor(log10_estimate));
    for (int attempt = 0; attempt < 8; ++attempt) {
        long k = significant - 1 - e;
        mpz_class r = rounded_scaled(k);
        std::string digits = r.get_str();
        auto len = static_cast<long>(digits.size());
        if (len == significant) {
            return format_digits(negative, digits, e, significant);
        }
        if (len > significant) {
            // either the estimate was low or rounding carried into a new digit
            if (len == significant + 1 && digits.find_first_not_of('0', 1) == std::string::npos) {
                return format_digits(negative, digits.substr(0, static_cast<std::size_t>(significant)),
                                     e + 1, significant);
            }
            e += len - significant;
        } else {
            e -= significant - len;
        }
    }
    return "nan";
}

} // namespace

std::string render_decimal(const mpq_class& value, int significant) {
    if (sgn(value) == 0) {
        return "0";
    }
    return render(sgn(value) < 0, log10_abs(value), significant,
                  [&](long k) { return round_half_up(scaled(value, k)); });
}

std::string render_decimal_surd(const mpq_class& coeff, const mpq_class& radicand, int significant) {
    if (sgn(coeff) == 0 || sgn(radicand) == 0) {
        return "0";
    }
    mpq_class square = coeff * coeff * radicand;
    double est = 0.5 * log10_abs(square);
    return render(sgn(coeff) < 0, est, significant, [&](long k) {
        // S = |coeff| sqrt(radicand) 10^k; floor(S) = isqrt(floor(S^2)), then round up when S >= f + 1/2
        mpq_class s2 = scaled(square, 2 * k);
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), s2.get_num_mpz_t(), s2.get_den_mpz_t());
        mpz_class f;
        mpz_sqrt(f.get_mpz_t(), fl.get_mpz_t());
        mpq_class half = mpq_class(f) + mpq_class(1, 2);
        if (cmp(s2, half * half) >= 0) {
            f += 1;
        }
        return f;
    });
}

} // namespace fockasym
