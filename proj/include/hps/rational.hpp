#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hps/error.hpp"

namespace hps {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }
inline Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline Integer pow_integer(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Parses "p/q", "-12", "0.0005" or "1e-6" into an exact rational.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { return ArgumentError("not a rational number: '" + std::string(text) + "'"); };
    if (text.empty()) {
        throw fail();
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num, den;
        if (num.set_str(std::string(text.substr(0, slash)), 10) != 0 ||
            den.set_str(std::string(text.substr(slash + 1)), 10) != 0) {
            throw fail();
        }
        return make_rational(num, den);
    }

    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    long scale = 0;
    bool seen_point = false;
    for (; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits.push_back(ch);
            if (seen_point) {
                ++scale;
            }
        } else if (ch == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (digits.empty()) {
        throw fail();
    }
    long exponent = 0;
    if (pos < text.size()) {
        if (text[pos] != 'e' && text[pos] != 'E') {
            throw fail();
        }
        const std::string tail(text.substr(pos + 1));
        std::size_t used = 0;
        try {
            exponent = std::stol(tail, &used);
        } catch (const std::exception&) {
            throw fail();
        }
        if (used != tail.size()) {
            throw fail();
        }
    }
    Integer mantissa(digits, 10);
    if (negative) {
        mantissa = -mantissa;
    }
    const long shift = exponent - scale;
    if (shift >= 0) {
        return Rational(mantissa * pow_integer(10, static_cast<unsigned long>(shift)));
    }
    return make_rational(mantissa, pow_integer(10, static_cast<unsigned long>(-shift)));
}

/// Decimal rendering rounded half away from zero to `digits` fractional places.
inline std::string to_decimal(const Rational& x, unsigned digits) {
    const Integer scale = pow_integer(10, digits);
    const Rational scaled = abs_value(x) * scale;
    Integer q = scaled.get_num() / scaled.get_den();
    const Integer r = scaled.get_num() - q * scaled.get_den();
    if (2 * r >= scaled.get_den()) {
        q += 1;
    }
    std::string s = q.get_str();
    if (digits > 0) {
        if (s.size() <= digits) {
            s.insert(0, digits + 1 - s.size(), '0');
        }
        s.insert(s.size() - digits, ".");
    }
    if (x < 0 && q != 0) {
        s.insert(0, "-");
    }
    return s;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

} // namespace hps
