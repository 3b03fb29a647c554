#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hps/error.hpp"
#include "hps/rational.hpp"

namespace hps {

/// Dense univariate polynomial, coefficients stored in ascending degree.
/// The zero polynomial has no coefficients and degree -1.
template <typename T>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<T> ascending) : coeffs_(std::move(ascending)) { trim(); }

    Polynomial(std::initializer_list<T> ascending) : coeffs_(ascending) { trim(); }

    /// Builds from the highest-degree coefficient down, which is how the
    /// polynomials are normally written.
    static Polynomial from_descending(std::initializer_list<T> descending) {
        std::vector<T> c(descending);
        std::reverse(c.begin(), c.end());
        return Polynomial(std::move(c));
    }

    static Polynomial monomial(const T& c, std::size_t degree) {
        std::vector<T> v(degree + 1, T(0));
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<T>& coefficients() const { return coeffs_; }

    [[nodiscard]] T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

    [[nodiscard]] const T& leading() const {
        if (coeffs_.empty()) {
            throw DomainError("leading coefficient of the zero polynomial");
        }
        return coeffs_.back();
    }

    [[nodiscard]] bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Horner evaluation; U may be wider than T (integer polynomial at a rational point).
    template <typename U = T>
    [[nodiscard]] U evaluate(const std::type_identity_t<U>& x) const {
        U acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + U(*it);
        }
        return acc;
    }

    [[nodiscard]] Polynomial derivative() const {
        if (coeffs_.size() <= 1) {
            return {};
        }
        std::vector<T> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
        }
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        std::vector<T> r(std::max(p.coeffs_.size(), q.coeffs_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = p.coeff(i) + q.coeff(i);
        }
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& p) {
        std::vector<T> r(p.coeffs_.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = -p.coeffs_[i];
        }
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        if (p.is_zero() || q.is_zero()) {
            return {};
        }
        std::vector<T> r(p.coeffs_.size() + q.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
                r[i + j] += p.coeffs_[i] * q.coeffs_[j];
            }
        }
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const T& c, const Polynomial& p) { return constant(c) * p; }

    friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.coeffs_ == q.coeffs_; }

    /// Human-readable form, e.g. "x^3 - 4*x^2 + 4*x - 1".
    [[nodiscard]] std::string to_string(char var = 'x') const {
        if (coeffs_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const T& c = coeffs_[static_cast<std::size_t>(i)];
            if (c == 0) {
                continue;
            }
            const bool negative = c < 0;
            const T magnitude = negative ? T(-c) : c;
            if (first) {
                os << (negative ? "-" : "");
            } else {
                os << (negative ? " - " : " + ");
            }
            first = false;
            const bool unit = magnitude == 1;
            if (i == 0 || !unit) {
                os << magnitude.get_str();
                if (i > 0) {
                    os << '*';
                }
            }
            if (i >= 1) {
                os << var;
            }
            if (i >= 2) {
                os << '^' << i;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RationalPolynomial = Polynomial<Rational>;

inline IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

inline RationalPolynomial to_rational(const IntPolynomial& p) {
    std::vector<Rational> c;
    c.reserve(p.coefficients().size());
    for (const auto& x : p.coefficients()) {
        c.emplace_back(x);
    }
    return RationalPolynomial(std::move(c));
}

/// Exact conversion; throws if any coefficient is not an integer.
inline IntPolynomial to_integer(const RationalPolynomial& p) {
    std::vector<Integer> c;
    c.reserve(p.coefficients().size());
    for (const auto& x : p.coefficients()) {
        if (!is_integral(x)) {
            throw DomainError("polynomial has non-integral coefficient " + x.get_str());
        }
        c.push_back(x.get_num());
    }
    return IntPolynomial(std::move(c));
}

/// Smallest positive rational multiple with coprime integer coefficients.
inline IntPolynomial primitive_part(const RationalPolynomial& p) {
    if (p.is_zero()) {
        return {};
    }
    Integer den = 1;
    for (const auto& x : p.coefficients()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    }
    std::vector<Integer> c;
    Integer content = 0;
    for (const auto& x : p.coefficients()) {
        Rational scaled = x * den;
        c.push_back(scaled.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.back().get_mpz_t());
    }
    if (p.leading() < 0) {
        content = -content;
    }
    for (auto& x : c) {
        x /= content;
    }
    return IntPolynomial(std::move(c));
}

inline RationalPolynomial make_monic(const RationalPolynomial& p) {
    if (p.is_zero()) {
        return p;
    }
    const Rational lead = p.leading();
    std::vector<Rational> c(p.coefficients());
    for (auto& x : c) {
        x /= lead;
    }
    return RationalPolynomial(std::move(c));
}

/// Euclidean division over Q: returns (quotient, remainder).
inline std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                const RationalPolynomial& b) {
    if (b.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    std::vector<Rational> rem(a.coefficients());
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) {
        return {RationalPolynomial{}, a};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1), Rational(0));
    const Rational& lead = b.leading();
    for (int i = da; i >= db; --i) {
        const Rational factor = rem[static_cast<std::size_t>(i)] / lead;
        if (factor == 0) {
            continue;
        }
        quot[static_cast<std::size_t>(i - db)] = factor;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coefficients()[static_cast<std::size_t>(j)];
        }
    }
    return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

inline bool divides(const RationalPolynomial& d, const RationalPolynomial& p) {
    return divmod(p, d).second.is_zero();
}

inline bool divides(const IntPolynomial& d, const IntPolynomial& p) {
    return divides(to_rational(d), to_rational(p));
}

/// Monic greatest common divisor over Q (zero if both inputs are zero).
inline RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

inline RationalPolynomial lcm(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    return make_monic(divmod(a * b, gcd(a, b)).first);
}

/// p / gcd(p, p'), monic: same distinct roots, all simple.
inline RationalPolynomial squarefree_part(const RationalPolynomial& p) {
    if (p.degree() <= 0) {
        return make_monic(p);
    }
    return make_monic(divmod(p, gcd(p, p.derivative())).first);
}

} // namespace hps
