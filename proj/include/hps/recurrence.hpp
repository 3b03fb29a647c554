#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hps/error.hpp"
#include "hps/polynomial.hpp"
#include "hps/rational.hpp"

namespace hps {

/// Terms x_start, x_{start+1}, ... of a sequence.
struct Sequence {
    long start_index = 0;
    std::vector<Rational> terms;

    Sequence() = default;
    Sequence(long start, std::vector<Rational> values) : start_index(start), terms(std::move(values)) {
        if (terms.empty()) {
            throw ArgumentError("a sequence needs at least one term");
        }
    }

    static Sequence from_integers(long start, const std::vector<Integer>& values) {
        std::vector<Rational> t;
        t.reserve(values.size());
        for (const auto& v : values) {
            t.emplace_back(v);
        }
        return Sequence(start, std::move(t));
    }

    [[nodiscard]] std::size_t size() const { return terms.size(); }
    [[nodiscard]] long last_index() const { return start_index + static_cast<long>(terms.size()) - 1; }

    [[nodiscard]] const Rational& at(long index) const {
        if (index < start_index || index > last_index()) {
            throw ArgumentError("index " + std::to_string(index) + " outside sequence");
        }
        return terms[static_cast<std::size_t>(index - start_index)];
    }

    /// Terms with indices first..last inclusive.
    [[nodiscard]] Sequence slice(long first, long last) const {
        if (first < start_index || last > last_index() || first > last) {
            throw ArgumentError("slice [" + std::to_string(first) + ", " + std::to_string(last) +
                                "] outside sequence");
        }
        return Sequence(first, std::vector<Rational>(terms.begin() + (first - start_index),
                                                     terms.begin() + (last - start_index) + 1));
    }
};

/// x_n = c_1 x_{n-1} + ... + c_r x_{n-r}.
class RecurrenceCoeffs {
public:
    explicit RecurrenceCoeffs(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
        if (coeffs_.empty()) {
            throw ArgumentError("recurrence order must be positive");
        }
        if (coeffs_.back() == 0) {
            throw ArgumentError("last recurrence coefficient must be nonzero");
        }
    }

    static RecurrenceCoeffs from_integers(const std::vector<long>& c) {
        std::vector<Rational> r;
        r.reserve(c.size());
        for (long x : c) {
            r.emplace_back(x);
        }
        return RecurrenceCoeffs(std::move(r));
    }

    [[nodiscard]] std::size_t order() const { return coeffs_.size(); }
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
    [[nodiscard]] bool degenerate() const { return coeffs_.back() == 0; }

    /// x^r - c_1 x^{r-1} - ... - c_r.
    [[nodiscard]] RationalPolynomial characteristic_polynomial() const {
        const std::size_t r = coeffs_.size();
        std::vector<Rational> p(r + 1);
        p[r] = 1;
        for (std::size_t i = 0; i < r; ++i) {
            p[r - 1 - i] = -coeffs_[i];
        }
        return RationalPolynomial(std::move(p));
    }

    friend bool operator==(const RecurrenceCoeffs&, const RecurrenceCoeffs&) = default;

private:
    struct Unchecked {};
    RecurrenceCoeffs(std::vector<Rational> coefficients, Unchecked) : coeffs_(std::move(coefficients)) {}

    friend RecurrenceCoeffs find_minimal_recurrence(const Sequence& s);

    std::vector<Rational> coeffs_;
};

/// The sequence with its leading zero terms removed (unchanged if all zero).
inline Sequence strip_leading_zeros(const Sequence& s) {
    std::size_t first = 0;
    while (first < s.terms.size() && s.terms[first] == 0) {
        ++first;
    }
    if (first == s.terms.size()) {
        return s;
    }
    return s.slice(s.start_index + static_cast<long>(first), s.last_index());
}

/// True iff every window x_n, x_{n-1}, ..., x_{n-r} in the sequence satisfies the recurrence.
inline bool verify_recurrence(const Sequence& s, const RecurrenceCoeffs& r) {
    const std::size_t order = r.order();
    if (s.size() < order + 1) {
        throw InsufficientData("sequence of " + std::to_string(s.size()) + " terms cannot check an order-" +
                               std::to_string(order) + " recurrence");
    }
    const auto& x = s.terms;
    const auto& c = r.coefficients();
    for (std::size_t n = order; n < x.size(); ++n) {
        Rational rhs = 0;
        for (std::size_t i = 0; i < order; ++i) {
            rhs += c[i] * x[n - 1 - i];
        }
        if (rhs != x[n]) {
            return false;
        }
    }
    return true;
}

/// Shortest linear recurrence consistent with every supplied term
/// (Berlekamp-Massey over Q). Leading zeros are dropped before fitting.
/// A result is only as good as the prefix it saw: about 2r+2 terms are
/// needed before an order-r recurrence can be trusted.
///
/// The last coefficient can come out zero when the sequence has a transient
/// head that no nondegenerate recurrence explains; degenerate() reports that.
inline RecurrenceCoeffs find_minimal_recurrence(const Sequence& s) {
    if (s.size() < 2) {
        throw InsufficientData("need at least two terms to fit a recurrence");
    }
    const Sequence stripped = strip_leading_zeros(s);
    const std::vector<Rational>& x = stripped.terms;
    if (x.front() == 0) {
        // All zero: x_n = 0 * x_{n-1}.
        return RecurrenceCoeffs({Rational(0)}, RecurrenceCoeffs::Unchecked{});
    }

    // Connection polynomial C(z) = 1 + C_1 z + ... + C_L z^L with
    // sum_{i=0}^{L} C_i x_{n-i} = 0.
    std::vector<Rational> conn{Rational(1)};
    std::vector<Rational> prev{Rational(1)};
    std::size_t length = 0;
    std::size_t shift = 1;
    Rational prev_discrepancy = 1;
    for (std::size_t n = 0; n < x.size(); ++n) {
        Rational d = x[n];
        for (std::size_t i = 1; i <= length && i < conn.size(); ++i) {
            d += conn[i] * x[n - i];
        }
        if (d == 0) {
            ++shift;
            continue;
        }
        const std::vector<Rational> saved = conn;
        const Rational factor = d / prev_discrepancy;
        if (conn.size() < prev.size() + shift) {
            conn.resize(prev.size() + shift, Rational(0));
        }
        for (std::size_t i = 0; i < prev.size(); ++i) {
            conn[i + shift] -= factor * prev[i];
        }
        if (2 * length <= n) {
            length = n + 1 - length;
            prev = saved;
            prev_discrepancy = d;
            shift = 1;
        } else {
            ++shift;
        }
    }
    if (length == 0) {
        throw InvariantViolation("Berlekamp-Massey produced an empty recurrence for a nonzero sequence");
    }
    conn.resize(length + 1, Rational(0));
    std::vector<Rational> c(length);
    for (std::size_t i = 0; i < length; ++i) {
        c[i] = -conn[i + 1];
    }
    return RecurrenceCoeffs(std::move(c), RecurrenceCoeffs::Unchecked{});
}

} // namespace hps
