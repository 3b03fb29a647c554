#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hps/error.hpp"
#include "hps/polynomial.hpp"
#include "hps/rational.hpp"

namespace hps {

/// Open interval (low, high) holding exactly one real root of a polynomial.
struct RootInterval {
    Rational low;
    Rational high;

    [[nodiscard]] Rational width() const { return high - low; }
    [[nodiscard]] Rational midpoint() const { return (low + high) / 2; }
    [[nodiscard]] bool contains(const Rational& x) const { return low < x && x < high; }
};

/// Sturm chain p, p', -rem(p, p'), ... of a nonconstant polynomial.
inline std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
    if (p.degree() < 1) {
        throw DomainError("Sturm chain of a constant polynomial");
    }
    std::vector<RationalPolynomial> chain{p, p.derivative()};
    while (true) {
        auto rem = divmod(chain[chain.size() - 2], chain.back()).second;
        if (rem.is_zero()) {
            break;
        }
        chain.push_back(-rem);
    }
    return chain;
}

inline int sign_of(const Rational& x) { return sgn(x); }

/// Sign changes of the chain evaluated at x, zeros skipped.
inline std::size_t sign_variations(const std::vector<RationalPolynomial>& chain, const Rational& x) {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& q : chain) {
        const int s = sign_of(q.evaluate(x));
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

/// Number of distinct real roots in the half-open interval (a, b].
inline std::size_t count_roots(const std::vector<RationalPolynomial>& chain, const Rational& a,
                               const Rational& b) {
    const auto va = sign_variations(chain, a);
    const auto vb = sign_variations(chain, b);
    return va >= vb ? va - vb : 0;
}

/// Every real root lies strictly inside (-B, B).
inline Rational cauchy_bound(const RationalPolynomial& p) {
    Rational max_ratio = 0;
    const Rational& lead = p.leading();
    for (int i = 0; i < p.degree(); ++i) {
        const Rational r = abs_value(p.coefficients()[static_cast<std::size_t>(i)] / lead);
        if (r > max_ratio) {
            max_ratio = r;
        }
    }
    return max_ratio + 1;
}

/// Brackets the largest real root to within `precision` using a Sturm chain
/// of the squarefree part and exact bisection. The endpoints are never roots
/// and the squarefree part changes sign across the interval.
inline RootInterval isolate_dominant_root(const RationalPolynomial& p, const Rational& precision) {
    if (p.degree() < 1) {
        throw DomainError("root isolation needs a nonconstant polynomial");
    }
    if (precision <= 0) {
        throw DomainError("root isolation precision must be positive");
    }
    const RationalPolynomial sf = squarefree_part(p);
    const auto chain = sturm_chain(sf);
    const Rational bound = cauchy_bound(sf);
    Rational lo = -bound;
    Rational hi = bound;
    if (count_roots(chain, lo, hi) == 0) {
        throw DomainError("polynomial " + p.to_string() + " has no real root");
    }

    // Invariant: the largest root lies in (lo, hi), neither endpoint is a root.
    while (hi - lo > precision || count_roots(chain, lo, hi) > 1) {
        const Rational mid = (lo + hi) / 2;
        if (sf.evaluate(mid) == 0) {
            if (count_roots(chain, mid, hi) == 0) {
                // mid is the largest root itself; shrink a symmetric window around it.
                Rational delta = precision < (hi - mid) ? Rational(precision / 2) : Rational((hi - mid) / 2);
                while (count_roots(chain, mid - delta, mid + delta) != 1 || sf.evaluate(mid - delta) == 0 ||
                       sf.evaluate(mid + delta) == 0) {
                    delta /= 2;
                }
                return {mid - delta, mid + delta};
            }
            lo = mid;
            // Step off the root so lo stays a non-root.
            Rational step = (hi - lo) / 4;
            while (sf.evaluate(lo + step) == 0 || count_roots(chain, lo + step, hi) == 0) {
                step /= 2;
            }
            lo += step;
            continue;
        }
        if (count_roots(chain, mid, hi) >= 1) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

inline RootInterval isolate_dominant_root(const IntPolynomial& p, const Rational& precision) {
    return isolate_dominant_root(to_rational(p), precision);
}

/// "(low, high) ~ midpoint": exact endpoints, decimal midpoint.
inline std::string describe(const RootInterval& r, unsigned digits) {
    return "(" + r.low.get_str() + ", " + r.high.get_str() + ") ~ " + to_decimal(r.midpoint(), digits);
}

} // namespace hps
