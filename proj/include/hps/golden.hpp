#pragma once

#include <compare>
#include <string>

#include "hps/rational.hpp"

namespace hps {

/// a + b*phi in Q(sqrt 5), with phi^2 = phi + 1.
template <typename T>
class Golden {
public:
    Golden() = default;
    Golden(T a) : a_(std::move(a)) {}  // NOLINT: implicit embedding of the base field
    Golden(T a, T b) : a_(std::move(a)), b_(std::move(b)) {}

    static Golden phi() { return Golden(T(0), T(1)); }

    [[nodiscard]] const T& rational_part() const { return a_; }
    [[nodiscard]] const T& phi_part() const { return b_; }

    friend Golden operator+(const Golden& x, const Golden& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend Golden operator-(const Golden& x, const Golden& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend Golden operator-(const Golden& x) { return {-x.a_, -x.b_}; }

    // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
    friend Golden operator*(const Golden& x, const Golden& y) {
        const T bd = x.b_ * y.b_;
        return {x.a_ * y.a_ + bd, x.a_ * y.b_ + x.b_ * y.a_ + bd};
    }

    friend bool operator==(const Golden& x, const Golden& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    /// Exact sign of the real number a + b*phi.
    [[nodiscard]] int sign() const {
        // a + b phi = (2a + b)/2 + (b/2) sqrt 5; compare p = 2a + b against q sqrt 5, q = b.
        const T p = 2 * a_ + b_;
        const int sp = sgn(p);
        const int sq = sgn(b_);
        if (sq == 0) {
            return sp;
        }
        if (sp == 0 || sp == sq) {
            return sq;
        }
        const T lhs = p * p;
        const T rhs = 5 * b_ * b_;
        if (lhs == rhs) {
            return 0;
        }
        return lhs > rhs ? sp : sq;
    }

    friend std::strong_ordering operator<=>(const Golden& x, const Golden& y) {
        const int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    [[nodiscard]] std::string to_string() const {
        if (b_ == 0) {
            return a_.get_str();
        }
        std::string out = a_ == 0 ? "" : a_.get_str() + (b_ < 0 ? "-" : "+");
        if (a_ == 0 && b_ < 0) {
            out += "-";
        }
        const T mag = b_ < 0 ? T(-b_) : b_;
        if (mag != 1) {
            out += mag.get_str() + "*";
        }
        return out + "phi";
    }

private:
    T a_{0};
    T b_{0};
};

using GoldenNumber = Golden<Rational>;

} // namespace hps
