#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hps/error.hpp"
#include "hps/polynomial.hpp"
#include "hps/rational.hpp"

namespace hps {

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
        cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) {
                throw DimensionError("ragged matrix literal");
            }
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] T trace() const {
        require_square("trace");
        T t(0);
        for (std::size_t i = 0; i < rows_; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    [[nodiscard]] std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) {
            throw DimensionError("vector length " + std::to_string(v.size()) + " does not match " +
                                 std::to_string(cols_) + " columns");
        }
        std::vector<T> out(rows_, T(0));
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                if ((*this)(r, c) != 0) {
                    out[r] += (*this)(r, c) * v[c];
                }
            }
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw DimensionError("matrix product shape mismatch");
        }
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    out(i, j) += a(i, k) * b(k, j);
                }
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    void require_square(const char* what) const {
        if (!is_square()) {
            throw DimensionError(std::string(what) + ": matrix is " + std::to_string(rows_) + "x" +
                                 std::to_string(cols_) + ", expected square");
        }
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

/// Monic det(xI - m) by Faddeev-LeVerrier:
///   N_1 = I, c_{n-k} = -tr(m N_k) / k, N_{k+1} = m N_k + c_{n-k} I.
inline RationalPolynomial char_poly(const RationalMatrix& m) {
    m.require_square("char_poly");
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    RationalMatrix aux = RationalMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        RationalMatrix product = m * aux;
        const Rational ck = -product.trace() / Rational(static_cast<unsigned long>(k));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) {
            product(i, i) += ck;
        }
        aux = std::move(product);
    }
    return RationalPolynomial(std::move(c));
}

namespace detail {

// Monic minimal polynomial of the Krylov sequence v, m v, m^2 v, ...
// Each iterate is reduced against the earlier ones while tracking the
// combination as a polynomial in m; the first iterate that reduces to zero
// yields the annihilator.
inline RationalPolynomial krylov_annihilator(const RationalMatrix& m, std::vector<Rational> v) {
    struct Pivoted {
        std::vector<Rational> vec;
        RationalPolynomial poly;
        std::size_t pivot;
    };
    std::vector<Pivoted> basis;
    const std::size_t n = m.rows();
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Rational> cur = v;
        RationalPolynomial cur_poly = RationalPolynomial::monomial(Rational(1), k);
        for (const auto& b : basis) {
            if (cur[b.pivot] == 0) {
                continue;
            }
            const Rational factor = cur[b.pivot] / b.vec[b.pivot];
            for (std::size_t i = 0; i < n; ++i) {
                cur[i] -= factor * b.vec[i];
            }
            cur_poly = cur_poly - factor * b.poly;
        }
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (cur[i] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) {
            return make_monic(cur_poly);
        }
        basis.push_back({std::move(cur), std::move(cur_poly), pivot});
        v = m.apply(v);
    }
    throw InvariantViolation("Krylov sequence did not become dependent within n+1 steps");
}

} // namespace detail

/// Monic minimal polynomial: lcm of the annihilators of the standard basis vectors.
inline RationalPolynomial min_poly(const RationalMatrix& m) {
    m.require_square("min_poly");
    const std::size_t n = m.rows();
    RationalPolynomial acc = RationalPolynomial::constant(Rational(1));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> e(n, Rational(0));
        e[j] = 1;
        acc = lcm(acc, detail::krylov_annihilator(m, std::move(e)));
    }
    return acc;
}

} // namespace hps
