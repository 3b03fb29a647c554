#include <random>

#include <gtest/gtest.h>

#include "hps/census.hpp"
#include "hps/matrix.hpp"
#include "hps/reference_tables.hpp"

using namespace hps;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> zero(0, 2);
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = zero(rng) == 0 ? Rational(0) : make_rational(coef(rng), 1 + zero(rng));
        }
    }
    return m;
}

RationalMatrix evaluate_at(const RationalPolynomial& p, const RationalMatrix& m) {
    RationalMatrix acc(m.rows(), m.cols());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        for (std::size_t k = 0; k < m.rows(); ++k) {
            acc(k, k) += p.coeff(static_cast<std::size_t>(i));
        }
    }
    return acc;
}

} // namespace

TEST(Matrix, IdentityPolynomials) {
    const auto id = RationalMatrix::identity(2);
    EXPECT_EQ(to_integer(char_poly(id)), IntPolynomial::from_descending({1, -2, 1}));
    EXPECT_EQ(to_integer(min_poly(id)), IntPolynomial({-1, 1}));
}

TEST(Matrix, NonSquareRejected) {
    const RationalMatrix m(2, 3);
    EXPECT_THROW(char_poly(m), DimensionError);
    EXPECT_THROW(min_poly(m), DimensionError);
}

TEST(Matrix, JordanBlockMinimalPolynomial) {
    const RationalMatrix j{{2, 1, 0}, {0, 2, 0}, {0, 0, 2}};
    EXPECT_EQ(to_integer(min_poly(j)), IntPolynomial::from_descending({1, -4, 4}));
    EXPECT_EQ(to_integer(char_poly(j)), IntPolynomial::from_descending({1, -6, 12, -8}));
}

TEST(Matrix, CountsMatrixMinimalPolynomial) {
    const auto m = coefficient_matrix(Tally::Counts);
    EXPECT_EQ(to_integer(min_poly(m)), reference::count_min_poly());
}

TEST(Matrix, CountsMatrixCharacteristicPolynomialHasOneExtraUnitRoot) {
    const auto m = coefficient_matrix(Tally::Counts);
    const auto cp = char_poly(m);
    EXPECT_EQ(cp.degree(), 10);
    const auto [q, r] = divmod(cp, to_rational(reference::count_min_poly()));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(q, RationalPolynomial({-1, 1}));
}

TEST(Matrix, ValuesMatrixPolynomials) {
    const auto m = coefficient_matrix(Tally::Values);
    EXPECT_EQ(to_integer(char_poly(m)), reference::value_char_poly());
    EXPECT_EQ(to_integer(min_poly(m)), reference::value_char_poly());
}

TEST(Matrix, ReducedBlocks) {
    EXPECT_EQ(to_integer(min_poly(reduced_coefficient_matrix(Block::AtoEV, Tally::Counts))),
              IntPolynomial::from_descending({1, -12, 37, -37, 12, -1}));
    EXPECT_EQ(to_integer(min_poly(reduced_coefficient_matrix(Block::ABV, Tally::Counts))),
              IntPolynomial::from_descending({1, -4, 4, -1}));
    EXPECT_EQ(to_integer(min_poly(reduced_coefficient_matrix(Block::AtoEV, Tally::Values))),
              IntPolynomial::from_descending({1, -18, 99, -226, 224, -92, 12}));
    EXPECT_EQ(to_integer(min_poly(reduced_coefficient_matrix(Block::ABV, Tally::Values))),
              IntPolynomial::from_descending({1, -5, 6, -2}));
}

TEST(Matrix, RandomMatricesMinimalDividesCharacteristic) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        const auto m = random_matrix(rng, n);
        const auto cp = char_poly(m);
        const auto mp = min_poly(m);
        ASSERT_EQ(cp.degree(), static_cast<int>(n));
        ASSERT_TRUE(cp.is_monic());
        ASSERT_TRUE(mp.is_monic());
        ASSERT_TRUE(divides(mp, cp));
        // Cayley-Hamilton and annihilation by the minimal polynomial.
        ASSERT_EQ(evaluate_at(cp, m), RationalMatrix(n, n));
        ASSERT_EQ(evaluate_at(mp, m), RationalMatrix(n, n));
    }
}

TEST(Matrix, MinimalPolynomialIsMinimalOnDiagonal) {
    const RationalMatrix d{{1, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 3}};
    EXPECT_EQ(to_integer(min_poly(d)), IntPolynomial::from_descending({1, -4, 3}));
}
