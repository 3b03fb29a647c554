#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hps/error.hpp"
#include "hps/matrix.hpp"
#include "hps/rational.hpp"

namespace hps {

/// Vertex classes of the simplex. One/A/B sit on the edges of a level
/// tetrahedron, C/D/E inside its faces and F/G/H/K in its interior.
enum class VertexClass { One, A, B, C, D, E, F, G, H, K };

inline constexpr std::size_t kClassCount = 10;

/// Row/column order of the coefficient matrices: a, b, c, d, e, f, g, h, k, v.
inline constexpr std::array<VertexClass, kClassCount> kMatrixOrder = {
    VertexClass::A, VertexClass::B, VertexClass::C, VertexClass::D, VertexClass::E,
    VertexClass::F, VertexClass::G, VertexClass::H, VertexClass::K, VertexClass::One};

constexpr std::size_t matrix_index(VertexClass cls) {
    return cls == VertexClass::One ? 9 : static_cast<std::size_t>(cls) - 1;
}

constexpr std::string_view class_name(VertexClass cls) {
    constexpr std::array<std::string_view, kClassCount> names = {"1", "A", "B", "C", "D",
                                                                 "E", "F", "G", "H", "K"};
    return names[static_cast<std::size_t>(cls)];
}

/// Lower-case sequence letter used in tables: a..k, and v for class One.
constexpr std::string_view class_letter(VertexClass cls) {
    constexpr std::array<std::string_view, kClassCount> letters = {"v", "a", "b", "c", "d",
                                                                   "e", "f", "g", "h", "k"};
    return letters[static_cast<std::size_t>(cls)];
}

enum class MosaicMode { Hyperbolic_4_3_3_5, Euclidean_4_3_3_4 };

constexpr std::string_view mode_name(MosaicMode mode) {
    return mode == MosaicMode::Hyperbolic_4_3_3_5 ? "hyperbolic" : "euclidean";
}

/// Counts of vertices per class, or sums of the vertex values per class.
enum class Tally { Counts, Values };

/// Classes that cannot occur in the Euclidean simplex.
inline constexpr std::array<VertexClass, 6> kEuclideanAbsent = {VertexClass::B, VertexClass::D, VertexClass::E,
                                                                VertexClass::G, VertexClass::H, VertexClass::K};

constexpr bool absent_in(MosaicMode mode, VertexClass cls) {
    if (mode == MosaicMode::Hyperbolic_4_3_3_5) {
        return false;
    }
    for (auto c : kEuclideanAbsent) {
        if (c == cls) {
            return true;
        }
    }
    return false;
}

/// One exact integer per vertex class, stored in matrix order.
class ClassVector {
public:
    ClassVector() { values_.fill(Integer(0)); }

    Integer& operator[](VertexClass cls) { return values_[matrix_index(cls)]; }
    const Integer& operator[](VertexClass cls) const { return values_[matrix_index(cls)]; }

    [[nodiscard]] const std::array<Integer, kClassCount>& in_matrix_order() const { return values_; }

    [[nodiscard]] Integer sum() const {
        Integer s = 0;
        for (const auto& v : values_) {
            s += v;
        }
        return s;
    }

    [[nodiscard]] std::vector<Rational> as_rational_vector() const {
        std::vector<Rational> out;
        out.reserve(kClassCount);
        for (const auto& v : values_) {
            out.emplace_back(v);
        }
        return out;
    }

    friend bool operator==(const ClassVector& a, const ClassVector& b) { return a.values_ == b.values_; }

private:
    std::array<Integer, kClassCount> values_;
};

/// The per-class tally of one level of the simplex.
template <Tally K>
struct LevelTally {
    unsigned level = 0;
    MosaicMode mode = MosaicMode::Hyperbolic_4_3_3_5;
    ClassVector data;

    const Integer& operator[](VertexClass cls) const { return data[cls]; }

    friend bool operator==(const LevelTally&, const LevelTally&) = default;
};

using LevelCensus = LevelTally<Tally::Counts>;
using LevelValueSums = LevelTally<Tally::Values>;

namespace detail {

inline Integer exact_div(const Integer& numerator, unsigned long divisor, const char* row, unsigned level) {
    if (mpz_divisible_ui_p(numerator.get_mpz_t(), divisor) == 0) {
        throw InvariantViolation(std::string("inexact division by ") + std::to_string(divisor) + " in row " +
                                 row + " advancing from level " + std::to_string(level) + ": numerator " +
                                 numerator.get_str());
    }
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), numerator.get_mpz_t(), divisor);
    return q;
}

template <Tally K>
void require_euclidean_closure(const LevelTally<K>& t) {
    if (t.mode != MosaicMode::Euclidean_4_3_3_4) {
        return;
    }
    for (auto cls : kEuclideanAbsent) {
        if (t[cls] != 0) {
            throw InvariantViolation("Euclidean level " + std::to_string(t.level) + " has nonzero class " +
                                     std::string(class_name(cls)));
        }
    }
}

template <Tally K>
LevelTally<K> seed(MosaicMode mode, unsigned level) {
    LevelTally<K> t;
    t.level = level;
    t.mode = mode;
    t.data[VertexClass::One] = level == 0 ? 1 : 4;
    return t;
}

} // namespace detail

/// One step of the level recurrence for vertex counts. The fractional
/// coefficients are applied by forming the integer numerator first and
/// checking divisibility. In Euclidean mode the rows of the absent classes
/// are identically zero.
inline LevelCensus advance_census(const LevelCensus& c) {
    using VC = VertexClass;
    if (c.level == 0) {
        throw PreconditionError("advance_census needs level >= 1; level 1 comes from census_at");
    }
    detail::require_euclidean_closure(c);
    const Integer& a = c[VC::A];
    const Integer& b = c[VC::B];
    const Integer& cc = c[VC::C];
    const Integer& d = c[VC::D];
    const Integer& e = c[VC::E];
    const Integer& f = c[VC::F];
    const Integer& g = c[VC::G];
    const Integer& h = c[VC::H];
    const Integer& k = c[VC::K];
    const Integer& v = c[VC::One];
    const bool hyperbolic = c.mode == MosaicMode::Hyperbolic_4_3_3_5;

    LevelCensus n;
    n.level = c.level + 1;
    n.mode = c.mode;
    n.data[VC::A] = detail::exact_div(2 * a + 2 * b + 3 * v, 2, "a", c.level);
    n.data[VC::C] = detail::exact_div(2 * a + 3 * cc + 2 * d, 3, "c", c.level);
    n.data[VC::F] = detail::exact_div(cc + 4 * f + 2 * g, 4, "f", c.level);
    n.data[VC::One] = v;
    if (hyperbolic) {
        n.data[VC::B] = a + 2 * b;
        n.data[VC::D] = detail::exact_div(2 * b + 3 * cc + 4 * d + 5 * e, 2, "d", c.level);
        n.data[VC::E] = 3 * cc + 4 * d + 6 * e;
        n.data[VC::G] = detail::exact_div(d + 6 * f + 6 * g + 5 * h, 3, "g", c.level);
        n.data[VC::H] = detail::exact_div(e + 12 * (f + g + h + k), 2, "h", c.level);
        n.data[VC::K] = 94 * f + 97 * g + 101 * h + 107 * k;
    }
    return n;
}

/// One step of the level recurrence for value sums (all-integer coefficients).
inline LevelValueSums advance_value_sums(const LevelValueSums& s) {
    using VC = VertexClass;
    if (s.level == 0) {
        throw PreconditionError("advance_value_sums needs level >= 1; level 1 comes from value_sums_at");
    }
    detail::require_euclidean_closure(s);
    const Integer& a = s[VC::A];
    const Integer& b = s[VC::B];
    const Integer& c = s[VC::C];
    const Integer& d = s[VC::D];
    const Integer& e = s[VC::E];
    const Integer& f = s[VC::F];
    const Integer& g = s[VC::G];
    const Integer& h = s[VC::H];
    const Integer& k = s[VC::K];
    const Integer& v = s[VC::One];
    const bool hyperbolic = s.mode == MosaicMode::Hyperbolic_4_3_3_5;

    LevelValueSums n;
    n.level = s.level + 1;
    n.mode = s.mode;
    n.data[VC::A] = 2 * a + 2 * b + 3 * v;
    n.data[VC::C] = 2 * a + 3 * c + 2 * d;
    n.data[VC::F] = c + 4 * f + 2 * g;
    n.data[VC::One] = v;
    if (hyperbolic) {
        n.data[VC::B] = a + 2 * b;
        n.data[VC::D] = 2 * b + 3 * c + 4 * d + 5 * e;
        n.data[VC::E] = 3 * c + 4 * d + 6 * e;
        n.data[VC::G] = d + 6 * f + 6 * g + 5 * h;
        n.data[VC::H] = e + 12 * f + 12 * g + 12 * h + 12 * k;
        n.data[VC::K] = 94 * f + 97 * g + 101 * h + 107 * k;
    }
    return n;
}

inline LevelCensus advance(const LevelCensus& c) { return advance_census(c); }
inline LevelValueSums advance(const LevelValueSums& s) { return advance_value_sums(s); }

/// Levels 0..n inclusive.
template <Tally K>
std::vector<LevelTally<K>> tally_series(MosaicMode mode, unsigned n) {
    std::vector<LevelTally<K>> out;
    out.reserve(n + 1);
    out.push_back(detail::seed<K>(mode, 0));
    if (n >= 1) {
        out.push_back(detail::seed<K>(mode, 1));
    }
    while (out.size() <= n) {
        out.push_back(advance(out.back()));
    }
    return out;
}

template <Tally K>
LevelTally<K> tally_at(MosaicMode mode, unsigned n) {
    if (n == 0) {
        return detail::seed<K>(mode, 0);
    }
    auto t = detail::seed<K>(mode, 1);
    while (t.level < n) {
        t = advance(t);
    }
    return t;
}

inline LevelCensus census_at(MosaicMode mode, unsigned n) { return tally_at<Tally::Counts>(mode, n); }
inline LevelValueSums value_sums_at(MosaicMode mode, unsigned n) { return tally_at<Tally::Values>(mode, n); }

inline std::vector<LevelCensus> census_series(MosaicMode mode, unsigned n) {
    return tally_series<Tally::Counts>(mode, n);
}
inline std::vector<LevelValueSums> value_sums_series(MosaicMode mode, unsigned n) {
    return tally_series<Tally::Values>(mode, n);
}

/// s_n: number of vertices on the level (1 at level 0).
inline Integer total_vertices(const LevelCensus& c) { return c.data.sum(); }

/// Sum of all vertex values on the level.
inline Integer total_value(const LevelValueSums& s) { return s.data.sum(); }

// Per-face and per-edge views. The four faces of a level tetrahedron split
// C, D and E evenly, the six edges split A and B evenly.

template <Tally K>
Integer per_face(const LevelTally<K>& t, VertexClass cls) {
    if (cls != VertexClass::C && cls != VertexClass::D && cls != VertexClass::E) {
        throw ArgumentError("per_face is defined for classes C, D, E");
    }
    return detail::exact_div(t[cls], 4, class_letter(cls).data(), t.level);
}

template <Tally K>
Integer per_edge(const LevelTally<K>& t, VertexClass cls) {
    if (cls != VertexClass::A && cls != VertexClass::B) {
        throw ArgumentError("per_edge is defined for classes A, B");
    }
    return detail::exact_div(t[cls], 6, class_letter(cls).data(), t.level);
}

/// 10x10 matrix taking the class vector (a..k, v) of level n to level n+1.
inline RationalMatrix coefficient_matrix(Tally kind, MosaicMode mode = MosaicMode::Hyperbolic_4_3_3_5) {
    auto q = [](long num, long den) { return make_rational(num, den); };
    const bool counts = kind == Tally::Counts;
    // Counts divide each row by the number of incoming edges of that class
    // from the previous level; value sums do not.
    auto r = [&](long num, long den) { return counts ? q(num, den) : Rational(num); };
    RationalMatrix m{
        {r(2, 2), r(2, 2), 0, 0, 0, 0, 0, 0, 0, r(3, 2)},
        {1, 2, 0, 0, 0, 0, 0, 0, 0, 0},
        {r(2, 3), 0, r(3, 3), r(2, 3), 0, 0, 0, 0, 0, 0},
        {0, r(2, 2), r(3, 2), r(4, 2), r(5, 2), 0, 0, 0, 0, 0},
        {0, 0, 3, 4, 6, 0, 0, 0, 0, 0},
        {0, 0, r(1, 4), 0, 0, r(4, 4), r(2, 4), 0, 0, 0},
        {0, 0, 0, r(1, 3), 0, r(6, 3), r(6, 3), r(5, 3), 0, 0},
        {0, 0, 0, 0, r(1, 2), r(12, 2), r(12, 2), r(12, 2), r(12, 2), 0},
        {0, 0, 0, 0, 0, 94, 97, 101, 107, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    };
    if (mode == MosaicMode::Euclidean_4_3_3_4) {
        for (auto cls : kEuclideanAbsent) {
            for (std::size_t j = 0; j < kClassCount; ++j) {
                m(matrix_index(cls), j) = 0;
            }
        }
    }
    return m;
}

/// Closed subsystems of the recurrence.
enum class Block { ABV, AtoEV };

inline std::vector<VertexClass> block_classes(Block block) {
    using VC = VertexClass;
    if (block == Block::ABV) {
        return {VC::A, VC::B, VC::One};
    }
    return {VC::A, VC::B, VC::C, VC::D, VC::E, VC::One};
}

/// Submatrix of the full coefficient matrix on a closed block of classes.
inline RationalMatrix reduced_coefficient_matrix(Block block, Tally kind) {
    const RationalMatrix full = coefficient_matrix(kind);
    const auto classes = block_classes(block);
    std::array<bool, kClassCount> inside{};
    for (auto c : classes) {
        inside[matrix_index(c)] = true;
    }
    RationalMatrix m(classes.size(), classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const std::size_t row = matrix_index(classes[i]);
        for (std::size_t j = 0; j < kClassCount; ++j) {
            if (!inside[j] && full(row, j) != 0) {
                throw InvariantViolation("block is not closed under the recurrence");
            }
        }
        for (std::size_t j = 0; j < classes.size(); ++j) {
            m(i, j) = full(row, matrix_index(classes[j]));
        }
    }
    return m;
}

} // namespace hps
