#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hps/census.hpp"

// Published level tables for levels 0..10, kept as decimal strings so the
// 13-14 digit entries stay exact.
namespace hps::reference {

inline constexpr std::size_t kLevels = 11;

struct TableRow {
    std::string_view letter;
    std::array<std::string_view, kLevels> values;
};

/// Vertex counts per class, then v_n and s_n.
inline constexpr std::array<TableRow, 11> kVertexCounts = {{
    {"a", {"0", "0", "6", "12", "24", "54", "132", "336", "870", "2268", "5928"}},
    {"b", {"0", "0", "0", "6", "24", "72", "198", "528", "1392", "3654", "9576"}},
    {"c", {"0", "0", "0", "4", "12", "36", "136", "696", "4512", "33004", "253260"}},
    {"d", {"0", "0", "0", "0", "12", "96", "708", "5388", "41868", "328116", "2579232"}},
    {"e", {"0", "0", "0", "0", "12", "156", "1428", "11808", "94488", "747936", "5899092"}},
    {"f", {"0", "0", "0", "0", "1", "4", "16", "86", "1111", "70970", "7610192"}},
    {"g", {"0", "0", "0", "0", "0", "6", "72", "1702", "137462", "15061942", "1694955086"}},
    {"h", {"0", "0", "0", "0", "0", "12", "774", "79254", "8862504", "998747934", "112617248352"}},
    {"k", {"0", "0", "0", "0", "0", "94", "12228", "1395058", "157449038", "17755598218", "2002190230214"}},
    {"v", {"1", "4", "4", "4", "4", "4", "4", "4", "4", "4", "4"}},
    {"s", {"1", "4", "10", "26", "89", "534", "15696", "1494860", "166593249", "18770594046", "2116518790936"}},
}};

/// Value sums per class, then the level total. The value sum of class One
/// is not tabulated.
inline constexpr std::array<TableRow, 10> kValueSums = {{
    {"a", {"0", "0", "12", "36", "108", "348", "1164", "3948", "13452", "45900", "156684"}},
    {"b", {"0", "0", "0", "12", "60", "228", "804", "2772", "9492", "32436", "110772"}},
    {"c", {"0", "0", "0", "24", "144", "840", "5808", "48552", "458736", "4588008", "46916592"}},
    {"d", {"0", "0", "0", "0", "96", "1296", "14400", "152592", "1592448", "16530384", "171272832"}},
    {"e", {"0", "0", "0", "0", "72", "1248", "15192", "166176", "1753080", "18264480", "189472440"}},
    {"f", {"0", "0", "0", "0", "24", "240", "2280", "26880", "667944", "51411168", "5797305000"}},
    {"g", {"0", "0", "0", "0", "0", "240", "5976", "255936", "24140328", "2793536160", "331243298952"}},
    {"h", {"0", "0", "0", "0", "0", "360", "38400", "4458168", "528618816", "62831416920", "7469847072960"}},
    {"k", {"0", "0", "0", "0", "0", "2256", "323592", "39296736", "4682378232", "556809369792",
           "66200381333976"}},
    {"s", {"1", "4", "16", "76", "508", "7060", "407620", "44411764", "5239632532", "622525195252",
           "74007676940212"}},
}};

inline Integer entry(const TableRow& row, std::size_t level) { return Integer(std::string(row.values.at(level))); }

inline IntPolynomial from_descending(std::span<const long> descending) {
    std::vector<Integer> c;
    c.reserve(descending.size());
    for (auto it = descending.rbegin(); it != descending.rend(); ++it) {
        c.emplace_back(*it);
    }
    return IntPolynomial(std::move(c));
}

/// Minimal polynomial of the count matrix, descending coefficients.
inline constexpr std::array<long, 10> kCountMinPoly = {1, -128, 1795, -8837, 19239, -19239, 8837, -1795, 128, -1};

/// Printed factorisation of the count minimal polynomial (descending coefficients).
inline constexpr std::array<std::array<long, 5>, 4> kCountFactors = {{
    {1, -1, 0, 0, 0},
    {1, -3, 1, 0, 0},
    {1, -8, 1, 0, 0},
    {1, -116, 366, -116, 1},
}};
inline constexpr std::array<int, 4> kCountFactorDegrees = {1, 2, 2, 4};

/// Characteristic (= minimal) polynomial of the value matrix, descending.
inline constexpr std::array<long, 11> kValueCharPoly = {1,       -147,    3635,    -36277, 175292, -445156,
                                                        608920,  -438532, 151320,  -19344, 288};

inline constexpr std::array<std::array<long, 5>, 4> kValueFactors = {{
    {1, -1, 0, 0, 0},
    {1, -4, 2, 0, 0},
    {1, -13, 28, -6, 0},
    {1, -129, 1214, -1428, 24},
}};
inline constexpr std::array<int, 4> kValueFactorDegrees = {1, 2, 3, 4};

inline IntPolynomial count_min_poly() { return from_descending(kCountMinPoly); }
inline IntPolynomial value_char_poly() { return from_descending(kValueCharPoly); }

inline std::vector<IntPolynomial> count_factors() {
    std::vector<IntPolynomial> out;
    for (std::size_t i = 0; i < kCountFactors.size(); ++i) {
        out.push_back(from_descending(std::span(kCountFactors[i]).first(kCountFactorDegrees[i] + 1)));
    }
    return out;
}

inline std::vector<IntPolynomial> value_factors() {
    std::vector<IntPolynomial> out;
    for (std::size_t i = 0; i < kValueFactors.size(); ++i) {
        out.push_back(from_descending(std::span(kValueFactors[i]).first(kValueFactorDegrees[i] + 1)));
    }
    return out;
}

/// Recurrence coefficients c_1..c_r in x_n = sum c_i x_{n-i}, with the first
/// index n the recurrence is claimed from.
struct StatedRecurrence {
    std::string_view label;
    std::array<long, 10> coeffs;
    std::size_t order;
    unsigned from_index;
};

inline constexpr StatedRecurrence kCountsAll{
    "counts order 9", {128, -1795, 8837, -19239, 19239, -8837, 1795, -128, 1, 0}, 9, 10};
inline constexpr StatedRecurrence kCountsAtoE{"counts order 5", {12, -37, 37, -12, 1}, 5, 6};
inline constexpr StatedRecurrence kCountsAB{"counts order 3", {4, -4, 1}, 3, 4};
inline constexpr StatedRecurrence kValuesAll{
    "values order 10", {147, -3635, 36277, -175292, 445156, -608920, 438532, -151320, 19344, -288}, 10, 11};
inline constexpr StatedRecurrence kValuesAtoE{"values order 6", {18, -99, 226, -224, 92, -12}, 6, 7};
inline constexpr StatedRecurrence kValuesAB{"values order 3", {5, -6, 2}, 3, 4};

/// Growth ratios quoted to three and two decimals.
inline constexpr std::string_view kCountGrowth = "112.763";
inline constexpr std::string_view kValueGrowth = "118.89";

} // namespace hps::reference
