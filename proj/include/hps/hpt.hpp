#pragma once

#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "hps/census.hpp"
#include "hps/error.hpp"
#include "hps/rational.hpp"

namespace hps {

struct HptEntry {
    VertexClass cls = VertexClass::One;
    Integer value = 1;
    /// Indices into the previous row: two for A, one for B and wingers.
    std::vector<std::size_t> parents;
};

/// One row of the hyperbolic Pascal triangle on the square mosaic {4,q}.
/// q = 4 is the ordinary Pascal triangle.
struct HptRow {
    int q = 4;
    unsigned row_index = 0;
    std::vector<HptEntry> entries;

    [[nodiscard]] std::vector<Integer> values() const {
        std::vector<Integer> out;
        out.reserve(entries.size());
        for (const auto& e : entries) {
            out.push_back(e.value);
        }
        return out;
    }

    [[nodiscard]] std::vector<VertexClass> classes() const {
        std::vector<VertexClass> out;
        out.reserve(entries.size());
        for (const auto& e : entries) {
            out.push_back(e.cls);
        }
        return out;
    }
};

inline HptRow first_row(int q) {
    if (q < 4) {
        throw ArgumentError("hyperbolic Pascal triangles need q >= 4, got " + std::to_string(q));
    }
    return HptRow{q, 0, {HptEntry{VertexClass::One, 1, {}}}};
}

/// Builds the next row: a left winger, then for every consecutive pair of
/// parents their shared A child followed by the B children of the right
/// parent (q-4 for an A parent, q-3 for a B parent, none for a winger), then
/// a right winger.
inline HptRow next_row(const HptRow& r) {
    if (r.q < 4) {
        throw ArgumentError("hyperbolic Pascal triangles need q >= 4");
    }
    const auto& parents = r.entries;
    HptRow out{r.q, r.row_index + 1, {}};
    out.entries.push_back(HptEntry{VertexClass::One, 1, {0}});
    for (std::size_t i = 0; i + 1 < parents.size(); ++i) {
        const HptEntry& left = parents[i];
        const HptEntry& right = parents[i + 1];
        out.entries.push_back(HptEntry{VertexClass::A, left.value + right.value, {i, i + 1}});
        int b_children = 0;
        if (right.cls == VertexClass::A) {
            b_children = r.q - 4;
        } else if (right.cls == VertexClass::B) {
            b_children = r.q - 3;
        }
        for (int j = 0; j < b_children; ++j) {
            out.entries.push_back(HptEntry{VertexClass::B, right.value, {i + 1}});
        }
    }
    out.entries.push_back(HptEntry{VertexClass::One, 1, {parents.size() - 1}});
    return out;
}

/// Rows 0..n inclusive.
inline std::vector<HptRow> hpt_rows(int q, unsigned n) {
    std::vector<HptRow> rows{first_row(q)};
    rows.reserve(n + 1);
    while (rows.size() <= n) {
        rows.push_back(next_row(rows.back()));
    }
    return rows;
}

struct RowCensus {
    std::size_t count_one = 0;
    std::size_t count_a = 0;
    std::size_t count_b = 0;
    Integer sum_one = 0;
    Integer sum_a = 0;
    Integer sum_b = 0;

    [[nodiscard]] Integer total() const { return sum_one + sum_a + sum_b; }
};

inline RowCensus row_census(const HptRow& r) {
    RowCensus c;
    for (const auto& e : r.entries) {
        switch (e.cls) {
        case VertexClass::One:
            ++c.count_one;
            c.sum_one += e.value;
            break;
        case VertexClass::A:
            ++c.count_a;
            c.sum_a += e.value;
            break;
        case VertexClass::B:
            ++c.count_b;
            c.sum_b += e.value;
            break;
        default:
            throw InvariantViolation("triangle row holds a non-edge class");
        }
    }
    return c;
}

namespace detail {

inline const char* dot_color(VertexClass cls) {
    switch (cls) {
    case VertexClass::A:
        return "red";
    case VertexClass::B:
        return "cyan";
    default:
        return "grey";
    }
}

inline const char* dot_shape(VertexClass cls) {
    switch (cls) {
    case VertexClass::A:
        return "box";
    case VertexClass::B:
        return "diamond";
    default:
        return "circle";
    }
}

} // namespace detail

/// Layered DOT digraph: one rank per row, parent -> child edges.
inline std::string rows_to_dot(std::span<const HptRow> rows) {
    if (rows.empty()) {
        throw ArgumentError("rows_to_dot needs at least one row");
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].q != rows[0].q || rows[i].row_index != rows[i - 1].row_index + 1) {
            throw ArgumentError("rows_to_dot needs consecutive rows of one triangle");
        }
    }
    std::ostringstream os;
    os << "digraph hpt_4_" << rows[0].q << " {\n";
    os << "  rankdir=TB;\n";
    os << "  node [style=filled, fontname=\"Helvetica\"];\n";
    for (const auto& row : rows) {
        os << "  { rank=same;";
        for (std::size_t j = 0; j < row.entries.size(); ++j) {
            os << " r" << row.row_index << "_" << j << ";";
        }
        os << " }\n";
        for (std::size_t j = 0; j < row.entries.size(); ++j) {
            const auto& e = row.entries[j];
            os << "  r" << row.row_index << "_" << j << " [label=\"" << e.value.get_str() << "\", shape="
               << detail::dot_shape(e.cls) << ", fillcolor=" << detail::dot_color(e.cls) << ", class=\""
               << class_name(e.cls) << "\"];\n";
        }
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        for (std::size_t j = 0; j < row.entries.size(); ++j) {
            for (std::size_t p : row.entries[j].parents) {
                os << "  r" << row.row_index - 1 << "_" << p << " -> r" << row.row_index << "_" << j << ";\n";
            }
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace hps
