#pragma once

#include <cstddef>
#include <map>
#include <string_view>
#include <type_traits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hps/census.hpp"
#include "hps/hpt.hpp"
#include "hps/matrix.hpp"
#include "hps/polytope.hpp"
#include "hps/recurrence.hpp"
#include "hps/reference_tables.hpp"
#include "hps/roots.hpp"

namespace hps {

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool passed = false;
};

class VerificationReport {
public:
    void add(std::string name, std::string expected, std::string actual) {
        const bool ok = expected == actual;
        checks_.push_back({std::move(name), std::move(expected), std::move(actual), ok});
    }

    void add(std::string name, std::string expected, std::string actual, bool passed) {
        checks_.push_back({std::move(name), std::move(expected), std::move(actual), passed});
    }

    void note(std::string text) { notes_.push_back(std::move(text)); }

    [[nodiscard]] const std::vector<Check>& checks() const { return checks_; }
    [[nodiscard]] const std::vector<std::string>& notes() const { return notes_; }

    [[nodiscard]] bool passed() const {
        for (const auto& c : checks_) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : checks_) {
            n += c.passed ? 0 : 1;
        }
        return n;
    }

    [[nodiscard]] std::string render() const {
        std::ostringstream os;
        for (const auto& c : checks_) {
            os << c.name << ": expected " << c.expected << "; actual " << c.actual << "; "
               << (c.passed ? "pass" : "FAIL") << "\n";
        }
        for (const auto& n : notes_) {
            os << "note: " << n << "\n";
        }
        os << "overall: " << (passed() ? "pass" : "FAIL") << " (" << checks_.size() - failures() << "/"
           << checks_.size() << " checks)\n";
        return os.str();
    }

private:
    std::vector<Check> checks_;
    std::vector<std::string> notes_;
};

namespace detail {

template <typename Range>
std::string join(const Range& items) {
    std::string out;
    for (const auto& x : items) {
        if (!out.empty()) {
            out += ",";
        }
        if constexpr (std::is_convertible_v<decltype(x), std::string_view>) {
            out += std::string(x);
        } else {
            out += x.get_str();
        }
    }
    return out;
}

inline std::vector<Integer> class_column(const std::vector<LevelCensus>& levels, VertexClass cls) {
    std::vector<Integer> out;
    for (const auto& l : levels) {
        out.push_back(l[cls]);
    }
    return out;
}

inline std::vector<Integer> class_column(const std::vector<LevelValueSums>& levels, VertexClass cls) {
    std::vector<Integer> out;
    for (const auto& l : levels) {
        out.push_back(l[cls]);
    }
    return out;
}

inline VertexClass class_from_letter(std::string_view letter) {
    for (std::size_t i = 0; i < kClassCount; ++i) {
        const auto cls = static_cast<VertexClass>(i);
        if (class_letter(cls) == letter) {
            return cls;
        }
    }
    throw ArgumentError("unknown class letter " + std::string(letter));
}

inline RecurrenceCoeffs stated(const reference::StatedRecurrence& r) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < r.order; ++i) {
        c.emplace_back(r.coeffs[i]);
    }
    return RecurrenceCoeffs(std::move(c));
}

inline std::string product_string(const std::vector<IntPolynomial>& factors) {
    IntPolynomial p = IntPolynomial::constant(1);
    for (const auto& f : factors) {
        p = poly_mul(p, f);
    }
    return p.to_string();
}

} // namespace detail

inline void verify_tables(VerificationReport& report) {
    using VC = VertexClass;
    const auto counts = census_series(MosaicMode::Hyperbolic_4_3_3_5, 10);
    const auto sums = value_sums_series(MosaicMode::Hyperbolic_4_3_3_5, 10);

    for (const auto& row : reference::kVertexCounts) {
        std::vector<Integer> actual;
        if (row.letter == "s") {
            for (const auto& l : counts) {
                actual.push_back(total_vertices(l));
            }
        } else {
            actual = detail::class_column(counts, detail::class_from_letter(row.letter));
        }
        report.add("vertex counts " + std::string(row.letter) + "_0..10", detail::join(row.values),
                   detail::join(actual));
    }
    for (const auto& row : reference::kValueSums) {
        std::vector<Integer> actual;
        if (row.letter == "s") {
            for (const auto& l : sums) {
                actual.push_back(total_value(l));
            }
        } else {
            actual = detail::class_column(sums, detail::class_from_letter(row.letter));
        }
        report.add("value sums " + std::string(row.letter) + "_hat_0..10", detail::join(row.values),
                   detail::join(actual));
    }

    // Euclidean restriction.
    const auto e_counts = census_series(MosaicMode::Euclidean_4_3_3_4, 15);
    const auto e_sums = value_sums_series(MosaicMode::Euclidean_4_3_3_4, 15);
    std::vector<Integer> want_totals, got_totals, want_values, got_values;
    bool zero_classes = true;
    for (unsigned n = 0; n <= 15; ++n) {
        want_totals.push_back(n == 0 ? Integer(1) : binomial(n + 3, 3));
        got_totals.push_back(total_vertices(e_counts[n]));
        want_values.push_back(pow_integer(4, n));
        got_values.push_back(total_value(e_sums[n]));
        for (auto cls : kEuclideanAbsent) {
            zero_classes = zero_classes && e_counts[n][cls] == 0 && e_sums[n][cls] == 0;
        }
    }
    report.add("euclidean vertex totals n=0..15 (binomial(n+3,3))", detail::join(want_totals),
               detail::join(got_totals));
    report.add("euclidean value totals n=0..15 (4^n)", detail::join(want_values), detail::join(got_values));
    report.add("euclidean classes B,D,E,G,H,K n=0..15", "all zero", zero_classes ? "all zero" : "nonzero entry");
    report.note("the classical simplex has binomial(n+3,3) vertices on level n (e.g. 35 at n=4); "
                "(n+1)(n+2)/2 = 15 counts a level of the classical pyramid, not of the simplex");

    // Triangle rows along the edges of a level.
    const auto rows5 = hpt_rows(5, 10);
    for (unsigned n = 2; n <= 10; ++n) {
        const RowCensus rc = row_census(rows5[n]);
        const std::vector<Integer> want{counts[n][VC::A], counts[n][VC::B], sums[n][VC::A], sums[n][VC::B]};
        const std::vector<Integer> got{Integer(6 * rc.count_a), Integer(6 * rc.count_b), 6 * rc.sum_a,
                                       6 * rc.sum_b};
        report.add("triangle {4,5} row " + std::to_string(n) + " x6 (a,b,a_hat,b_hat)", detail::join(want),
                   detail::join(got));
    }
    const auto rows4 = hpt_rows(4, 20);
    bool binomial_ok = true;
    for (unsigned n = 0; n <= 20; ++n) {
        const auto values = rows4[n].values();
        Integer sum = 0;
        for (unsigned k = 0; k < values.size(); ++k) {
            binomial_ok = binomial_ok && values.size() == n + 1 && values[k] == binomial(n, k);
            sum += values[k];
        }
        binomial_ok = binomial_ok && sum == pow_integer(2, n);
    }
    report.add("triangle {4,4} rows 0..20 are binomial with sum 2^n", "true", binomial_ok ? "true" : "false");
}

inline void verify_recurrences(VerificationReport& report) {
    constexpr unsigned kVerifyTo = 20;
    constexpr unsigned kFitTo = 30;
    const auto counts = census_series(MosaicMode::Hyperbolic_4_3_3_5, kFitTo);
    const auto sums = value_sums_series(MosaicMode::Hyperbolic_4_3_3_5, kFitTo);

    std::map<std::string, std::vector<Integer>> targets;
    for (std::size_t i = 0; i < kClassCount; ++i) {
        const auto cls = kMatrixOrder[i];
        const std::string letter(class_letter(cls));
        targets[letter] = detail::class_column(counts, cls);
        targets[letter + "_hat"] = detail::class_column(sums, cls);
    }
    for (unsigned n = 0; n <= kFitTo; ++n) {
        targets["s"].push_back(total_vertices(counts[n]));
        targets["s_hat"].push_back(total_value(sums[n]));
    }

    auto run = [&](const reference::StatedRecurrence& rec, const std::vector<std::string>& names) {
        const RecurrenceCoeffs coeffs = detail::stated(rec);
        const RationalPolynomial charpoly = coeffs.characteristic_polynomial();
        const long first = static_cast<long>(rec.from_index - rec.order);
        for (const auto& name : names) {
            const auto& terms = targets.at(name);
            const Sequence window = Sequence::from_integers(0, terms).slice(first, static_cast<long>(kVerifyTo));
            report.add(std::string(rec.label) + " " + name + " n=" + std::to_string(rec.from_index) + ".." +
                           std::to_string(kVerifyTo),
                       "true", verify_recurrence(window, coeffs) ? "true" : "false");

            const Sequence fit = Sequence::from_integers(0, terms).slice(1, static_cast<long>(kFitTo));
            const RecurrenceCoeffs found = find_minimal_recurrence(fit);
            report.add(std::string(rec.label) + " " + name + " minimal recurrence (order " +
                           std::to_string(found.order()) + ") divides",
                       "true", divides(found.characteristic_polynomial(), charpoly) ? "true" : "false");
        }
    };
    const std::vector<std::string> all{"a", "b", "c", "d", "e", "f", "g", "h", "k", "v", "s"};
    const std::vector<std::string> all_hat{"a_hat", "b_hat", "c_hat", "d_hat", "e_hat", "f_hat",
                                           "g_hat", "h_hat", "k_hat", "v_hat", "s_hat"};
    run(reference::kCountsAll, all);
    run(reference::kCountsAtoE, {"a", "b", "c", "d", "e", "v"});
    run(reference::kCountsAB, {"a", "b", "v"});
    run(reference::kValuesAll, all_hat);
    run(reference::kValuesAtoE, {"a_hat", "b_hat", "c_hat", "d_hat", "e_hat", "v_hat"});
    run(reference::kValuesAB, {"a_hat", "b_hat", "v_hat"});
}

/// |root - quoted| <= tolerance for every point of the interval.
inline bool interval_within(const RootInterval& r, const Rational& quoted, const Rational& tolerance) {
    return r.low >= quoted - tolerance && r.high <= quoted + tolerance;
}

inline void verify_polynomials(VerificationReport& report) {
    const RationalMatrix counts = coefficient_matrix(Tally::Counts);
    const RationalMatrix values = coefficient_matrix(Tally::Values);
    const IntPolynomial p9 = reference::count_min_poly();
    const IntPolynomial p10 = reference::value_char_poly();

    report.add("counts minimal polynomial", p9.to_string(), to_integer(min_poly(counts)).to_string());
    report.add("counts printed factors expand", p9.to_string(), detail::product_string(reference::count_factors()));
    const IntPolynomial count_char = to_integer(char_poly(counts));
    report.add("counts characteristic polynomial = (x - 1) * minimal", poly_mul(IntPolynomial{-1, 1}, p9).to_string(),
               count_char.to_string());

    report.add("values characteristic polynomial", p10.to_string(), to_integer(char_poly(values)).to_string());
    report.add("values minimal polynomial", p10.to_string(), to_integer(min_poly(values)).to_string());
    report.add("values printed factors expand", p10.to_string(), detail::product_string(reference::value_factors()));

    const auto reduced = [&](Block block, Tally kind) {
        return to_integer(min_poly(reduced_coefficient_matrix(block, kind))).to_string();
    };
    report.add("counts block a..e,v minimal polynomial", "x^5 - 12*x^4 + 37*x^3 - 37*x^2 + 12*x - 1",
               reduced(Block::AtoEV, Tally::Counts));
    report.add("counts block a,b,v minimal polynomial", "x^3 - 4*x^2 + 4*x - 1", reduced(Block::ABV, Tally::Counts));
    report.add("values block a..e,v minimal polynomial", "x^6 - 18*x^5 + 99*x^4 - 226*x^3 + 224*x^2 - 92*x + 12",
               reduced(Block::AtoEV, Tally::Values));
    report.add("values block a,b,v minimal polynomial", "x^3 - 5*x^2 + 6*x - 2", reduced(Block::ABV, Tally::Values));

    // Growth ratios.
    const Rational precision(1, 1000000);
    const Rational ratio_slack(1, 1000000);
    const auto count_root = isolate_dominant_root(reference::count_factors()[3], precision);
    const auto value_root = isolate_dominant_root(reference::value_factors()[3], precision);
    const auto count_min_root = isolate_dominant_root(p9, precision);
    report.add("counts dominant root within 112.763 +- 0.0005", "true",
               interval_within(count_root, parse_rational(reference::kCountGrowth), Rational(5, 10000)) ? "true"
                                                                                                          : "false");
    report.add("counts dominant root of quartic equals that of the minimal polynomial", "true",
               (count_root.low < count_min_root.high && count_min_root.low < count_root.high)
                   ? "true"
                   : "false");
    report.add("values dominant root within 118.89 +- 0.005", "true",
               interval_within(value_root, parse_rational(reference::kValueGrowth), Rational(5, 1000)) ? "true"
                                                                                                        : "false");
    report.note("counts growth ratio " + describe(count_root, 6));
    report.note("values growth ratio " + describe(value_root, 6));

    const auto c = census_series(MosaicMode::Hyperbolic_4_3_3_5, 25);
    const auto v = value_sums_series(MosaicMode::Hyperbolic_4_3_3_5, 25);
    const Rational s_ratio = make_rational(total_vertices(c[25]), total_vertices(c[24]));
    const Rational sh_ratio = make_rational(total_value(v[25]), total_value(v[24]));
    report.add("s_25/s_24 within 1e-6 of the counts root", "true",
               (s_ratio > count_root.low - ratio_slack && s_ratio < count_root.high + ratio_slack) ? "true" : "false");
    report.add("s_hat_25/s_hat_24 within 1e-6 of the values root", "true",
               (sh_ratio > value_root.low - ratio_slack && sh_ratio < value_root.high + ratio_slack) ? "true"
                                                                                                      : "false");
}

inline void verify_classification(VerificationReport& report) {
    using VC = VertexClass;
    const Polytope cell = build_polytope(PolytopeName::SixHundredCell);
    const IncidenceStats s = incidence_stats(cell);
    auto num = [](std::size_t x) { return std::to_string(x); };
    report.add("600-cell V,E,F,C", "120,720,1200,600",
               num(s.vertices) + "," + num(s.edges) + "," + num(s.triangles) + "," + num(s.tetrahedra));
    report.add("600-cell per vertex edges,faces,cells", "12,30,20",
               num(s.edges_per_vertex) + "," + num(s.triangles_per_vertex) + "," + num(s.tetrahedra_per_vertex));
    report.add("600-cell per edge faces,cells", "5,5", num(s.triangles_per_edge) + "," + num(s.tetrahedra_per_edge));
    report.add("600-cell cells per face", "2", num(s.tetrahedra_per_triangle));
    report.add("600-cell vertex figure is an icosahedron", "true", s.vertex_figure.is_icosahedron ? "true" : "false");

    const std::vector<std::string> cell_expected{"H=12,K=107", "G=5,H=12,K=101", "F=2,G=6,H=12,K=97",
                                                 "F=4,G=6,H=12,K=94"};
    std::vector<ClassificationCounts> cell_counts;
    for (std::size_t m = 1; m <= 4; ++m) {
        const auto all = classify_all(cell, m);
        const std::string got = all.uniform() ? all.counts.to_string() : "non-uniform";
        report.add("600-cell m=" + num(m), cell_expected[m - 1], got + " (every one of " + num(all.cliques) + " cliques)",
                   got == cell_expected[m - 1]);
        cell_counts.push_back(all.counts);
    }

    const Polytope ico = build_polytope(PolytopeName::Icosahedron);
    const IncidenceStats is = incidence_stats(ico);
    report.add("icosahedron V,E,F", "12,30,20", num(is.vertices) + "," + num(is.edges) + "," + num(is.triangles));
    const std::vector<std::string> ico_expected{"D=5,E=6", "C=2,D=4,E=4", "C=3,D=3,E=3"};
    std::vector<ClassificationCounts> ico_counts;
    for (std::size_t m = 1; m <= 3; ++m) {
        const auto all = classify_all(ico, m);
        const std::string got = all.uniform() ? all.counts.to_string() : "non-uniform";
        report.add("icosahedron m=" + num(m), ico_expected[m - 1], got + " (every one of " + num(all.cliques) + " cliques)",
                   got == ico_expected[m - 1]);
        ico_counts.push_back(all.counts);
    }

    // Coefficient of parent class P in the row of child class Q equals
    // (children of type Q around a P vertex) / (incoming edges of a Q vertex).
    const RationalMatrix counts = coefficient_matrix(Tally::Counts);
    auto consistent = [&](const std::vector<VC>& parents, const std::vector<ClassificationCounts>& by_seed,
                          const std::vector<VC>& children, const std::vector<unsigned>& incoming) {
        bool ok = true;
        for (std::size_t p = 0; p < parents.size(); ++p) {
            // parents are listed from most to fewest incoming edges; seed size = incoming edges of the parent
            const auto& cc = by_seed[incoming[p] - 1];
            for (std::size_t q = 0; q < children.size(); ++q) {
                const Rational expected = make_rational(static_cast<long>(cc.get(children[q])), incoming[q]);
                ok = ok && counts(matrix_index(children[q]), matrix_index(parents[p])) == expected;
            }
        }
        return ok;
    };
    report.add("icosahedron counts match the C/D/E recurrence rows", "true",
               consistent({VC::C, VC::D, VC::E}, ico_counts, {VC::C, VC::D, VC::E}, {3, 2, 1}) ? "true" : "false");
    report.add("600-cell counts match the F/G/H/K recurrence rows", "true",
               consistent({VC::F, VC::G, VC::H, VC::K}, cell_counts, {VC::F, VC::G, VC::H, VC::K}, {4, 3, 2, 1})
                   ? "true"
                   : "false");
}

enum class VerifyGroup { Tables, Recurrences, Polynomials, Classification, All };

inline VerificationReport verify(VerifyGroup group) {
    VerificationReport report;
    const bool all = group == VerifyGroup::All;
    if (all || group == VerifyGroup::Tables) {
        verify_tables(report);
    }
    if (all || group == VerifyGroup::Recurrences) {
        verify_recurrences(report);
    }
    if (all || group == VerifyGroup::Polynomials) {
        verify_polynomials(report);
    }
    if (all || group == VerifyGroup::Classification) {
        verify_classification(report);
    }
    return report;
}

} // namespace hps
