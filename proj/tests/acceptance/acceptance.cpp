// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hps/census.hpp"
#include "hps/cli.hpp"
#include "hps/hpt.hpp"
#include "hps/matrix.hpp"
#include "hps/polytope.hpp"
#include "hps/recurrence.hpp"
#include "hps/reference_tables.hpp"
#include "hps/roots.hpp"

using namespace hps;
using VC = VertexClass;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

constexpr auto kHyp = MosaicMode::Hyperbolic_4_3_3_5;
constexpr auto kEuc = MosaicMode::Euclidean_4_3_3_4;

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) {
            fields.push_back(f);
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

// Runs the CLI and compares its CSV against a reference table (letters + "s").
template <std::size_t N>
Outcome table_via_cli(const std::vector<std::string>& args, const std::array<reference::TableRow, N>& table,
                      const std::string& suffix) {
    Outcome o;
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    o.require(code == 0, "exit code " + std::to_string(code));
    const auto rows = csv_rows(out.str());
    o.require(rows.size() == 12, "expected header + 11 rows, got " + std::to_string(rows.size()));
    if (!o.ok) {
        return o;
    }
    const auto& header = rows[0];
    std::size_t compared = 0;
    for (const auto& trow : table) {
        const std::string col = std::string(trow.letter) + suffix;
        const auto it = std::find(header.begin(), header.end(), col);
        o.require(it != header.end(), "missing column " + col);
        if (it == header.end()) {
            return o;
        }
        const auto j = static_cast<std::size_t>(it - header.begin());
        for (std::size_t n = 0; n < reference::kLevels; ++n) {
            const std::string want(trow.values[n]);
            o.require(rows[n + 1][j] == want, col + "_" + std::to_string(n) + " = " + rows[n + 1][j] + ", want " + want);
            ++compared;
        }
    }
    if (o.ok) {
        o.detail = std::to_string(compared) + " entries exact";
    }
    return o;
}

Outcome criterion_counts_table() {
    return table_via_cli({"census", "--mode", "hyperbolic", "--levels", "10"}, reference::kVertexCounts, "");
}

Outcome criterion_values_table() {
    return table_via_cli({"sums", "--levels", "10"}, reference::kValueSums, "_hat");
}

Outcome criterion_euclidean() {
    Outcome o;
    const auto counts = census_series(kEuc, 15);
    const auto sums = value_sums_series(kEuc, 15);
    for (unsigned n = 0; n <= 15; ++n) {
        o.require(total_value(sums[n]) == pow_integer(4, n), "value total at n=" + std::to_string(n));
        if (n >= 1) {
            o.require(total_vertices(counts[n]) == binomial(n + 3, 3), "vertex total at n=" + std::to_string(n));
        }
        for (auto cls : kEuclideanAbsent) {
            o.require(counts[n][cls] == 0 && sums[n][cls] == 0,
                      "class " + std::string(class_name(cls)) + " nonzero at n=" + std::to_string(n));
        }
    }
    const auto report = verify(VerifyGroup::Tables);
    bool noted = false;
    for (const auto& note : report.notes()) {
        noted = noted || note.find("(n+1)(n+2)/2") != std::string::npos;
    }
    o.require(noted, "verification report lacks the classical-count note");
    if (o.ok) {
        o.detail = "4^n values, binomial(n+3,3) vertices, zero classes stay zero for n<=15; discrepancy noted";
    }
    return o;
}

IntPolynomial product(const std::vector<IntPolynomial>& factors) {
    IntPolynomial p = IntPolynomial::constant(1);
    for (const auto& f : factors) {
        p = poly_mul(p, f);
    }
    return p;
}

Outcome criterion_count_polynomial() {
    Outcome o;
    const auto mp = to_integer(min_poly(coefficient_matrix(Tally::Counts)));
    o.require(mp == reference::count_min_poly(), "min poly " + mp.to_string());
    o.require(product(reference::count_factors()) == reference::count_min_poly(), "factor product differs");
    if (o.ok) {
        o.detail = mp.to_string();
    }
    return o;
}

Outcome criterion_value_polynomial() {
    Outcome o;
    const auto m = coefficient_matrix(Tally::Values);
    const auto cp = to_integer(char_poly(m));
    const auto mp = to_integer(min_poly(m));
    o.require(cp == reference::value_char_poly(), "char poly " + cp.to_string());
    o.require(mp == reference::value_char_poly(), "min poly " + mp.to_string());
    o.require(product(reference::value_factors()) == reference::value_char_poly(), "factor product differs");
    if (o.ok) {
        o.detail = cp.to_string();
    }
    return o;
}

Outcome criterion_recurrences() {
    Outcome o;
    constexpr unsigned kTo = 20;
    constexpr unsigned kFit = 30;
    const auto counts = census_series(kHyp, kFit);
    const auto sums = value_sums_series(kHyp, kFit);
    const std::vector<VC> all{VC::A, VC::B, VC::C, VC::D, VC::E, VC::F, VC::G, VC::H, VC::K, VC::One};
    const std::vector<VC> a_to_e{VC::A, VC::B, VC::C, VC::D, VC::E};
    const std::vector<VC> a_b{VC::A, VC::B};
    std::size_t checked = 0;
    const auto run = [&](const reference::StatedRecurrence& rec, const std::vector<VC>& classes, bool values,
                         bool with_total) {
        std::vector<Rational> c;
        for (std::size_t i = 0; i < rec.order; ++i) {
            c.emplace_back(rec.coeffs[i]);
        }
        const RecurrenceCoeffs coeffs(c);
        const auto charpoly = coeffs.characteristic_polynomial();
        std::vector<std::pair<std::string, std::vector<Integer>>> targets;
        for (auto cls : classes) {
            std::vector<Integer> t;
            for (unsigned n = 0; n <= kFit; ++n) {
                t.push_back(values ? sums[n][cls] : counts[n][cls]);
            }
            targets.emplace_back(std::string(class_letter(cls)), std::move(t));
        }
        if (with_total) {
            std::vector<Integer> t;
            for (unsigned n = 0; n <= kFit; ++n) {
                t.push_back(values ? total_value(sums[n]) : total_vertices(counts[n]));
            }
            targets.emplace_back("s", std::move(t));
        }
        const long first = static_cast<long>(rec.from_index - rec.order);
        for (const auto& [name, t] : targets) {
            const auto full = Sequence::from_integers(0, t);
            o.require(verify_recurrence(full.slice(first, kTo), coeffs),
                      std::string(rec.label) + " fails on " + name);
            const auto fit = find_minimal_recurrence(full.slice(1, kFit));
            o.require(divides(fit.characteristic_polynomial(), charpoly),
                      std::string(rec.label) + ": fitted recurrence of " + name + " does not divide");
            ++checked;
        }
    };
    run(reference::kCountsAll, all, false, true);
    run(reference::kCountsAtoE, a_to_e, false, false);
    run(reference::kCountsAB, a_b, false, false);
    run(reference::kValuesAll, all, true, true);
    run(reference::kValuesAtoE, a_to_e, true, false);
    run(reference::kValuesAB, a_b, true, false);
    if (o.ok) {
        o.detail = std::to_string(checked) + " sequence/recurrence pairs verified to n=20, fitted polynomials divide";
    }
    return o;
}

Outcome criterion_growth() {
    Outcome o;
    const Rational eps(1, 10000000);
    const auto count_root = isolate_dominant_root(reference::count_factors()[3], eps);
    const auto value_root = isolate_dominant_root(reference::value_factors()[3], eps);
    o.require(interval_within(count_root, Rational(112763, 1000), Rational(5, 10000)),
              "counts root " + describe(count_root, 6));
    o.require(interval_within(value_root, Rational(11889, 100), Rational(5, 1000)),
              "values root " + describe(value_root, 6));
    const auto c = census_series(kHyp, 25);
    const auto v = value_sums_series(kHyp, 25);
    const Rational tol(1, 1000000);
    const Rational rs = make_rational(total_vertices(c[25]), total_vertices(c[24]));
    const Rational rv = make_rational(total_value(v[25]), total_value(v[24]));
    o.require(rs > count_root.low - tol && rs < count_root.high + tol, "s25/s24 = " + to_decimal(rs, 9));
    o.require(rv > value_root.low - tol && rv < value_root.high + tol, "s_hat25/s_hat24 = " + to_decimal(rv, 9));
    if (o.ok) {
        o.detail = "roots ~ " + to_decimal(count_root.midpoint(), 6) + ", " + to_decimal(value_root.midpoint(), 6) +
                   "; ratios " + to_decimal(rs, 9) + ", " + to_decimal(rv, 9);
    }
    return o;
}

Outcome criterion_six_hundred_cell() {
    Outcome o;
    const Polytope p = build_polytope(PolytopeName::SixHundredCell);
    const auto s = incidence_stats(p);
    o.require(s.vertices == 120 && s.edges == 720 && s.triangles == 1200 && s.tetrahedra == 600, "V/E/F/C");
    o.require(s.edges_per_vertex == 12 && s.triangles_per_vertex == 30 && s.tetrahedra_per_vertex == 20,
              "per-vertex incidences");
    o.require(s.triangles_per_edge == 5 && s.tetrahedra_per_edge == 5, "per-edge incidences");
    o.require(s.vertex_figure.is_icosahedron, "vertex figure");
    const std::vector<std::string> want{"H=12,K=107", "G=5,H=12,K=101", "F=2,G=6,H=12,K=97", "F=4,G=6,H=12,K=94"};
    for (std::size_t m = 1; m <= 4; ++m) {
        const auto all = classify_all(p, m);
        o.require(all.uniform(), "m=" + std::to_string(m) + " not uniform");
        o.require(all.counts.to_string() == want[m - 1], "m=" + std::to_string(m) + ": " + all.counts.to_string());
    }
    if (o.ok) {
        o.detail = "120/720/1200/600, icosahedral vertex figure, uniform classification for m=1..4";
    }
    return o;
}

Outcome criterion_icosahedron() {
    Outcome o;
    const Polytope p = build_polytope(PolytopeName::Icosahedron);
    const std::vector<std::string> want{"D=5,E=6", "C=2,D=4,E=4", "C=3,D=3,E=3"};
    std::vector<ClassificationCounts> by_seed;
    for (std::size_t m = 1; m <= 3; ++m) {
        const auto all = classify_all(p, m);
        o.require(all.uniform(), "m=" + std::to_string(m) + " not uniform");
        o.require(all.counts.to_string() == want[m - 1], "m=" + std::to_string(m) + ": " + all.counts.to_string());
        by_seed.push_back(all.counts);
    }
    const auto m = coefficient_matrix(Tally::Counts);
    const std::vector<VC> classes{VC::C, VC::D, VC::E};
    const std::vector<unsigned> incoming{3, 2, 1};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const Rational want_coeff =
                make_rational(static_cast<long>(by_seed[incoming[i] - 1].get(classes[j])), incoming[j]);
            o.require(m(matrix_index(classes[j]), matrix_index(classes[i])) == want_coeff,
                      std::string(class_name(classes[i])) + "->" + std::string(class_name(classes[j])) +
                          " coefficient");
        }
    }
    if (o.ok) {
        o.detail = "D=5,E=6 / C=2,D=4,E=4 / C=3,D=3,E=3, consistent with the c/d/e rows";
    }
    return o;
}

Outcome criterion_hpt() {
    Outcome o;
    const auto rows = hpt_rows(5, 10);
    const auto counts = census_series(kHyp, 10);
    const auto sums = value_sums_series(kHyp, 10);
    for (unsigned n = 2; n <= 10; ++n) {
        const auto rc = row_census(rows[n]);
        o.require(Integer(6 * rc.count_a) == counts[n][VC::A] && Integer(6 * rc.count_b) == counts[n][VC::B] &&
                      6 * rc.sum_a == sums[n][VC::A] && 6 * rc.sum_b == sums[n][VC::B],
                  "q=5 row " + std::to_string(n));
    }
    const auto pascal = hpt_rows(4, 20);
    for (unsigned n = 0; n <= 20; ++n) {
        const auto v = pascal[n].values();
        Integer sum = 0;
        bool binomial_row = v.size() == n + 1;
        for (unsigned k = 0; binomial_row && k <= n; ++k) {
            binomial_row = v[k] == binomial(n, k);
            sum += v[k];
        }
        o.require(binomial_row && sum == pow_integer(2, n), "q=4 row " + std::to_string(n));
    }
    if (o.ok) {
        o.detail = "q=5 rows 2..10 match a,b,a_hat,b_hat; q=4 rows 0..20 binomial";
    }
    return o;
}

Outcome criterion_integrality() {
    Outcome o;
    try {
        const auto c = census_at(kHyp, 1000);
        o.detail = "level 1000 reached, s_1000 has " + std::to_string(total_vertices(c).get_str().size()) + " digits";
    } catch (const InvariantViolation& e) {
        o.require(false, e.what());
    }
    return o;
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0: no limit
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "vertex count table via census CLI", 1.0, criterion_counts_table},
        {2, "value sum table via sums CLI", 1.0, criterion_values_table},
        {3, "Euclidean restriction", 0, criterion_euclidean},
        {4, "counts minimal polynomial and factors", 0, criterion_count_polynomial},
        {5, "values characteristic polynomial and factors", 0, criterion_value_polynomial},
        {6, "stated recurrences and fitted divisors", 0, criterion_recurrences},
        {7, "growth ratios", 5.0, criterion_growth},
        {8, "600-cell model and classification", 30.0, criterion_six_hundred_cell},
        {9, "icosahedron classification", 0, criterion_icosahedron},
        {10, "triangle rows against the census", 0, criterion_hpt},
        {11, "integrality to level 1000", 10.0, criterion_integrality},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
            o.ok = false;
            o.detail += " (over the " + std::to_string(c.limit_seconds).substr(0, 4) + " s limit)";
        }
        failures += o.ok ? 0 : 1;
        std::ostringstream t;
        t.precision(3);
        t << std::fixed << secs;
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << o.detail << " [" << t.str()
                  << " s]\n";
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
