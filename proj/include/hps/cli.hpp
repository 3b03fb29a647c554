#pragma once

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hps/census.hpp"
#include "hps/hpt.hpp"
#include "hps/matrix.hpp"
#include "hps/polytope.hpp"
#include "hps/reference_tables.hpp"
#include "hps/report.hpp"
#include "hps/roots.hpp"

namespace hps::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::vector<std::string> column_names(Tally kind) {
    std::vector<std::string> cols;
    const std::string suffix = kind == Tally::Values ? "_hat" : "";
    for (auto cls : kMatrixOrder) {
        cols.push_back(std::string(class_letter(cls)) + suffix);
    }
    cols.push_back("s" + suffix);
    return cols;
}

template <Tally K>
std::vector<std::string> row_fields(const LevelTally<K>& t) {
    std::vector<std::string> f;
    for (const auto& x : t.data.in_matrix_order()) {
        f.push_back(x.get_str());
    }
    f.push_back(t.data.sum().get_str());
    return f;
}

template <Tally K>
void write_table(const std::vector<LevelTally<K>>& rows, const std::string& format, std::ostream& out) {
    const auto cols = column_names(K);
    if (format == "csv") {
        out << "level";
        for (const auto& c : cols) {
            out << "," << c;
        }
        out << "\n";
        for (const auto& r : rows) {
            out << r.level;
            for (const auto& f : row_fields(r)) {
                out << "," << f;
            }
            out << "\n";
        }
    } else if (format == "json") {
        out << "{\"mode\":\"" << mode_name(rows.front().mode) << "\",\"kind\":\""
            << (K == Tally::Counts ? "counts" : "values") << "\",\"levels\":[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out << (i ? "," : "") << "{\"level\":" << rows[i].level;
            const auto fields = row_fields(rows[i]);
            for (std::size_t j = 0; j < cols.size(); ++j) {
                out << ",\"" << cols[j] << "\":" << fields[j];
            }
            out << "}";
        }
        out << "]}\n";
    } else {
        std::vector<std::vector<std::string>> grid{{"level"}};
        grid[0].insert(grid[0].end(), cols.begin(), cols.end());
        for (const auto& r : rows) {
            grid.push_back({std::to_string(r.level)});
            const auto fields = row_fields(r);
            grid.back().insert(grid.back().end(), fields.begin(), fields.end());
        }
        std::vector<std::size_t> width(grid[0].size(), 0);
        for (const auto& line : grid) {
            for (std::size_t j = 0; j < line.size(); ++j) {
                width[j] = std::max(width[j], line[j].size());
            }
        }
        for (const auto& line : grid) {
            for (std::size_t j = 0; j < line.size(); ++j) {
                out << (j ? "  " : "") << std::setw(static_cast<int>(width[j])) << line[j];
            }
            out << "\n";
        }
    }
}

inline MosaicMode parse_mode(const std::string& s) {
    return s == "euclidean" ? MosaicMode::Euclidean_4_3_3_4 : MosaicMode::Hyperbolic_4_3_3_5;
}

/// Decimal places needed to show a value to within `precision`.
inline unsigned digits_for(const Rational& precision) {
    unsigned d = 0;
    Rational step = 1;
    while (step > precision && d < 60) {
        step /= 10;
        ++d;
    }
    return d;
}

inline std::string factor_product(const std::vector<IntPolynomial>& factors) {
    std::string out;
    for (const auto& f : factors) {
        out += "(" + f.to_string() + ")";
    }
    return out;
}

inline int spectral(const std::string& kind, const std::string& precision_text, std::ostream& out) {
    const Rational precision = parse_rational(precision_text);
    if (precision <= 0) {
        throw ArgumentError("--precision must be positive");
    }
    const bool counts = kind == "counts";
    const RationalMatrix m = coefficient_matrix(counts ? Tally::Counts : Tally::Values);
    const IntPolynomial minimal = to_integer(min_poly(m));
    const IntPolynomial characteristic = to_integer(char_poly(m));
    const auto factors = counts ? reference::count_factors() : reference::value_factors();
    IntPolynomial product = IntPolynomial::constant(1);
    for (const auto& f : factors) {
        product = poly_mul(product, f);
    }
    const bool factors_ok = product == minimal;
    const RootInterval root = isolate_dominant_root(minimal, precision);

    out << "kind: " << kind << "\n";
    out << "minimal polynomial: " << minimal.to_string() << "\n";
    out << "characteristic polynomial: " << characteristic.to_string() << "\n";
    out << "printed factors: " << factor_product(factors) << "\n";
    out << "printed factors expand to the minimal polynomial: " << (factors_ok ? "pass" : "FAIL") << "\n";
    out << "dominant root: " << describe(root, digits_for(precision)) << "\n";
    return factors_ok ? kExitOk : kExitFailed;
}

inline void write_hpt(const std::vector<HptRow>& rows, const std::string& format, std::ostream& out) {
    if (format == "dot") {
        out << rows_to_dot(rows);
    } else if (format == "csv") {
        out << "row,position,class,value\n";
        for (const auto& r : rows) {
            for (std::size_t j = 0; j < r.entries.size(); ++j) {
                out << r.row_index << "," << j << "," << class_name(r.entries[j].cls) << ","
                    << r.entries[j].value.get_str() << "\n";
            }
        }
    } else {
        for (const auto& r : rows) {
            out << std::setw(3) << r.row_index << ":";
            for (const auto& e : r.entries) {
                out << " " << e.value.get_str();
            }
            out << "\n";
        }
    }
}

inline void write_polytope(PolytopeName name, const std::string& emit, std::ostream& out) {
    const Polytope p = build_polytope(name);
    if (emit == "adjacency") {
        out << adjacency_dump(p);
        return;
    }
    if (emit == "stats") {
        const IncidenceStats s = incidence_stats(p);
        out << "name: " << polytope_name(name) << "\n";
        out << "vertices: " << s.vertices << "\n";
        out << "edges: " << s.edges << "\n";
        out << "triangles: " << s.triangles << "\n";
        if (name == PolytopeName::SixHundredCell) {
            out << "tetrahedra: " << s.tetrahedra << "\n";
        }
        out << "edges per vertex: " << s.edges_per_vertex << "\n";
        out << "triangles per vertex: " << s.triangles_per_vertex << "\n";
        out << "triangles per edge: " << s.triangles_per_edge << "\n";
        if (name == PolytopeName::SixHundredCell) {
            out << "tetrahedra per vertex: " << s.tetrahedra_per_vertex << "\n";
            out << "tetrahedra per edge: " << s.tetrahedra_per_edge << "\n";
            out << "tetrahedra per triangle: " << s.tetrahedra_per_triangle << "\n";
            out << "vertex figure is an icosahedron: " << (s.vertex_figure.is_icosahedron ? "yes" : "no") << "\n";
        }
        return;
    }
    for (std::size_t m = 1; m <= max_seed_size(name); ++m) {
        const auto all = classify_all(p, m);
        out << polytope_name(name) << " m=" << m << ": " << all.counts.to_string() << " over " << all.cliques
            << " cliques" << (all.uniform() ? "" : " (non-uniform)") << "\n";
    }
}

} // namespace detail

/// Runs the command line `args` (without the program name).
/// Returns 0 on success, 1 when a verification fails, 2 on usage errors.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact combinatorics of the hyperbolic Pascal simplex on the mosaic {4,3,3,5}", "hps"};
    app.require_subcommand(1);

    std::string mode = "hyperbolic";
    std::string format = "csv";
    unsigned levels = 10;
    auto add_table = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--mode", mode, "mosaic")->check(CLI::IsMember({"hyperbolic", "euclidean"}));
        sub->add_option("--levels", levels, "last level")->check(CLI::Range(0u, 100000u));
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json", "text"}));
        return sub;
    };
    auto* census = add_table("census", "vertex counts per class and level");
    auto* sums = add_table("sums", "vertex value sums per class and level");

    std::string group = "all";
    auto* verify = app.add_subcommand("verify", "check the reference tables, recurrences, polynomials, classification");
    verify->add_option("group", group, "check group")
        ->check(CLI::IsMember({"tables", "recurrences", "polynomials", "classification", "all"}));

    std::string kind = "counts";
    std::string precision = "1e-6";
    auto* spectral = app.add_subcommand("spectral", "minimal and characteristic polynomials, dominant root");
    spectral->add_option("--kind", kind, "matrix")->check(CLI::IsMember({"counts", "values"}));
    spectral->add_option("--precision", precision, "root interval width (p/q, decimal or 1e-k)");

    int q = 5;
    unsigned rows = 5;
    unsigned max_rows = 25;
    std::string hpt_format = "csv";
    auto* hpt = app.add_subcommand("hpt", "rows 0..N of the hyperbolic Pascal triangle {4,q}");
    hpt->add_option("--q", q, "mosaic parameter (q >= 4)");
    hpt->add_option("--rows", rows, "last row")->required();
    hpt->add_option("--format", hpt_format, "output format")->check(CLI::IsMember({"csv", "dot", "text"}));
    hpt->add_option("--max-rows", max_rows, "refuse to build more rows than this");

    std::string polytope = "600-cell";
    std::string emit = "stats";
    auto* poly = app.add_subcommand("polytope", "vertex figure models");
    poly->add_option("--name", polytope, "polytope")->check(CLI::IsMember({"icosahedron", "600-cell"}));
    poly->add_option("--emit", emit, "what to print")->check(CLI::IsMember({"stats", "adjacency", "classification"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*census) {
            detail::write_table(census_series(detail::parse_mode(mode), levels), format, out);
        } else if (*sums) {
            detail::write_table(value_sums_series(detail::parse_mode(mode), levels), format, out);
        } else if (*verify) {
            const VerifyGroup g = group == "tables"           ? VerifyGroup::Tables
                                  : group == "recurrences"    ? VerifyGroup::Recurrences
                                  : group == "polynomials"    ? VerifyGroup::Polynomials
                                  : group == "classification" ? VerifyGroup::Classification
                                                              : VerifyGroup::All;
            const VerificationReport report = hps::verify(g);
            out << report.render();
            return report.passed() ? kExitOk : kExitFailed;
        } else if (*spectral) {
            return detail::spectral(kind, precision, out);
        } else if (*hpt) {
            if (rows > max_rows) {
                err << "error: --rows " << rows << " exceeds --max-rows " << max_rows << "\n";
                return kExitUsage;
            }
            detail::write_hpt(hpt_rows(q, rows), hpt_format, out);
        } else if (*poly) {
            detail::write_polytope(polytope == "icosahedron" ? PolytopeName::Icosahedron : PolytopeName::SixHundredCell,
                                   emit, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

} // namespace hps::cli
