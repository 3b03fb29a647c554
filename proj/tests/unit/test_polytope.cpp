#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "hps/census.hpp"
#include "hps/polytope.hpp"

using namespace hps;
using VC = VertexClass;

namespace {

const Polytope& cell() {
    static const Polytope p = build_polytope(PolytopeName::SixHundredCell);
    return p;
}

const Polytope& ico() {
    static const Polytope p = build_polytope(PolytopeName::Icosahedron);
    return p;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(Polytope, IcosahedronStats) {
    const auto s = incidence_stats(ico());
    EXPECT_EQ(s.vertices, 12u);
    EXPECT_EQ(s.edges, 30u);
    EXPECT_EQ(s.triangles, 20u);
    EXPECT_EQ(s.tetrahedra, 0u);
    EXPECT_EQ(s.edges_per_vertex, 5u);
    EXPECT_EQ(s.triangles_per_edge, 2u);
}

TEST(Polytope, SixHundredCellStats) {
    const auto s = incidence_stats(cell());
    EXPECT_EQ(s.vertices, 120u);
    EXPECT_EQ(s.edges, 720u);
    EXPECT_EQ(s.triangles, 1200u);
    EXPECT_EQ(s.tetrahedra, 600u);
    EXPECT_EQ(s.edges_per_vertex, 12u);
    EXPECT_EQ(s.triangles_per_vertex, 30u);
    EXPECT_EQ(s.tetrahedra_per_vertex, 20u);
    EXPECT_EQ(s.triangles_per_edge, 5u);
    EXPECT_EQ(s.tetrahedra_per_edge, 5u);
    EXPECT_EQ(s.tetrahedra_per_triangle, 2u);
    EXPECT_TRUE(s.vertex_figure.is_icosahedron);
    EXPECT_EQ(s.vertex_figure.vertices, 12u);
    EXPECT_EQ(s.vertex_figure.edges, 30u);
}

TEST(Polytope, CoordinatesAreUnitAfterScaling) {
    // doubled unit quaternions have squared norm 4
    for (const auto& v : cell().vertices()) {
        EXPECT_EQ(detail::dot(v, v), GoldenNumber(4));
    }
    for (const auto& v : ico().vertices()) {
        EXPECT_EQ(detail::dot(v, v), GoldenNumber(1) + GoldenNumber::phi() * GoldenNumber::phi());
    }
}

TEST(Polytope, VerticesAreSortedAndDistinct) {
    const auto& v = cell().vertices();
    EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
    EXPECT_EQ(std::set<Point>(v.begin(), v.end()).size(), v.size());
}

TEST(Polytope, AdjacencyByDotProduct) {
    const auto& v = cell().vertices();
    const GoldenNumber two_phi = GoldenNumber(0, 2);
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            ASSERT_EQ(cell().adjacent(i, j), i != j && detail::dot(v[i], v[j]) == two_phi);
        }
    }
}

TEST(Polytope, ClassifySixHundredCell) {
    const auto& p = cell();
    const std::vector<std::size_t> vertex{0};
    const auto c1 = classify_neighbors(p, vertex);
    EXPECT_EQ(c1.to_string(), "H=12,K=107");
    const auto tet = p.tetrahedra().front();
    const auto c4 = classify_neighbors(p, std::vector<std::size_t>(tet.begin(), tet.end()));
    EXPECT_EQ(c4.get(VC::F), 4u);
    EXPECT_EQ(c4.get(VC::G), 6u);
    EXPECT_EQ(c4.get(VC::H), 12u);
    EXPECT_EQ(c4.get(VC::K), 94u);
}

TEST(Polytope, ClassifyIcosahedronEdge) {
    const auto e = ico().edges().front();
    const auto c = classify_neighbors(ico(), std::vector<std::size_t>(e.begin(), e.end()));
    EXPECT_EQ(c.to_string(), "C=2,D=4,E=4");
}

TEST(Polytope, ClassifyRejectsNonCliques) {
    std::size_t far = 0;
    while (cell().adjacent(0, far) || far == 0) {
        ++far;
    }
    const std::vector<std::size_t> bad{0, far};
    EXPECT_THROW(classify_neighbors(cell(), bad), ArgumentError);
    EXPECT_THROW(classify_neighbors(cell(), std::vector<std::size_t>{}), ArgumentError);
    const std::vector<std::size_t> too_many{0, 1, 2, 3};
    EXPECT_THROW(classify_neighbors(ico(), too_many), ArgumentError);
}

TEST(Polytope, ExhaustiveUniformClassification) {
    const std::vector<std::string> cell_want{"H=12,K=107", "G=5,H=12,K=101", "F=2,G=6,H=12,K=97",
                                             "F=4,G=6,H=12,K=94"};
    const std::vector<std::size_t> cell_cliques{120, 720, 1200, 600};
    for (std::size_t m = 1; m <= 4; ++m) {
        const auto all = classify_all(cell(), m);
        EXPECT_TRUE(all.uniform()) << m;
        EXPECT_EQ(all.cliques, cell_cliques[m - 1]);
        EXPECT_EQ(all.counts.to_string(), cell_want[m - 1]);
        EXPECT_EQ(all.counts.total() + m, 120u);
    }
    const std::vector<std::string> ico_want{"D=5,E=6", "C=2,D=4,E=4", "C=3,D=3,E=3"};
    for (std::size_t m = 1; m <= 3; ++m) {
        const auto all = classify_all(ico(), m);
        EXPECT_TRUE(all.uniform()) << m;
        EXPECT_EQ(all.counts.to_string(), ico_want[m - 1]);
        EXPECT_EQ(all.counts.total() + m, 12u);
    }
}

TEST(Polytope, ClassificationMatchesRecurrenceRows) {
    // Coefficient of parent class P in the row of child class Q equals the
    // number of Q children around a P vertex over the incoming edges of Q.
    const auto m = coefficient_matrix(Tally::Counts);
    const auto check = [&](const Polytope& p, const std::vector<VC>& classes, const std::vector<unsigned>& incoming) {
        for (std::size_t i = 0; i < classes.size(); ++i) {
            const auto counts = classify_all(p, incoming[i]).counts;
            for (std::size_t j = 0; j < classes.size(); ++j) {
                const Rational want = make_rational(static_cast<long>(counts.get(classes[j])), incoming[j]);
                EXPECT_EQ(m(matrix_index(classes[j]), matrix_index(classes[i])), want)
                    << class_name(classes[i]) << " -> " << class_name(classes[j]);
            }
        }
    };
    check(ico(), {VC::C, VC::D, VC::E}, {3, 2, 1});
    check(cell(), {VC::F, VC::G, VC::H, VC::K}, {4, 3, 2, 1});
}

TEST(Polytope, AdjacencyDumpRoundTrip) {
    const std::string dump = adjacency_dump(cell());
    const Polytope back = polytope_from_adjacency(PolytopeName::SixHundredCell, dump);
    EXPECT_EQ(back.adjacency(), cell().adjacency());
    EXPECT_EQ(adjacency_dump(back), dump);
    const auto s = incidence_stats(back);
    EXPECT_EQ(s.tetrahedra, 600u);
}

TEST(Polytope, ShippedAdjacencyFileMatchesCoordinates) {
    const std::string text = read_file(std::string(HPS_DATA_DIR) + "/600cell_adjacency.txt");
    ASSERT_FALSE(text.empty());
    EXPECT_EQ(text, adjacency_dump(cell()));
}

TEST(Polytope, AdjacencyParserErrors) {
    EXPECT_THROW(parse_adjacency("0 1 2\n"), ArgumentError);
    EXPECT_THROW(parse_adjacency("1: 0\n"), ArgumentError);
    EXPECT_THROW(parse_adjacency("0: x\n"), ArgumentError);
    EXPECT_ANY_THROW(polytope_from_adjacency(PolytopeName::Icosahedron, "0: 1\n1:\n"));
}
