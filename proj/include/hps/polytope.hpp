#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hps/census.hpp"
#include "hps/error.hpp"
#include "hps/golden.hpp"

namespace hps {

enum class PolytopeName { Icosahedron, SixHundredCell };

constexpr std::string_view polytope_name(PolytopeName name) {
    return name == PolytopeName::Icosahedron ? "icosahedron" : "600-cell";
}

using Point = std::vector<GoldenNumber>;

/// Vertex/edge graph of a regular polytope together with its 3- and 4-cliques,
/// which for the icosahedron and the 600-cell are exactly the triangular faces
/// and the tetrahedral cells.
class Polytope {
public:
    Polytope(PolytopeName name, std::vector<Point> vertices, std::vector<std::vector<std::size_t>> adjacency)
        : name_(name), vertices_(std::move(vertices)), adjacency_(std::move(adjacency)) {
        const std::size_t n = adjacency_.size();
        if (!vertices_.empty() && vertices_.size() != n) {
            throw ArgumentError("vertex list and adjacency list differ in length");
        }
        matrix_.assign(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::sort(adjacency_[i].begin(), adjacency_[i].end());
            for (std::size_t j : adjacency_[i]) {
                if (j >= n || j == i) {
                    throw ArgumentError("bad neighbour index " + std::to_string(j) + " of vertex " + std::to_string(i));
                }
                matrix_[i * n + j] = 1;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (matrix_[i * n + j] != matrix_[j * n + i]) {
                    throw ArgumentError("adjacency is not symmetric at " + std::to_string(i) + "," + std::to_string(j));
                }
            }
        }
        enumerate_cliques();
    }

    [[nodiscard]] PolytopeName name() const { return name_; }
    [[nodiscard]] std::size_t vertex_count() const { return adjacency_.size(); }
    [[nodiscard]] const std::vector<Point>& vertices() const { return vertices_; }
    [[nodiscard]] const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
    [[nodiscard]] const std::vector<std::vector<std::size_t>>& adjacency() const { return adjacency_; }
    [[nodiscard]] bool adjacent(std::size_t i, std::size_t j) const { return matrix_[i * vertex_count() + j] != 0; }
    [[nodiscard]] const std::vector<std::array<std::size_t, 2>>& edges() const { return edges_; }
    [[nodiscard]] const std::vector<std::array<std::size_t, 3>>& triangles() const { return triangles_; }
    [[nodiscard]] const std::vector<std::array<std::size_t, 4>>& tetrahedra() const { return tetrahedra_; }

    [[nodiscard]] bool is_clique(std::span<const std::size_t> seed) const {
        for (std::size_t i = 0; i < seed.size(); ++i) {
            if (seed[i] >= vertex_count()) {
                return false;
            }
            for (std::size_t j = i + 1; j < seed.size(); ++j) {
                if (seed[i] == seed[j] || !adjacent(seed[i], seed[j])) {
                    return false;
                }
            }
        }
        return true;
    }

private:
    void enumerate_cliques() {
        const std::size_t n = vertex_count();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j : adjacency_[i]) {
                if (j <= i) {
                    continue;
                }
                edges_.push_back({i, j});
                for (std::size_t k : adjacency_[j]) {
                    if (k <= j || !adjacent(i, k)) {
                        continue;
                    }
                    triangles_.push_back({i, j, k});
                    for (std::size_t l : adjacency_[k]) {
                        if (l > k && adjacent(i, l) && adjacent(j, l)) {
                            tetrahedra_.push_back({i, j, k, l});
                        }
                    }
                }
            }
        }
    }

    PolytopeName name_;
    std::vector<Point> vertices_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<char> matrix_;
    std::vector<std::array<std::size_t, 2>> edges_;
    std::vector<std::array<std::size_t, 3>> triangles_;
    std::vector<std::array<std::size_t, 4>> tetrahedra_;
};

namespace detail {

inline GoldenNumber dot(const Point& x, const Point& y) {
    GoldenNumber acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc = acc + x[i] * y[i];
    }
    return acc;
}

inline GoldenNumber squared_distance(const Point& x, const Point& y) {
    GoldenNumber acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const GoldenNumber d = x[i] - y[i];
        acc = acc + d * d;
    }
    return acc;
}

// Every sign choice for the nonzero coordinates of p.
inline void push_signed(std::vector<Point>& out, const Point& p) {
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(p[i] == GoldenNumber())) {
            nonzero.push_back(i);
        }
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << nonzero.size()); ++mask) {
        Point q = p;
        for (std::size_t b = 0; b < nonzero.size(); ++b) {
            if ((mask >> b) & 1U) {
                q[nonzero[b]] = -q[nonzero[b]];
            }
        }
        out.push_back(std::move(q));
    }
}

inline bool is_even_permutation(const std::array<std::size_t, 4>& perm) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            inversions += perm[i] > perm[j] ? 1 : 0;
        }
    }
    return inversions % 2 == 0;
}

inline void canonicalize(std::vector<Point>& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// (0, +-1, +-phi) and its cyclic shifts; edge length 2.
inline std::vector<Point> icosahedron_points() {
    const GoldenNumber zero;
    const GoldenNumber one(1);
    const GoldenNumber phi = GoldenNumber::phi();
    std::vector<Point> pts;
    const Point base{zero, one, phi};
    for (std::size_t shift = 0; shift < 3; ++shift) {
        Point p(3);
        for (std::size_t i = 0; i < 3; ++i) {
            p[(i + shift) % 3] = base[i];
        }
        push_signed(pts, p);
    }
    canonicalize(pts);
    return pts;
}

// Unit quaternions of the binary icosahedral group, doubled: the 8 permutations
// of (+-2,0,0,0), the 16 points (+-1,+-1,+-1,+-1) and the 96 even permutations
// of (+-phi, +-1, +-(phi-1), 0).
inline std::vector<Point> six_hundred_cell_points() {
    const GoldenNumber zero;
    const GoldenNumber one(1);
    const GoldenNumber two(2);
    const GoldenNumber phi = GoldenNumber::phi();
    const GoldenNumber inv_phi = phi - one;
    std::vector<Point> pts;
    for (std::size_t axis = 0; axis < 4; ++axis) {
        Point p(4, zero);
        p[axis] = two;
        push_signed(pts, p);
    }
    push_signed(pts, Point{one, one, one, one});
    const std::array<GoldenNumber, 4> base{phi, one, inv_phi, zero};
    std::array<std::size_t, 4> perm{0, 1, 2, 3};
    do {
        if (!is_even_permutation(perm)) {
            continue;
        }
        Point p(4);
        for (std::size_t i = 0; i < 4; ++i) {
            p[perm[i]] = base[i];
        }
        push_signed(pts, p);
    } while (std::next_permutation(perm.begin(), perm.end()));
    canonicalize(pts);
    return pts;
}

} // namespace detail

/// Exact coordinate model; vertices in lexicographic order of their coordinates.
inline Polytope build_polytope(PolytopeName name) {
    std::vector<Point> pts =
        name == PolytopeName::Icosahedron ? detail::icosahedron_points() : detail::six_hundred_cell_points();
    const std::size_t expected = name == PolytopeName::Icosahedron ? 12 : 120;
    if (pts.size() != expected) {
        throw InvariantViolation(std::string(polytope_name(name)) + " construction produced " +
                                 std::to_string(pts.size()) + " vertices");
    }
    std::vector<std::vector<std::size_t>> adj(pts.size());
    const GoldenNumber icosa_edge2(4);
    const GoldenNumber cell_edge_dot(0, 2);  // 2 phi
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const bool edge = name == PolytopeName::Icosahedron ? detail::squared_distance(pts[i], pts[j]) == icosa_edge2
                                                                : detail::dot(pts[i], pts[j]) == cell_edge_dot;
            if (edge) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    return Polytope(name, std::move(pts), std::move(adj));
}

struct VertexFigureStats {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    bool is_icosahedron = false;

    friend bool operator==(const VertexFigureStats&, const VertexFigureStats&) = default;
};

struct IncidenceStats {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t triangles = 0;
    std::size_t tetrahedra = 0;
    std::size_t edges_per_vertex = 0;
    std::size_t triangles_per_vertex = 0;
    std::size_t tetrahedra_per_vertex = 0;
    std::size_t triangles_per_edge = 0;
    std::size_t tetrahedra_per_edge = 0;
    std::size_t tetrahedra_per_triangle = 0;
    VertexFigureStats vertex_figure;
};

namespace detail {

// Induced subgraph on `verts`, as local adjacency lists.
inline std::vector<std::vector<std::size_t>> induced(const Polytope& p, const std::vector<std::size_t>& verts) {
    std::vector<std::vector<std::size_t>> g(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = 0; j < verts.size(); ++j) {
            if (i != j && p.adjacent(verts[i], verts[j])) {
                g[i].push_back(j);
            }
        }
    }
    return g;
}

inline bool is_cycle(const std::vector<std::vector<std::size_t>>& g) {
    if (g.size() < 3) {
        return false;
    }
    for (const auto& nb : g) {
        if (nb.size() != 2) {
            return false;
        }
    }
    // Walk from vertex 0; a 2-regular graph is one cycle iff the walk visits every vertex.
    std::size_t prev = 0;
    std::size_t cur = g[0][0];
    std::size_t steps = 1;
    while (cur != 0) {
        const std::size_t next = g[cur][0] == prev ? g[cur][1] : g[cur][0];
        prev = cur;
        cur = next;
        ++steps;
        if (steps > g.size()) {
            return false;
        }
    }
    return steps == g.size();
}

// The icosahedron is the unique connected graph on 12 vertices in which
// every vertex neighbourhood induces a 5-cycle.
inline bool is_icosahedron_graph(const std::vector<std::vector<std::size_t>>& g) {
    if (g.size() != 12) {
        return false;
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto& nb = g[v];
        if (nb.size() != 5) {
            return false;
        }
        std::vector<std::vector<std::size_t>> link(nb.size());
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = 0; j < nb.size(); ++j) {
                if (i != j && std::find(g[nb[i]].begin(), g[nb[i]].end(), nb[j]) != g[nb[i]].end()) {
                    link[i].push_back(j);
                }
            }
        }
        if (!is_cycle(link)) {
            return false;
        }
    }
    std::vector<char> seen(g.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : g[v]) {
            if (seen[w] == 0) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.size();
}

inline VertexFigureStats vertex_figure(const Polytope& p, std::size_t v) {
    const auto g = induced(p, p.neighbors(v));
    VertexFigureStats s;
    s.vertices = g.size();
    s.min_degree = g.empty() ? 0 : g[0].size();
    for (const auto& nb : g) {
        s.edges += nb.size();
        s.min_degree = std::min(s.min_degree, nb.size());
        s.max_degree = std::max(s.max_degree, nb.size());
    }
    s.edges /= 2;
    s.is_icosahedron = is_icosahedron_graph(g);
    return s;
}

template <typename Counter>
std::size_t uniform_value(const Counter& counts, const char* what) {
    if (counts.empty()) {
        return 0;
    }
    const std::size_t first = counts.begin()->second;
    for (const auto& [key, value] : counts) {
        if (value != first) {
            throw InvariantViolation(std::string("polytope is not regular: ") + what + " varies");
        }
    }
    return first;
}

} // namespace detail

/// Global counts and per-element incidences; throws if the incidences are
/// not the same at every vertex, edge and face.
inline IncidenceStats incidence_stats(const Polytope& p) {
    IncidenceStats s;
    s.vertices = p.vertex_count();
    s.edges = p.edges().size();
    s.triangles = p.triangles().size();
    s.tetrahedra = p.tetrahedra().size();

    std::map<std::size_t, std::size_t> deg, tri_v, tet_v;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> tri_e, tet_e;
    std::map<std::array<std::size_t, 3>, std::size_t> tet_t;
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        deg[v] = p.neighbors(v).size();
        tri_v[v] = 0;
        tet_v[v] = 0;
    }
    for (const auto& e : p.edges()) {
        tri_e[{e[0], e[1]}] = 0;
        tet_e[{e[0], e[1]}] = 0;
    }
    for (const auto& t : p.triangles()) {
        tet_t[t] = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            ++tri_v[t[i]];
            for (std::size_t j = i + 1; j < 3; ++j) {
                ++tri_e[{t[i], t[j]}];
            }
        }
    }
    for (const auto& c : p.tetrahedra()) {
        for (std::size_t i = 0; i < 4; ++i) {
            ++tet_v[c[i]];
            for (std::size_t j = i + 1; j < 4; ++j) {
                ++tet_e[{c[i], c[j]}];
            }
        }
        for (std::size_t skip = 0; skip < 4; ++skip) {
            std::array<std::size_t, 3> face{};
            std::size_t w = 0;
            for (std::size_t i = 0; i < 4; ++i) {
                if (i != skip) {
                    face[w++] = c[i];
                }
            }
            ++tet_t[face];
        }
    }
    s.edges_per_vertex = detail::uniform_value(deg, "degree");
    s.triangles_per_vertex = detail::uniform_value(tri_v, "triangles per vertex");
    s.tetrahedra_per_vertex = detail::uniform_value(tet_v, "tetrahedra per vertex");
    s.triangles_per_edge = detail::uniform_value(tri_e, "triangles per edge");
    s.tetrahedra_per_edge = detail::uniform_value(tet_e, "tetrahedra per edge");
    s.tetrahedra_per_triangle = detail::uniform_value(tet_t, "tetrahedra per triangle");

    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        const auto fig = detail::vertex_figure(p, v);
        if (v == 0) {
            s.vertex_figure = fig;
        } else if (!(fig == s.vertex_figure)) {
            throw InvariantViolation("polytope is not regular: vertex figures differ");
        }
    }
    return s;
}

/// Number of vertices of each child class around a seed clique of size m.
struct ClassificationCounts {
    std::size_t seed_size = 0;
    std::map<VertexClass, std::size_t> counts;

    [[nodiscard]] std::size_t get(VertexClass cls) const {
        auto it = counts.find(cls);
        return it == counts.end() ? 0 : it->second;
    }

    [[nodiscard]] std::size_t total() const {
        std::size_t t = 0;
        for (const auto& [cls, n] : counts) {
            t += n;
        }
        return t;
    }

    /// "G=5,H=12,K=101"
    [[nodiscard]] std::string to_string() const {
        std::string out;
        for (const auto& [cls, n] : counts) {
            if (!out.empty()) {
                out += ",";
            }
            out += std::string(class_name(cls)) + "=" + std::to_string(n);
        }
        return out;
    }

    friend bool operator==(const ClassificationCounts&, const ClassificationCounts&) = default;
};

/// Child class of a vertex adjacent to `touching` of the seed's vertices.
/// Around a 600-cell the seed members are the previous-level neighbours of an
/// interior vertex; around an icosahedron, of a face vertex.
inline VertexClass child_class(PolytopeName name, std::size_t touching) {
    if (name == PolytopeName::SixHundredCell) {
        constexpr std::array<VertexClass, 4> map{VertexClass::K, VertexClass::H, VertexClass::G, VertexClass::F};
        if (touching < map.size()) {
            return map[touching];
        }
    } else {
        constexpr std::array<VertexClass, 3> map{VertexClass::E, VertexClass::D, VertexClass::C};
        if (touching < map.size()) {
            return map[touching];
        }
    }
    throw InvariantViolation("vertex adjacent to " + std::to_string(touching) + " seed vertices in " +
                             std::string(polytope_name(name)));
}

inline std::size_t max_seed_size(PolytopeName name) { return name == PolytopeName::SixHundredCell ? 4 : 3; }

/// Classifies every vertex outside the seed clique by how many seed vertices it touches.
inline ClassificationCounts classify_neighbors(const Polytope& p, std::span<const std::size_t> seed) {
    if (seed.empty() || seed.size() > max_seed_size(p.name())) {
        throw ArgumentError("seed size " + std::to_string(seed.size()) + " out of range for " +
                            std::string(polytope_name(p.name())));
    }
    if (!p.is_clique(seed)) {
        throw ArgumentError("seed is not a clique of the " + std::string(polytope_name(p.name())));
    }
    ClassificationCounts out;
    out.seed_size = seed.size();
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        if (std::find(seed.begin(), seed.end(), v) != seed.end()) {
            continue;
        }
        std::size_t touching = 0;
        for (std::size_t s : seed) {
            touching += p.adjacent(v, s) ? 1 : 0;
        }
        ++out.counts[child_class(p.name(), touching)];
    }
    if (out.total() + out.seed_size != p.vertex_count()) {
        throw InvariantViolation("classification does not partition the vertices");
    }
    return out;
}

/// Classification over every clique of size m.
struct ExhaustiveClassification {
    std::size_t seed_size = 0;
    std::size_t cliques = 0;
    /// Distinct outcomes with their multiplicities; one entry when the result
    /// does not depend on the clique.
    std::map<std::string, std::size_t> outcomes;
    ClassificationCounts counts;

    [[nodiscard]] bool uniform() const { return outcomes.size() == 1; }
};

inline std::vector<std::vector<std::size_t>> cliques_of_size(const Polytope& p, std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    switch (m) {
    case 1:
        for (std::size_t v = 0; v < p.vertex_count(); ++v) {
            out.push_back({v});
        }
        break;
    case 2:
        for (const auto& e : p.edges()) {
            out.emplace_back(e.begin(), e.end());
        }
        break;
    case 3:
        for (const auto& t : p.triangles()) {
            out.emplace_back(t.begin(), t.end());
        }
        break;
    case 4:
        for (const auto& c : p.tetrahedra()) {
            out.emplace_back(c.begin(), c.end());
        }
        break;
    default:
        throw ArgumentError("clique size must be 1..4");
    }
    return out;
}

inline ExhaustiveClassification classify_all(const Polytope& p, std::size_t m) {
    ExhaustiveClassification out;
    out.seed_size = m;
    for (const auto& seed : cliques_of_size(p, m)) {
        auto c = classify_neighbors(p, seed);
        ++out.outcomes[c.to_string()];
        if (out.cliques == 0) {
            out.counts = std::move(c);
        }
        ++out.cliques;
    }
    return out;
}

/// One line per vertex: "i: j k l ...".
inline std::string adjacency_dump(const Polytope& p) {
    std::ostringstream os;
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        os << v << ":";
        for (std::size_t w : p.neighbors(v)) {
            os << " " << w;
        }
        os << "\n";
    }
    return os.str();
}

inline std::vector<std::vector<std::size_t>> parse_adjacency(std::string_view text) {
    std::vector<std::vector<std::size_t>> adj;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw ArgumentError("adjacency line without ':': " + line);
        }
        std::size_t index = 0;
        try {
            index = std::stoul(line.substr(0, colon));
        } catch (const std::exception&) {
            throw ArgumentError("bad vertex index in adjacency line: " + line);
        }
        if (index != adj.size()) {
            throw ArgumentError("adjacency lines out of order at vertex " + std::to_string(index));
        }
        std::istringstream nb(line.substr(colon + 1));
        std::vector<std::size_t> row;
        std::string tok;
        while (nb >> tok) {
            try {
                row.push_back(std::stoul(tok));
            } catch (const std::exception&) {
                throw ArgumentError("bad neighbour index '" + tok + "'");
            }
        }
        adj.push_back(std::move(row));
    }
    return adj;
}

/// Combinatorial model read back from an adjacency dump (no coordinates).
inline Polytope polytope_from_adjacency(PolytopeName name, std::string_view text) {
    return Polytope(name, {}, parse_adjacency(text));
}

} // namespace hps
