#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace minorlab {

inline constexpr int kMaxVertices = 64;

// Mask with bits 0..n-1 set. Safe for n == 64.
constexpr std::uint64_t mask_below(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

struct Edge {
    int u = 0;
    int v = 0;  // invariant: u < v wherever an Edge names an edge of a graph

    auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on vertices 0..n-1, n <= 64, one adjacency word per
// vertex. Immutable value in practice: the edit operations below are pure and
// return new graphs with a deterministic compact relabeling.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
    std::uint64_t neighbors(int v) const;
    int degree(int v) const;
    int min_degree() const;  // 0 for the empty graph
    std::uint64_t vertex_mask() const { return mask_below(n_); }
    std::vector<Edge> edges() const;  // lexicographic (u, v) order

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    bool operator==(const Graph& other) const;  // label-for-label equality

private:
    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> adj_{};

    void check_vertex(int v) const;
};

// --- edit operations (pure) -------------------------------------------------
//
// Relabeling contract: contract_edge merges v into u = min end and shifts
// labels above v down by one; delete_vertex shifts labels above v down;
// split_vertex keeps v's slot for the part1 half and appends the part2 half
// at index n; subdivide_edge appends the new midpoint at index n.

Graph contract_edge(const Graph& g, Edge e);
Graph delete_edge(const Graph& g, Edge e);
Graph delete_vertex(const Graph& g, int v);
// part1/part2: disjoint nonempty masks with part1 | part2 == neighbors(v).
// The two replacement vertices are NOT adjacent.
Graph split_vertex(const Graph& g, int v, std::uint64_t part1, std::uint64_t part2);
Graph subdivide_edge(const Graph& g, Edge e);

// --- basic constructions ----------------------------------------------------

Graph edgeless_graph(int n);
Graph complete_graph(int k);
Graph cycle_graph(int n);   // n >= 3
Graph path_graph(int n);    // n >= 1
Graph complete_bipartite(int a, int b);
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

// --- connectivity -----------------------------------------------------------

bool is_connected(const Graph& g);  // true for n <= 1
bool is_connected_within(const Graph& g, std::uint64_t mask);
// Vertices whose removal leaves the graph connected. Every connected graph on
// n >= 2 vertices has at least two of them.
std::uint64_t non_cut_vertices(const Graph& g);
// Union of neighborhoods of `set`, excluding `set` itself.
std::uint64_t neighborhood_of_set(const Graph& g, std::uint64_t set);

// --- I/O ---------------------------------------------------------------------

// Standard graph6: header byte n+63 for n <= 62 (extended 3-byte header for
// 63 <= n <= 64), then the upper triangle column-major, 6 bits per byte,
// each offset by 63. Parse is strict: bad bytes, truncation, trailing bytes
// and nonzero padding are errors naming the byte offset.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Plain undirected DOT with vertex ids 0..n-1 and no attributes.
std::string to_dot(const Graph& g);

}  // namespace minorlab
