#include "minorlab/graph.hpp"

#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "minorlab/errors.hpp"

namespace minorlab {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Remove bit `pos` from a mask, shifting higher bits down by one.
std::uint64_t drop_bit(std::uint64_t x, int pos) {
    std::uint64_t low = x & mask_below(pos);
    std::uint64_t high = pos + 1 >= 64 ? 0 : (x >> (pos + 1)) << pos;
    return low | high;
}

#ifndef NDEBUG
bool simple_and_symmetric(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t nb = g.neighbors(v);
        if (nb & (std::uint64_t{1} << v)) return false;      // self-loop
        if (nb & ~g.vertex_mask()) return false;             // out-of-range bit
        for (std::uint64_t m = nb; m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            if (!(g.neighbors(u) >> v & 1)) return false;    // asymmetric
        }
    }
    return true;
}
#endif

}  // namespace

Graph::Graph(int n) : n_(n) {
    require(n >= 0 && n <= kMaxVertices, "vertex count out of range 0..64");
}

void Graph::check_vertex(int v) const {
    require(v >= 0 && v < n_, "vertex index out of range");
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
}

std::uint64_t Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

int Graph::min_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) {
        int d = std::popcount(adj_[v]);
        if (v == 0 || d < best) best = d;
    }
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u) {
        std::uint64_t above = adj_[u] & ~mask_below(u + 1);
        for (std::uint64_t m = above; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            out.push_back(Edge{u, v});
        }
    }
    return out;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    require(u != v, "self-loops are not allowed");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
}

bool Graph::operator==(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (adj_[v] != other.adj_[v]) return false;
    return true;
}

Graph delete_edge(const Graph& g, Edge e) {
    require(g.has_edge(e), "delete_edge: edge not present");
    Graph out = g;
    out.remove_edge(e.u, e.v);
    assert(simple_and_symmetric(out));
    return out;
}

Graph delete_vertex(const Graph& g, int v) {
    require(v >= 0 && v < g.vertex_count(), "delete_vertex: vertex out of range");
    Graph out(g.vertex_count() - 1);
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (w == v) continue;
        int nw = w < v ? w : w - 1;
        std::uint64_t row = drop_bit(g.neighbors(w) & ~(std::uint64_t{1} << v), v);
        for (std::uint64_t m = row; m;) {
            int x = std::countr_zero(m);
            m &= m - 1;
            if (nw < x) out.add_edge(nw, x);
        }
    }
    assert(simple_and_symmetric(out));
    return out;
}

Graph contract_edge(const Graph& g, Edge e) {
    require(g.has_edge(e), "contract_edge: edge not present");
    int u = e.u, v = e.v;  // u < v; merged vertex takes u's slot
    Graph merged = g;
    std::uint64_t joint =
        (g.neighbors(u) | g.neighbors(v)) & ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v);
    merged.remove_edge(u, v);
    for (std::uint64_t m = joint; m;) {
        int w = std::countr_zero(m);
        m &= m - 1;
        merged.add_edge(u, w);
    }
    Graph out = delete_vertex(merged, v);
    assert(simple_and_symmetric(out));
    return out;
}

Graph split_vertex(const Graph& g, int v, std::uint64_t part1, std::uint64_t part2) {
    require(v >= 0 && v < g.vertex_count(), "split_vertex: vertex out of range");
    require(g.vertex_count() < kMaxVertices, "split_vertex: vertex limit reached");
    std::uint64_t nb = g.neighbors(v);
    require(part1 != 0 && part2 != 0, "split_vertex: both parts must be nonempty");
    require((part1 & part2) == 0, "split_vertex: parts must be disjoint");
    require((part1 | part2) == nb, "split_vertex: parts must partition the neighborhood");

    int n = g.vertex_count();
    Graph out(n + 1);
    for (Edge e : g.edges()) {
        if (e.u == v || e.v == v) continue;
        out.add_edge(e.u, e.v);
    }
    for (std::uint64_t m = part1; m;) {
        int w = std::countr_zero(m);
        m &= m - 1;
        out.add_edge(v, w);
    }
    for (std::uint64_t m = part2; m;) {
        int w = std::countr_zero(m);
        m &= m - 1;
        out.add_edge(n, w);
    }
    assert(simple_and_symmetric(out));
    return out;
}

Graph subdivide_edge(const Graph& g, Edge e) {
    require(g.has_edge(e), "subdivide_edge: edge not present");
    require(g.vertex_count() < kMaxVertices, "subdivide_edge: vertex limit reached");
    int n = g.vertex_count();
    Graph out(n + 1);
    for (Edge f : g.edges()) {
        if (f == e) continue;
        out.add_edge(f.u, f.v);
    }
    out.add_edge(e.u, n);
    out.add_edge(e.v, n);
    assert(simple_and_symmetric(out));
    return out;
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph complete_graph(int k) {
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle_graph: need n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    require(n >= 1, "path_graph: need n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, "complete_bipartite: need both sides nonempty");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool is_connected_within(const Graph& g, std::uint64_t mask) {
    if (mask == 0) return true;
    int start = std::countr_zero(mask);
    std::uint64_t reached = std::uint64_t{1} << start;
    for (;;) {
        std::uint64_t frontier = 0;
        for (std::uint64_t m = reached; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            frontier |= g.neighbors(v);
        }
        std::uint64_t next = (reached | frontier) & mask;
        if (next == reached) break;
        reached = next;
    }
    return reached == mask;
}

bool is_connected(const Graph& g) { return is_connected_within(g, g.vertex_mask()); }

std::uint64_t non_cut_vertices(const Graph& g) {
    std::uint64_t out = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t rest = g.vertex_mask() & ~(std::uint64_t{1} << v);
        if (is_connected_within(g, rest)) out |= std::uint64_t{1} << v;
    }
    return out;
}

std::uint64_t neighborhood_of_set(const Graph& g, std::uint64_t set) {
    std::uint64_t nb = 0;
    for (std::uint64_t m = set; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        nb |= g.neighbors(v);
    }
    return nb & ~set;
}

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw Graph6ParseError(0, "empty input");

    std::size_t pos = 0;
    int n = 0;
    unsigned char head = static_cast<unsigned char>(text[0]);
    if (head == 126) {  // extended header: '~' then 18-bit n
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
            throw Graph6ParseError(1, "8-byte vertex-count header is not supported");
        if (text.size() < 4) throw Graph6ParseError(text.size(), "truncated extended header");
        long value = 0;
        for (int i = 1; i <= 3; ++i) {
            unsigned char c = static_cast<unsigned char>(text[i]);
            if (c < 63 || c > 126)
                throw Graph6ParseError(i, "header byte outside graph6 range");
            value = (value << 6) | (c - 63);
        }
        if (value > kMaxVertices)
            throw Graph6ParseError(0, "vertex count " + std::to_string(value) +
                                          " exceeds supported maximum 64");
        n = static_cast<int>(value);
        pos = 4;
    } else if (head >= 63 && head <= 125) {
        n = head - 63;
        pos = 1;
    } else {
        throw Graph6ParseError(0, "invalid header byte");
    }

    int nbits = n * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() < pos + nbytes)
        throw Graph6ParseError(text.size(), "truncated bit payload");
    if (text.size() > pos + nbytes)
        throw Graph6ParseError(pos + nbytes, "trailing bytes after payload");

    Graph g(n);
    int bit = 0;
    int column_i = 0, column_j = 1;
    for (std::size_t k = 0; k < nbytes; ++k) {
        unsigned char c = static_cast<unsigned char>(text[pos + k]);
        if (c < 63 || c > 126)
            throw Graph6ParseError(pos + k, "payload byte outside graph6 range");
        int value = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            int on = (value >> b) & 1;
            if (bit < nbits) {
                if (on) g.add_edge(column_i, column_j);
                if (++column_i == column_j) {
                    column_i = 0;
                    ++column_j;
                }
            } else if (on) {
                throw Graph6ParseError(pos + k, "nonzero padding bits");
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int nbits = n * (n - 1) / 2;
    int value = 0, filled = 0;
    auto flush = [&] {
        out.push_back(static_cast<char>(value + 63));
        value = 0;
        filled = 0;
    };
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) flush();
        }
    }
    if (filled) {
        value <<= (6 - filled);
        flush();
    }
    (void)nbits;
    return out;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (Edge e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace minorlab
