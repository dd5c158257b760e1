#include "imm/graph.hpp"

#include <algorithm>
#include <sstream>

namespace imm {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    // 63 is the neighbor-mask limit; graph6 I/O additionally caps at 62
    if (n < 0 || n > 63) {
        throw std::invalid_argument("graph: vertex count out of range [0,63]: " +
                                    std::to_string(n));
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw std::invalid_argument("graph: vertex " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n_) + ")");
    }
}

void Graph::add_edge_unchecked(int u, int v) {
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    ++m_;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
        if (g.has_edge(u, v)) {
            throw std::invalid_argument("graph: duplicate edge " + std::to_string(u) + " " +
                                        std::to_string(v));
        }
        g.add_edge_unchecked(u, v);
    }
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int idx = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++idx) {
            if (mask >> idx & 1) g.add_edge_unchecked(u, v);
        }
    }
    if (idx < 64 && (mask >> idx) != 0) {
        throw std::invalid_argument("graph: edge mask has bits beyond the upper triangle");
    }
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) g.add_edge_unchecked(u, v);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge_unchecked(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge_unchecked(v, v + 1);
    return g;
}

Graph Graph::complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge_unchecked(u, v);
    return g;
}

Graph Graph::complete_multipartite(std::span<const int> sizes) {
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("complete_multipartite: empty class");
        n += s;
    }
    Graph g(n);
    std::vector<int> cls(n);
    int at = 0, c = 0;
    for (int s : sizes) {
        for (int i = 0; i < s; ++i) cls[at++] = c;
        ++c;
    }
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (cls[u] != cls[v]) g.add_edge_unchecked(u, v);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
}

VertexMask Graph::neighbor_mask(int v) const {
    check_vertex(v);
    return adj_[v];
}

VertexMask Graph::non_neighbor_mask(int v) const {
    check_vertex(v);
    return vertex_mask() & ~adj_[v] & ~bit(v);
}

VertexMask Graph::vertex_mask() const {
    return n_ == 0 ? 0 : (~VertexMask{0} >> (64 - n_));
}

std::vector<int> Graph::neighbors(int v) const { return mask_to_vertices(neighbor_mask(v)); }

int Graph::degree(int v) const { return std::popcount(neighbor_mask(v)); }

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, std::popcount(adj_[v]));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, std::popcount(adj_[v]));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        for_each_vertex(adj_[u] & ~(bit(u) | (bit(u) - 1)), [&](int v) { out.emplace_back(u, v); });
    }
    return out;
}

std::uint64_t Graph::edge_mask() const {
    if (n_ > 11) throw std::invalid_argument("edge_mask: more than 64 vertex pairs");
    std::uint64_t mask = 0;
    int idx = 0;
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if ((adj_[u] >> v) & 1) mask |= std::uint64_t{1} << idx;
    return mask;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("with_edge: loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) return *this;
    Graph g = *this;
    g.add_edge_unchecked(u, v);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    Graph g = *this;
    if (has_edge(u, v)) {
        g.adj_[u] &= ~bit(v);
        g.adj_[v] &= ~bit(u);
        --g.m_;
    }
    return g;
}

Graph Graph::without_vertex(int v) const {
    check_vertex(v);
    Graph g(n_ - 1);
    for (int a = 0; a < n_; ++a) {
        if (a == v) continue;
        int na = a < v ? a : a - 1;
        for_each_vertex(adj_[a] & ~(bit(a) | (bit(a) - 1)), [&](int b) {
            if (b == v) return;
            int nb = b < v ? b : b - 1;
            g.add_edge_unchecked(na, nb);
        });
    }
    return g;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph out(n);
    VertexMask all = g.vertex_mask();
    for (int v = 0; v < n; ++v) {
        out.adj_[v] = all & ~g.adj_[v] & ~bit(v);
        out.m_ += std::popcount(out.adj_[v]);
    }
    out.m_ /= 2;
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s) {
    std::vector<int> verts(s.begin(), s.end());
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= g.vertex_count()) {
            throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(verts[i]) +
                                        " out of range");
        }
        if (i > 0 && verts[i] == verts[i - 1]) {
            throw std::invalid_argument("induced_subgraph: duplicate vertex " +
                                        std::to_string(verts[i]));
        }
    }
    Graph sub(static_cast<int>(verts.size()));
    for (std::size_t j = 1; j < verts.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (g.has_edge(verts[i], verts[j]))
                sub = sub.with_edge(static_cast<int>(i), static_cast<int>(j));
    return {std::move(sub), std::move(verts)};
}

InducedSubgraph induced_subgraph(const Graph& g, VertexMask s) {
    std::vector<int> verts = mask_to_vertices(s);
    return induced_subgraph(g, verts);
}

std::optional<int> distance(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count()) {
        throw std::invalid_argument("distance: vertex out of range");
    }
    if (u == v) return 0;
    VertexMask seen = bit(u);
    VertexMask frontier = bit(u);
    int d = 0;
    while (frontier) {
        ++d;
        VertexMask next = 0;
        for_each_vertex(frontier, [&](int x) { next |= g.neighbor_mask(x); });
        next &= ~seen;
        if (next & bit(v)) return d;
        seen |= next;
        frontier = next;
    }
    return std::nullopt;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    VertexMask seen = bit(0);
    VertexMask frontier = seen;
    while (frontier) {
        VertexMask next = 0;
        for_each_vertex(frontier, [&](int x) { next |= g.neighbor_mask(x); });
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == g.vertex_mask();
}

std::optional<int> diameter(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    if (!is_connected(g)) return std::nullopt;
    int best = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) best = std::max(best, *distance(g, u, v));
    return best;
}

Graph6ParseError::Graph6ParseError(const std::string& what, std::size_t off)
    : std::runtime_error("graph6: " + what + " at byte " + std::to_string(off)), offset(off) {}

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw Graph6ParseError("malformed length prefix: empty input", 0);
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 == 126) {
        throw Graph6ParseError("malformed length prefix: long form (n > 62) unsupported", 0);
    }
    if (c0 < 63 || c0 > 125) throw Graph6ParseError("length prefix out of range 63..125", 0);
    int n = c0 - 63;
    int bits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    Graph g(n);
    std::vector<std::pair<int, int>> pending;
    int bit_index = 0;
    int u = 0, v = 1;
    for (std::size_t i = 0; i < need; ++i) {
        std::size_t off = 1 + i;
        if (off >= text.size()) throw Graph6ParseError("truncated payload", off);
        unsigned char ch = static_cast<unsigned char>(text[off]);
        if (ch < 63 || ch > 126) throw Graph6ParseError("character out of range 63..126", off);
        int val = ch - 63;
        for (int b = 5; b >= 0; --b, ++bit_index) {
            int one = (val >> b) & 1;
            if (bit_index >= bits) {
                if (one) throw Graph6ParseError("nonzero padding bits", off);
                continue;
            }
            if (one) pending.emplace_back(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    if (text.size() != 1 + need) throw Graph6ParseError("trailing garbage", 1 + need);
    return Graph::from_edges(n, pending);
}

std::string serialize_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > kMaxVertices) {
        throw std::invalid_argument("graph6: unsupported size n > 62");
    }
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1, m = -1;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing \"n m\" header");
    if (n < 0 || n > 63) {
        throw std::invalid_argument("edge list: vertex count out of range: " + std::to_string(n));
    }
    if (m < 0 || m > n * (n - 1) / 2) {
        throw std::invalid_argument("edge list: edge count out of range: " + std::to_string(m));
    }
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) {
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
        }
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("edge list: endpoint out of range in edge " +
                                        std::to_string(i));
        }
        if (u > v) std::swap(u, v);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (in >> rest) throw std::invalid_argument("edge list: trailing tokens after last edge");
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace imm
