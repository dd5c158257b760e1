#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace imm {

// Largest order representable in short-form graph6; everything in this
// toolkit is desk-scale, so the cap is global.
inline constexpr int kMaxVertices = 62;

using VertexMask = std::uint64_t;

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

inline int lowest_vertex(VertexMask m) { return std::countr_zero(m); }

template <typename F>
void for_each_vertex(VertexMask m, F&& f) {
    while (m) {
        f(std::countr_zero(m));
        m &= m - 1;
    }
}

inline std::vector<int> mask_to_vertices(VertexMask m) {
    std::vector<int> out;
    for_each_vertex(m, [&](int v) { out.push_back(v); });
    return out;
}

// Simple undirected graph on vertices 0..n-1, adjacency kept as one
// 64-bit neighbor mask per vertex. Value type: mutation-like operations
// return a fresh graph.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
    // mask holds the upper triangle in graph6 bit order: pair {u,v}, u<v,
    // sits at index v*(v-1)/2 + u.
    static Graph from_edge_mask(int n, std::uint64_t mask);

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph complete_bipartite(int a, int b);
    static Graph complete_multipartite(std::span<const int> sizes);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool has_edge(int u, int v) const;
    VertexMask neighbor_mask(int v) const;
    // V(G) minus N[v].
    VertexMask non_neighbor_mask(int v) const;
    VertexMask vertex_mask() const;
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;
    int min_degree() const;
    int max_degree() const;
    std::vector<std::pair<int, int>> edges() const;
    std::uint64_t edge_mask() const;  // inverse of from_edge_mask, needs n <= 11

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    Graph without_vertex(int v) const;  // vertices above v shift down

    bool operator==(const Graph&) const = default;

    friend Graph complement(const Graph& g);

  private:
    void check_vertex(int v) const;
    void add_edge_unchecked(int u, int v);

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexMask> adj_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices;  // vertices[new_label] = old_label, ascending
};

Graph complement(const Graph& g);
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s);
InducedSubgraph induced_subgraph(const Graph& g, VertexMask s);

// Shortest path length; empty when u and v are in different components.
std::optional<int> distance(const Graph& g, int u, int v);
bool is_connected(const Graph& g);
std::optional<int> diameter(const Graph& g);

struct Graph6ParseError : std::runtime_error {
    Graph6ParseError(const std::string& what, std::size_t offset);
    std::size_t offset;
};

Graph parse_graph6(std::string_view text);
std::string serialize_graph6(const Graph& g);

// Line 1 "n m", then one "u v" line per edge.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

// Lexicographic k-combinations of {0..n-1}; seed with {0,1,..,k-1}.
bool next_combination(std::vector<int>& c, int n);

}  // namespace imm
