// Test-only reference oracles. Everything here is plain enumeration kept
// deliberately independent of the search code under test.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "imm/graph.hpp"

namespace oracles {

inline bool proper_assignment(const imm::Graph& g, const std::vector<int>& color) {
    for (auto [u, v] : g.edges())
        if (color[u] == color[v]) return false;
    return true;
}

inline bool colorable_rec(const imm::Graph& g, std::vector<int>& color, int v, int k) {
    if (v == g.vertex_count()) return true;
    for (int c = 1; c <= k; ++c) {
        bool clash = false;
        for (int u = 0; u < v && !clash; ++u) {
            if (color[u] == c && g.has_edge(u, v)) clash = true;
        }
        if (clash) continue;
        color[v] = c;
        if (colorable_rec(g, color, v + 1, k)) return true;
        color[v] = 0;
    }
    return false;
}

// Smallest k admitting any proper assignment V -> {1..k}.
inline int naive_chromatic(const imm::Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int k = 1; k <= g.vertex_count(); ++k) {
        std::vector<int> color(g.vertex_count(), 0);
        if (colorable_rec(g, color, 0, k)) return k;
    }
    return g.vertex_count();
}

// All subsets of the vertex set, keep the largest pairwise non-adjacent one.
inline int naive_independence(const imm::Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (!(s >> u & 1)) continue;
            for (int v = u + 1; v < n && ok; ++v) {
                if ((s >> v & 1) && g.has_edge(u, v)) ok = false;
            }
        }
        if (ok) best = std::max(best, std::popcount(s));
    }
    return best;
}

inline int naive_clique(const imm::Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (!(s >> u & 1)) continue;
            for (int v = u + 1; v < n && ok; ++v) {
                if ((s >> v & 1) && !g.has_edge(u, v)) ok = false;
            }
        }
        if (ok) best = std::max(best, std::popcount(s));
    }
    return best;
}

inline int naive_matching_rec(const imm::Graph& g, imm::VertexMask avail,
                              std::map<imm::VertexMask, int>& memo) {
    if (avail == 0) return 0;
    auto it = memo.find(avail);
    if (it != memo.end()) return it->second;
    int v = imm::lowest_vertex(avail);
    // v stays unmatched
    int best = naive_matching_rec(g, avail & ~imm::bit(v), memo);
    imm::for_each_vertex(g.neighbor_mask(v) & avail, [&](int u) {
        best = std::max(best, 1 + naive_matching_rec(
                                  g, avail & ~imm::bit(v) & ~imm::bit(u), memo));
    });
    memo[avail] = best;
    return best;
}

inline int naive_matching(const imm::Graph& g) {
    std::map<imm::VertexMask, int> memo;
    return naive_matching_rec(g, g.vertex_mask(), memo);
}

// Cyclic orders with vertex 0 first.
inline bool naive_hamiltonian(const imm::Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
        bool ok = g.has_edge(0, rest.front()) && g.has_edge(rest.back(), 0);
        for (std::size_t i = 0; i + 1 < rest.size() && ok; ++i) {
            if (!g.has_edge(rest[i], rest[i + 1])) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
}

// Independent graph6 decoder straight off the published bit layout: bit
// index k of the upper triangle (column-major) is bit 5 - (k % 6) of
// payload byte k / 6.
inline std::optional<imm::Graph> reference_graph6_decode(const std::string& s) {
    if (s.empty()) return std::nullopt;
    int n = static_cast<unsigned char>(s[0]) - 63;
    if (n < 0 || n > 62) return std::nullopt;
    imm::Graph g(n);
    int k = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++k) {
            std::size_t byte = 1 + static_cast<std::size_t>(k) / 6;
            if (byte >= s.size()) return std::nullopt;
            int val = static_cast<unsigned char>(s[byte]) - 63;
            if (val < 0 || val > 63) return std::nullopt;
            if (val >> (5 - k % 6) & 1) g = g.with_edge(row, col);
        }
    }
    return g;
}

inline imm::Graph petersen() {
    imm::Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g = g.with_edge(i, (i + 1) % 5);
        g = g.with_edge(5 + i, 5 + (i + 2) % 5);
        g = g.with_edge(i, 5 + i);
    }
    return g;
}

// K_{2k+1} minus a maximum matching (k disjoint edges {0,1}, {2,3}, ...).
inline imm::Graph odd_clique_minus_matching(int n) {
    imm::Graph g = imm::Graph::complete(n);
    for (int i = 0; i + 1 < n; i += 2) g = g.without_edge(i, i + 1);
    return g;
}

}  // namespace oracles
