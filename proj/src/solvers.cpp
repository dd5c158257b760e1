#include "imm/solvers.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace imm {

bool is_proper_coloring(const Graph& g, const VertexColoring& c) {
    int n = g.vertex_count();
    if (static_cast<int>(c.color.size()) != n) return false;
    if (n == 0) return c.k == 0;
    std::vector<bool> used(static_cast<std::size_t>(c.k) + 1, false);
    for (int v = 0; v < n; ++v) {
        if (c.color[v] < 1 || c.color[v] > c.k) return false;
        used[c.color[v]] = true;
    }
    for (int i = 1; i <= c.k; ++i)
        if (!used[i]) return false;
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v]) return false;
    return true;
}

std::string serialize_coloring(const VertexColoring& c) {
    std::ostringstream out;
    out << c.k << '\n';
    for (std::size_t v = 0; v < c.color.size(); ++v) out << v << ' ' << c.color[v] << '\n';
    return out.str();
}

VertexColoring parse_coloring(std::string_view text) {
    std::istringstream in{std::string(text)};
    VertexColoring c;
    if (!(in >> c.k)) throw std::invalid_argument("coloring: missing color count");
    int v, col;
    std::vector<std::pair<int, int>> entries;
    while (in >> v >> col) entries.emplace_back(v, col);
    c.color.assign(entries.size(), 0);
    for (auto [vv, cc] : entries) {
        if (vv < 0 || vv >= static_cast<int>(entries.size())) {
            throw std::invalid_argument("coloring: vertex out of range");
        }
        c.color[vv] = cc;
    }
    return c;
}

namespace {

// Renumber colors by first appearance so witnesses are canonical.
void normalize_colors(VertexColoring& c) {
    std::vector<int> remap(static_cast<std::size_t>(c.k) + 1, 0);
    int next = 0;
    for (int& col : c.color) {
        if (remap[col] == 0) remap[col] = ++next;
        col = remap[col];
    }
    c.k = next;
}

int greedy_clique_bound(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int best = 0;
    for (int start : order) {
        VertexMask clique = bit(start);
        VertexMask cand = g.neighbor_mask(start);
        while (cand) {
            int v = lowest_vertex(cand);
            clique |= bit(v);
            cand &= g.neighbor_mask(v);
        }
        best = std::max(best, std::popcount(clique));
    }
    return best;
}

VertexColoring greedy_coloring(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    VertexColoring c;
    c.color.assign(n, 0);
    for (int v : order) {
        std::uint64_t taken = 0;
        for_each_vertex(g.neighbor_mask(v), [&](int u) {
            if (c.color[u] > 0) taken |= std::uint64_t{1} << (c.color[u] - 1);
        });
        int col = 1;
        while (taken >> (col - 1) & 1) ++col;
        c.color[v] = col;
        c.k = std::max(c.k, col);
    }
    normalize_colors(c);
    return c;
}

// Exact k-colorability, DSATUR-style branching. Colors above the count
// already in use are interchangeable, so only one fresh color is tried.
struct ColorSearch {
    const Graph& g;
    int k;
    BudgetMeter& meter;
    std::vector<int> color;
    std::vector<std::uint64_t> forbidden;  // bit c-1 set when a neighbor has color c
    int uncolored;

    ColorSearch(const Graph& gg, int kk, BudgetMeter& mm)
        : g(gg), k(kk), meter(mm), color(gg.vertex_count(), 0),
          forbidden(gg.vertex_count(), 0), uncolored(gg.vertex_count()) {}

    bool solve(int max_used) {
        if (uncolored == 0) return true;
        meter.tick();
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (color[v] != 0) continue;
            int sat = std::popcount(forbidden[v]);
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (forbidden[pick] >> (c - 1) & 1) continue;
            color[pick] = c;
            --uncolored;
            std::vector<std::pair<int, std::uint64_t>> undo;
            for_each_vertex(g.neighbor_mask(pick), [&](int u) {
                if ((forbidden[u] >> (c - 1) & 1) == 0) {
                    undo.emplace_back(u, forbidden[u]);
                    forbidden[u] |= std::uint64_t{1} << (c - 1);
                }
            });
            if (solve(std::max(max_used, c))) return true;
            for (auto& [u, old] : undo) forbidden[u] = old;
            color[pick] = 0;
            ++uncolored;
        }
        return false;
    }
};

}  // namespace

ChromaticResult chromatic_number(const Graph& g, Budget budget) {
    int n = g.vertex_count();
    if (n == 0) return {0, {0, {}}};
    BudgetMeter meter(budget, "chromatic_number");
    VertexColoring greedy = greedy_coloring(g);
    int ub = greedy.k;
    int lb = std::max(1, greedy_clique_bound(g));
    for (int k = lb; k < ub; ++k) {
        ColorSearch search(g, k, meter);
        if (search.solve(0)) {
            VertexColoring w{k, search.color};
            normalize_colors(w);
            return {w.k, w};
        }
    }
    return {ub, greedy};
}

namespace {

struct SetSearch {
    // Max vertex set such that every picked pair is related by `relation`;
    // adjacency gives cliques, non-adjacency gives independent sets.
    const std::vector<VertexMask>& relation;
    BudgetMeter& meter;
    int best = -1;
    VertexMask best_set = 0;

    void run(VertexMask cand, VertexMask cur, int size) {
        meter.tick();
        if (size + std::popcount(cand) <= best) return;
        if (cand == 0) {
            best = size;
            best_set = cur;
            return;
        }
        int v = lowest_vertex(cand);
        run(cand & relation[v], cur | bit(v), size + 1);
        run(cand & ~bit(v), cur, size);
    }
};

}  // namespace

IndependenceResult independence_number(const Graph& g, Budget budget) {
    int n = g.vertex_count();
    BudgetMeter meter(budget, "independence_number");
    std::vector<VertexMask> non_adj(n);
    for (int v = 0; v < n; ++v) non_adj[v] = g.non_neighbor_mask(v);
    SetSearch search{non_adj, meter};
    search.run(g.vertex_mask(), 0, 0);
    return {search.best, mask_to_vertices(search.best_set)};
}

CliqueResult clique_number(const Graph& g, Budget budget) {
    int n = g.vertex_count();
    BudgetMeter meter(budget, "clique_number");
    std::vector<VertexMask> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbor_mask(v);
    SetSearch search{adj, meter};
    search.run(g.vertex_mask(), 0, 0);
    return {search.best, mask_to_vertices(search.best_set)};
}

namespace {

// Edmonds blossom matching, BFS formulation with base contraction.
struct Blossom {
    const Graph& g;
    BudgetMeter& meter;
    int n;
    std::vector<int> match, parent, base;
    std::vector<bool> used, in_blossom;

    explicit Blossom(const Graph& gg, BudgetMeter& mm)
        : g(gg), meter(mm), n(gg.vertex_count()), match(n, -1), parent(n, -1), base(n),
          used(n, false), in_blossom(n, false) {}

    int lca(int a, int b) {
        std::vector<bool> mark(n, false);
        int v = a;
        while (true) {
            v = base[v];
            mark[v] = true;
            if (match[v] == -1) break;
            v = parent[match[v]];
        }
        v = b;
        while (true) {
            v = base[v];
            if (mark[v]) return v;
            v = parent[match[v]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = true;
            in_blossom[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_augmenting(int root) {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = true;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int to : g.neighbors(v)) {
                meter.tick();
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int cur_base = lca(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i) {
                        if (in_blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = true;
                    queue.push_back(match[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = parent[v];
            int next = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = next;
        }
    }
};

}  // namespace

std::vector<std::pair<int, int>> maximum_matching(const Graph& g, Budget budget) {
    BudgetMeter meter(budget, "maximum_matching");
    Blossom blossom(g, meter);
    // greedy seed keeps the search short on dense graphs
    for (int v = 0; v < blossom.n; ++v) {
        if (blossom.match[v] != -1) continue;
        for (int u : g.neighbors(v)) {
            if (blossom.match[u] == -1) {
                blossom.match[v] = u;
                blossom.match[u] = v;
                break;
            }
        }
    }
    for (int v = 0; v < blossom.n; ++v) {
        if (blossom.match[v] != -1) continue;
        int tail = blossom.find_augmenting(v);
        if (tail != -1) blossom.augment(tail);
    }
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < blossom.n; ++v)
        if (blossom.match[v] > v) out.emplace_back(v, blossom.match[v]);
    return out;
}

namespace {

struct HamiltonSearch {
    const Graph& g;
    BudgetMeter& meter;
    std::vector<int> path;
    VertexMask visited = 0;

    bool extend() {
        meter.tick();
        int last = path.back();
        if (static_cast<int>(path.size()) == g.vertex_count()) return g.has_edge(last, 0);
        // every unvisited vertex still needs two cycle neighbors among the
        // unvisited set, the current endpoint, and the start
        VertexMask open = g.vertex_mask() & ~visited;
        VertexMask reach = open | bit(last) | bit(0);
        bool dead = false;
        for_each_vertex(open, [&](int u) {
            if (std::popcount(g.neighbor_mask(u) & reach) < 2) dead = true;
        });
        if (dead) return false;
        VertexMask cand = g.neighbor_mask(last) & ~visited;
        bool found = false;
        for_each_vertex(cand, [&](int u) {
            if (found) return;
            path.push_back(u);
            visited |= bit(u);
            if (extend()) {
                found = true;
                return;
            }
            visited &= ~bit(u);
            path.pop_back();
        });
        return found;
    }
};

}  // namespace

HamiltonianResult is_hamiltonian(const Graph& g, Budget budget) {
    int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("is_hamiltonian: need at least 3 vertices");
    BudgetMeter meter(budget, "is_hamiltonian");
    if (g.min_degree() < 2 || !is_connected(g)) return {false, {}};
    HamiltonSearch search{g, meter, {}, 0};
    search.path.push_back(0);
    search.visited = bit(0);
    if (search.extend()) return {true, search.path};
    return {false, {}};
}

int EdgeColoring::color_of(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= s || v >= s) {
        throw std::invalid_argument("edge coloring: bad pair");
    }
    if (u > v) std::swap(u, v);
    return color[static_cast<std::size_t>(v) * (v - 1) / 2 + u];
}

int EdgeColoring::color_count() const {
    return s < 2 ? 0 : (s % 2 == 0 ? s - 1 : s);
}

EdgeColoring one_factorization(int s) {
    if (s < 2) throw std::invalid_argument("one_factorization: need s >= 2");
    EdgeColoring ec;
    ec.s = s;
    ec.color.assign(static_cast<std::size_t>(s) * (s - 1) / 2, 0);
    auto set_color = [&](int u, int v, int c) {
        if (u > v) std::swap(u, v);
        ec.color[static_cast<std::size_t>(v) * (v - 1) / 2 + u] = c;
    };
    if (s % 2 == 0) {
        // circle method: vertex s-1 fixed, the rest rotate
        int m = s - 1;
        for (int r = 0; r < m; ++r) {
            set_color(r, s - 1, r + 1);
            for (int i = 1; i <= (s - 2) / 2; ++i) {
                set_color((r + i) % m, ((r - i) % m + m) % m, r + 1);
            }
        }
    } else {
        // circle method on s points, one vertex idle per round
        for (int r = 0; r < s; ++r) {
            for (int i = 1; i <= (s - 1) / 2; ++i) {
                set_color((r + i) % s, ((r - i) % s + s) % s, r + 1);
            }
        }
    }
    return ec;
}

std::string serialize_edge_coloring(const EdgeColoring& ec) {
    std::ostringstream out;
    out << ec.s << '\n';
    for (int v = 1; v < ec.s; ++v)
        for (int u = 0; u < v; ++u) out << u << ' ' << v << ' ' << ec.color_of(u, v) << '\n';
    return out.str();
}

EdgeColoring parse_edge_coloring(std::string_view text) {
    std::istringstream in{std::string(text)};
    EdgeColoring ec;
    if (!(in >> ec.s) || ec.s < 0) throw std::invalid_argument("edge coloring: missing order");
    ec.color.assign(static_cast<std::size_t>(ec.s) * (ec.s - 1) / 2, 0);
    int u, v, c;
    while (in >> u >> v >> c) {
        if (u == v || u < 0 || v < 0 || u >= ec.s || v >= ec.s) {
            throw std::invalid_argument("edge coloring: bad pair");
        }
        if (u > v) std::swap(u, v);
        ec.color[static_cast<std::size_t>(v) * (v - 1) / 2 + u] = c;
    }
    return ec;
}

InducedSubgraph color_subgraph(const Graph& g, const VertexColoring& c, int i, int j) {
    if (i == j) throw std::invalid_argument("color_subgraph: i and j must differ");
    if (i < 1 || i > c.k || j < 1 || j > c.k) {
        throw std::invalid_argument("color_subgraph: color out of range");
    }
    std::vector<int> verts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.color[v] == i || c.color[v] == j) verts.push_back(v);
    return induced_subgraph(g, verts);
}

std::optional<std::vector<int>> chain_between(const Graph& g, const VertexColoring& c, int u,
                                              int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count()) {
        throw std::invalid_argument("chain_between: vertex out of range");
    }
    if (c.color[u] == c.color[v]) {
        throw std::invalid_argument("chain_between: endpoints share color " +
                                    std::to_string(c.color[u]));
    }
    int i = c.color[u], j = c.color[v];
    VertexMask allowed = 0;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (c.color[x] == i || c.color[x] == j) allowed |= bit(x);
    // BFS for a shortest chain, lowest-index expansion
    std::vector<int> prev(g.vertex_count(), -1);
    std::deque<int> queue{u};
    VertexMask seen = bit(u);
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == v) break;
        for_each_vertex(g.neighbor_mask(x) & allowed & ~seen, [&](int y) {
            seen |= bit(y);
            prev[y] = x;
            queue.push_back(y);
        });
    }
    if (!(seen & bit(v))) return std::nullopt;
    std::vector<int> path;
    for (int x = v; x != -1; x = prev[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> dominating_vertices(const Graph& g, const VertexColoring& c, int i) {
    if (i < 1 || i > c.k) throw std::invalid_argument("dominating_vertices: color out of range");
    std::vector<VertexMask> class_mask(static_cast<std::size_t>(c.k) + 1, 0);
    for (int v = 0; v < g.vertex_count(); ++v) class_mask[c.color[v]] |= bit(v);
    std::vector<int> out;
    for_each_vertex(class_mask[i], [&](int u) {
        for (int j = 1; j <= c.k; ++j) {
            if (j == i) continue;
            if ((g.neighbor_mask(u) & class_mask[j]) == 0) return;
        }
        out.push_back(u);
    });
    return out;
}

}  // namespace imm
