#include "imm/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace imm {

namespace {

std::string join(std::span<const int> xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string bundle_text(const Graph& g, const VertexColoring* coloring, const std::string& note) {
    std::ostringstream out;
    out << "graph6 " << serialize_graph6(g) << '\n';
    if (coloring) out << "coloring\n" << serialize_coloring(*coloring);
    out << "note " << note << '\n';
    return out.str();
}

void check_certificate_or_die(const ImmersionCertificate& cert, const std::string& who) {
    VerificationResult res = verify_certificate(cert);
    if (!res.valid || !res.strong) {
        throw std::logic_error(who + ": constructed certificate failed verification: " +
                               (res.valid ? "not strong" : res.violation));
    }
}

}  // namespace

DensityWitness is_k_s_dense(const Graph& g, int k, int s) {
    if (k < 1 || s < 0) throw std::invalid_argument("is_k_s_dense: need k >= 1, s >= 0");
    int n = g.vertex_count();
    if (n < k) return {true, std::nullopt};
    std::vector<int> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    do {
        int edges = 0;
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i)
                if (g.has_edge(subset[i], subset[j])) ++edges;
        if (edges < s) return {false, subset};
    } while (next_combination(subset, n));
    return {true, std::nullopt};
}

InducedC4Result complement_has_induced_c4(const Graph& g) {
    int n = g.vertex_count();
    if (n < 4) return {false, std::nullopt};
    Graph comp = complement(g);
    std::vector<int> s(4);
    std::iota(s.begin(), s.end(), 0);
    do {
        // induced C4 iff all four vertices have induced degree 2
        bool all_two = true;
        for (int i = 0; i < 4 && all_two; ++i) {
            int d = 0;
            for (int j = 0; j < 4; ++j)
                if (i != j && comp.has_edge(s[i], s[j])) ++d;
            if (d != 2) all_two = false;
        }
        if (all_two) return {true, std::array<int, 4>{s[0], s[1], s[2], s[3]}};
    } while (next_combination(s, n));
    return {false, std::nullopt};
}

MultipartiteImmersion construct_multipartite_immersion(std::span<const int> sizes) {
    int k = static_cast<int>(sizes.size());
    if (k < 2) throw std::invalid_argument("multipartite: need at least 2 classes");
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("multipartite: empty class");
    int reserved = sizes[k - 1];
    for (int s : sizes) {
        if (s > reserved) {
            throw std::invalid_argument(
                "multipartite: reserved class (last) must be a largest one");
        }
    }
    Graph g = Graph::complete_multipartite(sizes);

    std::vector<int> class_start(k + 1, 0);
    for (int c = 0; c < k; ++c) class_start[c + 1] = class_start[c] + sizes[c];
    int u_start = class_start[k - 1];

    bool all_equal = std::all_of(sizes.begin(), sizes.end(),
                                 [&](int s) { return s == sizes[0]; });
    int base = class_start[k - 1];  // sum of non-reserved class sizes

    std::vector<int> corners;
    for (int v = 0; v < base; ++v) corners.push_back(v);
    std::vector<EdgeColoring> factorization(k - 1);
    int colors_used = 0;
    for (int c = 0; c + 1 < k; ++c) {
        if (sizes[c] >= 2) {
            factorization[c] = one_factorization(sizes[c]);
            colors_used = std::max(colors_used, factorization[c].color_count());
        }
    }
    bool extra_corner = all_equal && (sizes[0] == 1 || sizes[0] % 2 == 0);
    if (extra_corner) {
        // highest-index reserved vertex not claimed by an edge color
        if (colors_used >= reserved) {
            throw std::logic_error("multipartite: no reserved vertex left for the extra corner");
        }
        corners.push_back(u_start + reserved - 1);
    }

    int t = static_cast<int>(corners.size());
    ImmersionCertificate cert{Graph::complete(t), g, corners, {}};

    std::vector<int> cls(g.vertex_count());
    for (int c = 0; c < k; ++c)
        for (int v = class_start[c]; v < class_start[c + 1]; ++v) cls[v] = c;

    for (int b = 1; b < t; ++b) {
        for (int a = 0; a < b; ++a) {
            int x = corners[a], y = corners[b];
            if (cls[x] != cls[y]) {
                cert.paths.push_back({a, b, {x, y}});
            } else {
                // same class: route through the reserved vertex owning this
                // pair's edge color
                int c = cls[x];
                int color = factorization[c].color_of(x - class_start[c], y - class_start[c]);
                cert.paths.push_back({a, b, {x, u_start + (color - 1), y}});
            }
        }
    }
    check_certificate_or_die(cert, "multipartite");
    return {std::move(g), std::move(cert)};
}

MultipartiteImmersion construct_multipartite_immersion(std::initializer_list<int> sizes) {
    return construct_multipartite_immersion(std::span<const int>(sizes.begin(), sizes.size()));
}

namespace {

// one dominating vertex per color; classes of size two whose joint
// subgraph is disconnected need mutually adjacent picks
struct RepresentativeSearch {
    const Graph& g;
    int k;
    const std::vector<std::vector<int>>& candidates;  // per color, ascending
    const std::vector<std::vector<bool>>& constrained;  // color pairs needing adjacency
    std::vector<int> picked;

    bool place(int color) {
        if (color > k) return true;
        for (int u : candidates[color]) {
            bool ok = true;
            for (int j = 1; j < color && ok; ++j) {
                if (constrained[j][color] && !g.has_edge(picked[j], u)) ok = false;
            }
            if (!ok) continue;
            picked[color] = u;
            if (place(color + 1)) return true;
        }
        return false;
    }
};

ImmersionCertificate chain_corner_certificate(const Graph& g, const VertexColoring& coloring,
                                              const std::vector<int>& corner_of_color,
                                              const std::string& who) {
    int k = coloring.k;
    std::vector<int> corners(corner_of_color.begin() + 1, corner_of_color.end());
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return corners[a] < corners[b]; });
    std::vector<int> sorted;
    std::vector<int> color_of_pattern(k);
    for (int i = 0; i < k; ++i) {
        sorted.push_back(corners[order[i]]);
        color_of_pattern[i] = order[i] + 1;
    }
    ImmersionCertificate cert{Graph::complete(k), g, sorted, {}};
    for (int b = 1; b < k; ++b) {
        for (int a = 0; a < b; ++a) {
            int x = sorted[a], y = sorted[b];
            if (g.has_edge(x, y)) {
                cert.paths.push_back({a, b, {x, y}});
                continue;
            }
            std::optional<std::vector<int>> chain = chain_between(g, coloring, x, y);
            if (!chain) {
                throw FalsificationError(
                    who + ": corners of colors " + std::to_string(color_of_pattern[a]) + " and " +
                        std::to_string(color_of_pattern[b]) + " have no chain",
                    bundle_text(g, &coloring,
                                "no chain between " + std::to_string(x) + " and " +
                                    std::to_string(y)));
            }
            cert.paths.push_back({a, b, *chain});
        }
    }
    return cert;
}

}  // namespace

ImmersionCertificate construct_dense56_immersion(const Graph& g, Budget budget) {
    DensityWitness density = is_k_s_dense(g, 5, 6);
    if (!density.dense) {
        throw std::invalid_argument("dense56: graph is not (5,6)-dense, witness subset {" +
                                    join(*density.violating_set) + "}");
    }
    int n = g.vertex_count();
    ChromaticResult chi = chromatic_number(g, budget);

    if (n < 5) {
        // small orders always carry the clique outright
        CliqueResult cl = clique_number(g, budget);
        if (cl.w < chi.k) {
            throw FalsificationError("dense56: small graph with omega < chi",
                                     bundle_text(g, &chi.witness, "omega " + std::to_string(cl.w)));
        }
        std::vector<int> corners(cl.witness.begin(), cl.witness.begin() + chi.k);
        ImmersionCertificate cert = clique_certificate(g, corners);
        check_certificate_or_die(cert, "dense56");
        return cert;
    }

    int k = chi.k;
    std::vector<std::vector<int>> classes(k + 1);
    for (int v = 0; v < n; ++v) classes[chi.witness.color[v]].push_back(v);
    for (int i = 1; i <= k; ++i) {
        if (static_cast<int>(classes[i].size()) > 3) {
            throw FalsificationError(
                "dense56: color class of size > 3 in a (5,6)-dense graph",
                bundle_text(g, &chi.witness, "class " + std::to_string(i)));
        }
    }

    std::vector<std::vector<int>> candidates(k + 1);
    for (int i = 1; i <= k; ++i) {
        candidates[i] = dominating_vertices(g, chi.witness, i);
        if (candidates[i].empty()) {
            throw FalsificationError("dense56: color without dominating vertex",
                                     bundle_text(g, &chi.witness, "color " + std::to_string(i)));
        }
    }
    std::vector<std::vector<bool>> constrained(k + 1, std::vector<bool>(k + 1, false));
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            if (classes[i].size() == 2 && classes[j].size() == 2) {
                InducedSubgraph cij = color_subgraph(g, chi.witness, i, j);
                if (!is_connected(cij.graph)) {
                    constrained[i][j] = constrained[j][i] = true;
                }
            }
        }
    }
    RepresentativeSearch rs{g, k, candidates, constrained, std::vector<int>(k + 1, -1)};
    if (!rs.place(1)) {
        throw FalsificationError(
            "dense56: no consistent choice of adjacent dominating representatives",
            bundle_text(g, &chi.witness, "representative selection exhausted"));
    }
    ImmersionCertificate cert = chain_corner_certificate(g, chi.witness, rs.picked, "dense56");
    check_certificate_or_die(cert, "dense56");
    return cert;
}

ImmersionCertificate construct_c4free_complement_immersion(const Graph& g, Budget budget) {
    InducedC4Result c4 = complement_has_induced_c4(g);
    if (c4.found) {
        auto& w = *c4.witness;
        throw std::invalid_argument("c4free: complement has an induced C4 on {" +
                                    std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
                                    std::to_string(w[2]) + "," + std::to_string(w[3]) + "}");
    }
    int n = g.vertex_count();
    ChromaticResult chi = chromatic_number(g, budget);
    int k = chi.k;
    std::vector<int> corner_of_color(k + 1, -1);
    for (int i = 1; i <= k; ++i) {
        std::vector<int> dom = dominating_vertices(g, chi.witness, i);
        if (dom.empty()) {
            throw FalsificationError("c4free: color without dominating vertex",
                                     bundle_text(g, &chi.witness, "color " + std::to_string(i)));
        }
        corner_of_color[i] = dom[0];
    }

    std::vector<int> corners(corner_of_color.begin() + 1, corner_of_color.end());
    std::sort(corners.begin(), corners.end());
    ImmersionCertificate cert{Graph::complete(k), g, corners, {}};
    for (int b = 1; b < k; ++b) {
        for (int a = 0; a < b; ++a) {
            int u = corners[a], v = corners[b];
            if (g.has_edge(u, v)) {
                cert.paths.push_back({a, b, {u, v}});
                continue;
            }
            int ci = chi.witness.color[u], cj = chi.witness.color[v];
            int x = -1, y = -1;
            for (int z = 0; z < n && x == -1; ++z) {
                if (chi.witness.color[z] == cj && g.has_edge(u, z)) x = z;
            }
            for (int z = 0; z < n && y == -1; ++z) {
                if (chi.witness.color[z] == ci && g.has_edge(v, z)) y = z;
            }
            if (x == -1 || y == -1) {
                throw std::logic_error("c4free: dominating corner lost its witness neighbor");
            }
            if (!g.has_edge(x, y)) {
                // would be an induced C4 {u,x,y,v} in the complement, which
                // the precondition already excluded
                throw std::logic_error("c4free: u-x-y-v chain broken despite C4-free complement");
            }
            cert.paths.push_back({a, b, {u, x, y, v}});
        }
    }
    check_certificate_or_die(cert, "c4free");
    return cert;
}

ThirdImmersionResult construct_third_immersion(const Graph& g, Budget budget,
                                               std::span<const int> corner_order) {
    IndependenceResult alpha = independence_number(g, budget);
    if (alpha.a > 2) {
        throw std::invalid_argument("third: independence number " + std::to_string(alpha.a) +
                                    " > 2, witness {" + join(alpha.witness) + "}");
    }
    int n = g.vertex_count();
    int t = (n + 2) / 3;
    if (n == 0) {
        ImmersionCertificate cert{Graph(0), g, {}, {}};
        return {std::nullopt, cert};
    }

    int threshold = 2 * n / 3;  // floor(2n/3)
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < threshold) {
            // the non-neighborhood is a clique of size >= ceil(n/3)
            std::vector<int> pool = mask_to_vertices(g.non_neighbor_mask(v));
            std::vector<int> clique(pool.begin(), pool.begin() + t);
            for (int j = 1; j < t; ++j)
                for (int i = 0; i < j; ++i)
                    if (!g.has_edge(clique[i], clique[j])) {
                        throw FalsificationError(
                            "third: non-neighborhood not complete with alpha <= 2",
                            bundle_text(g, nullptr, "vertex " + std::to_string(v)));
                    }
            return {clique, std::nullopt};
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (!corner_order.empty()) {
        if (static_cast<int>(corner_order.size()) != n) {
            throw std::invalid_argument("third: corner_order must list all vertices");
        }
        order.assign(corner_order.begin(), corner_order.end());
        std::vector<bool> seen(n, false);
        for (int v : order) {
            if (v < 0 || v >= n || seen[v]) {
                throw std::invalid_argument("third: corner_order is not a permutation");
            }
            seen[v] = true;
        }
    }
    std::vector<int> corners(order.begin(), order.begin() + t);
    std::sort(corners.begin(), corners.end());
    VertexMask in_u = 0;
    for (int v : corners) in_u |= bit(v);
    VertexMask in_w = g.vertex_mask() & ~in_u;

    ImmersionCertificate cert{Graph::complete(t), g, corners, {}};
    // per hub vertex in W, the set of corners already routed through it
    std::vector<VertexMask> hub_used(n, 0);
    for (int b = 1; b < t; ++b) {
        for (int a = 0; a < b; ++a) {
            int u = corners[a], v = corners[b];
            if (g.has_edge(u, v)) {
                cert.paths.push_back({a, b, {u, v}});
                continue;
            }
            VertexMask nu = g.neighbor_mask(u) & in_w;
            VertexMask nv = g.neighbor_mask(v) & in_w;
            if ((nu | nv) != in_w) {
                throw FalsificationError(
                    "third: W vertex non-adjacent to both ends of a non-edge with alpha <= 2",
                    bundle_text(g, nullptr,
                                "pair " + std::to_string(u) + " " + std::to_string(v)));
            }
            VertexMask common = nu & nv;
            int z = -1;
            for_each_vertex(common, [&](int cand) {
                if (z != -1) return;
                if ((hub_used[cand] & (bit(u) | bit(v))) == 0) z = cand;
            });
            if (z == -1) {
                throw FalsificationError(
                    "third: greedy hub selection exhausted",
                    bundle_text(g, nullptr,
                                "pair " + std::to_string(u) + " " + std::to_string(v)));
            }
            hub_used[z] |= bit(u) | bit(v);
            cert.paths.push_back({a, b, {u, z, v}});
        }
    }
    check_certificate_or_die(cert, "third");
    return {std::nullopt, cert};
}

}  // namespace imm
