#include "imm/immersion.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "imm/constructions.hpp"
#include "json.hpp"

namespace imm {

namespace {

std::string pair_str(int u, int v) {
    return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

VerificationResult verify_certificate(const Graph& host, const ImmersionCertificate& cert) {
    const Graph& pat = cert.pattern;
    auto fail = [](std::string why) { return VerificationResult{false, false, std::move(why)}; };

    if (static_cast<int>(cert.corners.size()) != pat.vertex_count()) {
        return fail("corner map has " + std::to_string(cert.corners.size()) + " entries for a " +
                    std::to_string(pat.vertex_count()) + "-vertex pattern");
    }
    VertexMask corner_mask = 0;
    for (int p = 0; p < pat.vertex_count(); ++p) {
        int c = cert.corners[p];
        if (c < 0 || c >= host.vertex_count()) {
            return fail("corner of pattern vertex " + std::to_string(p) + " out of host range");
        }
        if (corner_mask & bit(c)) {
            return fail("corner map not injective: host vertex " + std::to_string(c) +
                        " used twice");
        }
        corner_mask |= bit(c);
    }

    std::map<std::pair<int, int>, const PathAssignment*> routed;
    for (const PathAssignment& pa : cert.paths) {
        int u = pa.u, v = pa.v;
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= pat.vertex_count() || u == v) {
            return fail("path entry for malformed pattern edge " + pair_str(pa.u, pa.v));
        }
        if (!pat.has_edge(u, v)) {
            return fail("path entry for pattern non-edge " + pair_str(u, v));
        }
        if (!routed.emplace(std::make_pair(u, v), &pa).second) {
            return fail("duplicate path entry for pattern edge " + pair_str(u, v));
        }
    }
    for (auto [u, v] : pat.edges()) {
        if (!routed.count({u, v})) return fail("missing path for pattern edge " + pair_str(u, v));
    }

    std::map<std::pair<int, int>, std::pair<int, int>> used;  // host edge -> pattern edge
    bool strong = true;
    for (auto& [pe, pa] : routed) {
        const std::vector<int>& path = pa->path;
        std::string tag = "path for pattern edge " + pair_str(pe.first, pe.second);
        if (path.size() < 2) return fail(tag + " has fewer than two vertices");
        int a = cert.corners[pe.first], b = cert.corners[pe.second];
        bool fwd = path.front() == a && path.back() == b;
        bool rev = path.front() == b && path.back() == a;
        if (!fwd && !rev) return fail(tag + " does not connect the mapped corners");
        VertexMask on_path = 0;
        for (std::size_t i = 0; i < path.size(); ++i) {
            int x = path[i];
            if (x < 0 || x >= host.vertex_count()) return fail(tag + " leaves the host");
            if (on_path & bit(x)) {
                return fail(tag + " repeats vertex " + std::to_string(x));
            }
            on_path |= bit(x);
            if (i > 0) {
                int p = path[i - 1];
                if (!host.has_edge(p, x)) {
                    return fail(tag + " uses missing host edge " + pair_str(p, x));
                }
                auto he = std::minmax(p, x);
                auto [it, fresh] = used.emplace(std::make_pair(he.first, he.second), pe);
                if (!fresh) {
                    return fail("paths for pattern edges " +
                                pair_str(it->second.first, it->second.second) + " and " +
                                pair_str(pe.first, pe.second) + " share host edge " +
                                pair_str(he.first, he.second));
                }
            }
        }
        if ((on_path & corner_mask & ~bit(path.front()) & ~bit(path.back())) != 0) strong = false;
    }
    return {true, strong, ""};
}

VerificationResult verify_certificate(const ImmersionCertificate& cert) {
    return verify_certificate(cert.host, cert);
}

Graph apply_lift(const Graph& g, int u, int v, int w) {
    if (u == w) throw std::invalid_argument("lift: endpoints coincide at " + std::to_string(u));
    if (!g.has_edge(u, v)) throw std::invalid_argument("lift: missing edge " + pair_str(u, v));
    if (!g.has_edge(v, w)) throw std::invalid_argument("lift: missing edge " + pair_str(v, w));
    if (g.has_edge(u, w)) {
        throw std::invalid_argument("lift: edge " + pair_str(u, w) + " already present");
    }
    return g.without_edge(u, v).without_edge(v, w).with_edge(u, w);
}

namespace {

struct SubgraphSearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> map;  // pattern -> host, -1 unset
    VertexMask used = 0;
    std::vector<int> order;

    bool place(std::size_t i) {
        if (i == order.size()) return true;
        int p = order[i];
        for (int h = 0; h < host.vertex_count(); ++h) {
            if (used & bit(h)) continue;
            if (host.degree(h) < pattern.degree(p)) continue;
            bool ok = true;
            for_each_vertex(pattern.neighbor_mask(p), [&](int q) {
                if (map[q] != -1 && !host.has_edge(map[q], h)) ok = false;
            });
            if (!ok) continue;
            map[p] = h;
            used |= bit(h);
            if (place(i + 1)) return true;
            map[p] = -1;
            used &= ~bit(h);
        }
        return false;
    }
};

}  // namespace

bool contains_subgraph(const Graph& host, const Graph& pattern) {
    if (pattern.vertex_count() > host.vertex_count()) return false;
    if (pattern.edge_count() > host.edge_count()) return false;
    SubgraphSearch s{host, pattern, std::vector<int>(pattern.vertex_count(), -1), 0, {}};
    s.order.resize(pattern.vertex_count());
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    return s.place(0);
}

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<int> map;
    VertexMask used = 0;

    bool place(int i) {
        if (i == a.vertex_count()) return true;
        for (int h = 0; h < b.vertex_count(); ++h) {
            if (used & bit(h)) continue;
            if (b.degree(h) != a.degree(i)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                if (a.has_edge(j, i) != b.has_edge(map[j], h)) ok = false;
            }
            if (!ok) continue;
            map[i] = h;
            used |= bit(h);
            if (place(i + 1)) return true;
            used &= ~bit(h);
        }
        return false;
    }
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (degree_sequence(a) != degree_sequence(b)) return false;
    IsoSearch s{a, b, std::vector<int>(a.vertex_count(), -1), 0};
    return s.place(0);
}

namespace {

// -------- path packing oracle --------

struct Packer {
    const Graph& host;
    BudgetMeter& meter;
    std::vector<std::pair<int, int>> host_endpoints;  // per pattern edge
    std::vector<std::vector<int>> routes;
    std::vector<char> edge_used;  // host edge u*n+v, u < v

    int n;
    explicit Packer(const Graph& h, BudgetMeter& m) : host(h), meter(m), n(h.vertex_count()) {
        edge_used.assign(static_cast<std::size_t>(n) * n, 0);
    }

    char& used(int u, int v) {
        if (u > v) std::swap(u, v);
        return edge_used[static_cast<std::size_t>(u) * n + v];
    }

    void enumerate_paths(int a, int b, std::vector<std::vector<int>>& out) {
        std::vector<int> cur{a};
        VertexMask on = bit(a);
        enumerate_step(a, b, cur, on, out);
        std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
            return x.size() < y.size();
        });
    }

    void enumerate_step(int at, int b, std::vector<int>& cur, VertexMask on,
                        std::vector<std::vector<int>>& out) {
        meter.tick();
        for_each_vertex(host.neighbor_mask(at) & ~on, [&](int nx) {
            if (used(at, nx)) return;
            if (nx == b) {
                cur.push_back(nx);
                out.push_back(cur);
                cur.pop_back();
                return;
            }
            cur.push_back(nx);
            enumerate_step(nx, b, cur, on | bit(nx), out);
            cur.pop_back();
        });
    }

    bool pack(int remaining) {
        if (remaining == 0) return true;
        meter.tick();
        // fail-first: route the pattern edge with the fewest open paths
        int pick = -1;
        std::vector<std::vector<int>> pick_paths;
        for (std::size_t e = 0; e < routes.size(); ++e) {
            if (!routes[e].empty()) continue;
            std::vector<std::vector<int>> cand;
            enumerate_paths(host_endpoints[e].first, host_endpoints[e].second, cand);
            if (cand.empty()) return false;
            if (pick == -1 || cand.size() < pick_paths.size()) {
                pick = static_cast<int>(e);
                pick_paths = std::move(cand);
            }
        }
        for (const std::vector<int>& path : pick_paths) {
            for (std::size_t i = 1; i < path.size(); ++i) used(path[i - 1], path[i]) = 1;
            routes[pick] = path;
            if (pack(remaining - 1)) return true;
            routes[pick].clear();
            for (std::size_t i = 1; i < path.size(); ++i) used(path[i - 1], path[i]) = 0;
        }
        return false;
    }
};

struct InjectionSearch {
    const Graph& host;
    const Graph& pattern;
    BudgetMeter& meter;
    std::vector<std::pair<int, int>> pattern_edges;
    std::vector<int> corners;
    VertexMask taken = 0;
    std::optional<ImmersionCertificate> found;

    bool assign(int p) {
        if (p == pattern.vertex_count()) return try_pack();
        for (int h = 0; h < host.vertex_count(); ++h) {
            if (taken & bit(h)) continue;
            if (host.degree(h) < pattern.degree(p)) continue;
            meter.tick();
            corners[p] = h;
            taken |= bit(h);
            if (assign(p + 1)) return true;
            taken &= ~bit(h);
        }
        return false;
    }

    bool try_pack() {
        Packer packer(host, meter);
        packer.routes.assign(pattern_edges.size(), {});
        packer.host_endpoints.clear();
        for (auto [u, v] : pattern_edges) {
            packer.host_endpoints.emplace_back(corners[u], corners[v]);
        }
        if (!packer.pack(static_cast<int>(pattern_edges.size()))) return false;
        ImmersionCertificate cert{pattern, host, corners, {}};
        for (std::size_t e = 0; e < pattern_edges.size(); ++e) {
            cert.paths.push_back(
                {pattern_edges[e].first, pattern_edges[e].second, packer.routes[e]});
        }
        found = std::move(cert);
        return true;
    }
};

}  // namespace

PathsOracleResult immersion_oracle_paths(const Graph& host, const Graph& pattern, Budget budget) {
    if (pattern.vertex_count() > host.vertex_count() ||
        pattern.edge_count() > host.edge_count()) {
        return {OracleStatus::kNone, std::nullopt};
    }
    BudgetMeter meter(budget, "immersion_oracle_paths");
    InjectionSearch search{host,    pattern,
                           meter,   pattern.edges(),
                           std::vector<int>(pattern.vertex_count(), -1),
                           0,       std::nullopt};
    try {
        if (search.assign(0)) return {OracleStatus::kFound, std::move(search.found)};
    } catch (const BudgetExceeded&) {
        return {OracleStatus::kBudget, std::nullopt};
    }
    return {OracleStatus::kNone, std::nullopt};
}

namespace {

std::uint64_t fnv_step(std::uint64_t h, std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xff;
        h *= 1099511628211ull;
    }
    return h;
}

// Cheap isomorphism-invariant bucket key.
std::uint64_t invariant_key(const Graph& g) {
    std::uint64_t h = 1469598103934665603ull;
    h = fnv_step(h, static_cast<std::uint64_t>(g.vertex_count()));
    h = fnv_step(h, static_cast<std::uint64_t>(g.edge_count()));
    std::vector<std::uint64_t> per_vertex;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t tri = 0;
        for_each_vertex(g.neighbor_mask(v), [&](int u) {
            tri += std::popcount(g.neighbor_mask(v) & g.neighbor_mask(u));
        });
        per_vertex.push_back((static_cast<std::uint64_t>(g.degree(v)) << 32) | (tri / 2));
    }
    std::sort(per_vertex.begin(), per_vertex.end());
    for (std::uint64_t x : per_vertex) h = fnv_step(h, x);
    return h;
}

}  // namespace

LiftOracleStatus immersion_oracle_lifts(const Graph& host, const Graph& pattern, Budget budget) {
    BudgetMeter meter(budget, "immersion_oracle_lifts");
    try {
        if (contains_subgraph(host, pattern)) return LiftOracleStatus::kTrue;
        std::unordered_map<std::uint64_t, std::vector<Graph>> seen;
        seen[invariant_key(host)].push_back(host);
        std::deque<Graph> queue{host};
        bool hit = false;
        auto consider = [&](const Graph& g) {
            meter.tick();
            std::vector<Graph>& bucket = seen[invariant_key(g)];
            for (const Graph& other : bucket) {
                meter.tick();
                if (isomorphic(g, other)) return;
            }
            if (contains_subgraph(g, pattern)) {
                hit = true;
                return;
            }
            bucket.push_back(g);
            queue.push_back(g);
        };
        while (!queue.empty() && !hit) {
            Graph g = std::move(queue.front());
            queue.pop_front();
            for (auto [u, v] : g.edges()) {
                consider(g.without_edge(u, v));
                if (hit) break;
            }
            if (hit) break;
            for (int v = 0; v < g.vertex_count() && !hit; ++v) {
                std::vector<int> nb = g.neighbors(v);
                for (std::size_t i = 0; i < nb.size() && !hit; ++i) {
                    for (std::size_t j = i + 1; j < nb.size() && !hit; ++j) {
                        if (!g.has_edge(nb[i], nb[j])) consider(apply_lift(g, nb[i], v, nb[j]));
                    }
                }
            }
        }
        return hit ? LiftOracleStatus::kTrue : LiftOracleStatus::kFalse;
    } catch (const BudgetExceeded&) {
        return LiftOracleStatus::kBudget;
    }
}

ImmersionCertificate clique_certificate(const Graph& host, std::span<const int> clique) {
    std::vector<int> corners(clique.begin(), clique.end());
    std::sort(corners.begin(), corners.end());
    int t = static_cast<int>(corners.size());
    ImmersionCertificate cert{Graph::complete(t), host, corners, {}};
    for (int v = 1; v < t; ++v) {
        for (int u = 0; u < v; ++u) {
            if (!host.has_edge(corners[u], corners[v])) {
                throw std::invalid_argument("clique_certificate: vertices " +
                                            pair_str(corners[u], corners[v]) + " not adjacent");
            }
            cert.paths.push_back({u, v, {corners[u], corners[v]}});
        }
    }
    return cert;
}

MaxCliqueImmersionResult max_clique_immersion(const Graph& g, Budget budget) {
    int n = g.vertex_count();
    ImmersionCertificate best;
    best.host = g;
    int best_t = 0;
    auto offer = [&](const ImmersionCertificate& cert) {
        if (cert.pattern.vertex_count() > best_t) {
            best_t = cert.pattern.vertex_count();
            best = cert;
        }
    };
    if (n == 0) return {0, best, true};

    CliqueResult cl = clique_number(g, budget);
    offer(clique_certificate(g, cl.witness));
    try {
        if (independence_number(g, budget).a <= 2) {
            ThirdImmersionResult third = construct_third_immersion(g, budget);
            if (third.certificate) offer(*third.certificate);
            else if (third.clique) offer(clique_certificate(g, *third.clique));
        }
        if (is_k_s_dense(g, 5, 6).dense) offer(construct_dense56_immersion(g, budget));
        if (!complement_has_induced_c4(g).found) {
            offer(construct_c4free_complement_immersion(g, budget));
        }
    } catch (const BudgetExceeded&) {
        // constructive bounds are optional, the descent below is the authority
    }

    int ub = 1;
    while (ub < n && (ub + 1) * ub / 2 <= g.edge_count()) ++ub;
    for (int t = ub; t > best_t; --t) {
        PathsOracleResult res = immersion_oracle_paths(g, Graph::complete(t), budget);
        if (res.status == OracleStatus::kFound) return {t, *res.certificate, true};
        if (res.status == OracleStatus::kBudget) return {best_t, best, false};
    }
    return {best_t, best, true};
}

std::string serialize_certificate(const ImmersionCertificate& cert) {
    nlohmann::ordered_json j;
    j["pattern"] = serialize_graph6(cert.pattern);
    j["host"] = serialize_graph6(cert.host);
    j["corners"] = cert.corners;
    nlohmann::ordered_json paths = nlohmann::ordered_json::array();
    for (const PathAssignment& pa : cert.paths) {
        nlohmann::ordered_json p;
        p["edge"] = {pa.u, pa.v};
        p["path"] = pa.path;
        paths.push_back(std::move(p));
    }
    j["paths"] = std::move(paths);
    return j.dump();
}

ImmersionCertificate parse_certificate(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("certificate: not valid JSON: ") + e.what());
    }
    try {
        ImmersionCertificate cert;
        cert.pattern = parse_graph6(j.at("pattern").get<std::string>());
        cert.host = parse_graph6(j.at("host").get<std::string>());
        cert.corners = j.at("corners").get<std::vector<int>>();
        for (const auto& p : j.at("paths")) {
            PathAssignment pa;
            auto edge = p.at("edge").get<std::vector<int>>();
            if (edge.size() != 2) throw std::invalid_argument("certificate: edge needs two ends");
            pa.u = edge[0];
            pa.v = edge[1];
            pa.path = p.at("path").get<std::vector<int>>();
            cert.paths.push_back(std::move(pa));
        }
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("certificate: missing or mistyped field: ") +
                                    e.what());
    }
}

}  // namespace imm
