#include "imm/lab.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace imm {

Graph alpha2_random(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("alpha2_random: need n >= 1");
    std::seed_seq seq{static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32)};
    std::mt19937_64 rng(seq);
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    // Fisher-Yates with plain modulo draws; bias is irrelevant here but
    // cross-platform determinism is not
    for (std::size_t i = pairs.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(pairs[i - 1], pairs[j]);
    }
    Graph tf(n);
    for (auto [u, v] : pairs) {
        // reject edges that would close a triangle; one pass gives a
        // maximal triangle-free graph since common neighborhoods only grow
        if ((tf.neighbor_mask(u) & tf.neighbor_mask(v)) == 0) tf = tf.with_edge(u, v);
    }
    return complement(tf);
}

void alpha2_enumerate(int n, const std::function<void(const Graph&)>& visit) {
    if (n < 1) throw std::invalid_argument("alpha2_enumerate: need n >= 1");
    if (n > 7) {
        throw std::invalid_argument(
            "alpha2_enumerate: built-in enumeration stops at n = 7; pipe a graph6 stream "
            "for larger orders");
    }
    int bits = n * (n - 1) / 2;
    // complement triangle masks in the shared pair-bit layout
    std::vector<std::uint64_t> triples;
    auto pair_bit = [](int u, int v) {
        if (u > v) std::swap(u, v);
        return std::uint64_t{1} << (v * (v - 1) / 2 + u);
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                triples.push_back(pair_bit(a, b) | pair_bit(a, c) | pair_bit(b, c));
    std::uint64_t full = bits == 0 ? 0 : (~std::uint64_t{0} >> (64 - bits));
    for (std::uint64_t mask = 0;; ++mask) {
        std::uint64_t comp = ~mask & full;
        bool ok = true;
        for (std::uint64_t t : triples) {
            if ((comp & t) == t) {
                ok = false;
                break;
            }
        }
        if (ok) visit(Graph::from_edge_mask(n, mask));
        if (mask == full) break;
    }
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::kHolds: return "holds";
        case Verdict::kFails: return "fails";
        case Verdict::kSkipped: return "skipped";
    }
    return "?";
}

std::string_view conjecture3_status_name(Conjecture3Status s) {
    switch (s) {
        case Conjecture3Status::kHolds: return "holds";
        case Conjecture3Status::kFails: return "fails";
        case Conjecture3Status::kBudget: return "budget";
    }
    return "?";
}

namespace {

std::string vec_str(const std::vector<int>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(xs[i]);
    }
    return out + "}";
}

// solver results shared across conditions, each computed at most once
struct LabCache {
    const Graph& g;
    Budget budget;

    std::optional<ChromaticResult> chi_v;
    std::optional<IndependenceResult> alpha_v;
    std::optional<CliqueResult> omega_v;
    bool chi_budget = false, alpha_budget = false, omega_budget = false;

    const ChromaticResult* chi() {
        if (!chi_v && !chi_budget) {
            try {
                chi_v = chromatic_number(g, budget);
            } catch (const BudgetExceeded&) {
                chi_budget = true;
            }
        }
        return chi_v ? &*chi_v : nullptr;
    }
    const IndependenceResult* alpha() {
        if (!alpha_v && !alpha_budget) {
            try {
                alpha_v = independence_number(g, budget);
            } catch (const BudgetExceeded&) {
                alpha_budget = true;
            }
        }
        return alpha_v ? &*alpha_v : nullptr;
    }
    const CliqueResult* omega() {
        if (!omega_v && !omega_budget) {
            try {
                omega_v = clique_number(g, budget);
            } catch (const BudgetExceeded&) {
                omega_budget = true;
            }
        }
        return omega_v ? &*omega_v : nullptr;
    }
};

ConditionReport budget_skip(std::string id, std::string desc) {
    return {std::move(id), std::move(desc), Verdict::kSkipped, "budget exceeded"};
}

using Evaluator = std::function<ConditionReport(LabCache&)>;

struct ConditionSpec {
    std::string id;
    std::string description;
    Evaluator eval;
};

bool perfect_matching_exists(const Graph& g, Budget budget) {
    if (g.vertex_count() % 2 != 0) return false;
    return static_cast<int>(maximum_matching(g, budget).size()) * 2 == g.vertex_count();
}

std::vector<ConditionSpec> battery_conditions() {
    std::vector<ConditionSpec> specs;
    auto add = [&](std::string id, std::string desc, Evaluator e) {
        specs.push_back({std::move(id), std::move(desc), std::move(e)});
    };

    add("alpha_le_2", "independence number at most 2", [](LabCache& c) -> ConditionReport {
        const auto* a = c.alpha();
        if (!a) return budget_skip("alpha_le_2", "");
        if (a->a <= 2) return {"", "", Verdict::kHolds, ""};
        return {"", "", Verdict::kFails, "independent set " + vec_str(a->witness)};
    });
    add("order_le_2chi", "n <= 2 chi", [](LabCache& c) -> ConditionReport {
        const auto* chi = c.chi();
        if (!chi) return budget_skip("", "");
        if (c.g.vertex_count() <= 2 * chi->k) return {"", "", Verdict::kHolds, ""};
        return {"", "", Verdict::kFails,
                "n=" + std::to_string(c.g.vertex_count()) + ", chi=" + std::to_string(chi->k)};
    });
    add("color_critical", "deleting any vertex lowers chi", [](LabCache& c) -> ConditionReport {
        const auto* chi = c.chi();
        if (!chi) return budget_skip("", "");
        for (int v = 0; v < c.g.vertex_count(); ++v) {
            if (chromatic_number(c.g.without_vertex(v), c.budget).k >= chi->k) {
                return {"", "", Verdict::kFails,
                        "chi unchanged after deleting vertex " + std::to_string(v)};
            }
        }
        return {"", "", Verdict::kHolds, ""};
    });
    add("complement_connected", "complement is connected", [](LabCache& c) -> ConditionReport {
        if (is_connected(complement(c.g))) return {"", "", Verdict::kHolds, ""};
        return {"", "", Verdict::kFails, "complement splits into components"};
    });
    add("order_eq_2chi_minus_1", "n = 2 chi - 1", [](LabCache& c) -> ConditionReport {
        const auto* chi = c.chi();
        if (!chi) return budget_skip("", "");
        if (c.g.vertex_count() == 2 * chi->k - 1) return {"", "", Verdict::kHolds, ""};
        return {"", "", Verdict::kFails,
                "n=" + std::to_string(c.g.vertex_count()) + ", chi=" + std::to_string(chi->k)};
    });
    add("complement_minus_vertex_matchable",
        "complement minus any vertex has a perfect matching", [](LabCache& c) -> ConditionReport {
            int n = c.g.vertex_count();
            if ((n - 1) % 2 != 0) {
                return {"", "", Verdict::kFails,
                        "n-1 = " + std::to_string(n - 1) + " is odd, no perfect matching"};
            }
            Graph comp = complement(c.g);
            for (int v = 0; v < n; ++v) {
                if (!perfect_matching_exists(comp.without_vertex(v), c.budget)) {
                    return {"", "", Verdict::kFails,
                            "complement minus vertex " + std::to_string(v) + " has no perfect "
                            "matching"};
                }
            }
            return {"", "", Verdict::kHolds, ""};
        });
    add("codegree_bound", "nonadjacent pairs share at most (n-1)/2 neighbors",
        [](LabCache& c) -> ConditionReport {
            int n = c.g.vertex_count();
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (c.g.has_edge(u, v)) continue;
                    int shared = std::popcount(c.g.neighbor_mask(u) & c.g.neighbor_mask(v));
                    if (2 * shared > n - 1) {
                        return {"", "", Verdict::kFails,
                                "pair " + std::to_string(u) + "," + std::to_string(v) +
                                    " shares " + std::to_string(shared) + " neighbors"};
                    }
                }
            }
            return {"", "", Verdict::kHolds, ""};
        });
    add("clique_ge_quarter", "omega >= (n+1)/4", [](LabCache& c) -> ConditionReport {
        const auto* om = c.omega();
        if (!om) return budget_skip("", "");
        if (4 * om->w >= c.g.vertex_count() + 1) return {"", "", Verdict::kHolds, ""};
        return {"", "", Verdict::kFails, "omega = " + std::to_string(om->w)};
    });
    add("connected", "graph is connected", [](LabCache& c) -> ConditionReport {
        if (is_connected(c.g)) return {"", "", Verdict::kHolds, ""};
        return {"", "", Verdict::kFails, "graph splits into components"};
    });
    add("min_degree_ge_half", "minimum degree at least ceil(n/2)",
        [](LabCache& c) -> ConditionReport {
            int n = c.g.vertex_count();
            int need = (n + 1) / 2;
            for (int v = 0; v < n; ++v) {
                if (c.g.degree(v) < need) {
                    return {"", "", Verdict::kFails,
                            "vertex " + std::to_string(v) + " has degree " +
                                std::to_string(c.g.degree(v))};
                }
            }
            return {"", "", Verdict::kHolds, ""};
        });
    add("hamiltonian", "graph has a spanning cycle", [](LabCache& c) -> ConditionReport {
        if (c.g.vertex_count() < 3) return {"", "", Verdict::kFails, "order below 3"};
        HamiltonianResult h = is_hamiltonian(c.g, c.budget);
        if (h.hamiltonian) return {"", "", Verdict::kHolds, ""};
        return {"", "", Verdict::kFails, "no spanning cycle"};
    });
    add("vertex_deleted_matchable", "graph minus any vertex has a perfect matching",
        [](LabCache& c) -> ConditionReport {
            int n = c.g.vertex_count();
            if ((n - 1) % 2 != 0) {
                return {"", "", Verdict::kFails,
                        "n-1 = " + std::to_string(n - 1) + " is odd, no perfect matching"};
            }
            for (int v = 0; v < n; ++v) {
                if (!perfect_matching_exists(c.g.without_vertex(v), c.budget)) {
                    return {"", "", Verdict::kFails,
                            "graph minus vertex " + std::to_string(v) + " has no perfect "
                            "matching"};
                }
            }
            return {"", "", Verdict::kHolds, ""};
        });
    add("diameter_le_2", "every pair at distance at most 2", [](LabCache& c) -> ConditionReport {
        std::optional<int> d = diameter(c.g);
        if (!d) return {"", "", Verdict::kFails, "disconnected, infinite diameter"};
        if (*d <= 2) return {"", "", Verdict::kHolds, ""};
        return {"", "", Verdict::kFails, "diameter " + std::to_string(*d)};
    });
    add("chromatic_ge_8", "chromatic number at least 8", [](LabCache& c) -> ConditionReport {
        const auto* chi = c.chi();
        if (!chi) return budget_skip("", "");
        if (chi->k >= 8) return {"", "", Verdict::kHolds, ""};
        return {"", "", Verdict::kFails, "chi = " + std::to_string(chi->k)};
    });
    add("paired_coloring_duality",
        "minus any vertex: matching of the complement is a proper (chi-1)-coloring with all "
        "classes of size 2",
        [](LabCache& c) -> ConditionReport {
            const auto* chi = c.chi();
            if (!chi) return budget_skip("", "");
            int n = c.g.vertex_count();
            if ((n - 1) % 2 != 0) {
                return {"", "", Verdict::kFails, "n-1 odd, classes of size 2 cannot cover"};
            }
            for (int v = 0; v < n; ++v) {
                Graph gv = c.g.without_vertex(v);
                auto matching = maximum_matching(complement(gv), c.budget);
                if (static_cast<int>(matching.size()) * 2 != n - 1) {
                    return {"", "", Verdict::kFails,
                            "no perfect matching in complement minus vertex " +
                                std::to_string(v)};
                }
                VertexColoring col;
                col.color.assign(n - 1, 0);
                col.k = static_cast<int>(matching.size());
                int next = 0;
                for (auto [a, b] : matching) {
                    ++next;
                    col.color[a] = next;
                    col.color[b] = next;
                }
                if (!is_proper_coloring(gv, col) || col.k != chi->k - 1) {
                    return {"", "", Verdict::kFails,
                            "matching of complement minus vertex " + std::to_string(v) +
                                " is not a proper (chi-1)-coloring"};
                }
            }
            return {"", "", Verdict::kHolds, ""};
        });
    return specs;
}

ConditionReport evaluate_alpha_edge_critical(LabCache& cache) {
    const auto* a = cache.alpha();
    if (!a) return budget_skip("", "");
    for (auto [u, v] : cache.g.edges()) {
        try {
            if (independence_number(cache.g.without_edge(u, v), cache.budget).a <= a->a) {
                return {"", "", Verdict::kFails,
                        "removing edge " + std::to_string(u) + "," + std::to_string(v) +
                            " keeps alpha at " + std::to_string(a->a)};
            }
        } catch (const BudgetExceeded&) {
            return budget_skip("", "");
        }
    }
    return {"", "", Verdict::kHolds, ""};
}

}  // namespace

PropertyReport property_battery(const Graph& g, Budget budget, bool full_evaluation) {
    LabCache cache{g, budget, {}, {}, {}, false, false, false};
    PropertyReport report;
    std::vector<ConditionSpec> specs = battery_conditions();

    // cheap structural checks run first so the filter can bail early
    const std::vector<std::string> eval_order = {
        "connected",        "complement_connected",
        "min_degree_ge_half", "diameter_le_2",
        "codegree_bound",   "alpha_le_2",
        "order_le_2chi",    "order_eq_2chi_minus_1",
        "chromatic_ge_8",   "clique_ge_quarter",
        "complement_minus_vertex_matchable", "paired_coloring_duality",
        "vertex_deleted_matchable", "hamiltonian",
        "color_critical",
    };
    std::vector<ConditionReport> results(specs.size());
    std::vector<bool> evaluated(specs.size(), false);
    std::string first_fail;
    for (const std::string& id : eval_order) {
        auto it = std::find_if(specs.begin(), specs.end(),
                               [&](const ConditionSpec& s) { return s.id == id; });
        std::size_t idx = static_cast<std::size_t>(it - specs.begin());
        if (!first_fail.empty() && !full_evaluation) {
            results[idx] = {it->id, it->description, Verdict::kSkipped,
                            "not evaluated: already excluded by " + first_fail};
            evaluated[idx] = true;
            continue;
        }
        ConditionReport r;
        try {
            r = it->eval(cache);
        } catch (const BudgetExceeded&) {
            r = budget_skip("", "");
        }
        r.id = it->id;
        r.description = it->description;
        results[idx] = std::move(r);
        evaluated[idx] = true;
        if (results[idx].verdict == Verdict::kFails && first_fail.empty()) first_fail = it->id;
    }
    // report in the fixed declaration order, not evaluation order
    for (std::size_t i = 0; i < specs.size(); ++i) report.conditions.push_back(results[i]);
    report.excluded = !first_fail.empty();

    if (!report.excluded || full_evaluation) {
        ConditionReport o = evaluate_alpha_edge_critical(cache);
        o.id = "alpha_edge_critical";
        o.description = "removing any edge raises the independence number";
        report.edge_minimal.push_back(std::move(o));
    } else {
        report.edge_minimal.push_back({"alpha_edge_critical",
                                       "removing any edge raises the independence number",
                                       Verdict::kSkipped, "not evaluated: graph already excluded"});
    }
    return report;
}

std::string serialize_property_report(const Graph& g, const PropertyReport& report) {
    nlohmann::ordered_json j;
    j["graph"] = serialize_graph6(g);
    j["excluded"] = report.excluded;
    auto conds = nlohmann::ordered_json::array();
    for (const ConditionReport& c : report.conditions) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["description"] = c.description;
        e["verdict"] = std::string(verdict_name(c.verdict));
        if (!c.witness.empty()) e["witness"] = c.witness;
        conds.push_back(std::move(e));
    }
    j["conditions"] = std::move(conds);
    auto em = nlohmann::ordered_json::array();
    for (const ConditionReport& c : report.edge_minimal) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["description"] = c.description;
        e["verdict"] = std::string(verdict_name(c.verdict));
        if (!c.witness.empty()) e["witness"] = c.witness;
        em.push_back(std::move(e));
    }
    j["edge_minimal"] = std::move(em);
    j["not_applicable"] = PropertyReport::kNotApplicable;
    return j.dump();
}

namespace {

// hub routing with the same bookkeeping as the one-third construction but
// over an arbitrary corner set; fails soft
std::optional<ImmersionCertificate> try_hub_routing(const Graph& g, std::vector<int> corners) {
    std::sort(corners.begin(), corners.end());
    int t = static_cast<int>(corners.size());
    VertexMask in_u = 0;
    for (int v : corners) in_u |= bit(v);
    VertexMask in_w = g.vertex_mask() & ~in_u;
    ImmersionCertificate cert{Graph::complete(t), g, corners, {}};
    std::vector<VertexMask> hub_used(g.vertex_count(), 0);
    for (int b = 1; b < t; ++b) {
        for (int a = 0; a < b; ++a) {
            int u = corners[a], v = corners[b];
            if (g.has_edge(u, v)) {
                cert.paths.push_back({a, b, {u, v}});
                continue;
            }
            VertexMask common = g.neighbor_mask(u) & g.neighbor_mask(v) & in_w;
            int z = -1;
            for_each_vertex(common, [&](int cand) {
                if (z != -1) return;
                if ((hub_used[cand] & (bit(u) | bit(v))) == 0) z = cand;
            });
            if (z == -1) return std::nullopt;
            hub_used[z] |= bit(u) | bit(v);
            cert.paths.push_back({a, b, {u, z, v}});
        }
    }
    return cert;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

Conjecture3Result conjecture3_check(const Graph& g, Budget budget) {
    IndependenceResult alpha = independence_number(g, budget);
    if (alpha.a > 2) {
        throw std::invalid_argument("conjecture3_check: independence number " +
                                    std::to_string(alpha.a) + " > 2, witness " +
                                    vec_str(alpha.witness));
    }
    int n = g.vertex_count();
    int t = (n + 1) / 2;

    auto verified = [&](ImmersionCertificate cert) -> Conjecture3Result {
        VerificationResult res = verify_certificate(g, cert);
        if (!res.valid) {
            throw std::logic_error("conjecture3_check: produced invalid certificate: " +
                                   res.violation);
        }
        return {Conjecture3Status::kHolds, std::move(cert)};
    };

    if (n == 0) return verified(ImmersionCertificate{Graph(0), g, {}, {}});

    try {
        CliqueResult cl = clique_number(g, budget);
        if (cl.w >= t) {
            std::vector<int> corners(cl.witness.begin(), cl.witness.begin() + t);
            return verified(clique_certificate(g, corners));
        }

        constexpr std::uint64_t kAllSubsetsCap = 4096;
        if (binomial(n, t) <= kAllSubsetsCap) {
            std::vector<int> subset(t);
            std::iota(subset.begin(), subset.end(), 0);
            do {
                if (auto cert = try_hub_routing(g, subset)) return verified(std::move(*cert));
            } while (next_combination(subset, n));
        } else {
            std::vector<std::vector<int>> candidates;
            std::vector<int> first(t);
            std::iota(first.begin(), first.end(), 0);
            candidates.push_back(first);
            std::vector<int> by_degree(n);
            std::iota(by_degree.begin(), by_degree.end(), 0);
            std::stable_sort(by_degree.begin(), by_degree.end(),
                             [&](int a, int b) { return g.degree(a) > g.degree(b); });
            candidates.emplace_back(by_degree.begin(), by_degree.begin() + t);
            for (int shift = 1; shift + t <= n && shift <= 8; ++shift) {
                std::vector<int> window(t);
                std::iota(window.begin(), window.end(), shift);
                candidates.push_back(window);
            }
            for (const auto& cand : candidates) {
                if (auto cert = try_hub_routing(g, cand)) return verified(std::move(*cert));
            }
        }

        if (n <= 10) {
            PathsOracleResult res = immersion_oracle_paths(g, Graph::complete(t), budget);
            if (res.status == OracleStatus::kFound) return verified(std::move(*res.certificate));
            if (res.status == OracleStatus::kNone) {
                if (t <= 7) {
                    throw FalsificationError(
                        "conjecture3_check: definitive failure with ceil(n/2) <= 7 contradicts "
                        "the small-clique immersion results",
                        "graph6 " + serialize_graph6(g) + "\n");
                }
                return {Conjecture3Status::kFails, std::nullopt};
            }
            return {Conjecture3Status::kBudget, std::nullopt};
        }
    } catch (const BudgetExceeded&) {
        return {Conjecture3Status::kBudget, std::nullopt};
    }
    return {Conjecture3Status::kBudget, std::nullopt};
}

namespace {

struct PerGraphOutcome {
    PropertyReport report;
    bool has_c3 = false;
    Conjecture3Status c3 = Conjecture3Status::kBudget;
};

}  // namespace

SearchReport search_harness(const SearchSource& source, const HarnessConfig& config) {
    SearchReport report;
    report.source = source;
    report.config = config;

    std::vector<Graph> admitted;
    switch (source.kind) {
        case SearchSource::Kind::kEnumerate:
            alpha2_enumerate(source.n, [&](const Graph& g) {
                ++report.examined;
                admitted.push_back(g);
            });
            break;
        case SearchSource::Kind::kRandom:
            for (int i = 0; i < source.count; ++i) {
                ++report.examined;
                admitted.push_back(alpha2_random(source.n, source.seed + i));
            }
            break;
        case SearchSource::Kind::kStream:
            for (const std::string& line : source.graph6_lines) {
                ++report.examined;
                Graph g = parse_graph6(line);
                // stream graphs are re-checked before battery admission
                if (independence_number(g, config.budget).a > 2) {
                    ++report.rejected_alpha;
                    continue;
                }
                admitted.push_back(g);
            }
            break;
    }
    report.admitted = admitted.size();

    std::vector<PerGraphOutcome> outcomes(admitted.size());
    std::atomic<std::size_t> cursor{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto work = [&]() {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= admitted.size()) break;
            try {
                PerGraphOutcome& out = outcomes[i];
                out.report = property_battery(admitted[i], config.budget, config.full_battery);
                if (config.check_conjecture3 || !out.report.excluded) {
                    out.c3 = conjecture3_check(admitted[i], config.budget).status;
                    out.has_c3 = true;
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                break;
            }
        }
    };
    int workers = std::max(1, config.workers);
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (std::thread& th : pool) th.join();
    if (error) std::rethrow_exception(error);

    std::vector<std::pair<std::string, std::uint64_t>> histogram;
    auto bump = [&](const std::string& id) {
        for (auto& [k, v] : histogram) {
            if (k == id) {
                ++v;
                return;
            }
        }
        histogram.emplace_back(id, 1);
    };
    for (std::size_t i = 0; i < admitted.size(); ++i) {
        const PerGraphOutcome& out = outcomes[i];
        if (out.report.excluded) {
            ++report.excluded;
            for (const ConditionReport& c : out.report.conditions) {
                if (c.verdict == Verdict::kFails) bump(c.id);
            }
        }
        if (out.has_c3) {
            switch (out.c3) {
                case Conjecture3Status::kHolds: ++report.c3_holds; break;
                case Conjecture3Status::kFails: ++report.c3_fails; break;
                case Conjecture3Status::kBudget: ++report.c3_budget; break;
            }
        }
        if (!out.report.excluded && (!out.has_c3 || out.c3 != Conjecture3Status::kHolds)) {
            report.survivors.push_back(
                {serialize_graph6(admitted[i]), out.report, out.c3});
        }
    }
    std::sort(histogram.begin(), histogram.end());
    report.exclusion_histogram = std::move(histogram);

    // survivors are rare and momentous; make sure they reproduce
    for (const SurvivorRecord& s : report.survivors) {
        Graph g = parse_graph6(s.graph6);
        PropertyReport again = property_battery(g, config.budget, config.full_battery);
        if (again.excluded) {
            throw std::logic_error("search_harness: survivor failed to re-verify: " + s.graph6);
        }
    }
    return report;
}

std::string serialize_search_report(const SearchReport& report) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json src;
    switch (report.source.kind) {
        case SearchSource::Kind::kEnumerate: src["kind"] = "enumerate"; break;
        case SearchSource::Kind::kRandom: src["kind"] = "random"; break;
        case SearchSource::Kind::kStream: src["kind"] = "stream"; break;
    }
    src["n"] = report.source.n;
    src["count"] = report.source.count;
    src["seed"] = report.source.seed;
    j["source"] = std::move(src);
    nlohmann::ordered_json cfg;
    cfg["budget"] = report.config.budget.limit;
    cfg["workers"] = report.config.workers;
    cfg["full_battery"] = report.config.full_battery;
    cfg["check_conjecture3"] = report.config.check_conjecture3;
    j["config"] = std::move(cfg);
    j["examined"] = report.examined;
    j["admitted"] = report.admitted;
    j["rejected_alpha"] = report.rejected_alpha;
    j["excluded"] = report.excluded;
    nlohmann::ordered_json c3;
    c3["holds"] = report.c3_holds;
    c3["fails"] = report.c3_fails;
    c3["budget"] = report.c3_budget;
    j["conjecture3"] = std::move(c3);
    nlohmann::ordered_json hist = nlohmann::ordered_json::array();
    for (const auto& [id, count] : report.exclusion_histogram) {
        hist.push_back(nlohmann::ordered_json::array({id, count}));
    }
    j["exclusion_histogram"] = std::move(hist);
    nlohmann::ordered_json survivors = nlohmann::ordered_json::array();
    for (const SurvivorRecord& s : report.survivors) {
        nlohmann::ordered_json e;
        e["graph6"] = s.graph6;
        e["conjecture3"] = std::string(conjecture3_status_name(s.conjecture3));
        e["report"] = nlohmann::ordered_json::parse(
            serialize_property_report(parse_graph6(s.graph6), s.report));
        survivors.push_back(std::move(e));
    }
    j["survivors"] = std::move(survivors);
    return j.dump();
}

std::string search_report_summary(const SearchReport& report) {
    std::ostringstream out;
    auto row = [&](const std::string& label, std::uint64_t value) {
        out << label;
        for (std::size_t i = label.size(); i < 24; ++i) out << ' ';
        out << value << '\n';
    };
    row("examined", report.examined);
    row("admitted", report.admitted);
    row("rejected (alpha > 2)", report.rejected_alpha);
    row("excluded", report.excluded);
    row("conjecture3 holds", report.c3_holds);
    row("conjecture3 fails", report.c3_fails);
    row("conjecture3 budget", report.c3_budget);
    row("survivors", report.survivors.size());
    if (!report.exclusion_histogram.empty()) {
        out << "exclusions by condition\n";
        for (const auto& [id, count] : report.exclusion_histogram) {
            out << "  ";
            out << id;
            for (std::size_t i = id.size(); i < 34; ++i) out << ' ';
            out << count << '\n';
        }
    }
    return out.str();
}

}  // namespace imm
