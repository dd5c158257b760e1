#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imm/graph.hpp"
#include "imm/solvers.hpp"

namespace imm {

struct PathAssignment {
    int u = 0, v = 0;  // pattern edge, u < v
    std::vector<int> path;  // host vertices from corners[u] to corners[v]
};

// Witness that `pattern` is immersed in `host`: an injective corner map
// plus pairwise edge-disjoint host paths, one per pattern edge.
struct ImmersionCertificate {
    Graph pattern;
    Graph host;
    std::vector<int> corners;  // corners[pattern vertex] = host vertex
    std::vector<PathAssignment> paths;
};

struct VerificationResult {
    bool valid = false;
    bool strong = false;
    std::string violation;  // present exactly when valid is false
};

// Purely local check of the certificate against the given host graph.
// strong additionally requires that no path crosses a corner internally.
VerificationResult verify_certificate(const Graph& host, const ImmersionCertificate& cert);
VerificationResult verify_certificate(const ImmersionCertificate& cert);

// Replace edges uv and vw by uw. Requires uv, vw present, u != w, uw absent.
Graph apply_lift(const Graph& g, int u, int v, int w);

enum class OracleStatus { kFound, kNone, kBudget };

struct PathsOracleResult {
    OracleStatus status = OracleStatus::kNone;
    std::optional<ImmersionCertificate> certificate;
};

// Exhaustive search for an immersion certificate: all injective corner
// maps, then backtracking edge-disjoint path packing (fewest candidate
// paths first, candidates by increasing length). kNone is definitive.
PathsOracleResult immersion_oracle_paths(const Graph& host, const Graph& pattern,
                                         Budget budget = {});

enum class LiftOracleStatus { kTrue, kFalse, kBudget };

// Breadth-first search over graphs reachable by lifts and edge deletions,
// deduplicated up to isomorphism, testing subgraph containment of the
// pattern. Vertex deletions add nothing here: stripping a vertex's edges
// reaches the same containment states. kFalse is definitive.
LiftOracleStatus immersion_oracle_lifts(const Graph& host, const Graph& pattern,
                                        Budget budget = {});

struct MaxCliqueImmersionResult {
    int t = 0;
    ImmersionCertificate certificate;
    bool definitive = false;  // false when the budget cut the descent short
};

// Largest t with K_t immersed in g. Constructive lower bounds first, then
// a descending sweep of immersion_oracle_paths.
MaxCliqueImmersionResult max_clique_immersion(const Graph& g, Budget budget = {});

// Identity immersion of the complete graph on a clique.
ImmersionCertificate clique_certificate(const Graph& host, std::span<const int> clique);

bool contains_subgraph(const Graph& host, const Graph& pattern);
bool isomorphic(const Graph& a, const Graph& b);

std::string serialize_certificate(const ImmersionCertificate& cert);
ImmersionCertificate parse_certificate(std::string_view text);

}  // namespace imm
