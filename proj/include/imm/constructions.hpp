#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "imm/graph.hpp"
#include "imm/immersion.hpp"
#include "imm/solvers.hpp"

namespace imm {

// Raised when a construction hits a state its feasibility argument rules
// out. That would be a counterexample to the argument itself, so the full
// instance is preserved in `bundle` for inspection; it is never swallowed.
struct FalsificationError : std::runtime_error {
    FalsificationError(const std::string& what, std::string bundle_text)
        : std::runtime_error("falsification diagnostic: " + what), bundle(std::move(bundle_text)) {}
    std::string bundle;
};

struct DensityWitness {
    bool dense = false;
    std::optional<std::vector<int>> violating_set;  // k-subset inducing < s edges
};

// Does every k-subset of V(g) induce at least s edges? Vacuously true when
// n < k. The first violating subset in lexicographic order is reported.
DensityWitness is_k_s_dense(const Graph& g, int k, int s);

struct InducedC4Result {
    bool found = false;
    std::optional<std::array<int, 4>> witness;
};

InducedC4Result complement_has_induced_c4(const Graph& g);

struct MultipartiteImmersion {
    Graph graph;
    ImmersionCertificate certificate;
};

// Complete multipartite graph with the given class sizes (last class is
// the reserved routing class and must be a largest one), together with a
// strong immersion certificate of K_t. For k classes of equal size s,
// t = (k-1)s+1 when s is even, (k-1)s when s > 1 is odd, k when s = 1;
// otherwise t is the sum of the non-reserved class sizes.
MultipartiteImmersion construct_multipartite_immersion(std::span<const int> sizes);
MultipartiteImmersion construct_multipartite_immersion(std::initializer_list<int> sizes);

// Strong immersion of K_chi(g) in a (5,6)-dense graph.
ImmersionCertificate construct_dense56_immersion(const Graph& g, Budget budget = {});

// Strong immersion of K_chi(g) when the complement has no induced C4.
ImmersionCertificate construct_c4free_complement_immersion(const Graph& g, Budget budget = {});

struct ThirdImmersionResult {
    // exactly one of the two is set
    std::optional<std::vector<int>> clique;  // ceil(n/3) mutually adjacent vertices
    std::optional<ImmersionCertificate> certificate;
};

// For alpha(g) <= 2: either a clique on ceil(n/3) vertices or a strong
// immersion certificate of K_ceil(n/3). corner_order optionally permutes
// the vertex order used to pick the corner set.
ThirdImmersionResult construct_third_immersion(const Graph& g, Budget budget = {},
                                               std::span<const int> corner_order = {});

}  // namespace imm
