#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "imm/graph.hpp"

namespace imm {

// Node limit for the exact searches. Exceeding it raises BudgetExceeded;
// the solvers never fall back to an approximate answer.
struct Budget {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& op)
        : std::runtime_error("budget exceeded in " + op) {}
};

class BudgetMeter {
  public:
    BudgetMeter(Budget budget, std::string op) : limit_(budget.limit), op_(std::move(op)) {}
    void tick(std::uint64_t amount = 1) {
        used_ += amount;
        if (used_ > limit_) throw BudgetExceeded(op_);
    }
    std::uint64_t used() const { return used_; }

  private:
    std::uint64_t used_ = 0;
    std::uint64_t limit_;
    std::string op_;
};

// Colors are 1..k and every color is used.
struct VertexColoring {
    int k = 0;
    std::vector<int> color;
};

bool is_proper_coloring(const Graph& g, const VertexColoring& c);
std::string serialize_coloring(const VertexColoring& c);
VertexColoring parse_coloring(std::string_view text);

struct ChromaticResult {
    int k = 0;
    VertexColoring witness;
};
ChromaticResult chromatic_number(const Graph& g, Budget budget = {});

struct IndependenceResult {
    int a = 0;
    std::vector<int> witness;
};
IndependenceResult independence_number(const Graph& g, Budget budget = {});

struct CliqueResult {
    int w = 0;
    std::vector<int> witness;
};
CliqueResult clique_number(const Graph& g, Budget budget = {});

std::vector<std::pair<int, int>> maximum_matching(const Graph& g, Budget budget = {});

struct HamiltonianResult {
    bool hamiltonian = false;
    std::vector<int> cycle;  // n distinct vertices when hamiltonian
};
HamiltonianResult is_hamiltonian(const Graph& g, Budget budget = {});

// Proper edge coloring of K_s. Colors are 1-based; s-1 of them when s is
// even (a 1-factorization), s when s is odd.
struct EdgeColoring {
    int s = 0;
    std::vector<int> color;  // indexed by v*(v-1)/2 + u for u < v

    int color_of(int u, int v) const;
    int color_count() const;
};
EdgeColoring one_factorization(int s);
std::string serialize_edge_coloring(const EdgeColoring& ec);
EdgeColoring parse_edge_coloring(std::string_view text);

// Subgraph induced by the two color classes c_i and c_j.
InducedSubgraph color_subgraph(const Graph& g, const VertexColoring& c, int i, int j);

// Shortest path from u to v inside the subgraph induced by the color
// classes of u and v; empty when they sit in different components of it.
std::optional<std::vector<int>> chain_between(const Graph& g, const VertexColoring& c, int u,
                                              int v);

// Vertices of color i adjacent to at least one vertex of every other color.
std::vector<int> dominating_vertices(const Graph& g, const VertexColoring& c, int i);

}  // namespace imm
