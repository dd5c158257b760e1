#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "imm/constructions.hpp"
#include "imm/graph.hpp"
#include "imm/immersion.hpp"
#include "imm/solvers.hpp"

namespace imm {

// Deterministic random graph with independence number at most 2: the
// complement of a maximal triangle-free graph grown by seeded insertion.
Graph alpha2_random(int n, std::uint64_t seed);

// All labeled graphs on n vertices with alpha <= 2, each exactly once.
// Built-in only up to n = 7; larger orders come in over the graph6 stream
// interface of the search harness.
void alpha2_enumerate(int n, const std::function<void(const Graph&)>& visit);

enum class Verdict { kHolds, kFails, kSkipped };

std::string_view verdict_name(Verdict v);

struct ConditionReport {
    std::string id;
    std::string description;
    Verdict verdict = Verdict::kSkipped;
    std::string witness;  // failing witness, or the reason a check was skipped
};

// Necessary conditions for a vertex-minimal counterexample to the
// conjecture that every alpha <= 2 graph immerses K_chi. The edge-minimal
// section applies only to edge-minimal counterexamples and never excludes
// a graph on its own.
struct PropertyReport {
    std::vector<ConditionReport> conditions;
    std::vector<ConditionReport> edge_minimal;
    bool excluded = false;
    // the "also minimizes the chromatic number" property compares across
    // the whole class of counterexamples, so no single graph can fail it
    static constexpr const char* kNotApplicable =
        "minimizes-chromatic-number: class-level property, not checkable on one graph";
};

PropertyReport property_battery(const Graph& g, Budget budget = {},
                                bool full_evaluation = false);

std::string serialize_property_report(const Graph& g, const PropertyReport& report);

enum class Conjecture3Status { kHolds, kFails, kBudget };

std::string_view conjecture3_status_name(Conjecture3Status s);

struct Conjecture3Result {
    Conjecture3Status status = Conjecture3Status::kBudget;
    std::optional<ImmersionCertificate> certificate;  // set exactly when kHolds
};

// Does g (alpha <= 2) immerse K_ceil(n/2)? Tries a clique, then hub
// routings over candidate corner sets, then the exhaustive paths oracle on
// small orders. kFails is only ever definitive; for ceil(n/2) <= 7 it is
// impossible by the known minimum-degree results and aborts the run.
Conjecture3Result conjecture3_check(const Graph& g, Budget budget = {});

struct SearchSource {
    enum class Kind { kEnumerate, kRandom, kStream };
    Kind kind = Kind::kEnumerate;
    int n = 0;
    int count = 0;            // random only
    std::uint64_t seed = 0;   // random only
    std::vector<std::string> graph6_lines;  // stream only
};

struct HarnessConfig {
    Budget budget;
    int workers = 1;
    bool full_battery = false;
    bool check_conjecture3 = true;  // on every admitted graph, not just battery survivors
};

struct SurvivorRecord {
    std::string graph6;
    PropertyReport report;
    Conjecture3Status conjecture3 = Conjecture3Status::kBudget;
};

struct SearchReport {
    std::uint64_t examined = 0;
    std::uint64_t admitted = 0;        // alpha <= 2, battery ran
    std::uint64_t rejected_alpha = 0;  // stream graphs with alpha > 2
    std::uint64_t excluded = 0;
    std::uint64_t c3_holds = 0;
    std::uint64_t c3_fails = 0;
    std::uint64_t c3_budget = 0;
    std::vector<std::pair<std::string, std::uint64_t>> exclusion_histogram;  // condition id
    std::vector<SurvivorRecord> survivors;  // battery passed and conjecture 3 unverified
    SearchSource source;
    HarnessConfig config;
};

SearchReport search_harness(const SearchSource& source, const HarnessConfig& config);

std::string serialize_search_report(const SearchReport& report);
std::string search_report_summary(const SearchReport& report);

}  // namespace imm
