#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "imm/constructions.hpp"
#include "imm/immersion.hpp"
#include "oracles.hpp"

using imm::Graph;
using imm::ImmersionCertificate;
using imm::LiftOracleStatus;
using imm::OracleStatus;

namespace {

ImmersionCertificate c5_triangle_certificate() {
    Graph c5 = Graph::cycle(5);
    ImmersionCertificate cert{Graph::complete(3), c5, {0, 2, 4}, {}};
    cert.paths.push_back({0, 1, {0, 1, 2}});
    cert.paths.push_back({1, 2, {2, 3, 4}});
    cert.paths.push_back({0, 2, {4, 0}});
    return cert;
}

}  // namespace

TEST_CASE("verifier accepts the C5 triangle certificate as strong") {
    auto cert = c5_triangle_certificate();
    auto res = imm::verify_certificate(cert);
    CHECK(res.valid);
    CHECK(res.strong);
    CHECK(res.violation.empty());
}

TEST_CASE("verifier reports shared edges by name") {
    auto cert = c5_triangle_certificate();
    cert.paths[1].path = {2, 1, 0};  // collides with path 0-1-2 on edge {0,1}... and endpoints
    auto res = imm::verify_certificate(cert);
    CHECK(!res.valid);
    CHECK(!res.violation.empty());

    // a clean shared-edge case: two paths across edge {0,1}
    Graph host = Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}});
    ImmersionCertificate shared{Graph::from_edges(3, {{0, 1}, {0, 2}}), host, {0, 2, 3}, {}};
    shared.paths.push_back({0, 1, {0, 1, 2}});
    shared.paths.push_back({0, 2, {0, 1, 3}});
    auto res2 = imm::verify_certificate(shared);
    CHECK(!res2.valid);
    CHECK(res2.violation.find("{0,1}") != std::string::npos);
    CHECK(res2.violation.find("share host edge") != std::string::npos);
}

TEST_CASE("verifier covers the certificate invariants one by one") {
    auto cert = c5_triangle_certificate();

    auto tamper = [&](auto mutate) {
        auto c = cert;
        mutate(c);
        return imm::verify_certificate(c);
    };

    CHECK(!tamper([](auto& c) { c.corners = {0, 0, 4}; }).valid);          // not injective
    CHECK(!tamper([](auto& c) { c.corners = {0, 2}; }).valid);             // wrong size
    CHECK(!tamper([](auto& c) { c.corners = {0, 2, 9}; }).valid);          // out of range
    CHECK(!tamper([](auto& c) { c.paths.pop_back(); }).valid);             // missing path
    CHECK(!tamper([](auto& c) { c.paths.push_back(c.paths[0]); }).valid);  // duplicate
    CHECK(!tamper([](auto& c) { c.paths[0].path = {0, 2}; }).valid);       // missing host edge
    CHECK(!tamper([](auto& c) { c.paths[0].path = {0, 4, 3, 2}; }).valid); // reuses {0,4},{3,4}
    CHECK(!tamper([](auto& c) { c.paths[0].path = {0, 1, 0, 1, 2}; }).valid);  // repeats vertex
    CHECK(!tamper([](auto& c) { c.paths[0].path = {1, 2}; }).valid);  // wrong endpoints

    // internal vertices that are not corners keep the certificate strong
    Graph host = Graph::path(3);
    ImmersionCertificate through{Graph::from_edges(2, {{0, 1}}), host, {0, 2}, {}};
    through.paths.push_back({0, 1, {0, 1, 2}});
    auto res = imm::verify_certificate(through);
    CHECK(res.valid);
    CHECK(res.strong);

    // same path, but the middle vertex is a corner: valid yet not strong
    ImmersionCertificate through2{Graph(3).with_edge(0, 1), host, {0, 2, 1}, {}};
    through2.paths.push_back({0, 1, {0, 1, 2}});
    auto res2 = imm::verify_certificate(through2);
    CHECK(res2.valid);
    CHECK(!res2.strong);
}

TEST_CASE("apply_lift on spec fixtures") {
    Graph p3 = Graph::path(3);
    Graph lifted = imm::apply_lift(p3, 0, 1, 2);
    CHECK(lifted.edge_count() == 1);
    CHECK(lifted.has_edge(0, 2));
    CHECK(lifted.degree(1) == 0);

    Graph c4 = Graph::cycle(4);
    Graph t = imm::apply_lift(c4, 0, 1, 2);
    CHECK(t.edge_count() == 3);
    CHECK(t.has_edge(0, 2));
    CHECK(t.has_edge(2, 3));
    CHECK(t.has_edge(0, 3));
    CHECK(t.degree(1) == 0);

    CHECK_THROWS_AS(imm::apply_lift(Graph::complete(3), 0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(imm::apply_lift(p3, 0, 2, 1), std::invalid_argument);  // missing edge 0-2
    CHECK_THROWS_AS(imm::apply_lift(p3, 0, 1, 0), std::invalid_argument);  // u == w
}

TEST_CASE("apply_lift keeps degrees except at the middle vertex") {
    std::mt19937_64 rng(5150);
    int checked = 0;
    while (checked < 60) {
        Graph g = Graph::from_edge_mask(7, rng() & ((1u << 21) - 1));
        bool done = false;
        for (int v = 0; v < 7 && !done; ++v) {
            auto nb = g.neighbors(v);
            for (std::size_t i = 0; i < nb.size() && !done; ++i) {
                for (std::size_t j = i + 1; j < nb.size() && !done; ++j) {
                    if (g.has_edge(nb[i], nb[j])) continue;
                    Graph l = imm::apply_lift(g, nb[i], v, nb[j]);
                    CHECK(l.edge_count() == g.edge_count() - 1);
                    for (int x = 0; x < 7; ++x) {
                        if (x == v) CHECK(l.degree(x) == g.degree(x) - 2);
                        else CHECK(l.degree(x) == g.degree(x));
                    }
                    done = true;
                    ++checked;
                }
            }
        }
    }
}

TEST_CASE("paths oracle on spec fixtures") {
    // K4 needs 6 edge-disjoint paths, C4 has only 4 edges
    auto none = imm::immersion_oracle_paths(Graph::cycle(4), Graph::complete(4));
    CHECK(none.status == OracleStatus::kNone);

    auto found = imm::immersion_oracle_paths(Graph::cycle(5), Graph::complete(3));
    REQUIRE(found.status == OracleStatus::kFound);
    auto res = imm::verify_certificate(*found.certificate);
    CHECK(res.valid);

    // K_{2,2,2} immerses K_5
    Graph octahedron = Graph::complete_multipartite(std::vector<int>{2, 2, 2});
    auto k5 = imm::immersion_oracle_paths(octahedron, Graph::complete(5));
    REQUIRE(k5.status == OracleStatus::kFound);
    CHECK(imm::verify_certificate(*k5.certificate).valid);

    auto tiny = imm::immersion_oracle_paths(octahedron, Graph::complete(5), imm::Budget{10});
    CHECK(tiny.status == OracleStatus::kBudget);
}

TEST_CASE("lift oracle on spec fixtures") {
    CHECK(imm::immersion_oracle_lifts(Graph::path(3), Graph::complete(2)) ==
          LiftOracleStatus::kTrue);
    CHECK(imm::immersion_oracle_lifts(Graph::cycle(5), Graph::complete(3)) ==
          LiftOracleStatus::kTrue);
    CHECK(imm::immersion_oracle_lifts(Graph::cycle(4), Graph::complete(4)) ==
          LiftOracleStatus::kFalse);
}

TEST_CASE("oracle equivalence on sampled hosts") {
    std::vector<Graph> patterns = {Graph::complete(3), Graph::complete(4), Graph::path(3),
                                   Graph::cycle(4)};
    // exhaustive n = 4 hosts
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        Graph host = Graph::from_edge_mask(4, mask);
        for (const Graph& pat : patterns) {
            bool via_paths =
                imm::immersion_oracle_paths(host, pat).status == OracleStatus::kFound;
            bool via_lifts = imm::immersion_oracle_lifts(host, pat) == LiftOracleStatus::kTrue;
            CHECK(via_paths == via_lifts);
        }
    }
    // seeded sample at n = 6
    std::mt19937_64 rng(616);
    for (int i = 0; i < 120; ++i) {
        Graph host = Graph::from_edge_mask(6, rng() & ((1u << 15) - 1));
        for (const Graph& pat : patterns) {
            bool via_paths =
                imm::immersion_oracle_paths(host, pat).status == OracleStatus::kFound;
            bool via_lifts = imm::immersion_oracle_lifts(host, pat) == LiftOracleStatus::kTrue;
            CHECK(via_paths == via_lifts);
        }
    }
}

TEST_CASE("subgraph containment implies an immersion certificate") {
    std::mt19937_64 rng(321);
    for (int i = 0; i < 80; ++i) {
        Graph host = Graph::from_edge_mask(6, rng() & ((1u << 15) - 1));
        // carve a pattern out of the host itself
        Graph pattern = host;
        for (int drops = rng() % 4; drops > 0 && pattern.edge_count() > 0; --drops) {
            auto es = pattern.edges();
            auto [u, v] = es[rng() % es.size()];
            pattern = pattern.without_edge(u, v);
        }
        while (pattern.vertex_count() > 4) {
            pattern = pattern.without_vertex(static_cast<int>(rng() % pattern.vertex_count()));
        }
        REQUIRE(imm::contains_subgraph(host, pattern));
        auto res = imm::immersion_oracle_paths(host, pattern);
        REQUIRE(res.status == OracleStatus::kFound);
        CHECK(imm::verify_certificate(*res.certificate).valid);
    }
}

TEST_CASE("immersion composes transitively on a spot check") {
    Graph c6 = Graph::cycle(6);
    CHECK(imm::immersion_oracle_paths(c6, Graph::cycle(5)).status == OracleStatus::kFound);
    CHECK(imm::immersion_oracle_paths(Graph::cycle(5), Graph::complete(3)).status ==
          OracleStatus::kFound);
    CHECK(imm::immersion_oracle_paths(c6, Graph::complete(3)).status == OracleStatus::kFound);
}

TEST_CASE("max clique immersion") {
    auto k5 = imm::max_clique_immersion(Graph::complete(5));
    CHECK(k5.t == 5);
    CHECK(k5.definitive);
    CHECK(imm::verify_certificate(k5.certificate).valid);

    auto c5 = imm::max_clique_immersion(Graph::cycle(5));
    CHECK(c5.t == 3);
    CHECK(c5.definitive);

    auto octa = imm::max_clique_immersion(Graph::complete_multipartite(std::vector<int>{2, 2, 2}));
    CHECK(octa.t == 5);
    CHECK(octa.definitive);
    CHECK(imm::verify_certificate(octa.certificate).valid);
}

TEST_CASE("certificate JSON round trip") {
    auto cert = c5_triangle_certificate();
    std::string text = imm::serialize_certificate(cert);
    auto parsed = imm::parse_certificate(text);
    CHECK(parsed.pattern == cert.pattern);
    CHECK(parsed.host == cert.host);
    CHECK(parsed.corners == cert.corners);
    CHECK(imm::serialize_certificate(parsed) == text);
    CHECK(imm::verify_certificate(parsed).valid);

    CHECK_THROWS_AS(imm::parse_certificate("not json"), std::invalid_argument);
    CHECK_THROWS_AS(imm::parse_certificate("{\"pattern\": \"Bw\"}"), std::invalid_argument);
}

TEST_CASE("isomorphism helper") {
    CHECK(imm::isomorphic(Graph::cycle(5), imm::complement(Graph::cycle(5))));
    CHECK(!imm::isomorphic(Graph::cycle(6), imm::complement(Graph::cycle(6))));
    CHECK(imm::isomorphic(Graph::path(4), Graph::from_edges(4, {{2, 0}, {0, 3}, {3, 1}})));
}
