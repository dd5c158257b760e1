#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "imm/cli.hpp"
#include "imm/immersion.hpp"
#include "json.hpp"

namespace {

struct CliRun {
    int status = 0;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int status = imm::run(args, in, out, err);
    return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "cli_test_" + name;
    std::ofstream file(path);
    file << content;
    return path;
}

std::string g6(const imm::Graph& g) { return imm::serialize_graph6(g); }

const std::string kC5 = "Dhc";

}  // namespace

TEST_CASE("analyze reports the C5 profile") {
    auto res = run_cli({"analyze", kC5});
    CHECK(res.status == 0);
    CHECK(res.out.find("alpha 2") != std::string::npos);
    CHECK(res.out.find("chi 3") != std::string::npos);
    CHECK(res.out.find("delta 2") != std::string::npos);
    CHECK(res.out.find("diameter 2") != std::string::npos);

    auto js = run_cli({"analyze", kC5, "--json"});
    CHECK(js.status == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["alpha"] == 2);
    CHECK(j["chi"] == 3);
}

TEST_CASE("convert round trips between formats") {
    auto el = run_cli({"convert", kC5, "--format", "edgelist"});
    CHECK(el.status == 0);
    CHECK(el.out.find("5 5") == 0);

    auto back = run_cli({"convert", "--format", "graph6", "-i", "-"}, el.out);
    CHECK(back.status == 0);
    CHECK(back.out == kC5 + "\n");
}

TEST_CASE("construct third then verify, piped through a file") {
    std::string cc7 = g6(imm::complement(imm::Graph::cycle(7)));
    auto built = run_cli({"construct", "third", cc7});
    REQUIRE(built.status == 0);
    CHECK(built.err.find("(strong)") != std::string::npos);

    std::string path = write_temp("third_cert.json", built.out);
    auto verified = run_cli({"verify", "-i", path});
    CHECK(verified.status == 0);
    CHECK(verified.out == "valid strong immersion of K_3\n");
}

TEST_CASE("verify flags a shared edge and exits 1") {
    // two paths across host edge {0,1}
    imm::ImmersionCertificate bad{imm::Graph::from_edges(3, {{0, 1}, {0, 2}}),
                                  imm::Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}}),
                                  {0, 2, 3},
                                  {}};
    bad.paths.push_back({0, 1, {0, 1, 2}});
    bad.paths.push_back({0, 2, {0, 1, 3}});
    std::string path = write_temp("bad_cert.json", imm::serialize_certificate(bad));
    auto res = run_cli({"verify", "-i", path});
    CHECK(res.status == 1);
    CHECK(res.err.find("share host edge {0,1}") != std::string::npos);
}

TEST_CASE("oracle subcommands") {
    std::string c4 = g6(imm::Graph::cycle(4));
    auto none = run_cli({"oracle", "paths", c4, "--pattern", "K4"});
    CHECK(none.status == 0);
    CHECK(none.out.find("none") == 0);

    auto found = run_cli({"oracle", "paths", kC5, "--pattern", "K3"});
    CHECK(found.status == 0);
    auto cert = imm::parse_certificate(found.out);
    CHECK(imm::verify_certificate(cert).valid);

    auto lifts = run_cli({"oracle", "lifts", c4, "--pattern", "K4"});
    CHECK(lifts.status == 0);
    CHECK(lifts.out == "false\n");

    auto maxclique = run_cli({"oracle", "maxclique", kC5});
    CHECK(maxclique.status == 0);
    CHECK(maxclique.err.find("t = 3") != std::string::npos);
}

TEST_CASE("budget exhaustion exits 2") {
    auto res = run_cli({"analyze", kC5, "--budget", "1"});
    CHECK(res.status == 2);
    CHECK(res.err.find("budget") == 0);
}

TEST_CASE("domain errors exit 1 with a diagnostic") {
    CHECK(run_cli({"bogus"}).status == 1);
    CHECK(run_cli({"analyze", "~~~"}).status == 1);
    CHECK(run_cli({"analyze"}).status == 1);
    CHECK(run_cli({"construct", "dense56", kC5}).status == 1);  // C5 is not (5,6)-dense
    auto both = run_cli({"analyze", kC5, "-i", "somefile"});
    CHECK(both.status == 1);
    CHECK(both.err.find("error:") == 0);
}

TEST_CASE("identical invocations are byte-identical") {
    auto a = run_cli({"construct", "multipartite", "--sizes", "3,3,3"});
    auto b = run_cli({"construct", "multipartite", "--sizes", "3,3,3"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);

    auto h1 = run_cli({"hunt", "--source", "enumerate", "--n", "4"});
    auto h2 = run_cli({"hunt", "--source", "enumerate", "--n", "4"});
    CHECK(h1.status == 0);
    CHECK(h1.out == h2.out);
}

TEST_CASE("hunt over a stream") {
    std::string lines = g6(imm::complement(imm::Graph::cycle(7))) + "\n" + kC5 + "\n";
    auto res = run_cli({"hunt", "--source", "stream", "-i", "-"}, lines);
    CHECK(res.status == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["examined"] == 2);
    CHECK(j["admitted"] == 2);
    CHECK(j["survivors"].empty());
    CHECK(res.err.find("examined") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    auto res = run_cli({"--help"});
    CHECK(res.status == 0);
    CHECK(res.out.find("construct") != std::string::npos);
}
