#include "imm/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "imm/constructions.hpp"
#include "imm/graph.hpp"
#include "imm/immersion.hpp"
#include "imm/lab.hpp"
#include "imm/solvers.hpp"
#include "json.hpp"

namespace imm {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string read_source(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("input: cannot read file " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

// One input source: --input PATH ("-" for stdin) or an inline argument.
std::string fetch_input(const std::string& input_path, const std::string& inline_text,
                        std::istream& in) {
    if (!input_path.empty() && !inline_text.empty()) {
        throw std::invalid_argument("input: give either --input or an inline argument, not both");
    }
    if (!input_path.empty()) return read_source(input_path, in);
    if (!inline_text.empty()) return inline_text;
    throw std::invalid_argument("input: no input given (use --input PATH or an inline argument)");
}

Graph read_graph_text(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) throw std::invalid_argument("input: empty graph");
    if (t.find_first_of(" \t\n") != std::string::npos) return parse_edge_list(t);
    return parse_graph6(t);
}

// K5 / C6 / P4 convenience names, otherwise graph6.
Graph parse_pattern_token(const std::string& tok) {
    if (tok.size() >= 2 && (tok[0] == 'K' || tok[0] == 'C' || tok[0] == 'P') &&
        std::all_of(tok.begin() + 1, tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        int n = std::stoi(tok.substr(1));
        if (tok[0] == 'K') return Graph::complete(n);
        if (tok[0] == 'C') return Graph::cycle(n);
        return Graph::path(n);
    }
    return parse_graph6(tok);
}

struct OutputSink {
    std::ostream& fallback;
    std::string path;

    void write(const std::string& text) {
        if (path.empty()) {
            fallback << text;
            return;
        }
        std::ofstream file(path);
        if (!file) throw std::invalid_argument("output: cannot write file " + path);
        file << text;
    }
};

std::string pattern_name(const Graph& pattern) {
    int t = pattern.vertex_count();
    if (pattern.edge_count() == t * (t - 1) / 2) return "K_" + std::to_string(t);
    return "pattern on " + std::to_string(t) + " vertices, " +
           std::to_string(pattern.edge_count()) + " edges";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact toolkit for complete graph immersions in dense graphs"};
    app.require_subcommand(1);

    std::string input_path, inline_arg, output_path, format = "graph6";
    std::uint64_t budget_limit = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t seed = 0;
    int workers = 1;
    bool json_out = false;

    auto add_common = [&](CLI::App* cmd, bool with_graph_input) {
        cmd->add_option("--budget", budget_limit, "node limit per solver call");
        cmd->add_option("--seed", seed, "seed for randomized generators");
        cmd->add_option("--workers", workers, "worker threads for the hunt");
        cmd->add_option("-o,--output", output_path, "write the artifact to a file");
        cmd->add_flag("--json", json_out, "structured JSON output");
        if (with_graph_input) {
            cmd->add_option("-i,--input", input_path, "input file, - for stdin");
            cmd->add_option("graph", inline_arg, "inline graph6 string");
        }
    };

    CLI::App* convert = app.add_subcommand("convert", "re-encode a graph");
    add_common(convert, true);
    convert->add_option("--format", format, "output format: graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    CLI::App* analyze = app.add_subcommand("analyze", "exact graph parameters");
    add_common(analyze, true);

    CLI::App* construct = app.add_subcommand("construct", "build a verified immersion");
    std::string which;
    std::vector<int> sizes;
    construct->add_option("kind", which, "multipartite, dense56, c4free or third")
        ->required()
        ->check(CLI::IsMember({"multipartite", "dense56", "c4free", "third"}));
    construct->add_option("--sizes", sizes, "class sizes for multipartite")->delimiter(',');
    add_common(construct, true);

    CLI::App* verify = app.add_subcommand("verify", "check an immersion certificate");
    add_common(verify, false);
    verify->add_option("-i,--input", input_path, "certificate file, - for stdin");

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive immersion search");
    std::string oracle_kind, pattern_token;
    oracle->add_option("kind", oracle_kind, "paths, lifts or maxclique")
        ->required()
        ->check(CLI::IsMember({"paths", "lifts", "maxclique"}));
    oracle->add_option("--pattern", pattern_token, "pattern: K5 / C5 / P3 or graph6");
    add_common(oracle, true);

    CLI::App* hunt = app.add_subcommand("hunt", "counterexample search harness");
    std::string source_kind = "enumerate";
    int hunt_n = 5, hunt_count = 10;
    bool full_battery = false, skip_c3 = false;
    hunt->add_option("--source", source_kind, "enumerate, random or stream")
        ->check(CLI::IsMember({"enumerate", "random", "stream"}));
    hunt->add_option("--n", hunt_n, "graph order for enumerate/random");
    hunt->add_option("--count", hunt_count, "batch size for random");
    hunt->add_flag("--full-battery", full_battery, "evaluate every condition, no short circuit");
    hunt->add_flag("--skip-c3", skip_c3, "run conjecture-3 checks only on battery survivors");
    add_common(hunt, true);

    try {
        std::vector<const char*> argv;
        argv.push_back("immtool");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: command line: " << e.what() << '\n';
        return 1;
    }

    Budget budget{budget_limit};
    OutputSink sink{out, output_path};

    try {
        if (convert->parsed()) {
            Graph g = read_graph_text(fetch_input(input_path, inline_arg, in));
            sink.write(format == "graph6" ? serialize_graph6(g) + "\n" : serialize_edge_list(g));
            return 0;
        }

        if (analyze->parsed()) {
            Graph g = read_graph_text(fetch_input(input_path, inline_arg, in));
            IndependenceResult alpha = independence_number(g, budget);
            CliqueResult omega = clique_number(g, budget);
            ChromaticResult chi = chromatic_number(g, budget);
            std::optional<int> diam = diameter(g);
            DensityWitness dense = is_k_s_dense(g, 5, 6);
            InducedC4Result c4 = complement_has_induced_c4(g);
            if (json_out) {
                nlohmann::ordered_json j;
                j["graph6"] = serialize_graph6(g);
                j["n"] = g.vertex_count();
                j["m"] = g.edge_count();
                j["alpha"] = alpha.a;
                j["omega"] = omega.w;
                j["chi"] = chi.k;
                j["delta"] = g.min_degree();
                if (diam) j["diameter"] = *diam;
                else j["diameter"] = "inf";
                j["connected"] = is_connected(g);
                j["dense_5_6"] = dense.dense;
                j["complement_c4_free"] = !c4.found;
                sink.write(j.dump() + "\n");
            } else {
                std::ostringstream text;
                text << "n " << g.vertex_count() << "\n";
                text << "m " << g.edge_count() << "\n";
                text << "alpha " << alpha.a << "\n";
                text << "omega " << omega.w << "\n";
                text << "chi " << chi.k << "\n";
                text << "delta " << g.min_degree() << "\n";
                text << "diameter " << (diam ? std::to_string(*diam) : "inf") << "\n";
                text << "connected " << (is_connected(g) ? "true" : "false") << "\n";
                text << "dense_5_6 " << (dense.dense ? "true" : "false") << "\n";
                text << "complement_c4_free " << (c4.found ? "false" : "true") << "\n";
                sink.write(text.str());
            }
            return 0;
        }

        if (construct->parsed()) {
            ImmersionCertificate cert;
            std::string summary;
            if (which == "multipartite") {
                if (sizes.empty()) {
                    throw std::invalid_argument("construct multipartite: --sizes required");
                }
                MultipartiteImmersion mp = construct_multipartite_immersion(sizes);
                cert = std::move(mp.certificate);
                summary = "multipartite construction";
            } else {
                Graph g = read_graph_text(fetch_input(input_path, inline_arg, in));
                if (which == "dense56") {
                    cert = construct_dense56_immersion(g, budget);
                    summary = "(5,6)-dense construction, coloring:\n" +
                              serialize_coloring(chromatic_number(g, budget).witness);
                } else if (which == "c4free") {
                    cert = construct_c4free_complement_immersion(g, budget);
                    summary = "C4-free-complement construction, coloring:\n" +
                              serialize_coloring(chromatic_number(g, budget).witness);
                } else {
                    ThirdImmersionResult third = construct_third_immersion(g, budget);
                    if (third.clique) {
                        cert = clique_certificate(g, *third.clique);
                        summary = "one-third construction, clique branch";
                    } else {
                        cert = std::move(*third.certificate);
                        summary = "one-third construction, routing branch";
                    }
                }
            }
            VerificationResult res = verify_certificate(cert);
            if (!res.valid) {
                throw std::logic_error("construct: certificate failed verification: " +
                                       res.violation);
            }
            err << "immersed " << pattern_name(cert.pattern)
                << (res.strong ? " (strong)" : " (not strong)") << "\n"
                << summary << "\n";
            sink.write(serialize_certificate(cert) + "\n");
            return 0;
        }

        if (verify->parsed()) {
            if (input_path.empty()) {
                throw std::invalid_argument("verify: --input required (certificate file)");
            }
            ImmersionCertificate cert = parse_certificate(read_source(input_path, in));
            VerificationResult res = verify_certificate(cert);
            if (!res.valid) {
                err << "error: certificate invalid: " << res.violation << '\n';
                return 1;
            }
            sink.write("valid " + std::string(res.strong ? "strong " : "") + "immersion of " +
                       pattern_name(cert.pattern) + "\n");
            return 0;
        }

        if (oracle->parsed()) {
            Graph host = read_graph_text(fetch_input(input_path, inline_arg, in));
            if (oracle_kind == "maxclique") {
                MaxCliqueImmersionResult res = max_clique_immersion(host, budget);
                err << "max immersed clique: t = " << res.t
                    << (res.definitive ? "" : " (lower bound only, budget hit)") << '\n';
                sink.write(serialize_certificate(res.certificate) + "\n");
                return res.definitive ? 0 : 2;
            }
            if (pattern_token.empty()) throw std::invalid_argument("oracle: --pattern required");
            Graph pattern = parse_pattern_token(pattern_token);
            if (oracle_kind == "paths") {
                PathsOracleResult res = immersion_oracle_paths(host, pattern, budget);
                if (res.status == OracleStatus::kFound) {
                    err << "found immersion of " << pattern_name(pattern) << '\n';
                    sink.write(serialize_certificate(*res.certificate) + "\n");
                    return 0;
                }
                if (res.status == OracleStatus::kNone) {
                    sink.write("none: no immersion of " + pattern_name(pattern) +
                               " (search exhausted)\n");
                    return 0;
                }
                err << "budget: path search gave up before a definitive answer\n";
                return 2;
            }
            LiftOracleStatus status = immersion_oracle_lifts(host, pattern, budget);
            if (status == LiftOracleStatus::kBudget) {
                err << "budget: lift search gave up before a definitive answer\n";
                return 2;
            }
            sink.write(std::string(status == LiftOracleStatus::kTrue ? "true" : "false") + "\n");
            return 0;
        }

        if (hunt->parsed()) {
            SearchSource source;
            source.n = hunt_n;
            source.count = hunt_count;
            source.seed = seed;
            if (source_kind == "enumerate") {
                source.kind = SearchSource::Kind::kEnumerate;
            } else if (source_kind == "random") {
                source.kind = SearchSource::Kind::kRandom;
            } else {
                source.kind = SearchSource::Kind::kStream;
                std::string text =
                    input_path.empty() ? read_source("-", in) : read_source(input_path, in);
                std::istringstream lines(text);
                std::string line;
                while (std::getline(lines, line)) {
                    line = trim(line);
                    if (!line.empty()) source.graph6_lines.push_back(line);
                }
            }
            HarnessConfig config;
            config.budget = budget;
            config.workers = workers;
            config.full_battery = full_battery;
            config.check_conjecture3 = !skip_c3;
            SearchReport report = search_harness(source, config);
            err << search_report_summary(report);
            sink.write(serialize_search_report(report) + "\n");
            return report.c3_fails == 0 && report.survivors.empty() ? 0 : 1;
        }

        err << "error: unknown subcommand\n";
        return 1;
    } catch (const BudgetExceeded& e) {
        err << "budget: " << e.what() << '\n';
        return 2;
    } catch (const FalsificationError& e) {
        err << "error: " << e.what() << '\n' << e.bundle;
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace imm
