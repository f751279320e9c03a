#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "monoclt/bounds.hpp"
#include "monoclt/coloring.hpp"
#include "monoclt/exact.hpp"
#include "monoclt/graph.hpp"
#include "monoclt/metrics.hpp"
#include "monoclt/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

monoclt::Graph load_graph(const std::string& path) {
    return monoclt::read_edge_list_file(path);
}

nlohmann::json bound_report_json(const monoclt::BoundReport& b) {
    nlohmann::json j{{"schema", monoclt::kReportSchema},
                     {"m", b.m},
                     {"c", b.c},
                     {"wasserstein_bound", b.wasserstein_bound},
                     {"poisson_tv_bound", b.poisson_tv_bound},
                     {"c0", b.c0},
                     {"tv_vacuous", b.tv_vacuous},
                     {"w1_vacuous", b.w1_vacuous},
                     {"regime_hint", monoclt::regime_name(b.regime_hint)}};
    if (b.k_m) {
        j["k_m"] = *b.k_m;
        j["remark_rate"] = b.remark_rate;
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monochromatic edge counts: simulation, exact laws, and limit-theorem bounds"};
    app.require_subcommand(1);

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "generate a graph and write its edge list");
    std::string gen_family;
    monoclt::GenParams gen_params;
    std::uint64_t gen_seed = 0;
    bool gen_has_seed = false;
    std::string gen_out = "-";
    gen->add_option("--family", gen_family, "complete|cycle|path|star|matching|complete_bipartite|erdos_renyi")
        ->required();
    gen->add_option("--n", gen_params.n, "vertex count (matching: edge count)");
    gen->add_option("--a", gen_params.a, "left side size (complete_bipartite)");
    gen->add_option("--b", gen_params.b, "right side size (complete_bipartite)");
    gen->add_option("--p", gen_params.p, "edge probability (erdos_renyi)");
    auto* gen_seed_opt = gen->add_option("--seed", gen_seed, "RNG seed (erdos_renyi)");
    gen->add_option("-o,--out", gen_out, "output path, '-' for stdout");
    gen->callback([&] { gen_has_seed = gen_seed_opt->count() > 0; });

    // --- bound ---
    auto* bound = app.add_subcommand("bound", "evaluate the theoretical bounds at (m, c)");
    std::uint64_t bound_m = 0;
    std::uint32_t bound_c = 0;
    std::uint64_t bound_km = 0;
    double bound_c0 = 1.0;
    std::string bound_format = "json";
    auto* bound_km_opt = bound->add_option("--km", bound_km, "K_m = sum of per-edge min degrees");
    bound->add_option("--m", bound_m, "edge count")->required();
    bound->add_option("--c", bound_c, "color count")->required();
    bound->add_option("--c0", bound_c0, "multiplier for the remark rate (default 1)");
    bound->add_option("--format", bound_format, "json (default) or csv");

    // --- simulate ---
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo histogram of Y");
    std::string sim_graph;
    std::uint32_t sim_c = 0;
    std::uint64_t sim_samples = 0;
    std::uint64_t sim_seed = 0;
    std::uint32_t sim_stream = 0;
    unsigned sim_threads = 1;
    std::string sim_out = "-";
    simulate_cmd->add_option("graph", sim_graph, "edge-list file")->required();
    simulate_cmd->add_option("--c", sim_c, "color count")->required();
    simulate_cmd->add_option("--samples", sim_samples, "number of colorings")->required();
    simulate_cmd->add_option("--seed", sim_seed, "RNG seed")->required();
    simulate_cmd->add_option("--stream", sim_stream, "stream id (default 0)");
    simulate_cmd->add_option("--threads", sim_threads, "parallelism cap (output-invariant)");
    simulate_cmd->add_option("-o,--out", sim_out, "CSV path ('-' for stdout; sidecar <out>.json)");

    // --- exact ---
    auto* exact_cmd = app.add_subcommand("exact", "exact pmf of Y by enumeration + convolution");
    std::string exact_graph;
    std::uint32_t exact_c = 0;
    std::uint64_t exact_cap = monoclt::kDefaultEnumerationCap;
    std::string exact_out = "-";
    exact_cmd->add_option("graph", exact_graph, "edge-list file")->required();
    exact_cmd->add_option("--c", exact_c, "color count")->required();
    exact_cmd->add_option("--cap", exact_cap, "enumeration state cap");
    exact_cmd->add_option("-o,--out", exact_out, "CSV path, '-' for stdout");

    // --- verify ---
    auto* verify_cmd = app.add_subcommand("verify", "measure distances and compare with bounds");
    std::string verify_graph_path;
    std::uint32_t verify_c = 0;
    bool verify_exact = false, verify_mc = false;
    monoclt::VerifyOptions verify_options;
    std::string verify_out = "-";
    verify_cmd->add_option("graph", verify_graph_path, "edge-list file")->required();
    verify_cmd->add_option("--c", verify_c, "color count")->required();
    verify_cmd->add_flag("--exact", verify_exact, "exact oracle (error 3 if infeasible)");
    verify_cmd->add_flag("--mc", verify_mc, "Monte Carlo with statistical tolerance");
    verify_cmd->add_option("--samples", verify_options.samples, "Monte Carlo sample budget");
    verify_cmd->add_option("--seed", verify_options.seed, "Monte Carlo seed");
    verify_cmd->add_option("--cap", verify_options.cap, "enumeration state cap");
    verify_cmd->add_option("--c0", verify_options.c0, "remark-rate multiplier");
    verify_cmd->add_option("--threads", verify_options.threads, "parallelism cap");
    verify_cmd->add_option("-o,--out", verify_out, "report JSON path, '-' for stdout");

    // --- sweep ---
    auto* sweep_cmd = app.add_subcommand("sweep", "one verification row per graph in a schedule");
    std::string sweep_family;
    std::vector<std::uint32_t> sweep_sizes;
    std::string sweep_c_rule = "sqrt";
    std::string sweep_method = "exact";
    monoclt::SweepSpec sweep_spec;
    std::uint64_t sweep_graph_seed = 0;
    std::string sweep_out = "-";
    sweep_cmd->add_option("--family", sweep_family, "graph family")->required();
    sweep_cmd->add_option("--sizes", sweep_sizes, "family size schedule")->required()->delimiter(',');
    sweep_cmd->add_option("--c-rule", sweep_c_rule, "sqrt | fixed:C | times:K (c from m)");
    sweep_cmd->add_option("--method", sweep_method, "exact | mc");
    sweep_cmd->add_option("--samples", sweep_spec.options.samples, "Monte Carlo sample budget");
    sweep_cmd->add_option("--seed", sweep_spec.options.seed, "Monte Carlo seed");
    sweep_cmd->add_option("--cap", sweep_spec.options.cap, "enumeration state cap");
    sweep_cmd->add_option("--c0", sweep_spec.options.c0, "remark-rate multiplier");
    sweep_cmd->add_option("--threads", sweep_spec.options.threads, "parallelism cap");
    sweep_cmd->add_option("--p", sweep_spec.er_probability, "edge probability (erdos_renyi)");
    auto* sweep_gseed = sweep_cmd->add_option("--graph-seed", sweep_graph_seed,
                                              "graph seed (erdos_renyi)");
    sweep_cmd->add_option("-o,--out", sweep_out, "CSV path, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            const auto family = monoclt::parse_family(gen_family);
            if (!family) {
                std::cerr << "unknown family: " << gen_family << "\n";
                return kExitUsage;
            }
            if (gen_has_seed)
                gen_params.seed = gen_seed;
            const monoclt::Graph g = monoclt::generate(*family, gen_params);
            std::ostringstream text;
            monoclt::write_edge_list(text, g);
            write_text(gen_out, text.str());
            return kExitOk;
        }

        if (bound->parsed()) {
            std::optional<std::uint64_t> km;
            if (bound_km_opt->count() > 0)
                km = bound_km;
            const monoclt::BoundReport report =
                monoclt::make_bound_report(bound_m, bound_c, km, bound_c0);
            if (bound_format == "json") {
                std::cout << bound_report_json(report).dump(2) << "\n";
            } else if (bound_format == "csv") {
                char buf[64];
                auto row = [&buf](const char* key, double v) {
                    std::snprintf(buf, sizeof buf, "%s,%.17g\n", key, v);
                    std::cout << buf;
                };
                std::cout << "key,value\n";
                row("wasserstein_bound", report.wasserstein_bound);
                row("poisson_tv_bound", report.poisson_tv_bound);
                if (report.k_m)
                    row("remark_rate", report.remark_rate);
            } else {
                std::cerr << "unknown --format: " << bound_format << "\n";
                return kExitUsage;
            }
            return kExitOk;
        }

        if (simulate_cmd->parsed()) {
            const monoclt::Graph g = load_graph(sim_graph);
            const monoclt::ColoringConfig cfg{sim_c, sim_seed, sim_stream};
            const monoclt::SampleSummary s = monoclt::simulate(g, cfg, sim_samples, sim_threads);
            write_text(sim_out, monoclt::sample_csv(s));
            const nlohmann::json sidecar{{"schema", monoclt::kReportSchema},
                                         {"seed", s.seed},
                                         {"stream_id", s.stream_id},
                                         {"stream_count", s.stream_count},
                                         {"n_samples", s.n_samples},
                                         {"mean", s.mean},
                                         {"variance", s.variance},
                                         {"graph_hash", g.hash_hex()}};
            if (sim_out != "-" && !sim_out.empty())
                write_text(sim_out + ".json", sidecar.dump(2) + "\n");
            return kExitOk;
        }

        if (exact_cmd->parsed()) {
            const monoclt::Graph g = load_graph(exact_graph);
            const monoclt::DiscreteDistribution d = monoclt::exact_pmf(g, exact_c, exact_cap);
            write_text(exact_out, monoclt::pmf_csv(d));
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            if (verify_exact == verify_mc) {
                std::cerr << "pick exactly one of --exact / --mc\n";
                return kExitUsage;
            }
            verify_options.method =
                verify_exact ? monoclt::Method::exact : monoclt::Method::monte_carlo;
            const monoclt::Graph g = load_graph(verify_graph_path);
            const monoclt::VerificationReport report =
                monoclt::verify_graph(g, verify_c, verify_options, verify_graph_path);
            write_text(verify_out, monoclt::report_to_json(report));
            return report.all_pass ? kExitOk : kExitRuntime;
        }

        if (sweep_cmd->parsed()) {
            const auto family = monoclt::parse_family(sweep_family);
            if (!family) {
                std::cerr << "unknown family: " << sweep_family << "\n";
                return kExitUsage;
            }
            const auto rule = monoclt::CRule::parse(sweep_c_rule);
            if (!rule) {
                std::cerr << "bad --c-rule: " << sweep_c_rule << "\n";
                return kExitUsage;
            }
            const auto method = monoclt::parse_method(sweep_method);
            if (!method) {
                std::cerr << "bad --method: " << sweep_method << "\n";
                return kExitUsage;
            }
            sweep_spec.family = *family;
            sweep_spec.sizes = sweep_sizes;
            sweep_spec.c_rule = *rule;
            sweep_spec.options.method = *method;
            if (sweep_gseed->count() > 0)
                sweep_spec.graph_seed = sweep_graph_seed;
            const std::vector<monoclt::SweepRow> rows = monoclt::sweep(sweep_spec);
            write_text(sweep_out, monoclt::sweep_csv(rows));
            return kExitOk;
        }
    } catch (const monoclt::InfeasibleError& e) {
        std::cerr << "infeasible exact computation: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
