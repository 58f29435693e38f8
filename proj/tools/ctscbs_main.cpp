// ctscbs: solve / bench / validate / oracle / sequences / plot
//
// Exit codes: 0 solved or ok, 1 usage or parse failure, 2 infeasible, 3 timeout.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>

#include <CLI11.hpp>

#include "cts/adaptations.hpp"
#include "cts/bench.hpp"
#include "cts/cost_matrix.hpp"
#include "cts/json_io.hpp"
#include "cts/kbest.hpp"
#include "cts/oracle.hpp"
#include "cts/svg_plot.hpp"
#include "cts/validator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitTimeout = 3;

int status_exit_code(cts::SolveStatus status) {
    switch (status) {
        case cts::SolveStatus::Solved: return kExitOk;
        case cts::SolveStatus::Infeasible: return kExitInfeasible;
        case cts::SolveStatus::Timeout: return kExitTimeout;
    }
    return kExitUsage;
}

int cmd_solve(const std::string& instance_path, double omega, const std::string& variant,
              double time_limit, double c_split, const std::string& out_path) {
    cts::Instance instance = cts::load_instance(instance_path);
    cts::SolverConfig config;
    config.omega = omega;
    config.time_limit_seconds = time_limit;

    std::string chosen = variant;
    if (chosen == "auto") chosen = instance.mode == cts::Mode::CTS ? "cts" : "a";

    cts::SolveResult result;
    if (chosen == "cts")
        result = cts::solve(instance, config);
    else if (chosen == "a")
        result = cts::solve_mg_a(instance, config);
    else if (chosen == "b")
        result = cts::solve_mg_b(instance, config);
    else if (chosen == "c")
        result = cts::solve_mg_c(instance, {config, c_split});
    else if (chosen == "scbs")
        result = cts::solve_sequential(instance, config);
    else
        throw CLI::ValidationError("--variant", "unknown variant " + chosen);

    std::string doc = cts::solution_to_json(result, chosen);
    if (out_path.empty() || out_path == "-") {
        std::cout << doc;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << doc;
    }
    std::cerr << "status=" << cts::to_string(result.status) << " flowtime=" << result.flowtime
              << " runtime_s=" << result.stats.runtime_seconds
              << " roots=" << result.stats.roots_generated
              << " tsp_calls=" << result.stats.tsp_calls << "\n";
    return status_exit_code(result.status);
}

int cmd_bench(const std::string& config_path, const std::string& out_dir) {
    cts::BenchConfig config = cts::load_bench_config(config_path);
    for (const auto& m : config.maps) {
        if (!std::filesystem::exists(m.map_path))
            throw std::runtime_error("missing map file: " + m.map_path);
        for (const auto& s : m.scen_paths)
            if (!std::filesystem::exists(s))
                throw std::runtime_error("missing scenario file: " + s);
    }
    auto records = cts::run_benchmark(config);
    std::filesystem::create_directories(out_dir);
    {
        std::ofstream out(out_dir + "/records.csv");
        cts::write_records_csv(out, records);
    }
    auto cells = cts::aggregate_records(records, config.time_limit_seconds);
    {
        std::ofstream out(out_dir + "/aggregates.csv");
        cts::write_aggregates_csv(out, cells);
    }
    cts::write_aggregates_csv(std::cout, cells);
    bool any_error = false;
    for (const auto& r : records) any_error = any_error || r.status == "error";
    return any_error ? kExitUsage : kExitOk;
}

int cmd_validate(const std::string& instance_path, const std::string& solution_path) {
    cts::Instance instance = cts::load_instance(instance_path);
    cts::SolveResult solution = cts::load_solution(solution_path);
    auto violations = cts::validate_solution(instance, solution.paths);
    std::cout << cts::violations_to_json(violations);
    std::cerr << violations.size() << " violation(s)\n";
    return violations.empty() ? kExitOk : kExitInfeasible;
}

int cmd_oracle(const std::string& instance_path, int horizon) {
    cts::Instance instance = cts::load_instance(instance_path);
    if (horizon <= 0) horizon = 4 * instance.map.cell_count();
    auto result = cts::brute_force_oracle(instance, horizon);
    switch (result.status) {
        case cts::OracleStatus::Solved:
            std::cout << "optimal_flowtime " << result.flowtime << "\n";
            return kExitOk;
        case cts::OracleStatus::Infeasible:
            std::cout << "infeasible\n";
            return kExitInfeasible;
        case cts::OracleStatus::HorizonExceeded:
            std::cout << "infeasible-within-horizon " << horizon << "\n";
            return kExitInfeasible;
    }
    return kExitUsage;
}

int cmd_sequences(const std::string& instance_path, int agent_id, int k) {
    cts::Instance instance = cts::load_instance(instance_path);
    cts::DistanceOracle distances(instance.map);
    cts::SeqMode mode = instance.mode == cts::Mode::CTS ? cts::SeqMode::FixedTerminal
                                                        : cts::SeqMode::Open;
    auto print_sequence = [](const cts::TaskSequence& seq) {
        std::cout << "agent " << seq.agent_id << " cost " << seq.cost << ":";
        for (const auto& e : seq.entries) {
            std::cout << " (" << e.vertex.row << "," << e.vertex.col << ")";
            if (e.task_id) std::cout << "#t" << e.task_id;
        }
        std::cout << "\n";
    };

    if (agent_id > 0) {
        long long calls = 0;
        cts::SingleAgentKBest kbest(
            cts::build_cost_matrix(instance, agent_id, distances, mode), agent_id, &calls);
        for (int rank = 1; rank <= k; ++rank) {
            const cts::TaskSequence* seq = kbest.sequence_at(rank);
            if (!seq) {
                std::cout << "exhausted after " << rank - 1 << " sequence(s)\n";
                break;
            }
            std::cout << "rank " << rank << " ";
            print_sequence(*seq);
        }
        return kExitOk;
    }

    std::vector<cts::CostMatrix> matrices;
    for (const auto& agent : instance.agents)
        matrices.push_back(cts::build_cost_matrix(instance, agent.id, distances, mode));
    cts::JointKBestStream stream(std::move(matrices));
    for (int rank = 1; rank <= k; ++rank) {
        auto joint = stream.next();
        if (!joint) {
            std::cout << "exhausted after " << rank - 1 << " joint sequence(s)\n";
            break;
        }
        std::cout << "joint rank " << rank << " cost " << joint->cost << " ranks [";
        for (std::size_t i = 0; i < joint->ranks.size(); ++i)
            std::cout << (i ? "," : "") << joint->ranks[i];
        std::cout << "]\n";
        for (const auto& seq : joint->sequences) {
            std::cout << "  ";
            print_sequence(seq);
        }
    }
    return kExitOk;
}

int cmd_plot(const std::string& csv_path, const std::string& out_dir) {
    std::ifstream in(csv_path);
    if (!in) throw std::runtime_error("cannot open " + csv_path);
    auto records = cts::read_records_csv(in);
    if (records.empty()) throw std::runtime_error("no records in " + csv_path);
    double time_limit = 0;
    for (const auto& r : records) time_limit = std::max(time_limit, r.runtime_seconds);
    auto cells = cts::aggregate_records(records, time_limit);

    std::filesystem::create_directories(out_dir);
    struct Metric {
        const char* name;
        double (*get)(const cts::CellAggregate&);
    };
    const Metric metrics[] = {
        {"success_rate", [](const cts::CellAggregate& c) { return c.success_rate; }},
        {"mean_runtime", [](const cts::CellAggregate& c) { return c.mean_runtime; }},
        {"mean_sqr", [](const cts::CellAggregate& c) { return c.mean_sqr; }},
        {"mean_roots", [](const cts::CellAggregate& c) { return c.mean_roots; }},
        {"mean_tsp_calls", [](const cts::CellAggregate& c) { return c.mean_tsp_calls; }},
    };
    for (const auto& metric : metrics) {
        std::map<std::string, cts::PlotSeries> by_config;
        for (const auto& cell : cells) {
            double y = metric.get(cell);
            if (y < 0) continue;
            std::string label = cell.map_name + " " + cell.variant + " w=" +
                                cts::format_omega(cell.omega) + " N=" +
                                std::to_string(cell.n_agents);
            auto& series = by_config[label];
            series.label = label;
            series.points.push_back({double(cell.n_tasks), y});
        }
        std::vector<cts::PlotSeries> series;
        for (auto& [label, s] : by_config) {
            std::sort(s.points.begin(), s.points.end());
            series.push_back(std::move(s));
        }
        std::ofstream out(out_dir + "/" + metric.name + ".svg");
        out << cts::render_line_chart(metric.name, "tasks", metric.name, series);
    }
    std::cout << "wrote " << (sizeof(metrics) / sizeof(metrics[0])) << " charts to "
              << out_dir << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CTS-MAPF / MG-MAPF solver and benchmark harness"};
    app.require_subcommand(1);

    std::string instance_path, solution_path, out_path, config_path, out_dir = "bench_out";
    std::string csv_path, variant = "auto";
    double omega = 0.0, time_limit = 0.0, c_split = 2.0 / 3.0;
    int horizon = 0, agent_id = 0, k = 1;

    auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
    solve_cmd->add_option("instance", instance_path, "instance JSON file")->required();
    solve_cmd->add_option("--omega", omega, "sub-optimality bound (>= 0)")
        ->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--variant", variant, "cts|a|b|c|scbs|auto");
    solve_cmd->add_option("--time-limit", time_limit, "seconds, 0 = unlimited");
    solve_cmd->add_option("--c-split", c_split, "phase-A share for variant c");
    solve_cmd->add_option("--out", out_path, "solution output file (default stdout)");

    auto* bench_cmd = app.add_subcommand("bench", "run a benchmark config");
    bench_cmd->add_option("config", config_path, "bench config JSON")->required();
    bench_cmd->add_option("--out-dir", out_dir, "output directory");

    auto* validate_cmd = app.add_subcommand("validate", "check a solution file");
    validate_cmd->add_option("instance", instance_path, "instance JSON file")->required();
    validate_cmd->add_option("solution", solution_path, "solution JSON file")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force optimal flowtime");
    oracle_cmd->add_option("instance", instance_path, "instance JSON file")->required();
    oracle_cmd->add_option("--horizon", horizon, "per-agent time horizon");

    auto* seq_cmd = app.add_subcommand("sequences", "dump K-best task sequences");
    seq_cmd->add_option("instance", instance_path, "instance JSON file")->required();
    seq_cmd->add_option("--agent", agent_id, "agent id (omit for joint sequences)");
    seq_cmd->add_option("--k", k, "how many sequences")->check(CLI::PositiveNumber);

    auto* plot_cmd = app.add_subcommand("plot", "render benchmark CSV to SVG charts");
    plot_cmd->add_option("csv", csv_path, "records.csv from bench")->required();
    plot_cmd->add_option("--out-dir", out_dir, "output directory");

    try {
        app.parse(argc, argv);
        if (solve_cmd->parsed())
            return cmd_solve(instance_path, omega, variant, time_limit, c_split, out_path);
        if (bench_cmd->parsed()) return cmd_bench(config_path, out_dir);
        if (validate_cmd->parsed()) return cmd_validate(instance_path, solution_path);
        if (oracle_cmd->parsed()) return cmd_oracle(instance_path, horizon);
        if (seq_cmd->parsed()) return cmd_sequences(instance_path, agent_id, k);
        if (plot_cmd->parsed()) return cmd_plot(csv_path, out_dir);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
