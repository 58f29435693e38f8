#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cts/instance.hpp"

namespace cts {

struct BenchMapSpec {
    std::string map_path;
    std::vector<std::string> scen_paths;
};

struct BenchConfig {
    std::vector<BenchMapSpec> maps;
    std::vector<int> agent_counts;
    std::vector<int> task_counts;
    int fanout_lo = 1;
    int fanout_hi = 3;
    std::vector<double> omegas;           // ignored by the scbs variant
    std::vector<std::string> variants;    // cts | a | b | c | scbs
    Mode mode = Mode::MG;
    double time_limit_seconds = 180.0;
    double c_split = 2.0 / 3.0;
    std::uint64_t seed = 1;
    int threads = 1;

    void validate() const;
};

BenchConfig bench_config_from_json(const std::string& text);
BenchConfig load_bench_config(const std::string& path);

struct RunRecord {
    std::string map_name;
    int scen_index = 0;
    int n_agents = 0;
    int n_tasks = 0;
    std::string variant;
    double omega = 0.0;  // infinity for scbs
    std::uint64_t seed = 0;
    std::string status;
    char phase = 0;
    double runtime_seconds = 0.0;
    Cost flowtime = -1;
    Cost cost_lb = -1;
    double sqr = -1.0;  // lower bound over solution cost, solved runs only
    long long roots_generated = 0;
    long long tsp_calls = 0;
    long long hl_expansions = 0;
    long long ll_calls = 0;
};

// cost_lb / cost_sol; requires 0 <= cost_lb <= cost_sol, the 0/0 case is 1.
double compute_sqr(Cost cost_lb, Cost cost_sol);

// One record per (map x scenario x agents x tasks x variant x omega), in that
// deterministic order. Solver-outcome fields are reproducible across runs.
std::vector<RunRecord> run_benchmark(const BenchConfig& config);

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_records_csv(std::istream& in);

struct CellAggregate {
    std::string map_name;
    int n_agents = 0;
    int n_tasks = 0;
    std::string variant;
    double omega = 0.0;
    int runs = 0;
    double success_rate = 0.0;
    double mean_runtime = 0.0;  // timeouts counted as the time limit
    double mean_sqr = 0.0;      // over solved runs, -1 when none
    double mean_roots = 0.0;
    double mean_tsp_calls = 0.0;
};

std::vector<CellAggregate> aggregate_records(const std::vector<RunRecord>& records,
                                             double time_limit_seconds);
void write_aggregates_csv(std::ostream& out, const std::vector<CellAggregate>& cells);

std::string format_omega(double omega);

}  // namespace cts
