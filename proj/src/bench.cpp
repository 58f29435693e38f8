#include "cts/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "cts/adaptations.hpp"
#include "cts/cost_matrix.hpp"
#include "cts/dataset.hpp"
#include "cts/kbest.hpp"
#include "cts/movingai.hpp"
#include "cts/random.hpp"
#include "cts/solver.hpp"

namespace cts {

using nlohmann::json;

void BenchConfig::validate() const {
    if (maps.empty()) throw std::invalid_argument("bench config: no maps");
    for (const auto& m : maps)
        if (m.scen_paths.empty())
            throw std::invalid_argument("bench config: map without scenarios: " + m.map_path);
    if (agent_counts.empty() || task_counts.empty())
        throw std::invalid_argument("bench config: empty agent or task counts");
    if (variants.empty()) throw std::invalid_argument("bench config: no variants");
    bool needs_omega = false;
    for (const auto& v : variants) {
        bool mg_variant = v == "a" || v == "b" || v == "c";
        if (v != "cts" && v != "scbs" && !mg_variant)
            throw std::invalid_argument("bench config: unknown variant: " + v);
        if (mg_variant && mode != Mode::MG)
            throw std::invalid_argument("bench config: variant " + v + " needs MG mode");
        if (v == "cts" && mode != Mode::CTS)
            throw std::invalid_argument("bench config: variant cts needs CTS mode");
        if (v != "scbs") needs_omega = true;
    }
    if (needs_omega && omegas.empty())
        throw std::invalid_argument("bench config: no omega values");
    for (double w : omegas)
        if (!(w >= 0)) throw std::invalid_argument("bench config: omega must be >= 0");
    if (time_limit_seconds <= 0)
        throw std::invalid_argument("bench config: time limit must be positive");
    if (threads < 1) throw std::invalid_argument("bench config: threads must be >= 1");
}

BenchConfig bench_config_from_json(const std::string& text) {
    json doc = json::parse(text);
    BenchConfig config;
    for (const auto& m : doc.at("maps")) {
        BenchMapSpec spec;
        spec.map_path = m.at("map").get<std::string>();
        spec.scen_paths = m.at("scens").get<std::vector<std::string>>();
        config.maps.push_back(std::move(spec));
    }
    config.agent_counts = doc.at("agents").get<std::vector<int>>();
    config.task_counts = doc.at("tasks").get<std::vector<int>>();
    if (doc.contains("fanout")) {
        auto fanout = doc.at("fanout").get<std::vector<int>>();
        if (fanout.size() != 2)
            throw std::invalid_argument("bench config: fanout must be [lo,hi]");
        config.fanout_lo = fanout[0];
        config.fanout_hi = fanout[1];
    }
    if (doc.contains("omegas")) config.omegas = doc.at("omegas").get<std::vector<double>>();
    config.variants = doc.at("variants").get<std::vector<std::string>>();
    config.mode = mode_from_string(doc.value("mode", std::string("MG")));
    config.time_limit_seconds = doc.value("time_limit", 180.0);
    config.c_split = doc.value("c_split", 2.0 / 3.0);
    config.seed = doc.value("seed", std::uint64_t(1));
    config.threads = doc.value("threads", 1);
    config.validate();
    return config;
}

BenchConfig load_bench_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open bench config: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return bench_config_from_json(ss.str());
}

double compute_sqr(Cost cost_lb, Cost cost_sol) {
    if (cost_lb < 0 || cost_sol < cost_lb)
        throw std::invalid_argument("compute_sqr: need 0 <= cost_lb <= cost_sol");
    if (cost_sol == 0) return 1.0;
    return double(cost_lb) / double(cost_sol);
}

std::string format_omega(double omega) {
    if (omega == std::numeric_limits<double>::infinity()) return "inf";
    std::ostringstream ss;
    ss << omega;
    return ss.str();
}

namespace {

std::string base_name(const std::string& path) {
    auto slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

struct Job {
    int map_index;
    int scen_index;
    int n_agents;
    int n_tasks;
    std::size_t record_offset;  // first record slot for this job
};

}  // namespace

std::vector<RunRecord> run_benchmark(const BenchConfig& config) {
    config.validate();

    // one (variant, omega) pair per record within a job
    std::vector<std::pair<std::string, double>> runs;
    for (const auto& variant : config.variants) {
        if (variant == "scbs") {
            runs.push_back({variant, std::numeric_limits<double>::infinity()});
        } else {
            for (double omega : config.omegas) runs.push_back({variant, omega});
        }
    }

    std::vector<Job> jobs;
    std::size_t offset = 0;
    for (int mi = 0; mi < int(config.maps.size()); ++mi) {
        for (int si = 0; si < int(config.maps[std::size_t(mi)].scen_paths.size()); ++si) {
            for (int n_agents : config.agent_counts) {
                for (int n_tasks : config.task_counts) {
                    jobs.push_back({mi, si, n_agents, n_tasks, offset});
                    offset += runs.size();
                }
            }
        }
    }
    std::vector<RunRecord> records(offset);

    auto run_job = [&](const Job& job) {
        const auto& map_spec = config.maps[std::size_t(job.map_index)];
        const std::string map_name = base_name(map_spec.map_path);
        std::uint64_t seed =
            hash_words({config.seed, hash_string64(map_name), std::uint64_t(job.scen_index),
                        std::uint64_t(job.n_agents), std::uint64_t(job.n_tasks)});

        for (std::size_t r = 0; r < runs.size(); ++r) {
            RunRecord& rec = records[job.record_offset + r];
            rec.map_name = map_name;
            rec.scen_index = job.scen_index;
            rec.n_agents = job.n_agents;
            rec.n_tasks = job.n_tasks;
            rec.variant = runs[r].first;
            rec.omega = runs[r].second;
            rec.seed = seed;
        }

        Instance instance{GridMap::open(1, 1), {}, {}, config.mode};
        Cost lb = -1;
        try {
            GridMap map = parse_map_file(map_spec.map_path);
            auto entries =
                parse_scenario_file(map_spec.scen_paths[std::size_t(job.scen_index)]);
            instance = adapt_dataset(map, entries, job.n_agents, job.n_tasks,
                                     config.fanout_lo, config.fanout_hi, seed, config.mode);
            DistanceOracle distances(instance.map);
            lb = best_joint_sequence_cost(instance, distances,
                                          config.mode == Mode::MG
                                              ? SeqMode::Open
                                              : SeqMode::FixedTerminal);
        } catch (const std::exception&) {
            for (std::size_t r = 0; r < runs.size(); ++r)
                records[job.record_offset + r].status = "error";
            return;
        }

        for (std::size_t r = 0; r < runs.size(); ++r) {
            RunRecord& rec = records[job.record_offset + r];
            SolverConfig sc;
            sc.omega = runs[r].second;
            sc.time_limit_seconds = config.time_limit_seconds;
            try {
                SolveResult result;
                const std::string& variant = runs[r].first;
                if (variant == "cts")
                    result = solve(instance, sc);
                else if (variant == "a")
                    result = solve_mg_a(instance, sc);
                else if (variant == "b")
                    result = solve_mg_b(instance, sc);
                else if (variant == "c")
                    result = solve_mg_c(instance, {sc, config.c_split});
                else
                    result = solve_sequential(instance, sc);

                rec.status = to_string(result.status);
                rec.phase = result.phase;
                rec.runtime_seconds = result.status == SolveStatus::Timeout
                                          ? config.time_limit_seconds
                                          : result.stats.runtime_seconds;
                rec.cost_lb = lb;
                rec.roots_generated = result.stats.roots_generated;
                rec.tsp_calls = result.stats.tsp_calls;
                rec.hl_expansions = result.stats.hl_expansions;
                rec.ll_calls = result.stats.ll_calls;
                if (result.status == SolveStatus::Solved) {
                    rec.flowtime = result.flowtime;
                    if (lb >= 0) rec.sqr = compute_sqr(lb, result.flowtime);
                }
            } catch (const std::exception&) {
                rec.status = "error";
            }
        }
    };

    if (config.threads <= 1 || jobs.size() <= 1) {
        for (const auto& job : jobs) run_job(job);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                run_job(jobs[i]);
            }
        };
        std::vector<std::thread> pool;
        int n_threads = std::min<int>(config.threads, int(jobs.size()));
        pool.reserve(std::size_t(n_threads));
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return records;
}

namespace {

constexpr const char* kCsvHeader =
    "map,scen,n_agents,n_tasks,variant,omega,seed,status,phase,runtime_s,flowtime,"
    "cost_lb,sqr,roots_generated,tsp_calls,hl_expansions,ll_calls";

}  // namespace

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records) {
    out << kCsvHeader << "\n";
    for (const auto& r : records) {
        out << r.map_name << ',' << r.scen_index << ',' << r.n_agents << ',' << r.n_tasks
            << ',' << r.variant << ',' << format_omega(r.omega) << ',' << r.seed << ','
            << r.status << ',';
        if (r.phase) out << r.phase;
        out << ',' << std::fixed << std::setprecision(3) << r.runtime_seconds
            << std::defaultfloat << ',';
        if (r.flowtime >= 0) out << r.flowtime;
        out << ',';
        if (r.cost_lb >= 0) out << r.cost_lb;
        out << ',';
        if (r.sqr >= 0) out << std::fixed << std::setprecision(6) << r.sqr
                            << std::defaultfloat;
        out << ',' << r.roots_generated << ',' << r.tsp_calls << ',' << r.hl_expansions
            << ',' << r.ll_calls << "\n";
    }
}

std::vector<RunRecord> read_records_csv(std::istream& in) {
    std::vector<RunRecord> records;
    std::string line;
    if (!std::getline(in, line)) return records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cols;
        std::string col;
        std::istringstream ss(line);
        while (std::getline(ss, col, ',')) cols.push_back(col);
        while (cols.size() < 17) cols.push_back("");
        RunRecord r;
        r.map_name = cols[0];
        r.scen_index = std::stoi(cols[1]);
        r.n_agents = std::stoi(cols[2]);
        r.n_tasks = std::stoi(cols[3]);
        r.variant = cols[4];
        r.omega = cols[5] == "inf" ? std::numeric_limits<double>::infinity()
                                   : std::stod(cols[5]);
        r.seed = std::stoull(cols[6]);
        r.status = cols[7];
        r.phase = cols[8].empty() ? 0 : cols[8][0];
        r.runtime_seconds = std::stod(cols[9]);
        r.flowtime = cols[10].empty() ? -1 : std::stoll(cols[10]);
        r.cost_lb = cols[11].empty() ? -1 : std::stoll(cols[11]);
        r.sqr = cols[12].empty() ? -1.0 : std::stod(cols[12]);
        r.roots_generated = std::stoll(cols[13]);
        r.tsp_calls = std::stoll(cols[14]);
        r.hl_expansions = std::stoll(cols[15]);
        r.ll_calls = std::stoll(cols[16]);
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<CellAggregate> aggregate_records(const std::vector<RunRecord>& records,
                                             double time_limit_seconds) {
    struct Acc {
        int runs = 0, solved = 0;
        double runtime = 0, sqr = 0, roots = 0, tsp = 0;
    };
    std::map<std::tuple<std::string, int, int, std::string, double>, Acc> cells;
    for (const auto& r : records) {
        auto& acc = cells[{r.map_name, r.n_agents, r.n_tasks, r.variant, r.omega}];
        ++acc.runs;
        acc.runtime += r.status == "solved" ? r.runtime_seconds : time_limit_seconds;
        acc.roots += double(r.roots_generated);
        acc.tsp += double(r.tsp_calls);
        if (r.status == "solved") {
            ++acc.solved;
            if (r.sqr >= 0) acc.sqr += r.sqr;
        }
    }
    std::vector<CellAggregate> out;
    for (const auto& [key, acc] : cells) {
        CellAggregate cell;
        std::tie(cell.map_name, cell.n_agents, cell.n_tasks, cell.variant, cell.omega) = key;
        cell.runs = acc.runs;
        cell.success_rate = double(acc.solved) / double(acc.runs);
        cell.mean_runtime = acc.runtime / double(acc.runs);
        cell.mean_sqr = acc.solved ? acc.sqr / double(acc.solved) : -1.0;
        cell.mean_roots = acc.roots / double(acc.runs);
        cell.mean_tsp_calls = acc.tsp / double(acc.runs);
        out.push_back(std::move(cell));
    }
    return out;
}

void write_aggregates_csv(std::ostream& out, const std::vector<CellAggregate>& cells) {
    out << "map,n_agents,n_tasks,variant,omega,runs,success_rate,mean_runtime_s,mean_sqr,"
           "mean_roots,mean_tsp_calls\n";
    for (const auto& c : cells) {
        out << c.map_name << ',' << c.n_agents << ',' << c.n_tasks << ',' << c.variant
            << ',' << format_omega(c.omega) << ',' << c.runs << ',' << std::fixed
            << std::setprecision(4) << c.success_rate << ',' << std::setprecision(3)
            << c.mean_runtime << ',';
        if (c.mean_sqr >= 0) out << std::setprecision(6) << c.mean_sqr;
        out << ',' << std::setprecision(3) << c.mean_roots << ',' << c.mean_tsp_calls
            << std::defaultfloat << "\n";
    }
}

}  // namespace cts
