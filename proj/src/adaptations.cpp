#include "cts/adaptations.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cts/cost_matrix.hpp"
#include "cts/kbest.hpp"

namespace cts {

namespace {

void require_mg(const Instance& instance, const char* who) {
    if (instance.mode != Mode::MG)
        throw std::invalid_argument(std::string(who) + ": instance must be in MG mode");
}

}  // namespace

SolveResult solve_mg_a(const Instance& instance, const SolverConfig& config) {
    require_mg(instance, "solve_mg_a");
    return solve(instance, config);
}

SolveResult solve_mg_b(const Instance& instance, const SolverConfig& config) {
    require_mg(instance, "solve_mg_b");
    instance.validate();
    for (const auto& agent : instance.agents)
        if (instance.tasks_of(agent.id).empty())
            throw std::invalid_argument("solve_mg_b: agent " + std::to_string(agent.id) +
                                        " has no assigned task");

    // pick destinations: final task of each agent's best open sequence, advancing
    // ranks in agent-id order until the final vertices are pairwise distinct
    DistanceOracle distances(instance.map);
    long long tsp_calls = 0;
    std::unordered_set<Vertex, VertexHash> claimed;
    std::vector<int> destination_task(std::size_t(instance.num_agents()), 0);
    for (const auto& agent : instance.agents) {
        SingleAgentKBest kbest(build_cost_matrix(instance, agent.id, distances, SeqMode::Open),
                               agent.id, &tsp_calls);
        int chosen = 0;
        for (int rank = 1;; ++rank) {
            const TaskSequence* seq = kbest.sequence_at(rank);
            if (!seq) break;
            const SequenceEntry& last = seq->entries.back();
            if (!claimed.count(last.vertex)) {
                claimed.insert(last.vertex);
                chosen = last.task_id;
                break;
            }
        }
        if (chosen == 0) {
            SolveResult result;
            result.status = SolveStatus::Infeasible;
            result.stats.tsp_calls = tsp_calls;
            return result;
        }
        destination_task[std::size_t(agent.id - 1)] = chosen;
    }

    // rebuild as a fixed-terminal instance; the claimed task is completed by the
    // arrival at the destination, so the agent is dropped from its assignees
    Instance converted{instance.map, instance.agents, {}, Mode::CTS};
    for (auto& agent : converted.agents) {
        int task_id = destination_task[std::size_t(agent.id - 1)];
        agent.destination = instance.task(task_id).location;
    }
    std::vector<int> original_id;  // converted task index -> original task id
    for (const auto& task : instance.tasks) {
        TaskSpec copy = task;
        for (int agent_id = 1; agent_id <= instance.num_agents(); ++agent_id) {
            if (destination_task[std::size_t(agent_id - 1)] != task.id) continue;
            copy.assignees.erase(
                std::remove(copy.assignees.begin(), copy.assignees.end(), agent_id),
                copy.assignees.end());
        }
        if (copy.assignees.empty()) continue;
        copy.id = int(original_id.size()) + 1;
        original_id.push_back(task.id);
        converted.tasks.push_back(std::move(copy));
    }

    SolveResult result = solve(converted, config);
    result.stats.tsp_calls += tsp_calls;

    // restore original task ids in the annotations; the destination arrival
    // completes the claimed task
    for (auto& path : result.paths) {
        for (auto& visit : path.visits) {
            if (visit.kind == SeqKind::Task)
                visit.task_id = original_id[std::size_t(visit.task_id - 1)];
            else if (visit.kind == SeqKind::Destination)
                visit.task_id = destination_task[std::size_t(path.agent_id - 1)];
        }
    }
    return result;
}

SolveResult solve_mg_c(const Instance& instance, const AdaptationConfig& config) {
    require_mg(instance, "solve_mg_c");
    if (config.c_split <= 0.0 || config.c_split >= 1.0)
        throw std::invalid_argument("solve_mg_c: c_split must lie in (0,1)");
    if (config.base.time_limit_seconds <= 0) {
        SolveResult result = solve_mg_a(instance, config.base);
        result.phase = 'A';
        return result;
    }
    auto t0 = std::chrono::steady_clock::now();
    SolverConfig phase_a = config.base;
    phase_a.time_limit_seconds = config.base.time_limit_seconds * config.c_split;
    SolveResult result = solve_mg_a(instance, phase_a);
    if (result.status != SolveStatus::Timeout) {
        result.phase = 'A';
        return result;
    }
    double spent = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    SolverConfig phase_b = config.base;
    // keep a strictly positive budget: <= 0 would mean unlimited
    phase_b.time_limit_seconds =
        std::max(1e-9, config.base.time_limit_seconds - spent);
    double a_runtime = result.stats.runtime_seconds;
    result = solve_mg_b(instance, phase_b);
    result.phase = 'B';
    result.stats.runtime_seconds += a_runtime;
    return result;
}

SolveResult solve_sequential(const Instance& instance, SolverConfig config) {
    config.omega = kOmegaInfinity;
    return solve(instance, config);
}

}  // namespace cts
