#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "cts/instance.hpp"
#include "cts/low_level.hpp"
#include "cts/sequence.hpp"

namespace cts {

struct SolverConfig {
    // Sub-optimality bound; 0 is exact, infinity degenerates to a single search
    // tree over the best joint sequence (the sequential baseline).
    double omega = 0.0;
    // Wall-clock budget in seconds, TSP time included; <= 0 means unlimited.
    double time_limit_seconds = 0.0;
    // Joint-state solvability gate budget (visited states); 0 disables the gate.
    std::size_t feasibility_gate_budget = 2'000'000;
    // Record the g of every conflict-checked node (tests).
    bool record_expansions = false;
};

inline constexpr double kOmegaInfinity = std::numeric_limits<double>::infinity();

enum class SolveStatus { Solved, Infeasible, Timeout };

std::string to_string(SolveStatus status);

struct SolveStats {
    long long roots_generated = 0;
    long long tsp_calls = 0;
    long long hl_expansions = 0;
    long long ll_calls = 0;
    double runtime_seconds = 0.0;
    std::vector<Cost> expansion_costs;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<TimedPath> paths;  // populated when solved
    Cost flowtime = -1;
    Cost cost_lb = -1;      // cost of the best joint sequence, -1 if none exists
    int solution_tree = 0;  // 1-based id of the tree that produced the solution
    char phase = 0;         // 'A'/'B' when produced by the two-phase adaptation
    SolveStats stats;
};

// The two-level forest search: trees follow successive joint task sequences,
// nodes resolve one conflict into two children, and new roots are created only
// when the necessity check demands one.
SolveResult solve(const Instance& instance, const SolverConfig& config);

// Necessity-check trigger: a new root is requested when OPEN is empty or the
// popped cost strictly exceeds (1+omega) times the newest sequence cost.
inline bool needs_new_root(Cost popped_g, Cost newest_sequence_cost, double omega,
                           bool open_empty) {
    if (omega == kOmegaInfinity) return false;
    return open_empty ||
           double(popped_g) > (1.0 + omega) * double(newest_sequence_cost);
}

}  // namespace cts
