#pragma once

#include "cts/solver.hpp"

namespace cts {

struct AdaptationConfig {
    SolverConfig base;
    double c_split = 2.0 / 3.0;  // fraction of the time limit given to phase A
};

// Open-terminal sequencing: the agent ends on the last task of its sequence.
SolveResult solve_mg_a(const Instance& instance, const SolverConfig& config);

// Fixes one task per agent as its destination (the final task of its best open
// sequence, bumped by rank until destinations are distinct) and solves the
// resulting fixed-terminal instance. Incomplete but usually faster.
SolveResult solve_mg_b(const Instance& instance, const SolverConfig& config);

// Phase A with c_split of the budget, then phase B with the remainder.
SolveResult solve_mg_c(const Instance& instance, const AdaptationConfig& config);

// Single search tree over the best joint sequence (omega = infinity).
SolveResult solve_sequential(const Instance& instance, SolverConfig config);

}  // namespace cts
