#pragma once

#include <cstdint>
#include <optional>

#include "cts/instance.hpp"

namespace cts {

enum class OracleStatus { Solved, Infeasible, HorizonExceeded };

struct OracleResult {
    OracleStatus status = OracleStatus::Infeasible;
    Cost flowtime = -1;
};

// Exhaustive best-first search over the joint state (agent positions, per-agent
// visited-task sets, parked flags), exact for the flowtime objective including
// stay-at-goal blocking. Supports up to 3 agents. `horizon` caps the per-agent
// completion time considered.
OracleResult brute_force_oracle(const Instance& instance, int horizon);

// Reachability-only variant used as a solvability gate: true/false when decided
// within `state_budget` visited states, nullopt when the budget runs out or the
// instance is too large to encode.
std::optional<bool> joint_solution_exists(const Instance& instance,
                                          std::size_t state_budget);

}  // namespace cts
