#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "cts/constraints.hpp"
#include "cts/low_level.hpp"

namespace cts {

// Two agents at one vertex at time t, or swapping an edge arriving at time t.
// For edge conflicts (from -> vertex) is agent_a's traversal; agent_b moves the
// opposite way.
struct Conflict {
    int agent_a = 0;  // 1-based, agent_a < agent_b
    int agent_b = 0;
    ConstraintKind kind = ConstraintKind::Vertex;
    Vertex vertex;
    Vertex from;
    int time = 0;
};

// Earliest conflict under stay-at-goal padding; ties broken by smallest
// (t, agent_a, agent_b, vertex-before-edge).
std::optional<Conflict> detect_first_conflict(const std::vector<TimedPath>& paths);
std::optional<Conflict> detect_first_conflict(
    const std::vector<std::shared_ptr<const TimedPath>>& paths);

// The two constraints that split a conflict, one per involved agent.
std::pair<Constraint, Constraint> split_conflict(const Conflict& conflict);

}  // namespace cts
