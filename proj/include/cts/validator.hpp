#pragma once

#include <string>
#include <vector>

#include "cts/instance.hpp"
#include "cts/low_level.hpp"

namespace cts {

enum class ViolationKind {
    Boundary,
    TaskCompletion,
    TaskOrder,
    Behavior,
    StaticCollision,
    VertexConflict,
    EdgeConflict,
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind = ViolationKind::Behavior;
    int agent_a = 0;  // 1-based; 0 when not agent-specific
    int agent_b = 0;  // second agent for inter-agent conflicts
    int task_id = 0;
    Vertex vertex;
    int time = -1;
    std::string detail;
};

// Checks every constraint family exhaustively: endpoints, task completion for
// each (task, assignee) pair, declared visit order, legal moves, static
// obstacles, and pairwise conflicts with stay-at-goal padding.
// Paths must cover all agents in id order (throws otherwise).
std::vector<Violation> validate_solution(const Instance& instance,
                                         const std::vector<TimedPath>& paths);

}  // namespace cts
