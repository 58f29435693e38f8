#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cts/grid_map.hpp"

namespace cts {

enum class Mode { CTS, MG };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& s);

struct AgentSpec {
    int id = 0;  // 1-based, contiguous
    Vertex start;
    std::optional<Vertex> destination;  // absent in MG mode
};

struct TaskSpec {
    int id = 0;  // 1-based, contiguous
    Vertex location;
    std::vector<int> assignees;  // sorted unique agent ids, nonempty
};

struct Instance {
    GridMap map;
    std::vector<AgentSpec> agents;
    std::vector<TaskSpec> tasks;
    Mode mode = Mode::CTS;

    int num_agents() const { return int(agents.size()); }
    int num_tasks() const { return int(tasks.size()); }

    const AgentSpec& agent(int agent_id) const { return agents.at(agent_id - 1); }
    const TaskSpec& task(int task_id) const { return tasks.at(task_id - 1); }

    // Task ids assigned to an agent, in task-id order.
    std::vector<int> tasks_of(int agent_id) const;

    // Throws std::invalid_argument on any structural invariant breach.
    void validate() const;
};

}  // namespace cts
