#include "cts/validator.hpp"

#include <algorithm>
#include <stdexcept>

namespace cts {

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::Boundary: return "boundary";
        case ViolationKind::TaskCompletion: return "task-completion";
        case ViolationKind::TaskOrder: return "task-order";
        case ViolationKind::Behavior: return "behavior";
        case ViolationKind::StaticCollision: return "static-collision";
        case ViolationKind::VertexConflict: return "vertex-conflict";
        case ViolationKind::EdgeConflict: return "edge-conflict";
    }
    return "?";
}

namespace {

std::string vertex_str(Vertex v) {
    return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

}  // namespace

std::vector<Violation> validate_solution(const Instance& instance,
                                         const std::vector<TimedPath>& paths) {
    if (int(paths.size()) != instance.num_agents())
        throw std::invalid_argument("validate_solution: paths must cover all agents");
    for (int i = 0; i < instance.num_agents(); ++i) {
        if (paths[std::size_t(i)].agent_id != i + 1)
            throw std::invalid_argument("validate_solution: paths out of agent order");
        if (paths[std::size_t(i)].steps.empty())
            throw std::invalid_argument("validate_solution: empty path");
    }

    std::vector<Violation> out;
    const GridMap& map = instance.map;

    for (const auto& path : paths) {
        const int agent_id = path.agent_id;
        const AgentSpec& agent = instance.agent(agent_id);

        // endpoints
        if (!(path.steps.front() == agent.start))
            out.push_back({ViolationKind::Boundary, agent_id, 0, 0, path.steps.front(), 0,
                           "path does not begin at the agent start"});
        Vertex expected_end;
        if (instance.mode == Mode::CTS) {
            expected_end = *agent.destination;
        } else {
            expected_end = path.visits.empty() ? agent.start : path.visits.back().vertex;
        }
        if (!(path.steps.back() == expected_end))
            out.push_back({ViolationKind::Boundary, agent_id, 0, 0, path.steps.back(),
                           int(path.steps.size()) - 1,
                           "path does not end at " + vertex_str(expected_end)});

        // legal actions and static obstacles
        for (int t = 0; t < int(path.steps.size()); ++t) {
            Vertex v = path.steps[std::size_t(t)];
            if (!map.in_bounds(v)) {
                out.push_back({ViolationKind::Behavior, agent_id, 0, 0, v, t,
                               "vertex out of bounds"});
                continue;
            }
            if (map.blocked(v))
                out.push_back({ViolationKind::StaticCollision, agent_id, 0, 0, v, t,
                               "agent on a static obstacle"});
            if (t > 0 && !adjacent_or_equal(path.steps[std::size_t(t - 1)], v))
                out.push_back({ViolationKind::Behavior, agent_id, 0, 0, v, t,
                               "step is neither a wait nor a cardinal move"});
        }

        // task completion: occupancy of each assigned task's vertex
        for (int task_id : instance.tasks_of(agent_id)) {
            Vertex loc = instance.task(task_id).location;
            bool seen = std::any_of(path.steps.begin(), path.steps.end(),
                                    [&](Vertex v) { return v == loc; });
            if (!seen)
                out.push_back({ViolationKind::TaskCompletion, agent_id, 0, task_id, loc, -1,
                               "task " + std::to_string(task_id) + " never visited"});
        }

        // declared visit order: times non-decreasing, anchored on the path, and
        // covering each assigned task exactly once
        std::vector<int> declared;
        int prev_time = 0;
        for (const auto& visit : path.visits) {
            if (visit.time < prev_time)
                out.push_back({ViolationKind::TaskOrder, agent_id, 0, visit.task_id,
                               visit.vertex, visit.time, "visit times out of order"});
            prev_time = std::max(prev_time, visit.time);
            if (visit.time < 0 || visit.time >= int(path.steps.size()) ||
                !(path.steps[std::size_t(visit.time)] == visit.vertex)) {
                out.push_back({ViolationKind::TaskOrder, agent_id, 0, visit.task_id,
                               visit.vertex, visit.time,
                               "declared visit does not match the path"});
            }
            if (visit.task_id != 0) declared.push_back(visit.task_id);
        }
        std::sort(declared.begin(), declared.end());
        for (int task_id : instance.tasks_of(agent_id)) {
            auto lo = std::lower_bound(declared.begin(), declared.end(), task_id);
            int count = int(std::upper_bound(declared.begin(), declared.end(), task_id) - lo);
            if (count != 1)
                out.push_back({ViolationKind::TaskOrder, agent_id, 0, task_id,
                               instance.task(task_id).location, -1,
                               "assigned task appears " + std::to_string(count) +
                                   " times in the declared sequence"});
        }
    }

    // pairwise conflicts with stay-at-goal padding
    int max_t = 0;
    for (const auto& p : paths) max_t = std::max(max_t, int(p.steps.size()) - 1);
    const int n = instance.num_agents();
    for (int t = 0; t <= max_t; ++t) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                Vertex vi = position_at(paths[std::size_t(i)], t);
                Vertex vj = position_at(paths[std::size_t(j)], t);
                if (vi == vj)
                    out.push_back({ViolationKind::VertexConflict, i + 1, j + 1, 0, vi, t,
                                   "agents share " + vertex_str(vi)});
                if (t > 0) {
                    Vertex pi = position_at(paths[std::size_t(i)], t - 1);
                    Vertex pj = position_at(paths[std::size_t(j)], t - 1);
                    if (pi == vj && pj == vi && !(pi == vi))
                        out.push_back({ViolationKind::EdgeConflict, i + 1, j + 1, 0, vi, t,
                                       "agents swap " + vertex_str(pi) + "<->" +
                                           vertex_str(vi)});
                }
            }
        }
    }
    return out;
}

}  // namespace cts
