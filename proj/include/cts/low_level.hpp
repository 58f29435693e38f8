#pragma once

#include <optional>
#include <vector>

#include "cts/constraints.hpp"
#include "cts/distance.hpp"
#include "cts/grid_map.hpp"
#include "cts/sequence.hpp"

namespace cts {

struct Visit {
    Vertex vertex;
    SeqKind kind = SeqKind::Task;
    int task_id = 0;
    int time = 0;

    friend bool operator==(const Visit&, const Visit&) = default;
};

// Per-timestep occupancy of one agent; steps[t] is its vertex at time t and the
// path ends the moment the agent reaches its final target for good.
struct TimedPath {
    int agent_id = 0;
    std::vector<Vertex> steps;
    std::vector<Visit> visits;  // sequence targets in visit order (start excluded)
    Cost cost = 0;

    friend bool operator==(const TimedPath&, const TimedPath&) = default;
};

inline Cost path_cost(const TimedPath& path) { return Cost(path.steps.size()) - 1; }

// Stay-at-goal padding: finished agents keep occupying their final vertex.
inline Vertex position_at(const TimedPath& path, int t) {
    if (t >= int(path.steps.size())) return path.steps.back();
    return path.steps[std::size_t(t)];
}

// Minimum-cost timed path that visits the sequence targets in order and parks on
// the final one, using SIPP states (vertex, safe interval, visit stage). A target
// is credited on any stage-correct arrival; a goal state needs the final vertex
// free of this agent's constraints forever after. Returns nullopt when no path
// exists within cost_cap.
std::optional<TimedPath> low_level_search(const GridMap& map, const TaskSequence& sequence,
                                          const ConstraintSet& constraints,
                                          DistanceOracle& distances,
                                          Cost cost_cap = kInfCost);

}  // namespace cts
