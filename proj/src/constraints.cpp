#include "cts/constraints.hpp"

#include <algorithm>

namespace cts {

namespace {
const std::vector<Interval> kUnconstrained{{0, kInfTime}};
}

const std::vector<Interval>& SafeIntervalIndex::intervals_at(Vertex v) const {
    auto it = vertex_intervals.find(v);
    return it == vertex_intervals.end() ? kUnconstrained : it->second;
}

bool SafeIntervalIndex::edge_forbidden_at(Vertex from, Vertex to, int arrival) const {
    auto it = edge_forbidden.find({from, to});
    if (it == edge_forbidden.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), arrival);
}

SafeIntervalIndex build_safe_intervals(const ConstraintSet& constraints, int agent_id) {
    SafeIntervalIndex index;
    std::unordered_map<Vertex, std::vector<int>, VertexHash> blocked_times;
    for (const Constraint& c : constraints) {
        if (c.agent_id != agent_id) continue;
        if (c.kind == ConstraintKind::Vertex)
            blocked_times[c.vertex].push_back(c.time);
        else
            index.edge_forbidden[{c.from, c.vertex}].push_back(c.time);
    }
    for (auto& [edge, times] : index.edge_forbidden) std::sort(times.begin(), times.end());
    for (auto& [vertex, times] : blocked_times) {
        std::sort(times.begin(), times.end());
        times.erase(std::unique(times.begin(), times.end()), times.end());
        std::vector<Interval> intervals;
        int begin = 0;
        for (int t : times) {
            if (t > begin) intervals.push_back({begin, t - 1});
            begin = t + 1;
        }
        intervals.push_back({begin, kInfTime});
        index.vertex_intervals.emplace(vertex, std::move(intervals));
    }
    return index;
}

}  // namespace cts
