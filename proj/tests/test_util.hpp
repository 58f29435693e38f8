#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "cts/grid_map.hpp"
#include "cts/instance.hpp"
#include "cts/low_level.hpp"
#include "cts/random.hpp"

namespace cts::test {

// plain BFS, independent of the library's distance code
inline std::optional<int> bfs_distance(const GridMap& map, Vertex from, Vertex to) {
    if (!map.passable(from) || !map.passable(to)) return std::nullopt;
    std::vector<int> dist(std::size_t(map.cell_count()), -1);
    std::deque<Vertex> queue{from};
    dist[std::size_t(map.cell_index(from))] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        if (v == to) return dist[std::size_t(map.cell_index(v))];
        for (Vertex step : kCardinalSteps) {
            Vertex w = v + step;
            if (!map.passable(w)) continue;
            int& d = dist[std::size_t(map.cell_index(w))];
            if (d >= 0) continue;
            d = dist[std::size_t(map.cell_index(v))] + 1;
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

inline GridMap random_map(SplitMix64& rng, int height, int width, double density) {
    std::vector<std::uint8_t> blocked(std::size_t(height) * std::size_t(width), 0);
    for (auto& cell : blocked)
        cell = rng.next_below(1000) < std::uint64_t(density * 1000) ? 1 : 0;
    return GridMap(height, width, std::move(blocked));
}

struct AgentInit {
    Vertex start;
    std::optional<Vertex> dest;
};
struct TaskInit {
    Vertex loc;
    std::vector<int> assignees;
};

inline Instance make_instance(const std::vector<std::string>& rows,
                              const std::vector<AgentInit>& agents,
                              const std::vector<TaskInit>& tasks, Mode mode) {
    Instance inst{GridMap::from_rows(rows), {}, {}, mode};
    for (std::size_t i = 0; i < agents.size(); ++i)
        inst.agents.push_back({int(i) + 1, agents[i].start, agents[i].dest});
    for (std::size_t j = 0; j < tasks.size(); ++j)
        inst.tasks.push_back({int(j) + 1, tasks[j].loc, tasks[j].assignees});
    inst.validate();
    return inst;
}

// seeded random CTS instance on a small map; agents and tasks on distinct cells
inline std::optional<Instance> random_cts_instance(SplitMix64& rng, int height, int width,
                                                   double density, int n_agents,
                                                   int n_tasks, int fanout_hi = 2) {
    GridMap map = random_map(rng, height, width, density);
    std::vector<Vertex> cells;
    for (int idx = 0; idx < map.cell_count(); ++idx)
        if (!map.blocked(map.vertex_at(idx))) cells.push_back(map.vertex_at(idx));
    for (std::size_t i = 0; i + 1 < cells.size(); ++i)
        std::swap(cells[i], cells[i + std::size_t(rng.next_below(cells.size() - i))]);
    if (int(cells.size()) < 2 * n_agents + n_tasks) return std::nullopt;

    Instance inst{map, {}, {}, Mode::CTS};
    int cursor = 0;
    for (int i = 0; i < n_agents; ++i) {
        AgentSpec agent;
        agent.id = i + 1;
        agent.start = cells[std::size_t(cursor++)];
        agent.destination = cells[std::size_t(cursor++)];
        inst.agents.push_back(agent);
    }
    for (int j = 0; j < n_tasks; ++j) {
        TaskSpec task;
        task.id = j + 1;
        task.location = cells[std::size_t(cursor++)];
        int size = 1 + int(rng.next_below(std::uint64_t(
                       std::min(fanout_hi, n_agents))));
        std::vector<int> ids;
        for (int a = 1; a <= n_agents; ++a) ids.push_back(a);
        for (int k = 0; k < size; ++k)
            std::swap(ids[std::size_t(k)],
                      ids[std::size_t(k) + std::size_t(rng.next_below(ids.size() - k))]);
        task.assignees.assign(ids.begin(), ids.begin() + size);
        std::sort(task.assignees.begin(), task.assignees.end());
        inst.tasks.push_back(task);
    }
    inst.validate();
    return inst;
}

inline std::optional<Instance> random_mg_instance(SplitMix64& rng, int height, int width,
                                                  double density, int n_agents, int n_tasks,
                                                  bool every_agent_tasked = false) {
    auto cts = random_cts_instance(rng, height, width, density, n_agents, n_tasks);
    if (!cts) return std::nullopt;
    cts->mode = Mode::MG;
    for (auto& agent : cts->agents) agent.destination.reset();
    if (every_agent_tasked) {
        // give each agent at least one task by round-robin augmentation
        for (int a = 1; a <= n_agents; ++a) {
            bool has = false;
            for (const auto& t : cts->tasks)
                has = has ||
                      std::binary_search(t.assignees.begin(), t.assignees.end(), a);
            if (!has && !cts->tasks.empty()) {
                auto& t = cts->tasks[std::size_t(a - 1) % cts->tasks.size()];
                t.assignees.push_back(a);
                std::sort(t.assignees.begin(), t.assignees.end());
            }
        }
    }
    cts->validate();
    return cts;
}

// distinct passable cells, in a deterministic random order
inline std::vector<Vertex> sample_passable(SplitMix64& rng, const GridMap& map, int count) {
    std::vector<Vertex> cells;
    for (int idx = 0; idx < map.cell_count(); ++idx)
        if (!map.blocked(map.vertex_at(idx))) cells.push_back(map.vertex_at(idx));
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        std::size_t j = i + std::size_t(rng.next_below(cells.size() - i));
        std::swap(cells[i], cells[j]);
    }
    if (int(cells.size()) < count) return {};
    cells.resize(std::size_t(count));
    return cells;
}

inline TaskSequence make_seq(int agent_id, const std::vector<Vertex>& vertices,
                             bool open_end) {
    TaskSequence seq;
    seq.agent_id = agent_id;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        SeqKind kind = SeqKind::Task;
        if (i == 0) kind = SeqKind::Start;
        else if (!open_end && i + 1 == vertices.size()) kind = SeqKind::Destination;
        seq.entries.push_back({vertices[i], kind, kind == SeqKind::Task ? int(i) : 0});
    }
    return seq;
}

// exhaustive space-time breadth-first search, independent of SIPP
inline std::optional<int> space_time_oracle(const GridMap& map, const TaskSequence& seq,
                                            const ConstraintSet& constraints,
                                            int horizon) {
    std::vector<SequenceEntry> targets(seq.entries.begin() + 1, seq.entries.end());
    const int n_stages = int(targets.size());
    const Vertex start = seq.entries.front().vertex;
    const Vertex final_vertex = seq.entries.back().vertex;

    auto vertex_blocked = [&](Vertex v, int t) {
        for (const auto& c : constraints)
            if (c.agent_id == seq.agent_id && c.kind == ConstraintKind::Vertex &&
                c.vertex == v && c.time == t)
                return true;
        return false;
    };
    auto edge_blocked = [&](Vertex from, Vertex to, int t) {
        for (const auto& c : constraints)
            if (c.agent_id == seq.agent_id && c.kind == ConstraintKind::Edge &&
                c.from == from && c.vertex == to && c.time == t)
                return true;
        return false;
    };
    int last_constraint = -1;
    for (const auto& c : constraints)
        if (c.agent_id == seq.agent_id) last_constraint = std::max(last_constraint, c.time);
    auto advance = [&](int stage, Vertex v) {
        while (stage < n_stages && targets[std::size_t(stage)].vertex == v) ++stage;
        return stage;
    };

    struct State {
        Vertex v;
        int t;
        int stage;
    };
    if (vertex_blocked(start, 0)) return std::nullopt;
    std::set<std::tuple<int, int, int, int>> seen;
    std::deque<State> queue{{start, 0, advance(0, start)}};
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        if (s.stage == n_stages && s.v == final_vertex) {
            bool clear = true;
            for (int t = s.t; t <= last_constraint; ++t)
                if (vertex_blocked(s.v, t)) clear = false;
            if (clear) return s.t;
        }
        if (s.t >= horizon) continue;
        std::vector<Vertex> moves{s.v};
        for (Vertex step : kCardinalSteps)
            if (map.passable(s.v + step)) moves.push_back(s.v + step);
        for (Vertex w : moves) {
            if (vertex_blocked(w, s.t + 1)) continue;
            if (!(w == s.v) && edge_blocked(s.v, w, s.t + 1)) continue;
            State child{w, s.t + 1, advance(s.stage, w)};
            if (seen.insert({child.v.row, child.v.col, child.t, child.stage}).second)
                queue.push_back(child);
        }
    }
    return std::nullopt;
}

}  // namespace cts::test
