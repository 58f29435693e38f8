#include "cts/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cts/distance.hpp"

namespace cts {

namespace {

// Per-agent state fits 21 bits (12 cell, 8 visited tasks, 1 parked), three agents
// in a uint64 key.
constexpr int kMaxOracleAgents = 3;
constexpr int kMaxOracleCells = 4096;
constexpr int kMaxTasksPerAgent = 8;

struct JointModel {
    const Instance* instance;
    int n;
    std::vector<int> full_mask;                      // per agent
    std::vector<std::vector<int>> task_bit_at_cell;  // [agent][cell] -> OR-able bits
    std::vector<std::vector<int>> task_cell;         // [agent][bit] -> cell
    std::vector<int> park_cell;                      // CTS: destination; MG: -1
    std::vector<std::vector<char>> parkable;         // MG: [agent][cell]
    std::vector<int> start_cell;
    std::vector<std::array<int, 5>> moves;           // [cell] -> neighbors + self, -1 end

    explicit JointModel(const Instance& inst) : instance(&inst), n(inst.num_agents()) {
        const GridMap& map = inst.map;
        int cells = map.cell_count();
        task_bit_at_cell.assign(std::size_t(n), std::vector<int>(std::size_t(cells), 0));
        task_cell.assign(std::size_t(n), {});
        parkable.assign(std::size_t(n), std::vector<char>(std::size_t(cells), 0));
        full_mask.assign(std::size_t(n), 0);
        park_cell.assign(std::size_t(n), -1);
        start_cell.assign(std::size_t(n), 0);
        for (int i = 0; i < n; ++i) {
            const AgentSpec& agent = inst.agents[std::size_t(i)];
            start_cell[std::size_t(i)] = map.cell_index(agent.start);
            auto task_ids = inst.tasks_of(agent.id);
            if (int(task_ids.size()) > kMaxTasksPerAgent)
                throw std::invalid_argument("oracle: too many tasks per agent");
            for (int b = 0; b < int(task_ids.size()); ++b) {
                int cell = map.cell_index(inst.task(task_ids[std::size_t(b)]).location);
                task_bit_at_cell[std::size_t(i)][std::size_t(cell)] |= 1 << b;
                task_cell[std::size_t(i)].push_back(cell);
                full_mask[std::size_t(i)] |= 1 << b;
                if (inst.mode == Mode::MG) parkable[std::size_t(i)][std::size_t(cell)] = 1;
            }
            if (inst.mode == Mode::CTS)
                park_cell[std::size_t(i)] = map.cell_index(*agent.destination);
            else if (task_ids.empty())
                parkable[std::size_t(i)][std::size_t(start_cell[std::size_t(i)])] = 1;
        }
        moves.assign(std::size_t(cells), {-1, -1, -1, -1, -1});
        for (int idx = 0; idx < cells; ++idx) {
            Vertex v = map.vertex_at(idx);
            if (!map.passable(v)) continue;
            int slot = 0;
            moves[std::size_t(idx)][std::size_t(slot++)] = idx;  // wait
            for (Vertex step : kCardinalSteps) {
                Vertex w = v + step;
                if (map.passable(w))
                    moves[std::size_t(idx)][std::size_t(slot++)] = map.cell_index(w);
            }
        }
    }

    bool can_park(int agent, int cell, int visited) const {
        if (visited != full_mask[std::size_t(agent)]) return false;
        if (instance->mode == Mode::CTS) return cell == park_cell[std::size_t(agent)];
        return parkable[std::size_t(agent)][std::size_t(cell)] != 0;
    }
};

struct JointState {
    std::array<int, kMaxOracleAgents> cell{};
    std::array<int, kMaxOracleAgents> visited{};
    std::array<bool, kMaxOracleAgents> parked{};
};

std::uint64_t encode(const JointState& s, int n) {
    std::uint64_t key = 0;
    for (int i = 0; i < n; ++i) {
        std::uint64_t part = std::uint64_t(s.cell[std::size_t(i)]) |
                             (std::uint64_t(s.visited[std::size_t(i)]) << 12) |
                             (std::uint64_t(s.parked[std::size_t(i)] ? 1 : 0) << 20);
        key |= part << (21 * i);
    }
    return key;
}

bool encodable(const Instance& instance) {
    return instance.num_agents() <= kMaxOracleAgents &&
           instance.map.cell_count() <= kMaxOracleCells;
}

// every park refinement of a state, including the state itself
template <typename Emit>
void park_variants(const JointModel& model, const JointState& moved, Emit&& emit) {
    std::array<int, kMaxOracleAgents> eligible{};
    int m = 0;
    for (int i = 0; i < model.n; ++i)
        if (!moved.parked[std::size_t(i)] &&
            model.can_park(i, moved.cell[std::size_t(i)], moved.visited[std::size_t(i)]))
            eligible[std::size_t(m++)] = i;
    const int subsets = 1 << m;
    for (int mask = 0; mask < subsets; ++mask) {
        JointState v = moved;
        for (int b = 0; b < m; ++b)
            if (mask & (1 << b)) v.parked[std::size_t(eligible[std::size_t(b)])] = true;
        emit(v);
    }
}

// enumerate joint moves with incremental conflict pruning, then every park
// refinement of each conflict-free joint move
template <typename Emit>
void expand(const JointModel& model, const JointState& s, Emit&& emit) {
    const int n = model.n;
    std::array<int, kMaxOracleAgents> pick{};

    auto rec = [&](auto&& self, int agent) -> void {
        if (agent == n) {
            JointState child = s;
            for (int i = 0; i < n; ++i) {
                child.cell[std::size_t(i)] = pick[std::size_t(i)];
                child.visited[std::size_t(i)] |=
                    model.task_bit_at_cell[std::size_t(i)][std::size_t(pick[std::size_t(i)])];
            }
            park_variants(model, child, emit);
            return;
        }
        auto conflicts_earlier = [&](int agent_idx, int cell) {
            for (int j = 0; j < agent_idx; ++j) {
                if (pick[std::size_t(j)] == cell) return true;
                if (pick[std::size_t(j)] == s.cell[std::size_t(agent_idx)] &&
                    cell == s.cell[std::size_t(j)])
                    return true;  // swap
            }
            return false;
        };
        if (s.parked[std::size_t(agent)]) {
            int cell = s.cell[std::size_t(agent)];
            if (conflicts_earlier(agent, cell)) return;
            pick[std::size_t(agent)] = cell;
            self(self, agent + 1);
            return;
        }
        for (int cell : model.moves[std::size_t(s.cell[std::size_t(agent)])]) {
            if (cell < 0) break;
            if (conflicts_earlier(agent, cell)) continue;
            pick[std::size_t(agent)] = cell;
            self(self, agent + 1);
        }
    };
    rec(rec, 0);
}

JointState initial_state(const JointModel& model) {
    JointState s{};
    for (int i = 0; i < model.n; ++i) {
        s.cell[std::size_t(i)] = model.start_cell[std::size_t(i)];
        s.visited[std::size_t(i)] =
            model.task_bit_at_cell[std::size_t(i)][std::size_t(s.cell[std::size_t(i)])];
        s.parked[std::size_t(i)] = false;
    }
    return s;
}

bool all_parked(const JointState& s, int n) {
    for (int i = 0; i < n; ++i)
        if (!s.parked[std::size_t(i)]) return false;
    return true;
}

int active_count(const JointState& s, int n) {
    int c = 0;
    for (int i = 0; i < n; ++i)
        if (!s.parked[std::size_t(i)]) ++c;
    return c;
}

// admissible per-agent completion-time bound: it must still reach every
// unvisited task and its park spot
struct Heuristic {
    const JointModel* model;
    DistanceOracle distances;
    std::vector<const std::vector<std::int32_t>*> task_field;  // flat per (agent, bit)
    std::vector<std::size_t> task_field_offset;
    std::vector<const std::vector<std::int32_t>*> park_field;  // CTS only, per agent

    explicit Heuristic(const JointModel& m)
        : model(&m), distances(m.instance->map) {
        const Instance& inst = *m.instance;
        for (int i = 0; i < m.n; ++i) {
            task_field_offset.push_back(task_field.size());
            for (int cell : m.task_cell[std::size_t(i)])
                task_field.push_back(&distances.field_from(inst.map.vertex_at(cell)));
            if (inst.mode == Mode::CTS)
                park_field.push_back(
                    &distances.field_from(inst.map.vertex_at(m.park_cell[std::size_t(i)])));
            else if (m.task_cell[std::size_t(i)].empty())
                park_field.push_back(&distances.field_from(inst.agents[std::size_t(i)].start));
            else
                park_field.push_back(nullptr);  // MG parks on some task
        }
        task_field_offset.push_back(task_field.size());
    }

    Cost agent_bound(int i, const JointState& s) const {
        if (s.parked[std::size_t(i)]) return 0;
        const int cell = s.cell[std::size_t(i)];
        Cost h = 0;
        unsigned todo =
            unsigned(model->full_mask[std::size_t(i)] & ~s.visited[std::size_t(i)]);
        for (int b = 0; todo; ++b, todo >>= 1) {
            if (!(todo & 1u)) continue;
            std::int32_t d =
                (*task_field[task_field_offset[std::size_t(i)] + std::size_t(b)])[std::size_t(cell)];
            if (d < 0) return kInfCost;
            h = std::max<Cost>(h, d);
        }
        if (park_field[std::size_t(i)]) {
            std::int32_t d = (*park_field[std::size_t(i)])[std::size_t(cell)];
            if (d < 0) return kInfCost;
            h = std::max<Cost>(h, d);
        } else if (s.visited[std::size_t(i)] == model->full_mask[std::size_t(i)]) {
            // MG with everything visited: distance to the nearest task vertex
            Cost nearest = kInfCost;
            for (std::size_t f = task_field_offset[std::size_t(i)];
                 f < task_field_offset[std::size_t(i) + 1]; ++f) {
                std::int32_t d = (*task_field[f])[std::size_t(cell)];
                if (d >= 0) nearest = std::min<Cost>(nearest, d);
            }
            h = std::max(h, nearest);
        }
        return h;
    }

    Cost operator()(const JointState& s) const {
        Cost h = 0;
        for (int i = 0; i < model->n; ++i) {
            Cost b = agent_bound(i, s);
            if (b >= kInfCost) return kInfCost;
            h += b;
        }
        return h;
    }
};

}  // namespace

OracleResult brute_force_oracle(const Instance& instance, int horizon) {
    instance.validate();
    if (!encodable(instance))
        throw std::invalid_argument(
            "brute_force_oracle: instance too large (max 3 agents, 4096 cells)");
    JointModel model(instance);
    Heuristic heuristic(model);
    const int n = model.n;
    const Cost flowtime_cap = Cost(horizon) * n;

    struct Entry {
        Cost f;
        Cost g;
        JointState state;
        bool operator>(const Entry& other) const {
            if (f != other.f) return f > other.f;
            return g < other.g;
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    std::unordered_map<std::uint64_t, Cost> best;

    auto push = [&](const JointState& s, Cost g) {
        Cost h = heuristic(s);
        if (h >= kInfCost) return;
        auto key = encode(s, n);
        auto it = best.find(key);
        if (it != best.end() && it->second <= g) return;
        best[key] = g;
        open.push({g + h, g, s});
    };
    park_variants(model, initial_state(model), [&](const JointState& s) { push(s, 0); });

    while (!open.empty()) {
        Entry top = open.top();
        open.pop();
        auto key = encode(top.state, n);
        if (best.at(key) < top.g) continue;
        if (all_parked(top.state, n)) return {OracleStatus::Solved, top.g};
        if (top.g > flowtime_cap) return {OracleStatus::HorizonExceeded, -1};
        const Cost step_cost = active_count(top.state, n);
        expand(model, top.state,
               [&](const JointState& child) { push(child, top.g + step_cost); });
    }
    return {OracleStatus::Infeasible, -1};
}

std::optional<bool> joint_solution_exists(const Instance& instance,
                                          std::size_t state_budget) {
    if (!encodable(instance)) return std::nullopt;
    for (int i = 1; i <= instance.num_agents(); ++i)
        if (int(instance.tasks_of(i).size()) > kMaxTasksPerAgent) return std::nullopt;
    JointModel model(instance);
    const int n = model.n;

    // greedy best-first on remaining work; exhaustion proves unsolvability
    auto priority = [&](const JointState& s) {
        int h = 0;
        for (int i = 0; i < n; ++i) {
            if (s.parked[std::size_t(i)]) continue;
            h += 1 + std::popcount(std::uint32_t(model.full_mask[std::size_t(i)] &
                                                 ~s.visited[std::size_t(i)]));
        }
        return h;
    };

    struct Entry {
        int h;
        JointState state;
        bool operator>(const Entry& other) const { return h > other.h; }
    };
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    std::unordered_set<std::uint64_t> seen;
    std::size_t visited_states = 0;

    auto push = [&](const JointState& s) {
        if (seen.insert(encode(s, n)).second) open.push({priority(s), s});
    };
    park_variants(model, initial_state(model), [&](const JointState& s) { push(s); });

    while (!open.empty()) {
        Entry top = open.top();
        open.pop();
        if (all_parked(top.state, n)) return true;
        if (++visited_states > state_budget) return std::nullopt;
        expand(model, top.state, [&](const JointState& child) { push(child); });
    }
    return false;
}

}  // namespace cts
