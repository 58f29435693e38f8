#include "cts/low_level.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace cts {

namespace {

struct SearchState {
    int cell = 0;
    int interval = 0;
    int stage = 0;

    friend bool operator==(const SearchState&, const SearchState&) = default;
};

std::uint64_t pack(const SearchState& s) {
    return (std::uint64_t(std::uint32_t(s.cell)) << 32) |
           (std::uint64_t(std::uint16_t(s.interval)) << 16) |
           std::uint64_t(std::uint16_t(s.stage));
}

struct QueueEntry {
    Cost f = 0;
    Cost g = 0;
    std::uint64_t key = 0;

    bool operator>(const QueueEntry& other) const {
        if (f != other.f) return f > other.f;
        if (g != other.g) return g < other.g;  // prefer deeper states on ties
        return key > other.key;
    }
};

}  // namespace

std::optional<TimedPath> low_level_search(const GridMap& map, const TaskSequence& sequence,
                                          const ConstraintSet& constraints,
                                          DistanceOracle& distances, Cost cost_cap) {
    if (sequence.entries.empty())
        throw std::invalid_argument("low_level_search: empty sequence");
    const Vertex start = sequence.entries.front().vertex;
    if (!map.passable(start))
        throw std::invalid_argument("low_level_search: start not passable");

    std::vector<SequenceEntry> targets(sequence.entries.begin() + 1, sequence.entries.end());
    for (const auto& t : targets)
        if (!map.passable(t.vertex))
            throw std::invalid_argument("low_level_search: target not passable");
    const int n_stages = int(targets.size());
    const Vertex final_vertex = sequence.entries.back().vertex;

    const SafeIntervalIndex index = build_safe_intervals(constraints, sequence.agent_id);

    // heuristic: distance to the next pending target plus the remaining legs
    std::vector<Cost> suffix(std::size_t(n_stages) + 1, 0);
    for (int s = n_stages - 2; s >= 0; --s)
        suffix[std::size_t(s)] = saturating_add(
            suffix[std::size_t(s) + 1],
            distances.between(targets[std::size_t(s)].vertex,
                              targets[std::size_t(s) + 1].vertex));
    auto heuristic = [&](Vertex v, int stage) -> Cost {
        if (stage >= n_stages)
            return v == final_vertex ? 0 : distances.between(v, final_vertex);
        return saturating_add(distances.between(v, targets[std::size_t(stage)].vertex),
                              suffix[std::size_t(stage)]);
    };

    auto advance_stage = [&](int stage, Vertex v) {
        while (stage < n_stages && targets[std::size_t(stage)].vertex == v) ++stage;
        return stage;
    };

    const auto& start_intervals = index.intervals_at(start);
    if (start_intervals.front().start != 0) return std::nullopt;  // start blocked at t=0

    struct Record {
        Cost g = kInfCost;
        std::uint64_t parent = ~0ULL;
        bool closed = false;
    };
    std::unordered_map<std::uint64_t, Record> records;
    std::unordered_map<std::uint64_t, SearchState> states;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> open;

    auto push = [&](SearchState s, Cost g, std::uint64_t parent) {
        Cost h = heuristic(map.vertex_at(s.cell), s.stage);
        if (h >= kInfCost) return;
        if (cost_cap < kInfCost && g + h > cost_cap) return;
        std::uint64_t key = pack(s);
        auto& rec = records[key];
        if (g >= rec.g) return;
        rec.g = g;
        rec.parent = parent;
        rec.closed = false;
        states[key] = s;
        open.push({g + h, g, key});
    };

    SearchState init{map.cell_index(start), 0, advance_stage(0, start)};
    push(init, 0, ~0ULL);

    while (!open.empty()) {
        QueueEntry top = open.top();
        open.pop();
        auto& rec = records[top.key];
        if (rec.closed || top.g != rec.g) continue;
        rec.closed = true;
        SearchState s = states[top.key];
        Vertex v = map.vertex_at(s.cell);
        const auto& intervals = index.intervals_at(v);
        const Interval iv = intervals[std::size_t(s.interval)];

        if (s.stage == n_stages && v == final_vertex && iv.end == kInfTime) {
            // reconstruct: walk parents, then fill waits between hops
            std::vector<std::pair<Vertex, Cost>> hops;  // (vertex, arrival)
            std::uint64_t key = top.key;
            Cost g = top.g;
            while (key != ~0ULL) {
                hops.push_back({map.vertex_at(states[key].cell), g});
                key = records[key].parent;
                if (key != ~0ULL) g = records[key].g;
            }
            std::reverse(hops.begin(), hops.end());
            TimedPath path;
            path.agent_id = sequence.agent_id;
            path.cost = top.g;
            path.steps.reserve(std::size_t(top.g) + 1);
            for (std::size_t i = 0; i < hops.size(); ++i) {
                Cost until = (i + 1 < hops.size()) ? hops[i + 1].second - 1 : hops[i].second;
                for (Cost t = hops[i].second; t <= until; ++t)
                    path.steps.push_back(hops[i].first);
            }
            int stage = 0;
            for (int t = 0; t < int(path.steps.size()); ++t) {
                while (stage < n_stages && targets[std::size_t(stage)].vertex ==
                                               path.steps[std::size_t(t)]) {
                    const auto& entry = targets[std::size_t(stage)];
                    path.visits.push_back({entry.vertex, entry.kind, entry.task_id, t});
                    ++stage;
                }
            }
            return path;
        }

        for (Vertex step : kCardinalSteps) {
            Vertex w = v + step;
            if (!map.passable(w)) continue;
            const auto& w_intervals = index.intervals_at(w);
            const Cost depart_latest = iv.end;  // may still be at v through iv.end
            for (int j = 0; j < int(w_intervals.size()); ++j) {
                const Interval jw = w_intervals[std::size_t(j)];
                Cost lo = std::max<Cost>(jw.start, top.g + 1);
                Cost hi = std::min<Cost>(jw.end, depart_latest >= kInfTime
                                                     ? kInfTime
                                                     : depart_latest + 1);
                if (lo > hi) continue;
                Cost t = lo;
                while (t <= hi && index.edge_forbidden_at(v, w, int(t))) ++t;
                if (t > hi) continue;
                SearchState child{map.cell_index(w), j, advance_stage(s.stage, w)};
                push(child, t, top.key);
            }
        }
    }
    return std::nullopt;
}

}  // namespace cts
