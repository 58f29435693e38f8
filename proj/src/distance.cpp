#include "cts/distance.hpp"

#include <deque>
#include <stdexcept>

namespace cts {

namespace {

std::vector<std::int32_t> bfs_field(const GridMap& map, Vertex source) {
    std::vector<std::int32_t> dist(std::size_t(map.cell_count()), -1);
    std::deque<int> queue;
    dist[std::size_t(map.cell_index(source))] = 0;
    queue.push_back(map.cell_index(source));
    while (!queue.empty()) {
        int idx = queue.front();
        queue.pop_front();
        Vertex v = map.vertex_at(idx);
        for (Vertex step : kCardinalSteps) {
            Vertex w = v + step;
            if (!map.passable(w)) continue;
            int widx = map.cell_index(w);
            if (dist[std::size_t(widx)] >= 0) continue;
            dist[std::size_t(widx)] = dist[std::size_t(idx)] + 1;
            queue.push_back(widx);
        }
    }
    return dist;
}

}  // namespace

std::optional<int> DistanceTable::key_index(Vertex v) const {
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (keys[i] == v) return int(i);
    return std::nullopt;
}

DistanceTable shortest_distances(const GridMap& map, const std::vector<Vertex>& keys) {
    for (const Vertex& k : keys)
        if (!map.passable(k))
            throw std::invalid_argument("shortest_distances: key (" +
                                        std::to_string(k.row) + "," +
                                        std::to_string(k.col) + ") not passable");
    DistanceTable table;
    table.keys = keys;
    table.dist.assign(keys.size() * keys.size(), kInfCost);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        auto field = bfs_field(map, keys[i]);
        for (std::size_t j = 0; j < keys.size(); ++j) {
            std::int32_t d = field[std::size_t(map.cell_index(keys[j]))];
            table.dist[i * keys.size() + j] = d < 0 ? kInfCost : Cost(d);
        }
    }
    return table;
}

const std::vector<std::int32_t>& DistanceOracle::field_from(Vertex source) {
    auto it = cache_.find(source);
    if (it != cache_.end()) return it->second;
    if (!map_->passable(source))
        throw std::invalid_argument("DistanceOracle: source not passable");
    return cache_.emplace(source, bfs_field(*map_, source)).first->second;
}

Cost DistanceOracle::between(Vertex a, Vertex b) {
    std::int32_t d = field_from(a)[std::size_t(map_->cell_index(b))];
    return d < 0 ? kInfCost : Cost(d);
}

}  // namespace cts
