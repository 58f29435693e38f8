#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cts/grid_map.hpp"

namespace cts {

// All-pairs shortest-path distances (in timesteps) between key vertices.
struct DistanceTable {
    std::vector<Vertex> keys;
    std::vector<Cost> dist;  // row-major keys.size()^2, kInfCost when disconnected

    Cost at(int i, int j) const { return dist[std::size_t(i) * keys.size() + j]; }
    std::optional<int> key_index(Vertex v) const;
};

// BFS from every key; keys must be passable (throws std::invalid_argument otherwise).
DistanceTable shortest_distances(const GridMap& map, const std::vector<Vertex>& keys);

// Caching per-source BFS fields. Owned by a single solve; not thread-safe.
class DistanceOracle {
public:
    explicit DistanceOracle(const GridMap& map) : map_(&map) {}

    // Distance from source to every cell, -1 where unreachable. Source must be passable.
    const std::vector<std::int32_t>& field_from(Vertex source);

    Cost between(Vertex a, Vertex b);

    const GridMap& map() const { return *map_; }

private:
    const GridMap* map_;
    std::unordered_map<Vertex, std::vector<std::int32_t>, VertexHash> cache_;
};

}  // namespace cts
