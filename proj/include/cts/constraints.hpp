#pragma once

#include <unordered_map>
#include <vector>

#include "cts/geometry.hpp"

namespace cts {

// Times beyond any constraint horizon; intervals ending here are open-ended.
inline constexpr int kInfTime = 1 << 29;

enum class ConstraintKind { Vertex, Edge };

// Vertex: agent may not occupy `vertex` at `time`.
// Edge: agent may not move from `from` into `vertex` arriving at `time`.
struct Constraint {
    int agent_id = 0;  // 1-based
    ConstraintKind kind = ConstraintKind::Vertex;
    Vertex vertex;
    Vertex from;  // edge constraints only
    int time = 0;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

using ConstraintSet = std::vector<Constraint>;

struct Interval {
    int start = 0;
    int end = kInfTime;  // inclusive
};

struct EdgeKeyHash {
    std::size_t operator()(const std::pair<Vertex, Vertex>& e) const {
        VertexHash h;
        return h(e.first) * 0x9E3779B97F4A7C15ULL ^ h(e.second);
    }
};

// One agent's constraints compiled into per-vertex free intervals plus
// per-edge forbidden arrival times.
struct SafeIntervalIndex {
    std::unordered_map<Vertex, std::vector<Interval>, VertexHash> vertex_intervals;
    std::unordered_map<std::pair<Vertex, Vertex>, std::vector<int>, EdgeKeyHash>
        edge_forbidden;

    const std::vector<Interval>& intervals_at(Vertex v) const;
    bool edge_forbidden_at(Vertex from, Vertex to, int arrival) const;
};

SafeIntervalIndex build_safe_intervals(const ConstraintSet& constraints, int agent_id);

}  // namespace cts
