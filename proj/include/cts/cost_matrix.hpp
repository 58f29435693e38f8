#pragma once

#include <vector>

#include "cts/distance.hpp"
#include "cts/instance.hpp"
#include "cts/sequence.hpp"

namespace cts {

// FixedTerminal: the last node is the agent's destination.
// Open: the last node is a virtual terminal reachable at cost 0 from everywhere
// (and inescapable), so the tour may end on any task.
enum class SeqMode { FixedTerminal, Open };

struct MatrixNode {
    Vertex vertex;
    SeqKind kind = SeqKind::Task;
    int task_id = 0;
    bool is_virtual = false;
};

struct CostMatrix {
    std::vector<MatrixNode> nodes;  // [0] start, middle tasks, back terminal
    std::vector<Cost> cost;        // row-major nodes.size()^2

    int size() const { return int(nodes.size()); }
    int start_index() const { return 0; }
    int terminal_index() const { return size() - 1; }
    Cost at(int i, int j) const { return cost[std::size_t(i) * nodes.size() + j]; }
    Cost& at(int i, int j) { return cost[std::size_t(i) * nodes.size() + j]; }
};

CostMatrix build_cost_matrix(const Instance& instance, int agent_id,
                             DistanceOracle& distances, SeqMode mode);

// Same construction over a precomputed table; every required vertex must be a key.
CostMatrix build_cost_matrix(const Instance& instance, int agent_id,
                             const DistanceTable& distances, SeqMode mode);

}  // namespace cts
