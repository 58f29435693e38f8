#pragma once

#include <optional>
#include <vector>

#include "cts/cost_matrix.hpp"

namespace cts {

struct DirectedEdge {
    int from = 0;
    int to = 0;

    friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
    friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

// Included edges must be used, excluded edges must not. Included edges have to
// form vertex-disjoint simple chains; anything else is a caller bug, not an
// infeasible subproblem.
struct EdgeConstraintSet {
    std::vector<DirectedEdge> included;
    std::vector<DirectedEdge> excluded;

    // Throws std::invalid_argument on overlap, branching or an included cycle.
    void validate(int n_nodes) const;
};

struct RtspSolution {
    std::vector<int> order;  // node indices, start first, terminal last
    Cost cost = 0;
};

// Exact minimum-cost Hamiltonian path from the start node to the terminal node
// honoring the constraints. Subset DP with each maximal included chain
// contracted to a single macro node.
std::optional<RtspSolution> solve_rtsp(const CostMatrix& matrix,
                                       const EdgeConstraintSet& constraints);

// Expands a node order into the agent's TaskSequence (virtual terminals dropped).
TaskSequence realize_sequence(const CostMatrix& matrix, const std::vector<int>& order,
                              int agent_id, Cost cost);

}  // namespace cts
