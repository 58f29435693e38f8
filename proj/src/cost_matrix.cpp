#include "cts/cost_matrix.hpp"

#include <stdexcept>

namespace cts {

namespace {

std::vector<MatrixNode> matrix_nodes(const Instance& instance, int agent_id, SeqMode mode) {
    const AgentSpec& agent = instance.agent(agent_id);
    std::vector<MatrixNode> nodes;
    nodes.push_back({agent.start, SeqKind::Start, 0, false});
    for (int task_id : instance.tasks_of(agent_id))
        nodes.push_back({instance.task(task_id).location, SeqKind::Task, task_id, false});
    if (mode == SeqMode::FixedTerminal) {
        if (!agent.destination)
            throw std::invalid_argument("build_cost_matrix: agent " +
                                        std::to_string(agent_id) +
                                        " has no destination for fixed-terminal mode");
        nodes.push_back({*agent.destination, SeqKind::Destination, 0, false});
    } else {
        nodes.push_back({Vertex{-1, -1}, SeqKind::Destination, 0, true});
    }
    return nodes;
}

template <typename DistFn>
CostMatrix fill_matrix(std::vector<MatrixNode> nodes, DistFn&& dist) {
    CostMatrix m;
    m.nodes = std::move(nodes);
    int n = m.size();
    m.cost.assign(std::size_t(n) * std::size_t(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const MatrixNode& a = m.nodes[std::size_t(i)];
            const MatrixNode& b = m.nodes[std::size_t(j)];
            Cost c;
            if (i == j)
                c = 0;
            else if (b.is_virtual)
                c = 0;  // any node may finish the tour
            else if (a.is_virtual)
                c = kInfCost;
            else
                c = dist(a.vertex, b.vertex);
            m.at(i, j) = c;
        }
    }
    return m;
}

}  // namespace

CostMatrix build_cost_matrix(const Instance& instance, int agent_id,
                             DistanceOracle& distances, SeqMode mode) {
    return fill_matrix(matrix_nodes(instance, agent_id, mode),
                       [&](Vertex a, Vertex b) { return distances.between(a, b); });
}

CostMatrix build_cost_matrix(const Instance& instance, int agent_id,
                             const DistanceTable& distances, SeqMode mode) {
    return fill_matrix(matrix_nodes(instance, agent_id, mode), [&](Vertex a, Vertex b) {
        auto i = distances.key_index(a);
        auto j = distances.key_index(b);
        if (!i || !j)
            throw std::invalid_argument("build_cost_matrix: vertex missing from table");
        return distances.at(*i, *j);
    });
}

}  // namespace cts
