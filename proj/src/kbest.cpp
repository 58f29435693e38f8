#include "cts/kbest.hpp"

#include <algorithm>

namespace cts {

Cost best_joint_sequence_cost(const Instance& instance, DistanceOracle& distances,
                              SeqMode mode, long long* tsp_call_counter) {
    long long local = 0;
    long long* counter = tsp_call_counter ? tsp_call_counter : &local;
    Cost total = 0;
    for (const auto& agent : instance.agents) {
        SingleAgentKBest kbest(build_cost_matrix(instance, agent.id, distances, mode),
                               agent.id, counter);
        const TaskSequence* best = kbest.sequence_at(1);
        if (!best) return -1;
        total = saturating_add(total, best->cost);
    }
    return total;
}

SingleAgentKBest::SingleAgentKBest(CostMatrix matrix, int agent_id,
                                   long long* tsp_call_counter)
    : matrix_(std::move(matrix)), agent_id_(agent_id), tsp_calls_(tsp_call_counter) {
    solve_into_frontier({});
}

void SingleAgentKBest::solve_into_frontier(EdgeConstraintSet constraints) {
    if (tsp_calls_) ++*tsp_calls_;
    auto solution = solve_rtsp(matrix_, constraints);
    if (!solution) return;
    frontier_.push({solution->cost, std::move(solution->order), std::move(constraints)});
}

// partition on the popped sequence's edges, in path order
void SingleAgentKBest::partition(const FrontierNode& node) {
    std::vector<DirectedEdge> edges;
    for (std::size_t i = 0; i + 1 < node.order.size(); ++i)
        edges.push_back({node.order[i], node.order[i + 1]});
    std::set<DirectedEdge> already(node.constraints.included.begin(),
                                   node.constraints.included.end());
    EdgeConstraintSet child = node.constraints;
    for (const DirectedEdge& e : edges) {
        if (already.count(e)) continue;  // excluding an included edge: empty subset
        EdgeConstraintSet branch = child;
        branch.excluded.push_back(e);
        solve_into_frontier(std::move(branch));
        child.included.push_back(e);
    }
}

const TaskSequence* SingleAgentKBest::sequence_at(int rank) {
    while (int(found_.size()) < rank) {
        if (pending_) {
            partition(*pending_);
            pending_.reset();
        }
        if (frontier_.empty()) break;
        FrontierNode node = frontier_.top();
        frontier_.pop();
        found_.push_back(realize_sequence(matrix_, node.order, agent_id_, node.cost));
        pending_ = std::move(node);
    }
    if (int(found_.size()) < rank) return nullptr;
    return &found_[std::size_t(rank - 1)];
}

JointKBestStream::JointKBestStream(std::vector<CostMatrix> matrices) {
    const int n = int(matrices.size());
    singles_.reserve(matrices.size());
    for (int i = 0; i < n; ++i)
        singles_.push_back(std::make_unique<SingleAgentKBest>(std::move(matrices[std::size_t(i)]),
                                                              i + 1, &tsp_calls_));
    Cost total = 0;
    bool feasible = true;
    for (auto& single : singles_) {
        const TaskSequence* best = single->sequence_at(1);
        if (!best) {
            feasible = false;
            break;
        }
        total = saturating_add(total, best->cost);
    }
    if (feasible && n > 0) {
        std::vector<int> ranks(std::size_t(n), 1);
        visited_.insert(ranks);
        frontier_.push({total, std::move(ranks)});
    }
}

std::optional<JointSequence> JointKBestStream::next() {
    if (frontier_.empty()) return std::nullopt;
    OpenNode node = frontier_.top();
    frontier_.pop();

    JointSequence joint;
    joint.ranks = node.ranks;
    joint.cost = node.cost;
    for (std::size_t i = 0; i < singles_.size(); ++i)
        joint.sequences.push_back(*singles_[i]->sequence_at(node.ranks[i]));
    emitted_.push_back(joint);

    for (std::size_t l = 0; l < singles_.size(); ++l) {
        std::vector<int> child = node.ranks;
        ++child[l];
        if (!visited_.insert(child).second) continue;
        const TaskSequence* bumped = singles_[l]->sequence_at(child[std::size_t(l)]);
        if (!bumped) continue;  // that agent has no further sequences
        Cost cost = node.cost - singles_[l]->sequence_at(node.ranks[l])->cost + bumped->cost;
        frontier_.push({cost, std::move(child)});
    }
    return joint;
}

std::vector<std::vector<int>> JointKBestStream::frontier_vectors() const {
    auto copy = frontier_;
    std::vector<std::vector<int>> out;
    while (!copy.empty()) {
        out.push_back(copy.top().ranks);
        copy.pop();
    }
    return out;
}

}  // namespace cts
