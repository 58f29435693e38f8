#pragma once

#include <memory>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "cts/rtsp.hpp"

namespace cts {

// cost(T_1*): the sum of every agent's best sequence cost, or -1 when some
// agent has no feasible sequence.
Cost best_joint_sequence_cost(const Instance& instance, DistanceOracle& distances,
                              SeqMode mode, long long* tsp_call_counter = nullptr);

// Lazy single-agent K-best task sequencing over one cost matrix, using the
// partition method: popping the best frontier node fixes a growing prefix of
// its edges and forbids the next one, which splits the remaining solution
// space into disjoint subsets. Materialized ranks are cached.
class SingleAgentKBest {
public:
    SingleAgentKBest(CostMatrix matrix, int agent_id, long long* tsp_call_counter);

    // 1-based rank; nullptr once fewer than `rank` sequences exist.
    const TaskSequence* sequence_at(int rank);

    int known() const { return int(found_.size()); }
    const CostMatrix& matrix() const { return matrix_; }

private:
    struct FrontierNode {
        Cost cost;
        std::vector<int> order;
        EdgeConstraintSet constraints;

        bool operator>(const FrontierNode& other) const {
            if (cost != other.cost) return cost > other.cost;
            return order > other.order;
        }
    };

    void solve_into_frontier(EdgeConstraintSet constraints);
    void partition(const FrontierNode& node);

    CostMatrix matrix_;
    int agent_id_;
    long long* tsp_calls_;
    std::vector<TaskSequence> found_;
    std::optional<FrontierNode> pending_;  // popped, not yet partitioned
    std::priority_queue<FrontierNode, std::vector<FrontierNode>, std::greater<>> frontier_;
};

// Best-first enumeration of joint task sequences: each emitted priority vector
// spawns one child per agent with that agent's rank bumped by one. A visited
// set suppresses the duplicate vectors the expansion rule can reach twice.
class JointKBestStream {
public:
    explicit JointKBestStream(std::vector<CostMatrix> matrices);

    JointKBestStream(const JointKBestStream&) = delete;
    JointKBestStream& operator=(const JointKBestStream&) = delete;

    std::optional<JointSequence> next();

    int emitted_count() const { return int(emitted_.size()); }
    const JointSequence& emitted(int k) const { return emitted_[std::size_t(k - 1)]; }
    Cost emitted_cost(int k) const { return emitted_[std::size_t(k - 1)].cost; }
    long long tsp_calls() const { return tsp_calls_; }

    // frontier priority vectors, for tests
    std::vector<std::vector<int>> frontier_vectors() const;

private:
    struct OpenNode {
        Cost cost;
        std::vector<int> ranks;

        bool operator>(const OpenNode& other) const {
            if (cost != other.cost) return cost > other.cost;
            return ranks > other.ranks;
        }
    };

    long long tsp_calls_ = 0;
    std::vector<std::unique_ptr<SingleAgentKBest>> singles_;
    std::priority_queue<OpenNode, std::vector<OpenNode>, std::greater<>> frontier_;
    std::set<std::vector<int>> visited_;
    std::vector<JointSequence> emitted_;
};

}  // namespace cts
