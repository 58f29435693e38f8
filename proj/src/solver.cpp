#include "cts/solver.hpp"

#include <cassert>
#include <chrono>
#include <memory>
#include <queue>

#include "cts/conflicts.hpp"
#include "cts/cost_matrix.hpp"
#include "cts/kbest.hpp"
#include "cts/oracle.hpp"

namespace cts {

std::string to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Solved: return "solved";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Timeout: return "timeout";
    }
    return "?";
}

namespace {

struct CTNode {
    ConstraintSet constraints;
    std::vector<std::shared_ptr<const TimedPath>> paths;
    Cost g = 0;
    int tree_id = 0;
    long long node_id = 0;
};

struct OpenEntry {
    Cost g;
    int tree_id;
    long long node_id;
    std::size_t slot;

    bool operator>(const OpenEntry& other) const {
        if (g != other.g) return g > other.g;
        if (tree_id != other.tree_id) return tree_id > other.tree_id;
        return node_id > other.node_id;
    }
};

class ForestSearch {
public:
    ForestSearch(const Instance& instance, const SolverConfig& config)
        : instance_(instance), config_(config), distances_(instance.map) {}

    SolveResult run() {
        start_ = std::chrono::steady_clock::now();
        instance_.validate();

        SeqMode seq_mode =
            instance_.mode == Mode::CTS ? SeqMode::FixedTerminal : SeqMode::Open;
        std::vector<CostMatrix> matrices;
        for (const auto& agent : instance_.agents)
            matrices.push_back(build_cost_matrix(instance_, agent.id, distances_, seq_mode));
        stream_ = std::make_unique<JointKBestStream>(std::move(matrices));

        SolveResult result;
        auto first = stream_->next();
        if (!first) return finish(result, SolveStatus::Infeasible);
        result.cost_lb = first->cost;

        if (config_.feasibility_gate_budget > 0) {
            auto solvable =
                joint_solution_exists(instance_, config_.feasibility_gate_budget);
            if (solvable.has_value() && !*solvable)
                return finish(result, SolveStatus::Infeasible);
        }

        insert(make_root(*first));
        while (!open_.empty()) {
            if (out_of_time()) return finish(result, SolveStatus::Timeout);
            CTNode popped = pop_best();
            CTNode node = check_new_root(std::move(popped));

            ++stats_.hl_expansions;
            if (config_.record_expansions) stats_.expansion_costs.push_back(node.g);

            auto conflict = detect_first_conflict(node.paths);
            if (!conflict) {
                result.flowtime = node.g;
                result.solution_tree = node.tree_id;
                for (const auto& p : node.paths) result.paths.push_back(*p);
                return finish(result, SolveStatus::Solved);
            }

            auto [c1, c2] = split_conflict(*conflict);
            for (const Constraint& c : {c1, c2}) {
                CTNode child;
                child.constraints = node.constraints;
                child.constraints.push_back(c);
                child.paths = node.paths;
                child.tree_id = node.tree_id;
                const TaskSequence& seq =
                    stream_->emitted(node.tree_id).sequences[std::size_t(c.agent_id - 1)];
                ++stats_.ll_calls;
                auto replanned =
                    low_level_search(instance_.map, seq, child.constraints, distances_);
                if (!replanned) continue;
                const auto& old_path = child.paths[std::size_t(c.agent_id - 1)];
                child.g = node.g - old_path->cost + replanned->cost;
                child.paths[std::size_t(c.agent_id - 1)] =
                    std::make_shared<const TimedPath>(std::move(*replanned));
                insert(std::move(child));
            }
        }
        return finish(result, SolveStatus::Infeasible);
    }

private:
    bool out_of_time() const {
        if (config_.time_limit_seconds <= 0) return false;
        return elapsed() >= config_.time_limit_seconds;
    }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

    void insert(CTNode node) {
        node.node_id = next_node_id_++;
        std::size_t slot = arena_.size();
        open_.push({node.g, node.tree_id, node.node_id, slot});
        arena_.push_back(std::move(node));
    }

    CTNode pop_best() {
        OpenEntry top = open_.top();
        open_.pop();
        return std::move(arena_[top.slot]);
    }

    CTNode make_root(const JointSequence& joint) {
        CTNode root;
        root.tree_id = stream_->emitted_count();
        for (const auto& seq : joint.sequences) {
            ++stats_.ll_calls;
            auto path = low_level_search(instance_.map, seq, root.constraints, distances_);
            assert(path && path->cost == seq.cost);  // unconstrained multi-goal path
            root.g += path->cost;
            root.paths.push_back(std::make_shared<const TimedPath>(std::move(*path)));
        }
        ++stats_.roots_generated;
        return root;
    }

    CTNode check_new_root(CTNode popped) {
        if (config_.omega == kOmegaInfinity) return popped;
        Cost newest = stream_->emitted_cost(stream_->emitted_count());
        if (!needs_new_root(popped.g, newest, config_.omega, open_.empty()))
            return popped;
        auto next_seq = stream_->next();
        if (!next_seq) return popped;
        CTNode root = make_root(*next_seq);
        if (popped.g < root.g) {
            insert(std::move(root));
            return popped;
        }
        insert(std::move(popped));
        return root;
    }

    SolveResult finish(SolveResult result, SolveStatus status) {
        result.status = status;
        stats_.tsp_calls = stream_ ? stream_->tsp_calls() : 0;
        stats_.runtime_seconds = elapsed();
        result.stats = std::move(stats_);
        return result;
    }

    Instance instance_;
    SolverConfig config_;
    DistanceOracle distances_;
    std::unique_ptr<JointKBestStream> stream_;
    std::priority_queue<OpenEntry, std::vector<OpenEntry>, std::greater<>> open_;
    std::vector<CTNode> arena_;
    long long next_node_id_ = 0;
    SolveStats stats_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

SolveResult solve(const Instance& instance, const SolverConfig& config) {
    return ForestSearch(instance, config).run();
}

}  // namespace cts
