#include <doctest.h>

#include <algorithm>

#include "cts/adaptations.hpp"
#include "cts/conflicts.hpp"
#include "cts/oracle.hpp"
#include "cts/solver.hpp"
#include "cts/validator.hpp"
#include "test_util.hpp"

using namespace cts;
using cts::test::make_instance;

namespace {

TimedPath path_of(int agent_id, std::vector<Vertex> steps) {
    TimedPath p;
    p.agent_id = agent_id;
    p.steps = std::move(steps);
    p.cost = Cost(p.steps.size()) - 1;
    return p;
}

}  // namespace

TEST_CASE("detect_first_conflict finds swaps, shared vertices, and parked blocks") {
    // swap between t=0 and t=1 reports an edge conflict at t=1
    auto swap = detect_first_conflict(
        {path_of(1, {{0, 0}, {0, 1}}), path_of(2, {{0, 1}, {0, 0}})});
    REQUIRE(swap);
    CHECK(swap->kind == ConstraintKind::Edge);
    CHECK(swap->time == 1);
    CHECK(swap->agent_a == 1);
    CHECK(swap->agent_b == 2);

    auto shared = detect_first_conflict(
        {path_of(1, {{0, 0}, {0, 1}, {1, 1}}), path_of(2, {{2, 1}, {1, 1}, {1, 1}})});
    REQUIRE(shared);
    CHECK(shared->kind == ConstraintKind::Vertex);
    CHECK(shared->time == 2);
    CHECK(shared->vertex == Vertex{1, 1});

    // stay-at-goal padding: a finished agent blocks its final vertex forever
    auto parked = detect_first_conflict(
        {path_of(1, {{0, 0}, {0, 1}, {0, 2}}),
         path_of(2, {{3, 2}, {2, 2}, {2, 2}, {2, 2}, {1, 2}, {0, 2}})});
    REQUIRE(parked);
    CHECK(parked->kind == ConstraintKind::Vertex);
    CHECK(parked->time == 5);
    CHECK(parked->vertex == Vertex{0, 2});

    CHECK_FALSE(detect_first_conflict(
        {path_of(1, {{0, 0}, {0, 1}}), path_of(2, {{2, 0}, {2, 1}})}));
}

TEST_CASE("split_conflict restricts each agent's own traversal") {
    Conflict edge{1, 2, ConstraintKind::Edge, {0, 1}, {0, 0}, 3};
    auto [c1, c2] = split_conflict(edge);
    CHECK(c1.agent_id == 1);
    CHECK(c1.from == Vertex{0, 0});
    CHECK(c1.vertex == Vertex{0, 1});
    CHECK(c2.agent_id == 2);
    CHECK(c2.from == Vertex{0, 1});
    CHECK(c2.vertex == Vertex{0, 0});
    CHECK(c2.time == 3);
}

TEST_CASE("needs_new_root trigger") {
    CHECK_FALSE(needs_new_root(10, 10, 0.0, false));  // equality: strict comparison
    CHECK(needs_new_root(11, 10, 0.0, false));
    CHECK_FALSE(needs_new_root(10, 10, 0.1, false));
    CHECK_FALSE(needs_new_root(11, 10, 0.1, false));
    CHECK(needs_new_root(12, 10, 0.1, false));
    CHECK(needs_new_root(5, 10, 0.0, true));  // empty OPEN always triggers
    CHECK_FALSE(needs_new_root(1000, 10, kOmegaInfinity, false));
    CHECK_FALSE(needs_new_root(1000, 10, kOmegaInfinity, true));
}

TEST_CASE("trivial single agent solve") {
    auto inst = make_instance({".."}, {{{0, 0}, Vertex{0, 1}}}, {}, Mode::CTS);
    auto result = solve(inst, {});
    CHECK(result.status == SolveStatus::Solved);
    CHECK(result.flowtime == 1);
    CHECK(result.stats.roots_generated == 1);
    CHECK(result.cost_lb == 1);
    CHECK(validate_solution(inst, result.paths).empty());
}

TEST_CASE("head-on corridor with a pocket matches the oracle") {
    auto inst = make_instance({"....", ".@.."},
                              {{{0, 0}, Vertex{0, 3}}, {{0, 3}, Vertex{0, 0}}}, {},
                              Mode::CTS);
    auto oracle = brute_force_oracle(inst, 80);
    REQUIRE(oracle.status == OracleStatus::Solved);
    auto result = solve(inst, {});
    REQUIRE(result.status == SolveStatus::Solved);
    CHECK(result.flowtime == oracle.flowtime);
    CHECK(validate_solution(inst, result.paths).empty());
    CHECK(result.cost_lb <= result.flowtime);
}

TEST_CASE("unsolvable corridor returns infeasible in finite time") {
    auto inst = make_instance(
        {".."}, {{{0, 0}, Vertex{0, 1}}, {{0, 1}, Vertex{0, 0}}}, {}, Mode::CTS);
    auto result = solve(inst, {});
    CHECK(result.status == SolveStatus::Infeasible);

    // unreachable task: the sequencing stream is already empty
    auto sealed = make_instance({".@.", ".@.", ".@."}, {{{0, 0}, Vertex{2, 0}}},
                                {{{1, 2}, {1}}}, Mode::CTS);
    auto r2 = solve(sealed, {});
    CHECK(r2.status == SolveStatus::Infeasible);
    CHECK(r2.stats.roots_generated == 0);
}

TEST_CASE("forest search moves to the second joint sequence when needed") {
    // both agents' cheapest sequences park on (1,1); only agent 2 has an
    // alternative ordering, so tree 1 can never be conflict-free
    auto inst = make_instance(
        {"...", "..."},
        {{{0, 0}, std::nullopt}, {{0, 2}, std::nullopt}},
        {{{1, 1}, {1}}, {{1, 1}, {2}}, {{0, 2}, {2}}}, Mode::MG);

    auto oracle = brute_force_oracle(inst, 60);
    REQUIRE(oracle.status == OracleStatus::Solved);

    SolverConfig config;
    config.record_expansions = true;
    auto result = solve(inst, config);
    REQUIRE(result.status == SolveStatus::Solved);
    CHECK(result.flowtime == oracle.flowtime);
    CHECK(result.solution_tree == 2);
    CHECK(result.stats.roots_generated >= 2);
    CHECK(validate_solution(inst, result.paths).empty());
    CHECK(result.cost_lb <= result.flowtime);

    // with omega = 0 the conflict-checked costs are non-decreasing
    CHECK(std::is_sorted(result.stats.expansion_costs.begin(),
                         result.stats.expansion_costs.end()));

    // the sequential baseline is stuck in tree 1 and runs out of budget
    SolverConfig scbs;
    scbs.time_limit_seconds = 0.3;
    auto seq = solve_sequential(inst, scbs);
    CHECK(seq.status == SolveStatus::Timeout);
    CHECK(seq.stats.roots_generated == 1);
}

TEST_CASE("omega infinity builds exactly one tree") {
    auto inst = make_instance({"....", "....", "...."},
                              {{{0, 0}, Vertex{2, 3}}, {{2, 0}, Vertex{0, 3}}},
                              {{{1, 1}, {1}}, {{1, 2}, {2}}}, Mode::CTS);
    SolverConfig config;
    config.omega = kOmegaInfinity;
    auto result = solve(inst, config);
    REQUIRE(result.status == SolveStatus::Solved);
    CHECK(result.stats.roots_generated == 1);
    CHECK(validate_solution(inst, result.paths).empty());

    auto exact = solve(inst, {});
    REQUIRE(exact.status == SolveStatus::Solved);
    CHECK(exact.flowtime <= result.flowtime);
}

TEST_CASE("omega zero equals the oracle on random small instances") {
    SplitMix64 rng(60601);
    int solved = 0, infeasible = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto maybe = cts::test::random_cts_instance(rng, 4, 4, 0.2, 2, 2);
        if (!maybe) continue;
        auto oracle = brute_force_oracle(*maybe, 4 * maybe->map.cell_count());
        SolverConfig config;
        config.record_expansions = true;
        auto result = solve(*maybe, config);
        if (oracle.status == OracleStatus::Solved) {
            REQUIRE(result.status == SolveStatus::Solved);
            CHECK(result.flowtime == oracle.flowtime);
            CHECK(result.cost_lb <= result.flowtime);
            CHECK(validate_solution(*maybe, result.paths).empty());
            CHECK(std::is_sorted(result.stats.expansion_costs.begin(),
                                 result.stats.expansion_costs.end()));
            ++solved;
        } else {
            CHECK(result.status == SolveStatus::Infeasible);
            ++infeasible;
        }
    }
    CHECK(solved >= 20);
}

TEST_CASE("bounded suboptimality holds for positive omega") {
    SplitMix64 rng(70707);
    for (int trial = 0; trial < 20; ++trial) {
        auto maybe = cts::test::random_cts_instance(rng, 4, 4, 0.15, 2, 2);
        if (!maybe) continue;
        auto oracle = brute_force_oracle(*maybe, 4 * maybe->map.cell_count());
        if (oracle.status != OracleStatus::Solved) continue;
        for (double omega : {0.01, 0.1, 0.5}) {
            SolverConfig config;
            config.omega = omega;
            auto result = solve(*maybe, config);
            REQUIRE(result.status == SolveStatus::Solved);
            CHECK(double(result.flowtime) <= (1.0 + omega) * double(oracle.flowtime));
            CHECK(validate_solution(*maybe, result.paths).empty());
        }
    }
}

TEST_CASE("coinciding task, start, and destination vertices") {
    // task 1 sits on agent 1's start, task 2 on its destination, and tasks 3+4
    // share one vertex assigned to agent 2
    auto inst = make_instance(
        {"....", "....", "...."},
        {{{0, 0}, Vertex{0, 3}}, {{2, 0}, Vertex{2, 3}}},
        {{{0, 0}, {1}}, {{0, 3}, {1}}, {{1, 2}, {2}}, {{1, 2}, {2}}}, Mode::CTS);
    auto oracle = brute_force_oracle(inst, 60);
    REQUIRE(oracle.status == OracleStatus::Solved);
    auto result = solve(inst, {});
    REQUIRE(result.status == SolveStatus::Solved);
    CHECK(result.flowtime == oracle.flowtime);
    CHECK(validate_solution(inst, result.paths).empty());

    // agent 2 completes both co-located tasks with one arrival
    const TimedPath& p2 = result.paths[1];
    int visits_at_shared = 0;
    for (const auto& v : p2.visits)
        if (v.vertex == Vertex{1, 2}) ++visits_at_shared;
    CHECK(visits_at_shared == 2);

    // MG flavor: a single task on the start parks immediately
    auto mg = make_instance({"..."}, {{{0, 1}, std::nullopt}}, {{{0, 1}, {1}}}, Mode::MG);
    auto rm = solve(mg, {});
    REQUIRE(rm.status == SolveStatus::Solved);
    CHECK(rm.flowtime == 0);
    CHECK(validate_solution(mg, rm.paths).empty());
}

TEST_CASE("timeout is reported") {
    auto inst = make_instance(
        {"...", "...", "..."},
        {{{0, 0}, Vertex{2, 2}}, {{0, 2}, Vertex{2, 0}}, {{1, 1}, Vertex{0, 1}}},
        {{{2, 1}, {1, 2, 3}}, {{0, 1}, {1, 2}}}, Mode::CTS);
    SolverConfig config;
    config.time_limit_seconds = 1e-9;
    auto result = solve(inst, config);
    CHECK(result.status == SolveStatus::Timeout);
}
