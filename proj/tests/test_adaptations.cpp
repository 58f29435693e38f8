#include <doctest.h>

#include "cts/adaptations.hpp"
#include "cts/oracle.hpp"
#include "cts/validator.hpp"
#include "test_util.hpp"

using namespace cts;
using cts::test::make_instance;

TEST_CASE("mg-a visits a line of tasks nearest-first and parks on the last") {
    auto inst = make_instance({"....."}, {{{0, 0}, std::nullopt}},
                              {{{0, 2}, {1}}, {{0, 4}, {1}}, {{0, 1}, {1}}}, Mode::MG);
    auto result = solve_mg_a(inst, {});
    REQUIRE(result.status == SolveStatus::Solved);
    CHECK(result.flowtime == 4);  // sweep right, ending on the farthest task
    REQUIRE(result.paths.size() == 1);
    CHECK(result.paths[0].steps.back() == Vertex{0, 4});
    CHECK(validate_solution(inst, result.paths).empty());
}

TEST_CASE("mg-a zero-task agent stays at its start") {
    auto inst = make_instance({"..."}, {{{0, 1}, std::nullopt}}, {}, Mode::MG);
    auto result = solve_mg_a(inst, {});
    REQUIRE(result.status == SolveStatus::Solved);
    CHECK(result.flowtime == 0);
    CHECK(result.paths[0].steps == std::vector<Vertex>{{0, 1}});
}

TEST_CASE("mg-a rejects CTS instances") {
    auto inst = make_instance({".."}, {{{0, 0}, Vertex{0, 1}}}, {}, Mode::CTS);
    CHECK_THROWS_AS(solve_mg_a(inst, {}), std::invalid_argument);
}

TEST_CASE("mg-a with omega zero matches the MG oracle") {
    SplitMix64 rng(5150);
    int solved = 0;
    for (int trial = 0; trial < 25; ++trial) {
        auto maybe = cts::test::random_mg_instance(rng, 4, 4, 0.2, 2, 2);
        if (!maybe) continue;
        auto oracle = brute_force_oracle(*maybe, 4 * maybe->map.cell_count());
        auto result = solve_mg_a(*maybe, {});
        if (oracle.status == OracleStatus::Solved) {
            REQUIRE(result.status == SolveStatus::Solved);
            CHECK(result.flowtime == oracle.flowtime);
            CHECK(validate_solution(*maybe, result.paths).empty());
            ++solved;
        } else {
            CHECK(result.status == SolveStatus::Infeasible);
        }
    }
    CHECK(solved >= 12);
}

TEST_CASE("mg-b fixes the open-optimal final task as destination") {
    auto inst = make_instance({"....."}, {{{0, 0}, std::nullopt}},
                              {{{0, 2}, {1}}, {{0, 4}, {1}}}, Mode::MG);
    auto a = solve_mg_a(inst, {});
    auto b = solve_mg_b(inst, {});
    REQUIRE(a.status == SolveStatus::Solved);
    REQUIRE(b.status == SolveStatus::Solved);
    CHECK(b.flowtime == a.flowtime);  // single agent: same order either way
    CHECK(b.paths[0].steps.back() == Vertex{0, 4});
    CHECK(validate_solution(inst, b.paths).empty());
}

TEST_CASE("mg-b keeps destinations distinct") {
    // both agents' cheapest open sequence ends on the shared task vertex (2,2),
    // so agent 2 is bumped to its second-best final task
    auto inst = make_instance(
        {"...", "...", "..."},
        {{{0, 0}, std::nullopt}, {{0, 2}, std::nullopt}},
        {{{2, 2}, {1, 2}}, {{0, 1}, {1}}, {{0, 1}, {2}}}, Mode::MG);
    auto b = solve_mg_b(inst, {});
    REQUIRE(b.status == SolveStatus::Solved);
    CHECK(b.paths[0].steps.back() == Vertex{2, 2});
    CHECK(b.paths[1].steps.back() == Vertex{0, 1});
    CHECK(validate_solution(inst, b.paths).empty());
}

TEST_CASE("mg-b requires every agent to carry a task") {
    auto inst = make_instance({"..."}, {{{0, 0}, std::nullopt}, {{0, 2}, std::nullopt}},
                              {{{0, 1}, {1}}}, Mode::MG);
    CHECK_THROWS_AS(solve_mg_b(inst, {}), std::invalid_argument);
}

TEST_CASE("mg-b never beats mg-a at omega zero") {
    SplitMix64 rng(8080);
    int compared = 0;
    for (int trial = 0; trial < 25; ++trial) {
        auto maybe = cts::test::random_mg_instance(rng, 4, 4, 0.15, 2, 2, true);
        if (!maybe) continue;
        auto a = solve_mg_a(*maybe, {});
        if (a.status != SolveStatus::Solved) continue;
        auto b = solve_mg_b(*maybe, {});
        if (b.status != SolveStatus::Solved) continue;
        CHECK(b.flowtime >= a.flowtime);
        CHECK(validate_solution(*maybe, b.paths).empty());
        ++compared;
    }
    CHECK(compared >= 10);
}

TEST_CASE("mg-c picks phase A when it finishes in budget") {
    auto inst = make_instance({"....."}, {{{0, 0}, std::nullopt}},
                              {{{0, 2}, {1}}, {{0, 4}, {1}}}, Mode::MG);
    AdaptationConfig config;
    config.base.time_limit_seconds = 30.0;
    auto c = solve_mg_c(inst, config);
    REQUIRE(c.status == SolveStatus::Solved);
    CHECK(c.phase == 'A');
    auto a = solve_mg_a(inst, {});
    CHECK(c.flowtime == a.flowtime);
}

TEST_CASE("mg-c falls back to phase B when phase A gets no time") {
    auto inst = make_instance({"....."}, {{{0, 0}, std::nullopt}},
                              {{{0, 2}, {1}}, {{0, 4}, {1}}}, Mode::MG);
    AdaptationConfig config;
    config.base.time_limit_seconds = 30.0;
    config.c_split = 1e-9;  // phase A budget is effectively zero
    auto c = solve_mg_c(inst, config);
    REQUIRE(c.status == SolveStatus::Solved);
    CHECK(c.phase == 'B');
    auto b = solve_mg_b(inst, {});
    CHECK(c.flowtime == b.flowtime);

    AdaptationConfig hopeless;
    hopeless.base.time_limit_seconds = 1e-9;
    auto t = solve_mg_c(inst, hopeless);
    CHECK(t.status == SolveStatus::Timeout);
}

TEST_CASE("mg-c validates c_split") {
    auto inst = make_instance({".."}, {{{0, 0}, std::nullopt}}, {{{0, 1}, {1}}}, Mode::MG);
    AdaptationConfig bad;
    bad.c_split = 1.5;
    CHECK_THROWS_AS(solve_mg_c(inst, bad), std::invalid_argument);
}

TEST_CASE("sequential baseline equals omega zero on a conflict-free instance") {
    auto inst = make_instance({"...", "..."},
                              {{{0, 0}, Vertex{0, 2}}, {{1, 0}, Vertex{1, 2}}}, {},
                              Mode::CTS);
    auto seq = solve_sequential(inst, {});
    auto exact = solve(inst, {});
    REQUIRE(seq.status == SolveStatus::Solved);
    CHECK(seq.flowtime == exact.flowtime);
    CHECK(seq.stats.roots_generated == 1);
}

TEST_CASE("sequential flowtime upper-bounds omega zero whenever both solve") {
    SplitMix64 rng(123123);
    int compared = 0;
    for (int trial = 0; trial < 20; ++trial) {
        auto maybe = cts::test::random_cts_instance(rng, 4, 4, 0.15, 2, 2);
        if (!maybe) continue;
        auto exact = solve(*maybe, {});
        if (exact.status != SolveStatus::Solved) continue;
        auto seq = solve_sequential(*maybe, {});
        if (seq.status != SolveStatus::Solved) continue;
        CHECK(seq.flowtime >= exact.flowtime);
        CHECK(seq.stats.roots_generated == 1);
        ++compared;
    }
    CHECK(compared >= 8);
}
