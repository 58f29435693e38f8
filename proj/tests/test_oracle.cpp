#include <doctest.h>

#include <algorithm>
#include <map>

#include "cts/oracle.hpp"
#include "test_util.hpp"

using namespace cts;
using cts::test::make_instance;

namespace {

// independent finite-horizon dynamic program over joint states; exact for any
// plan whose makespan fits the cap. min total per-step active-agent payments,
// which equals flowtime.
struct TinyDP {
    const Instance& inst;
    int cap;
    std::vector<std::vector<int>> assigned;
    std::map<std::pair<std::vector<int>, int>, Cost> memo;

    struct AgentState {
        Vertex v;
        unsigned visited = 0;
        bool done = false;
    };

    explicit TinyDP(const Instance& instance, int horizon) : inst(instance), cap(horizon) {
        for (const auto& agent : inst.agents) assigned.push_back(inst.tasks_of(agent.id));
    }

    unsigned full_mask(int i) const {
        return (1u << assigned[std::size_t(i)].size()) - 1u;
    }

    void credit(int i, AgentState& s) const {
        for (std::size_t k = 0; k < assigned[std::size_t(i)].size(); ++k)
            if (inst.task(assigned[std::size_t(i)][k]).location == s.v)
                s.visited |= 1u << k;
    }

    bool parkable(int i, const AgentState& s) const {
        if (s.visited != full_mask(i)) return false;
        if (inst.mode == Mode::CTS) return s.v == *inst.agents[std::size_t(i)].destination;
        if (assigned[std::size_t(i)].empty())
            return s.v == inst.agents[std::size_t(i)].start;
        for (int task_id : assigned[std::size_t(i)])
            if (inst.task(task_id).location == s.v) return true;
        return false;
    }

    std::vector<int> encode(const std::vector<AgentState>& states) const {
        std::vector<int> key;
        for (const auto& s : states) {
            key.push_back(inst.map.cell_index(s.v));
            key.push_back(int(s.visited));
            key.push_back(s.done ? 1 : 0);
        }
        return key;
    }

    Cost solve() {
        std::vector<AgentState> init;
        for (const auto& agent : inst.agents) {
            AgentState s{agent.start, 0, false};
            credit(agent.id - 1, s);
            init.push_back(s);
        }
        return rem(init, 0);
    }

    // minimal future cost from this state at time t
    Cost rem(const std::vector<AgentState>& states, int t) {
        auto key = std::make_pair(encode(states), t);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        memo[key] = kInfCost;  // cycle-safe placeholder (states repeat only via t+1)

        Cost best = kInfCost;
        std::vector<int> eligible;
        for (std::size_t i = 0; i < states.size(); ++i)
            if (!states[i].done && parkable(int(i), states[i])) eligible.push_back(int(i));
        for (int mask = 0; mask < (1 << eligible.size()); ++mask) {
            auto parked = states;
            for (std::size_t b = 0; b < eligible.size(); ++b)
                if (mask & (1 << b)) parked[std::size_t(eligible[b])].done = true;
            Cost active = 0;
            for (const auto& s : parked) active += s.done ? 0 : 1;
            if (active == 0) {
                best = 0;
                break;
            }
            if (t >= cap) continue;
            best = std::min(best, moves(parked, t, active));
        }
        memo[key] = best;
        return best;
    }

    Cost moves(const std::vector<AgentState>& states, int t, Cost active) {
        std::vector<std::vector<Vertex>> options;
        for (const auto& s : states) {
            std::vector<Vertex> opts{s.v};
            if (!s.done)
                for (Vertex stepv : kCardinalSteps)
                    if (inst.map.passable(s.v + stepv)) opts.push_back(s.v + stepv);
            options.push_back(std::move(opts));
        }
        Cost best = kInfCost;
        std::vector<std::size_t> pick(states.size(), 0);
        for (;;) {
            bool ok = true;
            for (std::size_t i = 0; ok && i < states.size(); ++i)
                for (std::size_t j = i + 1; ok && j < states.size(); ++j) {
                    Vertex vi = options[i][pick[i]], vj = options[j][pick[j]];
                    if (vi == vj) ok = false;
                    else if (vi == states[j].v && vj == states[i].v) ok = false;
                }
            if (ok) {
                auto child = states;
                for (std::size_t i = 0; i < states.size(); ++i) {
                    child[i].v = options[i][pick[i]];
                    if (!child[i].done) credit(int(i), child[i]);
                }
                Cost tail = rem(child, t + 1);
                if (tail < kInfCost) best = std::min(best, active + tail);
            }
            std::size_t i = 0;
            while (i < states.size()) {
                if (++pick[i] < options[i].size()) break;
                pick[i] = 0;
                ++i;
            }
            if (i == states.size()) break;
        }
        return best;
    }
};

}  // namespace

TEST_CASE("oracle basics") {
    // one agent, no tasks, adjacent start and destination
    auto adjacent = make_instance({".."}, {{{0, 0}, Vertex{0, 1}}}, {}, Mode::CTS);
    auto r = brute_force_oracle(adjacent, 50);
    CHECK(r.status == OracleStatus::Solved);
    CHECK(r.flowtime == 1);

    // swap at the ends of a 1x3 corridor is impossible
    auto corridor = make_instance(
        {"..."}, {{{0, 0}, Vertex{0, 2}}, {{0, 2}, Vertex{0, 0}}}, {}, Mode::CTS);
    CHECK(brute_force_oracle(corridor, 60).status == OracleStatus::Infeasible);

    // a zero-task MG agent stays home for free
    auto mg = make_instance({"..."}, {{{0, 1}, std::nullopt}}, {}, Mode::MG);
    auto rm = brute_force_oracle(mg, 20);
    CHECK(rm.status == OracleStatus::Solved);
    CHECK(rm.flowtime == 0);
}

TEST_CASE("oracle handles task ordering freedom") {
    // one agent on a line with two tasks right of the start, destination at start
    auto inst = make_instance({"...."}, {{{0, 0}, Vertex{0, 0}}},
                              {{{0, 2}, {1}}, {{0, 3}, {1}}}, Mode::CTS);
    auto r = brute_force_oracle(inst, 60);
    CHECK(r.status == OracleStatus::Solved);
    CHECK(r.flowtime == 6);  // out to the far task and back

    // MG: park on the far task instead of returning
    auto mg = make_instance({"...."}, {{{0, 0}, std::nullopt}},
                            {{{0, 2}, {1}}, {{0, 3}, {1}}}, Mode::MG);
    auto rmg = brute_force_oracle(mg, 60);
    CHECK(rmg.status == OracleStatus::Solved);
    CHECK(rmg.flowtime == 3);
}

TEST_CASE("stay-at-goal blocking is enforced") {
    // agent 2 must cross agent 1's destination cell; agent 1 hides in the pocket
    // until agent 2 has passed, then parks
    auto inst = make_instance({"....", "@.@@"},
                              {{{0, 1}, Vertex{0, 2}}, {{0, 3}, Vertex{0, 0}}}, {},
                              Mode::CTS);
    auto r = brute_force_oracle(inst, 60);
    CHECK(r.status == OracleStatus::Solved);
    // agent 2 finishes in 3; agent 1 dodges to (1,1) and parks at t=4
    CHECK(r.flowtime == 3 + 4);

    // without the pocket the crossing is impossible
    auto sealed = make_instance({"...."},
                                {{{0, 1}, Vertex{0, 2}}, {{0, 3}, Vertex{0, 0}}}, {},
                                Mode::CTS);
    CHECK(brute_force_oracle(sealed, 60).status == OracleStatus::Infeasible);
}

TEST_CASE("horizon exhaustion is reported") {
    auto inst = make_instance({".........."}, {{{0, 0}, Vertex{0, 9}}}, {}, Mode::CTS);
    CHECK(brute_force_oracle(inst, 2).status == OracleStatus::HorizonExceeded);
    CHECK(brute_force_oracle(inst, 20).flowtime == 9);
}

TEST_CASE("oracle agrees with an independent bounded enumeration") {
    SplitMix64 rng(4242);
    int solved = 0;
    for (int trial = 0; trial < 25; ++trial) {
        auto maybe = cts::test::random_cts_instance(rng, 2, 3, 0.15, 2, 1);
        if (!maybe) continue;
        const int cap = 14;
        TinyDP tiny(*maybe, cap);
        Cost expected = tiny.solve();
        auto r = brute_force_oracle(*maybe, 60);
        if (expected < kInfCost) {
            REQUIRE(r.status == OracleStatus::Solved);
            CHECK(r.flowtime == expected);
            ++solved;
        } else if (r.status == OracleStatus::Solved) {
            // the optimum may simply need a makespan beyond the cap
            CHECK(r.flowtime > cap);
        }
    }
    CHECK(solved >= 10);
}

TEST_CASE("joint_solution_exists matches the oracle verdict") {
    SplitMix64 rng(909);
    for (int trial = 0; trial < 30; ++trial) {
        auto maybe = cts::test::random_cts_instance(rng, 4, 4, 0.25, 2, 2);
        if (!maybe) continue;
        auto exists = joint_solution_exists(*maybe, 500'000);
        REQUIRE(exists.has_value());
        auto r = brute_force_oracle(*maybe, 4 * maybe->map.cell_count());
        CHECK(*exists == (r.status == OracleStatus::Solved));
    }
}
