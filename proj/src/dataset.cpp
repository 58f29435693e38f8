#include "cts/dataset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cts/random.hpp"

namespace cts {

Instance adapt_dataset(const GridMap& map, const std::vector<ScenEntry>& entries,
                       int n_agents, int n_tasks, int fanout_lo, int fanout_hi,
                       std::uint64_t seed, Mode mode) {
    if (n_agents < 1) throw std::invalid_argument("adapt_dataset: need at least one agent");
    if (n_tasks < 0) throw std::invalid_argument("adapt_dataset: negative task count");
    if (int(entries.size()) < n_agents + n_tasks)
        throw std::invalid_argument(
            "adapt_dataset: " + std::to_string(entries.size()) + " entries, need " +
            std::to_string(n_agents + n_tasks));
    if (fanout_lo < 1 || fanout_hi < fanout_lo || fanout_hi > n_agents)
        throw std::invalid_argument("adapt_dataset: fanout range must lie in [1, n_agents]");

    Instance inst{map, {}, {}, mode};
    for (int i = 0; i < n_agents; ++i) {
        const auto& e = entries[std::size_t(i)];
        AgentSpec a;
        a.id = i + 1;
        a.start = e.start;
        if (mode == Mode::CTS) a.destination = e.goal;
        inst.agents.push_back(a);
    }
    for (int j = 0; j < n_tasks; ++j) {
        TaskSpec t;
        t.id = j + 1;
        t.location = entries[std::size_t(n_agents + j)].start;
        inst.tasks.push_back(t);
    }

    SplitMix64 rng(seed);
    std::vector<int> ids(std::size_t(n_agents), 0);
    std::iota(ids.begin(), ids.end(), 1);
    for (auto& t : inst.tasks) {
        int size = rng.uniform_int(fanout_lo, fanout_hi);
        // partial Fisher-Yates for a uniform size-subset
        for (int k = 0; k < size; ++k) {
            int pick = k + int(rng.next_below(std::uint64_t(n_agents - k)));
            std::swap(ids[std::size_t(k)], ids[std::size_t(pick)]);
        }
        t.assignees.assign(ids.begin(), ids.begin() + size);
        std::sort(t.assignees.begin(), t.assignees.end());
    }

    try {
        inst.validate();
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("adapt_dataset: ") + e.what());
    }
    return inst;
}

}  // namespace cts
