#pragma once

#include <cstdint>
#include <vector>

#include "cts/instance.hpp"
#include "cts/movingai.hpp"

namespace cts {

// Builds a CTS/MG instance from scenario entries: the first n_agents entries become
// agents (goal kept as destination only in CTS mode), the next n_tasks entries'
// start positions become task locations. Each task is assigned to a uniformly drawn
// set of agents whose size is uniform in [fanout_lo, fanout_hi]. Deterministic in
// (inputs, seed).
Instance adapt_dataset(const GridMap& map, const std::vector<ScenEntry>& entries,
                       int n_agents, int n_tasks, int fanout_lo, int fanout_hi,
                       std::uint64_t seed, Mode mode);

}  // namespace cts
