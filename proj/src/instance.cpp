#include "cts/instance.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace cts {

std::string to_string(Mode mode) { return mode == Mode::CTS ? "CTS" : "MG"; }

Mode mode_from_string(const std::string& s) {
    if (s == "CTS") return Mode::CTS;
    if (s == "MG") return Mode::MG;
    throw std::invalid_argument("unknown mode: " + s);
}

std::vector<int> Instance::tasks_of(int agent_id) const {
    std::vector<int> out;
    for (const auto& t : tasks)
        if (std::binary_search(t.assignees.begin(), t.assignees.end(), agent_id))
            out.push_back(t.id);
    return out;
}

void Instance::validate() const {
    const int n = num_agents();
    std::unordered_map<int, int> start_owner, dest_owner;
    for (int i = 0; i < n; ++i) {
        const auto& a = agents[std::size_t(i)];
        if (a.id != i + 1)
            throw std::invalid_argument("agent ids must be contiguous from 1");
        if (!map.passable(a.start))
            throw std::invalid_argument("agent " + std::to_string(a.id) +
                                        " start not passable");
        if (mode == Mode::CTS && !a.destination)
            throw std::invalid_argument("agent " + std::to_string(a.id) +
                                        " lacks a destination in CTS mode");
        if (mode == Mode::MG && a.destination)
            throw std::invalid_argument("agent " + std::to_string(a.id) +
                                        " must not carry a destination in MG mode");
        if (a.destination && !map.passable(*a.destination))
            throw std::invalid_argument("agent " + std::to_string(a.id) +
                                        " destination not passable");
        int start_key = map.cell_index(a.start);
        if (auto [it, fresh] = start_owner.emplace(start_key, a.id); !fresh)
            throw std::invalid_argument("agents " + std::to_string(it->second) + " and " +
                                        std::to_string(a.id) + " share a start");
        if (mode == Mode::CTS) {
            int dest_key = map.cell_index(*a.destination);
            if (auto [it, fresh] = dest_owner.emplace(dest_key, a.id); !fresh)
                throw std::invalid_argument("agents " + std::to_string(it->second) +
                                            " and " + std::to_string(a.id) +
                                            " share a destination");
        }
    }
    for (std::size_t j = 0; j < tasks.size(); ++j) {
        const auto& t = tasks[j];
        if (t.id != int(j) + 1)
            throw std::invalid_argument("task ids must be contiguous from 1");
        if (!map.passable(t.location))
            throw std::invalid_argument("task " + std::to_string(t.id) +
                                        " location not passable");
        if (t.assignees.empty())
            throw std::invalid_argument("task " + std::to_string(t.id) + " has no assignees");
        if (!std::is_sorted(t.assignees.begin(), t.assignees.end()) ||
            std::adjacent_find(t.assignees.begin(), t.assignees.end()) != t.assignees.end())
            throw std::invalid_argument("task " + std::to_string(t.id) +
                                        " assignees must be sorted unique");
        for (int a : t.assignees)
            if (a < 1 || a > n)
                throw std::invalid_argument("task " + std::to_string(t.id) +
                                            " assignee out of range");
    }
}

}  // namespace cts
