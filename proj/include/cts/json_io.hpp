#pragma once

#include <string>
#include <vector>

#include "cts/instance.hpp"
#include "cts/solver.hpp"
#include "cts/validator.hpp"

namespace cts {

std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);
Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

// Solution document: status, flowtime, stats, and per-agent timestep-indexed
// vertex lists with visit annotations.
std::string solution_to_json(const SolveResult& result, const std::string& variant);
SolveResult solution_from_json(const std::string& text);
SolveResult load_solution(const std::string& path);

std::string violations_to_json(const std::vector<Violation>& violations);

}  // namespace cts
