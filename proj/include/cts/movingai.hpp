#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cts/grid_map.hpp"

namespace cts {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScenEntry {
    Vertex start;
    Vertex goal;
};

// MovingAI .map: header (type/height/width/map) then height rows.
// '.' and 'G' are passable, 'S' (swamp) is treated as passable, '@'/'T'/'O' blocked.
GridMap parse_map(std::istream& in);
GridMap parse_map_file(const std::string& path);

// Canonical re-serialization with '.' / '@' cells.
std::string serialize_map(const GridMap& map);

// MovingAI .scen: optional "version" line, then 9 whitespace-separated columns:
// bucket, map, width, height, start-x, start-y, goal-x, goal-y, optimal length.
// x is the column, y is the row.
std::vector<ScenEntry> parse_scenario(std::istream& in);
std::vector<ScenEntry> parse_scenario_file(const std::string& path);

}  // namespace cts
