#include "cts/movingai.hpp"

#include <fstream>
#include <sstream>

namespace cts {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

std::string trim_cr(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) s.pop_back();
    return s;
}

}  // namespace

GridMap parse_map(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> std::string {
        if (!std::getline(in, line)) fail(line_no + 1, "unexpected end of file");
        ++line_no;
        return trim_cr(line);
    };

    std::string type_line = next_line();
    if (type_line.rfind("type", 0) != 0) fail(line_no, "expected 'type' header");

    int height = -1, width = -1;
    for (int i = 0; i < 2; ++i) {
        std::istringstream ss(next_line());
        std::string key;
        int value = -1;
        if (!(ss >> key >> value) || value <= 0)
            fail(line_no, "expected 'height N' or 'width N'");
        if (key == "height")
            height = value;
        else if (key == "width")
            width = value;
        else
            fail(line_no, "unknown header key '" + key + "'");
    }
    if (height <= 0 || width <= 0) fail(line_no, "missing height or width");

    if (next_line() != "map") fail(line_no, "expected 'map' line");

    std::vector<std::uint8_t> blocked;
    blocked.reserve(std::size_t(height) * std::size_t(width));
    for (int r = 0; r < height; ++r) {
        std::string row = next_line();
        if (int(row.size()) != width)
            fail(line_no, "row length " + std::to_string(row.size()) + " != width " +
                              std::to_string(width));
        for (char c : row) {
            switch (c) {
                case '.':
                case 'G':
                case 'S':  // swamp, passable
                    blocked.push_back(0);
                    break;
                case '@':
                case 'T':
                case 'O':
                    blocked.push_back(1);
                    break;
                default:
                    fail(line_no, std::string("unknown cell character '") + c + "'");
            }
        }
    }
    return GridMap(height, width, std::move(blocked));
}

GridMap parse_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open map file: " + path);
    return parse_map(in);
}

std::string serialize_map(const GridMap& map) {
    std::ostringstream out;
    out << "type octile\n";
    out << "height " << map.height() << "\n";
    out << "width " << map.width() << "\n";
    out << "map\n";
    for (const auto& row : map.to_rows()) out << row << "\n";
    return out.str();
}

std::vector<ScenEntry> parse_scenario(std::istream& in) {
    std::vector<ScenEntry> entries;
    std::string line;
    int row_index = 0;  // index among data rows
    bool first = true;
    while (std::getline(in, line)) {
        line = trim_cr(line);
        if (line.empty()) continue;
        if (first && line.rfind("version", 0) == 0) {
            first = false;
            continue;
        }
        first = false;
        std::istringstream ss(line);
        std::string bucket, map_name;
        int map_w, map_h, sx, sy, gx, gy;
        double opt;
        if (!(ss >> bucket >> map_name >> map_w >> map_h >> sx >> sy >> gx >> gy >> opt)) {
            throw ParseError("scenario row " + std::to_string(row_index) +
                             ": expected 9 columns");
        }
        std::string extra;
        if (ss >> extra)
            throw ParseError("scenario row " + std::to_string(row_index) +
                             ": trailing columns");
        // x is the column, y is the row
        entries.push_back({Vertex{sy, sx}, Vertex{gy, gx}});
        ++row_index;
    }
    return entries;
}

std::vector<ScenEntry> parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file: " + path);
    return parse_scenario(in);
}

}  // namespace cts
