#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cts/geometry.hpp"

namespace cts {

// 4-connected grid world. Cells are either passable or static obstacles.
class GridMap {
public:
    GridMap(int height, int width, std::vector<std::uint8_t> blocked);

    static GridMap open(int height, int width);
    // rows of '.' (passable) and '@' (blocked); all rows must share one width
    static GridMap from_rows(const std::vector<std::string>& rows);

    int height() const { return height_; }
    int width() const { return width_; }
    int cell_count() const { return height_ * width_; }
    int blocked_count() const { return blocked_count_; }
    int passable_count() const { return cell_count() - blocked_count_; }

    bool in_bounds(Vertex v) const {
        return v.row >= 0 && v.row < height_ && v.col >= 0 && v.col < width_;
    }
    bool blocked(Vertex v) const { return blocked_[cell_index(v)] != 0; }
    bool passable(Vertex v) const { return in_bounds(v) && !blocked(v); }

    int cell_index(Vertex v) const { return v.row * width_ + v.col; }
    Vertex vertex_at(int idx) const { return {idx / width_, idx % width_}; }

    std::vector<std::string> to_rows() const;

    friend bool operator==(const GridMap&, const GridMap&) = default;

private:
    int height_;
    int width_;
    int blocked_count_;
    std::vector<std::uint8_t> blocked_;
};

}  // namespace cts
