#include "cts/grid_map.hpp"

#include <numeric>
#include <stdexcept>

namespace cts {

GridMap::GridMap(int height, int width, std::vector<std::uint8_t> blocked)
    : height_(height), width_(width), blocked_(std::move(blocked)) {
    if (height <= 0 || width <= 0)
        throw std::invalid_argument("GridMap: dimensions must be positive");
    if (blocked_.size() != std::size_t(height) * std::size_t(width))
        throw std::invalid_argument("GridMap: blocked bitmap size mismatch");
    blocked_count_ = int(std::accumulate(blocked_.begin(), blocked_.end(), 0));
}

GridMap GridMap::open(int height, int width) {
    return GridMap(height, width,
                   std::vector<std::uint8_t>(std::size_t(height) * std::size_t(width), 0));
}

GridMap GridMap::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) throw std::invalid_argument("GridMap::from_rows: no rows");
    int h = int(rows.size());
    int w = int(rows[0].size());
    std::vector<std::uint8_t> blocked;
    blocked.reserve(std::size_t(h) * std::size_t(w));
    for (const auto& row : rows) {
        if (int(row.size()) != w)
            throw std::invalid_argument("GridMap::from_rows: ragged rows");
        for (char c : row) {
            if (c == '.')
                blocked.push_back(0);
            else if (c == '@')
                blocked.push_back(1);
            else
                throw std::invalid_argument(std::string("GridMap::from_rows: bad cell '") +
                                            c + "'");
        }
    }
    return GridMap(h, w, std::move(blocked));
}

std::vector<std::string> GridMap::to_rows() const {
    std::vector<std::string> rows(height_, std::string(std::size_t(width_), '.'));
    for (int r = 0; r < height_; ++r)
        for (int c = 0; c < width_; ++c)
            if (blocked_[std::size_t(r) * width_ + c]) rows[r][c] = '@';
    return rows;
}

}  // namespace cts
