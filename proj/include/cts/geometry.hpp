#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>

namespace cts {

using Cost = std::int64_t;

// Sentinel for unreachable / forbidden; room left so sums never overflow.
inline constexpr Cost kInfCost = std::int64_t{1} << 60;

inline Cost saturating_add(Cost a, Cost b) {
    if (a >= kInfCost || b >= kInfCost) return kInfCost;
    return a + b;
}

struct Vertex {
    int row = 0;
    int col = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex operator+(Vertex a, Vertex b) { return {a.row + b.row, a.col + b.col}; }

// Up, down, left, right (unit edge cost; waiting is the fifth action).
inline constexpr std::array<Vertex, 4> kCardinalSteps{{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};

inline bool adjacent_or_equal(Vertex a, Vertex b) {
    int dr = a.row - b.row, dc = a.col - b.col;
    return (dr == 0 && (dc == 0 || dc == 1 || dc == -1)) || (dc == 0 && (dr == 1 || dr == -1));
}

struct VertexHash {
    std::size_t operator()(const Vertex& v) const {
        return std::hash<std::int64_t>()((std::int64_t(v.row) << 32) ^ std::uint32_t(v.col));
    }
};

}  // namespace cts
