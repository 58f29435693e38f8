#include "cts/conflicts.hpp"

#include <algorithm>

namespace cts {

namespace {

template <typename PathAt>
std::optional<Conflict> first_conflict_impl(int n, int max_t, PathAt&& path) {
    for (int t = 0; t <= max_t; ++t) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                Vertex vi = position_at(path(i), t);
                Vertex vj = position_at(path(j), t);
                if (vi == vj)
                    return Conflict{i + 1, j + 1, ConstraintKind::Vertex, vi, {}, t};
                if (t > 0) {
                    Vertex pi = position_at(path(i), t - 1);
                    Vertex pj = position_at(path(j), t - 1);
                    if (pi == vj && pj == vi && !(pi == vi))
                        return Conflict{i + 1, j + 1, ConstraintKind::Edge, vi, pi, t};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Conflict> detect_first_conflict(const std::vector<TimedPath>& paths) {
    int max_t = 0;
    for (const auto& p : paths) max_t = std::max(max_t, int(p.steps.size()) - 1);
    return first_conflict_impl(int(paths.size()), max_t, [&](int i) -> const TimedPath& {
        return paths[std::size_t(i)];
    });
}

std::optional<Conflict> detect_first_conflict(
    const std::vector<std::shared_ptr<const TimedPath>>& paths) {
    int max_t = 0;
    for (const auto& p : paths) max_t = std::max(max_t, int(p->steps.size()) - 1);
    return first_conflict_impl(int(paths.size()), max_t, [&](int i) -> const TimedPath& {
        return *paths[std::size_t(i)];
    });
}

std::pair<Constraint, Constraint> split_conflict(const Conflict& c) {
    if (c.kind == ConstraintKind::Vertex) {
        return {Constraint{c.agent_a, ConstraintKind::Vertex, c.vertex, {}, c.time},
                Constraint{c.agent_b, ConstraintKind::Vertex, c.vertex, {}, c.time}};
    }
    // agent_a traverses from->vertex, agent_b traverses vertex->from
    return {Constraint{c.agent_a, ConstraintKind::Edge, c.vertex, c.from, c.time},
            Constraint{c.agent_b, ConstraintKind::Edge, c.from, c.vertex, c.time}};
}

}  // namespace cts
