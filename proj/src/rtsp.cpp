#include "cts/rtsp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cts {

void EdgeConstraintSet::validate(int n_nodes) const {
    auto check_range = [&](const DirectedEdge& e) {
        if (e.from < 0 || e.from >= n_nodes || e.to < 0 || e.to >= n_nodes || e.from == e.to)
            throw std::invalid_argument("edge constraint out of range");
    };
    std::set<DirectedEdge> inc(included.begin(), included.end());
    for (const auto& e : included) check_range(e);
    for (const auto& e : excluded) {
        check_range(e);
        if (inc.count(e))
            throw std::invalid_argument("edge both included and excluded");
    }
    std::vector<int> out_deg(std::size_t(n_nodes), 0), in_deg(std::size_t(n_nodes), 0);
    std::vector<int> next(std::size_t(n_nodes), -1);
    for (const auto& e : inc) {
        if (++out_deg[std::size_t(e.from)] > 1)
            throw std::invalid_argument("included edges branch at node " +
                                        std::to_string(e.from));
        if (++in_deg[std::size_t(e.to)] > 1)
            throw std::invalid_argument("included edges merge at node " +
                                        std::to_string(e.to));
        next[std::size_t(e.from)] = e.to;
    }
    // walk each chain from its head; any unvisited included edge afterwards is a cycle
    std::vector<char> seen(std::size_t(n_nodes), 0);
    for (int v = 0; v < n_nodes; ++v) {
        if (in_deg[std::size_t(v)] != 0 || next[std::size_t(v)] < 0) continue;
        for (int u = v; u >= 0; u = next[std::size_t(u)]) seen[std::size_t(u)] = 1;
    }
    for (const auto& e : inc)
        if (!seen[std::size_t(e.from)])
            throw std::invalid_argument("included edges contain a cycle");
}

namespace {

struct Macro {
    int head;
    int tail;
    Cost internal = 0;
    std::vector<int> members;  // head..tail in chain order
};

}  // namespace

std::optional<RtspSolution> solve_rtsp(const CostMatrix& matrix,
                                       const EdgeConstraintSet& constraints) {
    const int n = matrix.size();
    constraints.validate(n);

    std::vector<int> next(std::size_t(n), -1), prev(std::size_t(n), -1);
    for (const auto& e : constraints.included) {
        next[std::size_t(e.from)] = e.to;
        prev[std::size_t(e.to)] = e.from;
    }

    // contract included chains
    std::vector<Macro> macros;
    std::vector<int> macro_of(std::size_t(n), -1);
    for (int v = 0; v < n; ++v) {
        if (prev[std::size_t(v)] != -1) continue;  // not a chain head
        Macro m;
        m.head = v;
        int u = v;
        m.members.push_back(u);
        while (next[std::size_t(u)] != -1) {
            int w = next[std::size_t(u)];
            m.internal = saturating_add(m.internal, matrix.at(u, w));
            u = w;
            m.members.push_back(u);
        }
        m.tail = u;
        macro_of[std::size_t(v)] = int(macros.size());
        for (int member : m.members) macro_of[std::size_t(member)] = int(macros.size());
        macros.push_back(std::move(m));
    }

    const int start = matrix.start_index();
    const int terminal = matrix.terminal_index();
    const int sm = macro_of[std::size_t(start)];
    const int tm = macro_of[std::size_t(terminal)];
    if (macros[std::size_t(sm)].head != start) return std::nullopt;   // start mid-chain
    if (macros[std::size_t(tm)].tail != terminal) return std::nullopt;  // terminal mid-chain
    if (macros[std::size_t(sm)].internal >= kInfCost) return std::nullopt;

    auto expand = [&](const std::vector<int>& macro_order, Cost cost) {
        RtspSolution sol;
        sol.cost = cost;
        for (int mi : macro_order)
            for (int v : macros[std::size_t(mi)].members) sol.order.push_back(v);
        return sol;
    };

    if (sm == tm) {
        // everything contracted into the start chain
        if (int(macros.size()) > 1) return std::nullopt;
        return expand({sm}, macros[std::size_t(sm)].internal);
    }

    std::set<DirectedEdge> excluded(constraints.excluded.begin(), constraints.excluded.end());
    auto macro_edge = [&](int a, int b) -> Cost {
        int u = macros[std::size_t(a)].tail;
        int v = macros[std::size_t(b)].head;
        if (excluded.count({u, v})) return kInfCost;
        return matrix.at(u, v);
    };

    // positions for all macros except the start macro
    std::vector<int> others;
    for (int i = 0; i < int(macros.size()); ++i)
        if (i != sm) others.push_back(i);
    const int k = int(others.size());
    if (k > 24)
        throw std::invalid_argument("solve_rtsp: too many nodes for subset DP");
    std::vector<int> pos(macros.size(), -1);
    for (int i = 0; i < k; ++i) pos[std::size_t(others[std::size_t(i)])] = i;
    const int t_pos = pos[std::size_t(tm)];

    const std::size_t n_masks = std::size_t(1) << k;
    std::vector<Cost> dp(n_masks * std::size_t(k), kInfCost);
    std::vector<int> parent(n_masks * std::size_t(k), -1);
    auto idx = [&](std::size_t mask, int j) { return mask * std::size_t(k) + std::size_t(j); };

    for (int j = 0; j < k; ++j) {
        Cost c = macro_edge(sm, others[std::size_t(j)]);
        c = saturating_add(c, macros[std::size_t(others[std::size_t(j)])].internal);
        dp[idx(std::size_t(1) << j, j)] = c;
    }
    for (std::size_t mask = 1; mask < n_masks; ++mask) {
        for (int j = 0; j < k; ++j) {
            if (!(mask & (std::size_t(1) << j))) continue;
            Cost base = dp[idx(mask, j)];
            if (base >= kInfCost) continue;
            // terminal macro must come last
            if (j == t_pos && mask != n_masks - 1) continue;
            for (int l = 0; l < k; ++l) {
                if (mask & (std::size_t(1) << l)) continue;
                Cost c = saturating_add(base, macro_edge(others[std::size_t(j)],
                                                         others[std::size_t(l)]));
                c = saturating_add(c, macros[std::size_t(others[std::size_t(l)])].internal);
                std::size_t m2 = mask | (std::size_t(1) << l);
                if (c < dp[idx(m2, l)]) {
                    dp[idx(m2, l)] = c;
                    parent[idx(m2, l)] = j;
                }
            }
        }
    }

    const std::size_t full = n_masks - 1;
    Cost best = dp[idx(full, t_pos)];
    if (best >= kInfCost) return std::nullopt;
    best = saturating_add(best, macros[std::size_t(sm)].internal);

    std::vector<int> macro_order;
    std::size_t mask = full;
    int j = t_pos;
    while (j >= 0) {
        macro_order.push_back(others[std::size_t(j)]);
        int p = parent[idx(mask, j)];
        mask &= ~(std::size_t(1) << j);
        j = p;
    }
    macro_order.push_back(sm);
    std::reverse(macro_order.begin(), macro_order.end());
    return expand(macro_order, best);
}

TaskSequence realize_sequence(const CostMatrix& matrix, const std::vector<int>& order,
                              int agent_id, Cost cost) {
    TaskSequence seq;
    seq.agent_id = agent_id;
    seq.cost = cost;
    for (int node : order) {
        const MatrixNode& m = matrix.nodes[std::size_t(node)];
        if (m.is_virtual) continue;
        seq.entries.push_back({m.vertex, m.kind, m.task_id});
    }
    return seq;
}

}  // namespace cts
