#pragma once

// Isomorph-free enumeration of all simple graphs on up to 8 vertices, used to
// drive the exhaustive soundness sweeps. Graphs are deduplicated by a
// canonical form: vertices are first split into classes by iterated color
// refinement (degree seed, then sorted neighbor-color multisets ranked
// canonically), and the canonical form is the maximum packed upper-triangle
// bitstring over all class-respecting relabelings, found by DFS with prefix
// pruning. The packed bitstring determines the graph, so equality of forms is
// exactly isomorphism.

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "specbound/graph.hpp"

namespace testsupport {

using specbound::Graph;

inline std::vector<int> refine_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) colors[static_cast<std::size_t>(v)] = g.degree(v);
    // rank initial colors
    for (int round = 0; round <= n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sigs(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int u : g.neighbors(v)) nb.push_back(colors[static_cast<std::size_t>(u)]);
            std::sort(nb.begin(), nb.end());
            sigs[static_cast<std::size_t>(v)] = {colors[static_cast<std::size_t>(v)], std::move(nb)};
        }
        auto sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            next[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sigs[static_cast<std::size_t>(v)]) -
                sorted.begin());
        if (next == colors) break;
        colors = std::move(next);
    }
    return colors;
}

namespace detail {

struct CanonSearch {
    const Graph* g = nullptr;
    int n = 0;
    std::vector<std::vector<int>> slot_candidates;  // per slot, class members (shared per class)
    std::array<int, 8> perm{};                      // slot -> original vertex
    std::array<std::uint8_t, 8> best_cols{};        // zeros = achievable minimum, so start valid

    // Invariant on entry: the columns fixed so far equal best_cols[0..t-1].
    // A strictly larger column claims the best immediately (suffix reset to
    // the minimum), so the equal-prefix invariant never breaks and every
    // branch below current best is pruned on sight. best_cols is fully
    // realized again by the time the subtree unwinds.
    void dfs(int t) {
        if (t == n) return;
        for (int v : slot_candidates[static_cast<std::size_t>(t)]) {
            if (perm_used & (1u << v)) continue;
            std::uint8_t col = 0;
            for (int s = 0; s < t; ++s)
                col = static_cast<std::uint8_t>((col << 1) |
                                                (g->has_edge(perm[static_cast<std::size_t>(s)], v) ? 1 : 0));
            if (col < best_cols[static_cast<std::size_t>(t)]) continue;
            if (col > best_cols[static_cast<std::size_t>(t)]) {
                best_cols[static_cast<std::size_t>(t)] = col;
                for (int s = t + 1; s < n; ++s) best_cols[static_cast<std::size_t>(s)] = 0;
            }
            perm_used |= 1u << v;
            perm[static_cast<std::size_t>(t)] = v;
            dfs(t + 1);
            perm_used &= ~(1u << v);
        }
    }

    std::uint32_t perm_used = 0;
};

}  // namespace detail

/// Canonical form of a graph on n <= 8 vertices, packed into a uint64:
/// column t of the relabeled upper triangle (t bits) concatenated MSB-first,
/// prefixed by n so forms of different orders never collide.
inline std::uint64_t canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    const auto colors = refine_colors(g);
    // class-respecting slot layout: classes in ascending refined-color order
    std::vector<std::vector<int>> classes;
    {
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return colors[static_cast<std::size_t>(a)] != colors[static_cast<std::size_t>(b)]
                       ? colors[static_cast<std::size_t>(a)] < colors[static_cast<std::size_t>(b)]
                       : a < b;
        });
        for (int v : order) {
            if (classes.empty() ||
                colors[static_cast<std::size_t>(classes.back().front())] != colors[static_cast<std::size_t>(v)])
                classes.emplace_back();
            classes.back().push_back(v);
        }
    }
    detail::CanonSearch search;
    search.g = &g;
    search.n = n;
    for (const auto& cls : classes)
        for (std::size_t i = 0; i < cls.size(); ++i) search.slot_candidates.push_back(cls);
    search.dfs(0);

    std::uint64_t packed = static_cast<std::uint64_t>(n);
    for (int t = 0; t < n; ++t)
        packed = (packed << t) | search.best_cols[static_cast<std::size_t>(t)];
    return packed;
}

/// All simple graphs on exactly n vertices (1 <= n <= 8), one representative
/// per isomorphism class, built by vertex augmentation from the (n-1)-vertex
/// list. Expected counts: 1, 2, 4, 11, 34, 156, 1044, 12346.
inline std::vector<Graph> all_graphs(int n) {
    std::vector<Graph> cur;
    cur.push_back(Graph(1));
    for (int size = 2; size <= n; ++size) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<Graph> next;
        for (const Graph& base : cur) {
            for (std::uint32_t mask = 0; mask < (1u << (size - 1)); ++mask) {
                Graph h(size);
                for (const auto& [u, v] : base.edges()) h.add_edge(u, v);
                for (int u = 0; u < size - 1; ++u)
                    if (mask & (1u << u)) h.add_edge(u, size - 1);
                if (seen.insert(canonical_form(h)).second) next.push_back(std::move(h));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

inline std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for (Graph& g : all_graphs(n))
        if (specbound::is_connected(g)) out.push_back(std::move(g));
    return out;
}

}  // namespace testsupport
