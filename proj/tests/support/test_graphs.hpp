#pragma once

// Shared corpus of named graphs and seeded random generators for the tests.
// Everything uses an explicit mt19937 so runs are reproducible.

#include <algorithm>
#include <random>
#include <vector>

#include "specbound/graph.hpp"
#include "specbound/graphio.hpp"

namespace testsupport {

using specbound::Graph;

inline Graph petersen() { return specbound::generate("petersen", {}); }
inline Graph cycle(int n) { return specbound::generate("cycle", {n}); }
inline Graph path(int n) { return specbound::generate("path", {n}); }
inline Graph complete(int n) { return specbound::generate("complete", {n}); }
inline Graph star(int k) { return specbound::generate("star", {k}); }
inline Graph complete_bipartite(int a, int b) { return specbound::generate("complete_bipartite", {a, b}); }

inline Graph random_graph(int n, std::mt19937& rng, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline Graph random_connected_graph(int n, std::mt19937& rng, double p = 0.5) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Graph g = random_graph(n, rng, p);
        if (specbound::is_connected(g)) return g;
    }
    // Force connectivity with a path backbone; reachable only at tiny p.
    Graph g = random_graph(n, rng, p);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

/// Random partition of {0..n-1} into k nonempty classes.
inline std::vector<std::vector<int>> random_partition(int n, int k, std::mt19937& rng) {
    std::vector<int> assign(static_cast<std::size_t>(n));
    // Guarantee every class is hit, then distribute the rest uniformly.
    for (int c = 0; c < k; ++c) assign[static_cast<std::size_t>(c)] = c;
    std::uniform_int_distribution<int> pick(0, k - 1);
    for (int v = k; v < n; ++v) assign[static_cast<std::size_t>(v)] = pick(rng);
    std::shuffle(assign.begin(), assign.end(), rng);
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(k));
    for (int v = 0; v < n; ++v) parts[static_cast<std::size_t>(assign[static_cast<std::size_t>(v)])].push_back(v);
    return parts;
}

/// Random nonempty subset of {0..n-1} of the given size.
inline std::vector<int> random_subset(int n, int size, std::mt19937& rng) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(size));
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace testsupport
