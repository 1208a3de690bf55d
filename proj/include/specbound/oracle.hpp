#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "specbound/eigen.hpp"
#include "specbound/graph.hpp"

namespace specbound {

/// Exact value of one graph parameter plus a re-validatable witness.
struct OracleResult {
    std::string parameter;
    double exact_value = 0.0;
    std::vector<int> witness;   // vertex set (sorted) for set-valued parameters
    std::vector<int> coloring;  // per-vertex colors for the chromatic oracle
    long long nodes = 0;        // search nodes expanded
};

inline bool is_independent_set(const Graph& g, const std::vector<int>& u) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (g.has_edge(u[i], u[j])) return false;
    return true;
}

inline bool is_clique(const Graph& g, const std::vector<int>& u) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (!g.has_edge(u[i], u[j])) return false;
    return true;
}

inline bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.vertex_count()) return false;
    for (const auto& [u, v] : g.edges())
        if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) return false;
    return true;
}

namespace detail {

constexpr double kTieEps = 1e-12;

inline std::vector<int> mask_to_set(std::uint32_t mask) {
    std::vector<int> out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1u) out.push_back(v);
    return out;
}

inline bool lex_smaller(std::uint32_t a, std::uint32_t b) {
    const auto va = mask_to_set(a);
    const auto vb = mask_to_set(b);
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

struct MwisSearch {
    const std::vector<std::uint32_t>& adj;
    const std::vector<double>& w;
    double best_weight = -1.0;
    std::uint32_t best_set = 0;
    long long nodes = 0;

    void consider(double weight, std::uint32_t set) {
        if (weight > best_weight + kTieEps) {
            best_weight = weight;
            best_set = set;
        } else if (std::abs(weight - best_weight) <= kTieEps && lex_smaller(set, best_set)) {
            best_set = set;
        }
    }

    void run(std::uint32_t cand, double cur, std::uint32_t set) {
        ++nodes;
        if (cand == 0) {
            consider(cur, set);
            return;
        }
        double rest = cur;
        for (std::uint32_t m = cand; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            rest += w[static_cast<std::size_t>(v)];
        }
        // ties must survive pruning so the lexicographic rule sees them
        if (rest < best_weight - kTieEps) return;
        int pivot = -1, pivot_deg = -1;
        for (std::uint32_t m = cand; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            const int deg = std::popcount(adj[static_cast<std::size_t>(v)] & cand);
            if (deg > pivot_deg) {
                pivot_deg = deg;
                pivot = v;
            }
        }
        const std::uint32_t pbit = 1u << pivot;
        run(cand & ~(adj[static_cast<std::size_t>(pivot)] | pbit), cur + w[static_cast<std::size_t>(pivot)], set | pbit);
        run(cand & ~pbit, cur, set);
    }
};

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) adj[static_cast<std::size_t>(u)] = static_cast<std::uint32_t>(g.row64(u));
    return adj;
}

}  // namespace detail

/// Maximum-weight independent set, weight of a set = sum of nu_u^2.
/// Branch-and-bound on bitsets: branch on the max-degree candidate, prune on
/// the remaining-weight bound. Ties (within 1e-12) resolve to the
/// lexicographically smallest witness.
inline OracleResult max_weight_independent_set(const Graph& g, const WeightVector& nu) {
    const int n = g.vertex_count();
    if (n > 32) throw InputError(Errc::too_large, "independence oracle is capped at 32 vertices");
    if (nu.size() != n) throw InputError(Errc::size_mismatch, "weight vector order does not match graph");
    std::vector<double> w(static_cast<std::size_t>(n), 0.0);
    for (int u = 0; u < n; ++u) w[static_cast<std::size_t>(u)] = nu.nu[static_cast<std::size_t>(u)] * nu.nu[static_cast<std::size_t>(u)];
    const auto adj = detail::adjacency_masks(g);
    detail::MwisSearch search{adj, w};
    const std::uint32_t all = n == 32 ? 0xffffffffu : ((1u << n) - 1u);
    search.best_weight = 0.0;  // empty set is always independent
    search.run(all, 0.0, 0);
    OracleResult res;
    res.parameter = "weight-independence";
    res.exact_value = search.best_weight;
    res.witness = detail::mask_to_set(search.best_set);
    res.nodes = search.nodes;
    return res;
}

/// Distance-k variant: conflict graph joins u,v when 0 < dist(u,v) <= k, so a
/// distance-k independent set of g is exactly an independent set of the
/// conflict graph. k = 1 reproduces the plain oracle.
inline OracleResult max_weight_distance_k_independent_set(const Graph& g, const WeightVector& nu, int k) {
    const int n = g.vertex_count();
    if (n > 32) throw InputError(Errc::too_large, "independence oracle is capped at 32 vertices");
    if (k < 1) throw InputError(Errc::bad_param, "distance parameter k must be >= 1");
    const DistanceMatrix dm = distance_matrix(g);
    Graph conflict(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int d = dm.at(u, v);
            if (d != DistanceMatrix::kUnreachable && d <= k) conflict.add_edge(u, v);
        }
    OracleResult res = max_weight_independent_set(conflict, nu);
    res.parameter = "distance-" + std::to_string(k) + " weight-independence";
    return res;
}

/// Weight clique parameter kappa* = max over cliques U of sigma(U)^2/w(U),
/// sigma = sum of nu_u. The ratio is not monotone under adding vertices, so
/// every subset of every maximal clique is evaluated (maximal cliques from
/// Bron-Kerbosch with pivoting; subset expansion capped at size 20). With
/// nu = 1 the ratio equals |U| and the result is the clique number.
inline OracleResult max_weight_clique(const Graph& g, const WeightVector& nu) {
    const int n = g.vertex_count();
    if (n > 32) throw InputError(Errc::too_large, "clique oracle is capped at 32 vertices");
    if (nu.size() != n) throw InputError(Errc::size_mismatch, "weight vector order does not match graph");
    const auto adj = detail::adjacency_masks(g);

    double best = -1.0;
    std::uint32_t best_set = 0;
    long long nodes = 0;
    auto consider_subsets = [&](std::uint32_t clique) {
        if (std::popcount(clique) > 20)
            throw InputError(Errc::too_large, "maximal clique exceeds the subset-expansion cap of 20");
        for (std::uint32_t sub = clique; sub; sub = (sub - 1) & clique) {
            double sigma = 0.0, w = 0.0;
            for (std::uint32_t m = sub; m;) {
                const int v = std::countr_zero(m);
                m &= m - 1;
                sigma += nu.nu[static_cast<std::size_t>(v)];
                w += nu.nu[static_cast<std::size_t>(v)] * nu.nu[static_cast<std::size_t>(v)];
            }
            const double val = sigma * sigma / w;
            if (val > best + detail::kTieEps) {
                best = val;
                best_set = sub;
            } else if (std::abs(val - best) <= detail::kTieEps && detail::lex_smaller(sub, best_set)) {
                best_set = sub;
            }
        }
    };

    auto bron_kerbosch = [&](auto&& self, std::uint32_t r, std::uint32_t p, std::uint32_t x) -> void {
        ++nodes;
        if (p == 0 && x == 0) {
            if (r != 0) consider_subsets(r);
            return;
        }
        int pivot = -1, pivot_deg = -1;
        for (std::uint32_t m = p | x; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            const int deg = std::popcount(adj[static_cast<std::size_t>(v)] & p);
            if (deg > pivot_deg) {
                pivot_deg = deg;
                pivot = v;
            }
        }
        std::uint32_t ext = p & ~adj[static_cast<std::size_t>(pivot)];
        while (ext) {
            const int v = std::countr_zero(ext);
            const std::uint32_t vb = 1u << v;
            ext &= ext - 1;
            self(self, r | vb, p & adj[static_cast<std::size_t>(v)], x & adj[static_cast<std::size_t>(v)]);
            p &= ~vb;
            x |= vb;
        }
    };
    const std::uint32_t all = n == 0 ? 0 : (n == 32 ? 0xffffffffu : ((1u << n) - 1u));
    if (all) bron_kerbosch(bron_kerbosch, 0, all, 0);

    OracleResult res;
    res.parameter = "weight-clique";
    res.exact_value = std::max(best, 0.0);
    res.witness = detail::mask_to_set(best_set);
    res.nodes = nodes;
    return res;
}

/// Exact chromatic number: iterative deepening over the color budget with a
/// maximum-clique lower bound; within a budget, vertices are colored in a
/// fixed order (clique first, then by descending degree) and a fresh color is
/// only ever introduced as the single next unused index, which kills color
/// permutation symmetry.
inline OracleResult chromatic_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 12) throw InputError(Errc::too_large, "chromatic oracle is capped at 12 vertices");
    OracleResult res;
    res.parameter = "chromatic-number";
    if (n == 0) {
        res.exact_value = 0.0;
        return res;
    }
    if (g.edge_count() == 0) {
        res.exact_value = 1.0;
        res.coloring.assign(static_cast<std::size_t>(n), 0);
        return res;
    }

    WeightVector ones;
    ones.nu.assign(static_cast<std::size_t>(n), 1.0);
    ones.normalization = Normalization::raw;
    const OracleResult clique = max_weight_clique(g, ones);
    const int omega = static_cast<int>(std::lround(clique.exact_value));
    res.nodes = clique.nodes;

    std::vector<int> order = clique.witness;
    {
        std::vector<char> in_clique(static_cast<std::size_t>(n), 0);
        for (int v : order) in_clique[static_cast<std::size_t>(v)] = 1;
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!in_clique[static_cast<std::size_t>(v)]) rest.push_back(v);
        std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
        order.insert(order.end(), rest.begin(), rest.end());
    }

    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    auto color_dfs = [&](auto&& self, int idx, int used, int budget) -> bool {
        ++res.nodes;
        if (idx == n) return true;
        const int v = order[static_cast<std::size_t>(idx)];
        const int limit = std::min(used, budget - 1);  // colors 0..used-1 plus one fresh
        for (int col = 0; col <= limit; ++col) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (colors[static_cast<std::size_t>(u)] == col) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            colors[static_cast<std::size_t>(v)] = col;
            if (self(self, idx + 1, std::max(used, col + 1), budget)) return true;
            colors[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    for (int budget = std::max(omega, 1); budget <= n; ++budget) {
        std::fill(colors.begin(), colors.end(), -1);
        if (color_dfs(color_dfs, 0, 0, budget)) {
            res.exact_value = budget;
            res.coloring = colors;
            return res;
        }
    }
    throw NumericalError(Errc::no_convergence, "coloring search exhausted all budgets");  // unreachable
}

}  // namespace specbound
