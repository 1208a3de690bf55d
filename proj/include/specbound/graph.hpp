#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "specbound/error.hpp"

namespace specbound {

/// Simple undirected graph on vertices 0..n-1. Adjacency is stored as one
/// bitset row per vertex (64-bit words), kept symmetric with a zero diagonal.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), words_(word_count(n)), bits_(static_cast<std::size_t>(n) * word_count(n), 0) {
        if (n < 0) throw InputError(Errc::bad_param, "vertex count must be nonnegative");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (bits_[row_offset(u) + static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError(Errc::self_loop, "self-loop " + std::to_string(u));
        if (has_edge(u, v)) return;
        set_bit(u, v);
        set_bit(v, u);
        ++edge_count_;
    }

    int degree(int u) const {
        check_vertex(u);
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(bits_[row_offset(u) + static_cast<std::size_t>(w)]);
        return d;
    }

    std::vector<int> neighbors(int u) const {
        check_vertex(u);
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (has_edge(u, v)) out.push_back(v);
        return out;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    /// Row u as a single word; only valid while n <= 64.
    std::uint64_t row64(int u) const {
        check_vertex(u);
        return bits_[row_offset(u)];
    }

    bool operator==(const Graph& other) const { return n_ == other.n_ && bits_ == other.bits_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    static int word_count(int n) { return n <= 0 ? 1 : (n + 63) / 64; }
    std::size_t row_offset(int u) const { return static_cast<std::size_t>(u) * static_cast<std::size_t>(words_); }

    void set_bit(int u, int v) { bits_[row_offset(u) + static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64); }

    void check_vertex(int u) const {
        if (u < 0 || u >= n_) throw InputError(Errc::index_out_of_range, "vertex " + std::to_string(u) + " out of range");
    }

    int n_ = 0;
    int words_ = 1;
    std::vector<std::uint64_t> bits_;
    int edge_count_ = 0;
};

/// All-pairs BFS distances. Unreachable pairs hold kUnreachable.
struct DistanceMatrix {
    static constexpr int kUnreachable = -1;

    int n = 0;
    std::vector<int> dist;  // row-major n*n

    int at(int u, int v) const { return dist[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)]; }
    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }

    int diameter() const {
        int d = 0;
        for (int x : dist) {
            if (x == kUnreachable) return kUnreachable;
            if (x > d) d = x;
        }
        return d;
    }
};

inline DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix dm;
    dm.n = n;
    dm.dist.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), DistanceMatrix::kUnreachable);
    std::vector<int> queue(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        auto* row = dm.dist.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n);
        row[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            for (int v = 0; v < n; ++v) {
                if (row[v] == DistanceMatrix::kUnreachable && g.has_edge(u, v)) {
                    row[v] = row[u] + 1;
                    queue[tail++] = v;
                }
            }
        }
    }
    return dm;
}

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (!seen[v] && g.has_edge(u, v)) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n;
}

}  // namespace specbound
