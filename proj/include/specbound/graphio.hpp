#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "specbound/graph.hpp"

namespace specbound {

// graph6 (short form, n < 63):
//
//   byte 0:      n + 63
//   bytes 1..:   the upper-triangle adjacency bits in the order
//                x(0,1), x(0,2), x(1,2), x(0,3), x(1,3), x(2,3), ...
//                packed big-endian six bits per byte, each byte offset by 63,
//                zero-padded to a multiple of six bits.
//
// All bytes lie in 63..126. The long form (n >= 63, lead byte 126) is out of
// contract here and rejected explicitly.

inline Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw InputError(Errc::truncated_bits, "empty graph6 string");
    for (char c : text) {
        const unsigned char b = static_cast<unsigned char>(c);
        if (b < 63 || b > 126) throw InputError(Errc::invalid_char, "graph6 byte out of range 63..126");
    }
    if (static_cast<unsigned char>(text[0]) == 126)
        throw InputError(Errc::unsupported_long_form, "graph6 long form (n >= 63) is not supported");

    const int n = static_cast<unsigned char>(text[0]) - 63;
    const long bit_count = static_cast<long>(n) * (n - 1) / 2;
    const long payload = (bit_count + 5) / 6;
    if (static_cast<long>(text.size()) - 1 < payload)
        throw InputError(Errc::truncated_bits, "graph6 payload shorter than n(n-1)/2 bits");
    if (static_cast<long>(text.size()) - 1 > payload)
        throw InputError(Errc::trailing_data, "graph6 string has trailing bytes");

    Graph g(n);
    long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            const int value = static_cast<unsigned char>(text[static_cast<std::size_t>(1 + bit / 6)]) - 63;
            if ((value >> (5 - bit % 6)) & 1) g.add_edge(row, col);
        }
    }
    // padding bits must be zero
    for (long b = bit; b < payload * 6; ++b) {
        const int value = static_cast<unsigned char>(text[static_cast<std::size_t>(1 + b / 6)]) - 63;
        if ((value >> (5 - b % 6)) & 1) throw InputError(Errc::nonzero_padding, "nonzero graph6 padding bits");
    }
    return g;
}

inline std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n >= 63) throw InputError(Errc::too_large, "graph6 short form requires n < 63");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

struct DimacsResult {
    Graph graph;
    bool duplicate_edges = false;     // duplicates were collapsed
    bool edge_count_mismatch = false; // header m differs from distinct edges
};

// DIMACS `p edge n m` with 1-based `e u v` lines and `c` comments.
inline DimacsResult parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    DimacsResult result;
    bool have_header = false;
    long declared_m = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            long n = -1, m = -1;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                throw InputError(Errc::missing_header, "malformed problem line: " + line);
            if (have_header) throw InputError(Errc::missing_header, "duplicate problem line");
            have_header = true;
            declared_m = m;
            result.graph = Graph(static_cast<int>(n));
            continue;
        }
        if (tag == "e") {
            if (!have_header) throw InputError(Errc::missing_header, "edge line before p line");
            long u = 0, v = 0;
            if (!(ls >> u >> v)) throw InputError(Errc::missing_header, "malformed edge line: " + line);
            const int n = result.graph.vertex_count();
            if (u < 1 || u > n || v < 1 || v > n)
                throw InputError(Errc::vertex_out_of_range, "edge endpoint out of 1.." + std::to_string(n));
            if (u == v) throw InputError(Errc::self_loop, "self-loop in edge line: " + line);
            if (result.graph.has_edge(static_cast<int>(u - 1), static_cast<int>(v - 1)))
                result.duplicate_edges = true;
            else
                result.graph.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw InputError(Errc::missing_header, "unrecognized line: " + line);
    }
    if (!have_header) throw InputError(Errc::missing_header, "missing p edge header");
    if (result.graph.edge_count() != declared_m) result.edge_count_mismatch = true;
    return result;
}

// Plain edge list, one `u v` pair per line, 0-based, `#` starts a comment.
// The vertex count is the largest label plus one.
inline Graph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<long, long>> pairs;
    long max_label = -1;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long u = 0, v = 0;
        if (!(ls >> u)) continue;
        if (!(ls >> v)) throw InputError(Errc::missing_header, "edge list line needs two vertices: " + line);
        if (u < 0 || v < 0) throw InputError(Errc::vertex_out_of_range, "negative vertex label");
        if (u == v) throw InputError(Errc::self_loop, "self-loop in edge list");
        pairs.emplace_back(u, v);
        max_label = std::max({max_label, u, v});
    }
    Graph g(static_cast<int>(max_label + 1));
    for (auto [u, v] : pairs) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    return g;
}

// Canonical labelings:
//   complete n         all pairs
//   cycle n (n >= 3)   i ~ i+1 mod n
//   path n             i ~ i+1
//   star k             vertex 0 is the center of K_{1,k}
//   complete_bipartite a b   left part 0..a-1, right part a..a+b-1
//   petersen           outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5
inline Graph generate(const std::string& family, const std::vector<int>& params = {}) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw InputError(Errc::bad_param, family + " takes " + std::to_string(count) + " parameter(s)");
    };
    if (family == "complete") {
        need(1);
        const int n = params[0];
        if (n < 1) throw InputError(Errc::bad_param, "complete needs n >= 1");
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }
    if (family == "cycle") {
        need(1);
        const int n = params[0];
        if (n < 3) throw InputError(Errc::bad_param, "cycle needs n >= 3");
        Graph g(n);
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
        return g;
    }
    if (family == "path") {
        need(1);
        const int n = params[0];
        if (n < 1) throw InputError(Errc::bad_param, "path needs n >= 1");
        Graph g(n);
        for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
        return g;
    }
    if (family == "star") {
        need(1);
        const int k = params[0];
        if (k < 1) throw InputError(Errc::bad_param, "star needs k >= 1 leaves");
        Graph g(k + 1);
        for (int i = 1; i <= k; ++i) g.add_edge(0, i);
        return g;
    }
    if (family == "complete_bipartite") {
        need(2);
        const int a = params[0], b = params[1];
        if (a < 1 || b < 1) throw InputError(Errc::bad_param, "complete_bipartite needs a, b >= 1");
        Graph g(a + b);
        for (int u = 0; u < a; ++u)
            for (int v = a; v < a + b; ++v) g.add_edge(u, v);
        return g;
    }
    if (family == "petersen") {
        need(0);
        Graph g(10);
        for (int i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        return g;
    }
    throw InputError(Errc::unknown_family, "unknown graph family: " + family);
}

}  // namespace specbound
