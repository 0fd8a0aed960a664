#pragma once
// Exhaustive catalogs of small connected graphs up to isomorphism, plus a
// stream of random connected graphs for sampled sweeps. Canonical form is the
// minimum, over all vertex permutations, of the triangular edge bitmask; that
// is factorial in n, so the catalog is capped at sizes where it stays cheap.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "random.hpp"

namespace eqlc {

inline constexpr int enumerate_max_n = 11;  // C(11,2) = 55 mask bits

// bit position of edge {u, v} in the triangular mask
inline int tri_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n || u == v) throw std::invalid_argument("tri_index: bad edge");
    // edges (0,1), (0,2), ..., (0,n-1), (1,2), ...
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

inline std::uint64_t edge_mask_of(const graph& g) {
    if (g.n > enumerate_max_n) throw std::invalid_argument("edge_mask_of: graph too large");
    std::uint64_t m = 0;
    for (int u = 0; u < g.n; ++u)
        for_each_bit(g.adj[u], [&](int v) {
            if (v > u) m |= std::uint64_t{1} << tri_index(g.n, u, v);
        });
    return m;
}

inline graph graph_from_mask(int n, std::uint64_t m) {
    if (n > enumerate_max_n) throw std::invalid_argument("graph_from_mask: too large");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((m >> tri_index(n, u, v)) & 1) edges.push_back({u, v});
    return make_graph(n, edges);
}

inline std::uint64_t canonical_edge_mask(const graph& g) {
    if (g.n > enumerate_max_n) throw std::invalid_argument("canonical_edge_mask: too large");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for_each_bit(g.adj[u], [&](int v) {
            if (v > u) edges.push_back({u, v});
        });
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t m = 0;
        for (auto [u, v] : edges) m |= std::uint64_t{1} << tri_index(g.n, perm[u], perm[v]);
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// standard sequence decoding: one tree on n labeled vertices per sequence
inline graph tree_from_pruefer(const std::vector<int>& seq, int n) {
    if (n == 1) return graph(1);
    if (static_cast<int>(seq.size()) != n - 2)
        throw std::invalid_argument("tree_from_pruefer: bad length");
    std::vector<int> deg(n, 1);
    for (int s : seq) {
        if (s < 0 || s >= n) throw std::invalid_argument("tree_from_pruefer: bad label");
        ++deg[s];
    }
    std::vector<std::pair<int, int>> edges;
    vset ready = 0;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) ready |= vbit(v);
    for (int s : seq) {
        int leaf = lowest(ready);
        ready &= ~vbit(leaf);
        edges.push_back({leaf, s});
        if (--deg[s] == 1) ready |= vbit(s);
    }
    int a = lowest(ready);
    ready &= ~vbit(a);
    edges.push_back({a, lowest(ready)});
    return make_graph(n, edges);
}

inline constexpr int catalog_max_n = 7;

// all connected graphs on n vertices up to isomorphism, grown one edge at a
// time from the spanning trees, deduplicating levels by canonical mask
inline std::vector<graph> connected_graphs(int n) {
    if (n < 1 || n > catalog_max_n) throw std::invalid_argument("connected_graphs: bad n");
    if (n == 1) return {graph(1)};

    std::set<std::uint64_t> level;
    long long seqs = 1;
    for (int i = 0; i < n - 2; ++i) seqs *= n;
    std::vector<int> seq(static_cast<size_t>(std::max(0, n - 2)), 0);
    for (long long code = 0; code < seqs; ++code) {
        long long rest = code;
        for (auto& s : seq) {
            s = static_cast<int>(rest % n);
            rest /= n;
        }
        level.insert(canonical_edge_mask(tree_from_pruefer(seq, n)));
    }

    std::vector<std::uint64_t> all(level.begin(), level.end());
    int total_slots = n * (n - 1) / 2;
    for (int m = n - 1; m < total_slots; ++m) {
        std::set<std::uint64_t> next;
        for (std::uint64_t mask : level)
            for (int slot = 0; slot < total_slots; ++slot) {
                if ((mask >> slot) & 1) continue;
                std::uint64_t grown = mask | (std::uint64_t{1} << slot);
                next.insert(canonical_edge_mask(graph_from_mask(n, grown)));
            }
        level = std::move(next);
        all.insert(all.end(), level.begin(), level.end());
    }

    std::vector<graph> out;
    out.reserve(all.size());
    for (std::uint64_t mask : all) out.push_back(graph_from_mask(n, mask));
    return out;
}

// random spanning tree plus a given number of distinct extra edges
inline graph random_connected_graph(rng& r, int n, int extra_edges) {
    if (n < 1 || n > max_vertices) throw std::invalid_argument("random_connected_graph: bad n");
    int slots = n * (n - 1) / 2;
    if (extra_edges < 0 || extra_edges > slots - (n - 1))
        throw std::invalid_argument("random_connected_graph: bad edge count");
    std::vector<int> seq(static_cast<size_t>(std::max(0, n - 2)));
    for (auto& s : seq) s = r.below_int(n);
    graph g = tree_from_pruefer(seq, n);
    int added = 0;
    while (added < extra_edges) {
        int u = r.below_int(n), v = r.below_int(n);
        if (u == v || g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        ++added;
    }
    return g;
}

}  // namespace eqlc
