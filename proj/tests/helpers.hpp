#pragma once
// Shared test fixtures: named small graphs and quick random graphs.

#include <vector>

#include "eqlc/graph.hpp"
#include "eqlc/random.hpp"

namespace tg {

using eqlc::graph;

inline graph path(int n) {
    graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline graph cycle(int n) {
    graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

// center 0, leaves 1..k
inline graph star(int leaves) {
    graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline graph complete(int n) {
    graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

// parts 0..a-1 and a..a+b-1
inline graph complete_bipartite(int a, int b) {
    graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline graph random_graph(eqlc::rng& r, int n, int target_edges) {
    graph g(n);
    int guard = 0;
    for (int e = 0; e < target_edges && guard < 50 * (target_edges + 1);) {
        ++guard;
        int u = r.below_int(n), v = r.below_int(n);
        if (u == v || g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        ++e;
    }
    return g;
}

// random tree plus `extra` additional edges
inline graph random_connected(eqlc::rng& r, int n, int extra) {
    graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, r.below_int(v));
    int guard = 0;
    for (int e = 0; e < extra && guard < 50 * (extra + 1);) {
        ++guard;
        int u = r.below_int(n), v = r.below_int(n);
        if (u == v || g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        ++e;
    }
    return g;
}

}  // namespace tg
