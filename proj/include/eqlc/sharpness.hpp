#pragma once
// Families of sparse graphs sitting exactly at the edge of the potential
// threshold: their potential is as large as allowed, yet no coloring of the
// required shape exists. The obstruction is a counting one: the color class of the
// center cannot reach the size every class needs in a tight coloring.

#include <algorithm>
#include <stdexcept>

#include "coloring.hpp"
#include "potential.hpp"

namespace eqlc {

struct sharp_family {
    graph g;
    int center = 0;
    int k = 3;
    int l = 0;  // number of degree-1 vertices
    int n = 0;  // number of two-anchor gadgets
};

// five-leaf star; r = 5 - l of the leaves also reach the center through a
// fresh 3-vertex path; n six-vertex paths hang with both ends on the center
inline sharp_family gen_sharpness3(int l, int n) {
    if (l < 0 || l > 5 || n < 0) throw std::invalid_argument("gen_sharpness3: bad parameters");
    int r = 5 - l;
    int total = 6 + 3 * r + 6 * n;
    if (total > max_vertices) throw std::invalid_argument("gen_sharpness3: too large");
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= 5; ++u) edges.push_back({0, u});
    int next = 6;
    for (int u = 1; u <= r; ++u) {
        edges.push_back({u, next});
        edges.push_back({next, next + 1});
        edges.push_back({next + 1, next + 2});
        edges.push_back({next + 2, 0});
        next += 3;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j + 1 < 6; ++j) edges.push_back({next + j, next + j + 1});
        edges.push_back({0, next});
        edges.push_back({0, next + 5});
        next += 6;
    }
    return {make_graph(total, edges), 0, 3, l, n};
}

// star K_{1,8-r} with r = l mod 2; 4 - (l+r)/2 disjoint leaf pairs get an
// edge; n four-vertex paths hang with both ends on the center
inline sharp_family gen_sharpness4(int l, int n) {
    if (l < 0 || l > 8 || n < 0) throw std::invalid_argument("gen_sharpness4: bad parameters");
    int r = l % 2;
    int j = (l + r) / 2;
    int nleaves = 8 - r;
    int total = 9 - r + 4 * n;
    if (total > max_vertices) throw std::invalid_argument("gen_sharpness4: too large");
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= nleaves; ++u) edges.push_back({0, u});
    for (int p = 0; p < 4 - j; ++p) edges.push_back({2 * p + 1, 2 * p + 2});
    int next = nleaves + 1;
    for (int i = 0; i < n; ++i) {
        for (int q = 0; q + 1 < 4; ++q) edges.push_back({next + q, next + q + 1});
        edges.push_back({0, next});
        edges.push_back({0, next + 3});
        next += 4;
    }
    return {make_graph(total, edges), 0, 4, l, n};
}

inline int max_independent(const graph& g, vset within) {
    if (!within) return 0;
    int v = lowest(within);
    int excl = max_independent(g, within & ~vbit(v));
    int incl = 1 + max_independent(g, within & ~vbit(v) & ~g.adj[v]);
    return std::max(excl, incl);
}

inline bool has_triangle(const graph& g) {
    for (int u = 0; u < g.n; ++u) {
        bool found = false;
        for_each_bit(g.adj[u], [&](int v) {
            if (v > u && (g.adj[u] & g.adj[v])) found = true;
        });
        if (found) return true;
    }
    return false;
}

struct sharpness_report {
    long long rho_value = 0;
    bool rho_matches_brute = true;  // only checked up to brute_cap vertices
    int leaf_count = 0;
    long long class_cap = 0;     // best possible size of the center's class
    long long class_floor = 0;   // size every class must reach when tight
    bool cap_blocks = false;     // class_cap < class_floor
    bool triangle_free = false;
    solve_status uniform_status = solve_status::found;
    bool solver_confirms = false;  // only meaningful when run_solver
};

// the center's class in any proper coloring picks at most an independent set
// avoiding N(x) from each component of G - x, plus x itself
inline long long center_class_cap(const graph& g, int x) {
    long long cap = 1;
    for (vset z : components(g, g.vertices() & ~vbit(x))) cap += max_independent(g, z & ~g.adj[x]);
    return cap;
}

inline sharpness_report verify_sharpness(const sharp_family& fam, bool run_solver,
                                         int brute_cap = 22) {
    const graph& g = fam.g;
    int k = fam.k;
    sharpness_report rep;
    rep.rho_value = max_potential(g, k, potential_method::flow).value;
    if (g.n <= brute_cap)
        rep.rho_matches_brute = max_potential(g, k, potential_method::brute).value == rep.rho_value;
    rep.leaf_count = popcnt(leaves(g));
    rep.class_cap = center_class_cap(g, fam.center);
    int hi = ceil_div(g.n, k);
    rep.class_floor = mod_star(g.n, k) == k ? hi : hi - 1;
    rep.cap_blocks = rep.class_cap < rep.class_floor;
    rep.triangle_free = !has_triangle(g);
    if (run_solver) {
        auto sr = solve_uniform(g, k, solve_mode::se, max_vertices);
        rep.uniform_status = sr.status;
        rep.solver_confirms = sr.status == solve_status::none;
    }
    return rep;
}

}  // namespace eqlc
