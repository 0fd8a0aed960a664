#pragma once
// Potential machinery for k in {3,4}:
//   rho(A) = eps*||G[A]|| - nu*|A| + (eps/2)*|A ∩ V1(G)|
// maximized exactly either by subset brute force or by a min-cut reduction
// (project selection: edges are profits, vertices are costs). Also sparseness
// checks of the form den*||G[A]|| <= num*|A| + den*add and exact mad(G).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace eqlc {

struct potential_params {
    int k;
    std::int64_t epsilon, nu, delta;
};

inline potential_params params_for(int k) {
    if (k == 3) return {3, 6, 7, 1};
    if (k == 4) return {4, 4, 5, 1};
    throw std::invalid_argument("k must be 3 or 4");
}

// unique m in [1..k] with k | n-m
inline int mod_star(int n, int k) {
    if (k <= 0 || n < 0) throw std::invalid_argument("mod_star: bad arguments");
    int r = n % k;
    return r == 0 ? k : r;
}

inline int sigma(const graph& g, int k) {
    params_for(k);
    return k == 4 ? popcnt(leaves(g)) % 2 : 0;
}

inline std::int64_t rho_subset(const graph& g, int k, vset a) {
    auto p = params_for(k);
    // V1 is taken in G, not in G[A]; eps/2 is integral for both k
    return p.epsilon * edges_inside(g, a) - p.nu * popcnt(a) + (p.epsilon / 2) * popcnt(a & leaves(g));
}

inline bool check_supermodularity(const graph& g, int k, vset a, vset b) {
    return rho_subset(g, k, a) + rho_subset(g, k, b) <=
           rho_subset(g, k, a | b) + rho_subset(g, k, a & b);
}

// ---- generic subset maximization --------------------------------------------

namespace detail {

inline std::int64_t edge_cost_objective(const graph& g, std::int64_t edge_gain,
                                        const std::vector<std::int64_t>& cost, vset a) {
    std::int64_t s = edge_gain * edges_inside(g, a);
    for_each_bit(a, [&](int v) { s -= cost[v]; });
    return s;
}

struct dinic {
    struct arc {
        int to;
        std::int64_t cap;
    };
    std::vector<arc> arcs;
    std::vector<std::vector<int>> head;
    std::vector<int> level, iter;

    explicit dinic(int n) : head(n), level(n), iter(n) {}

    void add(int u, int v, std::int64_t c) {
        head[u].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({v, c});
        head[v].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({u, 0});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::vector<int> q{s};
        level[s] = 0;
        for (size_t i = 0; i < q.size(); ++i) {
            int v = q[i];
            for (int id : head[v]) {
                if (arcs[id].cap > 0 && level[arcs[id].to] < 0) {
                    level[arcs[id].to] = level[v] + 1;
                    q.push_back(arcs[id].to);
                }
            }
        }
        return level[t] >= 0;
    }

    std::int64_t dfs(int v, int t, std::int64_t f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(head[v].size()); ++i) {
            int id = head[v][i];
            arc& a = arcs[id];
            if (a.cap > 0 && level[a.to] == level[v] + 1) {
                std::int64_t d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    arcs[id ^ 1].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    std::int64_t maxflow(int s, int t) {
        std::int64_t flow = 0;
        while (bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            while (std::int64_t f = dfs(s, t, INT64_MAX)) flow += f;
        }
        return flow;
    }

    // nodes with a residual path to t
    std::vector<char> reaches_t(int t) {
        int n = static_cast<int>(head.size());
        std::vector<std::vector<int>> rev(n);
        for (int u = 0; u < n; ++u)
            for (int id : head[u])
                if (arcs[id].cap > 0) rev[arcs[id].to].push_back(u);
        std::vector<char> seen(n, 0);
        std::vector<int> q{t};
        seen[t] = 1;
        for (size_t i = 0; i < q.size(); ++i)
            for (int u : rev[q[i]])
                if (!seen[u]) {
                    seen[u] = 1;
                    q.push_back(u);
                }
        return seen;
    }
};

}  // namespace detail

struct subset_opt {
    std::int64_t value = 0;
    vset arg_union = 0;  // union of all maximizing subsets
};

// max over all A (empty included) of edge_gain*||G[A]|| - sum_{v in A} cost[v].
// Costs may be negative. arg_union is exact: the maximal min cut's source side,
// which by supermodularity is the union of every maximizer.
inline subset_opt maximize_edge_minus_cost(const graph& g, std::int64_t edge_gain,
                                           const std::vector<std::int64_t>& cost) {
    if (edge_gain <= 0) throw std::invalid_argument("maximize_edge_minus_cost: edge_gain must be positive");
    auto es = g.edges();
    int m = static_cast<int>(es.size());
    int src = 0, snk = 1;
    auto edge_node = [&](int i) { return 2 + i; };
    auto vert_node = [&](int v) { return 2 + m + v; };
    detail::dinic net(2 + m + g.n);
    std::int64_t total = 0;
    const std::int64_t inf = INT64_MAX / 4;
    for (int i = 0; i < m; ++i) {
        net.add(src, edge_node(i), edge_gain);
        total += edge_gain;
        net.add(edge_node(i), vert_node(es[i].first), inf);
        net.add(edge_node(i), vert_node(es[i].second), inf);
    }
    for (int v = 0; v < g.n; ++v) {
        if (cost[v] > 0) net.add(vert_node(v), snk, cost[v]);
        if (cost[v] < 0) {
            net.add(src, vert_node(v), -cost[v]);
            total += -cost[v];
        }
    }
    std::int64_t flow = net.maxflow(src, snk);
    auto reach = net.reaches_t(snk);
    subset_opt out;
    out.value = total - flow;
    for (int v = 0; v < g.n; ++v)
        if (!reach[vert_node(v)]) out.arg_union |= vbit(v);
    if (detail::edge_cost_objective(g, edge_gain, cost, out.arg_union) != out.value)
        throw std::logic_error("maximize_edge_minus_cost: cut does not certify value");
    return out;
}

// same, restricted to nonempty A (forces each vertex in turn). When the best
// value is >= 0 arg_union is the union of all maximizers (any subset scores at
// most the best, so unions of optima stay optimal); when it is negative that
// union can overshoot, so arg_union is the maximal optimum through one vertex.
inline subset_opt maximize_edge_minus_cost_nonempty(const graph& g, std::int64_t edge_gain,
                                                    const std::vector<std::int64_t>& cost) {
    if (g.n == 0) throw std::invalid_argument("maximize nonempty: empty graph");
    std::int64_t big = 1 + edge_gain * g.edge_count();
    for (auto c : cost) big += std::abs(c);
    std::vector<subset_opt> per(g.n);
    for (int v = 0; v < g.n; ++v) {
        auto c = cost;
        c[v] -= big;
        auto r = maximize_edge_minus_cost(g, edge_gain, c);
        per[v] = {r.value - big, r.arg_union};  // best value among A containing v
    }
    subset_opt best = per[0];
    for (int v = 1; v < g.n; ++v)
        if (per[v].value > best.value) best = per[v];
    if (best.value >= 0) {
        for (int v = 0; v < g.n; ++v)
            if (per[v].value == best.value) best.arg_union |= per[v].arg_union;
    }
    if (detail::edge_cost_objective(g, edge_gain, cost, best.arg_union) != best.value)
        throw std::logic_error("maximize nonempty: witness does not certify value");
    return best;
}

// ---- max potential -----------------------------------------------------------

enum class potential_method { brute, flow };

struct potential_result {
    std::int64_t value = 0;
    vset witness = 0;        // a maximizer (== extreme_union)
    vset extreme_union = 0;  // union of all maximizers, the largest maximizer
};

inline constexpr int brute_default_cap = 26;

inline potential_result max_potential_brute(const graph& g, int k, int cap = brute_default_cap) {
    if (g.n > cap) throw std::invalid_argument("max_potential_brute: size cap exceeded");
    auto p = params_for(k);
    vset leaf = leaves(g);
    std::int64_t best = 0;  // empty set
    vset uni = 0;
    // depth-first include/exclude with running edge count
    struct frame {
        const graph& g;
        potential_params p;
        vset leaf;
        std::int64_t& best;
        vset& uni;
        void rec(int v, vset a, std::int64_t edges) {
            if (v == g.n) {
                std::int64_t val =
                    p.epsilon * edges - p.nu * popcnt(a) + (p.epsilon / 2) * popcnt(a & leaf);
                if (val > best) {
                    best = val;
                    uni = a;
                } else if (val == best) {
                    uni |= a;
                }
                return;
            }
            rec(v + 1, a, edges);
            rec(v + 1, a | vbit(v), edges + popcnt(g.adj[v] & a));
        }
    } fr{g, p, leaf, best, uni};
    fr.rec(0, 0, 0);
    if (rho_subset(g, k, uni) != best)
        throw std::logic_error("max_potential_brute: union of maximizers is not a maximizer");
    return {best, uni, uni};
}

inline potential_result max_potential_flow(const graph& g, int k) {
    auto p = params_for(k);
    vset leaf = leaves(g);
    std::vector<std::int64_t> cost(g.n);
    for (int v = 0; v < g.n; ++v)
        cost[v] = p.nu - ((leaf >> v) & 1 ? p.epsilon / 2 : 0);
    auto r = maximize_edge_minus_cost(g, p.epsilon, cost);
    if (rho_subset(g, k, r.arg_union) != r.value)
        throw std::logic_error("max_potential_flow: witness mismatch");
    return {r.value, r.arg_union, r.arg_union};
}

inline potential_result max_potential(const graph& g, int k,
                                      potential_method method = potential_method::flow,
                                      int brute_cap = brute_default_cap) {
    return method == potential_method::brute ? max_potential_brute(g, k, brute_cap)
                                             : max_potential_flow(g, k);
}

// ---- sparseness and mad ------------------------------------------------------

struct sparseness_result {
    bool ok = true;
    vset witness = 0;  // violating set when !ok
};

// true iff den*||G[A]|| <= num*|A| + den*(add_num/add_den) for every nonempty A
inline sparseness_result check_sparseness(const graph& g, std::int64_t num, std::int64_t den,
                                          std::int64_t add_num, std::int64_t add_den = 1) {
    if (den <= 0 || add_den <= 0) throw std::invalid_argument("check_sparseness: denominators must be positive");
    if (g.n == 0) return {true, 0};
    std::vector<std::int64_t> cost(g.n, num * add_den);
    auto r = maximize_edge_minus_cost_nonempty(g, den * add_den, cost);
    if (r.value <= den * add_num) return {true, 0};
    return {false, r.arg_union};
}

struct rational {
    std::int64_t num = 0, den = 1;
    friend bool operator==(const rational&, const rational&) = default;
};

inline rational reduced(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("reduced: nonpositive denominator");
    std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

// exact mad(G) = max over nonempty A of 2||G[A]|| / |A|, by Dinkelbach iteration:
// theta is always an attained density, so f_theta = max(2q||A|| - p|A|) >= 0,
// with equality exactly when theta is the maximum.
inline rational max_average_degree(const graph& g) {
    if (g.n == 0) throw std::invalid_argument("max_average_degree: empty graph");
    if (g.edge_count() == 0) return {0, 1};
    rational theta = reduced(2 * g.edge_count(), g.n);
    for (;;) {
        std::vector<std::int64_t> cost(g.n, theta.num);
        auto r = maximize_edge_minus_cost_nonempty(g, 2 * theta.den, cost);
        if (r.value < 0) throw std::logic_error("max_average_degree: attained density exceeded");
        if (r.value == 0) return theta;
        rational next = reduced(2 * edges_inside(g, r.arg_union), popcnt(r.arg_union));
        if (!(next.num * theta.den > theta.num * next.den))
            throw std::logic_error("max_average_degree: density did not increase");
        theta = next;
    }
}

}  // namespace eqlc
