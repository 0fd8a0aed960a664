#pragma once
// Coloring the complement of a maximal bug: shrink each component of the
// complement to a small "core" (its 2-core, or one vertex per tree component,
// plus a routing path when the graph's unique leaf lives outside the core),
// color the core exactly, then peel the remaining "buffer" forest as chains
// and replay them as pendant-path stages. Chains of length one are deferred
// into an independent set Q and stay uncolored.

#include <vector>

#include "safety.hpp"

namespace eqlc {

// repeatedly strip vertices with at most one neighbor inside the set
inline vset two_core(const graph& g, vset within) {
    vset cur = within;
    for (bool changed = true; changed;) {
        changed = false;
        for_each_bit(cur, [&](int v) {
            if (popcnt(g.adj[v] & cur) <= 1) {
                cur &= ~vbit(v);
                changed = true;
            }
        });
    }
    return cur;
}

struct core_buffer_result {
    vset H = 0;                  // the core
    std::vector<vset> fadj;      // buffer forest adjacency (G0 edges minus core edges)
    vset f_vertices = 0;
};

inline core_buffer_result core_buffer(const graph& g, vset b) {
    vset g0 = g.vertices() & ~b;
    core_buffer_result out;
    out.fadj.assign(static_cast<size_t>(g.n), 0);

    vset gl = leaves(g);
    int the_leaf = popcnt(gl) == 1 ? lowest(gl) : -1;

    for (vset z : components(g, g0)) {
        if (edges_inside(g, z) == popcnt(z) - 1) {
            // tree component: a single vertex carries it
            int h = (the_leaf >= 0 && ((z >> the_leaf) & 1)) ? the_leaf : lowest(z);
            out.H |= vbit(h);
        } else {
            vset core = two_core(g, z);
            out.H |= core;
            if (the_leaf >= 0 && ((z >> the_leaf) & 1) && !((core >> the_leaf) & 1)) {
                // route the unique leaf into the core along a shortest path
                std::vector<int> parent(g.n, -1);
                std::vector<int> queue{the_leaf};
                vset seen = vbit(the_leaf);
                int hit = -1;
                for (size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
                    int v = queue[qi];
                    for_each_bit(g.adj[v] & z & ~seen, [&](int u) {
                        if (hit >= 0) return;
                        parent[u] = v;
                        seen |= vbit(u);
                        if ((core >> u) & 1)
                            hit = u;
                        else
                            queue.push_back(u);
                    });
                }
                if (hit < 0) throw std::logic_error("core_buffer: leaf cannot reach the core");
                for (int v = parent[hit]; v >= 0; v = parent[v]) out.H |= vbit(v);
            }
        }
    }

    for_each_bit(g0, [&](int v) {
        vset e = g.adj[v] & g0;
        if ((out.H >> v) & 1) e &= ~out.H;
        out.fadj[v] = e;
    });
    out.f_vertices = g0 & ~out.H;
    for_each_bit(out.H & g0, [&](int v) {
        if (out.fadj[v]) out.f_vertices |= vbit(v);
    });

    // the buffer must be a forest with exactly one core vertex per component
    vset rest = out.f_vertices;
    while (rest) {
        vset comp = vbit(lowest(rest)), frontier = comp;
        while (frontier) {
            vset next = 0;
            for_each_bit(frontier, [&](int u) { next |= out.fadj[u] & out.f_vertices & ~comp; });
            comp |= next;
            frontier = next;
        }
        int edges = 0;
        for_each_bit(comp, [&](int u) { edges += popcnt(out.fadj[u] & comp); });
        edges /= 2;
        if (edges != popcnt(comp) - 1) throw std::logic_error("core_buffer: buffer has a cycle");
        if (popcnt(comp & out.H) != 1)
            throw std::logic_error("core_buffer: buffer component core count is off");
        rest &= ~comp;
    }
    return out;
}

struct good_string_result {
    bool core_colorable = true;  // false: the core admits no coloring from L
    vset H = 0;
    vset Q = 0;          // deferred independent set, stays uncolored
    std::vector<int> f;  // colors on (G minus bug minus Q), -1 elsewhere
    std::vector<safety_stage> stages;
};

inline good_string_result good_string(const graph& g, const bug_info& b, int k,
                                      const list_assignment& L) {
    auto fresh = maximal_bug(g, b.root);
    if (fresh.members != b.members)
        throw std::invalid_argument("good_string: bug is not maximal");

    vset g0 = g.vertices() & ~b.members;
    good_string_result out;
    out.f.assign(static_cast<size_t>(g.n), -1);
    if (!g0) return out;

    auto cb = core_buffer(g, b.members);
    out.H = cb.H;

    auto ind = induced_subgraph(g, cb.H);
    list_assignment Li(ind.g.n);
    for (int i = 0; i < ind.g.n; ++i) Li[i] = L[ind.to_parent[i]];
    auto base = solve(ind.g, k, Li, solve_mode::se, max_vertices);
    if (base.status != solve_status::found) {
        out.core_colorable = false;
        return out;
    }
    for (int i = 0; i < ind.g.n; ++i) out.f[ind.to_parent[i]] = base.coloring[i];

    // peel chains of low buffer vertices off the shrinking forest
    vset rem = g0 & ~cb.H;
    std::vector<std::vector<int>> peels;
    while (rem) {
        vset cur = rem | (cb.H & cb.f_vertices);
        auto fdeg = [&](int v) { return popcnt(cb.fadj[v] & cur); };
        int l = -1;
        for_each_bit(rem, [&](int v) {
            if (l < 0 && fdeg(v) == 1) l = v;
        });
        if (l < 0) throw std::logic_error("good_string: buffer remainder has no leaf");

        std::vector<int> chain{l};
        int prev = -1, curv = l;
        while (true) {
            vset nb = cb.fadj[curv] & cur;
            if (prev >= 0) nb &= ~vbit(prev);
            if (!nb) break;
            int nxt = lowest(nb);
            if ((cb.H >> nxt) & 1) break;
            if (fdeg(nxt) >= 3) break;
            chain.push_back(nxt);
            prev = curv;
            curv = nxt;
        }
        if (chain.size() == 1) {
            out.Q |= vbit(l);
            rem &= ~vbit(l);
        } else {
            rem &= ~vector_to_set(chain);
            peels.push_back(std::move(chain));
        }
    }

    bool independent = true;
    for_each_bit(out.Q, [&](int q) {
        if (g.adj[q] & out.Q) independent = false;
    });
    if (!independent) throw std::logic_error("good_string: deferred set not independent");
    if (popcnt(leaves(g)) <= 1) {
        // with at most one leaf in the whole graph, deferred vertices are
        // always branch vertices
        for_each_bit(out.Q, [&](int q) {
            if (g.degree(q) < 3)
                throw std::logic_error("good_string: deferred vertex is not a branch vertex");
        });
    }

    vset target = g0 & ~out.Q;
    for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
        auto plan = pendant_path_plan(g, *it, k, target);
        if (!plan) throw std::logic_error("good_string: chain has no plan");
        for (auto& st : *plan) out.stages.push_back(std::move(st));
    }
    out.f = replay_stages(g, k, L, out.stages, target, std::move(out.f));
    return out;
}

}  // namespace eqlc
