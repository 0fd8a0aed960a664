#pragma once
// Charge bookkeeping for the sparse-graph argument, in half-units so every
// amount is an integer. Vertices start at -2*nu (+eps if a leaf), edges at
// 2*eps, so the total equals twice the potential of the whole vertex set.
// Relative to a vertex set Y the rules move charge so that everything inside
// Y is left alone, edges outside G[Y] are drained, and the final charge of
// the outside vertices can be bounded below vertex by vertex.

#include <utility>
#include <vector>

#include "potential.hpp"
#include "structure.hpp"

namespace eqlc {

struct charge_state {
    std::vector<int> vertex_halves;
    std::vector<std::pair<int, int>> edge_list;  // u < v, ascending
    std::vector<int> edge_halves;
};

inline charge_state initial_charges(const graph& g, int k) {
    auto p = params_for(k);
    int eps = static_cast<int>(p.epsilon), nu = static_cast<int>(p.nu);
    charge_state cs;
    cs.vertex_halves.assign(static_cast<size_t>(g.n), 0);
    vset lv = leaves(g);
    for (int v = 0; v < g.n; ++v)
        cs.vertex_halves[v] = -2 * nu + (((lv >> v) & 1) ? eps : 0);
    for (int u = 0; u < g.n; ++u)
        for_each_bit(g.adj[u], [&](int v) {
            if (v <= u) return;
            cs.edge_list.emplace_back(u, v);
            cs.edge_halves.push_back(2 * eps);
        });
    return cs;
}

// hi endpoints of the maximal low path through a low vertex v
inline vset thread_ends_about(const graph& g, int v) {
    vset hi = v3plus(g);
    vset ends = 0;
    for_each_bit(g.adj[v], [&](int x) {
        int prev = v, cur = x;
        vset seen = vbit(v);
        while (true) {
            if ((hi >> cur) & 1) {
                ends |= vbit(cur);
                break;
            }
            if ((seen >> cur) & 1) break;  // came back around
            seen |= vbit(cur);
            vset nb = g.adj[cur] & ~vbit(prev);
            if (!nb) break;  // ran into a leaf
            prev = cur;
            cur = lowest(nb);
        }
    });
    return ends;
}

inline charge_state apply_rules(const graph& g, int k, vset y) {
    auto p = params_for(k);
    int eps = static_cast<int>(p.epsilon);
    auto cs = initial_charges(g, k);

    // boundary edges hand everything to their outside end; edges fully
    // outside split evenly
    for (size_t i = 0; i < cs.edge_list.size(); ++i) {
        auto [u, v] = cs.edge_list[i];
        bool uy = (y >> u) & 1, vy = (y >> v) & 1;
        if (uy && vy) continue;
        if (uy || vy) {
            cs.vertex_halves[uy ? v : u] += cs.edge_halves[i];
        } else {
            cs.vertex_halves[u] += eps;
            cs.vertex_halves[v] += eps;
        }
        cs.edge_halves[i] = 0;
    }

    // branch vertices outside Y pay their bug: one half-unit per leg,
    // two per body, skipping members inside Y
    for_each_bit(v3plus(g) & ~y, [&](int r) {
        auto b = maximal_bug(g, r);
        for_each_bit(b.legs & ~y, [&](int w) {
            cs.vertex_halves[r] -= 1;
            cs.vertex_halves[w] += 1;
        });
        for_each_bit(b.bodies & ~y, [&](int w) {
            cs.vertex_halves[r] -= 2;
            cs.vertex_halves[w] += 2;
        });
    });

    // degree-2 vertices touching Y pass two half-units along
    for_each_bit(degree_exactly(g, 2) & ~y, [&](int v) {
        if ((g.adj[v] & y) == 0) return;
        vset other = g.adj[v] & ~y;
        if (popcnt(other) == 1) {
            cs.vertex_halves[v] -= 2;
            cs.vertex_halves[lowest(other)] += 2;
        }
    });
    return cs;
}

struct vertex_report {
    int v = -1;
    int final_halves = 0;
    bool in_scope = false;
    int claim_halves = 0;  // meaningful only when in_scope
    bool ok = true;        // !in_scope || final >= claim
};

struct audit_result {
    bool identity_holds = false;
    bool conservation_holds = false;
    bool outside_edges_cleared = false;
    bool y_untouched = false;
    bool all_in_scope_ok = false;
    std::vector<vertex_report> reports;  // one per vertex outside Y
    std::vector<int> fork_roots_outside_y;
    charge_state final;
};

// scope test plus lower bound for one vertex outside Y
inline vertex_report scope_claim(const graph& g, int k, vset y, int v) {
    vertex_report rep;
    rep.v = v;
    int d = g.degree(v);
    if (d == 1) {
        int nb = lowest(g.adj[v]);
        rep.in_scope = g.degree(nb) >= 3;
        rep.claim_halves = 0;
    } else if (d == 2) {
        vset comp = component_of(g, v, g.vertices());
        bool has_hi = (comp & v3plus(g)) != 0;
        bool s1 = (g.adj[v] & y) != 0;
        bool s2 = (thread_ends_about(g, v) & y) == 0;
        bool s3 = false;
        for_each_bit(g.adj[v] & degree_exactly(g, 2), [&](int w) {
            if ((g.adj[w] & ~vbit(v) & ~y) == 0) s3 = true;
        });
        rep.in_scope = has_hi && (s1 || s2 || s3);
        rep.claim_halves = 0;
    } else if (d >= 3) {
        auto b = maximal_bug(g, v);
        int size = popcnt(b.members);
        int bound = 0, claim = 0;
        if (k == 3) {
            bound = d == 3 ? 4 - b.pi : 2 * d + 1 - b.pi;
            claim = d == 3 ? 1 : 4 * d - 14;
        } else {
            bound = d == 3 ? 3 - b.pi : d == 4 ? 5 - b.pi : 2 * d + 1 - b.pi;
            claim = d == 3 ? 0 : d == 4 ? 2 : 2 * d - 10;
        }
        rep.in_scope = size <= bound;
        rep.claim_halves = claim;
    }
    return rep;
}

inline audit_result audit(const graph& g, int k, vset y) {
    auto before = initial_charges(g, k);
    auto after = apply_rules(g, k, y);
    audit_result out;

    long long total_before = 0, total_after = 0, outside_v = 0;
    for (int v = 0; v < g.n; ++v) {
        total_before += before.vertex_halves[v];
        total_after += after.vertex_halves[v];
        if (!((y >> v) & 1)) outside_v += after.vertex_halves[v];
    }
    out.outside_edges_cleared = true;
    out.y_untouched = true;
    for (size_t i = 0; i < before.edge_list.size(); ++i) {
        total_before += before.edge_halves[i];
        total_after += after.edge_halves[i];
        auto [u, v] = before.edge_list[i];
        bool inside = ((y >> u) & 1) && ((y >> v) & 1);
        if (!inside && after.edge_halves[i] != 0) out.outside_edges_cleared = false;
        if (inside && after.edge_halves[i] != before.edge_halves[i]) out.y_untouched = false;
    }
    for_each_bit(y, [&](int v) {
        if (after.vertex_halves[v] != before.vertex_halves[v]) out.y_untouched = false;
    });

    long long rho_all = 2LL * rho_subset(g, k, g.vertices());
    long long rho_y = 2LL * rho_subset(g, k, y);
    out.conservation_holds = total_after == total_before && total_before == rho_all;
    out.identity_holds = rho_all == rho_y + outside_v;

    out.all_in_scope_ok = true;
    for_each_bit(g.vertices() & ~y, [&](int v) {
        auto rep = scope_claim(g, k, y, v);
        rep.final_halves = after.vertex_halves[v];
        rep.ok = !rep.in_scope || rep.final_halves >= rep.claim_halves;
        if (!rep.ok) out.all_in_scope_ok = false;
        out.reports.push_back(rep);
    });
    vset fork_candidates = degree_exactly(g, k - 1) | degree_exactly(g, k);
    for_each_bit(fork_candidates & ~y, [&](int r) {
        if (classify_bug(g, maximal_bug(g, r), k).tag == bug_tag::fork)
            out.fork_roots_outside_y.push_back(r);
    });
    out.final = std::move(after);
    return out;
}

// roots whose bug is tagged as a fork; the vertex-by-vertex bounds are
// guaranteed only when Y covers all of them
inline std::vector<int> fork_roots(const graph& g, int k) {
    std::vector<int> out;
    for_each_bit(degree_exactly(g, k - 1) | degree_exactly(g, k), [&](int r) {
        if (classify_bug(g, maximal_bug(g, r), k).tag == bug_tag::fork) out.push_back(r);
    });
    return out;
}

}  // namespace eqlc
