#pragma once
// Exhaustive list-choosability check. List assignments are enumerated up to
// color renaming as multisets of "supports": round i hands color i to a
// support set of vertices, each vertex ends with exactly k rounds, and the
// support sets are required to be non-increasing as bitmasks so each multiset
// appears once. A monotonicity prune cuts a subtree as soon as the current
// partial lists already admit a valid coloring (adding colors keeps it valid);
// a "no" answer is a concrete complete assignment with no valid coloring.
// Interchangeable vertices (swapping them is an automorphism) are handled by
// orderly generation: a partial support sequence survives only if no such swap
// yields a lexicographically larger sequence after re-sorting, which keeps one
// representative per orbit without changing any verdict.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "random.hpp"

namespace eqlc {

enum class choosable_mode { equitable, se };
enum class choosable_verdict { yes, no, budget_exceeded, inconclusive };

struct choosable_result {
    choosable_verdict verdict = choosable_verdict::yes;
    list_assignment witness;  // for no: lists admitting no valid coloring
    std::int64_t solver_calls = 0;
    std::int64_t complete_assignments = 0;
};

inline constexpr int choosable_default_cap = 10;

namespace detail {

struct choosable_search {
    const graph& g;
    int k;
    choosable_mode mode;
    std::int64_t budget;
    bool use_pruning;

    std::int64_t calls = 0;
    std::int64_t leaves = 0;
    bool out_of_budget = false;
    std::vector<int> need = {};
    list_assignment lists = {};
    std::optional<solver> sv = {};                // reused across probes; rounds are dense ids
    std::vector<std::pair<int, int>> twins = {};  // (a,b), a<b, swapping them fixes the graph
    std::vector<vset> seq = {};                   // supports on the current path
    std::vector<vset> tmp = {};

    // true if no twin swap turns (seq, s_new) into a lexicographically larger
    // sequence once re-sorted descending; appending only ever adds a new
    // minimum, so prefix maximality is necessary for any extension to be
    // maximal, which makes skipping non-canonical prefixes safe
    bool canonical_with(vset s_new) {
        for (auto [a, b] : twins) {
            const vset both = vbit(a) | vbit(b);
            tmp.clear();
            bool changed = false;
            auto add = [&](vset s) {
                vset m = s & both;
                if (m != 0 && m != both) {
                    s ^= both;
                    changed = true;
                }
                tmp.push_back(s);
            };
            for (vset s : seq) add(s);
            add(s_new);
            if (!changed) continue;
            std::sort(tmp.begin(), tmp.end(), std::greater<>());
            int cmp = 0;
            for (std::size_t i = 0; i < seq.size() && cmp == 0; ++i)
                cmp = tmp[i] > seq[i] ? 1 : tmp[i] < seq[i] ? -1 : 0;
            if (cmp == 0) cmp = tmp.back() > s_new ? 1 : -1;
            if (cmp > 0) return false;
        }
        return true;
    }

    // rounds = colors handed out so far; the lists hold round indices, which
    // are already dense, sorted, and unique
    bool solvable(int rounds) {
        ++calls;
        if (budget >= 0 && calls > budget) {
            out_of_budget = true;
            return true;
        }
        if (!sv) {
            auto m = mode == choosable_mode::se ? solve_mode::se : solve_mode::equitable_list;
            sv.emplace(solver{g, k, m});
            sv->setup_static();
        }
        return sv->run(lists, rounds);
    }

    // universe: vertices still owed colors; bound: this round's support must
    // not exceed the previous one
    std::optional<list_assignment> rec(vset universe, vset bound, int round) {
        if (out_of_budget) return std::nullopt;
        bool all_nonempty = true;
        for (int v = 0; v < g.n; ++v)
            if (lists[v].empty()) {
                all_nonempty = false;
                break;
            }
        if (all_nonempty && (use_pruning || universe == 0)) {
            bool s = solvable(round);
            if (out_of_budget) return std::nullopt;
            if (universe == 0) {
                ++leaves;
                if (!s) return lists;
                return std::nullopt;
            }
            if (s) return std::nullopt;  // supersets of solvable lists stay solvable
        }
        if (universe == 0) {
            ++leaves;
            return std::nullopt;
        }
        // the highest uncovered vertex needs a future support containing it,
        // and supports only shrink
        if (vbit(highest(universe)) > bound) return std::nullopt;

        for (vset s = universe;; s = (s - 1) & universe) {
            if (s != 0 && s <= bound && (twins.empty() || canonical_with(s))) {
                vset next_universe = universe;
                for_each_bit(s, [&](int v) {
                    lists[v].push_back(round);
                    if (--need[v] == 0) next_universe &= ~vbit(v);
                });
                seq.push_back(s);
                auto r = rec(next_universe, s, round + 1);
                seq.pop_back();
                for_each_bit(s, [&](int v) {
                    lists[v].pop_back();
                    ++need[v];
                });
                if (r) return r;
                if (out_of_budget) return std::nullopt;
            }
            if (s == 0) break;
        }
        return std::nullopt;
    }
};

}  // namespace detail

inline choosable_result is_choosable(const graph& g, int k, choosable_mode mode,
                                     std::int64_t budget = -1, int cap = choosable_default_cap,
                                     bool use_pruning = true) {
    if (k <= 0) throw std::invalid_argument("is_choosable: bad k");
    if (g.n > cap) throw std::invalid_argument("is_choosable: graph exceeds exhaustive cap");
    choosable_result out;
    if (g.n == 0) return out;

    detail::choosable_search cs{g, k, mode, budget, use_pruning};
    cs.need.assign(g.n, k);
    cs.lists.assign(g.n, {});
    if (use_pruning)
        for (int v = 1; v < g.n; ++v)
            for (int u = v - 1; u >= 0; --u)
                if ((g.adj[u] & ~vbit(v)) == (g.adj[v] & ~vbit(u))) {
                    cs.twins.push_back({u, v});  // nearest lower twin chains each class
                    break;
                }
    auto w = cs.rec(g.vertices(), g.vertices(), 0);
    out.solver_calls = cs.calls;
    out.complete_assignments = cs.leaves;
    if (cs.out_of_budget)
        out.verdict = choosable_verdict::budget_exceeded;
    else if (w) {
        out.verdict = choosable_verdict::no;
        out.witness = *w;
    } else
        out.verdict = choosable_verdict::yes;
    return out;
}

// randomized counterexample hunt for graphs beyond the exhaustive cap: draws
// k-subsets from a pool of k..2k colors; can answer no (with witness) or
// inconclusive, never yes
struct sampled_choosable_result {
    choosable_verdict verdict = choosable_verdict::inconclusive;
    list_assignment witness;
    std::int64_t trials_run = 0;
};

inline sampled_choosable_result sampled_choosable(const graph& g, int k, choosable_mode mode,
                                                  int trials, rng& r) {
    if (k <= 0) throw std::invalid_argument("sampled_choosable: bad k");
    sampled_choosable_result out;
    auto m = mode == choosable_mode::se ? solve_mode::se : solve_mode::equitable_list;
    for (int t = 0; t < trials; ++t) {
        ++out.trials_run;
        int pool = k + r.below_int(k + 1);
        list_assignment L(g.n);
        for (int v = 0; v < g.n; ++v) L[v] = r.sample(pool, k);
        if (solve(g, k, L, m, max_vertices).status == solve_status::none) {
            out.verdict = choosable_verdict::no;
            out.witness = std::move(L);
            return out;
        }
    }
    return out;
}

}  // namespace eqlc
