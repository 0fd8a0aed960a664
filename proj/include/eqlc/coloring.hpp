#pragma once
// Coloring predicates and an exact backtracking solver over list assignments.
// Three targets: equitable k-coloring (all k class sizes within one of each
// other), equitable list coloring (every class at most ceil(n/k)), and SE list
// coloring (equitable list + at most mod*(n,k) full classes).

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "potential.hpp"

namespace eqlc {

using list_assignment = std::vector<std::vector<int>>;

inline list_assignment uniform_lists(int n, int k) {
    std::vector<int> l(k);
    for (int i = 0; i < k; ++i) l[i] = i;
    return list_assignment(static_cast<size_t>(n), l);
}

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

// ---- predicates ---------------------------------------------------------------
// Mask-parameterized variants look only at the induced subgraph on `within`,
// which lets callers work with partial graphs without copying.

inline bool is_proper_on(const graph& g, vset within, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != g.n) throw std::invalid_argument("is_proper: wrong coloring size");
    bool ok = true;
    for_each_bit(within, [&](int v) {
        if (f[v] < 0) throw std::invalid_argument("is_proper: partial coloring");
        for_each_bit(g.adj[v] & within, [&](int u) {
            if (f[u] == f[v]) ok = false;
        });
    });
    return ok;
}

inline bool is_proper(const graph& g, const std::vector<int>& f) {
    return is_proper_on(g, g.vertices(), f);
}

inline bool respects_lists_on(const list_assignment& L, vset within, const std::vector<int>& f) {
    bool ok = true;
    for_each_bit(within, [&](int v) {
        const auto& l = L[v];
        if (std::find(l.begin(), l.end(), f[v]) == l.end()) ok = false;
    });
    return ok;
}

inline bool is_proper(const graph& g, const list_assignment& L, const std::vector<int>& f) {
    return is_proper(g, f) && respects_lists_on(L, g.vertices(), f);
}

inline std::map<int, int> class_sizes_on(vset within, const std::vector<int>& f) {
    std::map<int, int> s;
    for_each_bit(within, [&](int v) {
        if (f[v] < 0) throw std::invalid_argument("class_sizes: partial coloring");
        ++s[f[v]];
    });
    return s;
}

inline std::map<int, int> class_sizes(const std::vector<int>& f) {
    vset all = f.empty() ? 0 : (f.size() == 64 ? ~vset{0} : (vbit(static_cast<int>(f.size())) - 1));
    return class_sizes_on(all, f);
}

// colors whose class has size exactly ceil(n/k)
inline std::vector<int> full_classes_on(const graph&, vset within, int k, const std::vector<int>& f) {
    int n = popcnt(within);
    std::vector<int> out;
    if (n == 0) return out;
    int hi = ceil_div(n, k);
    for (auto [c, s] : class_sizes_on(within, f))
        if (s == hi) out.push_back(c);
    return out;
}

inline std::vector<int> full_classes(const graph& g, int k, const std::vector<int>& f) {
    return full_classes_on(g, g.vertices(), k, f);
}

enum class equity_mode { k_color, list_cap };

inline bool is_equitable(const graph& g, int k, const std::vector<int>& f, equity_mode mode) {
    if (k <= 0) throw std::invalid_argument("is_equitable: bad k");
    auto sizes = class_sizes_on(g.vertices(), f);
    if (mode == equity_mode::list_cap) {
        if (g.n == 0) return true;
        int hi = ceil_div(g.n, k);
        for (auto [c, s] : sizes)
            if (s > hi) return false;
        return true;
    }
    // k_color: the k classes, empty ones included, differ by at most one
    if (static_cast<int>(sizes.size()) > k) return false;
    int mx = 0, mn = static_cast<int>(sizes.size()) < k ? 0 : g.n;
    for (auto [c, s] : sizes) {
        mx = std::max(mx, s);
        mn = std::min(mn, s);
    }
    return mx - mn <= 1;
}

inline bool is_se_on(const graph& g, vset within, int k, const list_assignment& L,
                     const std::vector<int>& f) {
    if (!is_proper_on(g, within, f) || !respects_lists_on(L, within, f))
        throw std::invalid_argument("is_se: coloring is not proper from the lists");
    int n = popcnt(within);
    if (n == 0) return true;
    int hi = ceil_div(n, k);
    int fulls = 0;
    for (auto [c, s] : class_sizes_on(within, f)) {
        if (s > hi) return false;
        if (s == hi) ++fulls;
    }
    return fulls <= mod_star(n, k);
}

inline bool is_se(const graph& g, int k, const list_assignment& L, const std::vector<int>& f) {
    return is_se_on(g, g.vertices(), k, L, f);
}

// ---- exact solver --------------------------------------------------------------

enum class solve_mode { equitable_k, equitable_list, se };
enum class solve_status { found, none, cap_exceeded };

struct solve_result {
    solve_status status = solve_status::none;
    std::vector<int> coloring;
};

inline constexpr int solve_default_cap = 32;

namespace detail {

// Reusable between calls on the same graph: setup_static() once, then run()
// per list assignment. Steady-state runs allocate nothing, which matters when
// the choosability search makes millions of solvability probes.
struct solver {
    const graph& g;
    int k;
    solve_mode mode;
    int n = 0, hi = 0, lo = 0, mstar = 0;
    int ncolors = 0;
    const std::vector<std::vector<int>>* lists = nullptr;  // dense ids, sorted unique
    std::vector<int> order = {};                           // static: degree desc, id asc
    std::vector<int> f = {};                               // dense colors, -1 unset
    std::vector<int> size_of = {}, avail = {};             // per dense color
    std::vector<std::vector<int>> cand_depth = {};         // per-depth candidate scratch
    vset colored = 0;
    int fulls = 0;
    bool uniform_symmetry = false;
    int used_colors = 0;

    void setup_static() {
        n = g.n;
        hi = ceil_div(g.n, k);
        lo = g.n / k;
        mstar = mod_star(g.n, k);
        order.resize(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
        });
        cand_depth.assign(n, {});
    }

    // dense: per-vertex sorted unique color ids in [0, nc)
    bool run(const std::vector<std::vector<int>>& dense, int nc) {
        lists = &dense;
        ncolors = nc;
        for (int v = 0; v < n; ++v)
            if (dense[v].empty()) return false;
        f.assign(n, -1);
        size_of.assign(ncolors, 0);
        avail.assign(ncolors, 0);
        for (int v = 0; v < n; ++v)
            for (int c : dense[v]) ++avail[c];
        colored = 0;
        fulls = 0;
        used_colors = 0;
        // identical full-size lists admit color-permutation symmetry breaking
        uniform_symmetry = true;
        for (int v = 0; v < n; ++v)
            if (static_cast<int>(dense[v].size()) != k || dense[v] != dense[0]) {
                uniform_symmetry = false;
                break;
            }
        return feasible_after(-1) && rec(0);
    }

    bool feasible_after(int idx) const {
        int remaining = n - idx - 1;
        // capacity: every color can still absorb enough vertices
        long long cap = 0;
        for (int c = 0; c < ncolors; ++c) cap += std::min(avail[c], hi - size_of[c]);
        if (cap < remaining) return false;
        if (mode == solve_mode::se) {
            // beyond hi-1 only full slots remain
            long long cap2 = 0;
            for (int c = 0; c < ncolors; ++c) cap2 += std::max(0, hi - 1 - size_of[c]);
            cap2 += mstar - fulls;
            if (cap2 < remaining) return false;
        }
        if (mode == solve_mode::equitable_k) {
            long long deficit = 0;
            for (int c = 0; c < k; ++c) {
                int need = lo - size_of[c];
                if (need > 0) {
                    if (need > avail[c]) return false;
                    deficit += need;
                }
            }
            if (deficit > remaining) return false;
        }
        return true;
    }

    bool rec(int idx) {
        if (idx == n) return true;
        int v = order[idx];
        const auto& lv = (*lists)[v];
        // least-used color first, ties by id; insertion sort into per-depth
        // scratch keeps the hot path allocation-free
        auto& cand = cand_depth[idx];
        cand.assign(lv.begin(), lv.end());
        for (std::size_t i = 1; i < cand.size(); ++i) {
            int c = cand[i];
            std::size_t j = i;
            while (j > 0 && (size_of[cand[j - 1]] > size_of[c] ||
                             (size_of[cand[j - 1]] == size_of[c] && cand[j - 1] > c))) {
                cand[j] = cand[j - 1];
                --j;
            }
            cand[j] = c;
        }
        for (int c : cand) {
            bool conflict = false;
            for_each_bit(g.adj[v] & colored, [&](int u) {
                if (f[u] == c) conflict = true;
            });
            if (conflict) continue;
            if (size_of[c] >= hi) continue;
            bool makes_full = size_of[c] + 1 == hi;
            if (mode == solve_mode::se && makes_full && fulls >= mstar) continue;
            if (uniform_symmetry && size_of[c] == 0 && c > used_colors) continue;  // new colors in order

            f[v] = c;
            ++size_of[c];
            colored |= vbit(v);
            if (makes_full) ++fulls;
            int used_before = used_colors;
            if (size_of[c] == 1 && c == used_colors) ++used_colors;
            for (int d : lv) --avail[d];

            if (feasible_after(idx) && rec(idx + 1)) return true;

            for (int d : lv) ++avail[d];
            used_colors = used_before;
            if (makes_full) --fulls;
            colored &= ~vbit(v);
            --size_of[c];
            f[v] = -1;
        }
        return false;
    }
};

}  // namespace detail

inline solve_result solve(const graph& g, int k, const list_assignment& L, solve_mode mode,
                          int cap = solve_default_cap) {
    if (k <= 0) throw std::invalid_argument("solve: bad k");
    if (static_cast<int>(L.size()) != g.n) throw std::invalid_argument("solve: wrong list count");
    if (g.n > cap) return {solve_status::cap_exceeded, {}};
    if (g.n == 0) return {solve_status::found, {}};

    // dense color ids
    std::vector<int> colors;
    for (const auto& l : L) {
        if (l.empty()) return {solve_status::none, {}};
        for (int c : l) colors.push_back(c);
    }
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    auto dense = [&](int c) {
        return static_cast<int>(std::lower_bound(colors.begin(), colors.end(), c) - colors.begin());
    };

    if (mode == solve_mode::equitable_k)
        for (int c : colors)
            if (c < 0 || c >= k)
                throw std::invalid_argument("solve: equitable_k needs colors in [0,k)");

    detail::solver s{g, k, mode};
    s.setup_static();
    list_assignment dense_lists(g.n);
    for (int v = 0; v < g.n; ++v) {
        auto l = L[v];
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        for (int c : l) dense_lists[v].push_back(dense(c));
    }
    int nc = mode == solve_mode::equitable_k ? k : static_cast<int>(colors.size());
    if (!s.run(dense_lists, nc)) return {solve_status::none, {}};

    std::vector<int> out(g.n);
    for (int v = 0; v < g.n; ++v) out[v] = colors[s.f[v]];
    solve_result r;
    r.status = solve_status::found;
    r.coloring = std::move(out);
    return r;
}

inline solve_result solve_uniform(const graph& g, int k, solve_mode mode,
                                  int cap = solve_default_cap) {
    return solve(g, k, uniform_lists(g.n, k), mode, cap);
}

}  // namespace eqlc
