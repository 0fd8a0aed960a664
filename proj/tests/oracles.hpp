#pragma once
// Independent brute-force oracles for cross-checking the library. These
// deliberately avoid the library's search code: plain odometer enumeration
// plus first-principles predicates.

#include <map>
#include <optional>
#include <vector>

#include "eqlc/coloring.hpp"
#include "eqlc/graph.hpp"

namespace oracle {

using eqlc::graph;
using eqlc::list_assignment;

inline bool proper(const graph& g, const std::vector<int>& f) {
    for (auto [u, v] : g.edges())
        if (f[u] == f[v]) return false;
    return true;
}

inline std::map<int, int> sizes(const std::vector<int>& f) {
    std::map<int, int> s;
    for (int c : f) ++s[c];
    return s;
}

inline bool equitable_k(const graph& g, int k, const std::vector<int>& f) {
    auto s = sizes(f);
    if (static_cast<int>(s.size()) > k) return false;
    int mx = 0;
    int mn = g.n;
    if (static_cast<int>(s.size()) < k) mn = 0;
    for (auto [c, cnt] : s) {
        if (cnt > mx) mx = cnt;
        if (cnt < mn) mn = cnt;
    }
    if (g.n == 0) return true;
    return mx - mn <= 1;
}

inline bool equitable_list(const graph& g, int k, const std::vector<int>& f) {
    int hi = (g.n + k - 1) / k;
    for (auto [c, cnt] : sizes(f))
        if (cnt > hi) return false;
    return true;
}

inline bool strongly_equitable(const graph& g, int k, const std::vector<int>& f) {
    if (!equitable_list(g, k, f)) return false;
    int hi = (g.n + k - 1) / k;
    int r = g.n % k;
    int mstar = r == 0 ? k : r;
    int fulls = 0;
    for (auto [c, cnt] : sizes(f))
        if (cnt == hi) ++fulls;
    return fulls <= mstar;
}

// enumerate every assignment f with f[v] in L[v]; return the first satisfying
// proper + the mode predicate, in odometer order
inline std::optional<std::vector<int>> brute_solve(const graph& g, int k, const list_assignment& L,
                                                   eqlc::solve_mode mode) {
    if (g.n == 0) return std::vector<int>{};
    std::vector<size_t> idx(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        if (L[v].empty()) return std::nullopt;
    while (true) {
        std::vector<int> f(g.n);
        for (int v = 0; v < g.n; ++v) f[v] = L[v][idx[v]];
        bool ok = proper(g, f);
        if (ok) {
            switch (mode) {
                case eqlc::solve_mode::equitable_k: ok = equitable_k(g, k, f); break;
                case eqlc::solve_mode::equitable_list: ok = equitable_list(g, k, f); break;
                case eqlc::solve_mode::se: ok = strongly_equitable(g, k, f); break;
            }
        }
        if (ok) return f;
        int p = g.n - 1;
        while (p >= 0 && idx[p] + 1 == L[p].size()) idx[p--] = 0;
        if (p < 0) return std::nullopt;
        ++idx[p];
    }
}

}  // namespace oracle
