#pragma once
// Low-degree structure around branch vertices: threads (paths whose interior
// avoids V3+), the maximal bug at a root (everything reachable through
// low-degree vertices), and the fork / wishbone / jellyfish patterns.

#include <set>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace eqlc {

enum class thread_kind { plain, loose, closed };

struct thread_info {
    thread_kind kind;
    int root;  // V3+ end; plain threads are oriented from the lower-id end
    int end;   // plain: the other V3+ end; loose: the leaf; closed: == root
    int t;     // vertices outside V3+ (the leaf of a loose thread counts)
    std::vector<int> path;  // root..end inclusive; closed threads list root once
};

namespace detail {

struct walk_result {
    std::vector<int> visited;  // after the first step, root excluded
    thread_kind kind;
    int terminal;  // plain: anchor; loose: the leaf; closed: the root
};

// follow low-degree vertices from root through first step x until a V3+
// vertex, a leaf, or the root again
inline walk_result walk_from(const graph& g, vset hi, int root, int x) {
    walk_result w;
    int prev = root, cur = x;
    while (true) {
        w.visited.push_back(cur);
        if (g.degree(cur) == 1) {
            w.kind = thread_kind::loose;
            w.terminal = cur;
            return w;
        }
        int next = lowest(g.adj[cur] & ~vbit(prev));
        if (next == root) {
            w.kind = thread_kind::closed;
            w.terminal = root;
            return w;
        }
        if ((hi >> next) & 1) {
            w.kind = thread_kind::plain;
            w.terminal = next;
            return w;
        }
        prev = cur;
        cur = next;
    }
}

}  // namespace detail

inline std::vector<thread_info> find_threads(const graph& g) {
    vset hi = v3plus(g);
    std::vector<thread_info> out;
    std::set<std::pair<int, vset>> seen;  // (kind, interior set)
    for_each_bit(hi, [&](int r) {
        for_each_bit(g.adj[r] & ~hi, [&](int x) {
            auto w = detail::walk_from(g, hi, r, x);
            thread_info ti;
            ti.kind = w.kind;
            ti.root = r;
            ti.t = static_cast<int>(w.visited.size());
            ti.path.push_back(r);
            for (int v : w.visited) ti.path.push_back(v);
            if (w.kind == thread_kind::plain) {
                ti.end = w.terminal;
                ti.path.push_back(w.terminal);
                if (ti.end < ti.root) {
                    std::reverse(ti.path.begin(), ti.path.end());
                    std::swap(ti.root, ti.end);
                }
            } else if (w.kind == thread_kind::loose) {
                ti.end = w.terminal;
            } else {
                ti.end = r;
            }
            vset interior = vector_to_set(w.visited);
            if (seen.insert({static_cast<int>(w.kind), interior}).second) out.push_back(ti);
        });
    });
    std::sort(out.begin(), out.end(), [](const thread_info& a, const thread_info& b) {
        if (a.root != b.root) return a.root < b.root;
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        if (a.t != b.t) return a.t < b.t;
        return a.path < b.path;
    });
    return out;
}

struct bug_info {
    int root = -1;
    vset members = 0;  // root included
    vset legs = 0;     // vertices on walks that end at another branch vertex
    vset bodies = 0;   // vertices on walks that end at a leaf or back at root
    int lambda = 0;    // directions whose walk to an anchor crosses exactly two
                       // low-degree vertices (root itself counts when low)
    int pi = 0;        // |bodies|
};

inline bug_info maximal_bug(const graph& g, int r) {
    if (r < 0 || r >= g.n) throw std::invalid_argument("maximal_bug: bad root");
    vset hi = v3plus(g);
    bug_info b;
    b.root = r;
    b.members = component_of(g, r, (g.vertices() & ~hi) | vbit(r));

    bool root_low = !((hi >> r) & 1);
    vset consumed = 0;
    for (int x : set_to_vector(g.adj[r] & ~hi)) {
        if ((consumed >> x) & 1) continue;
        auto w = detail::walk_from(g, hi, r, x);
        vset vs = vector_to_set(w.visited);
        switch (w.kind) {
            case thread_kind::plain: {
                b.legs |= vs;
                int crossed = popcnt(vs) + (root_low ? 1 : 0);
                if (crossed == 2) ++b.lambda;
                break;
            }
            case thread_kind::loose:
                b.bodies |= vs;
                break;
            case thread_kind::closed:
                b.bodies |= vs;
                consumed |= vbit(w.visited.back());  // the walk's other exit
                break;
        }
    }
    b.pi = popcnt(b.bodies);
    if (b.members != (vbit(r) | b.legs | b.bodies))
        throw std::logic_error("maximal_bug: directional walks do not cover the bug");
    return b;
}

// any connected set containing its root whose other members all have degree <= 2
inline bool is_bug(const graph& g, int root, vset members) {
    if (root < 0 || root >= g.n) return false;
    if (!((members >> root) & 1)) return false;
    if (component_of(g, root, members) != members) return false;
    return (members & ~vbit(root) & v3plus(g)) == 0;
}

enum class bug_tag { none, fork, wishbone, jellyfish };

struct bug_class {
    bug_tag tag = bug_tag::none;
    int fork_degree = 0;
};

inline bug_class classify_bug(const graph& g, const bug_info& b, int k) {
    if (k != 3 && k != 4) throw std::invalid_argument("classify_bug: k must be 3 or 4");
    auto fresh = maximal_bug(g, b.root);
    if (fresh.members != b.members)
        throw std::invalid_argument("classify_bug: not the maximal bug at its root");

    int d = g.degree(b.root);
    int size = popcnt(b.members);
    bug_class out;
    if ((d == k - 1 || d == k) && size == d + 2 && b.lambda == 1 && b.pi == 0) {
        out.tag = bug_tag::fork;
        out.fork_degree = d;
        return out;
    }
    if (d == k && (g.adj[b.root] & ~b.members) == 0 && size == k + 1 && b.lambda == 0) {
        if (b.pi == 2) out.tag = bug_tag::wishbone;
        if (b.pi == 1) out.tag = bug_tag::jellyfish;
    }
    return out;
}

// |B(r)| <= 2 d(r) + 1 - pi is guaranteed when no thread at r is longer than
// two and no loose thread at r is longer than one
inline bool bug_bound_hypothesis(const graph& g, int r) {
    vset hi = v3plus(g);
    bool ok = true;
    for_each_bit(g.adj[r] & ~hi, [&](int x) {
        auto w = detail::walk_from(g, hi, r, x);
        int t = static_cast<int>(w.visited.size());
        if (w.kind == thread_kind::loose ? t >= 2 : t >= 3) ok = false;
    });
    return ok;
}

inline bool bug_size_bound_holds(const graph& g, const bug_info& b) {
    return popcnt(b.members) <= 2 * g.degree(b.root) + 1 - b.pi;
}

}  // namespace eqlc
