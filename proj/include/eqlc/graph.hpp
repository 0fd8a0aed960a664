#pragma once
// Bitmask graphs on up to 64 vertices. Vertex sets are uint64 masks throughout;
// everything downstream (potential, coloring, structure) builds on this.

#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eqlc {

using vset = std::uint64_t;
inline constexpr int max_vertices = 64;

inline constexpr vset vbit(int v) { return vset{1} << v; }
inline int popcnt(vset s) { return std::popcount(s); }
inline int lowest(vset s) { return std::countr_zero(s); }   // pre: s != 0
inline int highest(vset s) { return 63 - std::countl_zero(s); }

// iterate set bits low to high
template <class F>
inline void for_each_bit(vset s, F&& f) {
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        f(v);
    }
}

inline std::vector<int> set_to_vector(vset s) {
    std::vector<int> out;
    for_each_bit(s, [&](int v) { out.push_back(v); });
    return out;
}

inline vset vector_to_set(const std::vector<int>& vs) {
    vset s = 0;
    for (int v : vs) s |= vbit(v);
    return s;
}

struct graph {
    int n = 0;
    std::vector<vset> adj;

    graph() = default;
    explicit graph(int n_) : n(n_), adj(n_, 0) {
        if (n_ < 0 || n_ > max_vertices) throw std::invalid_argument("graph: bad vertex count");
    }

    vset vertices() const { return n == 64 ? ~vset{0} : vbit(n) - 1; }
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("graph: self loop");
        adj[u] |= vbit(v);
        adj[v] |= vbit(u);
    }
    int degree(int v) const { return popcnt(adj[v]); }
    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n; ++v) s += degree(v);
        return s / 2;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for_each_bit(adj[u] & ~(vbit(u + 1) - 1), [&](int v) { out.push_back({u, v}); });
        return out;
    }
};

inline graph make_graph(int n, const std::vector<std::pair<int, int>>& es) {
    graph g(n);
    for (auto [u, v] : es) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("make_graph: id out of range");
        g.add_edge(u, v);
    }
    return g;
}

// ---- loader -----------------------------------------------------------------
// Text format: "n m" header, then m lines "u v". Each failure mode gets its own
// status so callers can report precisely.

enum class load_status {
    ok,
    parse_failure,
    too_many_vertices,
    id_out_of_range,
    self_loop,
    duplicate_edge,
};

inline const char* to_string(load_status s) {
    switch (s) {
        case load_status::ok: return "ok";
        case load_status::parse_failure: return "parse failure";
        case load_status::too_many_vertices: return "too many vertices";
        case load_status::id_out_of_range: return "vertex id out of range";
        case load_status::self_loop: return "self loop";
        case load_status::duplicate_edge: return "duplicate edge";
    }
    return "?";
}

struct load_result {
    load_status status = load_status::parse_failure;
    graph g;
    std::string detail;
    bool ok() const { return status == load_status::ok; }
};

inline load_result load_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    load_result r;
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) {
        r.detail = "expected header: n m";
        return r;
    }
    if (n > max_vertices) {
        r.status = load_status::too_many_vertices;
        r.detail = "n = " + std::to_string(n) + " exceeds 64";
        return r;
    }
    graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) {
            r.detail = "expected edge " + std::to_string(i + 1) + " of " + std::to_string(m);
            return r;
        }
        if (u < 0 || u >= n || v < 0 || v >= n) {
            r.status = load_status::id_out_of_range;
            r.detail = "edge " + std::to_string(u) + " " + std::to_string(v);
            return r;
        }
        if (u == v) {
            r.status = load_status::self_loop;
            r.detail = "vertex " + std::to_string(u);
            return r;
        }
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v))) {
            r.status = load_status::duplicate_edge;
            r.detail = "edge " + std::to_string(u) + " " + std::to_string(v);
            return r;
        }
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    std::string trailing;
    if (in >> trailing) {
        r.detail = "trailing input: " + trailing;
        return r;
    }
    r.status = load_status::ok;
    r.g = std::move(g);
    return r;
}

inline std::string to_edge_list(const graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

// ---- degree classes ---------------------------------------------------------

inline vset degree_exactly(const graph& g, int d) {
    vset s = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == d) s |= vbit(v);
    return s;
}

inline vset degree_at_least(const graph& g, int d) {
    vset s = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) >= d) s |= vbit(v);
    return s;
}

inline vset degree_at_most(const graph& g, int d) {
    vset s = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) <= d) s |= vbit(v);
    return s;
}

inline vset leaves(const graph& g) { return degree_exactly(g, 1); }
inline vset v3plus(const graph& g) { return degree_at_least(g, 3); }

// ---- subset helpers ---------------------------------------------------------

inline int edges_inside(const graph& g, vset a) {
    int s = 0;
    for_each_bit(a, [&](int v) { s += popcnt(g.adj[v] & a); });
    return s / 2;
}

// ||X,Y|| for disjoint X,Y
inline int edges_between(const graph& g, vset x, vset y) {
    if (x & y) throw std::invalid_argument("edges_between: sets overlap");
    int s = 0;
    for_each_bit(x, [&](int v) { s += popcnt(g.adj[v] & y); });
    return s;
}

struct induced_graph {
    graph g;
    std::vector<int> to_parent;  // local id -> parent id
};

inline induced_graph induced_subgraph(const graph& g, vset a) {
    induced_graph out;
    out.to_parent = set_to_vector(a);
    std::vector<int> local(g.n, -1);
    for (int i = 0; i < static_cast<int>(out.to_parent.size()); ++i) local[out.to_parent[i]] = i;
    out.g = graph(static_cast<int>(out.to_parent.size()));
    for (int i = 0; i < out.g.n; ++i) {
        for_each_bit(g.adj[out.to_parent[i]] & a, [&](int w) {
            if (local[w] > i) out.g.add_edge(i, local[w]);
        });
    }
    return out;
}

// connected component containing v, restricted to `within`
inline vset component_of(const graph& g, int v, vset within) {
    if (!((within >> v) & 1)) return 0;
    vset comp = vbit(v), frontier = vbit(v);
    while (frontier) {
        vset next = 0;
        for_each_bit(frontier, [&](int u) { next |= g.adj[u] & within & ~comp; });
        comp |= next;
        frontier = next;
    }
    return comp;
}

inline std::vector<vset> components(const graph& g, vset within) {
    std::vector<vset> out;
    vset rest = within;
    while (rest) {
        vset c = component_of(g, lowest(rest), within);
        out.push_back(c);
        rest &= ~c;
    }
    return out;
}

inline std::vector<vset> components(const graph& g) { return components(g, g.vertices()); }

inline bool is_connected(const graph& g) {
    if (g.n <= 1) return true;
    return popcnt(component_of(g, 0, g.vertices())) == g.n;
}

// v in H is hidden when all its neighbors lie in H
inline bool is_hidden(const graph& g, vset h, int v) {
    if (!((h >> v) & 1)) throw std::invalid_argument("is_hidden: v not in H");
    return (g.adj[v] & ~h) == 0;
}

// H = G - B is handy when deleting B creates no new leaves
inline bool is_handy(const graph& g, vset b) {
    vset rest = g.vertices() & ~b;
    bool ok = true;
    for_each_bit(rest, [&](int v) {
        if (popcnt(g.adj[v] & rest) == 1 && g.degree(v) != 1) ok = false;
    });
    return ok;
}

}  // namespace eqlc
