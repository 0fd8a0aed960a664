#include "doctest.h"
#include "eqlc/graph.hpp"
#include "helpers.hpp"

using namespace eqlc;

TEST_CASE("load_graph accepts a plain edge list") {
    auto r = load_graph("3 2\n0 1\n1 2\n");
    REQUIRE(r.ok());
    CHECK(r.g.n == 3);
    CHECK(r.g.edge_count() == 2);
    CHECK(r.g.has_edge(0, 1));
    CHECK(r.g.has_edge(1, 2));
    CHECK(!r.g.has_edge(0, 2));
    CHECK(r.g.degree(1) == 2);
}

TEST_CASE("load_graph failure modes are distinct") {
    CHECK(load_graph("nonsense").status == load_status::parse_failure);
    CHECK(load_graph("2 1\n0").status == load_status::parse_failure);
    CHECK(load_graph("2 1\n0 1\nextra").status == load_status::parse_failure);
    CHECK(load_graph("65 0\n").status == load_status::too_many_vertices);
    CHECK(load_graph("3 1\n0 3\n").status == load_status::id_out_of_range);
    CHECK(load_graph("3 1\n0 -1\n").status == load_status::id_out_of_range);
    CHECK(load_graph("3 1\n1 1\n").status == load_status::self_loop);
    CHECK(load_graph("3 2\n0 1\n1 0\n").status == load_status::duplicate_edge);
}

TEST_CASE("edge list round trip") {
    auto g = tg::complete_bipartite(2, 3);
    auto r = load_graph(to_edge_list(g));
    REQUIRE(r.ok());
    CHECK(r.g.n == g.n);
    for (int u = 0; u < g.n; ++u) CHECK(r.g.adj[u] == g.adj[u]);
}

TEST_CASE("degree classes") {
    auto k23 = tg::complete_bipartite(2, 3);
    CHECK(v3plus(k23) == (vbit(0) | vbit(1)));
    CHECK(leaves(k23) == 0);
    CHECK(degree_exactly(k23, 2) == (vbit(2) | vbit(3) | vbit(4)));

    auto s5 = tg::star(5);
    CHECK(leaves(s5) == (s5.vertices() & ~vbit(0)));
    CHECK(degree_at_least(s5, 3) == vbit(0));
    CHECK(degree_at_most(tg::cycle(6), 2) == tg::cycle(6).vertices());
}

TEST_CASE("edges_inside and edges_between") {
    auto g = tg::complete(5);
    CHECK(edges_inside(g, g.vertices()) == 10);
    CHECK(edges_inside(g, vbit(0) | vbit(1) | vbit(2)) == 3);
    CHECK(edges_between(g, vbit(0) | vbit(1), vbit(2) | vbit(3)) == 4);
    CHECK_THROWS_AS(edges_between(g, vbit(0), vbit(0)), std::invalid_argument);

    rng r(7);
    for (int it = 0; it < 200; ++it) {
        auto h = tg::random_graph(r, 10, 14);
        vset a = r.next() & h.vertices();
        vset b = ~a & h.vertices();
        CHECK(edges_inside(h, a) + edges_inside(h, b) + edges_between(h, a, b) ==
              h.edge_count());
        int degsum = 0;
        for (int v = 0; v < h.n; ++v) degsum += h.degree(v);
        CHECK(degsum == 2 * h.edge_count());
    }
}

TEST_CASE("induced subgraph keeps parent ids") {
    auto c6 = tg::cycle(6);
    auto sub = induced_subgraph(c6, c6.vertices() & ~vbit(3));
    CHECK(sub.g.n == 5);
    CHECK(sub.g.edge_count() == 4);  // a path
    CHECK(sub.to_parent == std::vector<int>{0, 1, 2, 4, 5});
    CHECK(leaves(sub.g) != 0);
}

TEST_CASE("components and connectivity") {
    graph g(7);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    auto comps = components(g);
    CHECK(comps.size() == 4);
    CHECK(!is_connected(g));
    CHECK(is_connected(tg::cycle(5)));
    CHECK(is_connected(graph(1)));
    CHECK(component_of(g, 0, g.vertices()) == (vbit(0) | vbit(1) | vbit(2)));
}

TEST_CASE("is_hidden") {
    auto k23 = tg::complete_bipartite(2, 3);
    vset h = vbit(0) | vbit(2) | vbit(3) | vbit(4);  // one high-degree vertex plus the other part
    CHECK(is_hidden(k23, h, 0));                     // its whole neighborhood is inside
    CHECK(!is_hidden(k23, h, 2));                    // vertex 2 also touches 1
    CHECK_THROWS_AS(is_hidden(k23, h, 1), std::invalid_argument);
}

TEST_CASE("is_handy") {
    CHECK(!is_handy(tg::cycle(6), vbit(0)));      // deleting one cycle vertex makes new leaves
    CHECK(is_handy(tg::star(5), vbit(5)));        // deleting a leaf keeps the rest intact
    CHECK(is_handy(tg::cycle(6), 0));             // deleting nothing is always handy
    auto k23 = tg::complete_bipartite(2, 3);
    CHECK(is_handy(k23, vbit(2)));                // remaining degrees stay >= 2
}
