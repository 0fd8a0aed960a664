#include "doctest.h"
#include "eqlc/potential.hpp"
#include "helpers.hpp"

using namespace eqlc;

TEST_CASE("parameters") {
    auto p3 = params_for(3);
    CHECK(p3.epsilon == 6);
    CHECK(p3.nu == 7);
    CHECK(p3.delta == 1);
    auto p4 = params_for(4);
    CHECK(p4.epsilon == 4);
    CHECK(p4.nu == 5);
    CHECK_THROWS_AS(params_for(5), std::invalid_argument);
}

TEST_CASE("mod_star") {
    CHECK(mod_star(6, 3) == 3);
    CHECK(mod_star(7, 3) == 1);
    CHECK(mod_star(4, 3) == 1);
    CHECK(mod_star(0, 3) == 3);
    CHECK(mod_star(9, 4) == 1);
    for (int k = 2; k <= 6; ++k)
        for (int n = 0; n <= 40; ++n) {
            int m = mod_star(n, k);
            CHECK(m >= 1);
            CHECK(m <= k);
            CHECK((n - m) % k == 0);
        }
}

TEST_CASE("sigma") {
    CHECK(sigma(tg::star(5), 3) == 0);
    CHECK(sigma(tg::star(5), 4) == 1);
    CHECK(sigma(tg::star(8), 4) == 0);
    CHECK(sigma(tg::path(2), 4) == 0);
    CHECK(sigma(tg::cycle(4), 4) == 0);
}

TEST_CASE("rho on frozen subsets") {
    CHECK(rho_subset(tg::path(3), 3, 0) == 0);
    CHECK(rho_subset(tg::path(3), 3, tg::path(3).vertices()) == -3);
    CHECK(rho_subset(tg::star(5), 3, tg::star(5).vertices()) == 3);
    auto k23 = tg::complete_bipartite(2, 3);
    CHECK(rho_subset(k23, 3, k23.vertices()) == 1);
    CHECK(rho_subset(tg::complete(4), 4, tg::complete(4).vertices()) == 4);
    CHECK(rho_subset(tg::star(8), 4, tg::star(8).vertices()) == 3);
    // V1 counts leaves of G, not of G[A]: a path's interior pair has no leaf bonus
    CHECK(rho_subset(tg::path(4), 3, vbit(1) | vbit(2)) == 6 - 14);
}

TEST_CASE("max potential, brute") {
    auto c6 = max_potential_brute(tg::cycle(6), 3);
    CHECK(c6.value == 0);
    CHECK(c6.extreme_union == 0);

    auto s5 = max_potential_brute(tg::star(5), 3);
    CHECK(s5.value == 3);
    CHECK(s5.extreme_union == tg::star(5).vertices());

    auto s8 = max_potential_brute(tg::star(8), 4);
    CHECK(s8.value == 3);
    CHECK(s8.extreme_union == tg::star(8).vertices());

    auto k23 = max_potential_brute(tg::complete_bipartite(2, 3), 3);
    CHECK(k23.value == 1);

    CHECK_THROWS_AS(max_potential_brute(tg::cycle(6), 3, 5), std::invalid_argument);
}

TEST_CASE("flow matches brute") {
    rng r(11);
    for (int it = 0; it < 400; ++it) {
        int n = 2 + r.below_int(11);
        auto g = tg::random_graph(r, n, r.below_int(2 * n + 1));
        for (int k : {3, 4}) {
            auto a = max_potential_brute(g, k);
            auto b = max_potential_flow(g, k);
            CHECK(a.value == b.value);
            CHECK(a.extreme_union == b.extreme_union);
            CHECK(rho_subset(g, k, b.witness) == b.value);
        }
    }
}

TEST_CASE("supermodularity") {
    rng r(13);
    for (int it = 0; it < 1000; ++it) {
        int n = 2 + r.below_int(9);
        auto g = tg::random_graph(r, n, r.below_int(2 * n + 1));
        vset a = r.next() & g.vertices();
        vset b = r.next() & g.vertices();
        CHECK(check_supermodularity(g, 3, a, b));
        CHECK(check_supermodularity(g, 4, a, b));
    }
}

TEST_CASE("sparseness checks") {
    auto ok = check_sparseness(tg::cycle(7), 7, 6, 1, 3);
    CHECK(ok.ok);

    auto bad = check_sparseness(tg::complete(4), 7, 6, 1, 3);
    CHECK(!bad.ok);
    CHECK(bad.witness == tg::complete(4).vertices());

    CHECK(check_sparseness(tg::complete_bipartite(2, 3), 5, 4, 1, 2).ok);
    CHECK_THROWS_AS(check_sparseness(tg::cycle(4), 1, 0, 1, 1), std::invalid_argument);

    // paths make every nonempty subset score negative; the tied singleton
    // optima must not be merged into a non-optimal union
    CHECK(check_sparseness(tg::path(3), 7, 6, 1, 3).ok);
    CHECK(check_sparseness(tg::path(5), 7, 6, 1, 3).ok);
    auto single = maximize_edge_minus_cost_nonempty(graph(3), 2, {21, 21, 21});
    CHECK(single.value == -21);
    CHECK(popcnt(single.arg_union) == 1);

    // negative optimum with a violating threshold still reports a witness
    auto neg = check_sparseness(tg::path(3), 7, 6, -4, 1);
    CHECK(!neg.ok);
    CHECK(neg.witness != 0);
}

TEST_CASE("max average degree") {
    CHECK(max_average_degree(tg::cycle(6)) == rational{2, 1});
    CHECK(max_average_degree(tg::complete(4)) == rational{3, 1});
    CHECK(max_average_degree(tg::complete_bipartite(2, 3)) == rational{12, 5});
    CHECK(max_average_degree(tg::star(5)) == rational{5, 3});
    CHECK(max_average_degree(tg::path(2)) == rational{1, 1});
    CHECK(max_average_degree(graph(3)) == rational{0, 1});

    // mad is consistent with the sparseness oracle on random graphs
    rng r(17);
    for (int it = 0; it < 100; ++it) {
        auto g = tg::random_graph(r, 3 + r.below_int(8), 1 + r.below_int(14));
        if (g.edge_count() == 0) continue;
        auto d = max_average_degree(g);
        CHECK(check_sparseness(g, d.num, 2 * d.den, 0, 1).ok);          // density <= mad everywhere
        CHECK(!check_sparseness(g, d.num, 2 * d.den + 1, 0, 1).ok);     // but tight: slightly stricter fails
    }
}

TEST_CASE("closure maximizer handles vertex profits") {
    // both endpoints profitable: take the whole edge
    graph g(2);
    g.add_edge(0, 1);
    auto r = maximize_edge_minus_cost(g, 1, {-5, -5});
    CHECK(r.value == 11);
    CHECK(r.arg_union == (vbit(0) | vbit(1)));
}
