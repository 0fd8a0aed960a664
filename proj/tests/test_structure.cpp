#include <stdexcept>

#include "doctest.h"
#include "eqlc/structure.hpp"
#include "helpers.hpp"

using namespace eqlc;

namespace {

// two degree-3 hubs joined by a 4-vertex path, each hub padded with two leaves
graph long_thread_graph() {
    // 0,1 hubs; 2..5 the path; 6,7 leaves of 0; 8,9 leaves of 1
    return make_graph(10, {{0, 6}, {0, 7}, {1, 8}, {1, 9}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
}

graph cycle_with_tail() {
    // C6 on 0..5 plus pendant path 0-6-7
    return make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 7}});
}

}  // namespace

TEST_CASE("threads: complete bipartite K_{2,3} carries three connecting 1-threads") {
    graph g = tg::complete_bipartite(2, 3);
    auto ts = find_threads(g);
    REQUIRE(ts.size() == 3);
    for (const auto& t : ts) {
        CHECK(t.kind == thread_kind::plain);
        CHECK(t.root == 0);
        CHECK(t.end == 1);
        CHECK(t.t == 1);
        CHECK(t.path.size() == 3);
    }
}

TEST_CASE("threads: star leaves are loose 1-threads") {
    auto ts = find_threads(tg::star(5));
    REQUIRE(ts.size() == 5);
    for (const auto& t : ts) {
        CHECK(t.kind == thread_kind::loose);
        CHECK(t.root == 0);
        CHECK(t.t == 1);
        CHECK(t.path.size() == 2);
    }
}

TEST_CASE("threads: graphs without branch vertices have none") {
    CHECK(find_threads(tg::cycle(6)).empty());
    CHECK(find_threads(tg::path(5)).empty());
    CHECK(find_threads(make_graph(3, {})).empty());
}

TEST_CASE("threads: long connecting thread reported once, oriented low to high") {
    auto ts = find_threads(long_thread_graph());
    int plain = 0, loose = 0;
    for (const auto& t : ts) {
        if (t.kind == thread_kind::plain) {
            ++plain;
            CHECK(t.root == 0);
            CHECK(t.end == 1);
            CHECK(t.t == 4);
            CHECK(t.path == std::vector<int>{0, 2, 3, 4, 5, 1});
        } else {
            ++loose;
            CHECK(t.t == 1);
        }
    }
    CHECK(plain == 1);
    CHECK(loose == 4);
}

TEST_CASE("threads: closed thread on a cycle with one branch vertex") {
    auto ts = find_threads(cycle_with_tail());
    REQUIRE(ts.size() == 2);
    // sorted output: closed < loose by kind order? plain=0, loose=1, closed=2
    bool saw_closed = false, saw_loose = false;
    for (const auto& t : ts) {
        if (t.kind == thread_kind::closed) {
            saw_closed = true;
            CHECK(t.root == 0);
            CHECK(t.end == 0);
            CHECK(t.t == 5);
        }
        if (t.kind == thread_kind::loose) {
            saw_loose = true;
            CHECK(t.t == 2);
            CHECK(t.path == std::vector<int>{0, 6, 7});
        }
    }
    CHECK(saw_closed);
    CHECK(saw_loose);
}

TEST_CASE("bugs: star center") {
    graph g = tg::star(5);
    auto b = maximal_bug(g, 0);
    CHECK(b.members == g.vertices());
    CHECK(popcnt(b.members) == 6);
    CHECK(b.lambda == 0);
    CHECK(b.pi == 5);
    CHECK(b.legs == 0);
}

TEST_CASE("bugs: K_{2,3} hub") {
    graph g = tg::complete_bipartite(2, 3);
    auto b = maximal_bug(g, 0);
    CHECK(popcnt(b.members) == 4);  // hub plus the three low vertices
    CHECK(b.lambda == 0);
    CHECK(b.pi == 0);
    CHECK(popcnt(b.legs) == 3);
}

TEST_CASE("bugs: cycle with tail keeps everything") {
    auto b = maximal_bug(cycle_with_tail(), 0);
    CHECK(popcnt(b.members) == 8);
    CHECK(b.pi == 7);
    CHECK(b.lambda == 0);
}

TEST_CASE("bugs: middle of a long connecting thread is a degree-2 fork") {
    graph g = long_thread_graph();
    auto b = maximal_bug(g, 3);
    CHECK(b.members == vector_to_set({2, 3, 4, 5}));
    CHECK(b.lambda == 1);
    CHECK(b.pi == 0);
    auto c = classify_bug(g, b, 3);
    CHECK(c.tag == bug_tag::fork);
    CHECK(c.fork_degree == 2);
    // at k=4 a degree-2 root cannot be a fork
    CHECK(classify_bug(g, b, 4).tag == bug_tag::none);
}

TEST_CASE("bugs: low root on a bare cycle") {
    graph g = tg::cycle(6);
    auto b = maximal_bug(g, 2);
    CHECK(b.members == g.vertices());
    CHECK(b.pi == 5);
    CHECK(b.legs == 0);
}

TEST_CASE("bugs: degree-3 fork at k=3 and k=4") {
    // root 0 with legs 1,2 (1-threads to hub 5) and a 2-thread 3-4 to hub 6
    graph g = make_graph(11, {{0, 1},
                              {0, 2},
                              {0, 3},
                              {3, 4},
                              {1, 5},
                              {2, 5},
                              {4, 6},
                              {5, 7},
                              {6, 8},
                              {6, 9},
                              {6, 10}});
    REQUIRE(g.degree(0) == 3);
    auto b = maximal_bug(g, 0);
    CHECK(popcnt(b.members) == 5);  // d+2
    CHECK(b.lambda == 1);
    CHECK(b.pi == 0);
    CHECK(classify_bug(g, b, 4).tag == bug_tag::fork);
    CHECK(classify_bug(g, b, 3).tag == bug_tag::fork);
}

TEST_CASE("bugs: wishbone and jellyfish at k=4") {
    // wishbone: degree-4 root, two legs to outside hubs, one triangle
    graph wb = make_graph(11, {{0, 1},
                               {1, 5},
                               {0, 2},
                               {2, 6},
                               {0, 3},
                               {3, 4},
                               {4, 0},
                               {5, 7},
                               {5, 8},
                               {6, 9},
                               {6, 10}});
    REQUIRE(wb.degree(0) == 4);
    auto b = maximal_bug(wb, 0);
    CHECK(popcnt(b.members) == 5);
    CHECK(b.lambda == 0);
    CHECK(b.pi == 2);
    CHECK(classify_bug(wb, b, 4).tag == bug_tag::wishbone);
    CHECK(classify_bug(wb, b, 3).tag == bug_tag::none);

    // jellyfish: degree-4 root, three legs, one loose leaf
    graph jf = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5}});
    REQUIRE(jf.degree(0) == 4);
    REQUIRE(jf.degree(5) == 3);
    auto bj = maximal_bug(jf, 0);
    CHECK(popcnt(bj.members) == 5);
    CHECK(bj.pi == 1);
    CHECK(bj.lambda == 0);
    CHECK(classify_bug(jf, bj, 4).tag == bug_tag::jellyfish);
}

TEST_CASE("bugs: classifier insists on maximal bugs") {
    graph g = tg::star(5);
    auto b = maximal_bug(g, 0);
    b.members &= ~vbit(5);  // drop a leaf
    CHECK_THROWS_AS((void)classify_bug(g, b, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)maximal_bug(g, 9), std::invalid_argument);
}

TEST_CASE("bugs: is_bug accepts sub-bugs but rejects junk") {
    graph g = tg::star(5);
    CHECK(is_bug(g, 0, vbit(0) | vbit(1)));
    CHECK(is_bug(g, 0, g.vertices()));
    CHECK_FALSE(is_bug(g, 1, vbit(1) | vbit(2)));  // two leaves, disconnected
    CHECK_FALSE(is_bug(g, 1, vbit(0)));            // root outside the set
    // a second branch vertex disqualifies the set
    graph g2 = tg::complete_bipartite(2, 3);
    CHECK_FALSE(is_bug(g2, 0, g2.vertices()));
}

TEST_CASE("bugs: size bound under the short-thread hypothesis") {
    rng r(99);
    int checked = 0;
    for (int iter = 0; iter < 400; ++iter) {
        int n = 3 + r.below_int(9);
        graph g = tg::random_graph(r, n, r.below_int(2 * n));
        for_each_bit(v3plus(g), [&](int v) {
            if (bug_bound_hypothesis(g, v)) {
                ++checked;
                CHECK(bug_size_bound_holds(g, maximal_bug(g, v)));
            }
        });
    }
    CHECK(checked > 100);

    // and a long loose thread genuinely breaks the bound
    graph bad = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    CHECK_FALSE(bug_bound_hypothesis(bad, 0));
    CHECK_FALSE(bug_size_bound_holds(bad, maximal_bug(bad, 0)));
}
