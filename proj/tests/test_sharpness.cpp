#include <stdexcept>

#include "doctest.h"
#include "eqlc/sharpness.hpp"
#include "helpers.hpp"

using namespace eqlc;

TEST_CASE("max_independent on small pieces") {
    graph p4 = tg::path(4);
    CHECK(max_independent(p4, p4.vertices()) == 2);
    CHECK(max_independent(p4, vbit(1) | vbit(2)) == 1);
    graph c5 = tg::cycle(5);
    CHECK(max_independent(c5, c5.vertices()) == 2);
    graph k4 = tg::complete(4);
    CHECK(max_independent(k4, k4.vertices()) == 1);
    CHECK(max_independent(k4, 0) == 0);
}

TEST_CASE("has_triangle") {
    CHECK(has_triangle(tg::complete(3)));
    CHECK(has_triangle(tg::complete(4)));
    CHECK(!has_triangle(tg::cycle(4)));
    CHECK(!has_triangle(tg::star(5)));
    CHECK(!has_triangle(tg::path(6)));
}

TEST_CASE("three-color family: plain five-leaf star") {
    auto fam = gen_sharpness3(5, 0);
    CHECK(fam.g.n == 6);
    CHECK(fam.g.degree(0) == 5);
    auto rep = verify_sharpness(fam, true);
    CHECK(rep.rho_value == 3);
    CHECK(rep.rho_matches_brute);
    CHECK(rep.leaf_count == 5);
    CHECK(rep.class_cap == 1);
    CHECK(rep.class_floor == 2);
    CHECK(rep.cap_blocks);
    CHECK(rep.triangle_free);
    CHECK(rep.solver_confirms);
}

TEST_CASE("three-color family: leaf extensions trade leaves for paths") {
    auto fam = gen_sharpness3(2, 0);
    CHECK(fam.g.n == 15);
    CHECK(fam.g.degree(0) == 8);  // 5 leaves + 3 path returns
    auto rep = verify_sharpness(fam, false);
    CHECK(rep.rho_value == 3);
    CHECK(rep.rho_matches_brute);
    CHECK(rep.leaf_count == 2);
    CHECK(rep.class_cap == 4);   // one per extended leaf path
    CHECK(rep.class_floor == 5);
    CHECK(rep.cap_blocks);
    CHECK(rep.triangle_free);
}

TEST_CASE("three-color family: six-vertex gadgets add two to the cap") {
    auto fam = gen_sharpness3(5, 1);
    CHECK(fam.g.n == 12);
    auto rep = verify_sharpness(fam, true);
    CHECK(rep.rho_value == 3);
    CHECK(rep.class_cap == 3);
    CHECK(rep.class_floor == 4);
    CHECK(rep.cap_blocks);
    CHECK(rep.solver_confirms);
}

TEST_CASE("three-color family: whole grid of small members") {
    for (int l = 0; l <= 5; ++l)
        for (int n = 0; n <= 2; ++n) {
            auto fam = gen_sharpness3(l, n);
            CHECK(fam.g.n == 6 + 3 * (5 - l) + 6 * n);
            CHECK(popcnt(leaves(fam.g)) == l);
            CHECK(is_connected(fam.g));
            auto rep = verify_sharpness(fam, false, 24);
            CHECK(rep.rho_value == 3);
            CHECK(rep.rho_matches_brute);
            CHECK(rep.class_cap == 1 + (5 - l) + 2 * n);
            CHECK(rep.class_floor == rep.class_cap + 1);
            CHECK(rep.cap_blocks);
            CHECK(rep.triangle_free);
        }
}

TEST_CASE("four-color family: plain eight-leaf star") {
    auto fam = gen_sharpness4(8, 0);
    CHECK(fam.g.n == 9);
    auto rep = verify_sharpness(fam, true);
    CHECK(rep.rho_value == 3);
    CHECK(rep.leaf_count == 8);
    CHECK(rep.class_cap == 1);
    CHECK(rep.class_floor == 2);
    CHECK(rep.cap_blocks);
    CHECK(rep.solver_confirms);
}

TEST_CASE("four-color family: matched leaves kill the leaf bonus exactly") {
    auto even = gen_sharpness4(0, 0);  // all four pairs matched
    CHECK(even.g.n == 9);
    CHECK(popcnt(leaves(even.g)) == 0);
    auto rep = verify_sharpness(even, true);
    CHECK(rep.rho_value == 3);
    CHECK(rep.cap_blocks);
    CHECK(rep.solver_confirms);

    auto odd = gen_sharpness4(1, 0);  // seven leaves, three pairs matched
    CHECK(odd.g.n == 8);
    CHECK(popcnt(leaves(odd.g)) == 1);
    auto rep2 = verify_sharpness(odd, true);
    CHECK(rep2.rho_value == 2);  // one leaf flips the parity
    CHECK(rep2.cap_blocks);
    CHECK(rep2.solver_confirms);
}

TEST_CASE("four-color family: whole grid of small members") {
    for (int l = 0; l <= 8; ++l)
        for (int n = 0; n <= 3; ++n) {
            auto fam = gen_sharpness4(l, n);
            int r = l % 2;
            CHECK(fam.g.n == 9 - r + 4 * n);
            CHECK(popcnt(leaves(fam.g)) == l);
            CHECK(is_connected(fam.g));
            auto rep = verify_sharpness(fam, false);
            CHECK(rep.rho_value == 3 - r);
            CHECK(rep.rho_matches_brute);
            CHECK(rep.class_cap == 1 + n);
            CHECK(rep.class_floor == 2 + n);
            CHECK(rep.cap_blocks);
        }
}

TEST_CASE("family generators reject bad parameters") {
    CHECK_THROWS_AS((void)gen_sharpness3(6, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)gen_sharpness3(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)gen_sharpness3(0, 100), std::invalid_argument);
    CHECK_THROWS_AS((void)gen_sharpness4(9, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)gen_sharpness4(0, 100), std::invalid_argument);
}
