#include <numeric>
#include <random>

#include "doctest.h"
#include "test_support.hpp"

using namespace qhtest;

TEST_CASE("semigroup boxes of the corpus") {
    const auto cusp = semigroup_of_curve(build_algebra(load("cusp")));
    CHECK(cusp.members() == std::vector<IntVector>{{0}, {2}});
    CHECK(cusp.delta() == IntVector{2});
    const auto node = semigroup_of_curve(build_algebra(load("node")));
    CHECK(node.members() == std::vector<IntVector>{{0, 0}, {1, 1}});
    const auto s345 = semigroup_of_curve(build_algebra(load("space345")));
    CHECK(s345.members() == std::vector<IntVector>{{0}, {3}});
    CHECK(s345.tau() == IntVector{2});
}

TEST_CASE("value sets of explicit subspaces") {
    const auto cusp = build_algebra(load("cusp"));
    std::vector<IntVector> expected{{0}};
    for (int a = 2; a <= 12; ++a) expected.push_back({a});
    CHECK(gamma_of_subspace(cusp.ring(), {0}, {12}) == expected);
    const auto node = build_algebra(load("node"));
    CHECK(gamma_of_subspace(maximal_ideal(node), {0, 0}, {1, 1}) == std::vector<IntVector>{{1, 1}});
    CHECK(gamma_of_subspace(SubspaceBasis::tail_only({3}), {3}, {5}) == std::vector<IntVector>{{3}, {4}, {5}});
}

TEST_CASE("capped membership") {
    const auto cusp = semigroup_of_curve(build_algebra(load("cusp")));
    CHECK(capped_membership(cusp, {5}));
    CHECK_FALSE(capped_membership(cusp, {1}));
    CHECK_FALSE(capped_membership(cusp, {-1}));
    const auto node = semigroup_of_curve(build_algebra(load("node")));
    CHECK(capped_membership(node, {4, 7}));
    CHECK_FALSE(capped_membership(node, {0, 3}));
}

TEST_CASE("delta sets") {
    CHECK(in_delta_set({1, 1}, {1, 3}));
    CHECK_FALSE(in_delta_set({1, 1}, {1, 1}));
    CHECK_FALSE(in_delta_set({1, 1}, {2, 3}));
    CHECK(in_delta_set({1, 1}, {1, 3}, 0));
    CHECK_FALSE(in_delta_set({1, 1}, {1, 3}, 1));
    const auto cusp = semigroup_of_curve(build_algebra(load("cusp")));
    CHECK_FALSE(delta_set_meets(cusp, cusp.tau()));
    const auto node = semigroup_of_curve(build_algebra(load("node")));
    CHECK_FALSE(delta_set_meets(node, node.tau()));
    CHECK_FALSE(delta_set_meets(node, {-1, -1}, 0));
    CHECK_FALSE(delta_set_meets(node, {-1, -1}, 1));
    CHECK(delta_set_meets(node, {0, 0}) == false);
    // Δ_0((1,0)) contains (1,1); Δ_1((1,0)) holds only (b,0) with b > 1.
    CHECK(delta_set_meets(node, {1, 0}, 0));
    CHECK_FALSE(delta_set_meets(node, {1, 0}, 1));
}

TEST_CASE("symmetry") {
    CHECK(is_symmetric(semigroup_of_curve(build_algebra(load("cusp")))));
    CHECK_FALSE(is_symmetric(semigroup_of_curve(build_algebra(load("space345")))));
    CHECK(is_symmetric(semigroup_of_curve(build_algebra(load("node")))));
    CHECK_FALSE(is_symmetric(semigroup_of_curve(build_algebra(load("axes3")))));
    CHECK(is_symmetric(semigroup_of_curve(build_algebra(load("appendix")))));
}

TEST_CASE("symmetry of numerical semigroups matches the gap count oracle") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> e(2, 9), n(2, 3);
    int tested = 0;
    while (tested < 25) {
        std::vector<int> gens;
        for (int k = n(rng); k > 0; --k) gens.push_back(e(rng));
        int g = 0;
        for (int x : gens) g = std::gcd(g, x);
        if (g != 1) continue;
        ++tested;
        const auto table = semigroup_of_curve(build_algebra(monomial_curve(gens)));
        const auto oracle = numerical_semigroup(gens, 200);
        const long gaps = std::count(oracle.begin(), oracle.end(), false);
        // Symmetric iff exactly half of [0, c) are gaps.
        const bool symmetric = 2 * gaps == numerical_conductor(oracle);
        CAPTURE(gens);
        CHECK(is_symmetric(table) == symmetric);
        CHECK(is_symmetric_classical(table) == symmetric);
    }
}

TEST_CASE("capping agrees with direct value computation on the doubled box") {
    for (const auto& name : corpus()) {
        const auto model = build_algebra(load(name));
        const auto table = semigroup_of_curve(model);
        IntVector hi = model.delta();
        for (int& h : hi) h = 2 * h + 1;
        for_each_in_box(IntVector(hi.size(), -1), hi, [&](const IntVector& a) {
            CHECK(capped_membership(table, a) == gamma_contains(model.ring(), a));
        });
    }
}
