#include <random>

#include "doctest.h"
#include "test_support.hpp"

using namespace qhtest;

namespace {

MultiSeries mono(int e) { return MultiSeries::monomial({e}); }

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("ideals from generators") {
    const auto cusp = build_algebra(load("cusp"));
    CHECK(ideal_from_generators(cusp, {mono(2), mono(3)}) == maximal_ideal_of(cusp));
    CHECK(ideal_from_generators(cusp, {mono(0)}) == unit_ideal(cusp));
    CHECK(unit_ideal(cusp).subspace() == cusp.ring());
    const auto node = build_algebra(load("node"));
    const std::vector<MultiSeries> gens{MultiSeries::unit_monomial(2, 0, 1), MultiSeries::unit_monomial(2, 1, 1)};
    CHECK(ideal_from_generators(node, gens) == maximal_ideal_of(node));
    CHECK(generic_combination(gens).has_value());
    CHECK(code_of([&] { ideal_from_generators(node, {gens[0]}); }) == ErrorCode::NoNonZeroDivisor);
}

TEST_CASE("A-module check") {
    const auto cusp = build_algebra(load("cusp"));
    const Window w({1}, {4});
    MatrixQ row = w.embed(mono(1)).transpose();
    CHECK(code_of([&] { ideal_from_subspace(cusp, SubspaceBasis(w, row)); }) == ErrorCode::ContainmentViolation);
    CHECK(ideal_from_subspace(cusp, SubspaceBasis::tail_only({1})).subspace() == SubspaceBasis::tail_only({1}));
}

TEST_CASE("hom, dual and endomorphisms") {
    const auto cusp = build_algebra(load("cusp"));
    const auto a = unit_ideal(cusp), m = maximal_ideal_of(cusp), n = normalization_ideal(cusp);
    CHECK(hom_ideals(a, a) == a);
    CHECK(hom_ideals(m, a) == n);
    CHECK(dual_ideal(a) == a);
    CHECK(dual_ideal(m) == n);
    CHECK(length_quotient(dual_ideal(m), a) == 1);
    CHECK(dual_ideal(dual_ideal(m)) == m);
    CHECK(endo_ring(a) == a);
    CHECK(endo_ring(m) == n);

    const auto node = build_algebra(load("node"));
    CHECK(hom_ideals(maximal_ideal_of(node), unit_ideal(node)) == normalization_ideal(node));

    const auto s345 = build_algebra(load("space345"));
    const auto end_m = endo_ring(maximal_ideal_of(s345));
    CHECK(end_m == normalization_ideal(s345));
    CHECK(length_quotient(end_m, unit_ideal(s345)) == 2);
    CHECK(length_quotient(dual_ideal(maximal_ideal_of(s345)), unit_ideal(s345)) == 2);
}

TEST_CASE("lengths and equality") {
    const auto cusp = build_algebra(load("cusp"));
    const auto m = maximal_ideal_of(cusp);
    CHECK(length_quotient(m, m) == 0);
    CHECK(length_quotient(normalization_ideal(cusp), unit_ideal(cusp)) == 1);
    CHECK(ideals_equal(m, m));
    CHECK(ideals_equal(scale(mono(1), m), ideal_from_generators(cusp, {mono(3), mono(4)})));
    CHECK_FALSE(ideals_equal(m, unit_ideal(cusp)));
    CHECK(code_of([&] { length_quotient(m, unit_ideal(cusp)); }) == ErrorCode::NotContained);
}

TEST_CASE("isomorphism search") {
    const auto cusp = build_algebra(load("cusp"));
    const auto m = maximal_ideal_of(cusp);
    const auto tm = scale(mono(1), m);
    const IsoResult r = module_isomorphic(m, tm);
    CHECK(r.isomorphic);
    REQUIRE(r.witness);
    CHECK(finite_valuation(*r.witness) == IntVector{1});
    CHECK_FALSE(r.unit_witness);
    CHECK(scale(*r.witness, m) == tm);

    const auto j = ideal_from_generators(cusp, {mono(3), mono(4)});
    const IsoResult s = module_isomorphic(j, m);
    CHECK(s.isomorphic);
    REQUIRE(s.witness);
    CHECK(finite_valuation(*s.witness) == IntVector{-1});

    CHECK_FALSE(module_isomorphic(m, unit_ideal(cusp)).isomorphic);
    CHECK(module_isomorphic(m, m).unit_witness);
}

TEST_CASE("principal ideals") {
    const auto cusp = build_algebra(load("cusp"));
    CHECK(is_principal(unit_ideal(cusp)));
    CHECK(is_principal(ideal_from_generators(cusp, {mono(5)})));
    CHECK_FALSE(is_principal(maximal_ideal_of(cusp)));
    const auto smooth = build_algebra(load("smooth"));
    CHECK(is_principal(maximal_ideal_of(smooth)));
}

TEST_CASE("hom agrees with the generator-intersection route") {
    std::mt19937 rng(43);
    for (const auto& name : corpus()) {
        const auto model = build_algebra(load(name));
        for (int k = 0; k < 8; ++k) {
            const FracIdeal i = random_ideal(rng, model), j = random_ideal(rng, model);
            CAPTURE(name);
            CHECK(hom_ideals(i, j).subspace() == hom_by_generator_intersection(i, j));
            CHECK(dual_ideal(i).subspace() == hom_by_generator_intersection(i, unit_ideal(model)));
        }
    }
}

TEST_CASE("ideal arithmetic laws") {
    std::mt19937 rng(47);
    for (const auto& name : corpus()) {
        const auto model = build_algebra(load(name));
        const auto a = unit_ideal(model);
        for (int k = 0; k < 6; ++k) {
            const FracIdeal i = random_ideal(rng, model), j = random_ideal(rng, model);
            CAPTURE(name);
            CHECK(product(i, j) == product(j, i));
            CHECK(product(i, a) == i);
            CHECK(is_subset(i, dual_ideal(dual_ideal(i))));
            CHECK(is_subset(product(i, dual_ideal(i)), a));
            const FracIdeal e = endo_ring(i);
            CHECK(is_subset(a, e));
            CHECK(is_subset(e, normalization_ideal(model)));
            CHECK(product(e, i) == i);
            // I ⊆ I + J reverses under duals.
            std::vector<MultiSeries> both = i.generators();
            both.insert(both.end(), j.generators().begin(), j.generators().end());
            const FracIdeal ij = ideal_from_generators(model, both);
            CHECK(is_subset(i, ij));
            CHECK(is_subset(dual_ideal(ij), dual_ideal(i)));
            const FracIdeal mi = product(i, maximal_ideal_of(model));
            CHECK(length_quotient(ij, mi) == length_quotient(ij, i) + length_quotient(i, mi));
            const MultiSeries x = perturbed_monomial(rng, IntVector(model.branches(), 3));
            CHECK(hom_ideals(scale(x, i), scale(x, j)) == hom_ideals(i, j));
            CHECK(gamma_sets_equal(i, i));
        }
    }
}
