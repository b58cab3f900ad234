#include <numeric>
#include <random>

#include "doctest.h"
#include "test_support.hpp"

using namespace qhtest;

namespace {

// Random k-combination of monomials in the coordinates, known to `order`.
MultiSeries random_ring_element(std::mt19937& rng, const CurveSpec& spec, int order) {
    const auto coords = spec.coordinate_series(order);
    std::uniform_int_distribution<int> deg(0, 3), coef(-3, 3);
    MultiSeries acc = MultiSeries::constant(spec.branches(), 0);
    acc = truncate(acc, order);
    for (int term = 0; term < 4; ++term) {
        MultiSeries m = truncate(MultiSeries::constant(spec.branches(), coef(rng)), order);
        for (const auto& x : coords)
            for (int k = deg(rng); k > 0; --k) m = truncate(m * x, order);
        acc = acc + m;
    }
    return acc;
}

}  // namespace

TEST_CASE("corpus deltas") {
    CHECK(build_algebra(load("cusp")).delta() == IntVector{2});
    CHECK(build_algebra(load("node")).delta() == IntVector{1, 1});
    CHECK(build_algebra(load("space345")).delta() == IntVector{3});
    CHECK(build_algebra(load("cusp")).delta_invariant() == 1);
    CHECK(build_algebra(load("node")).delta_invariant() == 1);
    CHECK(build_algebra(load("space345")).delta_invariant() == 2);
    CHECK(build_algebra(load("appendix")).delta() == IntVector{12});
    CHECK(build_algebra(load("appendix")).delta_invariant() == 6);
    const auto smooth = build_algebra(load("smooth"));
    CHECK(smooth.smooth());
    CHECK(smooth.delta_invariant() == 0);
    CHECK(build_algebra(load("cusp")).stability_certified());
}

TEST_CASE("monomial curves match the numerical semigroup oracle") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> e(2, 9), n(2, 3);
    int tested = 0;
    while (tested < 25) {
        std::vector<int> gens;
        for (int k = n(rng); k > 0; --k) gens.push_back(e(rng));
        int g = 0;
        for (int x : gens) g = std::gcd(g, x);
        if (g != 1) continue;
        ++tested;
        const auto model = build_algebra(monomial_curve(gens));
        const auto oracle = numerical_semigroup(gens, 200);
        const int c = numerical_conductor(oracle);
        CAPTURE(gens);
        CHECK(model.delta() == IntVector{c});
        CHECK(model.delta_invariant() == std::count(oracle.begin(), oracle.end(), false));
        for (int a = 0; a <= 2 * c + 4; ++a) CHECK(gamma_contains(model.ring(), {a}) == oracle[static_cast<std::size_t>(a)]);
    }
}

TEST_CASE("branch t^4, t^6 + t^7 has semigroup <4, 6, 13>") {
    CurveSpec s;
    s.name = "e46";
    s.variables = {"x", "y"};
    s.param = {{RationalFunction::monomial(4), RationalFunction::polynomial({0, 0, 0, 0, 0, 0, 1, 1})}};
    const auto model = build_algebra(s);
    const auto oracle = numerical_semigroup({4, 6, 13}, 100);
    CHECK(model.delta() == IntVector{16});
    CHECK(model.delta_invariant() == 8);
    for (int a = 0; a <= 40; ++a) CHECK(gamma_contains(model.ring(), {a}) == oracle[static_cast<std::size_t>(a)]);
}

TEST_CASE("values of ring elements lie in the semigroup") {
    std::mt19937 rng(37);
    for (const auto& name : corpus()) {
        const CurveSpec spec = load(name);
        const auto model = build_algebra(spec);
        const int order = model.moduli()[0];
        for (int k = 0; k < 20; ++k) {
            const MultiSeries x = random_ring_element(rng, spec, order);
            CHECK(contains(model, x));
            const auto v = finite_valuation(x);
            if (v) CHECK(gamma_contains(model.ring(), *v));
        }
    }
}

TEST_CASE("truncated membership agrees with the exact ring") {
    for (const auto& name : corpus()) {
        const auto model = build_algebra(load(name));
        IntVector hi = model.delta();
        for (std::size_t i = 0; i < hi.size(); ++i) hi[i] = std::min(2 * hi[i] + 1, model.moduli()[i] - 1);
        for_each_in_box(IntVector(hi.size(), 0), hi, [&](const IntVector& a) {
            CHECK(gamma_contains_truncated(model, a) == gamma_contains(model.ring(), a));
        });
    }
}

TEST_CASE("contains") {
    const auto cusp = build_algebra(load("cusp"));
    CHECK(contains(cusp, MultiSeries({TruncatedSeries::exact(2, {1, 1})})));
    CHECK_FALSE(contains(cusp, MultiSeries::monomial({1})));
    CHECK(contains(cusp, MultiSeries::constant(1, 1)));
}

TEST_CASE("maximal ideal") {
    const auto cusp = build_algebra(load("cusp"));
    const auto m = maximal_ideal(cusp);
    CHECK(m.low() == IntVector{2});
    CHECK(m.tail() == IntVector{2});
    const auto node = build_algebra(load("node"));
    CHECK(maximal_ideal(node) == SubspaceBasis::tail_only({1, 1}));
    const auto smooth = build_algebra(load("smooth"));
    CHECK(maximal_ideal(smooth) == SubspaceBasis::tail_only({1}));
}

TEST_CASE("equations vanish on the parametrization") {
    CHECK(verify_equations(load("cusp"), 40));
    CHECK(verify_equations(load("appendix"), 60));
    CHECK(verify_equations(load("node"), 20));
    CurveSpec wrong = load("cusp");
    wrong.equations = std::vector<Polynomial>{parse_polynomial("y^2 - x^3 + x^4", wrong.variables)};
    CHECK_FALSE(verify_equations(wrong, 40));
    CHECK_THROWS_AS(verify_equations(load("space345"), 20), Error);
}

TEST_CASE("degenerate input is rejected") {
    CurveSpec s = load("cusp");
    s.param[0][0] = RationalFunction::polynomial({1, 0, 1});
    CHECK_THROWS_AS(build_algebra(s), Error);
    s = load("cusp");
    s.param[0][0].den = {0, 1};
    try {
        build_algebra(s);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonUnitDenominator);
    }
    CurveSpec twice = load("node");
    twice.param[1] = twice.param[0];
    try {
        build_algebra(twice);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateInput);
    }
}

TEST_CASE("a too small order budget does not stabilize") {
    try {
        build_algebra(load("appendix"), BuildOptions{8, 40});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoStabilization);
    }
}
