#include <random>

#include "doctest.h"
#include "test_support.hpp"

using namespace qhtest;

namespace {

bool weighted_homogeneous(const Polynomial& f, const std::vector<Rational>& w) {
    std::optional<Rational> degree;
    for (const auto& [e, c] : f.terms()) {
        Rational d(0);
        for (std::size_t k = 0; k < e.size(); ++k) d += w[k] * Rational(e[k]);
        if (degree && *degree != d) return false;
        degree = d;
    }
    return true;
}

}  // namespace

TEST_CASE("the module A t d/dt m") {
    const auto cusp = build_algebra(load("cusp"));
    CHECK(module_MA(cusp) == maximal_ideal_of(cusp));
    CHECK(subspace_tdt_m(cusp) == module_MA(cusp).subspace());
    const auto node = build_algebra(load("node"));
    CHECK(module_MA(node) == maximal_ideal_of(node));
    CHECK(subspace_tdt_m(node) == module_MA(node).subspace());
    const auto app = build_algebra(load("appendix"));
    const auto m_a = module_MA(app);
    CHECK_FALSE(module_isomorphic(maximal_ideal_of(app), m_a).isomorphic);
    CHECK(is_subset(ideal_from_subspace(app, product(app.ring(), subspace_tdt_m(app))), m_a));
    CHECK(is_subset(subspace_tdt_m(app), m_a.subspace()));
    CHECK_FALSE(subspace_tdt_m(app) == m_a.subspace());
}

TEST_CASE("Jacobian ideals") {
    const auto cusp = build_algebra(load("cusp"));
    CHECK(jacobian_ideal(cusp) == scale(MultiSeries::monomial({1}), maximal_ideal_of(cusp)));
    const auto node = build_algebra(load("node"));
    CHECK(jacobian_ideal(node) == maximal_ideal_of(node));
    const auto app = build_algebra(load("appendix"));
    const auto j = jacobian_ideal(app);
    CHECK(j.low() == IntVector{15});
    CHECK(gamma_contains(j.subspace(), {15}));
    CHECK(gamma_contains(j.subspace(), {16}));
    const auto s345 = build_algebra(load("space345"));
    try {
        jacobian_ideal(s345);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoEquations);
    }
    CurveSpec bad = load("cusp");
    bad.equations = std::vector<Polynomial>{parse_polynomial("y^2 - x^3 - x^5", bad.variables)};
    const auto bad_model = build_algebra(bad);
    try {
        jacobian_ideal(bad_model);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EquationsFailVerification);
    }
}

TEST_CASE("rho invariants") {
    CHECK(rho_invariant(build_algebra(load("cusp"))) == 1);
    CHECK(rho_invariant(build_algebra(load("node"))) == 1);
    CHECK(rho_invariant(build_algebra(load("smooth"))) == 0);
    CHECK(rho_prime_invariant(build_algebra(load("cusp")), true).rho_prime == 1);
    CHECK(rho_prime_invariant(build_algebra(load("node")), true).rho_prime == 1);
    const auto app = build_algebra(load("appendix"));
    CHECK(rho_prime_invariant(app, true).rho_prime >= 2);
    CHECK(rho_prime_invariant(app, true).rho_prime == rho_invariant(app));
}

TEST_CASE("reports") {
    const auto cusp = qh_report(build_algebra(load("cusp")));
    CHECK(cusp.gorenstein);
    CHECK(cusp.qh_by_unit_multiple);
    CHECK(cusp.qh_by_tdt_m);
    CHECK(cusp.qh_by_rho_prime);
    CHECK(cusp.m_iso_M);
    CHECK(cusp.rho == 1);
    CHECK(cusp.rho_prime == 1);
    CHECK(cusp.unit_witness.has_value());

    const auto node = qh_report(build_algebra(load("node")));
    CHECK(node.gorenstein);
    CHECK(node.quasihomogeneous());

    const auto app = qh_report(build_algebra(load("appendix")));
    CHECK(app.gorenstein);
    CHECK_FALSE(app.qh_by_unit_multiple);
    CHECK_FALSE(app.qh_by_tdt_m);
    CHECK_FALSE(app.qh_by_rho_prime);
    CHECK_FALSE(app.m_iso_M);
    CHECK_FALSE(app.syntactic_weights.has_value());
    CHECK(app.rho == app.rho_prime);

    const auto s345 = qh_report(build_algebra(load("space345")));
    CHECK_FALSE(s345.gorenstein);
    CHECK(s345.length_m_dual == 2);
    CHECK_FALSE(s345.rho.has_value());
}

TEST_CASE("weight detection") {
    const std::vector<std::string> xy{"x", "y"};
    const auto cusp = detect_weights({parse_polynomial("y^2 - x^3", xy)}, 2);
    REQUIRE(cusp);
    CHECK(to_ints(*cusp) == std::vector<int>{2, 3});
    const auto node = detect_weights({parse_polynomial("x*y", xy)}, 2);
    REQUIRE(node);
    CHECK(to_ints(*node) == std::vector<int>{1, 1});
    CHECK_FALSE(detect_weights({parse_polynomial("x^4 + x*y^4 + y^5", xy)}, 2).has_value());
    CHECK_FALSE(detect_weights({parse_polynomial("x^4 - y*(x+y)^4", xy)}, 2).has_value());
}

TEST_CASE("weights of random weighted homogeneous equations") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> wd(1, 5), coef(1, 4);
    for (int k = 0; k < 40; ++k) {
        const int a = wd(rng), b = wd(rng), c = wd(rng);
        // Weighted degree d = a·b·c·m; pick monomials of that degree in three variables.
        const int d = a * b * c * (1 + k % 2);
        std::vector<Polynomial> eqs;
        for (int q = 0; q < 2; ++q) {
            Polynomial f(3);
            for (int i = 0; i * a <= d; ++i)
                for (int j = 0; i * a + j * b <= d; ++j) {
                    const int rest = d - i * a - j * b;
                    if (rest % c == 0 && coef(rng) == 1) f.add_term({i, j, rest / c}, Rational(coef(rng)));
                }
            if (!f.is_zero()) eqs.push_back(f);
        }
        if (eqs.empty()) continue;
        const auto w = detect_weights(eqs, 3);
        REQUIRE(w);
        for (const Rational& x : *w) CHECK(x.sign() > 0);
        for (const auto& f : eqs) CHECK(weighted_homogeneous(f, *w));
    }
}

TEST_CASE("one normalization step") {
    const auto cusp = build_algebra(load("cusp"));
    const auto step = vasconcelos_step(cusp);
    CHECK_FALSE(step.already_smooth);
    CHECK(step.colength == 1);
    CHECK(step.model.ring() == normalization(1));
    const auto smooth = build_algebra(load("smooth"));
    const auto fixed = vasconcelos_step(smooth);
    CHECK(fixed.already_smooth);
    CHECK(fixed.model.ring() == smooth.ring());
    const auto app = build_algebra(load("appendix"));
    const auto big = vasconcelos_step(app);
    CHECK(big.colength == rho_invariant(app));
    CHECK(big.colength >= 2);
    CHECK(is_subset(app.ring(), big.model.ring()));
}
