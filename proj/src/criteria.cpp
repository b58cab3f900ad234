#include "qhcurve/criteria.hpp"

#include <algorithm>
#include <numeric>

namespace qhcurve {

SubspaceBasis subspace_tdt_m(const AlgebraModel& model) { return apply_tdt(maximal_ideal(model)); }

FracIdeal module_MA(const AlgebraModel& model) {
    return ideal_from_subspace(model, product(model.ring(), subspace_tdt_m(model)));
}

namespace {

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, std::size_t nvars) {
    const std::size_t k = m.size();
    if (k == 0) return Polynomial::constant(nvars, Rational(1));
    if (k == 1) return m[0][0];
    Polynomial det(nvars);
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t j = 0; j < k; ++j)
                if (j != c) row.push_back(m[r][j]);
            minor.push_back(std::move(row));
        }
        const Polynomial term = m[0][c] * determinant(minor, nvars);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

// Maximal minors of the (n-1) x n Jacobian matrix, as polynomials.
std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& eqs, std::size_t n) {
    std::vector<Polynomial> minors;
    for (std::size_t drop = 0; drop < n; ++drop) {
        std::vector<std::vector<Polynomial>> m;
        for (const Polynomial& f : eqs) {
            std::vector<Polynomial> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != drop) row.push_back(f.derivative(j));
            m.push_back(std::move(row));
        }
        minors.push_back(determinant(m, n));
    }
    return minors;
}

int max_modulus(const AlgebraModel& model) {
    const IntVector& m = model.moduli();
    return *std::max_element(m.begin(), m.end());
}

}  // namespace

FracIdeal jacobian_ideal(const AlgebraModel& model) {
    const CurveSpec& spec = model.spec();
    if (!spec.equations) throw Error(ErrorCode::NoEquations, "curve has no equations");
    if (!spec.is_complete_intersection())
        throw Error(ErrorCode::NoEquations, "need " + std::to_string(spec.coordinates() - 1) + " equations, have " +
                                                std::to_string(spec.equations->size()));
    const std::vector<Polynomial> minors = jacobian_minors(*spec.equations, spec.coordinates());
    int order = 2 * max_modulus(model);
    for (int attempt = 0; attempt < 4; ++attempt, order *= 2) {
        if (!verify_equations(spec, order))
            throw Error(ErrorCode::EquationsFailVerification,
                        "equations do not vanish on the parametrization modulo t^" + std::to_string(order));
        std::vector<MultiSeries> gens;
        for (const Polynomial& g : minors) {
            std::vector<TruncatedSeries> b;
            for (std::size_t i = 0; i < spec.branches(); ++i) b.push_back(g.evaluate(spec.branch_series(i, order)));
            gens.emplace_back(std::move(b));
        }
        try {
            return ideal_from_generators(model, gens);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::OrderTooLow) throw;
        }
    }
    throw Error(ErrorCode::OrderTooLow, "Jacobian minors not determined up to order " + std::to_string(order));
}

long rho_invariant(const AlgebraModel& model) {
    const FracIdeal b = endo_ring(dual_ideal(jacobian_ideal(model)));
    return length_quotient(b, unit_ideal(model));
}

RhoPrime rho_prime_invariant(const AlgebraModel& model, bool gorenstein) {
    const FracIdeal m = module_MA(model);
    const FracIdeal a = unit_ideal(model);
    const FracIdeal end_dual = endo_ring(dual_ideal(m));
    const FracIdeal end_m = endo_ring(m);
    if (gorenstein && !(end_dual == end_m))
        throw Error(ErrorCode::CriteriaDisagree, "Gorenstein curve with End(M) != End(M^-1)");
    return {length_quotient(end_dual, a), length_quotient(end_m, a)};
}

InvariantReport qh_report(const AlgebraModel& model) {
    auto disagree = [](const std::string& what) { throw Error(ErrorCode::CriteriaDisagree, what); };

    InvariantReport rep;
    rep.delta = model.delta();
    rep.tau = model.tau();
    rep.smooth = model.smooth();
    rep.complete_intersection = model.spec().is_complete_intersection();
    rep.gorenstein = is_symmetric(semigroup_of_curve(model));

    const FracIdeal a = unit_ideal(model);
    const FracIdeal m = maximal_ideal_of(model);
    rep.length_normalization = model.delta_invariant();
    rep.length_m_dual = length_quotient(dual_ideal(m), a);
    if (rep.gorenstein != (rep.length_m_dual == 1)) disagree("semigroup symmetry and l(m^-1/A) = 1 disagree");

    const SubspaceBasis tdt_m = subspace_tdt_m(model);
    const FracIdeal big_m = module_MA(model);
    rep.qh_by_tdt_m = tdt_m == big_m.subspace();

    const IsoResult iso = subspaces_isomorphic(m.subspace(), tdt_m);
    rep.qh_by_unit_multiple = iso.isomorphic && iso.unit_witness;
    if (rep.qh_by_unit_multiple) rep.unit_witness = iso.witness;

    const IsoResult iso_m = module_isomorphic(m, big_m);
    rep.m_iso_M = iso_m.isomorphic;
    rep.m_iso_M_unit = iso_m.isomorphic && iso_m.unit_witness;

    const RhoPrime rp = rho_prime_invariant(model, rep.gorenstein);
    rep.rho_prime = rp.rho_prime;
    rep.length_end_M = rp.end_M_length;
    rep.qh_by_rho_prime = rep.rho_prime == 1;

    if (rep.complete_intersection) {
        rep.rho = rho_invariant(model);
        rep.syntactic_weights = detect_weights(*model.spec().equations, model.spec().coordinates());
    }

    if (rep.qh_by_unit_multiple != rep.qh_by_tdt_m) disagree("unit isomorphism and exactness of Zariski differentials disagree");
    if (rep.smooth) {
        if (rep.rho_prime != 0 || (rep.rho && *rep.rho != 0)) disagree("smooth curve with nonzero rho");
        if (!rep.qh_by_tdt_m) disagree("smooth curve fails the exactness criterion");
    } else {
        if (rep.gorenstein && rep.qh_by_tdt_m != rep.qh_by_rho_prime) disagree("Gorenstein: QH and rho' = 1 disagree");
        if (rep.rho) {
            if (*rep.rho != rep.rho_prime) disagree("complete intersection with rho != rho'");
            if (rep.qh_by_tdt_m != (*rep.rho == 1)) disagree("complete intersection: QH and rho = 1 disagree");
        }
    }
    if (rep.syntactic_weights && !rep.qh_by_tdt_m) disagree("weighted homogeneous equations but criteria say not QH");
    return rep;
}

namespace {

struct Inequality {
    std::vector<Rational> a;  // a · λ >= b
    Rational b;
};

// Some λ with a·λ >= b for every row, by Fourier–Motzkin elimination.
std::optional<std::vector<Rational>> solve_inequalities(std::vector<Inequality> rows, std::size_t d) {
    std::vector<std::vector<Inequality>> stages{rows};
    for (std::size_t k = d; k-- > 0;) {
        const auto& cur = stages.back();
        std::vector<Inequality> next, pos, neg;
        for (const auto& q : cur) {
            const int s = q.a[k].sign();
            (s > 0 ? pos : s < 0 ? neg : next).push_back(q);
        }
        for (const auto& p : pos)
            for (const auto& n : neg) {
                // Combine so the coefficient of λ_k cancels.
                const Rational fp = -n.a[k], fn = p.a[k];
                Inequality c{std::vector<Rational>(d, Rational(0)), fp * p.b + fn * n.b};
                for (std::size_t j = 0; j < d; ++j) c.a[j] = fp * p.a[j] + fn * n.a[j];
                next.push_back(std::move(c));
            }
        stages.push_back(std::move(next));
    }
    for (const auto& q : stages.back())
        if (q.b.sign() > 0) return std::nullopt;

    std::vector<Rational> lambda(d, Rational(0));
    for (std::size_t k = 0; k < d; ++k) {
        // stages[d - k] constrains λ_0..λ_k.
        std::optional<Rational> lower, upper;
        for (const auto& q : stages[d - k - 1]) {
            if (q.a[k].is_zero()) continue;
            Rational rest = q.b;
            for (std::size_t j = 0; j < k; ++j) rest -= q.a[j] * lambda[j];
            const Rational bound = rest / q.a[k];
            if (q.a[k].sign() > 0)
                lower = lower ? std::max(*lower, bound) : bound;
            else
                upper = upper ? std::min(*upper, bound) : bound;
        }
        lambda[k] = lower ? *lower : upper ? *upper : Rational(0);
    }
    return lambda;
}

}  // namespace

std::optional<std::vector<Rational>> detect_weights(const std::vector<Polynomial>& equations, std::size_t n) {
    std::vector<VectorQ> diffs;
    for (const Polynomial& f : equations) {
        if (f.variables() != n) throw Error(ErrorCode::InvalidArgument, "equation has the wrong variable count");
        const auto& terms = f.terms();
        if (terms.empty()) continue;
        const Exponent& e0 = terms.begin()->first;
        for (const auto& [e, c] : terms) {
            VectorQ row(static_cast<Index>(n));
            for (std::size_t j = 0; j < n; ++j) row(static_cast<Index>(j)) = Rational(e[j] - e0[j]);
            diffs.push_back(std::move(row));
        }
    }
    MatrixQ d(static_cast<Index>(diffs.size()), static_cast<Index>(n));
    for (std::size_t k = 0; k < diffs.size(); ++k) d.row(static_cast<Index>(k)) = diffs[k].transpose();
    const MatrixQ basis = kernel(d);
    const std::size_t dim = static_cast<std::size_t>(basis.cols());
    if (dim == 0) return std::nullopt;

    // Weights w = Kλ; scale invariance lets w > 0 become w >= 1.
    std::vector<Inequality> rows;
    for (std::size_t j = 0; j < n; ++j) {
        Inequality q{std::vector<Rational>(dim), Rational(1)};
        for (std::size_t c = 0; c < dim; ++c) q.a[c] = basis(static_cast<Index>(j), static_cast<Index>(c));
        rows.push_back(std::move(q));
    }
    const auto lambda = solve_inequalities(std::move(rows), dim);
    if (!lambda) return std::nullopt;

    std::vector<Rational> w(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t c = 0; c < dim; ++c)
            w[j] += basis(static_cast<Index>(j), static_cast<Index>(c)) * (*lambda)[c];
    mpz_class den = 1, num = 0;
    for (const Rational& x : w) den = lcm(den, x.denominator());
    for (const Rational& x : w) num = gcd(num, mpz_class(x.numerator() * (den / x.denominator())));
    for (Rational& x : w) x = Rational(mpq_class(x.numerator() * (den / x.denominator()), num));
    return w;
}

NormalizationStep vasconcelos_step(const AlgebraModel& model) {
    const FracIdeal j = jacobian_ideal(model);
    const FracIdeal j_inv = dual_ideal(j);
    const FracIdeal b = endo_ring(j_inv);
    if (!(b == dual_ideal(product(j, j_inv))))
        throw Error(ErrorCode::CriteriaDisagree, "End(J^-1) differs from (J J^-1)^-1");
    const long colength = length_quotient(b, unit_ideal(model));
    if (colength == 0) return {model, true, 0};
    return {model_from_ring(model, b.subspace()), false, colength};
}

}  // namespace qhcurve
