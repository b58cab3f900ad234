#include "qhcurve/curve_algebra.hpp"

#include <algorithm>
#include <string>

namespace qhcurve {

RationalFunction RationalFunction::monomial(int exponent, const Rational& c) {
    std::vector<Rational> num(static_cast<std::size_t>(exponent) + 1, Rational(0));
    num.back() = c;
    return polynomial(std::move(num));
}

bool RationalFunction::is_zero() const {
    return std::all_of(num.begin(), num.end(), [](const Rational& c) { return c.is_zero(); });
}

std::vector<MultiSeries> CurveSpec::coordinate_series(int order) const {
    std::vector<MultiSeries> out;
    for (std::size_t j = 0; j < coordinates(); ++j) {
        std::vector<TruncatedSeries> b;
        for (std::size_t i = 0; i < branches(); ++i) b.push_back(param[i][j].expand(order));
        out.emplace_back(std::move(b));
    }
    return out;
}

std::vector<TruncatedSeries> CurveSpec::branch_series(std::size_t branch, int order) const {
    std::vector<TruncatedSeries> out;
    for (const auto& f : param.at(branch)) out.push_back(f.expand(order));
    return out;
}

void validate_spec(const CurveSpec& spec) {
    if (spec.coordinates() == 0) throw Error(ErrorCode::InvalidArgument, "curve needs at least one coordinate");
    if (spec.branches() == 0) throw Error(ErrorCode::InvalidArgument, "curve needs at least one branch");
    for (std::size_t i = 0; i < spec.branches(); ++i) {
        const auto& b = spec.param[i];
        if (b.size() != spec.coordinates())
            throw Error(ErrorCode::InvalidArgument, "branch " + std::to_string(i) + " defines " +
                                                        std::to_string(b.size()) + " of " +
                                                        std::to_string(spec.coordinates()) + " coordinates");
        bool all_zero = true;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].den.empty() || b[j].den.front().is_zero())
                throw Error(ErrorCode::NonUnitDenominator, "branch " + std::to_string(i) + ", coordinate " +
                                                               spec.variables[j] + ": denominator vanishes at 0");
            if (!b[j].num.empty() && !b[j].num.front().is_zero())
                throw Error(ErrorCode::DegenerateInput, "branch " + std::to_string(i) + ", coordinate " +
                                                            spec.variables[j] + " does not vanish at t = 0");
            all_zero = all_zero && b[j].is_zero();
        }
        if (all_zero)
            throw Error(ErrorCode::DegenerateInput, "branch " + std::to_string(i) + " parametrization is zero");
    }
    if (spec.equations)
        for (const auto& f : *spec.equations)
            if (f.variables() != spec.coordinates())
                throw Error(ErrorCode::InvalidArgument, "equation variable count does not match coordinates");
}

TruncatedAlgebra monomial_closure(const std::vector<MultiSeries>& generators, int order) {
    if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "no generators");
    const std::size_t r = generators.front().size();
    const Window w(IntVector(r, 0), IntVector(r, order));
    EchelonBuilder<Rational> builder(w.size());
    std::vector<MultiSeries> frontier;
    {
        const VectorQ one = builder.insert(w.embed(MultiSeries::constant(r, Rational(1))));
        frontier.push_back(w.element(one));
    }
    // Breadth-first: multiply the newest basis vectors by every generator.
    while (!frontier.empty()) {
        std::vector<MultiSeries> next;
        for (const MultiSeries& b : frontier) {
            for (const MultiSeries& g : generators) {
                const VectorQ rem = builder.insert(w.embed(truncate(b * g, order)));
                if (!is_zero_vector(rem)) next.push_back(w.element(rem));
            }
        }
        frontier = std::move(next);
    }
    return TruncatedAlgebra{w, builder.finish()};
}

namespace {

// Componentwise minimal valuation of the coordinates: the valuation of a
// generic element of the maximal ideal. nullopt when some branch has no
// coordinate with a known nonzero term yet.
std::optional<IntVector> generic_valuation(const std::vector<MultiSeries>& coords, std::size_t r) {
    IntVector v(r, kExactOrder);
    for (const auto& x : coords) {
        const Valuation val = multivaluation(x);
        for (std::size_t i = 0; i < r; ++i)
            if (val[i].is_finite()) v[i] = std::min(v[i], val[i].value);
    }
    for (int vi : v)
        if (vi == kExactOrder) return std::nullopt;
    return v;
}

int max_finite_valuation(const std::vector<MultiSeries>& coords) {
    int m = 0;
    for (const auto& x : coords)
        for (const auto& b : multivaluation(x))
            if (b.is_finite()) m = std::max(m, b.value);
    return m;
}

void check_distinct_branches(const CurveSpec& spec, int order) {
    for (std::size_t i = 0; i < spec.branches(); ++i) {
        const auto bi = spec.branch_series(i, order);
        for (std::size_t j = i + 1; j < spec.branches(); ++j) {
            const auto bj = spec.branch_series(j, order);
            bool same = true;
            for (std::size_t k = 0; k < bi.size() && same; ++k) same = (bi[k] - bj[k]).all_zero();
            if (same)
                throw Error(ErrorCode::DegenerateInput, "branches " + std::to_string(i) + " and " +
                                                            std::to_string(j) + " agree up to order " +
                                                            std::to_string(order));
        }
    }
}

// Reduced ring obtained from a closure at modulus N. The conductor candidate
// is certified once N >= δ + v: then t^δ Ã ⊆ A + x t^δ Ã for an element x of
// valuation v, and completeness gives t^δ Ã ⊆ A.
struct ClosureAttempt {
    TruncatedAlgebra truncated;
    SubspaceBasis ring;
    IntVector generic;
    int max_generator_valuation = 0;
};

std::optional<ClosureAttempt> attempt(const CurveSpec& spec, int order) {
    const auto coords = spec.coordinate_series(order);
    const auto v = generic_valuation(coords, spec.branches());
    if (!v) return std::nullopt;
    ClosureAttempt a{monomial_closure(coords, order), {}, *v, max_finite_valuation(coords)};
    a.ring = SubspaceBasis(a.truncated.window, a.truncated.basis.rows);
    return a;
}

bool certificate_holds(const ClosureAttempt& a, int order) {
    for (std::size_t i = 0; i < a.generic.size(); ++i)
        if (a.ring.tail()[i] + a.generic[i] > order) return false;
    return true;
}

}  // namespace

AlgebraModel::AlgebraModel(CurveSpec spec, TruncatedAlgebra truncated, SubspaceBasis ring, bool certified,
                           bool derived)
    : spec_(std::move(spec)),
      truncated_(std::move(truncated)),
      ring_(std::move(ring)),
      certified_(certified),
      derived_(derived) {}

IntVector AlgebraModel::tau() const {
    IntVector t = delta();
    for (int& x : t) --x;
    return t;
}

bool AlgebraModel::smooth() const {
    return branches() == 1 && delta()[0] == 0;
}

long AlgebraModel::delta_invariant() const { return length_quotient(normalization(branches()), ring_); }

AlgebraModel build_algebra(const CurveSpec& spec, const BuildOptions& options) {
    validate_spec(spec);
    int order = std::max(options.initial_order, 2);
    std::optional<ClosureAttempt> found;
    while (true) {
        if (order > options.max_order)
            throw Error(ErrorCode::NoStabilization,
                        "conductor not certified below max order " + std::to_string(options.max_order));
        check_distinct_branches(spec, order);
        found = attempt(spec, order);
        if (found && certificate_holds(*found, order)) break;
        order *= 2;
    }

    // Headroom of one conductor beyond δ for downstream ideal computations.
    int wanted = order;
    for (int d : found->ring.tail()) wanted = std::max(wanted, 2 * d + found->max_generator_valuation + 2);
    wanted = std::min(wanted, std::max(options.max_order, order));
    if (wanted != order) {
        found = attempt(spec, wanted);
        order = wanted;
        if (!found || !certificate_holds(*found, order))
            throw Error(ErrorCode::NoStabilization, "conductor candidate changed at order " + std::to_string(order));
    }

    if (2 * order > options.max_order)
        throw Error(ErrorCode::NoStabilization, "doubled order " + std::to_string(2 * order) +
                                                    " for certification exceeds max order " +
                                                    std::to_string(options.max_order));
    const auto doubled = attempt(spec, 2 * order);
    if (!doubled || !(doubled->ring == found->ring))
        throw Error(ErrorCode::NoStabilization, "ring changed under order doubling from " + std::to_string(order));

    return AlgebraModel(spec, std::move(found->truncated), std::move(found->ring), true, false);
}

AlgebraModel model_from_ring(const AlgebraModel& parent, const SubspaceBasis& ring) {
    if (!is_subset(parent.ring(), ring) || !is_subset(ring, normalization(parent.branches())))
        throw Error(ErrorCode::ContainmentViolation, "ring is not sandwiched between A and its normalization");
    if (!(product(ring, ring) == ring))
        throw Error(ErrorCode::ContainmentViolation, "subspace is not closed under multiplication");
    const Window& w = parent.truncated().window;
    TruncatedAlgebra t{w, rref(spanning_rows(ring, w))};
    CurveSpec spec = parent.spec();
    spec.equations.reset();
    return AlgebraModel(std::move(spec), std::move(t), ring, parent.stability_certified(), true);
}

IntVector compute_conductor(const AlgebraModel& model) { return model.delta(); }

bool contains(const AlgebraModel& model, const MultiSeries& x) { return contains(model.ring(), x); }

SubspaceBasis normalization(std::size_t branches) { return SubspaceBasis::tail_only(IntVector(branches, 0)); }

SubspaceBasis maximal_ideal(const AlgebraModel& model) {
    return intersect(model.ring(), SubspaceBasis::tail_only(IntVector(model.branches(), 1)));
}

bool gamma_contains_truncated(const AlgebraModel& model, const IntVector& alpha) {
    const auto& t = model.truncated();
    return gamma_member_in_window(t.window, t.basis.rows, alpha);
}

bool verify_equations(const CurveSpec& spec, int order) {
    if (!spec.equations) throw Error(ErrorCode::NoEquations, "curve has no equations");
    for (std::size_t i = 0; i < spec.branches(); ++i) {
        const auto values = spec.branch_series(i, order);
        for (const auto& f : *spec.equations) {
            const TruncatedSeries s = f.evaluate(values).truncate(order);
            if (!s.all_zero()) return false;
        }
    }
    return true;
}

}  // namespace qhcurve
