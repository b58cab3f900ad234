#include "qhcurve/fractional_ideal.hpp"

#include <algorithm>

namespace qhcurve {

FracIdeal::FracIdeal(const AlgebraModel& model, std::vector<MultiSeries> generators, SubspaceBasis subspace)
    : model_(&model), generators_(std::move(generators)), subspace_(std::move(subspace)) {
    if (subspace_.branches() != model.branches())
        throw Error(ErrorCode::InvalidArgument, "ideal and model have different branch counts");
}

namespace {

// A-module generators of span(rows) + t^tail Ã: the rows, and enough tail
// monomials that their A-multiples cover t^tail Ã.
std::vector<MultiSeries> generators_of(const AlgebraModel& model, const SubspaceBasis& s) {
    std::vector<MultiSeries> gens = s.elements();
    const std::size_t r = s.branches();
    for (std::size_t i = 0; i < r; ++i)
        for (int j = 0; j < std::max(model.delta()[i], 1); ++j)
            gens.push_back(MultiSeries::unit_monomial(r, i, s.tail()[i] + j));
    return gens;
}

void require_same_model(const FracIdeal& a, const FracIdeal& b) {
    if (&a.model() != &b.model()) throw Error(ErrorCode::InvalidArgument, "ideals belong to different models");
}

}  // namespace

std::optional<MultiSeries> generic_combination(const std::vector<MultiSeries>& gens) {
    if (gens.empty()) return std::nullopt;
    const std::size_t r = gens.front().size();
    for (std::size_t i = 0; i < r; ++i) {
        bool known = false, nonzero = false;
        for (const MultiSeries& g : gens) {
            nonzero = nonzero || !g[i].all_zero();
            known = known || !g[i].is_exact_zero();
        }
        if (!nonzero && known)
            throw Error(ErrorCode::OrderTooLow,
                        "generators vanish to their known order on branch " + std::to_string(i));
        if (!nonzero) return std::nullopt;
    }
    // Leading coefficients on branch i are a nonzero polynomial in c of
    // degree < gens.size(), so one of r(m-1)+1 values of c avoids all roots.
    const int m = static_cast<int>(gens.size());
    for (int c = 1; c <= static_cast<int>(r) * (m - 1) + 1; ++c) {
        MultiSeries x = MultiSeries::constant(r, Rational(0));
        Rational p(1);
        for (const MultiSeries& g : gens) {
            x = x + p * g;
            p *= Rational(c);
        }
        if (finite_valuation(x)) return x;
    }
    return std::nullopt;
}

FracIdeal ideal_from_generators(const AlgebraModel& model, const std::vector<MultiSeries>& gens) {
    const std::size_t r = model.branches();
    for (const MultiSeries& g : gens)
        if (g.size() != r) throw Error(ErrorCode::InvalidArgument, "generator has the wrong branch count");
    const auto x = generic_combination(gens);
    if (!x) throw Error(ErrorCode::NoNonZeroDivisor, "generators contain no non-zerodivisor");
    // x A ⊇ x t^δ Ã = t^{ν(x)+δ} Ã.
    const IntVector tail = *finite_valuation(*x) + model.delta();
    IntVector low = tail;
    for (const MultiSeries& g : gens) {
        const Valuation val = multivaluation(g);
        for (std::size_t i = 0; i < r; ++i)
            if (val[i].is_finite()) low[i] = std::min(low[i], val[i].value);
    }
    const Window w(low, tail);
    MatrixQ rows(static_cast<Index>(gens.size()), w.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        MultiSeries g = gens[k];
        for (std::size_t i = 0; i < r; ++i) g[i] = g[i].truncate(tail[i]);
        rows.row(static_cast<Index>(k)) = w.embed(g).transpose();
    }
    const SubspaceBasis span(w, rows);
    return FracIdeal(model, gens, product(model.ring(), span));
}

FracIdeal ideal_from_subspace(const AlgebraModel& model, const SubspaceBasis& s) {
    if (!(product(model.ring(), s) == s)) throw Error(ErrorCode::ContainmentViolation, "subspace is not an A-module");
    return FracIdeal(model, generators_of(model, s), s);
}

FracIdeal unit_ideal(const AlgebraModel& model) {
    return FracIdeal(model, {MultiSeries::constant(model.branches(), Rational(1))}, model.ring());
}

FracIdeal maximal_ideal_of(const AlgebraModel& model) {
    const SubspaceBasis m = maximal_ideal(model);
    return FracIdeal(model, generators_of(model, m), m);
}

FracIdeal normalization_ideal(const AlgebraModel& model) {
    const SubspaceBasis n = normalization(model.branches());
    return FracIdeal(model, generators_of(model, n), n);
}

FracIdeal hom_ideals(const FracIdeal& i1, const FracIdeal& i2) {
    require_same_model(i1, i2);
    const SubspaceBasis h = colon(i1.subspace(), i2.subspace());
    return FracIdeal(i1.model(), generators_of(i1.model(), h), h);
}

FracIdeal dual_ideal(const FracIdeal& i) { return hom_ideals(i, unit_ideal(i.model())); }

FracIdeal endo_ring(const FracIdeal& i) {
    FracIdeal e = hom_ideals(i, i);
    if (!is_subset(i.model().ring(), e.subspace()) ||
        !is_subset(e.subspace(), normalization(i.model().branches())))
        throw Error(ErrorCode::ContainmentViolation, "End(I) is not between A and its normalization");
    return e;
}

FracIdeal product(const FracIdeal& a, const FracIdeal& b) {
    require_same_model(a, b);
    const SubspaceBasis p = product(a.subspace(), b.subspace());
    return FracIdeal(a.model(), generators_of(a.model(), p), p);
}

FracIdeal scale(const MultiSeries& x, const FracIdeal& i) {
    const SubspaceBasis s = scale(x, i.subspace());
    std::vector<MultiSeries> gens;
    for (const MultiSeries& g : i.generators()) gens.push_back(x * g);
    return FracIdeal(i.model(), std::move(gens), s);
}

long length_quotient(const FracIdeal& i, const FracIdeal& j) {
    require_same_model(i, j);
    return length_quotient(i.subspace(), j.subspace());
}

bool is_subset(const FracIdeal& a, const FracIdeal& b) {
    require_same_model(a, b);
    return is_subset(a.subspace(), b.subspace());
}

std::vector<IntVector> gamma_box(const FracIdeal& i) { return gamma_box(i.subspace(), i.low(), i.tail()); }

bool gamma_sets_equal(const FracIdeal& i, const FracIdeal& j) {
    const IntVector lo = componentwise_min(i.low(), j.low());
    const IntVector hi = componentwise_max(i.tail(), j.tail());
    return gamma_box(i.subspace(), lo, hi) == gamma_box(j.subspace(), lo, hi);
}

bool ideals_equal(const FracIdeal& i, const FracIdeal& j) {
    require_same_model(i, j);
    const bool equal = i.subspace() == j.subspace();
    if (is_subset(j, i) || is_subset(i, j)) {
        if (gamma_sets_equal(i, j) != equal)
            throw Error(ErrorCode::CriteriaDisagree, "nested ideals: value sets and subspaces disagree on equality");
    }
    return equal;
}

bool is_principal(const FracIdeal& i) {
    const SubspaceBasis mi = product(maximal_ideal(i.model()), i.subspace());
    return length_quotient(i.subspace(), mi) == 1;
}

IsoResult module_isomorphic(const FracIdeal& i, const FracIdeal& j) {
    require_same_model(i, j);
    return subspaces_isomorphic(i.subspace(), j.subspace());
}

IsoResult subspaces_isomorphic(const SubspaceBasis& i, const SubspaceBasis& j) {
    const SubspaceBasis h = colon(i, j);
    const std::size_t r = h.branches();

    // A finite-dimensional slice of H on which every coordinate functional
    // at ν_i = low_i is nonzero.
    std::vector<MultiSeries> basis = h.elements();
    for (std::size_t b = 0; b < r; ++b)
        if (h.low()[b] == h.tail()[b]) basis.push_back(MultiSeries::unit_monomial(r, b, h.tail()[b]));
    const Window w(h.low(), componentwise_max(h.tail(), h.low() + IntVector(r, 1)));
    std::vector<VectorQ> coords;
    for (const MultiSeries& x : basis) coords.push_back(w.embed(x));

    const int m = static_cast<int>(basis.size());
    std::vector<VectorQ> candidates;
    for (int c = 1; c <= static_cast<int>(r) * std::max(m - 1, 0) + 1; ++c) {
        VectorQ v = VectorQ::Zero(w.size());
        Rational p(1);
        for (int k = 0; k < m; ++k) {
            v += p * coords[static_cast<std::size_t>(k)];
            p *= Rational(c);
        }
        candidates.push_back(std::move(v));
    }
    for (const VectorQ& v : coords) candidates.push_back(v);

    IsoResult out;
    bool rejected = false;
    for (const VectorQ& v : candidates) {
        bool generic = true;
        for (std::size_t b = 0; b < r && generic; ++b) generic = !v(w.column(h.low()[b], b)).is_zero();
        if (!generic) continue;
        ++out.candidates_tested;
        const MultiSeries x = w.element(v);
        const bool ok = scale(x, i) == j;
        // Generic candidates differ by units of End(I): all or none work.
        if (ok == rejected && (ok || out.witness))
            throw Error(ErrorCode::CriteriaDisagree, "isomorphism candidates of equal valuation disagree");
        if (!ok) {
            rejected = true;
            continue;
        }
        if (!out.witness) out.witness = x;
    }
    out.isomorphic = out.witness.has_value();
    out.unit_witness = out.isomorphic && std::all_of(h.low().begin(), h.low().end(), [](int v) { return v == 0; });
    return out;
}

}  // namespace qhcurve
