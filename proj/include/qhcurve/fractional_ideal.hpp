#ifndef QHCURVE_FRACTIONAL_IDEAL_HPP
#define QHCURVE_FRACTIONAL_IDEAL_HPP

#include <optional>
#include <vector>

#include "qhcurve/curve_algebra.hpp"

namespace qhcurve {

// A finite A-submodule of the total ring of fractions containing a
// non-zerodivisor. The subspace is exact: it always contains t^tail Ã.
// Holds a non-owning pointer to its model, which must outlive it.
class FracIdeal {
public:
    FracIdeal(const AlgebraModel& model, std::vector<MultiSeries> generators, SubspaceBasis subspace);

    const AlgebraModel& model() const { return *model_; }
    const std::vector<MultiSeries>& generators() const { return generators_; }
    const SubspaceBasis& subspace() const { return subspace_; }
    const IntVector& low() const { return subspace_.low(); }
    const IntVector& tail() const { return subspace_.tail(); }

    friend bool operator==(const FracIdeal& a, const FracIdeal& b) { return a.subspace_ == b.subspace_; }

private:
    const AlgebraModel* model_;
    std::vector<MultiSeries> generators_;
    SubspaceBasis subspace_;
};

// A·gens. Throws NoNonZeroDivisor when no k-combination of the generators
// has finite valuation on every branch, OrderTooLow when a generator is not
// known far enough.
FracIdeal ideal_from_generators(const AlgebraModel& model, const std::vector<MultiSeries>& gens);
// Wraps a subspace that is already an A-module; throws ContainmentViolation otherwise.
FracIdeal ideal_from_subspace(const AlgebraModel& model, const SubspaceBasis& s);

FracIdeal unit_ideal(const AlgebraModel& model);
FracIdeal maximal_ideal_of(const AlgebraModel& model);
FracIdeal normalization_ideal(const AlgebraModel& model);

// {x : x I1 ⊆ I2}.
FracIdeal hom_ideals(const FracIdeal& i1, const FracIdeal& i2);
// Hom(I, A).
FracIdeal dual_ideal(const FracIdeal& i);
// Hom(I, I); throws ContainmentViolation unless A ⊆ End(I) ⊆ Ã.
FracIdeal endo_ring(const FracIdeal& i);
FracIdeal product(const FracIdeal& a, const FracIdeal& b);
FracIdeal scale(const MultiSeries& x, const FracIdeal& i);

// ℓ(I/J); throws NotContained unless J ⊆ I.
long length_quotient(const FracIdeal& i, const FracIdeal& j);
bool is_subset(const FracIdeal& a, const FracIdeal& b);

// Γ(I) on its own box [low, tail]; points beyond are determined by capping at tail.
std::vector<IntVector> gamma_box(const FracIdeal& i);
// Subspace equality. For nested ideals also checks that the value sets agree
// exactly when the ideals do, throwing CriteriaDisagree otherwise.
bool ideals_equal(const FracIdeal& i, const FracIdeal& j);
// Γ(I) and Γ(J) compared on a common box that captures both completely.
bool gamma_sets_equal(const FracIdeal& i, const FracIdeal& j);

// I is principal iff ℓ(I/𝔪I) = 1.
bool is_principal(const FracIdeal& i);

struct IsoResult {
    bool isomorphic = false;
    // Some witness x with x I = J has ν(x) = 0.
    bool unit_witness = false;
    std::optional<MultiSeries> witness;
    int candidates_tested = 0;
};

// Decides whether x I = J for some x in the total ring of fractions. I must
// be an A-module; J may be any subspace containing a tail.
//
// Every witness lies in H = {x : x I ⊆ J} and has ν(x) = low(H); conversely
// any x ∈ H with ν(x) = low(H) is a witness when one exists, because it
// differs from a witness by a unit of End(I). Candidates Σ c^j h_j for
// c = 1..r(m-1)+1 avoid the r coordinate hyperplanes, so the search is
// exhaustive. Every positive answer is verified by recomputing x I.
IsoResult subspaces_isomorphic(const SubspaceBasis& i, const SubspaceBasis& j);
IsoResult module_isomorphic(const FracIdeal& i, const FracIdeal& j);

// Σ c^k g_k for the first c = 1, 2, ... with finite valuation on every
// branch; nullopt when some branch is zero on all of gens.
std::optional<MultiSeries> generic_combination(const std::vector<MultiSeries>& gens);

}  // namespace qhcurve

#endif  // QHCURVE_FRACTIONAL_IDEAL_HPP
