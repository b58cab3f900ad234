#ifndef QHCURVE_CURVE_ALGEBRA_HPP
#define QHCURVE_CURVE_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qhcurve/polynomial.hpp"
#include "qhcurve/subspace.hpp"

namespace qhcurve {

// p(t)/q(t) with q(0) != 0, as dense coefficient lists.
struct RationalFunction {
    std::vector<Rational> num;
    std::vector<Rational> den{Rational(1)};

    static RationalFunction polynomial(std::vector<Rational> coeffs) { return {std::move(coeffs), {Rational(1)}}; }
    static RationalFunction monomial(int exponent, const Rational& c = Rational(1));

    bool is_zero() const;
    TruncatedSeries expand(int order) const { return expand_rational_function(num, den, order); }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

// A reduced curve given by one parametrization per branch.
struct CurveSpec {
    std::string name;
    std::vector<std::string> variables;              // n coordinate names
    std::vector<std::vector<RationalFunction>> param;  // param[branch][coordinate]
    // n-1 equations of a complete-intersection presentation, when known.
    std::optional<std::vector<Polynomial>> equations;

    std::size_t branches() const { return param.size(); }
    std::size_t coordinates() const { return variables.size(); }
    bool is_complete_intersection() const {
        return equations && equations->size() + 1 == coordinates();
    }

    // Coordinate functions as elements of the total ring of fractions, each
    // branch expanded modulo t^order.
    std::vector<MultiSeries> coordinate_series(int order) const;
    // The parametrization of one branch, one series per coordinate.
    std::vector<TruncatedSeries> branch_series(std::size_t branch, int order) const;
};

// Throws DegenerateInput / InvalidArgument for malformed specs.
void validate_spec(const CurveSpec& spec);

struct BuildOptions {
    int initial_order = 16;
    int max_order = 512;
};

// Image of A in ⊕ k[t_i]/(t_i^N_i), as produced by the monomial closure.
struct TruncatedAlgebra {
    Window window;  // [0, N)
    Echelon<Rational> basis;
};

// The coordinate ring A of the curve inside its normalization.
//
// ring() is exact: A = span(rows) + t^δ Ã. truncated() is the raw image of A
// modulo t^moduli, kept for cross-checks that must not rely on δ.
class AlgebraModel {
public:
    AlgebraModel(CurveSpec spec, TruncatedAlgebra truncated, SubspaceBasis ring, bool certified, bool derived);

    const CurveSpec& spec() const { return spec_; }
    std::size_t branches() const { return ring_.branches(); }
    const IntVector& moduli() const { return truncated_.window.high(); }
    const TruncatedAlgebra& truncated() const { return truncated_; }
    const SubspaceBasis& ring() const { return ring_; }
    const IntVector& delta() const { return ring_.tail(); }
    IntVector tau() const;
    bool smooth() const;
    bool stability_certified() const { return certified_; }
    // Built from an endomorphism ring rather than a parametrization.
    bool derived() const { return derived_; }
    // ℓ(Ã/A), the delta invariant.
    long delta_invariant() const;

private:
    CurveSpec spec_;
    TruncatedAlgebra truncated_;
    SubspaceBasis ring_;
    bool certified_;
    bool derived_;
};

AlgebraModel build_algebra(const CurveSpec& spec, const BuildOptions& options = {});

// A model whose ring is a given subring of Ã containing the original A
// (used for one normalization step). Verifies multiplicative closure.
AlgebraModel model_from_ring(const AlgebraModel& parent, const SubspaceBasis& ring);

// Span of all monomials in the coordinates modulo t^order.
TruncatedAlgebra monomial_closure(const std::vector<MultiSeries>& generators, int order);

IntVector compute_conductor(const AlgebraModel& model);
bool contains(const AlgebraModel& model, const MultiSeries& x);
SubspaceBasis maximal_ideal(const AlgebraModel& model);
SubspaceBasis normalization(std::size_t branches);

// Γ_A membership decided on the truncated image alone (no conductor capping).
// Throws BoxExceedsModuli when α reaches the moduli.
bool gamma_contains_truncated(const AlgebraModel& model, const IntVector& alpha);

bool verify_equations(const CurveSpec& spec, int order);

}  // namespace qhcurve

#endif  // QHCURVE_CURVE_ALGEBRA_HPP
