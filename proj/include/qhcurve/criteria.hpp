#ifndef QHCURVE_CRITERIA_HPP
#define QHCURVE_CRITERIA_HPP

#include <optional>
#include <vector>

#include "qhcurve/fractional_ideal.hpp"
#include "qhcurve/semigroup.hpp"

namespace qhcurve {

// A · t∂t(𝔪_A).
FracIdeal module_MA(const AlgebraModel& model);
// The k-linear image t∂t(𝔪_A), without A-closure.
SubspaceBasis subspace_tdt_m(const AlgebraModel& model);

// Ideal of maximal minors of the Jacobian matrix of the curve equations,
// composed with the parametrization. Needs n-1 equations in n variables.
// Throws NoEquations or EquationsFailVerification.
FracIdeal jacobian_ideal(const AlgebraModel& model);

// ℓ(End(J_A⁻¹)/A).
long rho_invariant(const AlgebraModel& model);

struct RhoPrime {
    long rho_prime = 0;     // ℓ(End(M_A⁻¹)/A)
    long end_M_length = 0;  // ℓ(End(M_A)/A)
};
// For Gorenstein curves End(M) = End(M⁻¹); a mismatch throws CriteriaDisagree.
RhoPrime rho_prime_invariant(const AlgebraModel& model, bool gorenstein);

struct InvariantReport {
    IntVector delta;
    IntVector tau;
    bool smooth = false;
    bool gorenstein = false;
    bool complete_intersection = false;
    // t∂t 𝔪_A = M_A.
    bool qh_by_tdt_m = false;
    // ε 𝔪_A = t∂t 𝔪_A for a unit ε of Ã.
    bool qh_by_unit_multiple = false;
    std::optional<MultiSeries> unit_witness;
    // 𝔪_A ≅ M_A as A-modules, with and without a unit multiplier.
    bool m_iso_M = false;
    bool m_iso_M_unit = false;
    // ρ′ = 1; decides quasihomogeneity only for singular Gorenstein curves.
    bool qh_by_rho_prime = false;
    std::optional<long> rho;
    long rho_prime = 0;
    std::optional<std::vector<Rational>> syntactic_weights;
    long length_normalization = 0;  // ℓ(Ã/A)
    long length_m_dual = 0;         // ℓ(𝔪⁻¹/A)
    long length_end_M = 0;          // ℓ(End(M_A)/A)

    bool quasihomogeneous() const { return qh_by_tdt_m; }
};

// Evaluates every applicable criterion and checks that those known to be
// equivalent agree; throws CriteriaDisagree otherwise.
InvariantReport qh_report(const AlgebraModel& model);

// Positive weights making every equation weighted homogeneous, normalized
// to coprime integers; nullopt when none exist for these coordinates.
std::optional<std::vector<Rational>> detect_weights(const std::vector<Polynomial>& equations, std::size_t n);

struct NormalizationStep {
    AlgebraModel model;
    bool already_smooth = false;
    long colength = 0;  // ℓ(B/A)
};

// A ↦ B = End(J_A⁻¹). Also checks End(J⁻¹) = (J J⁻¹)⁻¹ and that B is a ring.
NormalizationStep vasconcelos_step(const AlgebraModel& model);

}  // namespace qhcurve

#endif  // QHCURVE_CRITERIA_HPP
