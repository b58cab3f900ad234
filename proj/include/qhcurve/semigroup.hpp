#ifndef QHCURVE_SEMIGROUP_HPP
#define QHCURVE_SEMIGROUP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qhcurve/curve_algebra.hpp"

namespace qhcurve {

// Γ_A restricted to the box ∏[0, δ_i]. Everything outside is determined by
// capping: α ∈ Γ_A iff α >= 0 and min(α, δ) ∈ Γ_A, because t^δ Ã ⊆ A.
class SemigroupTable {
public:
    SemigroupTable(IntVector delta, std::vector<bool> members);

    std::size_t branches() const { return delta_.size(); }
    const IntVector& delta() const { return delta_; }
    IntVector tau() const;
    // Box point membership; α must satisfy 0 <= α <= δ.
    bool in_box(const IntVector& alpha) const;
    // Members in lexicographic order.
    std::vector<IntVector> members() const;

    friend bool operator==(const SemigroupTable&, const SemigroupTable&) = default;

private:
    std::size_t index(const IntVector& alpha) const;

    IntVector delta_;
    std::vector<bool> members_;
};

// Γ(S) ∩ [lo, hi], lexicographic.
std::vector<IntVector> gamma_of_subspace(const SubspaceBasis& s, const IntVector& lo, const IntVector& hi);

SemigroupTable semigroup_of_subspace(const SubspaceBasis& ring);
SemigroupTable semigroup_of_curve(const AlgebraModel& model);

bool capped_membership(const SemigroupTable& table, const IntVector& alpha);

// Δ(α) ∩ Γ_A ≠ ∅, or Δ_i(α) ∩ Γ_A ≠ ∅ when a branch is given.
bool delta_set_meets(const SemigroupTable& table, const IntVector& alpha,
                     std::optional<std::size_t> branch = std::nullopt);

// β ∈ Δ(α) (or Δ_i(α)).
bool in_delta_set(const IntVector& alpha, const IntVector& beta, std::optional<std::size_t> branch = std::nullopt);

// α ∈ Γ ⇔ Δ(τ − α) ∩ Γ = ∅, checked on ∏[-1, δ_i + 1].
bool is_symmetric(const SemigroupTable& table);

// Single-branch test: α ∈ Γ ⇔ τ − α ∉ Γ for 0 <= α <= τ.
bool is_symmetric_classical(const SemigroupTable& table);

}  // namespace qhcurve

#endif  // QHCURVE_SEMIGROUP_HPP
