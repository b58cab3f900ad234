#include "qhcurve/semigroup.hpp"

#include <algorithm>
#include <cassert>

namespace qhcurve {

SemigroupTable::SemigroupTable(IntVector delta, std::vector<bool> members)
    : delta_(std::move(delta)), members_(std::move(members)) {
    std::size_t size = 1;
    for (int d : delta_) size *= static_cast<std::size_t>(d + 1);
    if (members_.size() != size) throw Error(ErrorCode::InvalidArgument, "membership table has the wrong size");
}

IntVector SemigroupTable::tau() const {
    IntVector t = delta_;
    for (int& x : t) --x;
    return t;
}

std::size_t SemigroupTable::index(const IntVector& alpha) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < delta_.size(); ++i) {
        assert(alpha[i] >= 0 && alpha[i] <= delta_[i]);
        idx = idx * static_cast<std::size_t>(delta_[i] + 1) + static_cast<std::size_t>(alpha[i]);
    }
    return idx;
}

bool SemigroupTable::in_box(const IntVector& alpha) const { return members_[index(alpha)]; }

std::vector<IntVector> SemigroupTable::members() const {
    std::vector<IntVector> out;
    for_each_in_box(IntVector(branches(), 0), delta_, [&](const IntVector& a) {
        if (in_box(a)) out.push_back(a);
    });
    return out;
}

std::vector<IntVector> gamma_of_subspace(const SubspaceBasis& s, const IntVector& lo, const IntVector& hi) {
    return gamma_box(s, lo, hi);
}

SemigroupTable semigroup_of_subspace(const SubspaceBasis& ring) {
    const IntVector& delta = ring.tail();
    std::vector<bool> members;
    for_each_in_box(IntVector(delta.size(), 0), delta,
                    [&](const IntVector& a) { members.push_back(gamma_contains(ring, a)); });
    return SemigroupTable(delta, std::move(members));
}

SemigroupTable semigroup_of_curve(const AlgebraModel& model) { return semigroup_of_subspace(model.ring()); }

bool capped_membership(const SemigroupTable& table, const IntVector& alpha) {
    for (int a : alpha)
        if (a < 0) return false;
    return table.in_box(componentwise_min(alpha, table.delta()));
}

bool in_delta_set(const IntVector& alpha, const IntVector& beta, std::optional<std::size_t> branch) {
    auto in_i = [&](std::size_t i) {
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            if (j == i ? beta[j] != alpha[j] : beta[j] <= alpha[j]) return false;
        }
        return true;
    };
    if (branch) return in_i(*branch);
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (in_i(i)) return true;
    return false;
}

bool delta_set_meets(const SemigroupTable& table, const IntVector& alpha, std::optional<std::size_t> branch) {
    const std::size_t r = table.branches();
    const IntVector& delta = table.delta();
    auto meets_i = [&](std::size_t i) {
        if (alpha[i] < 0) return false;
        // Capped ranges: β_j > α_j for j ≠ i, β_i = α_i.
        IntVector lo(r), hi(r);
        for (std::size_t j = 0; j < r; ++j) {
            if (j == i) {
                lo[j] = hi[j] = std::min(alpha[j], delta[j]);
            } else {
                lo[j] = std::min(std::max(alpha[j] + 1, 0), delta[j]);
                hi[j] = delta[j];
            }
        }
        bool hit = false;
        for_each_in_box(lo, hi, [&](const IntVector& b) { hit = hit || table.in_box(b); });
        return hit;
    };
    if (branch) return meets_i(*branch);
    for (std::size_t i = 0; i < r; ++i)
        if (meets_i(i)) return true;
    return false;
}

bool is_symmetric(const SemigroupTable& table) {
    const IntVector tau = table.tau();
    IntVector lo(table.branches(), -1), hi = table.delta();
    for (int& h : hi) ++h;
    bool ok = true;
    for_each_in_box(lo, hi, [&](const IntVector& a) {
        if (ok) ok = capped_membership(table, a) == !delta_set_meets(table, tau - a);
    });
    return ok;
}

bool is_symmetric_classical(const SemigroupTable& table) {
    if (table.branches() != 1) throw Error(ErrorCode::InvalidArgument, "classical symmetry needs one branch");
    const int tau = table.delta()[0] - 1;
    for (int a = 0; a <= tau; ++a)
        if (capped_membership(table, {a}) == capped_membership(table, {tau - a})) return false;
    return true;
}

}  // namespace qhcurve
