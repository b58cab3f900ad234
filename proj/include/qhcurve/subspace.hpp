#ifndef QHCURVE_SUBSPACE_HPP
#define QHCURVE_SUBSPACE_HPP

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "qhcurve/linalg.hpp"
#include "qhcurve/multiseries.hpp"

namespace qhcurve {

using IntVector = std::vector<int>;

// Coordinates of a finite window of monomials t_i^e, low[i] <= e < high[i],
// ordered by exponent ascending and then branch ascending.
class Window {
public:
    Window() = default;
    Window(IntVector low, IntVector high);

    std::size_t branches() const { return low_.size(); }
    Index size() const { return static_cast<Index>(cols_.size()); }
    const IntVector& low() const { return low_; }
    const IntVector& high() const { return high_; }

    bool contains(int exponent, std::size_t branch) const {
        return exponent >= low_[branch] && exponent < high_[branch];
    }
    Index column(int exponent, std::size_t branch) const {
        return offsets_[branch][static_cast<std::size_t>(exponent - low_[branch])];
    }
    // (exponent, branch) of a column.
    std::pair<int, std::size_t> monomial(Index col) const { return cols_[static_cast<std::size_t>(col)]; }

    VectorQ unit(int exponent, std::size_t branch) const;

    // Coefficients of x inside the window. Throws OrderTooLow when x is not
    // known up to high, InvalidArgument when x has terms below low.
    VectorQ embed(const MultiSeries& x) const;
    // Exact Laurent polynomial with the given coordinates.
    MultiSeries element(const VectorQ& v) const;

    friend bool operator==(const Window& a, const Window& b) { return a.low_ == b.low_ && a.high_ == b.high_; }

private:
    IntVector low_, high_;
    std::vector<std::pair<int, std::size_t>> cols_;
    std::vector<std::vector<Index>> offsets_;
};

// A k-subspace of the total ring of fractions of the form
//
//     span(rows) + t^tail * Ã,
//
// with rows living in the window [low, tail). The representation is kept
// canonical: tail is componentwise minimal, low is the componentwise minimal
// valuation, and rows are in reduced row-echelon form for the fixed
// monomial ordering. Two subspaces are equal iff their representations are.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    // Span of the given rows (coordinates in w) plus t^{w.high()} Ã.
    SubspaceBasis(const Window& w, const MatrixQ& generators);

    // t^tail Ã.
    static SubspaceBasis tail_only(const IntVector& tail);

    std::size_t branches() const { return window_.branches(); }
    const Window& window() const { return window_; }
    const IntVector& low() const { return window_.low(); }
    const IntVector& tail() const { return window_.high(); }
    const MatrixQ& rows() const { return rows_; }
    const std::vector<Index>& pivots() const { return pivots_; }
    Index dim() const { return rows_.rows(); }

    // Basis rows as exact Laurent polynomials.
    std::vector<MultiSeries> elements() const;

    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
        return a.window_ == b.window_ && a.rows_ == b.rows_;
    }

private:
    void normalize();

    Window window_;
    MatrixQ rows_;
    std::vector<Index> pivots_;
};

// Spanning set of (S + t^{w.high} Ã) expressed in the window w; requires w.low <= S.low.
MatrixQ spanning_rows(const SubspaceBasis& s, const Window& w);

bool contains(const SubspaceBasis& s, const MultiSeries& x);
bool is_subset(const SubspaceBasis& a, const SubspaceBasis& b);

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

// x * S for a non-zerodivisor x.
SubspaceBasis scale(const MultiSeries& x, const SubspaceBasis& s);
// k-span of all products a*b.
SubspaceBasis product(const SubspaceBasis& a, const SubspaceBasis& b);
// {x : x * a ⊆ b}.
SubspaceBasis colon(const SubspaceBasis& a, const SubspaceBasis& b);
// Image of the Euler derivation t d/dt; needs tail >= 1 on every branch.
SubspaceBasis apply_tdt(const SubspaceBasis& s);

// dim(big / small); throws NotContained unless small ⊆ big.
long length_quotient(const SubspaceBasis& big, const SubspaceBasis& small);

// α ∈ Γ(S): some element of S has multivaluation exactly α.
bool gamma_contains(const SubspaceBasis& s, const IntVector& alpha);
// α ∈ Γ of the row space of `rows` (coordinates in w), ignoring anything
// beyond w. Requires α < w.high componentwise.
bool gamma_member_in_window(const Window& w, const MatrixQ& rows, const IntVector& alpha);
// Members of Γ(S) inside the box lo <= α <= hi (inclusive), lexicographic order.
std::vector<IntVector> gamma_box(const SubspaceBasis& s, const IntVector& lo, const IntVector& hi);

// Visits every α with lo <= α <= hi in lexicographic order.
void for_each_in_box(const IntVector& lo, const IntVector& hi, const std::function<void(const IntVector&)>& f);

IntVector componentwise_min(const IntVector& a, const IntVector& b);
IntVector componentwise_max(const IntVector& a, const IntVector& b);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);

}  // namespace qhcurve

#endif  // QHCURVE_SUBSPACE_HPP
