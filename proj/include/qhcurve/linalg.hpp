#ifndef QHCURVE_LINALG_HPP
#define QHCURVE_LINALG_HPP

#include <cassert>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qhcurve/rational.hpp"

// Exact dense linear algebra over a field scalar. No pivoting heuristics:
// the first nonzero entry is always taken, which keeps results canonical.

namespace qhcurve {

using Eigen::Index;

template <class Derived>
bool is_zero_vector(const Eigen::MatrixBase<Derived>& v) {
    using Scalar = typename Derived::Scalar;
    for (Index i = 0; i < v.size(); ++i)
        if (v(i) != Scalar(0)) return false;
    return true;
}

// Gauss-Jordan elimination in place. Returns pivot columns; rows past
// pivots.size() are zero afterwards.
template <class Derived>
std::vector<Index> rref_in_place(Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index p = row;
        while (p < m.rows() && m(p, col) == Scalar(0)) ++p;
        if (p == m.rows()) continue;
        if (p != row) m.row(p).swap(m.row(row));
        const Scalar inv = Scalar(1) / m(row, col);
        for (Index j = col; j < m.cols(); ++j)
            if (m(row, j) != Scalar(0)) m(row, j) *= inv;
        for (Index i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == Scalar(0)) continue;
            const Scalar f = m(i, col);
            for (Index j = col; j < m.cols(); ++j)
                if (m(row, j) != Scalar(0)) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class Scalar>
struct Echelon {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> rows;  // reduced, full row rank
    std::vector<Index> pivots;

    Index rank() const { return rows.rows(); }
};

// Reduced row-echelon basis of the row space of m.
template <class Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> work = m;
    auto pivots = rref_in_place(work);
    Echelon<Scalar> e;
    e.rows = work.topRows(static_cast<Index>(pivots.size()));
    e.pivots = std::move(pivots);
    return e;
}

// Reduces v against a reduced echelon basis; the result is zero iff v lies in the row space.
template <class Scalar, class Derived>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> reduce(const Echelon<Scalar>& e, const Eigen::MatrixBase<Derived>& v) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> r = v;
    for (Index k = 0; k < e.rank(); ++k) {
        const Index p = e.pivots[static_cast<std::size_t>(k)];
        if (r(p) == Scalar(0)) continue;
        const Scalar f = r(p);
        for (Index j = p; j < r.size(); ++j)
            if (e.rows(k, j) != Scalar(0)) r(j) -= f * e.rows(k, j);
    }
    return r;
}

template <class Scalar, class Derived>
bool in_row_space(const Echelon<Scalar>& e, const Eigen::MatrixBase<Derived>& v) {
    return is_zero_vector(reduce(e, v));
}

// Incremental echelon basis: vectors are inserted one at a time and the
// builder reports whether each one enlarged the span.
template <class Scalar>
class EchelonBuilder {
public:
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    explicit EchelonBuilder(Index dim) : dim_(dim) {}

    Index dim() const { return dim_; }
    Index rank() const { return static_cast<Index>(rows_.size()); }

    // Returns the reduced remainder (nonzero iff the span grew).
    Vector insert(Vector v) {
        assert(v.size() == dim_);
        for (const auto& [p, row] : rows_) {
            if (v(p) == Scalar(0)) continue;
            const Scalar f = v(p);
            for (Index j = p; j < dim_; ++j)
                if (row(j) != Scalar(0)) v(j) -= f * row(j);
        }
        Index p = 0;
        while (p < dim_ && v(p) == Scalar(0)) ++p;
        if (p == dim_) return v;
        const Scalar inv = Scalar(1) / v(p);
        for (Index j = p; j < dim_; ++j)
            if (v(j) != Scalar(0)) v(j) *= inv;
        rows_.emplace(p, v);
        return v;
    }

    bool contains(Vector v) const {
        for (const auto& [p, row] : rows_) {
            if (v(p) == Scalar(0)) continue;
            const Scalar f = v(p);
            for (Index j = p; j < dim_; ++j)
                if (row(j) != Scalar(0)) v(j) -= f * row(j);
        }
        return is_zero_vector(v);
    }

    Echelon<Scalar> finish() const {
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(rank(), dim_);
        Index i = 0;
        for (const auto& [p, row] : rows_) m.row(i++) = row.transpose();
        return rref(m);
    }

private:
    Index dim_;
    std::map<Index, Vector> rows_;  // keyed by pivot column
};

// Row space intersection by the Zassenhaus algorithm.
template <class DerivedA, class DerivedB>
Echelon<typename DerivedA::Scalar> intersect_row_spaces(const Eigen::MatrixBase<DerivedA>& a,
                                                       const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    assert(a.cols() == b.cols());
    const Index n = a.cols();
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> z(a.rows() + b.rows(), 2 * n);
    z.setZero();
    z.topLeftCorner(a.rows(), n) = a;
    z.topRightCorner(a.rows(), n) = a;
    z.bottomLeftCorner(b.rows(), n) = b;
    auto pivots = rref_in_place(z);
    std::vector<Index> keep;
    for (std::size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] >= n) keep.push_back(static_cast<Index>(k));
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(static_cast<Index>(keep.size()), n);
    for (std::size_t k = 0; k < keep.size(); ++k) out.row(static_cast<Index>(k)) = z.block(keep[k], n, 1, n);
    return rref(out);
}

// Basis of the right kernel {x : m x = 0}, one vector per column of the result.
template <class Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> kernel(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> work = m;
    const auto pivots = rref_in_place(work);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Index> free;
    for (Index j = 0; j < m.cols(); ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) free.push_back(j);
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> k(m.cols(), static_cast<Index>(free.size()));
    k.setZero();
    for (std::size_t f = 0; f < free.size(); ++f) {
        const Index fc = static_cast<Index>(f);
        k(free[f], fc) = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], fc) = -work(static_cast<Index>(r), free[f]);
    }
    return k;
}

}  // namespace qhcurve

#endif  // QHCURVE_LINALG_HPP
