#include "qhcurve/subspace.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace qhcurve {

namespace {

void require_branches(std::size_t a, std::size_t b) {
    if (a != b)
        throw Error(ErrorCode::InvalidArgument,
                    "branch count mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

MatrixQ stack(const MatrixQ& a, const MatrixQ& b) {
    assert(a.cols() == b.cols());
    MatrixQ m(a.rows() + b.rows(), a.cols());
    if (a.rows() > 0) m.topRows(a.rows()) = a;
    if (b.rows() > 0) m.bottomRows(b.rows()) = b;
    return m;
}

MatrixQ rows_of(const std::vector<VectorQ>& vs, Index cols) {
    MatrixQ m(static_cast<Index>(vs.size()), cols);
    for (std::size_t k = 0; k < vs.size(); ++k) m.row(static_cast<Index>(k)) = vs[k].transpose();
    return m;
}

// Coordinates of t^shift * (branch component of row v) in window `to`,
// truncated at to.high.
void add_shifted_branch(const Window& from, const VectorQ& v, std::size_t branch, int shift, const Window& to,
                        VectorQ& out, const Rational& scale = Rational(1)) {
    for (Index c = 0; c < from.size(); ++c) {
        if (v(c).is_zero()) continue;
        const auto [e, i] = from.monomial(c);
        if (i != branch) continue;
        const int ne = e + shift;
        if (ne >= to.high()[i]) continue;
        assert(ne >= to.low()[i]);
        out(to.column(ne, i)) += scale * v(c);
    }
}

}  // namespace

IntVector componentwise_min(const IntVector& a, const IntVector& b) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
    return out;
}

IntVector componentwise_max(const IntVector& a, const IntVector& b) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

void for_each_in_box(const IntVector& lo, const IntVector& hi, const std::function<void(const IntVector&)>& f) {
    const std::size_t r = lo.size();
    for (std::size_t i = 0; i < r; ++i)
        if (lo[i] > hi[i]) return;
    IntVector a = lo;
    while (true) {
        f(a);
        std::size_t i = r;
        while (i > 0) {
            --i;
            if (a[i] < hi[i]) {
                ++a[i];
                for (std::size_t j = i + 1; j < r; ++j) a[j] = lo[j];
                break;
            }
            if (i == 0) return;
        }
        if (r == 0) return;
    }
}

// ---------------------------------------------------------------- Window

Window::Window(IntVector low, IntVector high) : low_(std::move(low)), high_(std::move(high)) {
    require_branches(low_.size(), high_.size());
    const std::size_t r = low_.size();
    offsets_.resize(r);
    int emin = 0, emax = 0;
    bool any = false;
    for (std::size_t i = 0; i < r; ++i) {
        if (high_[i] < low_[i]) high_[i] = low_[i];
        offsets_[i].assign(static_cast<std::size_t>(high_[i] - low_[i]), -1);
        if (high_[i] > low_[i]) {
            emin = any ? std::min(emin, low_[i]) : low_[i];
            emax = any ? std::max(emax, high_[i]) : high_[i];
            any = true;
        }
    }
    if (!any) return;
    for (int e = emin; e < emax; ++e) {
        for (std::size_t i = 0; i < r; ++i) {
            if (!contains(e, i)) continue;
            offsets_[i][static_cast<std::size_t>(e - low_[i])] = static_cast<Index>(cols_.size());
            cols_.emplace_back(e, i);
        }
    }
}

VectorQ Window::unit(int exponent, std::size_t branch) const {
    VectorQ v = VectorQ::Zero(size());
    v(column(exponent, branch)) = Rational(1);
    return v;
}

VectorQ Window::embed(const MultiSeries& x) const {
    require_branches(x.size(), branches());
    VectorQ v = VectorQ::Zero(size());
    for (std::size_t i = 0; i < branches(); ++i) {
        const TruncatedSeries& s = x[i];
        if (s.is_exact_zero()) continue;
        if (s.order() < high_[i])
            throw Error(ErrorCode::OrderTooLow, "branch " + std::to_string(i) + " known to order " +
                                                    std::to_string(s.order()) + ", need " +
                                                    std::to_string(high_[i]));
        if (!s.all_zero() && s.low() < low_[i])
            throw Error(ErrorCode::InvalidArgument, "element has a term t^" + std::to_string(s.low()) +
                                                        " below the window on branch " + std::to_string(i));
        for (int e = std::max(low_[i], s.low()); e < std::min(high_[i], s.stored_end()); ++e)
            v(column(e, i)) = s.coeff(e);
    }
    return v;
}

MultiSeries Window::element(const VectorQ& v) const {
    const std::size_t r = branches();
    std::vector<std::vector<Rational>> coeffs(r);
    for (std::size_t i = 0; i < r; ++i) coeffs[i].assign(static_cast<std::size_t>(high_[i] - low_[i]), Rational(0));
    for (Index c = 0; c < size(); ++c) {
        const auto [e, i] = monomial(c);
        coeffs[i][static_cast<std::size_t>(e - low_[i])] = v(c);
    }
    std::vector<TruncatedSeries> b;
    for (std::size_t i = 0; i < r; ++i) b.push_back(TruncatedSeries::exact(low_[i], std::move(coeffs[i])));
    return MultiSeries(std::move(b));
}

// ---------------------------------------------------------------- SubspaceBasis

SubspaceBasis::SubspaceBasis(const Window& w, const MatrixQ& generators) : window_(w) {
    assert(generators.cols() == w.size());
    auto e = rref(generators);
    rows_ = std::move(e.rows);
    pivots_ = std::move(e.pivots);
    normalize();
}

SubspaceBasis SubspaceBasis::tail_only(const IntVector& tail) { return SubspaceBasis(Window(tail, tail), MatrixQ(0, 0)); }

void SubspaceBasis::normalize() {
    const std::size_t r = branches();
    IntVector tail = window_.high();
    // Shrink the tail while the monomial just below it is in the span.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < r; ++i) {
            while (tail[i] > window_.low()[i]) {
                Echelon<Rational> e{rows_, pivots_};
                if (!in_row_space(e, window_.unit(tail[i] - 1, i))) break;
                IntVector high = tail;
                --high[i];
                Window w(window_.low(), high);
                MatrixQ m(rows_.rows(), w.size());
                for (Index c = 0; c < w.size(); ++c) {
                    const auto [ex, b] = w.monomial(c);
                    m.col(c) = rows_.col(window_.column(ex, b));
                }
                auto re = rref(m);
                rows_ = std::move(re.rows);
                pivots_ = std::move(re.pivots);
                window_ = std::move(w);
                tail = high;
                changed = true;
            }
        }
    }
    // Tighten low to the minimal valuation on each branch.
    IntVector low = tail;
    for (Index k = 0; k < rows_.rows(); ++k)
        for (Index c = 0; c < window_.size(); ++c) {
            if (rows_(k, c).is_zero()) continue;
            const auto [e, i] = window_.monomial(c);
            low[i] = std::min(low[i], e);
        }
    if (low != window_.low()) {
        Window w(low, tail);
        MatrixQ m(rows_.rows(), w.size());
        for (Index c = 0; c < w.size(); ++c) {
            const auto [ex, b] = w.monomial(c);
            m.col(c) = rows_.col(window_.column(ex, b));
        }
        auto re = rref(m);
        rows_ = std::move(re.rows);
        pivots_ = std::move(re.pivots);
        window_ = std::move(w);
    }
    if (rows_.cols() != window_.size()) rows_.resize(0, window_.size());
}

std::vector<MultiSeries> SubspaceBasis::elements() const {
    std::vector<MultiSeries> out;
    for (Index k = 0; k < rows_.rows(); ++k) out.push_back(window_.element(rows_.row(k).transpose()));
    return out;
}

// ---------------------------------------------------------------- operations

MatrixQ spanning_rows(const SubspaceBasis& s, const Window& w) {
    require_branches(s.branches(), w.branches());
    const Window& sw = s.window();
    std::vector<VectorQ> out;
    for (Index k = 0; k < s.dim(); ++k) {
        VectorQ v = VectorQ::Zero(w.size());
        bool nonzero = false;
        for (Index c = 0; c < sw.size(); ++c) {
            if (s.rows()(k, c).is_zero()) continue;
            const auto [e, i] = sw.monomial(c);
            if (e >= w.high()[i]) continue;
            if (e < w.low()[i]) throw Error(ErrorCode::InvalidArgument, "target window does not cover subspace");
            v(w.column(e, i)) = s.rows()(k, c);
            nonzero = true;
        }
        if (nonzero) out.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < s.branches(); ++i)
        for (int e = std::max(s.tail()[i], w.low()[i]); e < w.high()[i]; ++e) out.push_back(w.unit(e, i));
    return rows_of(out, w.size());
}

bool contains(const SubspaceBasis& s, const MultiSeries& x) {
    require_branches(s.branches(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const TruncatedSeries& c = x[i];
        if (c.is_exact_zero()) continue;
        if (c.order() < s.tail()[i])
            throw Error(ErrorCode::OrderTooLow, "element known to order " + std::to_string(c.order()) +
                                                    " on branch " + std::to_string(i) + ", need " +
                                                    std::to_string(s.tail()[i]));
        if (!c.all_zero() && c.low() < s.low()[i]) return false;
    }
    const Echelon<Rational> e{s.rows(), s.pivots()};
    return in_row_space(e, s.window().embed(x));
}

bool is_subset(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_branches(a.branches(), b.branches());
    const Window w(componentwise_min(a.low(), b.low()), componentwise_max(a.tail(), b.tail()));
    const auto eb = rref(spanning_rows(b, w));
    const MatrixQ ka = spanning_rows(a, w);
    for (Index k = 0; k < ka.rows(); ++k)
        if (!in_row_space(eb, ka.row(k).transpose())) return false;
    return true;
}

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_branches(a.branches(), b.branches());
    const Window w(componentwise_min(a.low(), b.low()), componentwise_min(a.tail(), b.tail()));
    return SubspaceBasis(w, stack(spanning_rows(a, w), spanning_rows(b, w)));
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_branches(a.branches(), b.branches());
    const Window w(componentwise_min(a.low(), b.low()), componentwise_max(a.tail(), b.tail()));
    const auto e = intersect_row_spaces(spanning_rows(a, w), spanning_rows(b, w));
    return SubspaceBasis(w, e.rows);
}

SubspaceBasis scale(const MultiSeries& x, const SubspaceBasis& s) {
    require_branches(s.branches(), x.size());
    const auto v = finite_valuation(x);
    if (!v) throw Error(ErrorCode::NoNonZeroDivisor, "scaling element is a zero divisor or of unknown valuation");
    const IntVector low = s.low() + *v;
    const IntVector tail = s.tail() + *v;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const int need = tail[i] - s.low()[i];
        if (x[i].order() < need)
            throw Error(ErrorCode::OrderTooLow, "multiplier known to order " + std::to_string(x[i].order()) +
                                                    " on branch " + std::to_string(i) + ", need " +
                                                    std::to_string(need));
    }
    const Window w(low, tail);
    std::vector<VectorQ> out;
    for (const MultiSeries& y : s.elements()) out.push_back(w.embed(truncate(x * y, kExactOrder)));
    return SubspaceBasis(w, rows_of(out, w.size()));
}

SubspaceBasis product(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_branches(a.branches(), b.branches());
    const IntVector tail = componentwise_min(a.tail() + b.low(), b.tail() + a.low());
    const Window w(a.low() + b.low(), tail);
    const Window wa(a.low(), tail - b.low());
    const Window wb(b.low(), tail - a.low());
    const MatrixQ ka = spanning_rows(a, wa);
    const MatrixQ kb = spanning_rows(b, wb);
    EchelonBuilder<Rational> builder(w.size());
    for (Index p = 0; p < ka.rows(); ++p) {
        for (Index q = 0; q < kb.rows(); ++q) {
            VectorQ v = VectorQ::Zero(w.size());
            for (Index c = 0; c < wa.size(); ++c) {
                if (ka(p, c).is_zero()) continue;
                const auto [e, i] = wa.monomial(c);
                add_shifted_branch(wb, kb.row(q).transpose(), i, e, w, v, ka(p, c));
            }
            builder.insert(std::move(v));
        }
    }
    return SubspaceBasis(w, builder.finish().rows);
}

SubspaceBasis colon(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_branches(a.branches(), b.branches());
    const IntVector lo = b.low() - a.low();
    const Window w(lo, b.tail() - a.low());
    const Window wa(a.low(), b.tail() - lo);
    const Window& wb = b.window();
    const MatrixQ ka = spanning_rows(a, wa);
    const Echelon<Rational> eb{b.rows(), b.pivots()};

    // Column c of the condition block for generator y is the residue of
    // (monomial c) * y modulo b.
    const Index nconds = ka.rows() * wb.size();
    MatrixQ cond = MatrixQ::Zero(nconds, w.size());
    for (Index c = 0; c < w.size(); ++c) {
        const auto [e, i] = w.monomial(c);
        for (Index p = 0; p < ka.rows(); ++p) {
            VectorQ v = VectorQ::Zero(wb.size());
            add_shifted_branch(wa, ka.row(p).transpose(), i, e, wb, v);
            cond.block(p * wb.size(), c, wb.size(), 1) = reduce(eb, v);
        }
    }
    const MatrixQ ker = kernel(cond);
    return SubspaceBasis(w, ker.transpose());
}

SubspaceBasis apply_tdt(const SubspaceBasis& s) {
    IntVector tail = s.tail();
    for (int& t : tail) t = std::max(t, 1);
    const Window w(s.low(), tail);
    std::vector<VectorQ> out;
    for (const MultiSeries& y : s.elements()) out.push_back(w.embed(tdt(y)));
    for (std::size_t i = 0; i < s.branches(); ++i)
        for (int e = s.tail()[i]; e < tail[i]; ++e)
            if (e != 0) out.push_back(w.unit(e, i));
    return SubspaceBasis(w, rows_of(out, w.size()));
}

long length_quotient(const SubspaceBasis& big, const SubspaceBasis& small) {
    if (!is_subset(small, big)) throw Error(ErrorCode::NotContained, "quotient of non-nested subspaces");
    const Window w(componentwise_min(big.low(), small.low()), componentwise_max(big.tail(), small.tail()));
    return static_cast<long>(rref(spanning_rows(big, w)).rank() - rref(spanning_rows(small, w)).rank());
}

bool gamma_contains(const SubspaceBasis& s, const IntVector& alpha) {
    require_branches(s.branches(), alpha.size());
    const std::size_t r = s.branches();
    IntVector a = componentwise_min(alpha, s.tail());
    for (std::size_t i = 0; i < r; ++i)
        if (a[i] < s.low()[i]) return false;
    if (a == s.tail()) return true;

    IntVector high = s.tail();
    for (std::size_t i = 0; i < r; ++i) high[i] = std::max(high[i], a[i] + 1);
    const Window w(s.low(), high);
    return gamma_member_in_window(w, spanning_rows(s, w), a);
}

bool gamma_member_in_window(const Window& w, const MatrixQ& k, const IntVector& a) {
    const std::size_t r = w.branches();
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i] >= w.high()[i])
            throw Error(ErrorCode::BoxExceedsModuli, "value " + std::to_string(a[i]) + " on branch " +
                                                         std::to_string(i) + " is beyond the known window");
        if (a[i] < w.low()[i]) return false;
    }
    // Columns below α go first; after elimination the rows with a pivot past
    // them span S_{>=α} = {x ∈ S : ν(x) >= α}.
    std::vector<Index> order;
    for (Index c = 0; c < w.size(); ++c) {
        const auto [e, i] = w.monomial(c);
        if (e < a[i]) order.push_back(c);
    }
    const Index constrained = static_cast<Index>(order.size());
    for (Index c = 0; c < w.size(); ++c) {
        const auto [e, i] = w.monomial(c);
        if (e >= a[i]) order.push_back(c);
    }
    MatrixQ perm(k.rows(), w.size());
    for (Index c = 0; c < w.size(); ++c) perm.col(c) = k.col(order[static_cast<std::size_t>(c)]);
    const auto pivots = rref_in_place(perm);

    for (std::size_t i = 0; i < r; ++i) {
        const Index target = w.column(a[i], i);
        const auto it = std::find(order.begin(), order.end(), target);
        const Index pc = static_cast<Index>(it - order.begin());
        bool hit = false;
        for (std::size_t row = 0; row < pivots.size() && !hit; ++row)
            hit = pivots[row] >= constrained && !perm(static_cast<Index>(row), pc).is_zero();
        if (!hit) return false;
    }
    return true;
}

std::vector<IntVector> gamma_box(const SubspaceBasis& s, const IntVector& lo, const IntVector& hi) {
    std::vector<IntVector> out;
    for_each_in_box(lo, hi, [&](const IntVector& a) {
        if (gamma_contains(s, a)) out.push_back(a);
    });
    return out;
}

}  // namespace qhcurve
