#ifndef QHCURVE_SERIES_HPP
#define QHCURVE_SERIES_HPP

#include <algorithm>
#include <cassert>
#include <climits>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qhcurve/errors.hpp"
#include "qhcurve/rational.hpp"

namespace qhcurve {

// Order value meaning "known exactly": a Laurent polynomial with no truncation.
inline constexpr int kExactOrder = INT_MAX;

namespace detail {

inline int add_order(int a, int b) {
    if (a == kExactOrder || b == kExactOrder) return kExactOrder;
    return a + b;
}

}  // namespace detail

// A Laurent series in one variable t over Scalar, known modulo t^order.
//
// Coefficients are stored for exponents low()..low()+size-1; every exponent
// in [low()+size, order) has coefficient zero. The leading stored
// coefficient is nonzero unless the series is zero up to its order, in which
// case nothing is stored and low() == order(). order() == kExactOrder marks
// an exactly known Laurent polynomial; the exact zero series is the one
// exact series without coefficients.
template <class Scalar>
class BasicTruncatedSeries {
public:
    // Exact zero.
    BasicTruncatedSeries() : low_(kExactOrder), order_(kExactOrder) {}

    static BasicTruncatedSeries exact_zero() { return {}; }

    // Zero modulo t^order, i.e. unknown valuation >= order.
    static BasicTruncatedSeries zero(int order) { return BasicTruncatedSeries(order, {}, order); }

    static BasicTruncatedSeries monomial(int exponent, Scalar c, int order = kExactOrder) {
        return BasicTruncatedSeries(exponent, {std::move(c)}, order);
    }

    static BasicTruncatedSeries exact(int low, std::vector<Scalar> coeffs) {
        return BasicTruncatedSeries(low, std::move(coeffs), kExactOrder);
    }

    static BasicTruncatedSeries truncated(int low, std::vector<Scalar> coeffs, int order) {
        return BasicTruncatedSeries(low, std::move(coeffs), order);
    }

    int order() const { return order_; }
    bool is_exact() const { return order_ == kExactOrder; }
    bool is_exact_zero() const { return is_exact() && coeffs_.empty(); }
    // True when no nonzero coefficient is known (exact zero or zero up to order).
    bool all_zero() const { return coeffs_.empty(); }
    // Exponent of the leading known nonzero term; order() when all_zero().
    int low() const { return low_; }
    // Largest exponent with a stored coefficient plus one.
    int stored_end() const { return low_ + static_cast<int>(coeffs_.size()); }
    const std::vector<Scalar>& coefficients() const { return coeffs_; }

    Scalar coeff(int exponent) const {
        if (exponent >= order_)
            throw Error(ErrorCode::OrderTooLow,
                        "coefficient of t^" + std::to_string(exponent) + " requested beyond order " +
                            std::to_string(order_));
        if (exponent < low_ || exponent >= stored_end()) return Scalar(0);
        return coeffs_[static_cast<std::size_t>(exponent - low_)];
    }

    // Reduce the known precision to new_order (no-op if already lower).
    BasicTruncatedSeries truncate(int new_order) const {
        if (new_order >= order_) return *this;
        std::vector<Scalar> c;
        for (int e = low_; e < std::min(stored_end(), new_order); ++e)
            c.push_back(coeffs_[static_cast<std::size_t>(e - low_)]);
        return BasicTruncatedSeries(std::min(low_, new_order), std::move(c), new_order);
    }

    // Multiplication by t^k.
    BasicTruncatedSeries shift(int k) const {
        if (is_exact_zero()) return *this;
        return BasicTruncatedSeries(low_ + k, coeffs_, detail::add_order(order_, k));
    }

    BasicTruncatedSeries scaled(const Scalar& c) const {
        if (c == Scalar(0)) return is_exact() ? exact_zero() : zero(order_);
        std::vector<Scalar> v = coeffs_;
        for (auto& x : v) x *= c;
        return BasicTruncatedSeries(low_, std::move(v), order_);
    }

    friend bool operator==(const BasicTruncatedSeries& a, const BasicTruncatedSeries& b) {
        return a.order_ == b.order_ && a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }

    friend BasicTruncatedSeries operator+(const BasicTruncatedSeries& a, const BasicTruncatedSeries& b) {
        return combine(a, b, Scalar(1));
    }
    friend BasicTruncatedSeries operator-(const BasicTruncatedSeries& a, const BasicTruncatedSeries& b) {
        return combine(a, b, Scalar(-1));
    }
    friend BasicTruncatedSeries operator-(const BasicTruncatedSeries& a) { return a.scaled(Scalar(-1)); }

    friend BasicTruncatedSeries operator*(const BasicTruncatedSeries& a, const BasicTruncatedSeries& b) {
        if (a.is_exact_zero() || b.is_exact_zero()) return exact_zero();
        const int order = std::min(detail::add_order(a.order_, b.low_), detail::add_order(b.order_, a.low_));
        if (a.all_zero() || b.all_zero()) return zero(order);
        const int low = a.low_ + b.low_;
        std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
        if (order != kExactOrder) len = std::min<std::size_t>(len, static_cast<std::size_t>(std::max(order - low, 0)));
        std::vector<Scalar> c(len, Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
            if (a.coeffs_[i] == Scalar(0)) continue;
            for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return BasicTruncatedSeries(low, std::move(c), order);
    }

private:
    BasicTruncatedSeries(int low, std::vector<Scalar> coeffs, int order)
        : low_(low), coeffs_(std::move(coeffs)), order_(order) {
        normalize();
    }

    static BasicTruncatedSeries combine(const BasicTruncatedSeries& a, const BasicTruncatedSeries& b,
                                        const Scalar& sb) {
        const int order = std::min(a.order_, b.order_);
        if (a.all_zero() && b.all_zero()) return order == kExactOrder ? exact_zero() : zero(order);
        // All-zero operands contribute nothing to the stored range.
        int low = a.all_zero() ? b.low_ : b.all_zero() ? a.low_ : std::min(a.low_, b.low_);
        int end = a.all_zero() ? b.stored_end() : b.all_zero() ? a.stored_end() : std::max(a.stored_end(), b.stored_end());
        if (order != kExactOrder) end = std::min(end, order);
        if (low >= end) return zero(order);
        std::vector<Scalar> c(static_cast<std::size_t>(end - low), Scalar(0));
        for (int e = std::max(a.low_, low); e < std::min(a.stored_end(), end); ++e)
            c[static_cast<std::size_t>(e - low)] += a.coeffs_[static_cast<std::size_t>(e - a.low_)];
        for (int e = std::max(b.low_, low); e < std::min(b.stored_end(), end); ++e)
            c[static_cast<std::size_t>(e - low)] += sb * b.coeffs_[static_cast<std::size_t>(e - b.low_)];
        return BasicTruncatedSeries(low, std::move(c), order);
    }

    void normalize() {
        if (order_ != kExactOrder && stored_end() > order_)
            coeffs_.resize(static_cast<std::size_t>(std::max(order_ - low_, 0)));
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == Scalar(0)) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            low_ = order_;
            return;
        }
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
        while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
    }

    int low_;
    std::vector<Scalar> coeffs_;
    int order_;
};

// Inverse of a series with a known nonzero leading term, as a Laurent series.
// order_cap bounds the absolute order of the result; it is required when the
// input is an exact non-monomial.
template <class Scalar>
BasicTruncatedSeries<Scalar> invert(const BasicTruncatedSeries<Scalar>& a, int order_cap = kExactOrder) {
    using S = BasicTruncatedSeries<Scalar>;
    if (a.all_zero()) throw Error(ErrorCode::NotInvertible, "series has no known nonzero term");
    const int v = a.low();
    const auto& u = a.coefficients();
    const Scalar inv0 = Scalar(1) / u.front();
    if (a.is_exact() && u.size() == 1) {
        if (order_cap == kExactOrder) return S::monomial(-v, inv0);
        return S::monomial(-v, inv0, order_cap);
    }
    int order = a.is_exact() ? kExactOrder : a.order() - 2 * v;
    order = std::min(order, order_cap);
    if (order == kExactOrder)
        throw Error(ErrorCode::InvalidArgument, "inverse of an exact non-monomial series needs an order cap");
    const int len = order + v;  // number of coefficients from exponent -v up to order-1
    std::vector<Scalar> b(static_cast<std::size_t>(std::max(len, 0)), Scalar(0));
    for (int k = 0; k < len; ++k) {
        Scalar acc = k == 0 ? Scalar(1) : Scalar(0);
        for (int j = 1; j <= k && j < static_cast<int>(u.size()); ++j)
            acc -= u[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
        b[static_cast<std::size_t>(k)] = acc * inv0;
    }
    return S::truncated(-v, std::move(b), order);
}

// The Euler derivation t d/dt.
template <class Scalar>
BasicTruncatedSeries<Scalar> tdt(const BasicTruncatedSeries<Scalar>& a) {
    using S = BasicTruncatedSeries<Scalar>;
    if (a.all_zero()) return a;
    std::vector<Scalar> c = a.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) c[k] *= Scalar(a.low() + static_cast<int>(k));
    return a.is_exact() ? S::exact(a.low(), std::move(c)) : S::truncated(a.low(), std::move(c), a.order());
}

// p/q expanded modulo t^order, where p and q are dense coefficient lists
// (index = exponent). Exact when q is a nonzero constant.
template <class Scalar>
BasicTruncatedSeries<Scalar> expand_rational_function(const std::vector<Scalar>& p, const std::vector<Scalar>& q,
                                                      int order) {
    using S = BasicTruncatedSeries<Scalar>;
    if (q.empty() || q.front() == Scalar(0))
        throw Error(ErrorCode::NonUnitDenominator, "denominator must have nonzero constant term");
    const bool constant_den =
        std::all_of(q.begin() + 1, q.end(), [](const Scalar& c) { return c == Scalar(0); });
    if (constant_den) {
        std::vector<Scalar> c = p;
        for (auto& x : c) x /= q.front();
        return S::exact(0, std::move(c));
    }
    const S num = S::exact(0, p);
    const S den_inv = invert(S::exact(0, q), order);
    return (num * den_inv).truncate(order);
}

using TruncatedSeries = BasicTruncatedSeries<Rational>;

}  // namespace qhcurve

#endif  // QHCURVE_SERIES_HPP
