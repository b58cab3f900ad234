#include "qhcurve/multiseries.hpp"

#include <algorithm>

namespace qhcurve {

namespace {

void require_same_size(const MultiSeries& a, const MultiSeries& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::InvalidArgument, "branch count mismatch: " + std::to_string(a.size()) + " vs " +
                                                    std::to_string(b.size()));
}

template <class Op>
MultiSeries zip(const MultiSeries& a, const MultiSeries& b, Op op) {
    require_same_size(a, b);
    std::vector<TruncatedSeries> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(op(a[i], b[i]));
    return MultiSeries(std::move(out));
}

}  // namespace

std::string to_string(const BranchValuation& v) {
    switch (v.kind) {
        case BranchValuation::Kind::Finite: return std::to_string(v.value);
        case BranchValuation::Kind::Infinity: return "inf";
        case BranchValuation::Kind::Unknown: return "unknown";
    }
    return "?";
}

MultiSeries MultiSeries::constant(std::size_t r, const Rational& c) {
    return MultiSeries(std::vector<TruncatedSeries>(r, TruncatedSeries::exact(0, {c})));
}

MultiSeries MultiSeries::monomial(const std::vector<int>& exponents) {
    std::vector<TruncatedSeries> b;
    for (int e : exponents) b.push_back(TruncatedSeries::monomial(e, Rational(1)));
    return MultiSeries(std::move(b));
}

MultiSeries MultiSeries::unit_monomial(std::size_t r, std::size_t branch, int exponent) {
    std::vector<TruncatedSeries> b(r);
    b[branch] = TruncatedSeries::monomial(exponent, Rational(1));
    return MultiSeries(std::move(b));
}

int MultiSeries::min_order() const {
    int m = kExactOrder;
    for (const auto& s : branches) m = std::min(m, s.order());
    return m;
}

bool MultiSeries::is_nonzerodivisor() const {
    return std::none_of(branches.begin(), branches.end(), [](const TruncatedSeries& s) { return s.all_zero(); });
}

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
    return zip(a, b, [](const auto& x, const auto& y) { return x + y; });
}

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) {
    return zip(a, b, [](const auto& x, const auto& y) { return x - y; });
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    return zip(a, b, [](const auto& x, const auto& y) { return x * y; });
}

MultiSeries operator*(const Rational& c, const MultiSeries& a) {
    MultiSeries out = a;
    for (auto& s : out.branches) s = s.scaled(c);
    return out;
}

MultiSeries tdt(const MultiSeries& a) {
    MultiSeries out = a;
    for (auto& s : out.branches) s = tdt(s);
    return out;
}

MultiSeries invert(const MultiSeries& a, int order_cap) {
    MultiSeries out = a;
    for (auto& s : out.branches) s = invert(s, order_cap);
    return out;
}

MultiSeries truncate(const MultiSeries& a, int order) {
    MultiSeries out = a;
    for (auto& s : out.branches) s = s.truncate(order);
    return out;
}

Valuation multivaluation(const MultiSeries& x) {
    Valuation v;
    v.reserve(x.size());
    for (const auto& s : x.branches) {
        if (s.is_exact_zero())
            v.push_back(BranchValuation::infinity());
        else if (s.all_zero())
            v.push_back(BranchValuation::unknown());
        else
            v.push_back(BranchValuation::finite(s.low()));
    }
    return v;
}

std::optional<std::vector<int>> finite_valuation(const MultiSeries& x) {
    std::vector<int> out;
    for (const auto& b : multivaluation(x)) {
        if (!b.is_finite()) return std::nullopt;
        out.push_back(b.value);
    }
    return out;
}

}  // namespace qhcurve
