#ifndef QHCURVE_MULTISERIES_HPP
#define QHCURVE_MULTISERIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qhcurve/series.hpp"

namespace qhcurve {

// Value of one branch component under the multivaluation.
struct BranchValuation {
    enum class Kind { Finite, Infinity, Unknown };
    Kind kind = Kind::Unknown;
    int value = 0;  // meaningful for Finite only

    static BranchValuation finite(int v) { return {Kind::Finite, v}; }
    static BranchValuation infinity() { return {Kind::Infinity, 0}; }
    static BranchValuation unknown() { return {Kind::Unknown, 0}; }

    bool is_finite() const { return kind == Kind::Finite; }
    friend bool operator==(const BranchValuation&, const BranchValuation&) = default;
};

using Valuation = std::vector<BranchValuation>;

std::string to_string(const BranchValuation& v);

// An element of the total ring of fractions: one Laurent series per branch.
struct MultiSeries {
    std::vector<TruncatedSeries> branches;

    MultiSeries() = default;
    explicit MultiSeries(std::vector<TruncatedSeries> b) : branches(std::move(b)) {}

    std::size_t size() const { return branches.size(); }
    const TruncatedSeries& operator[](std::size_t i) const { return branches[i]; }
    TruncatedSeries& operator[](std::size_t i) { return branches[i]; }

    // The same exact constant on every branch.
    static MultiSeries constant(std::size_t r, const Rational& c);
    // t_i^{exponents[i]} on every branch.
    static MultiSeries monomial(const std::vector<int>& exponents);
    // t_branch^exponent on one branch, exact zero elsewhere.
    static MultiSeries unit_monomial(std::size_t r, std::size_t branch, int exponent);

    // Smallest branch order.
    int min_order() const;
    bool is_nonzerodivisor() const;  // every component has a known nonzero term

    friend bool operator==(const MultiSeries&, const MultiSeries&) = default;
};

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator-(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator*(const Rational& c, const MultiSeries& a);
MultiSeries tdt(const MultiSeries& a);
MultiSeries invert(const MultiSeries& a, int order_cap = kExactOrder);
MultiSeries truncate(const MultiSeries& a, int order);

Valuation multivaluation(const MultiSeries& x);

// Componentwise finite valuation; nullopt if any component is infinite or unknown.
std::optional<std::vector<int>> finite_valuation(const MultiSeries& x);

}  // namespace qhcurve

#endif  // QHCURVE_MULTISERIES_HPP
