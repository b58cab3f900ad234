#ifndef QHCURVE_POLYNOMIAL_HPP
#define QHCURVE_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qhcurve/multiseries.hpp"
#include "qhcurve/rational.hpp"

namespace qhcurve {

using Exponent = std::vector<int>;

// Sparse polynomial over the rationals in a fixed number of variables.
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);

    std::size_t variables() const { return nvars_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    Polynomial pow(unsigned k) const;

    Polynomial derivative(std::size_t var) const;

    // Substitutes one series per variable.
    TruncatedSeries evaluate(const std::vector<TruncatedSeries>& values) const;

    std::string str(const std::vector<std::string>& names) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::size_t nvars_;
    std::map<Exponent, Rational> terms_;
};

// Parses sums of products of rationals, named variables, parentheses and
// nonnegative integer powers, e.g. "x^4 - y*(x+y)^4" or "3/2*x*y - 1".
// Throws Error(SchemaError) with the offending position.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

}  // namespace qhcurve

#endif  // QHCURVE_POLYNOMIAL_HPP
