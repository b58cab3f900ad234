#include "qhcurve/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace qhcurve {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    Polynomial p(nvars);
    Exponent e(nvars, 0);
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(std::max(a.nvars_, b.nvars_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e(out.nvars_, 0);
            for (std::size_t i = 0; i < out.nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial out(a.nvars_);
    for (const auto& [e, c] : a.terms_) out.add_term(e, -c);
    return out;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(nvars_, Rational(1));
    Polynomial base = *this;
    while (k != 0) {
        if (k & 1U) result = result * base;
        base = base * base;
        k >>= 1U;
    }
    return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent d = e;
        --d[var];
        out.add_term(d, c * Rational(e[var]));
    }
    return out;
}

TruncatedSeries Polynomial::evaluate(const std::vector<TruncatedSeries>& values) const {
    if (values.size() != nvars_)
        throw Error(ErrorCode::InvalidArgument, "polynomial in " + std::to_string(nvars_) + " variables evaluated at " +
                                                    std::to_string(values.size()) + " series");
    std::vector<std::vector<TruncatedSeries>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) powers[i].push_back(TruncatedSeries::exact(0, {Rational(1)}));
    auto power = [&](std::size_t i, int k) -> const TruncatedSeries& {
        while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * values[i]);
        return powers[i][static_cast<std::size_t>(k)];
    };
    TruncatedSeries acc;
    for (const auto& [e, c] : terms_) {
        TruncatedSeries term = TruncatedSeries::exact(0, {c});
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        acc = acc + term;
    }
    return acc;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        out += out.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        bool constant = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (constant)
            out += mag.str();
        else if (mag == Rational(1))
            out += mono;
        else
            out += mag.str() + "*" + mono;
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::SchemaError,
                    "polynomial '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial p = term();
        while (true) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }

    Polynomial term() {
        Polynomial p = unary();
        while (true) {
            if (accept('*')) {
                p = p * unary();
            } else if (accept('/')) {
                const Rational d = integer();
                if (d.is_zero()) fail("division by zero");
                p = p * Polynomial::constant(vars_.size(), Rational(1) / d);
            } else {
                return p;
            }
        }
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        Polynomial base = primary();
        if (accept('^')) {
            const Rational e = integer();
            if (!e.is_integer() || e.sign() < 0 || e > Rational(10000)) fail("exponent must be a small nonnegative integer");
            base = base.pow(static_cast<unsigned>(e.numerator().get_ui()));
        }
        return base;
    }

    Rational integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Rational::parse(s_.substr(start, pos_ - start));
    }

    Polynomial primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(vars_.size(), integer());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string name(s_.substr(start, pos_ - start));
            const auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return Polynomial::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
    return Parser(text, variables).parse();
}

}  // namespace qhcurve
