#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qhcurve/rational.hpp"

using qhcurve::Rational;

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse(" -6/8 ") == Rational(-3, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(7).str() == "7");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("rational field axioms on random samples") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    for (int k = 0; k < 200; ++k) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(Rational::parse(a.str()) == a);
        CHECK(std::hash<Rational>{}(a) == std::hash<Rational>{}(Rational::parse(a.str())));
    }
}

TEST_CASE("rational ordering and powers") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(qhcurve::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(qhcurve::abs(Rational(-5, 7)) == Rational(5, 7));
    CHECK(Rational(4, 2).is_integer());
}
