#include "doctest.h"

#include "cnx/rational.hpp"

#include <random>

using cnx::BigInt;
using cnx::Rational;

TEST_CASE("rational normalization keeps lowest terms and positive denominator") {
    Rational r(BigInt(6), BigInt(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(BigInt(0), BigInt(-7)) == Rational(0));
    CHECK(Rational(BigInt(21), BigInt(7)).is_integer());
}

TEST_CASE("rational arithmetic is exact") {
    Rational a(1);
    Rational third(BigInt(1), BigInt(3));
    CHECK(third + third + third == a);
    CHECK(Rational(BigInt(2), BigInt(3)) * Rational(BigInt(3), BigInt(4)) ==
          Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(5) / Rational(BigInt(10), BigInt(3)) == Rational(BigInt(3), BigInt(2)));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational ordering uses cross multiplication") {
    CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(-1), BigInt(2)) < Rational(0));
    CHECK(Rational(BigInt(7), BigInt(5)) > Rational(1));
}

TEST_CASE("rational field axioms on random samples") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 50);
    auto rnd = [&] { return Rational(BigInt(num(rng)), BigInt(den(rng))); };
    for (int i = 0; i < 200; ++i) {
        Rational a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        if (!a.is_zero()) CHECK(a / a == Rational(1));
    }
}

TEST_CASE("rational string round trip") {
    CHECK(Rational::parse("  -3/9 ") == Rational(BigInt(-1), BigInt(3)));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational(BigInt(-5), BigInt(7)).str() == "-5/7");
    CHECK(Rational(4).str() == "4");
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("rational to_double") {
    CHECK(Rational(BigInt(1), BigInt(4)).to_double() == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(Rational(BigInt(-7), BigInt(2)).to_double() == doctest::Approx(-3.5).epsilon(1e-15));
}
