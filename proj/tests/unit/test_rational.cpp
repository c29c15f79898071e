#include <catch2/catch_amalgamated.hpp>

#include <vf/rational.hpp>

using vf::Rational;

TEST_CASE("rational canonical form") {
    Rational a(6, 4);
    CHECK(a.numerator() == 3);
    CHECK(a.denominator() == 2);
    Rational b(-6, 4);
    CHECK(b.numerator() == -3);
    CHECK(b.denominator() == 2);
    Rational c(3, -2);
    CHECK(c.numerator() == -3);
    CHECK(c.denominator() == 2);
    CHECK(Rational(0, 5).is_zero());
    CHECK_THROWS_AS(Rational(1, 0), vf::Error);
}

TEST_CASE("rational arithmetic and ordering") {
    Rational a(5, 6), b(11, 12);
    CHECK(a + b == Rational(21, 12));
    CHECK(a * b == Rational(55, 72));
    CHECK(a < b);
    CHECK((a / b) == Rational(10, 11));
    CHECK(a.inv() == Rational(6, 5));
    CHECK((-a).sign() == -1);
    CHECK(a.pow(3) == Rational(125, 216));
    CHECK_THROWS_AS(a / Rational(0), vf::Error);
}

TEST_CASE("rational string io") {
    CHECK(Rational::from_string("5/6").str() == "5/6");
    CHECK(Rational::from_string("-8/3") == Rational(-8, 3));
    CHECK(Rational::from_string("42").str() == "42");
    CHECK(Rational::from_string("10/4").str() == "5/2");
    CHECK_THROWS_AS(Rational::from_string("1/0"), vf::Error);
}

TEST_CASE("divisor enumeration") {
    auto d = vf::positive_divisors(mpz_class(36));
    REQUIRE(d.size() == 9);
    CHECK(d.front() == 1);
    CHECK(d.back() == 36);
    CHECK(vf::positive_divisors(mpz_class(-7)).size() == 2);
}
