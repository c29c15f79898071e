#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <vf/parse.hpp>

using vf::PolyQ;
using vf::Rational;

static const std::vector<std::string> XY = {"x", "y"};
static const std::vector<std::string> XYZ = {"x", "y", "z"};

TEST_CASE("grammar basics") {
    PolyQ cusp = vf::parse_poly("x^2 + y^3", XY);
    CHECK(cusp == vf::parse_poly("x*x + y*y*y", XY));
    PolyQ quadric = vf::parse_poly("x^2 + y^2 + z^2", XYZ);
    CHECK(quadric.nterms() == 3);
    PolyQ h = vf::parse_poly("y^4 - (8/3)*x^2*y", XY);
    CHECK(h.coeff_of(vf::parse_poly("x^2*y", XY).leading_term(vf::TermOrder::grevlex()).m) ==
          Rational(-8, 3));
    CHECK(vf::parse_poly("(x + y)^2", XY) ==
          vf::parse_poly("x^2 + 2*x*y + y^2", XY));
    CHECK(vf::parse_poly("3/4", XY) == PolyQ::constant(2, Rational(3, 4)));
}

TEST_CASE("no implicit multiplication") {
    CHECK_THROWS_AS(vf::parse_poly("2x", XY), vf::ParseError);
    CHECK_THROWS_AS(vf::parse_poly("x y", XY), vf::ParseError);
    CHECK_THROWS_AS(vf::parse_poly("(x)(y)", XY), vf::ParseError);
}

TEST_CASE("errors carry positions") {
    try {
        vf::parse_poly("x^2 + w", XY);
        FAIL("expected UnknownVariable");
    } catch (const vf::UnknownVariable& e) {
        CHECK(e.position == 6);
    }
    try {
        vf::parse_poly("x +", XY);
        FAIL("expected ParseError");
    } catch (const vf::ParseError& e) {
        CHECK(e.position == 3);
    }
    CHECK_THROWS_AS(vf::parse_poly("x^2 + 1/0", XY), vf::ParseError);
}

TEST_CASE("reserved variable names") {
    CHECK(vf::valid_variable_name("x"));
    CHECK(vf::valid_variable_name("alpha2"));
    CHECK(!vf::valid_variable_name("dt"));
    CHECK(!vf::valid_variable_name("beta"));
    CHECK(!vf::valid_variable_name("s"));
    CHECK(!vf::valid_variable_name("t"));
    CHECK(!vf::valid_variable_name("u"));
    CHECK(!vf::valid_variable_name("h"));
    CHECK(!vf::valid_variable_name("2x"));
    CHECK(!vf::valid_variable_name(""));
}

TEST_CASE("renderer output reparses to the same polynomial") {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> coefn(-20, 20), coefd(1, 12), expo(0, 5), nt(1, 6);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<PolyQ::Term> ts;
        int terms = nt(rng);
        for (int t = 0; t < terms; ++t) {
            vf::Monomial m(2);
            m.e[0] = expo(rng);
            m.e[1] = expo(rng);
            int n = coefn(rng);
            if (n) ts.push_back({m, Rational(n, coefd(rng))});
        }
        PolyQ p = PolyQ::from_terms(2, std::move(ts));
        CHECK(vf::parse_poly(p.str(XY), XY) == p);
    }
}
