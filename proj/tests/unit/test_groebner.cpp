#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <vf/groebner.hpp>
#include <vf/ideal.hpp>
#include <vf/parse.hpp>

#include "oracles.hpp"

using vf::IdealQ;
using vf::PolyQ;
using vf::Rational;
using vf::TermOrder;

static const std::vector<std::string> XY = {"x", "y"};

static PolyQ P(const std::string& s, const std::vector<std::string>& vars = XY) {
    return vf::parse_poly(s, vars);
}

TEST_CASE("already a GB stays fixed") {
    auto gb = vf::groebner_basis<Rational>({P("x^2"), P("x*y")}, TermOrder::grevlex());
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == P("x*y"));
    CHECK(gb[1] == P("x^2"));
}

TEST_CASE("lex example") {
    auto gb = vf::groebner_basis<Rational>({P("x - y"), P("y^2")}, TermOrder::lex());
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == P("y^2"));
    CHECK(gb[1] == P("x - y"));
}

TEST_CASE("cusp hodge ideal staircase has colength 9") {
    // derived expectation: exhaustive monomial enumeration under LT(I)
    IdealQ I(2, {P("x^3"), P("x^2*y^2"), P("x*y^3"), P("y^4 - (8/3)*x^2*y")});
    auto gb = I.groebner(TermOrder::grevlex());
    std::vector<vf::Monomial> lts;
    for (const auto& g : gb) lts.push_back(g.leading_term(TermOrder::grevlex()).m);
    auto brute = vf_test::staircase_count(lts, 8);
    REQUIRE(brute.has_value());
    CHECK(*brute == 9);
    auto cl = vf::colength(I);
    REQUIRE(cl.has_value());
    CHECK(*cl == 9);
}

TEST_CASE("normal form examples") {
    IdealQ I(2, {P("x^3"), P("x^2*y")});
    auto gb = I.groebner(TermOrder::grevlex());
    CHECK(vf::normal_form(P("x^3"), gb, TermOrder::grevlex()).is_zero());

    IdealQ J(2, {P("x^3"), P("x^2*y^2"), P("x*y^3"), P("y^5"), P("x^2*y")});
    auto gbj = J.groebner(TermOrder::grevlex());
    CHECK(vf::normal_form(P("y^4"), gbj, TermOrder::grevlex()) == P("y^4"));

    IdealQ K(2, {P("x"), P("y")});
    CHECK(vf::normal_form(P("1"), K.groebner(TermOrder::grevlex()), TermOrder::grevlex()) == P("1"));
}

static PolyQ random_poly(std::mt19937& rng, std::size_t nvars, int maxdeg, int nterms) {
    std::uniform_int_distribution<int> coef(-4, 4), expo(0, maxdeg);
    std::vector<PolyQ::Term> ts;
    for (int t = 0; t < nterms; ++t) {
        vf::Monomial m(nvars);
        int left = maxdeg;
        for (std::size_t i = 0; i < nvars; ++i) {
            int e = std::uniform_int_distribution<int>(0, left)(rng);
            m.e[i] = e;
            left -= e;
        }
        int c = coef(rng);
        if (c) ts.push_back({m, Rational(c)});
    }
    return PolyQ::from_terms(nvars, std::move(ts));
}

TEST_CASE("reduced GB independent of generator permutation") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<PolyQ> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_poly(rng, 2, 3, 3));
        auto gb1 = vf::groebner_basis(gens, TermOrder::grevlex());
        std::shuffle(gens.begin(), gens.end(), rng);
        auto gb2 = vf::groebner_basis(gens, TermOrder::grevlex());
        REQUIRE(gb1.size() == gb2.size());
        for (std::size_t i = 0; i < gb1.size(); ++i) CHECK(gb1[i] == gb2[i]);
    }
}

TEST_CASE("membership agrees with the degree-bounded linear oracle") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<PolyQ> gens;
        for (int i = 0; i < 2; ++i) {
            PolyQ g = random_poly(rng, 2, 3, 2);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        auto gb = vf::groebner_basis(gens, TermOrder::grevlex());
        if (gb.empty()) continue;

        // (a) members by construction reduce to zero and the oracle confirms
        PolyQ member(2);
        int bound = 2;
        for (const auto& g : gens) member = member + random_poly(rng, 2, bound, 2) * g;
        CHECK(vf::normal_form(member, gb, TermOrder::grevlex()).is_zero());
        if (!member.is_zero())
            CHECK(vf_test::member_by_linear_solve(member, gens, bound + 1));

        // (b) anything with a nonzero normal form must defeat the oracle too
        PolyQ probe = random_poly(rng, 2, 3, 3);
        if (!vf::normal_form(probe, gb, TermOrder::grevlex()).is_zero())
            CHECK(!vf_test::member_by_linear_solve(probe, gens, 6));
    }
}

TEST_CASE("budget aborts oversized computations") {
    vf::Budget tiny{5};
    CHECK_THROWS_AS(
        vf::groebner_basis<Rational>({P("x^3 - y^2 + x*y"), P("y^3 - x^2"), P("x^2*y^2 - x - y")},
                                     TermOrder::grevlex(), tiny),
        vf::ResourceExhausted);
}
