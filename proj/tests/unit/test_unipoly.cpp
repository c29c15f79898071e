#include <catch2/catch_amalgamated.hpp>

#include <vf/ratfunc.hpp>
#include <vf/unipoly.hpp>

using vf::RatFunc;
using vf::Rational;
using vf::UniPoly;

static UniPoly from_roots(const std::vector<Rational>& roots) {
    UniPoly p = UniPoly::one();
    for (const auto& r : roots) p = p * UniPoly::linear_root(r);
    return p;
}

TEST_CASE("unipoly divmod and gcd") {
    UniPoly p = from_roots({Rational(-1), Rational(-5, 6), Rational(-7, 6)});
    auto [q, r] = p.divmod(UniPoly::linear_root(Rational(-1)));
    CHECK(r.is_zero());
    CHECK(q == from_roots({Rational(-5, 6), Rational(-7, 6)}));
    UniPoly g = UniPoly::gcd(p, from_roots({Rational(-1), Rational(2)}));
    CHECK(g == UniPoly::linear_root(Rational(-1)));
}

TEST_CASE("rational roots fully split") {
    UniPoly b = Rational(36) * from_roots({Rational(-1), Rational(-5, 6), Rational(-7, 6)});
    auto rr = vf::rational_roots(b);
    REQUIRE(rr.roots.size() == 3);
    CHECK(rr.roots[0] == Rational(-5, 6));
    CHECK(rr.roots[1] == Rational(-1));
    CHECK(rr.roots[2] == Rational(-7, 6));
    CHECK(rr.fully_split());
    CHECK(rr.leading == Rational(36));
    // reconstruction: leading * prod (s - root) * cofactor equals the input
    UniPoly rebuilt = rr.leading * (from_roots(rr.roots) * rr.cofactor);
    CHECK(rebuilt == b);
}

TEST_CASE("rational roots with multiplicity and cofactor") {
    UniPoly sq = from_roots({Rational(-1), Rational(-1)});
    auto rr = vf::rational_roots(sq);
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.roots[0] == rr.roots[1]);

    // s^2 + 1 has no rational roots
    UniPoly irr(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    auto rr2 = vf::rational_roots(irr * UniPoly::linear_root(Rational(1, 2)));
    REQUIRE(rr2.roots.size() == 1);
    CHECK(rr2.roots[0] == Rational(1, 2));
    CHECK(!rr2.fully_split());
    CHECK(rr2.cofactor == irr);
    UniPoly rebuilt = rr2.leading * (from_roots(rr2.roots) * rr2.cofactor);
    CHECK(rebuilt == irr * UniPoly::linear_root(Rational(1, 2)));

    // roots at zero
    auto rr3 = vf::rational_roots(UniPoly::var() * UniPoly::var());
    CHECK(rr3.roots == std::vector<Rational>{Rational(0), Rational(0)});
}

TEST_CASE("affine composition") {
    // p(s) = s^2, p(-s-1) = (s+1)^2
    UniPoly p = UniPoly::var() * UniPoly::var();
    UniPoly q = p.compose_affine(Rational(-1), Rational(-1));
    CHECK(q == from_roots({Rational(-1), Rational(-1)}));
}

TEST_CASE("factored rendering") {
    CHECK(vf::factored_str({Rational(-5, 6), Rational(-1), Rational(-7, 6)}) ==
          "(s+5/6)(s+1)(s+7/6)");
    CHECK(vf::factored_str({Rational(-1), Rational(-1)}) == "(s+1)^2");
    CHECK(vf::factored_str({Rational(0), Rational(1, 2)}) == "(s)(s-1/2)");
}

TEST_CASE("rational function field") {
    RatFunc beta = RatFunc::param();
    RatFunc c = (RatFunc(2) * beta + RatFunc(1)) / (beta - RatFunc(1));
    CHECK(c.eval(Rational(2)) == Rational(5));
    CHECK_THROWS_AS(c.eval(Rational(1)), vf::DenominatorVanishes);
    CHECK((c * c.inv()).is_one());
    CHECK((c - c).is_zero());
    RatFunc d = beta * beta - RatFunc(1);
    CHECK(d / (beta - RatFunc(1)) == beta + RatFunc(1));
}
