#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planecover/error.hpp"
#include "planecover/poly.hpp"

using namespace planecover;

namespace {

BinForm bf(std::vector<Rat> c) { return BinForm(std::move(c)); }

}  // namespace

TEST_CASE("binary form arithmetic and evaluation") {
  BinForm f = bf({Rat(1), Rat(-2), Rat(1)});  // s^2 - 2st + t^2
  BinForm g = bf({Rat(1), Rat(1)});           // s + t
  CHECK(f.degree() == 2);
  CHECK((g * g) == bf({Rat(1), Rat(2), Rat(1)}));
  CHECK((f + bf({Rat(0), Rat(4), Rat(0)})) == (g * g));
  CHECK(f.eval(Rat(1), Rat(1)) == 0);
  CHECK(f.eval(Rat(3), Rat(1)) == 4);
  CHECK(g.scaled(Rat(-3)).eval(Rat(2), Rat(1)) == -9);
  CHECK(bf({Rat(0), Rat(0)}).is_zero());
}

TEST_CASE("squarefree decomposition separates multiplicities") {
  // s * (s - t)^2 * (s + 2t)^3, content 5
  BinForm f = bf({Rat(5)});
  f = f * bf({Rat(1), Rat(0)});
  BinForm a = bf({Rat(1), Rat(-1)});
  BinForm b = bf({Rat(1), Rat(2)});
  f = f * a * a * b * b * b;
  Rat content;
  auto dec = squarefree_decomposition(f, &content);
  CHECK(content == 5);
  REQUIRE(dec.size() == 3);
  CHECK(dec[0].form == bf({Rat(1), Rat(0)}));
  CHECK(dec[0].mult == 1);
  CHECK(dec[1].form == a);
  CHECK(dec[1].mult == 2);
  CHECK(dec[2].form == b);
  CHECK(dec[2].mult == 3);
}

TEST_CASE("perfect square detection with canonical root") {
  BinForm r = bf({Rat(0), Rat(2), Rat(0), Rat(-2), Rat(0)});  // 2s^3t - 2st^3
  BinForm sq = r * r;
  BinForm got;
  REQUIRE(binform_is_square(sq, &got));
  CHECK(got == r);  // leading nonzero coefficient already positive
  REQUIRE(binform_is_square(r.scaled(Rat(-1)) * r.scaled(Rat(-1)), &got));
  CHECK(got == r);
  CHECK_FALSE(binform_is_square(bf({Rat(1), Rat(0), Rat(-2)})));  // s^2-2t^2
  CHECK_FALSE(binform_is_square(bf({Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)})));
  CHECK_FALSE(binform_is_square(bf({Rat(2), Rat(0), Rat(0), Rat(0), Rat(0)})));
  CHECK(binform_is_square(bf({Rat(4), Rat(0), Rat(0)})));  // (2s)^2
  CHECK(binform_is_square(bf({Rat(1), Rat(0), Rat(0)})));  // s^2
}

TEST_CASE("root multiplicity by synthetic division") {
  Tower tw;
  // s * t^2 * (s - t)^3
  BinForm f = bf({Rat(1), Rat(0)}) * bf({Rat(0), Rat(0), Rat(1)});
  BinForm lin = bf({Rat(1), Rat(-1)});
  f = f * lin * lin * lin;
  auto fe = [&tw](int v) { return tw.rational(Rat(v)); };
  CHECK(root_multiplicity(f, fe(0), fe(1)) == 1);
  CHECK(root_multiplicity(f, fe(1), fe(0)) == 2);
  CHECK(root_multiplicity(f, fe(1), fe(1)) == 3);
  CHECK(root_multiplicity(f, fe(1), fe(2)) == 0);
  CHECK(root_multiplicity(f, fe(2), fe(2)) == 3);  // projective invariance
}

TEST_CASE("roots of rational and quadratic factors") {
  Tower tw;
  // (t - 2s)(t + s)^2 * (t^2 - 2s^2)
  BinForm f = bf({Rat(-2), Rat(1)}) * bf({Rat(1), Rat(1)}) *
              bf({Rat(1), Rat(1)}) * bf({Rat(-2), Rat(0), Rat(1)});
  auto roots = binary_form_roots(tw, f);
  int total = 0;
  for (const auto& r : roots) {
    total += r.mult;
    CHECK(f.eval(r.s, r.t).is_zero());
  }
  CHECK(total == 5);
  CHECK(roots.size() == 4);
  CHECK(tw.size() == 1);  // only sqrt(2) was needed
}

TEST_CASE("root at infinity") {
  Tower tw;
  BinForm f = bf({Rat(1), Rat(0)}) * bf({Rat(1), Rat(0)}) * bf({Rat(0), Rat(1)});
  auto roots = binary_form_roots(tw, f);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].s.is_zero());
  CHECK(roots[0].mult == 2);
  CHECK(roots[1].t.is_zero());
  CHECK(roots[1].mult == 1);
}

TEST_CASE("biquadratic quartic splits over two adjoined radicals") {
  Tower tw;
  // (t^2 - 2s^2)(t^2 - 3s^2) has no rational root
  BinForm f = bf({Rat(-2), Rat(0), Rat(1)}) * bf({Rat(-3), Rat(0), Rat(1)});
  auto roots = binary_form_roots(tw, f);
  REQUIRE(roots.size() == 4);
  for (const auto& r : roots) CHECK(f.eval(r.s, r.t).is_zero());
}

TEST_CASE("irreducible quartic splits via its resolvent cubic") {
  Tower tw;
  // t^4 + 8t^3 + 2t^2 - 8t + 1: Galois group inside the dihedral group,
  // resolvent root 8 after depression
  BinForm f = bf({Rat(1), Rat(-8), Rat(2), Rat(8), Rat(1)});
  auto roots = binary_form_roots(tw, f);
  REQUIRE(roots.size() == 4);
  for (const auto& r : roots) {
    CHECK(r.mult == 1);
    CHECK(f.eval(r.s, r.t).is_zero());
    CHECK(root_multiplicity(f, r.s, r.t) == 1);
  }
}

TEST_CASE("cubic factors refuse loudly") {
  Tower tw;
  BinForm f = bf({Rat(-2), Rat(0), Rat(0), Rat(1)});  // t^3 - 2s^3
  CHECK_THROWS_AS(binary_form_roots(tw, f), Error);
}

TEST_CASE("trivariate monomial order is x2 xy xz y2 yz z2") {
  HomPoly3 q = HomPoly3::quadratic(
      {Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)});
  CHECK(q.coeff(2, 0) == 1);
  CHECK(q.coeff(1, 1) == 2);
  CHECK(q.coeff(1, 0) == 3);
  CHECK(q.coeff(0, 2) == 4);
  CHECK(q.coeff(0, 1) == 5);
  CHECK(q.coeff(0, 0) == 6);
  CHECK(q.eval(Rat(1), Rat(1), Rat(1)) == 21);
}

TEST_CASE("trivariate product and evaluation") {
  HomPoly3 xpy = HomPoly3::linear(Rat(1), Rat(1), Rat(0));
  HomPoly3 xmy = HomPoly3::linear(Rat(1), Rat(-1), Rat(0));
  HomPoly3 prod = xpy * xmy;
  CHECK(prod ==
        HomPoly3::quadratic({Rat(1), Rat(0), Rat(0), Rat(-1), Rat(0), Rat(0)}));
  Tower tw;
  FieldElement s2 = tw.element(tw.adjoin_sqrt(Rat(2)));
  HomPoly3 circ = HomPoly3::quadratic(
      {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(-2)});  // x^2 - 2z^2
  CHECK(circ.eval(s2, tw.rational(Rat(7)), tw.rational(Rat(1))).is_zero());
  CHECK(circ.eval(Rat(2), Rat(0), Rat(1)) == 2);
}

TEST_CASE("composition restricts a curve to a parametrized one") {
  // x^2 + y^2 - z^2 along x = s, y = t, z = s gives t^2.
  HomPoly3 conic = HomPoly3::quadratic(
      {Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(-1)});
  BinForm X = bf({Rat(1), Rat(0)});
  BinForm Y = bf({Rat(0), Rat(1)});
  BinForm res = conic.compose(X, Y, X);
  CHECK(res == bf({Rat(0), Rat(0), Rat(1)}));
  // Degree-2 parametrization lands in degree 4.
  BinForm X2 = bf({Rat(1), Rat(0), Rat(-1)});
  BinForm Y2 = bf({Rat(0), Rat(2), Rat(0)});
  BinForm Z2 = bf({Rat(1), Rat(0), Rat(1)});
  BinForm quart = conic.compose(X2, Y2, Z2);
  CHECK(quart.degree() == 4);
  CHECK(quart.is_zero());  // that parametrization lies on the conic
}

TEST_CASE("proportionality and primitive representatives") {
  HomPoly3 a = HomPoly3::linear(Rat(2), Rat(4), Rat(-6));
  HomPoly3 b = HomPoly3::linear(Rat(-1), Rat(-2), Rat(3));
  CHECK(a.proportional(b));
  CHECK(a.primitive() == HomPoly3::linear(Rat(1), Rat(2), Rat(-3)));
  CHECK(b.primitive() == HomPoly3::linear(Rat(1), Rat(2), Rat(-3)));
  HomPoly3 c = HomPoly3::linear(Rat(2), Rat(4), Rat(6));
  CHECK_FALSE(a.proportional(c));
  HomPoly3 fr = HomPoly3::linear(Rat(1, 2), Rat(0), Rat(-1, 3));
  CHECK(fr.primitive() == HomPoly3::linear(Rat(3), Rat(0), Rat(-2)));
}
