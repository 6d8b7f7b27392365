#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planecover/error.hpp"
#include "planecover/plane_config.hpp"

using namespace planecover;

namespace {

PlaneCurve unit_conic() {
  return PlaneCurve::conic(
      "H1", {Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(-1)});
}

std::vector<PlaneCurve> four_lines() {
  return {PlaneCurve::line("T1", Rat(1), Rat(0), Rat(-1)),
          PlaneCurve::line("T2", Rat(1), Rat(0), Rat(1)),
          PlaneCurve::line("T3", Rat(0), Rat(1), Rat(-1)),
          PlaneCurve::line("T4", Rat(0), Rat(1), Rat(1))};
}

PlaneCurve second_conic() {  // tangent pencil member at parameter 1
  return tangent_conic_pencil(four_lines()).member(Rat(1), "H2");
}

}  // namespace

TEST_CASE("projective points compare up to scale") {
  ProjPoint a = rational_point(Rat(2), Rat(-4), Rat(6));
  ProjPoint b = rational_point(Rat(-1), Rat(2), Rat(-3));
  CHECK(same_point(a, b));
  CHECK_FALSE(same_point(a, rational_point(Rat(1), Rat(2), Rat(3))));
  auto c = a.primitive_coords();
  CHECK(c[0] == 1);
  CHECK(c[1] == -2);
  CHECK(c[2] == 3);
  CHECK(a.to_string() == "(1 : -2 : 3)");
}

TEST_CASE("transverse lines meet with multiplicity one") {
  PlaneCurve l1 = PlaneCurve::line("l1", Rat(1), Rat(0), Rat(-1));
  PlaneCurve l2 = PlaneCurve::line("l2", Rat(0), Rat(1), Rat(-1));
  ProjPoint p = rational_point(Rat(1), Rat(1), Rat(1));
  CHECK(intersection_multiplicity(l1, l2, p) == 1);
}

TEST_CASE("tangent line meets the conic with multiplicity two") {
  PlaneCurve h1 = unit_conic();
  PlaneCurve t1 = PlaneCurve::line("T1", Rat(1), Rat(0), Rat(-1));
  CHECK(intersection_multiplicity(t1, h1, rational_point(Rat(1), Rat(0), Rat(1))) == 2);
  PlaneCurve h2 = second_conic();
  CHECK(intersection_multiplicity(t1, h2, rational_point(Rat(2), Rat(1), Rat(2))) == 2);
}

TEST_CASE("common locus is rejected as infinite intersection") {
  PlaneCurve l1 = PlaneCurve::line("l1", Rat(1), Rat(0), Rat(-1));
  PlaneCurve l2 = PlaneCurve::line("l2", Rat(-2), Rat(0), Rat(2));
  CHECK_THROWS_AS(
      intersection_multiplicity(l1, l2, rational_point(Rat(1), Rat(1), Rat(1))),
      Error);
}

TEST_CASE("dual conic is the adjugate, and dualizing twice returns") {
  PlaneCurve h1 = unit_conic();
  CHECK(dual_conic(h1).form().proportional(h1.form()));
  PlaneCurve m = PlaneCurve::conic(
      "m", {Rat(1), Rat(1), Rat(0), Rat(1), Rat(0), Rat(-1)});
  PlaneCurve md = dual_conic(m);
  CHECK(md.form().proportional(HomPoly3::quadratic(
      {Rat(1), Rat(-1), Rat(0), Rat(1), Rat(0), Rat(-3, 4)})));
  CHECK(dual_conic(md).form().proportional(m.form()));
  PlaneCurve sing = PlaneCurve::conic(
      "sing", {Rat(1), Rat(0), Rat(0), Rat(-1), Rat(0), Rat(0)});
  CHECK_THROWS_AS(dual_conic(sing), Error);
}

TEST_CASE("tangent pencil reproduces the known members") {
  ConicPencil pencil = tangent_conic_pencil(four_lines());
  CHECK(pencil.member(Rat(0), "m0").form().proportional(unit_conic().form()));
  CHECK(pencil.member(Rat(1), "m1").form() ==
        HomPoly3::quadratic({Rat(4), Rat(-4), Rat(0), Rat(4), Rat(0), Rat(-3)}));
  for (int t : {-5, -1, 0, 1, 3, 7}) CHECK_FALSE(pencil.member_is_degenerate(Rat(t)));
  CHECK(pencil.member_is_degenerate(Rat(2)));
  CHECK(pencil.member_is_degenerate(Rat(-2)));
  CHECK_THROWS_AS(pencil.member(Rat(2), "bad"), Error);
}

TEST_CASE("every smooth pencil member is tangent to all four lines") {
  ConicPencil pencil = tangent_conic_pencil(four_lines());
  for (const Rat& t : {Rat(1), Rat(3), Rat(-1, 2)}) {
    PlaneCurve m = pencil.member(t, "m");
    for (const auto& l : four_lines()) {
      ProjPoint p = tangency_point(l, m);
      CHECK(intersection_multiplicity(l, m, p) == 2);
    }
  }
}

TEST_CASE("concurrent lines are rejected by the pencil") {
  std::vector<PlaneCurve> bad = {
      PlaneCurve::line("a", Rat(1), Rat(0), Rat(0)),
      PlaneCurve::line("b", Rat(0), Rat(1), Rat(0)),
      PlaneCurve::line("c", Rat(1), Rat(1), Rat(0)),
      PlaneCurve::line("d", Rat(0), Rat(0), Rat(1))};
  CHECK_THROWS_AS(tangent_conic_pencil(bad), Error);
}

TEST_CASE("stereographic parametrization of the unit conic") {
  PlaneCurve h1 = unit_conic();
  CurveParam par = parametrize_conic(h1, rational_point(Rat(1), Rat(0), Rat(1)));
  CHECK(par.x == BinForm({Rat(-1), Rat(0), Rat(1)}));
  CHECK(par.y == BinForm({Rat(0), Rat(-2), Rat(0)}));
  CHECK(par.z == BinForm({Rat(1), Rat(0), Rat(1)}));
  CHECK(h1.form().compose(par.x, par.y, par.z).is_zero());
  h1.set_param(par);
  // Parameter recovery inverts the map, including at the base point.
  Tower tw;
  for (auto [s, t] : {std::pair(1, 2), std::pair(3, -1), std::pair(0, 1)}) {
    ProjPoint p = h1.param().at(Rat(s), Rat(t));
    ParamValue v = curve_parameter(h1, p);
    CHECK((v.s * FieldElement(Rat(t)) - v.t * FieldElement(Rat(s))).is_zero());
  }
  ParamValue vb = curve_parameter(h1, rational_point(Rat(1), Rat(0), Rat(1)));
  CHECK(same_point(h1.param().at(vb.s, vb.t), rational_point(Rat(1), Rat(0), Rat(1))));
}

TEST_CASE("parametrization of the second conic through its contact point") {
  PlaneCurve h2 = second_conic();
  PlaneCurve t1 = PlaneCurve::line("T1", Rat(1), Rat(0), Rat(-1));
  ProjPoint touch = tangency_point(t1, h2);
  CHECK(same_point(touch, rational_point(Rat(2), Rat(1), Rat(2))));
  CurveParam par = parametrize_conic(h2, touch);
  CHECK(h2.form().compose(par.x, par.y, par.z).is_zero());
}

TEST_CASE("tangency points of the default configuration are rational") {
  PlaneCurve h1 = unit_conic();
  CHECK(same_point(tangency_point(PlaneCurve::line("T1", Rat(1), Rat(0), Rat(-1)), h1),
                   rational_point(Rat(1), Rat(0), Rat(1))));
  CHECK(same_point(tangency_point(PlaneCurve::line("T4", Rat(0), Rat(1), Rat(1)), h1),
                   rational_point(Rat(0), Rat(1), Rat(-1))));
  PlaneCurve l = PlaneCurve::line("sec", Rat(0), Rat(0), Rat(1));
  CHECK_THROWS_AS(tangency_point(l, h1), Error);  // a secant, not tangent
}

TEST_CASE("splitting oracle on the unit conic") {
  PlaneCurve h1 = unit_conic();
  h1.set_param(parametrize_conic(h1, rational_point(Rat(1), Rat(0), Rat(1))));
  HomPoly3 d3 = HomPoly3::quadratic({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(-1)});
  HomPoly3 d4 = HomPoly3::quadratic({Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(-1)});
  auto [ok, root] = restriction_is_square(d3 * d4, h1);
  REQUIRE(ok);
  // Root 2*s^3*t - 2*s*t^3, i.e. 2t(1 - t^2) after setting s = 1.
  CHECK(root == BinForm({Rat(0), Rat(2), Rat(0), Rat(-2), Rat(0)}));
  auto [bad, r2] = restriction_is_square(d3, h1);
  CHECK_FALSE(bad);
  auto [triv, r3] = restriction_is_square(d3 * d3, h1);
  CHECK(triv);
}

TEST_CASE("two transverse lines make one node") {
  Tower tw;
  std::vector<PlaneCurve> arr = {PlaneCurve::line("a", Rat(1), Rat(0), Rat(0)),
                                 PlaneCurve::line("b", Rat(0), Rat(1), Rat(0))};
  auto pts = classify_arrangement_singularities(tw, arr);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].type == LocalType::A1);
  CHECK(same_point(pts[0].location, rational_point(Rat(0), Rat(0), Rat(1))));
}

TEST_CASE("conic plus tangent line makes one tacnode") {
  Tower tw;
  std::vector<PlaneCurve> arr = {unit_conic(),
                                 PlaneCurve::line("T1", Rat(1), Rat(0), Rat(-1))};
  auto pts = classify_arrangement_singularities(tw, arr);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].type == LocalType::A3);
}

TEST_CASE("three concurrent lines fail loudly") {
  Tower tw;
  std::vector<PlaneCurve> arr = {PlaneCurve::line("a", Rat(1), Rat(0), Rat(0)),
                                 PlaneCurve::line("b", Rat(0), Rat(1), Rat(0)),
                                 PlaneCurve::line("c", Rat(1), Rat(-1), Rat(0))};
  CHECK_THROWS_AS(classify_arrangement_singularities(tw, arr), Error);
}

TEST_CASE("the full octic arrangement has 10 nodes and 8 tacnodes") {
  Tower tw;
  std::vector<PlaneCurve> arr = four_lines();
  PlaneCurve h1 = unit_conic();
  h1.set_param(parametrize_conic(h1, tangency_point(arr[0], h1)));
  PlaneCurve h2 = second_conic();
  h2.set_param(parametrize_conic(h2, tangency_point(arr[0], h2)));
  arr.push_back(h1);
  arr.push_back(h2);
  auto pts = classify_arrangement_singularities(tw, arr);
  int a1 = 0, a3 = 0;
  for (const auto& p : pts) {
    if (p.type == LocalType::A1) ++a1;
    if (p.type == LocalType::A3) ++a3;
  }
  CHECK(pts.size() == 18);
  CHECK(a1 == 10);
  CHECK(a3 == 8);
}

TEST_CASE("intersection totals satisfy the degree product") {
  Tower tw;
  std::vector<PlaneCurve> arr = four_lines();
  PlaneCurve h1 = unit_conic();
  h1.set_param(parametrize_conic(h1, tangency_point(arr[0], h1)));
  PlaneCurve h2 = second_conic();
  h2.set_param(parametrize_conic(h2, tangency_point(arr[0], h2)));
  arr.push_back(h1);
  arr.push_back(h2);
  for (std::size_t i = 0; i < arr.size(); ++i)
    for (std::size_t j = 0; j < arr.size(); ++j) {
      if (i == j) continue;
      if (!arr[i].has_param()) continue;
      int total = 0;
      for (const auto& ip : intersect_curves(tw, arr[i], arr[j]))
        total += ip.mult;
      CHECK(total == arr[i].degree() * arr[j].degree());
    }
}
