#include "planecover/plane_config.hpp"

#include <algorithm>
#include <sstream>

#include "planecover/error.hpp"

namespace planecover {
namespace {

using Vec3 = std::array<FieldElement, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Vec3 coords(const ProjPoint& p) { return {p.x, p.y, p.z}; }

Vec3 rat_vec(const std::array<Rat, 3>& v) {
  return {FieldElement(v[0]), FieldElement(v[1]), FieldElement(v[2])};
}

std::array<Int, 3> primitive_int3(const std::array<Rat, 3>& v) {
  Int lcm = 1;
  for (const auto& c : v) lcm = boost::multiprecision::lcm(lcm, rat_den(c));
  std::array<Int, 3> w;
  Int g = 0;
  for (int i = 0; i < 3; ++i) {
    w[i] = rat_num(v[i]) * (lcm / rat_den(v[i]));
    g = boost::multiprecision::gcd(g, w[i]);
  }
  require(g != 0, ErrorKind::Internal, "zero projective point");
  for (auto& c : w) c /= g;
  for (const auto& c : w) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& x : w) x = -x;
    break;
  }
  return w;
}

std::vector<Rat> primitive_rat_vec(const std::vector<Rat>& v) {
  Int lcm = 1;
  for (const auto& c : v) lcm = boost::multiprecision::lcm(lcm, rat_den(c));
  std::vector<Int> w;
  Int g = 0;
  for (const auto& c : v) {
    w.push_back(rat_num(c) * (lcm / rat_den(c)));
    g = boost::multiprecision::gcd(g, w.back());
  }
  require(g != 0, ErrorKind::Internal, "zero vector has no primitive form");
  std::vector<Rat> out;
  bool flip = false, seen = false;
  for (const auto& c : w)
    if (c != 0 && !seen) {
      flip = c < 0;
      seen = true;
    }
  for (const auto& c : w) out.emplace_back(flip ? Int(-c / g) : Int(c / g));
  return out;
}

// Symmetric-matrix helpers for conics.
using Mat3 = std::array<std::array<Rat, 3>, 3>;

Rat det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 adjugate(const Mat3& m) {
  Mat3 a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // adj = transpose of cofactors; symmetric inputs keep it simple
      a[j][i] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  return a;
}

std::vector<Rat> matrix_to_form(const Mat3& m) {
  return {m[0][0], Rat(2) * m[0][1], Rat(2) * m[0][2],
          m[1][1], Rat(2) * m[1][2], m[2][2]};
}

Mat3 form_to_matrix(const HomPoly3& f) {
  require(f.degree() == 2, ErrorKind::Dimension, "not a conic");
  Rat h(1, 2);
  return {{{f.coeff(2, 0), h * f.coeff(1, 1), h * f.coeff(1, 0)},
           {h * f.coeff(1, 1), f.coeff(0, 2), h * f.coeff(0, 1)},
           {h * f.coeff(1, 0), h * f.coeff(0, 1), f.coeff(0, 0)}}};
}

}  // namespace

bool ProjPoint::is_rational() const {
  return x.is_rational() && y.is_rational() && z.is_rational();
}

std::array<Int, 3> ProjPoint::primitive_coords() const {
  require(is_rational(), ErrorKind::UnsupportedField,
          "point has irrational coordinates");
  return primitive_int3(
      {x.rational_value(), y.rational_value(), z.rational_value()});
}

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  if (is_rational()) {
    auto c = primitive_coords();
    os << "(" << c[0] << " : " << c[1] << " : " << c[2] << ")";
  } else {
    os << "(" << x.to_string() << " : " << y.to_string() << " : "
       << z.to_string() << ")";
  }
  return os.str();
}

ProjPoint rational_point(const Rat& x, const Rat& y, const Rat& z) {
  require(x != 0 || y != 0 || z != 0, ErrorKind::Internal,
          "zero projective point");
  return {FieldElement(x), FieldElement(y), FieldElement(z)};
}

bool same_point(const ProjPoint& a, const ProjPoint& b) {
  Vec3 m = cross(coords(a), coords(b));
  return m[0].is_zero() && m[1].is_zero() && m[2].is_zero();
}

ProjPoint CurveParam::at(const FieldElement& s, const FieldElement& t) const {
  ProjPoint p{x.eval(s, t), y.eval(s, t), z.eval(s, t)};
  require(!(p.x.is_zero() && p.y.is_zero() && p.z.is_zero()),
          ErrorKind::Internal, "parametrization hit the zero vector");
  return p;
}

ProjPoint CurveParam::at(const Rat& s, const Rat& t) const {
  return at(FieldElement(s), FieldElement(t));
}

PlaneCurve::PlaneCurve(std::string label, HomPoly3 form)
    : label_(std::move(label)), form_(std::move(form)) {
  require(!form_.is_zero(), ErrorKind::Config,
          "curve '" + label_ + "' has the zero form");
}

PlaneCurve PlaneCurve::line(const std::string& label, const Rat& a,
                            const Rat& b, const Rat& c) {
  PlaneCurve out(label, HomPoly3::linear(a, b, c));
  // Two deterministic rational points: cross products of (a, b, c) with
  // the standard basis vectors, first two distinct ones.
  std::array<Rat, 3> n = {a, b, c};
  std::vector<std::array<Rat, 3>> pts;
  for (int i = 0; i < 3 && pts.size() < 2; ++i) {
    std::array<Rat, 3> e = {Rat(0), Rat(0), Rat(0)};
    e[i] = Rat(1);
    std::array<Rat, 3> p = {n[1] * e[2] - n[2] * e[1],
                            n[2] * e[0] - n[0] * e[2],
                            n[0] * e[1] - n[1] * e[0]};
    if (p[0] == 0 && p[1] == 0 && p[2] == 0) continue;
    auto prim = primitive_int3(p);
    std::array<Rat, 3> q = {Rat(prim[0]), Rat(prim[1]), Rat(prim[2])};
    if (!pts.empty() && pts[0] == q) continue;
    pts.push_back(q);
  }
  require(pts.size() == 2, ErrorKind::Internal, "line point search failed");
  CurveParam par;
  par.degree = 1;
  par.q0 = pts[0];
  par.q1 = pts[1];
  par.x = BinForm({pts[0][0], pts[1][0]});
  par.y = BinForm({pts[0][1], pts[1][1]});
  par.z = BinForm({pts[0][2], pts[1][2]});
  out.set_param(par);
  return out;
}

PlaneCurve PlaneCurve::conic(const std::string& label,
                             const std::vector<Rat>& six) {
  return PlaneCurve(label, HomPoly3::quadratic(six));
}

Mat3 PlaneCurve::conic_matrix() const { return form_to_matrix(form_); }

bool PlaneCurve::conic_is_smooth() const {
  return det3(conic_matrix()) != 0;
}

const CurveParam& PlaneCurve::param() const {
  require(param_.has_value(), ErrorKind::Internal,
          "curve '" + label_ + "' has no parametrization");
  return *param_;
}

void PlaneCurve::set_param(CurveParam p) {
  BinForm restricted = form_.compose(p.x, p.y, p.z);
  require(restricted.is_zero(), ErrorKind::Internal,
          "parametrization does not lie on '" + label_ + "'");
  param_ = std::move(p);
}

bool PlaneCurve::contains(const ProjPoint& p) const {
  return form_.eval(p.x, p.y, p.z).is_zero();
}

PlaneCurve dual_conic(const PlaneCurve& c) {
  require(c.degree() == 2, ErrorKind::Dimension, "dual of a non-conic");
  require(c.conic_is_smooth(), ErrorKind::Config,
          "dual of the singular conic '" + c.label() + "'");
  auto coeffs = primitive_rat_vec(matrix_to_form(adjugate(c.conic_matrix())));
  return PlaneCurve::conic("dual(" + c.label() + ")", coeffs);
}

CurveParam parametrize_conic(const PlaneCurve& conic, const ProjPoint& base) {
  require(conic.degree() == 2, ErrorKind::Dimension,
          "parametrize_conic needs a conic");
  require(conic.conic_is_smooth(), ErrorKind::Config,
          "cannot parametrize the singular conic '" + conic.label() + "'");
  require(conic.contains(base), ErrorKind::Config,
          "base point is not on '" + conic.label() + "'");
  auto prim = base.primitive_coords();
  std::array<Rat, 3> P = {Rat(prim[0]), Rat(prim[1]), Rat(prim[2])};
  int last = 2;
  while (P[last] == 0) --last;
  int i0 = last == 0 ? 1 : 0;
  int i1 = last == 2 ? 1 : 2;
  Mat3 M = conic.conic_matrix();
  std::array<Rat, 3> MP;
  for (int i = 0; i < 3; ++i)
    MP[i] = M[i][0] * P[0] + M[i][1] * P[1] + M[i][2] * P[2];
  // X(V) = C(V) P - 2 B(P,V) V on V = s e_i0 + t e_i1.
  BinForm CV({M[i0][i0], Rat(2) * M[i0][i1], M[i1][i1]});
  BinForm BPV({MP[i0], MP[i1]});
  CurveParam par;
  par.degree = 2;
  par.base = P;
  par.i0 = i0;
  par.i1 = i1;
  std::array<BinForm, 3> comp;
  for (int j = 0; j < 3; ++j) {
    BinForm Vj({Rat(j == i0 ? 1 : 0), Rat(j == i1 ? 1 : 0)});
    comp[j] = CV.scaled(P[j]) - BPV.scaled(Rat(2)) * Vj;
  }
  par.x = comp[0];
  par.y = comp[1];
  par.z = comp[2];
  return par;
}

ParamValue curve_parameter(const PlaneCurve& c, const ProjPoint& p) {
  require(c.contains(p), ErrorKind::Internal,
          "parameter of a point not on '" + c.label() + "'");
  const CurveParam& par = c.param();
  if (par.degree == 1) {
    for (auto [i, j] : {std::pair(0, 1), std::pair(0, 2), std::pair(1, 2)}) {
      if (par.q0[i] * par.q1[j] - par.q0[j] * par.q1[i] == 0) continue;
      Vec3 pc = coords(p);
      FieldElement s = pc[i] * FieldElement(par.q1[j]) -
                       pc[j] * FieldElement(par.q1[i]);
      FieldElement t = FieldElement(par.q0[i]) * pc[j] -
                       FieldElement(par.q0[j]) * pc[i];
      return {s, t};
    }
    fail(ErrorKind::Internal, "degenerate line parametrization");
  }
  Vec3 basev = rat_vec(par.base);
  ProjPoint basep{basev[0], basev[1], basev[2]};
  if (same_point(p, basep)) {
    // The base point sits at the tangent-line parameter B(base, V) = 0.
    Mat3 M = c.conic_matrix();
    std::array<Rat, 3> MP;
    for (int i = 0; i < 3; ++i)
      MP[i] = M[i][0] * par.base[0] + M[i][1] * par.base[1] +
              M[i][2] * par.base[2];
    return {FieldElement(-MP[par.i1]), FieldElement(MP[par.i0])};
  }
  // V = (base x p) x (e_i0 x e_i1) lies on the parameter line and on the
  // chord through base and p; its components give (s, t).
  Vec3 e0 = {FieldElement(Rat(0)), FieldElement(Rat(0)), FieldElement(Rat(0))};
  Vec3 e1 = e0;
  e0[par.i0] = FieldElement(Rat(1));
  e1[par.i1] = FieldElement(Rat(1));
  Vec3 V = cross(cross(basev, coords(p)), cross(e0, e1));
  FieldElement s = V[par.i0], t = V[par.i1];
  require(!(s.is_zero() && t.is_zero()), ErrorKind::Internal,
          "conic parameter recovery degenerated");
  return {s, t};
}

int intersection_multiplicity(const PlaneCurve& c1, const PlaneCurve& c2,
                              const ProjPoint& p) {
  require(!c1.form().proportional(c2.form()), ErrorKind::Config,
          "infinite intersection: common component through the point");
  const PlaneCurve* a = &c1;
  const PlaneCurve* b = &c2;
  if (!a->has_param() && b->has_param()) std::swap(a, b);
  require(a->contains(p) && b->contains(p), ErrorKind::Internal,
          "intersection point is not on both curves");
  BinForm restricted =
      b->form().compose(a->param().x, a->param().y, a->param().z);
  require(!restricted.is_zero(), ErrorKind::Config,
          "infinite intersection: common component through the point");
  ParamValue v = curve_parameter(*a, p);
  return root_multiplicity(restricted, v.s, v.t);
}

std::vector<IntersectionPoint> intersect_curves(Tower& tw,
                                                const PlaneCurve& c1,
                                                const PlaneCurve& c2) {
  require(!c1.form().proportional(c2.form()), ErrorKind::Config,
          "infinite intersection: common component");
  BinForm restricted =
      c2.form().compose(c1.param().x, c1.param().y, c1.param().z);
  require(!restricted.is_zero(), ErrorKind::Config,
          "infinite intersection: common component");
  std::vector<IntersectionPoint> out;
  for (const auto& r : binary_form_roots(tw, restricted))
    out.push_back({c1.param().at(r.s, r.t), r.s, r.t, r.mult});
  return out;
}

ConicPencil::ConicPencil(std::vector<Rat> anchor, std::vector<Rat> direction)
    : anchor_(std::move(anchor)), direction_(std::move(direction)) {
  require(anchor_.size() == 6 && direction_.size() == 6, ErrorKind::Dimension,
          "pencil vectors need six coefficients");
}

std::vector<Rat> ConicPencil::dual_at(const Rat& t) const {
  std::vector<Rat> v(6);
  for (int i = 0; i < 6; ++i) v[i] = anchor_[i] + t * direction_[i];
  return v;
}

bool ConicPencil::member_is_degenerate(const Rat& t) const {
  return det3(form_to_matrix(HomPoly3::quadratic(dual_at(t)))) == 0;
}

PlaneCurve ConicPencil::member(const Rat& t, const std::string& label) const {
  require(!member_is_degenerate(t), ErrorKind::Config,
          "pencil member t = " + format_rational(t) + " is degenerate");
  Mat3 dual = form_to_matrix(HomPoly3::quadratic(dual_at(t)));
  auto coeffs = primitive_rat_vec(matrix_to_form(adjugate(dual)));
  return PlaneCurve::conic(label, coeffs);
}

ConicPencil tangent_conic_pencil(const std::vector<PlaneCurve>& lines) {
  require(lines.size() == 4, ErrorKind::Config,
          "the tangent pencil takes exactly four lines");
  for (const auto& l : lines)
    require(l.degree() == 1, ErrorKind::Config,
            "'" + l.label() + "' is not a line");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      require(!lines[i].form().proportional(lines[j].form()),
              ErrorKind::Config, "lines '" + lines[i].label() + "' and '" +
                                     lines[j].label() + "' coincide");
  std::array<std::array<Rat, 3>, 4> L;
  for (int k = 0; k < 4; ++k)
    L[k] = {lines[k].form().coeff(1, 0), lines[k].form().coeff(0, 1),
            lines[k].form().coeff(0, 0)};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c) {
        Mat3 m = {{L[a], L[b], L[c]}};
        require(det3(m) != 0, ErrorKind::Config,
                "three of the four lines are concurrent");
      }
  // Tangency of a conic to the line l is linear in the dual form: the
  // dual conic passes through l = (a, b, c).
  ExactMatrix cond(4, 6);
  for (int k = 0; k < 4; ++k) {
    const auto& [a, b, c] = L[k];
    std::vector<Rat> row = {a * a, a * b, a * c, b * b, b * c, c * c};
    for (int j = 0; j < 6; ++j) cond.at(k, j) = FieldElement(row[j]);
  }
  auto kern = cond.kernel();
  require(kern.size() == 2, ErrorKind::Config,
          "tangency conditions are degenerate");
  auto to_rat = [](const std::vector<FieldElement>& v) {
    std::vector<Rat> out;
    for (const auto& e : v) out.push_back(e.rational_value());
    return primitive_rat_vec(out);
  };
  return ConicPencil(to_rat(kern[1]), to_rat(kern[0]));
}

ProjPoint tangency_point(const PlaneCurve& line, const PlaneCurve& conic) {
  require(line.degree() == 1 && conic.degree() == 2, ErrorKind::Dimension,
          "tangency_point takes a line and a conic");
  BinForm restricted =
      conic.form().compose(line.param().x, line.param().y, line.param().z);
  require(!restricted.is_zero(), ErrorKind::Config,
          "line lies on the conic's locus");
  auto dec = squarefree_decomposition(restricted);
  require(dec.size() == 1 && dec[0].mult == 2 && dec[0].form.degree() == 1,
          ErrorKind::CheckFailed,
          "'" + line.label() + "' is not tangent to '" + conic.label() + "'");
  // The double root of c0*s + c1*t is (c1, -c0).
  return line.param().at(dec[0].form.coeff(1), -dec[0].form.coeff(0));
}

std::pair<bool, BinForm> restriction_is_square(const HomPoly3& f,
                                               const PlaneCurve& conic) {
  BinForm restricted =
      f.compose(conic.param().x, conic.param().y, conic.param().z);
  require(!restricted.is_zero(), ErrorKind::CheckFailed,
          "restriction vanishes identically: ramified along the conic");
  BinForm root;
  bool ok = binform_is_square(restricted, &root);
  return {ok, root};
}

std::vector<ArrangementPoint> classify_arrangement_singularities(
    Tower& tw, const std::vector<PlaneCurve>& curves) {
  for (const auto& c : curves) {
    require(c.degree() == 1 || c.degree() == 2, ErrorKind::UnsupportedSingularity,
            "component '" + c.label() + "' has unsupported degree");
    if (c.degree() == 2)
      require(c.conic_is_smooth(), ErrorKind::UnsupportedSingularity,
              "component '" + c.label() + "' is a singular conic");
  }
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j)
      require(!curves[i].form().proportional(curves[j].form()),
              ErrorKind::Config, "components '" + curves[i].label() +
                                     "' and '" + curves[j].label() +
                                     "' share their locus");
  std::vector<ArrangementPoint> pts;
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      const PlaneCurve* a = &curves[i];
      const PlaneCurve* b = &curves[j];
      if (!a->has_param()) std::swap(a, b);
      for (const auto& ip : intersect_curves(tw, *a, *b)) {
        ArrangementPoint* hit = nullptr;
        for (auto& ap : pts)
          if (same_point(ap.location, ip.point)) {
            hit = &ap;
            break;
          }
        if (!hit) {
          pts.push_back({ip.point, {}, LocalType::Smooth, {}});
          hit = &pts.back();
        }
        for (int k : {static_cast<int>(i), static_cast<int>(j)})
          if (std::find(hit->components.begin(), hit->components.end(), k) ==
              hit->components.end())
            hit->components.push_back(k);
        hit->pair_multiplicities.emplace_back(static_cast<int>(i),
                                              static_cast<int>(j), ip.mult);
      }
    }
  for (auto& ap : pts) {
    std::sort(ap.components.begin(), ap.components.end());
    require(ap.components.size() == 2, ErrorKind::UnsupportedSingularity,
            "more than two components meet at " + ap.location.to_string());
    int mult = std::get<2>(ap.pair_multiplicities.front());
    require(mult <= 2, ErrorKind::UnsupportedSingularity,
            "contact order " + std::to_string(mult) + " at " +
                ap.location.to_string());
    ap.type = mult == 1 ? LocalType::A1 : LocalType::A3;
  }
  return pts;
}

}  // namespace planecover
