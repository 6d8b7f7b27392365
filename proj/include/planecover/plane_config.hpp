#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "planecover/poly.hpp"

namespace planecover {

// Point of the projective plane with coordinates in a tower field.
struct ProjPoint {
  FieldElement x, y, z;

  bool is_rational() const;
  // Primitive integer coordinates with the first nonzero one positive;
  // the canonical representative used for ordering and display.
  // Requires a rational point.
  std::array<Int, 3> primitive_coords() const;
  std::string to_string() const;
};

ProjPoint rational_point(const Rat& x, const Rat& y, const Rat& z);
bool same_point(const ProjPoint& a, const ProjPoint& b);

// Rational parametrization of a line (degree 1) or smooth conic
// (degree 2), with enough provenance to invert it exactly.
struct CurveParam {
  BinForm x, y, z;  // components of a common degree

  // Line provenance: the two generating points, so a point P recovers
  // (s, t) from 2x2 minors. Conic provenance: the rational base point
  // and the two standard basis indices spanning the parameter line.
  int degree = 1;
  std::array<Rat, 3> q0{}, q1{};  // line: X = s*q0 + t*q1
  std::array<Rat, 3> base{};      // conic: stereographic center
  int i0 = 0, i1 = 1;             // conic: V = s*e_i0 + t*e_i1

  ProjPoint at(const FieldElement& s, const FieldElement& t) const;
  ProjPoint at(const Rat& s, const Rat& t) const;
};

class PlaneCurve {
public:
  // ax + by + cz, not all zero; parametrized on construction.
  static PlaneCurve line(const std::string& label, const Rat& a, const Rat& b,
                         const Rat& c);
  // Coefficients in the order x^2, xy, xz, y^2, yz, z^2; smooth or not.
  static PlaneCurve conic(const std::string& label,
                          const std::vector<Rat>& six);

  const std::string& label() const { return label_; }
  const HomPoly3& form() const { return form_; }
  int degree() const { return form_.degree(); }

  // Symmetric matrix of a degree-2 form (form = X^T M X).
  std::array<std::array<Rat, 3>, 3> conic_matrix() const;
  bool conic_is_smooth() const;  // determinant nonzero

  bool has_param() const { return param_.has_value(); }
  const CurveParam& param() const;
  void set_param(CurveParam p);

  bool contains(const ProjPoint& p) const;

private:
  PlaneCurve(std::string label, HomPoly3 form);
  std::string label_;
  HomPoly3 form_;
  std::optional<CurveParam> param_;
};

// Tangent lines of a smooth conic, as a conic in the dual plane
// (adjugate matrix), primitive with first nonzero coefficient positive.
PlaneCurve dual_conic(const PlaneCurve& c);

// Stereographic parametrization of a smooth conic from a rational point
// on it: X(V) = C(V)*P - 2*B(P,V)*V on the parameter line
// V = s*e_i0 + t*e_i1, where i0 < i1 are the two coordinate directions
// other than the last nonzero coordinate of P. Bijective onto the conic.
CurveParam parametrize_conic(const PlaneCurve& conic, const ProjPoint& base);

// Parameter value of a point on a parametrized curve (projective pair).
struct ParamValue {
  FieldElement s, t;
};
ParamValue curve_parameter(const PlaneCurve& c, const ProjPoint& p);

// Local intersection number at p via the parametrization of c1.
// Pre: p lies on both curves and the forms share no component.
int intersection_multiplicity(const PlaneCurve& c1, const PlaneCurve& c2,
                              const ProjPoint& p);

// All common points of two parametrized-vs-general curves, through the
// roots of c2 restricted to c1; multiplicities sum to deg c1 * deg c2.
struct IntersectionPoint {
  ProjPoint point;
  FieldElement s, t;  // parameter on c1
  int mult = 0;
};
std::vector<IntersectionPoint> intersect_curves(Tower& tw,
                                                const PlaneCurve& c1,
                                                const PlaneCurve& c2);

// One-parameter family of conics tangent to four given lines, anchored
// in the dual plane: member(t) is the dual of anchor + t*direction,
// where anchor and direction are the primitive kernel vectors of the
// four tangency conditions (higher free column anchors the family).
class ConicPencil {
public:
  ConicPencil(std::vector<Rat> anchor, std::vector<Rat> direction);
  PlaneCurve member(const Rat& t, const std::string& label) const;
  bool member_is_degenerate(const Rat& t) const;  // dual determinant zero
  const std::vector<Rat>& anchor() const { return anchor_; }
  const std::vector<Rat>& direction() const { return direction_; }

private:
  std::vector<Rat> dual_at(const Rat& t) const;
  std::vector<Rat> anchor_, direction_;
};

// The pencil of conics tangent to four distinct lines, no three
// concurrent.
ConicPencil tangent_conic_pencil(const std::vector<PlaneCurve>& lines);

// Contact point of a line tangent to a conic: the double root of the
// conic restricted to the line. Errors if the contact is not exactly 2.
ProjPoint tangency_point(const PlaneCurve& line, const PlaneCurve& conic);

// Restriction of f to a parametrized conic, tested for being a perfect
// square; the root (when present) is canonical with positive first
// nonzero coefficient. Errors if f vanishes identically on the conic.
std::pair<bool, BinForm> restriction_is_square(const HomPoly3& f,
                                               const PlaneCurve& conic);

enum class LocalType { A1, A3, TransversePair, Smooth };

struct ArrangementPoint {
  ProjPoint location;
  std::vector<int> components;  // indices into the classified list
  LocalType type = LocalType::Smooth;
  // (first curve, second curve, local intersection number)
  std::vector<std::tuple<int, int, int>> pair_multiplicities;
};

// Every singular point of the union of the curves, classified as an
// ordinary node (two transverse branches) or a tacnode (two branches
// with contact exactly 2). Three curves through a point, a contact
// higher than 2, or a singular member raise UnsupportedSingularity.
std::vector<ArrangementPoint> classify_arrangement_singularities(
    Tower& tw, const std::vector<PlaneCurve>& curves);

}  // namespace planecover
