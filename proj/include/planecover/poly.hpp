#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "planecover/exact_field.hpp"

namespace planecover {

// Homogeneous binary form of degree d in (s, t) over Q:
// coeffs[k] multiplies s^(d-k) * t^k. The degree is fixed by the vector
// length, so leading or trailing zero coefficients are meaningful.
class BinForm {
public:
  BinForm() = default;  // the zero form of degree 0
  explicit BinForm(std::vector<Rat> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(int k) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;

  BinForm operator+(const BinForm& o) const;  // equal degrees
  BinForm operator-(const BinForm& o) const;
  BinForm operator*(const BinForm& o) const;
  BinForm scaled(const Rat& a) const;

  FieldElement eval(const FieldElement& s, const FieldElement& t) const;
  Rat eval(const Rat& s, const Rat& t) const;

  bool operator==(const BinForm& o) const { return c_ == o.c_; }
  std::string to_string() const;  // in variables s, t

private:
  std::vector<Rat> c_ = {Rat(0)};
};

// True iff f = g^2 for a rational form g; fills *root with the canonical
// g (leading nonzero coefficient positive) when given.
bool binform_is_square(const BinForm& f, BinForm* root = nullptr);

// Order of vanishing of f at the projective parameter (s0 : t0) != (0,0).
int root_multiplicity(const BinForm& f, const FieldElement& s0,
                      const FieldElement& t0);

struct FormRoot {
  FieldElement s, t;  // (1, theta) for finite roots, (0, 1) at infinity
  int mult = 0;
};

// All projective roots of a nonzero form, with multiplicity summing to
// deg f, over tw (extended as needed). Every irreducible factor must
// split in an iterated square-root tower: linear and quadratic factors
// always do, quartics via a rational resolvent root; cubic factors and
// resolvent-irrational quartics raise UnsupportedField.
std::vector<FormRoot> binary_form_roots(Tower& tw, const BinForm& f);

// Squarefree part decomposition over Q: f = content * prod factors[i].form^
// factors[i].mult with the forms primitive, squarefree and pairwise
// coprime. Used for both the square test and root multiplicities.
struct SquarefreeFactor {
  BinForm form;
  int mult = 0;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const BinForm& f,
                                                       Rat* content = nullptr);

// Homogeneous trivariate polynomial over Q in (x, y, z), dense in the
// monomial order x^i y^j z^k sorted by i descending then j descending
// (so quadrics read x^2, xy, xz, y^2, yz, z^2).
class HomPoly3 {
public:
  explicit HomPoly3(int degree);  // zero polynomial
  HomPoly3(int degree, std::vector<Rat> coeffs);

  static HomPoly3 linear(const Rat& a, const Rat& b, const Rat& c);  // ax+by+cz
  static HomPoly3 quadratic(const std::vector<Rat>& six);

  int degree() const { return degree_; }
  int terms() const { return static_cast<int>(c_.size()); }
  const Rat& coeff(int i, int j) const;  // monomial x^i y^j z^(d-i-j)
  Rat& coeff(int i, int j);
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;

  HomPoly3 operator+(const HomPoly3& o) const;
  HomPoly3 operator-(const HomPoly3& o) const;
  HomPoly3 operator*(const HomPoly3& o) const;
  HomPoly3 scaled(const Rat& a) const;

  FieldElement eval(const FieldElement& x, const FieldElement& y,
                    const FieldElement& z) const;
  Rat eval(const Rat& x, const Rat& y, const Rat& z) const;

  // Substitute a parametrized curve: x = X(s,t), y = Y(s,t), z = Z(s,t),
  // all of one degree e; the result has degree d*e.
  BinForm compose(const BinForm& X, const BinForm& Y, const BinForm& Z) const;

  bool operator==(const HomPoly3& o) const;
  bool proportional(const HomPoly3& o) const;  // equal up to nonzero scale

  // Divide out the rational content and make the first nonzero
  // coefficient positive; canonical representative of the scale class.
  HomPoly3 primitive() const;

  std::string to_string() const;

private:
  int index(int i, int j) const;
  int degree_ = 0;
  std::vector<Rat> c_;
};

}  // namespace planecover
