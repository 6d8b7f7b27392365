#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "planecover/rational.hpp"

namespace planecover {

class FieldElement;

// Iterated square-root extension of Q: generators s_1..s_k with
// s_i^2 = a_i, the a_i squarefree integers with no nonempty subset
// product a rational square (so the 2^k products s_S are linearly
// independent over Q). Append-only: adjoining keeps existing elements
// valid. One tower is shared per pipeline run.
class Tower {
public:
  Tower() = default;
  Tower(const Tower&) = delete;  // elements hold stable pointers
  Tower& operator=(const Tower&) = delete;

  int size() const { return static_cast<int>(rad_.size()); }
  const Int& radicand(int i) const;

  // sqrt(a) = coeff * prod_{i in mask} s_i with coeff > 0, extending the
  // tower only when a is independent of the existing radicands.
  struct Root {
    Rat coeff;
    std::uint32_t mask = 0;
  };
  Root adjoin_sqrt(const Rat& a);  // a != 0

  // Product of radicands over a generator subset; empty mask gives 1.
  Int subset_product(std::uint32_t mask) const;

  FieldElement rational(const Rat& value) const;
  FieldElement generator(int i) const;
  FieldElement element(const Root& r) const;

  // Deterministic work counter for the report's timing block.
  long adjoin_calls() const { return adjoin_calls_; }

private:
  std::vector<Int> rad_;
  long adjoin_calls_ = 0;
};

// Element sum_S c_S * prod_{i in S} s_i of a tower's field. Canonical:
// zero coefficients are absent, so equality is map equality. A null
// tower is allowed while the support is contained in the empty mask
// (pure rationals); mixed-tower arithmetic is an internal error.
class FieldElement {
public:
  FieldElement() = default;                 // zero
  explicit FieldElement(const Rat& value);  // rational, null tower
  FieldElement(const Tower* tower, std::map<std::uint32_t, Rat> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const;
  Rat rational_value() const;  // requires is_rational
  const Tower* tower() const { return tower_; }
  const std::map<std::uint32_t, Rat>& coefficients() const { return c_; }

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inverse() const;  // nonzero
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  // s_i -> -s_i for every generator bit in mask.
  FieldElement conjugate(std::uint32_t mask) const;

  // Deterministic rendering, masks ascending: "1/2 + 3*s1*s3".
  std::string to_string() const;

private:
  const Tower* resolve_tower(const FieldElement& o, const char* op) const;

  const Tower* tower_ = nullptr;
  std::map<std::uint32_t, Rat> c_;
};

FieldElement operator*(const Rat& a, const FieldElement& x);

// Square root of x over (a possibly extended) tw. Supported shapes:
// rational x, and x = alpha + beta*s_S with a single radical mask where
// alpha^2 - beta^2*a_S is a rational square (one-level denesting).
// Deeper nesting raises UnsupportedField.
FieldElement sqrt_element(Tower& tw, const FieldElement& x);

// x^n for n >= 0 by repeated multiplication.
FieldElement int_pow(const FieldElement& x, int n);

// Dense exact matrix over a tower field.
class ExactMatrix {
public:
  ExactMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FieldElement& at(int i, int j);
  const FieldElement& at(int i, int j) const;

  int rank() const;
  // Basis of the right null space; size = cols - rank.
  std::vector<std::vector<FieldElement>> kernel() const;
  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;
  ExactMatrix select_columns(const std::vector<int>& cols) const;

private:
  int rows_, cols_;
  std::vector<FieldElement> a_;
};

// Deterministic count of row eliminations performed so far (process-wide,
// single-threaded pipeline); feeds the report's timing block.
long elimination_ops();

}  // namespace planecover
