#pragma once

#include <map>
#include <string>
#include <vector>

#include "planecover/rational.hpp"

namespace planecover {

// Formal divisor class on the resolved cover, written over the basis
// F (pullback of a general plane line), the exceptional (-2)-curves
// A_1..A_n, and named declared classes whose pairings are supplied by a
// PairingTable.
struct LatticeClass {
  Rat f;
  std::map<int, Rat> nodes;               // 1-based A_i coefficients
  std::map<std::string, Rat> declared;

  bool is_zero() const;
  bool integral() const;                  // every coefficient an integer
  Rat node_coeff(int i) const;
  Rat declared_coeff(const std::string& name) const;
  std::string to_string() const;

  static LatticeClass general_line(const Rat& c = 1);
  static LatticeClass node(int i, const Rat& c = 1);
  static LatticeClass named(const std::string& name, const Rat& c = 1);

  LatticeClass& operator+=(const LatticeClass& o);
  LatticeClass& operator-=(const LatticeClass& o);
  LatticeClass& operator*=(const Rat& c);
};

LatticeClass operator+(LatticeClass a, const LatticeClass& b);
LatticeClass operator-(LatticeClass a, const LatticeClass& b);
LatticeClass operator-(LatticeClass a);
LatticeClass operator*(const Rat& c, LatticeClass a);
bool operator==(const LatticeClass& a, const LatticeClass& b);

// Intersection pairing over {F, A_1..A_n} plus declared classes:
// F*F is the covering degree, F*A_i = 0, A_i*A_j = -2 delta_ij, and a
// declared class carries its full row (pairing with F, with every A_i,
// and with itself and all previously declared classes). Rows are
// validated on declaration and immutable afterwards.
class PairingTable {
 public:
  PairingTable(int node_count, const Rat& f_self);

  // with_nodes is sparse (missing indices pair to zero); with_declared
  // must contain the new name itself and every name declared earlier.
  void declare(const std::string& name, const Rat& with_f,
               const std::map<int, Rat>& with_nodes,
               const std::map<std::string, Rat>& with_declared);

  int node_count() const { return node_count_; }
  const Rat& f_self() const { return f_self_; }
  bool has(const std::string& name) const;
  const std::vector<std::string>& declared_names() const { return names_; }

  Rat declared_f(const std::string& name) const;
  Rat declared_node(const std::string& name, int i) const;
  Rat declared_pair(const std::string& a, const std::string& b) const;

  // K of the resolved surface; defaults to F.
  void set_canonical(const LatticeClass& k);
  const LatticeClass& canonical() const { return canonical_; }

 private:
  struct Row {
    Rat f;
    std::map<int, Rat> nodes;
    std::map<std::string, Rat> declared;  // keys declared no later
  };
  const Row& row(const std::string& name) const;

  int node_count_;
  Rat f_self_;
  std::vector<std::string> names_;
  std::map<std::string, Row> rows_;
  LatticeClass canonical_;
};

// Bilinear extension of the pairing. Referencing a name without a row
// is a configuration error.
Rat intersect(const PairingTable& t, const LatticeClass& a,
              const LatticeClass& b);

// Pullback of a degree-d plane curve to the resolution: d*F plus the
// prescribed multiples of the exceptional curves over its double
// points.
LatticeClass total_transform(int degree, const std::map<int, int>& mults);

// Directions in which two representations of one divisor class pair
// differently: checks F, every A_i, every declared class, and the three
// self-pairings a*a, b*b, a*b. Empty result means the representations
// are indistinguishable by the pairing.
std::vector<std::string> pairing_mismatches(const PairingTable& t,
                                            const LatticeClass& a,
                                            const LatticeClass& b);

// Claim that the nodes in `subset` have even sum, witnessed by the
// divisor-level decomposition of the pullback of a named double curve:
//   pullback = 2*carrier + sum_i exceptional[i]*A_i
// together with a half of its class,
//   pullback == 2*half_expected   (linear equivalence).
// carrier and half_expected must be integral; carrier has no
// exceptional part (the multiplicities carry all of it).
struct EvenSetCertificate {
  std::string name;
  std::vector<int> subset;             // 1-based node indices
  LatticeClass carrier;
  std::map<int, int> exceptional;      // m_i >= 0
  LatticeClass half_expected;
};

struct CertificateCheck {
  bool valid = false;
  std::vector<std::string> reasons;    // empty when valid
  LatticeClass witness;                // E with pullback = 2E + sum A_subset
  LatticeClass half_set;               // L with 2L = sum A_subset
  Rat l_self, l_k;                     // L*L and L*K
};

// Verifies the parity pattern (m_i odd exactly on the subset), the
// integrality of carrier and half_expected, the pairing agreement of
// the decomposition with 2*half_expected in every direction, and the
// arithmetic of the resulting half-class (L*L = -|subset|/2 integral,
// L*L + L*K even). A failed check reports reasons; it never claims the
// subset is not even, only that this certificate does not establish it.
CertificateCheck even_set_check(const PairingTable& t,
                                const EvenSetCertificate& cert);

// Certificate for the disjoint union of two certified subsets; the
// decompositions add.
EvenSetCertificate combine_certificates(const EvenSetCertificate& a,
                                        const EvenSetCertificate& b);

// (L*L, L*K) for L = half the sum of the subset's exceptional curves,
// straight from the table.
std::pair<Rat, Rat> half_class(const PairingTable& t,
                               const std::vector<int>& subset);

}  // namespace planecover
