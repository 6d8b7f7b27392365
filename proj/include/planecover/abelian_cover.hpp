#pragma once

#include <map>
#include <string>
#include <vector>

#include "planecover/plane_config.hpp"
#include "planecover/z2r_group.hpp"

namespace planecover {

// One branch divisor of the covering data: the group element it is
// labeled with and its reduced components in the plane.
struct BranchDivisor {
  GroupElement sigma;
  std::vector<PlaneCurve> components;

  int degree() const;
  HomPoly3 form() const;  // product of the component forms
};

// Building data of a (Z/2)^r cover of the plane: an indexed list of
// labeled branch divisors (the index order is the d_1..d_n order used
// for radical naming and reports).
struct BuildingData {
  int r = 0;
  std::vector<BranchDivisor> divisors;

  int total_branch_degree() const;  // sum of deg D_sigma
};

struct ValidationResult {
  std::vector<std::string> violations;  // empty means valid
  bool irreducible = false;             // labels generate the full group
  bool ok() const { return violations.empty(); }
};

// Checks labels (nontrivial, distinct), reducedness (components pairwise
// without common loci, across all divisors), and the parity of every
// character's branch degree sum; reports whether the cover is connected.
ValidationResult validate_building_data(const BuildingData& bd);

// L_chi = half the sum of deg D_sigma over chi(sigma) = -1, for every
// nontrivial character.
std::map<Character, int> branch_character_classes(const BuildingData& bd);

// Invariants of the smooth model of the cover, by character-sheaf
// arithmetic on the plane (valid when every branch singularity is
// negligible, which the arrangement classifier enforces upstream).
int chi_structure_sheaf(const BuildingData& bd);
int geometric_genus(const BuildingData& bd);
int K_squared(const BuildingData& bd);
int irregularity(const BuildingData& bd);  // 1 - chi + p_g, asserted >= 0

// Character order used for section bases and radical naming: trivial
// first, then nontrivial characters sorted by the set S_chi of branch
// indices they negate (larger sets first, then lexicographic on the
// index tuple). The k-th nontrivial character in this order carries the
// radical name u_k.
std::vector<Character> section_character_order(const BuildingData& bd);
std::string radical_name(const BuildingData& bd, const Character& chi);

// One basis section of the m-canonical system: a plane monomial times
// the formal radical u_chi (u_Id = 1; u_chi squares to the product of
// the d_sigma with chi(sigma) = -1).
struct PluriSection {
  Character chi;
  HomPoly3 monomial;
  std::string radical;
};

// Basis of the m-canonical system: per character in section order, all
// monomials of degree m*(-3 + Delta) - L_chi (Delta = half the total
// branch degree), in the monomial order of HomPoly3.
std::vector<PluriSection> pluricanonical_basis(const BuildingData& bd, int m);

// Whether the pullback of the conic to the double plane u^2 = f splits
// into two components, i.e. f restricted to the conic is a square.
// The conic must carry a parametrization and not divide f.
bool pullback_split_check(const HomPoly3& f, const PlaneCurve& conic);

// Intersection numerics of one component A when the pullback of a curve
// of degree deg_c and genus genus_c splits as A + B on the double plane
// u^2 = f with deg f = 2*half_branch_deg, meeting the branch at k
// points: (A+B)^2 = 2*deg_c^2, A*B = k, A^2 = B^2, A*K by adjunction.
struct SplitNumerics {
  int pullback_self = 0;     // (A+B)^2
  int ab = 0;                // A*B
  Rat a_self, a_k;           // A^2 = B^2 and A*K
  int genus = 0;             // genus of each component
  Rat h0_lower_bound;        // 1 + A(A-K)/2 from Riemann-Roch
  int total_arith_genus = 0; // p_a of the whole pullback A+B
};
SplitNumerics split_component_numerics(int deg_c, int k, int half_branch_deg,
                                       int genus_c = 0);

// The double plane u_chi^2 = f attached to a nontrivial character:
// f = product of d_sigma over chi(sigma) = -1.
HomPoly3 intermediate_cover(const BuildingData& bd, const Character& chi);

}  // namespace planecover
