#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planecover/resolution_lattice.hpp"
#include "planecover/sing_transport.hpp"

namespace planecover {

// Splitting of the reduced preimage of one branch curve. Among the
// nontrivial characters trivial on the curve's label, exactly one must
// restrict to a square radicand; it cuts the preimage into two
// components <label>+ and <label>-, each a double cover of the curve
// branched where the residual radicand class has odd vanishing.
struct ComponentSplit {
  std::string curve;      // plane curve label
  int divisor = 0;        // index into bd.divisors
  GroupElement sigma;     // label of the divisor the curve belongs to
  Character split_chi;    // the unique square-restriction character
  int split_level = 0;    // L_chi of that character
  BinForm split_root;     // canonical g: the section restricts to +-g
  BinForm residual;       // squarefree odd part of the non-square class
  int branch_points = 0;  // simple roots of residual
  int genus = 0;          // genus of each preimage component

  std::string plus_name() const { return curve + "+"; }
  std::string minus_name() const { return curve + "-"; }
};

// Splitting data for every branch component, in flattened divisor
// order. Errors unless each curve has exactly one splitting character
// and all its non-square restrictions fall in one square class, so the
// preimage has exactly two components.
std::vector<ComponentSplit> component_splittings(const BuildingData& bd);

// Sign matching of two split preimages over the smooth crossings of
// their base curves: <a>+ meets <b>+ there when sign is +1, <b>- when
// it is -1 (and <a>- the other one). The matching must be the same at
// every shared crossing; crossings counts them.
struct PairMatch {
  std::string a, b;
  int sign = 0;
  int crossings = 0;
};

// The intersection lattice of the resolved cover, carried by the split
// components: node incidences are read off the sheet structure over
// each double point, smooth-crossing matchings give the cross pairings,
// and self-intersections come from genus and adjunction. The pullback
// of every branch curve is audited against deg * F in all pairing
// directions before the table is returned.
struct TransportResult {
  std::vector<ComponentSplit> splits;
  PairingTable table;
  std::map<std::string, std::vector<int>> component_nodes;
  std::vector<PairMatch> matches;
  // Pullback decomposition of the degree-2 pair through the tacnodal
  // nodes, and of one line through each internal point.
  EvenSetCertificate tacnodal_certificate;
  EvenSetCertificate internal_certificate;
  // Degree-2 component disjoint from the first one's "+" side.
  std::string conic_partner;
};

TransportResult transport_components(
    const BuildingData& bd, Tower& tower,
    const std::vector<ArrangementPoint>& arrangement,
    const std::vector<NodeRecord>& inventory);

// Invariants of the double cover of a smooth surface branched over n
// disjoint nodal (-2)-curves with certified half-class L (2L = their
// sum): chi' = 2*chi + (L*K + L^2)/2; contracting the n (-1)-curves
// the cover acquires gives K^2 = 2*(K^2 + 2*L*K + L^2) + n. The
// adjoint dimension h0_adjoint = h^0(K + L) feeds p_g' = p_g + h^0,
// and q' closes Noether's formula.
struct DoubleCoverInvariants {
  int chi = 0;
  int k_squared = 0;  // after the contraction
  int p_g = 0;
  int q = 0;
};
DoubleCoverInvariants node_double_cover_invariants(int chi, int k_squared,
                                                   int p_g, int n,
                                                   const Rat& l_self,
                                                   const Rat& l_k,
                                                   int h0_adjoint);

// Degree of the canonical image when |K| is the pullback of the net of
// plane lines: three sections without base points onto a degree-1
// image, so the degree is K^2 of the minimal model. Empty unless
// p_g = 3.
std::optional<int> canonical_map_degree(int p_g, int k_squared_minimal);

// Upper bound for the degree of the canonical map of a surface of
// general type (Beauville): 36 in general, 18 when q = 2. specialized
// marks the two stated cases q = 0 and q = 2.
struct CanonicalDegreeBound {
  int bound = 0;
  bool specialized = false;
};
CanonicalDegreeBound beauville_bound(int q);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// One floor of the tower: numerical invariants of the model named by
// `name`, with the count of its double points and of the contractible
// curves its resolution or double cover carries.
struct LevelRecord {
  std::string name;
  int chi = 0, p_g = 0, q = 0, k_squared = 0;
  int nodes = 0;             // ordinary double points of this model
  int minus_two_curves = 0;  // disjoint nodal curves on it
  int minus_one_curves = 0;  // exceptional curves awaiting contraction
  std::optional<int> canonical_degree;
  std::string note;
};

struct CertificateRecord {
  std::string name;
  int subset_size = 0;
  Rat l_self, l_k;
};

struct TowerReport {
  std::vector<CheckResult> checks;
  std::vector<LevelRecord> levels;
  std::vector<CertificateRecord> certificates;
  std::vector<PairMatch> matches;
  std::string conic_partner;
  InventoryCounts counts{};
  int headline_p_g = 0, headline_q = 0, headline_k_squared = 0,
      headline_degree = 0;
  bool all_passed = false;
  std::vector<std::string> assumptions;  // recorded, not verified
  std::vector<std::string> notes;
  long adjoin_calls = 0;   // tower work performed by the run
  long eliminations = 0;   // matrix row operations performed by the run

  bool ok(const std::string& check) const;
};

// Runs the whole verification over exact arithmetic. Every stage
// appends one check; the first failure stops the run with the throwing
// stage's diagnostic as its detail. Check names, in order:
// config_build, arrangement, building_data, cover_splitting,
// step1_numerics, y_invariants, node_inventory, transport,
// even_set_16, even_set_8, bicanonical_kernel, sprime_invariants,
// canonical_degree, beauville.
TowerReport run_pipeline(const BuildingData& bd);

}  // namespace planecover
