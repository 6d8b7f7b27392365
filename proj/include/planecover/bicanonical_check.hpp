#pragma once

#include <map>
#include <string>
#include <vector>

#include "planecover/abelian_cover.hpp"
#include "planecover/sing_transport.hpp"

namespace planecover {

// One node of the cover as an evaluation point: the plane point below,
// the coset representative selecting the sheet, and the exact value of
// every radical section u_chi there. eps records the sign convention:
// eps(chi) = 0 exactly when chi is nontrivial on the inertia subgroup
// (the radicand vanishes), otherwise chi(sheet) relative to the base
// values of the record, which are fixed deterministically (canonical
// tower square roots on a greedy character basis, extended so that
// u_a * u_b = f_ab(P) * u_ab holds on every sheet).
struct SheetPoint {
  int node_index = 0;  // 1-based, flattened inventory order
  ProjPoint location;
  GroupElement sheet;
  std::map<int, int> eps;               // character bits -> {-1, 0, +1}
  std::map<int, FieldElement> u_value;  // character bits -> value here
};

// One SheetPoint per cover node, records in inventory order, sheets
// ascending within a record. All plane points must be rational.
std::vector<SheetPoint> node_sheet_points(const BuildingData& bd, Tower& tower,
                                          const std::vector<NodeRecord>& inventory);

// Value of each basis section at each sheet point: the monomial at the
// plane point times the section's radical value on that sheet. Rows
// follow points, columns follow basis.
ExactMatrix evaluation_matrix(const std::vector<PluriSection>& basis,
                              const std::vector<SheetPoint>& points);

// Exact rendering of the matrix with row provenance, for the CLI dump:
// a header of column names, then one line per row.
std::vector<std::string> matrix_dump_lines(const std::vector<PluriSection>& basis,
                                           const std::vector<SheetPoint>& points,
                                           const ExactMatrix& m);

// Outcome of the uniqueness computation: the kernel of the 24x12
// node-evaluation matrix is one-dimensional and spanned by the radical
// section whose plane curve splits into the four branch lines, that
// curve is reduced, and therefore the adjoint system K + L of the
// node half-class L is empty. Each premise is machine-checked; any
// failure throws CheckFailed.
struct BicanonicalCertificate {
  std::size_t kernel_dimension = 0;
  std::size_t quadric_rank = 0;      // rank of the trivial-character block
  std::string kernel_section;        // radical name of the kernel span
  bool kernel_matches_radical = false;
  bool curve_reduced = false;
  int h0_adjoint = -1;               // 0 once all premises hold
  std::vector<std::string> premises;
};

BicanonicalCertificate unique_bicanonical_through_nodes(
    const BuildingData& bd, Tower& tower,
    const std::vector<NodeRecord>& inventory);

}  // namespace planecover
