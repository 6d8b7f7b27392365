#pragma once

#include <vector>

#include "planecover/abelian_cover.hpp"
#include "planecover/plane_config.hpp"

namespace planecover {

// How the branch locus meets itself at a singular point of the
// arrangement.
enum class BranchPointKind {
  Tacnode,       // contact 2 between components of two different divisors
  InternalNode,  // transverse node between components of one divisor
  Transverse,    // transverse crossing of two different divisors
};

enum class UpstairsType { Smooth, A1 };

// Components of all branch divisors, concatenated in divisor order, and
// the divisor label carried by each entry. The arrangement classifier
// is run on exactly this list so component indices line up.
std::vector<PlaneCurve> branch_components(const BuildingData& bd);
std::vector<GroupElement> component_labels(const BuildingData& bd);

// Subgroup generated by the labels of the branch divisors through p.
// Errors if three or more components pass through p.
std::vector<GroupElement> inertia(const BuildingData& bd, const ProjPoint& p);

// Number of preimages of p in the cover: 2^r / |inertia|.
int preimage_count(const BuildingData& bd, const ProjPoint& p);

// Type of the cover above a classified singular point of the branch
// arrangement, given the per-component labels. Transverse crossings of
// two divisors are smooth upstairs; tacnodes between two divisors and
// nodes inside one divisor are ordinary double points; a tacnode inside
// a single divisor is out of scope.
UpstairsType upstairs_type(const ArrangementPoint& p,
                           const std::vector<GroupElement>& labels);

// One singular point of the branch arrangement that produces ordinary
// double points of the cover, with its full group-theoretic data.
// sheets is a transversal of the inertia cosets (smallest label per
// coset, ascending), one entry per preimage.
struct NodeRecord {
  ProjPoint point;
  BranchPointKind kind = BranchPointKind::Tacnode;
  std::vector<std::string> components;  // incident component labels
  std::vector<GroupElement> labels;     // distinct incident divisor labels
  std::vector<GroupElement> inertia;    // subgroup, ascending
  int preimages = 0;
  std::vector<GroupElement> sheets;
  UpstairsType upstairs = UpstairsType::A1;
};

// All singular points of the cover, as one record per plane point:
// tacnodes first, then internal nodes, each block ascending in the
// primitive coordinates of the point. Transverse crossings are smooth
// upstairs and do not appear. The arrangement must have been classified
// on branch_components(bd).
std::vector<NodeRecord> node_inventory(
    const BuildingData& bd, const std::vector<ArrangementPoint>& arrangement);
// Convenience form that classifies the arrangement itself.
std::vector<NodeRecord> node_inventory(Tower& tw, const BuildingData& bd);

// One ordinary double point of the cover: record r, sheet s of the
// flattened inventory, carrying the 1-based index used to name the
// exceptional curve of its resolution.
struct CoverNode {
  int index = 0;
  int record = 0;  // position in the inventory
  GroupElement sheet;
};

// Nodes of the cover in inventory order, sheets ascending within a
// record, numbered from 1.
std::vector<CoverNode> flatten_inventory(const std::vector<NodeRecord>& inv);

struct InventoryCounts {
  int tacnode_points = 0;
  int internal_node_points = 0;
  int tacnode_preimages = 0;
  int internal_node_preimages = 0;
  int total_preimages = 0;
};
InventoryCounts inventory_counts(const std::vector<NodeRecord>& inv);

}  // namespace planecover
