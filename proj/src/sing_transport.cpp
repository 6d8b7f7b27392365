#include "planecover/sing_transport.hpp"

#include <algorithm>
#include <set>

#include "planecover/error.hpp"

namespace planecover {

std::vector<PlaneCurve> branch_components(const BuildingData& bd) {
  std::vector<PlaneCurve> out;
  for (const auto& d : bd.divisors)
    for (const auto& c : d.components) out.push_back(c);
  return out;
}

std::vector<GroupElement> component_labels(const BuildingData& bd) {
  std::vector<GroupElement> out;
  for (const auto& d : bd.divisors)
    for (std::size_t i = 0; i < d.components.size(); ++i)
      out.push_back(d.sigma);
  return out;
}

std::vector<GroupElement> inertia(const BuildingData& bd, const ProjPoint& p) {
  std::vector<GroupElement> incident;
  int branches = 0;
  for (const auto& d : bd.divisors) {
    for (const auto& c : d.components) {
      if (!c.contains(p)) continue;
      ++branches;
      incident.push_back(d.sigma);
    }
  }
  if (branches > 2)
    fail(ErrorKind::UnsupportedSingularity,
         "point lies on " + std::to_string(branches) +
             " branch components; at most two are supported");
  return subgroup_generated(bd.r, incident);
}

int preimage_count(const BuildingData& bd, const ProjPoint& p) {
  auto sub = inertia(bd, p);
  return (1 << bd.r) / static_cast<int>(sub.size());
}

UpstairsType upstairs_type(const ArrangementPoint& p,
                           const std::vector<GroupElement>& labels) {
  require(p.components.size() == 2, ErrorKind::UnsupportedSingularity,
          "classified point must have exactly two components");
  const GroupElement a = labels.at(p.components[0]);
  const GroupElement b = labels.at(p.components[1]);
  if (p.type == LocalType::A1) return a == b ? UpstairsType::A1 : UpstairsType::Smooth;
  if (p.type == LocalType::A3) {
    if (a == b)
      fail(ErrorKind::UnsupportedSingularity,
           "tacnode inside a single branch divisor is out of scope");
    return UpstairsType::A1;
  }
  fail(ErrorKind::UnsupportedSingularity, "unclassified local type");
}

namespace {

BranchPointKind kind_of(const ArrangementPoint& p,
                        const std::vector<GroupElement>& labels) {
  const bool same = labels.at(p.components[0]) == labels.at(p.components[1]);
  if (p.type == LocalType::A3) return BranchPointKind::Tacnode;
  return same ? BranchPointKind::InternalNode : BranchPointKind::Transverse;
}

}  // namespace

std::vector<NodeRecord> node_inventory(
    const BuildingData& bd, const std::vector<ArrangementPoint>& arrangement) {
  const auto curves = branch_components(bd);
  const auto labels = component_labels(bd);
  require(!labels.empty(), ErrorKind::Config, "empty building data");

  std::vector<NodeRecord> records;
  for (const auto& ap : arrangement) {
    if (upstairs_type(ap, labels) == UpstairsType::Smooth) continue;
    NodeRecord rec;
    rec.point = ap.location;
    rec.kind = kind_of(ap, labels);
    std::set<GroupElement> distinct;
    for (int ci : ap.components) {
      rec.components.push_back(curves.at(ci).label());
      distinct.insert(labels.at(ci));
    }
    rec.labels.assign(distinct.begin(), distinct.end());
    rec.inertia = subgroup_generated(bd.r, rec.labels);
    rec.preimages = (1 << bd.r) / static_cast<int>(rec.inertia.size());
    rec.sheets = coset_labels(bd.r, rec.inertia);
    require(static_cast<int>(rec.sheets.size()) == rec.preimages,
            ErrorKind::Internal, "coset transversal size mismatch");
    rec.upstairs = UpstairsType::A1;
    if (!rec.point.is_rational())
      fail(ErrorKind::UnsupportedField,
           "double-point ordering needs rational coordinates, got " +
               rec.point.to_string());
    records.push_back(std::move(rec));
  }

  auto key = [](const NodeRecord& r) { return r.point.primitive_coords(); };
  std::stable_sort(records.begin(), records.end(),
                   [&](const NodeRecord& a, const NodeRecord& b) {
                     const bool ta = a.kind == BranchPointKind::Tacnode;
                     const bool tb = b.kind == BranchPointKind::Tacnode;
                     if (ta != tb) return ta;
                     return key(a) < key(b);
                   });
  return records;
}

std::vector<NodeRecord> node_inventory(Tower& tw, const BuildingData& bd) {
  return node_inventory(bd,
                        classify_arrangement_singularities(tw, branch_components(bd)));
}

std::vector<CoverNode> flatten_inventory(const std::vector<NodeRecord>& inv) {
  std::vector<CoverNode> out;
  int next = 1;
  for (std::size_t r = 0; r < inv.size(); ++r)
    for (const auto& g : inv[r].sheets)
      out.push_back({next++, static_cast<int>(r), g});
  return out;
}

InventoryCounts inventory_counts(const std::vector<NodeRecord>& inv) {
  InventoryCounts c;
  for (const auto& rec : inv) {
    if (rec.kind == BranchPointKind::Tacnode) {
      ++c.tacnode_points;
      c.tacnode_preimages += rec.preimages;
    } else {
      ++c.internal_node_points;
      c.internal_node_preimages += rec.preimages;
    }
    c.total_preimages += rec.preimages;
  }
  return c;
}

}  // namespace planecover
