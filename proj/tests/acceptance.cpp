// Acceptance gate for the whole construction: twelve independent
// criteria, each printed as one pass or fail line. Everything is exact
// rational or tower arithmetic; there is no tolerance anywhere. The
// binary exits nonzero if any criterion fails.

#include <array>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "planecover/bicanonical_check.hpp"
#include "planecover/cli_report.hpp"
#include "planecover/error.hpp"

using namespace planecover;

namespace {

struct Failure {
  std::string reason;
};

void check(bool cond, const std::string& reason) {
  if (!cond) throw Failure{reason};
}

std::string fmt(const Rat& r) { return format_rational(r); }

BuildingData default_data() { return make_building_data(RunConfig::defaults()); }

const TowerReport& default_report() {
  static TowerReport rep = run_pipeline(default_data());
  return rep;
}

const LevelRecord& level(const TowerReport& rep, const std::string& name) {
  for (const auto& lv : rep.levels)
    if (lv.name == name) return lv;
  throw Failure{"missing level " + name};
}

// Shared transport context for the certificate criteria. The tower is
// built in place: elements keep stable pointers into it.
struct Geometry {
  BuildingData bd;
  Tower tower;
  std::vector<PlaneCurve> curves;
  std::vector<ArrangementPoint> arrangement;
  std::vector<NodeRecord> inventory;
  std::optional<TransportResult> transport;
};

Geometry& default_geometry() {
  static Geometry* g = [] {
    auto* geo = new Geometry();
    geo->bd = default_data();
    geo->curves = branch_components(geo->bd);
    geo->arrangement =
        classify_arrangement_singularities(geo->tower, geo->curves);
    geo->inventory = node_inventory(geo->bd, geo->arrangement);
    geo->transport.emplace(transport_components(
        geo->bd, geo->tower, geo->arrangement, geo->inventory));
    return geo;
  }();
  return *g;
}

// 1. The 8x8 sign table, row and column order: xyz, z, y, x, yz, xz,
// xy, Id (the order the construction is usually tabulated in). The
// library's canonical order is decreasing bit value, so the comparison
// goes through that index permutation.
void criterion_character_table() {
  CharacterTable tab = character_table(3);
  const std::array<std::uint32_t, 8> order = {7, 4, 2, 1, 6, 5, 3, 0};
  const int expected[8][8] = {
      {-1, -1, -1, -1, 1, 1, 1, 1},  // xyz
      {-1, -1, 1, 1, -1, -1, 1, 1},  // z
      {-1, 1, -1, 1, -1, 1, -1, 1},  // y
      {-1, 1, 1, -1, 1, -1, -1, 1},  // x
      {1, -1, -1, 1, 1, -1, -1, 1},  // yz
      {1, -1, 1, -1, -1, 1, -1, 1},  // xz
      {1, 1, -1, -1, -1, -1, 1, 1},  // xy
      {1, 1, 1, 1, 1, 1, 1, 1},      // Id
  };
  check(tab.rows.size() == 8 && tab.cols.size() == 8, "table is not 8x8");
  for (std::size_t i = 0; i < 8; ++i) {
    std::size_t row = 7 - order[i];
    std::size_t col = 7 - order[i];
    check(tab.rows[row].bits == order[i], "canonical row order broken");
    check(tab.cols[col].bits == order[i], "canonical column order broken");
  }
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      check(tab.signs[7 - order[i]][7 - order[j]] == expected[i][j],
            "sign mismatch at row " + element_name(tab.rows[7 - order[i]]) +
                ", column " + element_name(group_element(3, order[j])));
}

// 2. Singularities of the octic H1 + H2 + T1 + ... + T4.
void criterion_arrangement_count() {
  Geometry& g = default_geometry();
  int a3 = 0, a1 = 0;
  for (const auto& p : g.arrangement) {
    if (p.type == LocalType::A3)
      ++a3;
    else if (p.type == LocalType::A1)
      ++a1;
    else
      check(false, "unexpected local type at " + p.location.to_string());
  }
  check(a3 == 8, "expected 8 tacnodes, found " + std::to_string(a3));
  check(a1 == 10, "expected 10 nodes, found " + std::to_string(a1));
}

// 3. The splitting oracle: d3 d4 restricted to H1 along the
// parametrization (s^2 - t^2, 2st, s^2 + t^2) is the perfect square
// (2t(1 - t^2))^2, in homogeneous form (2st(s^2 - t^2))^2; both pencil
// conics restrict to perfect squares under their own parametrizations.
void criterion_splitting_oracle() {
  HomPoly3 d34 = HomPoly3::linear(Rat(1), Rat(0), Rat(-1)) *
                 HomPoly3::linear(Rat(1), Rat(0), Rat(1)) *
                 HomPoly3::linear(Rat(0), Rat(1), Rat(-1)) *
                 HomPoly3::linear(Rat(0), Rat(1), Rat(1));

  PlaneCurve h1 = PlaneCurve::conic(
      "H1", {Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(-1)});
  CurveParam classic;
  classic.degree = 2;
  classic.x = BinForm({Rat(1), Rat(0), Rat(-1)});
  classic.y = BinForm({Rat(0), Rat(2), Rat(0)});
  classic.z = BinForm({Rat(1), Rat(0), Rat(1)});
  h1.set_param(classic);

  auto [square, root] = restriction_is_square(d34, h1);
  check(square, "restriction to H1 is not a perfect square");
  BinForm target = classic.x * classic.y;  // 2st(s^2 - t^2)
  check(root == target || root == target.scaled(Rat(-1)),
        "square root is not 2st(s^2 - t^2) up to sign");

  BuildingData bd = default_data();
  for (std::size_t i = 0; i < 2; ++i) {
    const PlaneCurve& conic = bd.divisors[i].components[0];
    auto [sq, rt] = restriction_is_square(d34, conic);
    check(sq, "restriction to " + conic.label() + " is not a perfect square");
    check(rt.degree() == 4 && !rt.is_zero(),
          "square root on " + conic.label() + " has the wrong degree");
  }
}

// 4. Component numerics of the split pullback of H1 on the double
// plane branched over the four lines.
void criterion_split_numerics() {
  SplitNumerics n = split_component_numerics(2, 4, 2, 0);
  check(n.pullback_self == 8, "(A+B)^2 = " + std::to_string(n.pullback_self));
  check(n.ab == 4, "A*B = " + std::to_string(n.ab));
  check(n.a_self == 0, "A^2 = " + fmt(n.a_self));
  check(Rat(n.pullback_self) - Rat(2 * n.ab) - n.a_self == 0,
        "B^2 does not vanish");
  check(n.a_k == -2, "A*K = " + fmt(n.a_k));
  check(n.h0_lower_bound == 2, "h^0 bound = " + fmt(n.h0_lower_bound));
  check(n.total_arith_genus == 3,
        "p_a of the pullback = " + std::to_string(n.total_arith_genus));
}

// 5. Invariants of the full cover Y.
void criterion_y_invariants() {
  BuildingData bd = default_data();
  check(chi_structure_sheaf(bd) == 4, "chi(O_Y) != 4");
  check(geometric_genus(bd) == 3, "p_g(Y) != 3");
  check(irregularity(bd) == 0, "q(Y) != 0");
  check(K_squared(bd) == 8, "K_Y^2 != 8");
  const LevelRecord& y = level(default_report(), "Y");
  check(y.chi == 4 && y.p_g == 3 && y.q == 0 && y.k_squared == 8,
        "pipeline Y record disagrees");
}

// 6. The 24 nodes of Y, split into tacnodal and line-pair preimages.
void criterion_node_inventory() {
  Geometry& g = default_geometry();
  InventoryCounts counts = inventory_counts(g.inventory);
  check(counts.total_preimages == 24,
        "total nodes = " + std::to_string(counts.total_preimages));
  check(counts.tacnode_preimages == 16,
        "tacnodal nodes = " + std::to_string(counts.tacnode_preimages));
  check(counts.internal_node_preimages == 8,
        "line-pair nodes = " + std::to_string(counts.internal_node_preimages));
  check(counts.tacnode_points == 8 && counts.internal_node_points == 2,
        "plane point counts disagree");
}

// 7. Even-set certificates: the tacnodal sixteen, the line-pair eight,
// their union, and failure for a single node.
void criterion_even_sets() {
  Geometry& g = default_geometry();
  const auto& table = g.transport->table;

  CertificateCheck c16 = even_set_check(table, g.transport->tacnodal_certificate);
  check(c16.valid, "tacnodal certificate rejected");
  check(g.transport->tacnodal_certificate.subset.size() == 16,
        "tacnodal subset size");
  check(c16.l_self == -8 && c16.l_k == 0, "tacnodal half-class pairing");

  CertificateCheck c8 = even_set_check(table, g.transport->internal_certificate);
  check(c8.valid, "line-pair certificate rejected");
  check(g.transport->internal_certificate.subset.size() == 8,
        "line-pair subset size");
  check(c8.l_self == -4 && c8.l_k == 0, "line-pair half-class pairing");

  EvenSetCertificate both = combine_certificates(
      g.transport->tacnodal_certificate, g.transport->internal_certificate);
  CertificateCheck c24 = even_set_check(table, both);
  check(c24.valid, "combined certificate rejected");
  check(both.subset.size() == 24, "combined subset size");
  check(c24.l_self == -12 && c24.l_k == 0, "combined half-class pairing");

  EvenSetCertificate bad = g.transport->tacnodal_certificate;
  bad.name = "single node";
  bad.subset = {1};
  bad.exceptional = {{1, 1}};
  CertificateCheck c1 = even_set_check(table, bad);
  check(!c1.valid, "a single node must not form an even set");
}

// 8. The bicanonical space: six quadric sections, six radicals, and
// dimension chi + K^2 = 12.
void criterion_bicanonical_basis() {
  BuildingData bd = default_data();
  auto basis = pluricanonical_basis(bd, 2);
  check(basis.size() == 12, "dim = " + std::to_string(basis.size()));
  check(basis.size() ==
            static_cast<std::size_t>(chi_structure_sheaf(bd) + K_squared(bd)),
        "dimension does not equal chi + K^2");
  int quadrics = 0;
  std::multiset<std::string> radicals;
  for (const auto& sec : basis) {
    if (sec.chi.is_trivial())
      ++quadrics;
    else
      radicals.insert(sec.radical);
  }
  check(quadrics == 6, "trivial-character block has rank " +
                           std::to_string(quadrics) + " sections");
  std::multiset<std::string> wanted = {"u2", "u3", "u4", "u5", "u6", "u7"};
  check(radicals == wanted, "radical sections are not u2..u7");
}

// 9. The evaluation kernel: dimension one, spanned by u7, with the
// branch-line quartic squarefree.
void criterion_kernel() {
  Geometry& g = default_geometry();
  BicanonicalCertificate cert =
      unique_bicanonical_through_nodes(g.bd, g.tower, g.inventory);
  check(cert.kernel_dimension == 1,
        "kernel dimension = " + std::to_string(cert.kernel_dimension));
  check(cert.kernel_section == "u7", "kernel spanned by " + cert.kernel_section);
  check(cert.kernel_matches_radical, "kernel vector is not the radical");
  check(cert.curve_reduced, "branch-line quartic is not squarefree");
  check(cert.quadric_rank == 6, "quadric block rank");
  check(cert.h0_adjoint == 0, "adjoint system is nonempty");
}

// 10. Final invariants and the degree bound.
void criterion_final_invariants() {
  DoubleCoverInvariants s =
      node_double_cover_invariants(4, 8, 3, 24, Rat(-12), Rat(0), 0);
  check(s.chi == 2, "chi = " + std::to_string(s.chi));
  check(s.p_g == 3, "p_g = " + std::to_string(s.p_g));
  check(s.q == 2, "q = " + std::to_string(s.q));
  check(s.k_squared == 16, "K^2 = " + std::to_string(s.k_squared));
  auto degree = canonical_map_degree(s.p_g, s.k_squared);
  check(degree.has_value() && *degree == 16, "canonical degree is not 16");
  CanonicalDegreeBound bound = beauville_bound(s.q);
  check(bound.specialized && bound.bound == 18, "bound for q = 2 is not 18");
  check(*degree <= bound.bound, "degree exceeds the bound");
  const TowerReport& rep = default_report();
  check(rep.headline_p_g == 3 && rep.headline_q == 2 &&
            rep.headline_k_squared == 16 && rep.headline_degree == 16,
        "pipeline headline disagrees");
  check(rep.all_passed, "pipeline reports a failed check");
}

// 11. The whole chain is stable across the pencil: t = 3 reproduces
// criteria 5 through 10 identically.
void criterion_pencil_stability() {
  TowerReport alt = run_pipeline(make_building_data(parse_run_config("t = 3")));
  check(alt.all_passed, "t = 3 run failed a check");
  const TowerReport& ref = default_report();
  check(alt.levels.size() == ref.levels.size(), "level count differs");
  for (std::size_t i = 0; i < ref.levels.size(); ++i) {
    const LevelRecord &a = alt.levels[i], &r = ref.levels[i];
    check(a.name == r.name && a.chi == r.chi && a.p_g == r.p_g && a.q == r.q &&
              a.k_squared == r.k_squared && a.nodes == r.nodes &&
              a.minus_two_curves == r.minus_two_curves &&
              a.minus_one_curves == r.minus_one_curves &&
              a.canonical_degree == r.canonical_degree,
          "level " + r.name + " differs at t = 3");
  }
  check(alt.certificates.size() == ref.certificates.size(),
        "certificate count differs");
  for (std::size_t i = 0; i < ref.certificates.size(); ++i) {
    const CertificateRecord &a = alt.certificates[i], &r = ref.certificates[i];
    check(a.name == r.name && a.subset_size == r.subset_size &&
              a.l_self == r.l_self && a.l_k == r.l_k,
          "certificate " + r.name + " differs at t = 3");
  }
  check(alt.counts.total_preimages == ref.counts.total_preimages &&
            alt.counts.tacnode_preimages == ref.counts.tacnode_preimages &&
            alt.counts.internal_node_preimages ==
                ref.counts.internal_node_preimages,
        "node counts differ at t = 3");
  check(alt.headline_p_g == ref.headline_p_g && alt.headline_q == ref.headline_q &&
            alt.headline_k_squared == ref.headline_k_squared &&
            alt.headline_degree == ref.headline_degree,
        "headline differs at t = 3");
}

// 12. Property suites: Bezout audit over every curve pair, Noether's
// identity at every level, exact kernel annihilation, and kernel
// dimension independent of the square-root sign conventions.
void criterion_property_suites() {
  Geometry& g = default_geometry();

  for (std::size_t i = 0; i < g.curves.size(); ++i)
    for (std::size_t j = i + 1; j < g.curves.size(); ++j) {
      Tower local;
      auto pts = classify_arrangement_singularities(
          local, {g.curves[i], g.curves[j]});
      int total = 0;
      for (const auto& p : pts)
        for (const auto& [a, b, mult] : p.pair_multiplicities) total += mult;
      int expected = g.curves[i].degree() * g.curves[j].degree();
      check(total == expected, g.curves[i].label() + " meets " +
                                   g.curves[j].label() + " with total " +
                                   std::to_string(total) + ", expected " +
                                   std::to_string(expected));
    }

  for (const auto& lv : default_report().levels)
    check(lv.chi == 1 - lv.q + lv.p_g, "Noether fails at level " + lv.name);

  auto basis = pluricanonical_basis(g.bd, 2);
  auto points = node_sheet_points(g.bd, g.tower, g.inventory);
  ExactMatrix m = evaluation_matrix(basis, points);
  auto kernel = m.kernel();
  check(kernel.size() == 1, "kernel dimension is not one");
  FieldElement zero{Rat(0)};
  for (int i = 0; i < m.rows(); ++i) {
    FieldElement sum{Rat(0)};
    for (int j = 0; j < m.cols(); ++j) sum = sum + m.at(i, j) * kernel[0][j];
    check(sum == zero, "kernel vector fails row " + std::to_string(i + 1));
  }

  // Translating the sheet labels by any group element rescales each
  // character column by a sign; the kernel dimension and its support
  // must not notice.
  int u7_col = -1;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (basis[j].radical == "u7") u7_col = static_cast<int>(j);
  check(u7_col >= 0, "basis lacks the u7 column");
  for (const GroupElement& tr : all_elements(3)) {
    ExactMatrix scaled(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) {
        int sign = basis[j].chi.is_trivial()
                       ? 1
                       : char_eval(basis[j].chi, tr);
        scaled.at(i, j) = sign > 0 ? m.at(i, j) : m.at(i, j) * FieldElement(Rat(-1));
      }
    auto k2 = scaled.kernel();
    check(k2.size() == 1, "kernel dimension moved under sheet translation " +
                              element_name(tr));
    for (int j = 0; j < m.cols(); ++j) {
      bool expect_zero = j != u7_col;
      check((k2[0][j] == zero) == expect_zero,
            "kernel support moved under sheet translation " + element_name(tr));
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<void()> body;
  };
  const std::vector<Criterion> criteria = {
      {"character table in the tabulated element order",
       criterion_character_table},
      {"octic arrangement has 8 tacnodes and 10 nodes",
       criterion_arrangement_count},
      {"tangent-line quartic restricts to the square (2t(1-t^2))^2",
       criterion_splitting_oracle},
      {"split pullback numerics A^2 = B^2 = 0, AK = -2, h^0 >= 2, p_a = 3",
       criterion_split_numerics},
      {"cover invariants chi = 4, p_g = 3, q = 0, K^2 = 8",
       criterion_y_invariants},
      {"node inventory 24 = 16 tacnodal + 8 line-pair",
       criterion_node_inventory},
      {"even-set certificates for 16, 8, 24 nodes; single node fails",
       criterion_even_sets},
      {"bicanonical space has 6 quadrics + u2..u7, dimension 12",
       criterion_bicanonical_basis},
      {"evaluation kernel is one-dimensional, spanned by u7",
       criterion_kernel},
      {"final invariants chi = 2, p_g = 3, q = 2, K^2 = 16, degree 16 <= 18",
       criterion_final_invariants},
      {"pencil member t = 3 reproduces every downstream invariant",
       criterion_pencil_stability},
      {"property suites: Bezout, Noether, kernel, sign conventions",
       criterion_property_suites},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string verdict = "pass";
    std::string reason;
    try {
      criteria[i].body();
    } catch (const Failure& f) {
      verdict = "FAIL";
      reason = f.reason;
      ++failed;
    } catch (const Error& e) {
      verdict = "FAIL";
      reason = e.what();
      ++failed;
    }
    std::printf("criterion %2zu: %s  %s\n", i + 1, verdict.c_str(),
                criteria[i].title);
    if (!reason.empty()) std::printf("            %s\n", reason.c_str());
  }
  if (failed == 0)
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  else
    std::printf("acceptance: %d of %zu criteria FAILED\n", failed,
                criteria.size());
  return failed == 0 ? 0 : 1;
}
