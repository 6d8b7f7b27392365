#include "planecover/abelian_cover.hpp"

#include <algorithm>

#include "planecover/error.hpp"

namespace planecover {
namespace {

// h0 of O(n) on the plane.
int h0_plane(int n) { return n < 0 ? 0 : (n + 1) * (n + 2) / 2; }

// Indices of the branch divisors a character negates.
std::vector<int> negated_indices(const BuildingData& bd, const Character& chi) {
  std::vector<int> out;
  for (std::size_t i = 0; i < bd.divisors.size(); ++i)
    if (char_eval(chi, bd.divisors[i].sigma) == -1)
      out.push_back(static_cast<int>(i));
  return out;
}

int branch_class(const BuildingData& bd, const Character& chi) {
  int sum = 0;
  for (const auto& d : bd.divisors)
    if (char_eval(chi, d.sigma) == -1) sum += d.degree();
  require(sum % 2 == 0, ErrorKind::Config,
          "odd branch degree for " + character_name(chi));
  return sum / 2;
}

}  // namespace

int BranchDivisor::degree() const {
  int d = 0;
  for (const auto& c : components) d += c.degree();
  return d;
}

HomPoly3 BranchDivisor::form() const {
  require(!components.empty(), ErrorKind::Internal,
          "form of an empty branch divisor");
  HomPoly3 f = components.front().form();
  for (std::size_t i = 1; i < components.size(); ++i)
    f = f * components[i].form();
  return f;
}

int BuildingData::total_branch_degree() const {
  int d = 0;
  for (const auto& div : divisors) d += div.degree();
  return d;
}

ValidationResult validate_building_data(const BuildingData& bd) {
  ValidationResult res;
  auto flag = [&res](const std::string& msg) { res.violations.push_back(msg); };
  if (bd.r < 1 || bd.r > 8) flag("group rank out of range");
  for (const auto& d : bd.divisors) {
    if (d.sigma.r != bd.r) flag("label rank mismatch");
    if (d.sigma.is_identity())
      flag("branch divisor labeled with the identity");
  }
  for (std::size_t i = 0; i < bd.divisors.size(); ++i)
    for (std::size_t j = i + 1; j < bd.divisors.size(); ++j)
      if (bd.divisors[i].sigma == bd.divisors[j].sigma)
        flag("duplicate label " + element_name(bd.divisors[i].sigma));
  // Reducedness: all components across all divisors pairwise share no
  // locus.
  std::vector<std::pair<std::string, const PlaneCurve*>> comps;
  for (const auto& d : bd.divisors)
    for (const auto& c : d.components)
      comps.emplace_back(element_name(d.sigma), &c);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      if (comps[i].second->form().proportional(comps[j].second->form()))
        flag("common component '" + comps[i].second->label() + "' between D_" +
             comps[i].first + " and D_" + comps[j].first);
  // Parity of every character class.
  if (res.violations.empty()) {
    for (const auto& chi : all_characters(bd.r)) {
      if (chi.is_trivial()) continue;
      int sum = 0;
      for (const auto& d : bd.divisors)
        if (char_eval(chi, d.sigma) == -1) sum += d.degree();
      if (sum % 2 != 0)
        flag("odd branch degree for " + character_name(chi));
    }
  }
  std::vector<GroupElement> labels;
  for (const auto& d : bd.divisors)
    if (d.degree() > 0) labels.push_back(d.sigma);
  if (res.violations.empty())
    res.irreducible =
        subgroup_generated(bd.r, labels).size() == (1u << bd.r);
  return res;
}

std::map<Character, int> branch_character_classes(const BuildingData& bd) {
  std::map<Character, int> out;
  for (const auto& chi : all_characters(bd.r)) {
    if (chi.is_trivial()) continue;
    out[chi] = branch_class(bd, chi);
  }
  return out;
}

int chi_structure_sheaf(const BuildingData& bd) {
  int acc = 1 << bd.r;
  int twice = 0;
  for (const auto& [chi, l] : branch_character_classes(bd))
    twice += l * (l - 3);
  require(twice % 2 == 0, ErrorKind::Internal, "odd chi correction sum");
  return acc + twice / 2;
}

int geometric_genus(const BuildingData& bd) {
  int pg = 0;
  for (const auto& [chi, l] : branch_character_classes(bd))
    pg += h0_plane(l - 3);
  return pg;  // the trivial character contributes h0 of K_plane = 0
}

int K_squared(const BuildingData& bd) {
  int total = bd.total_branch_degree();
  require(total % 2 == 0, ErrorKind::Config, "odd total branch degree");
  int delta = total / 2;
  return (1 << bd.r) * (delta - 3) * (delta - 3);
}

int irregularity(const BuildingData& bd) {
  int q = 1 - chi_structure_sheaf(bd) + geometric_genus(bd);
  require(q >= 0, ErrorKind::Internal,
          "negative irregularity: inconsistent building data");
  return q;
}

std::vector<Character> section_character_order(const BuildingData& bd) {
  std::vector<Character> nontrivial;
  for (const auto& chi : all_characters(bd.r))
    if (!chi.is_trivial()) nontrivial.push_back(chi);
  std::stable_sort(nontrivial.begin(), nontrivial.end(),
                   [&bd](const Character& a, const Character& b) {
                     auto sa = negated_indices(bd, a);
                     auto sb = negated_indices(bd, b);
                     if (sa.size() != sb.size()) return sa.size() > sb.size();
                     return sa < sb;
                   });
  std::vector<Character> order = {character(bd.r, 0)};
  order.insert(order.end(), nontrivial.begin(), nontrivial.end());
  return order;
}

std::string radical_name(const BuildingData& bd, const Character& chi) {
  if (chi.is_trivial()) return "1";
  auto order = section_character_order(bd);
  for (std::size_t k = 1; k < order.size(); ++k)
    if (order[k] == chi) return "u" + std::to_string(k);
  fail(ErrorKind::Internal, "character outside the section order");
}

std::vector<PluriSection> pluricanonical_basis(const BuildingData& bd, int m) {
  require(m >= 1, ErrorKind::Config, "pluricanonical level must be positive");
  int total = bd.total_branch_degree();
  require(total % 2 == 0, ErrorKind::Config, "odd total branch degree");
  int delta = total / 2;
  auto classes = branch_character_classes(bd);
  std::vector<PluriSection> out;
  for (const auto& chi : section_character_order(bd)) {
    int l = chi.is_trivial() ? 0 : classes.at(chi);
    int n = m * (delta - 3) - l;
    if (n < 0) continue;
    std::string rad = radical_name(bd, chi);
    // All monomials of degree n in the canonical order.
    for (int i = n; i >= 0; --i)
      for (int j = n - i; j >= 0; --j) {
        HomPoly3 mono(n);
        mono.coeff(i, j) = Rat(1);
        out.push_back({chi, mono, rad});
      }
  }
  return out;
}

bool pullback_split_check(const HomPoly3& f, const PlaneCurve& conic) {
  return restriction_is_square(f, conic).first;
}

SplitNumerics split_component_numerics(int deg_c, int k, int half_branch_deg,
                                       int genus_c) {
  SplitNumerics out;
  out.pullback_self = 2 * deg_c * deg_c;
  out.ab = k;
  out.a_self = Rat(out.pullback_self - 2 * k, 2);
  out.genus = genus_c;
  // Adjunction on the cover: 2g - 2 = A(A + K).
  out.a_k = Rat(2 * genus_c - 2) - out.a_self;
  out.h0_lower_bound = Rat(1) + (out.a_self - out.a_k) / Rat(2);
  // p_a of the whole pullback, with K = (half_branch_deg - 3) times the
  // pulled-back line class.
  out.total_arith_genus =
      1 + (2 * deg_c * deg_c + 2 * deg_c * (half_branch_deg - 3)) / 2;
  return out;
}

HomPoly3 intermediate_cover(const BuildingData& bd, const Character& chi) {
  require(!chi.is_trivial(), ErrorKind::Config,
          "the trivial character has no double plane");
  HomPoly3 f(0);
  f.coeff(0, 0) = Rat(1);
  bool any = false;
  for (const auto& d : bd.divisors)
    if (char_eval(chi, d.sigma) == -1) {
      f = f * d.form();
      any = true;
    }
  require(any, ErrorKind::Config,
          "character negates no branch divisor: the datum is trivial");
  return f;
}

}  // namespace planecover
