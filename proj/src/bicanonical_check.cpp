#include "planecover/bicanonical_check.hpp"

#include <set>
#include <sstream>

#include "planecover/error.hpp"

namespace planecover {

namespace {

Character chr(int r, int bits) {
  return Character{r, static_cast<std::uint32_t>(bits)};
}

// Product of d_sigma(P) over the divisors where both characters are -1;
// the transition factor in u_a * u_b = f_ab(P) * u_ab.
Rat transition_factor(const BuildingData& bd, int a_bits, int b_bits,
                      const Rat& px, const Rat& py, const Rat& pz) {
  Character a = chr(bd.r, a_bits), b = chr(bd.r, b_bits);
  Rat f(1);
  for (const auto& d : bd.divisors)
    if (char_eval(a, d.sigma) == -1 && char_eval(b, d.sigma) == -1)
      f *= d.form().eval(px, py, pz);
  return f;
}

}  // namespace

std::vector<SheetPoint> node_sheet_points(const BuildingData& bd, Tower& tower,
                                          const std::vector<NodeRecord>& inventory) {
  const int n = 1 << bd.r;
  std::vector<SheetPoint> out;
  int index = 0;
  for (const auto& rec : inventory) {
    require(rec.point.is_rational(), ErrorKind::UnsupportedField,
            "sheet points need rational plane coordinates");
    auto pc = rec.point.primitive_coords();
    Rat px(pc[0]), py(pc[1]), pz(pc[2]);

    // Radicand value of every nontrivial character at the plane point.
    std::vector<Rat> radicand(n, Rat(1));
    std::vector<bool> vanishes(n, false);
    for (int cb = 1; cb < n; ++cb) {
      Character chi = chr(bd.r, cb);
      for (const auto& d : bd.divisors)
        if (char_eval(chi, d.sigma) == -1) {
          Rat v = d.form().eval(px, py, pz);
          if (v == 0) vanishes[cb] = true;
          radicand[cb] *= v;
        }
    }

    // The radicand vanishes exactly on the characters nontrivial on the
    // inertia subgroup; anything else means the record is inconsistent.
    std::set<int> orthogonal;
    for (const auto& chi : characters_trivial_on(bd.r, rec.inertia))
      orthogonal.insert(chi.bits);
    for (int cb = 1; cb < n; ++cb)
      require(vanishes[cb] == (orthogonal.count(cb) == 0), ErrorKind::Internal,
              "radicand vanishing pattern disagrees with the inertia subgroup");

    // Base values on the distinguished sheet: canonical square roots on
    // a greedy basis of the orthogonal characters, composites forced by
    // the transition factors so all product relations hold exactly.
    std::map<int, FieldElement> base;
    base[0] = tower.rational(Rat(1));
    for (int cb = 1; cb < n; ++cb) {
      if (orthogonal.count(cb) == 0 || base.count(cb)) continue;
      FieldElement root = sqrt_element(tower, tower.rational(radicand[cb]));
      std::map<int, FieldElement> extension;
      for (const auto& [s, val] : base) {
        Rat f = transition_factor(bd, s, cb, px, py, pz);
        require(f != 0, ErrorKind::Internal, "vanishing transition factor");
        extension[s ^ cb] = val * root * tower.rational(Rat(1) / f);
      }
      base.insert(extension.begin(), extension.end());
    }

    for (const auto& g : rec.sheets) {
      SheetPoint sp;
      sp.node_index = ++index;
      sp.location = rec.point;
      sp.sheet = g;
      for (int cb = 1; cb < n; ++cb) {
        if (orthogonal.count(cb) == 0) {
          sp.eps[cb] = 0;
          sp.u_value[cb] = FieldElement();
          continue;
        }
        int e = char_eval(chr(bd.r, cb), g);
        sp.eps[cb] = e;
        sp.u_value[cb] = e == 1 ? base.at(cb) : -base.at(cb);
      }
      out.push_back(std::move(sp));
    }
  }
  return out;
}

ExactMatrix evaluation_matrix(const std::vector<PluriSection>& basis,
                              const std::vector<SheetPoint>& points) {
  require(!basis.empty() && !points.empty(), ErrorKind::Dimension,
          "evaluation needs sections and points");
  ExactMatrix m(static_cast<int>(points.size()), static_cast<int>(basis.size()));
  for (int i = 0; i < m.rows(); ++i) {
    auto pc = points[i].location.primitive_coords();
    Rat px(pc[0]), py(pc[1]), pz(pc[2]);
    for (int j = 0; j < m.cols(); ++j) {
      const auto& sec = basis[j];
      FieldElement value(sec.monomial.eval(px, py, pz));
      if (!sec.chi.is_trivial()) {
        auto it = points[i].u_value.find(sec.chi.bits);
        require(it != points[i].u_value.end(), ErrorKind::Dimension,
                "sheet point lacks the section's radical value");
        value = value * it->second;
      }
      m.at(i, j) = value;
    }
  }
  return m;
}

std::vector<std::string> matrix_dump_lines(const std::vector<PluriSection>& basis,
                                           const std::vector<SheetPoint>& points,
                                           const ExactMatrix& m) {
  require(m.rows() == static_cast<int>(points.size()) &&
              m.cols() == static_cast<int>(basis.size()),
          ErrorKind::Dimension, "dump dimensions disagree with the matrix");
  std::vector<std::string> lines;
  std::ostringstream head;
  head << "node sheet point";
  for (const auto& sec : basis) {
    head << " | ";
    if (sec.chi.is_trivial())
      head << sec.monomial.to_string();
    else
      head << sec.radical;
  }
  lines.push_back(head.str());
  for (int i = 0; i < m.rows(); ++i) {
    std::ostringstream row;
    row << "A" << points[i].node_index << ' ' << element_name(points[i].sheet)
        << ' ' << points[i].location.to_string();
    for (int j = 0; j < m.cols(); ++j) row << " | " << m.at(i, j).to_string();
    lines.push_back(row.str());
  }
  return lines;
}

BicanonicalCertificate unique_bicanonical_through_nodes(
    const BuildingData& bd, Tower& tower,
    const std::vector<NodeRecord>& inventory) {
  auto basis = pluricanonical_basis(bd, 2);
  auto points = node_sheet_points(bd, tower, inventory);
  auto m = evaluation_matrix(basis, points);

  BicanonicalCertificate cert;
  auto kernel = m.kernel();
  cert.kernel_dimension = kernel.size();
  require(cert.kernel_dimension == 1, ErrorKind::CheckFailed,
          "node-evaluation kernel has dimension " +
              std::to_string(cert.kernel_dimension) +
              "; the construction needs exactly one curve through the nodes");

  // The one identically zero column: the radical whose plane curve
  // passes through every node.
  std::vector<int> zero_cols;
  for (int j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (int i = 0; i < m.rows(); ++i)
      if (!m.at(i, j).is_zero()) {
        zero = false;
        break;
      }
    if (zero) zero_cols.push_back(j);
  }
  require(zero_cols.size() == 1, ErrorKind::CheckFailed,
          "expected exactly one section vanishing at every node, found " +
              std::to_string(zero_cols.size()));
  const int split_col = zero_cols.front();
  cert.kernel_section = basis[split_col].radical;

  const auto& v = kernel.front();
  cert.kernel_matches_radical = !v[split_col].is_zero();
  for (int j = 0; j < m.cols(); ++j)
    if (j != split_col && !v[j].is_zero()) cert.kernel_matches_radical = false;
  require(cert.kernel_matches_radical, ErrorKind::CheckFailed,
          "kernel is not spanned by the everywhere-vanishing section");

  std::vector<int> quadric_cols;
  for (int j = 0; j < m.cols(); ++j)
    if (basis[j].chi.is_trivial()) quadric_cols.push_back(j);
  cert.quadric_rank = m.select_columns(quadric_cols).rank();
  require(cert.quadric_rank == quadric_cols.size(), ErrorKind::CheckFailed,
          "a plane quadric passes through all nodes; the kernel curve is "
          "not unique among quadrics");

  // Reducedness of the kernel curve: its square is the product of the
  // branch forms the character negates, so it is reduced exactly when
  // those components are pairwise distinct (components are reduced by
  // building-data validation).
  std::vector<const PlaneCurve*> comps;
  for (const auto& d : bd.divisors)
    if (char_eval(basis[split_col].chi, d.sigma) == -1)
      for (const auto& c : d.components) comps.push_back(&c);
  cert.curve_reduced = true;
  for (std::size_t a = 0; a < comps.size(); ++a)
    for (std::size_t b = a + 1; b < comps.size(); ++b)
      if (comps[a]->form().proportional(comps[b]->form()))
        cert.curve_reduced = false;
  require(cert.curve_reduced, ErrorKind::CheckFailed,
          "the curve through the nodes is non-reduced");

  cert.h0_adjoint = 0;
  cert.premises = {
      "the node-evaluation kernel is one-dimensional: exactly one "
      "bicanonical curve passes through all " +
          std::to_string(points.size()) + " cover nodes",
      "that curve is the zero locus of the radical section " +
          cert.kernel_section,
      "its " + std::to_string(comps.size()) +
          " branch components are pairwise distinct, so it is reduced",
      "a nonzero section of the adjoint system would force a doubled "
      "bicanonical curve through every node, contradicting the above; "
      "the adjoint system is empty"};
  return cert;
}

}  // namespace planecover
