#include "planecover/exact_field.hpp"

#include <algorithm>
#include <bit>

namespace planecover {

namespace {
long g_elimination_ops = 0;
}

long elimination_ops() { return g_elimination_ops; }

const Int& Tower::radicand(int i) const {
  require(i >= 0 && i < size(), ErrorKind::Internal, "radicand index");
  return rad_[static_cast<std::size_t>(i)];
}

Int Tower::subset_product(std::uint32_t mask) const {
  require(mask < (1u << size()), ErrorKind::Internal, "subset mask");
  Int p = 1;
  for (int i = 0; i < size(); ++i)
    if (mask & (1u << i)) p *= rad_[static_cast<std::size_t>(i)];
  return p;
}

Tower::Root Tower::adjoin_sqrt(const Rat& a) {
  require(a != 0, ErrorKind::Config, "square root of zero radicand");
  ++adjoin_calls_;
  RatSquarefreeSplit split = squarefree_split(a);
  if (split.squarefree == 1) return {split.root, 0};

  // Look for a generator subset S with squarefree(m * prod_S a_i) = 1,
  // i.e. m * prod_S a_i = c^2; then sqrt(m) = (c / prod_S a_i) * s_S.
  require(size() <= 20, ErrorKind::UnsupportedField, "tower too large");
  for (std::uint32_t mask = 1; mask < (1u << size()); ++mask) {
    Int prod = subset_product(mask);
    SquarefreeSplit ms = squarefree_split(Int(split.squarefree * prod));
    if (ms.squarefree == 1) {
      Rat coeff = split.root * Rat(ms.root) / Rat(prod);
      if (coeff < 0) coeff = -coeff;
      return {coeff, mask};
    }
  }
  rad_.push_back(split.squarefree);
  return {split.root, 1u << (size() - 1)};
}

FieldElement Tower::rational(const Rat& value) const {
  if (value == 0) return FieldElement();
  return FieldElement(this, {{0u, value}});
}

FieldElement Tower::generator(int i) const {
  require(i >= 0 && i < size(), ErrorKind::Internal, "generator index");
  return FieldElement(this, {{1u << i, Rat(1)}});
}

FieldElement Tower::element(const Root& r) const {
  if (r.coeff == 0) return FieldElement();
  return FieldElement(this, {{r.mask, r.coeff}});
}

FieldElement::FieldElement(const Rat& value) {
  if (value != 0) c_[0] = value;
}

FieldElement::FieldElement(const Tower* tower, std::map<std::uint32_t, Rat> coeffs)
    : tower_(tower) {
  for (auto& [mask, coeff] : coeffs) {
    if (coeff == 0) continue;
    require(mask == 0 || tower_ != nullptr, ErrorKind::Internal,
            "radical mask without tower");
    if (tower_)
      require(mask < (1u << tower_->size()), ErrorKind::Internal,
              "mask outside tower");
    c_[mask] = coeff;
  }
  if (c_.empty()) tower_ = nullptr;
}

bool FieldElement::is_rational() const {
  return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

Rat FieldElement::rational_value() const {
  require(is_rational(), ErrorKind::Internal,
          "rational_value of an irrational element");
  return c_.empty() ? Rat(0) : c_.begin()->second;
}

const Tower* FieldElement::resolve_tower(const FieldElement& o,
                                         const char* op) const {
  if (tower_ && o.tower_)
    require(tower_ == o.tower_, ErrorKind::Internal,
            std::string("mixed towers in ") + op);
  return tower_ ? tower_ : o.tower_;
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& [mask, coeff] : out.c_) coeff = -coeff;
  return out;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  const Tower* tw = resolve_tower(o, "+");
  FieldElement out;
  out.tower_ = tw;
  out.c_ = c_;
  for (const auto& [mask, coeff] : o.c_) {
    auto it = out.c_.find(mask);
    if (it == out.c_.end()) {
      out.c_[mask] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) out.c_.erase(it);
    }
  }
  if (out.c_.empty()) out.tower_ = nullptr;
  return out;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return *this + (-o);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const Tower* tw = resolve_tower(o, "*");
  FieldElement out;
  out.tower_ = tw;
  for (const auto& [ma, ca] : c_) {
    for (const auto& [mb, cb] : o.c_) {
      // s_A * s_B = prod_{i in A&B} a_i * s_{A^B}
      std::uint32_t common = ma & mb;
      Rat coeff = ca * cb;
      if (common) coeff *= Rat(tw->subset_product(common));
      std::uint32_t mask = ma ^ mb;
      auto it = out.c_.find(mask);
      if (it == out.c_.end()) {
        if (coeff != 0) out.c_[mask] = coeff;
      } else {
        it->second += coeff;
        if (it->second == 0) out.c_.erase(it);
      }
    }
  }
  if (out.c_.empty()) out.tower_ = nullptr;
  return out;
}

FieldElement FieldElement::inverse() const {
  require(!is_zero(), ErrorKind::Internal, "inverse of zero");
  if (is_rational()) {
    FieldElement out;
    out.tower_ = nullptr;
    out.c_[0] = Rat(1) / c_.begin()->second;
    return out;
  }
  // Split off the highest generator present: x = y + z*s_k, then
  // 1/x = (y - z*s_k) / (y^2 - a_k*z^2) with the denominator in the
  // subtower (nonzero because the radicands are independent).
  std::uint32_t top = 0;
  for (const auto& [mask, coeff] : c_) top = std::max(top, mask);
  int k = 31 - std::countl_zero(top);
  std::uint32_t bit = 1u << k;
  FieldElement y, z;
  y.tower_ = z.tower_ = tower_;
  for (const auto& [mask, coeff] : c_) {
    if (mask & bit)
      z.c_[mask ^ bit] = coeff;
    else
      y.c_[mask] = coeff;
  }
  if (y.c_.empty()) y.tower_ = nullptr;
  FieldElement ak = FieldElement(Rat(tower_->radicand(k)));
  FieldElement denom = y * y - ak * z * z;
  require(!denom.is_zero(), ErrorKind::Internal,
          "dependent radicands detected in inverse");
  FieldElement sk(tower_, {{bit, Rat(1)}});
  return (y - z * sk) * denom.inverse();
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (tower_ && o.tower_ && tower_ != o.tower_) return false;
  return c_ == o.c_;
}

FieldElement FieldElement::conjugate(std::uint32_t mask) const {
  FieldElement out = *this;
  for (auto& [m, coeff] : out.c_)
    if (std::popcount(m & mask) % 2) coeff = -coeff;
  return out;
}

std::string FieldElement::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [mask, coeff] : c_) {
    std::string term = format_rational(coeff);
    for (int i = 0; i < 32; ++i)
      if (mask & (1u << i)) term += "*s" + std::to_string(i + 1);
    if (!out.empty()) {
      if (!term.empty() && term[0] == '-') {
        out += " - ";
        term = term.substr(1);
      } else {
        out += " + ";
      }
    }
    out += term;
  }
  return out;
}

FieldElement operator*(const Rat& a, const FieldElement& x) {
  return FieldElement(a) * x;
}

FieldElement int_pow(const FieldElement& x, int n) {
  require(n >= 0, ErrorKind::Internal, "negative exponent in int_pow");
  FieldElement r{Rat(1)};
  for (int k = 0; k < n; ++k) r = r * x;
  return r;
}

FieldElement sqrt_element(Tower& tw, const FieldElement& x) {
  if (x.is_zero()) return FieldElement();
  if (x.is_rational()) return tw.element(tw.adjoin_sqrt(x.rational_value()));

  Rat alpha;
  Rat beta;
  std::uint32_t mask = 0;
  int radical_terms = 0;
  for (const auto& [m, coeff] : x.coefficients()) {
    if (m == 0) {
      alpha = coeff;
    } else {
      ++radical_terms;
      mask = m;
      beta = coeff;
    }
  }
  require(radical_terms == 1, ErrorKind::UnsupportedField,
          "square root of a multi-radical element: " + x.to_string());

  const Tower* xt = x.tower();
  require(xt == &tw || xt == nullptr, ErrorKind::Internal,
          "sqrt_element tower mismatch");
  Rat a_s(tw.subset_product(mask));
  Rat disc = alpha * alpha - beta * beta * a_s;
  Rat d;
  if (!is_rational_square(disc, &d))
    fail(ErrorKind::UnsupportedField,
         "square root does not denest: " + x.to_string());
  Rat u = (alpha + d) / 2;
  Rat v = (alpha - d) / 2;
  require(u != 0 && v != 0, ErrorKind::Internal, "degenerate denesting");
  FieldElement ru = tw.element(tw.adjoin_sqrt(u));
  FieldElement rv = tw.element(tw.adjoin_sqrt(v));
  for (FieldElement cand : {ru + rv, ru - rv}) {
    if (cand * cand == x) return cand;
  }
  fail(ErrorKind::Internal, "denesting candidates failed for " + x.to_string());
}

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require(rows >= 0 && cols >= 0, ErrorKind::Dimension, "negative matrix size");
  a_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

FieldElement& ExactMatrix::at(int i, int j) {
  require(i >= 0 && i < rows_ && j >= 0 && j < cols_, ErrorKind::Dimension,
          "matrix index");
  return a_[static_cast<std::size_t>(i) * cols_ + j];
}

const FieldElement& ExactMatrix::at(int i, int j) const {
  require(i >= 0 && i < rows_ && j >= 0 && j < cols_, ErrorKind::Dimension,
          "matrix index");
  return a_[static_cast<std::size_t>(i) * cols_ + j];
}

namespace {

// Row echelon reduction; returns pivot column list. M is modified.
std::vector<int> reduce(ExactMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(pivot, j));
    FieldElement inv = m.at(row, col).inverse();
    for (int j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      FieldElement f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) {
        m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        ++g_elimination_ops;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int ExactMatrix::rank() const {
  ExactMatrix copy = *this;
  return static_cast<int>(reduce(copy).size());
}

std::vector<std::vector<FieldElement>> ExactMatrix::kernel() const {
  ExactMatrix m = *this;
  std::vector<int> pivots = reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<FieldElement>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<FieldElement> v(static_cast<std::size_t>(cols_));
    v[static_cast<std::size_t>(free)] = FieldElement(Rat(1));
    for (std::size_t p = 0; p < pivots.size(); ++p)
      v[static_cast<std::size_t>(pivots[p])] =
          -m.at(static_cast<int>(p), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<FieldElement> ExactMatrix::apply(
    const std::vector<FieldElement>& v) const {
  require(static_cast<int>(v.size()) == cols_, ErrorKind::Dimension,
          "apply size mismatch");
  std::vector<FieldElement> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    FieldElement sum;
    for (int j = 0; j < cols_; ++j)
      sum = sum + at(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = sum;
  }
  return out;
}

ExactMatrix ExactMatrix::select_columns(const std::vector<int>& cols) const {
  ExactMatrix out(rows_, static_cast<int>(cols.size()));
  for (int i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out.at(i, static_cast<int>(j)) = at(i, cols[j]);
  return out;
}

}  // namespace planecover
