#include "planecover/poly.hpp"

#include <algorithm>
#include <sstream>

#include "planecover/error.hpp"

namespace planecover {
namespace {

// Univariate polynomials over Q as coefficient vectors, index = power.
using UniPoly = std::vector<Rat>;

void trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int udeg(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly uderiv(const UniPoly& p) {
  UniPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rat(k));
  trim(d);
  return d;
}

UniPoly usub(const UniPoly& a, const UniPoly& b) {
  UniPoly r = a;
  if (b.size() > r.size()) r.resize(b.size(), Rat(0));
  for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  trim(r);
  return r;
}

// Division with remainder; the divisor must be nonzero.
void udivmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  require(!b.empty(), ErrorKind::Internal, "polynomial division by zero");
  r = a;
  trim(r);
  q.assign(1, Rat(0));
  if (udeg(r) >= udeg(b)) q.assign(r.size() - b.size() + 1, Rat(0));
  while (udeg(r) >= udeg(b) && !r.empty()) {
    Rat f = r.back() / b.back();
    int shift = udeg(r) - udeg(b);
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) r[shift + k] -= f * b[k];
    trim(r);
  }
  trim(q);
}

UniPoly udiv_exact(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  udivmod(a, b, q, r);
  require(r.empty(), ErrorKind::Internal, "inexact polynomial division");
  return q;
}

UniPoly umonic(UniPoly p) {
  trim(p);
  if (p.empty()) return p;
  Rat lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

UniPoly ugcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly q, r;
    udivmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(a);
}

// Yun's squarefree decomposition of a nonconstant polynomial:
// p = lc * prod out[i].first^(out[i].second) with monic squarefree
// pairwise coprime factors.
std::vector<std::pair<UniPoly, int>> uyun(UniPoly p) {
  std::vector<std::pair<UniPoly, int>> out;
  p = umonic(p);
  if (udeg(p) < 1) return out;
  UniPoly dp = uderiv(p);
  UniPoly a = ugcd(p, dp);
  UniPoly b = udiv_exact(p, a);
  UniPoly c = udiv_exact(dp, a);
  UniPoly d = usub(c, uderiv(b));
  int i = 1;
  while (udeg(b) > 0) {
    UniPoly ai = ugcd(b, d);
    if (udeg(ai) > 0) out.emplace_back(umonic(ai), i);
    b = udiv_exact(b, ai);
    c = udiv_exact(d, ai);
    d = usub(c, uderiv(b));
    ++i;
  }
  return out;
}

// Positive divisors by trial division; refuses composites it cannot
// finish so a missed rational root is impossible.
std::vector<Int> divisors(Int n) {
  if (n < 0) n = -n;
  require(n != 0, ErrorKind::Internal, "divisors of zero");
  std::vector<std::pair<Int, int>> fac;
  for (Int p = 2; p * p <= n && p < 2000000; p == 2 ? p = 3 : p += 2) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      fac.emplace_back(p, e);
    }
  }
  if (n > 1) {
    require(n < Int(4000000000000LL), ErrorKind::UnsupportedField,
            "constant term too large to factor for rational root search");
    fac.emplace_back(n, 1);  // prime: no factor below 2e6 and n < (2e6)^2
  }
  std::vector<Int> divs = {Int(1)};
  for (const auto& [p, e] : fac) {
    std::size_t base = divs.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Rat ueval(const UniPoly& p, const Rat& x) {
  Rat acc(0);
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

// All rational roots of a squarefree polynomial, ascending.
std::vector<Rat> rational_roots(const UniPoly& p) {
  std::vector<Rat> roots;
  if (udeg(p) < 1) return roots;
  if (p[0] == 0) roots.push_back(Rat(0));
  // Clear denominators to a primitive integer polynomial.
  Int lcm = 1;
  for (const auto& c : p) {
    Int d = rat_den(c);
    lcm = boost::multiprecision::lcm(lcm, d);
  }
  std::vector<Int> ip;
  for (const auto& c : p) ip.push_back(rat_num(c) * (lcm / rat_den(c)));
  std::size_t lo = 0;
  while (ip[lo] == 0) ++lo;  // x = 0 already recorded
  std::vector<Int> num = divisors(ip[lo]);
  std::vector<Int> den = divisors(ip.back());
  for (const Int& a : num)
    for (const Int& b : den) {
      Rat cand(a, b);
      if (ueval(p, cand) == 0) roots.push_back(cand);
      if (ueval(p, -cand) == 0) roots.push_back(-cand);
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

UniPoly linear_factor(const Rat& root) { return {-root, Rat(1)}; }

// Roots of a squarefree factor over an iterated square-root tower.
// Deterministic order: rational roots ascending, then quadratic-formula
// pairs (+ branch first), then quartic pairs.
std::vector<FieldElement> splitting_roots(Tower& tw, UniPoly p) {
  std::vector<FieldElement> out;
  for (const Rat& r : rational_roots(p)) {
    out.push_back(tw.rational(r));
    p = udiv_exact(p, linear_factor(r));
  }
  if (udeg(p) <= 0) return out;
  auto quadratic_roots = [&tw](const FieldElement& b, const FieldElement& c)
      -> std::pair<FieldElement, FieldElement> {
    // Roots of y^2 + b y + c over the tower.
    FieldElement disc = b * b - tw.rational(Rat(4)) * c;
    FieldElement s = sqrt_element(tw, disc);
    FieldElement half = tw.rational(Rat(1, 2));
    return {(s - b) * half, (s + b) * half * tw.rational(Rat(-1))};
  };
  if (udeg(p) == 2) {
    UniPoly m = umonic(p);
    auto [r1, r2] = quadratic_roots(tw.rational(m[1]), tw.rational(m[0]));
    out.push_back(r1);
    out.push_back(r2);
    return out;
  }
  if (udeg(p) == 3)
    fail(ErrorKind::UnsupportedField,
         "irreducible cubic factor does not split in a square-root tower");
  require(udeg(p) == 4, ErrorKind::UnsupportedField,
          "cannot split an irreducible factor of degree " +
              std::to_string(udeg(p)));
  UniPoly m = umonic(p);
  // Depress: t = y - m[3]/4 gives y^4 + P y^2 + Q y + R.
  Rat shift = m[3] / Rat(4);
  Rat P = m[2] - Rat(3) * m[3] * m[3] / Rat(8);
  Rat Q = m[1] - m[3] * m[2] / Rat(2) + m[3] * m[3] * m[3] / Rat(8);
  Rat R = m[0] - m[3] * m[1] / Rat(4) + m[3] * m[3] * m[2] / Rat(16) -
          Rat(3) * m[3] * m[3] * m[3] * m[3] / Rat(256);
  FieldElement back = tw.rational(-shift);
  if (Q == 0) {
    // Biquadratic: y^2 is a root of w^2 + P w + R.
    auto [w1, w2] = quadratic_roots(tw.rational(P), tw.rational(R));
    for (const FieldElement& w : {w1, w2}) {
      FieldElement s = sqrt_element(tw, w);
      out.push_back(s + back);
      out.push_back(s * tw.rational(Rat(-1)) + back);
    }
    return out;
  }
  // Resolvent cubic z^3 + 2P z^2 + (P^2 - 4R) z - Q^2; a rational root
  // z0 (necessarily nonzero) yields the factorization
  // (y^2 + u y + v)(y^2 - u y + w) with u = sqrt(z0).
  UniPoly resolvent = {-Q * Q, P * P - Rat(4) * R, Rat(2) * P, Rat(1)};
  std::vector<Rat> zr = rational_roots(resolvent);
  require(!zr.empty(), ErrorKind::UnsupportedField,
          "quartic resolvent cubic has no rational root");
  Rat z0 = zr.back();  // the smallest positive root when one exists
  for (const Rat& z : zr)
    if (z > 0) {
      z0 = z;
      break;
    }
  require(z0 != 0, ErrorKind::Internal, "resolvent root zero with Q nonzero");
  FieldElement u = tw.element(tw.adjoin_sqrt(z0));
  FieldElement qdivu = u * tw.rational(Q / z0);  // Q/u rationalized
  FieldElement half = tw.rational(Rat(1, 2));
  FieldElement pz = tw.rational(P + z0);
  FieldElement v = (pz - qdivu) * half;
  FieldElement w = (pz + qdivu) * half;
  for (const auto& [lin, cst] : {std::pair(u, v), std::pair(u * tw.rational(Rat(-1)), w)}) {
    FieldElement disc = lin * lin - tw.rational(Rat(4)) * cst;
    FieldElement s = sqrt_element(tw, disc);
    out.push_back((s - lin) * half + back);
    out.push_back((s + lin) * half * tw.rational(Rat(-1)) + back);
  }
  return out;
}

}  // namespace

BinForm::BinForm(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  require(!c_.empty(), ErrorKind::Internal, "binary form needs coefficients");
}

const Rat& BinForm::coeff(int k) const {
  require(k >= 0 && k <= degree(), ErrorKind::Internal,
          "binary form coefficient index out of range");
  return c_[k];
}

bool BinForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& c) { return c == 0; });
}

BinForm BinForm::operator+(const BinForm& o) const {
  require(degree() == o.degree(), ErrorKind::Dimension,
          "binary form degree mismatch in +");
  std::vector<Rat> r = c_;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += o.c_[k];
  return BinForm(r);
}

BinForm BinForm::operator-(const BinForm& o) const {
  return *this + o.scaled(Rat(-1));
}

BinForm BinForm::operator*(const BinForm& o) const {
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return BinForm(r);
}

BinForm BinForm::scaled(const Rat& a) const {
  std::vector<Rat> r = c_;
  for (auto& c : r) c *= a;
  return BinForm(r);
}

FieldElement BinForm::eval(const FieldElement& s, const FieldElement& t) const {
  FieldElement acc{Rat(0)};
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    acc = acc + FieldElement(c_[k]) * int_pow(s, degree() - static_cast<int>(k)) *
                    int_pow(t, static_cast<int>(k));
  }
  return acc;
}

Rat BinForm::eval(const Rat& s, const Rat& t) const {
  Rat acc(0);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rat term = c_[k];
    for (int i = 0; i < degree() - static_cast<int>(k); ++i) term *= s;
    for (std::size_t i = 0; i < k; ++i) term *= t;
    acc += term;
  }
  return acc;
}

std::string BinForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    os << "(" << format_rational(c_[k]) << ")";
    std::size_t sp = c_.size() - 1 - k;
    if (sp > 0) os << "*s" << (sp > 1 ? "^" + std::to_string(sp) : "");
    if (k > 0) os << "*t" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const BinForm& f,
                                                       Rat* content) {
  require(!f.is_zero(), ErrorKind::Internal,
          "squarefree decomposition of the zero form");
  // Split off the power of s (root at infinity), then decompose the
  // dehomogenized part and rehomogenize each factor.
  int d = f.degree();
  int inf_mult = 0;
  while (inf_mult <= d && f.coeff(d - inf_mult) == 0) ++inf_mult;
  UniPoly u;
  for (int k = 0; k <= d - inf_mult; ++k) u.push_back(f.coeff(k));
  trim(u);
  std::vector<SquarefreeFactor> out;
  if (inf_mult > 0)
    out.push_back({BinForm({Rat(1), Rat(0)}), inf_mult});  // the form s
  for (auto& [fac, mult] : uyun(u)) {
    // Primitive integer coefficients with positive leading term.
    Int lcm = 1;
    for (const auto& c : fac) lcm = boost::multiprecision::lcm(lcm, rat_den(c));
    std::vector<Int> ic;
    Int g = 0;
    for (const auto& c : fac) {
      ic.push_back(rat_num(c) * (lcm / rat_den(c)));
      g = boost::multiprecision::gcd(g, ic.back());
    }
    std::vector<Rat> hc;
    for (const auto& n : ic) hc.emplace_back(n / g);
    for (const auto& c : hc) {
      if (c == 0) continue;
      if (c < 0)
        for (auto& v : hc) v = -v;
      break;
    }
    out.push_back({BinForm{hc}, mult});
  }
  // Recompute the content honestly: divide f by the factor product.
  BinForm prod({Rat(1)});
  for (const auto& sf : out)
    for (int k = 0; k < sf.mult; ++k) prod = prod * sf.form;
  Rat cont(1);
  for (int k = 0; k <= prod.degree(); ++k)
    if (prod.coeff(k) != 0) {
      cont = f.coeff(k) / prod.coeff(k);
      break;
    }
  if (content) *content = cont;
  return out;
}

bool binform_is_square(const BinForm& f, BinForm* root) {
  if (f.is_zero()) {
    if (root) *root = BinForm(std::vector<Rat>(f.degree() / 2 + 1, Rat(0)));
    return true;
  }
  if (f.degree() % 2 != 0) return false;
  Rat content;
  auto decomp = squarefree_decomposition(f, &content);
  for (const auto& sf : decomp)
    if (sf.mult % 2 != 0) return false;
  if (!is_rational_square(content)) return false;
  Rat croot;
  is_rational_square(content, &croot);
  BinForm r({croot});
  for (const auto& sf : decomp)
    for (int k = 0; k < sf.mult / 2; ++k) r = r * sf.form;
  // Pad to the full degree (pure s powers were explicit factors, so the
  // degree already matches) and fix the canonical sign.
  require(r.degree() * 2 == f.degree(), ErrorKind::Internal,
          "square root degree mismatch");
  for (int k = 0; k <= r.degree(); ++k)
    if (r.coeff(k) != 0) {
      if (r.coeff(k) < 0) r = r.scaled(Rat(-1));
      break;
    }
  require(r * r == f, ErrorKind::Internal, "square root verification failed");
  if (root) *root = r;
  return true;
}

int root_multiplicity(const BinForm& f, const FieldElement& s0,
                      const FieldElement& t0) {
  require(!(s0.is_zero() && t0.is_zero()), ErrorKind::Internal,
          "(0,0) is not a projective parameter");
  require(!f.is_zero(), ErrorKind::Internal,
          "root multiplicity on the zero form");
  if (s0.is_zero()) {
    int d = f.degree(), m = 0;
    while (m <= d && f.coeff(d - m) == 0) ++m;
    return m;
  }
  FieldElement theta = t0 / s0;
  std::vector<FieldElement> c;
  for (int k = 0; k <= f.degree(); ++k) c.push_back(FieldElement(f.coeff(k)));
  int mult = 0;
  while (true) {
    // Synthetic division of sum c[k] t^k by (t - theta).
    FieldElement rem = c.back();
    std::vector<FieldElement> q(c.size() > 1 ? c.size() - 1 : 1,
                                FieldElement(Rat(0)));
    for (std::size_t k = c.size() - 1; k-- > 0;) {
      q[k] = rem;
      rem = rem * theta + c[k];
    }
    if (!rem.is_zero()) return mult;
    ++mult;
    if (c.size() == 1) return mult;  // the zero quotient: cannot recur
    c = q;
    if (c.size() == 1 && c[0].is_zero()) return mult;
  }
}

std::vector<FormRoot> binary_form_roots(Tower& tw, const BinForm& f) {
  require(!f.is_zero(), ErrorKind::Internal, "roots of the zero form");
  std::vector<FormRoot> out;
  auto decomp = squarefree_decomposition(f);
  for (const auto& sf : decomp) {
    if (sf.form.degree() == 1 && sf.form.coeff(1) == 0) {
      // Pure s factor: the root at infinity.
      out.push_back({tw.rational(Rat(0)), tw.rational(Rat(1)), sf.mult});
      continue;
    }
    UniPoly u;
    for (int k = 0; k <= sf.form.degree(); ++k) u.push_back(sf.form.coeff(k));
    trim(u);
    for (const FieldElement& r : splitting_roots(tw, u))
      out.push_back({tw.rational(Rat(1)), r, sf.mult});
  }
  int total = 0;
  for (const auto& fr : out) total += fr.mult;
  require(total == f.degree(), ErrorKind::Internal,
          "root multiplicities do not sum to the degree");
  return out;
}

HomPoly3::HomPoly3(int degree) : degree_(degree) {
  require(degree >= 0, ErrorKind::Internal, "negative degree");
  c_.assign((degree + 1) * (degree + 2) / 2, Rat(0));
}

HomPoly3::HomPoly3(int degree, std::vector<Rat> coeffs) : HomPoly3(degree) {
  require(coeffs.size() == c_.size(), ErrorKind::Dimension,
          "coefficient count does not match the degree");
  c_ = std::move(coeffs);
}

HomPoly3 HomPoly3::linear(const Rat& a, const Rat& b, const Rat& c) {
  return HomPoly3(1, {a, b, c});
}

HomPoly3 HomPoly3::quadratic(const std::vector<Rat>& six) {
  require(six.size() == 6, ErrorKind::Dimension,
          "a quadric takes six coefficients");
  return HomPoly3(2, six);
}

int HomPoly3::index(int i, int j) const {
  require(i >= 0 && j >= 0 && i + j <= degree_, ErrorKind::Internal,
          "monomial exponent out of range");
  // Monomials with x-exponent > i come first: for x-exponent a there are
  // degree - a + 1 of them; within x-exponent i, y-exponents descend.
  int before = 0;
  for (int a = degree_; a > i; --a) before += degree_ - a + 1;
  return before + (degree_ - i - j);
}

const Rat& HomPoly3::coeff(int i, int j) const { return c_[index(i, j)]; }
Rat& HomPoly3::coeff(int i, int j) { return c_[index(i, j)]; }

bool HomPoly3::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& c) { return c == 0; });
}

HomPoly3 HomPoly3::operator+(const HomPoly3& o) const {
  require(degree_ == o.degree_, ErrorKind::Dimension, "degree mismatch in +");
  HomPoly3 r = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
  return r;
}

HomPoly3 HomPoly3::operator-(const HomPoly3& o) const {
  return *this + o.scaled(Rat(-1));
}

HomPoly3 HomPoly3::operator*(const HomPoly3& o) const {
  HomPoly3 r(degree_ + o.degree_);
  for (int i = 0; i <= degree_; ++i)
    for (int j = 0; i + j <= degree_; ++j) {
      if (coeff(i, j) == 0) continue;
      for (int a = 0; a <= o.degree_; ++a)
        for (int b = 0; a + b <= o.degree_; ++b)
          r.coeff(i + a, j + b) += coeff(i, j) * o.coeff(a, b);
    }
  return r;
}

HomPoly3 HomPoly3::scaled(const Rat& a) const {
  HomPoly3 r = *this;
  for (auto& c : r.c_) c *= a;
  return r;
}

FieldElement HomPoly3::eval(const FieldElement& x, const FieldElement& y,
                            const FieldElement& z) const {
  FieldElement acc(Rat(0));
  for (int i = 0; i <= degree_; ++i)
    for (int j = 0; i + j <= degree_; ++j) {
      const Rat& c = coeff(i, j);
      if (c == 0) continue;
      acc = acc + FieldElement(c) * int_pow(x, i) * int_pow(y, j) *
                      int_pow(z, degree_ - i - j);
    }
  return acc;
}

Rat HomPoly3::eval(const Rat& x, const Rat& y, const Rat& z) const {
  Rat acc(0);
  for (int i = 0; i <= degree_; ++i)
    for (int j = 0; i + j <= degree_; ++j) {
      const Rat& c = coeff(i, j);
      if (c == 0) continue;
      Rat term = c;
      for (int k = 0; k < i; ++k) term *= x;
      for (int k = 0; k < j; ++k) term *= y;
      for (int k = 0; k < degree_ - i - j; ++k) term *= z;
      acc += term;
    }
  return acc;
}

BinForm HomPoly3::compose(const BinForm& X, const BinForm& Y,
                          const BinForm& Z) const {
  int e = X.degree();
  require(Y.degree() == e && Z.degree() == e, ErrorKind::Dimension,
          "parametrization components must share a degree");
  // Cache the power products as they appear.
  std::vector<BinForm> xp = {BinForm({Rat(1)})};
  std::vector<BinForm> yp = xp, zp = xp;
  auto power = [](std::vector<BinForm>& cache, const BinForm& base, int n) {
    while (static_cast<int>(cache.size()) <= n)
      cache.push_back(cache.back() * base);
    return cache[n];
  };
  BinForm acc(std::vector<Rat>(degree_ * e + 1, Rat(0)));
  for (int i = 0; i <= degree_; ++i)
    for (int j = 0; i + j <= degree_; ++j) {
      const Rat& c = coeff(i, j);
      if (c == 0) continue;
      BinForm term = power(xp, X, i) * power(yp, Y, j) *
                     power(zp, Z, degree_ - i - j);
      // Pad to full degree: term has degree e*degree_ already unless some
      // power is the constant 1; multiply keeps exact sizes, so align.
      std::vector<Rat> padded(degree_ * e + 1, Rat(0));
      int off = degree_ * e - term.degree();
      require(off == 0, ErrorKind::Internal, "composition degree mismatch");
      for (int k = 0; k <= term.degree(); ++k) padded[k] = term.coeff(k);
      acc = acc + BinForm(padded).scaled(c);
    }
  return acc;
}

bool HomPoly3::operator==(const HomPoly3& o) const {
  return degree_ == o.degree_ && c_ == o.c_;
}

bool HomPoly3::proportional(const HomPoly3& o) const {
  if (degree_ != o.degree_) return false;
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  Rat scale(0);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if ((c_[k] == 0) != (o.c_[k] == 0)) return false;
    if (c_[k] == 0) continue;
    Rat s = o.c_[k] / c_[k];
    if (scale == 0)
      scale = s;
    else if (s != scale)
      return false;
  }
  return true;
}

HomPoly3 HomPoly3::primitive() const {
  require(!is_zero(), ErrorKind::Internal, "primitive form of zero");
  Int lcm = 1;
  for (const auto& c : c_) lcm = boost::multiprecision::lcm(lcm, rat_den(c));
  Int g = 0;
  for (const auto& c : c_) g = boost::multiprecision::gcd(g, rat_num(c) * (lcm / rat_den(c)));
  HomPoly3 r = scaled(Rat(lcm, g));
  for (const auto& c : r.c_) {
    if (c == 0) continue;
    if (c < 0) r = r.scaled(Rat(-1));
    break;
  }
  return r;
}

std::string HomPoly3::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree_; i >= 0; --i)
    for (int j = degree_ - i; j >= 0; --j) {
      const Rat& c = coeff(i, j);
      if (c == 0) continue;
      int k = degree_ - i - j;
      if (!first) os << " + ";
      os << "(" << format_rational(c) << ")";
      auto var = [&os](const char* v, int e) {
        if (e == 0) return;
        os << "*" << v;
        if (e > 1) os << "^" << e;
      };
      var("x", i);
      var("y", j);
      var("z", k);
      first = false;
    }
  if (first) os << "0";
  return os.str();
}

}  // namespace planecover
