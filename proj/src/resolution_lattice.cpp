#include "planecover/resolution_lattice.hpp"

#include <algorithm>
#include <set>

#include "planecover/error.hpp"

namespace planecover {

namespace {

void prune(std::map<int, Rat>& m) {
  for (auto it = m.begin(); it != m.end();)
    it = it->second == 0 ? m.erase(it) : std::next(it);
}

void prune(std::map<std::string, Rat>& m) {
  for (auto it = m.begin(); it != m.end();)
    it = it->second == 0 ? m.erase(it) : std::next(it);
}

bool is_integer(const Rat& q) { return boost::multiprecision::denominator(q) == 1; }

}  // namespace

bool LatticeClass::is_zero() const {
  return f == 0 && nodes.empty() && declared.empty();
}

bool LatticeClass::integral() const {
  if (!is_integer(f)) return false;
  for (const auto& [i, c] : nodes)
    if (!is_integer(c)) return false;
  for (const auto& [n, c] : declared)
    if (!is_integer(c)) return false;
  return true;
}

Rat LatticeClass::node_coeff(int i) const {
  auto it = nodes.find(i);
  return it == nodes.end() ? Rat(0) : it->second;
}

Rat LatticeClass::declared_coeff(const std::string& name) const {
  auto it = declared.find(name);
  return it == declared.end() ? Rat(0) : it->second;
}

std::string LatticeClass::to_string() const {
  std::vector<std::pair<Rat, std::string>> terms;
  if (f != 0) terms.push_back({f, "F"});
  for (const auto& [i, c] : nodes) terms.push_back({c, "A" + std::to_string(i)});
  for (const auto& [n, c] : declared) terms.push_back({c, n});
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    Rat c = terms[k].first;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (k == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (c != 1) out += format_rational(c) + "*";
    out += terms[k].second;
  }
  return out;
}

LatticeClass LatticeClass::general_line(const Rat& c) {
  LatticeClass out;
  out.f = c;
  return out;
}

LatticeClass LatticeClass::node(int i, const Rat& c) {
  LatticeClass out;
  if (c != 0) out.nodes[i] = c;
  return out;
}

LatticeClass LatticeClass::named(const std::string& name, const Rat& c) {
  LatticeClass out;
  if (c != 0) out.declared[name] = c;
  return out;
}

LatticeClass& LatticeClass::operator+=(const LatticeClass& o) {
  f += o.f;
  for (const auto& [i, c] : o.nodes) nodes[i] += c;
  for (const auto& [n, c] : o.declared) declared[n] += c;
  prune(nodes);
  prune(declared);
  return *this;
}

LatticeClass& LatticeClass::operator-=(const LatticeClass& o) {
  return *this += -LatticeClass(o);
}

LatticeClass& LatticeClass::operator*=(const Rat& c) {
  if (c == 0) return *this = LatticeClass{};
  f *= c;
  for (auto& [i, v] : nodes) v *= c;
  for (auto& [n, v] : declared) v *= c;
  return *this;
}

LatticeClass operator+(LatticeClass a, const LatticeClass& b) { return a += b; }
LatticeClass operator-(LatticeClass a, const LatticeClass& b) { return a -= b; }

LatticeClass operator-(LatticeClass a) {
  a.f = -a.f;
  for (auto& [i, v] : a.nodes) v = -v;
  for (auto& [n, v] : a.declared) v = -v;
  return a;
}

LatticeClass operator*(const Rat& c, LatticeClass a) { return a *= c; }

bool operator==(const LatticeClass& a, const LatticeClass& b) {
  return a.f == b.f && a.nodes == b.nodes && a.declared == b.declared;
}

PairingTable::PairingTable(int node_count, const Rat& f_self)
    : node_count_(node_count), f_self_(f_self) {
  require(node_count >= 0, ErrorKind::Config, "negative node count");
  require(f_self > 0, ErrorKind::Config, "F*F must be positive");
  canonical_ = LatticeClass::general_line();
}

void PairingTable::declare(const std::string& name, const Rat& with_f,
                           const std::map<int, Rat>& with_nodes,
                           const std::map<std::string, Rat>& with_declared) {
  require(!name.empty(), ErrorKind::Config, "empty class name");
  require(!rows_.count(name), ErrorKind::Config,
          "class " + name + " already declared");
  for (const auto& [i, c] : with_nodes)
    require(i >= 1 && i <= node_count_, ErrorKind::Config,
            "node index out of range in row " + name);
  require(with_declared.count(name), ErrorKind::Config,
          "row " + name + " must include its self-pairing");
  for (const auto& n : names_)
    require(with_declared.count(n), ErrorKind::Config,
            "row " + name + " missing pairing with " + n);
  for (const auto& [n, c] : with_declared)
    require(n == name || rows_.count(n), ErrorKind::Config,
            "row " + name + " pairs against unknown class " + n);
  Row row;
  row.f = with_f;
  row.nodes = with_nodes;
  prune(row.nodes);
  row.declared = with_declared;
  rows_.emplace(name, std::move(row));
  names_.push_back(name);
}

bool PairingTable::has(const std::string& name) const {
  return rows_.count(name) > 0;
}

const PairingTable::Row& PairingTable::row(const std::string& name) const {
  auto it = rows_.find(name);
  if (it == rows_.end())
    fail(ErrorKind::Config, "no pairing row for class " + name);
  return it->second;
}

Rat PairingTable::declared_f(const std::string& name) const {
  return row(name).f;
}

Rat PairingTable::declared_node(const std::string& name, int i) const {
  const auto& r = row(name);
  auto it = r.nodes.find(i);
  return it == r.nodes.end() ? Rat(0) : it->second;
}

Rat PairingTable::declared_pair(const std::string& a,
                                const std::string& b) const {
  const auto& ra = row(a);
  auto it = ra.declared.find(b);
  if (it != ra.declared.end()) return it->second;
  const auto& rb = row(b);
  auto jt = rb.declared.find(a);
  if (jt != rb.declared.end()) return jt->second;
  fail(ErrorKind::Internal, "no stored pairing between " + a + " and " + b);
}

void PairingTable::set_canonical(const LatticeClass& k) { canonical_ = k; }

Rat intersect(const PairingTable& t, const LatticeClass& a,
              const LatticeClass& b) {
  Rat out = a.f * b.f * t.f_self();
  for (const auto& [i, c] : a.nodes) {
    require(i >= 1 && i <= t.node_count(), ErrorKind::Config,
            "node index out of range");
    out += c * b.node_coeff(i) * Rat(-2);
  }
  for (const auto& [n, c] : a.declared) {
    out += c * b.f * t.declared_f(n);
    for (const auto& [i, v] : b.nodes) out += c * v * t.declared_node(n, i);
    for (const auto& [m, w] : b.declared) out += c * w * t.declared_pair(n, m);
  }
  for (const auto& [n, c] : b.declared) {
    out += c * a.f * t.declared_f(n);
    for (const auto& [i, v] : a.nodes) out += c * v * t.declared_node(n, i);
  }
  return out;
}

LatticeClass total_transform(int degree, const std::map<int, int>& mults) {
  require(degree >= 1, ErrorKind::Config, "curve degree must be positive");
  LatticeClass out = LatticeClass::general_line(degree);
  for (const auto& [i, m] : mults) {
    require(m >= 0, ErrorKind::Config, "negative exceptional multiplicity");
    if (m != 0) out.nodes[i] = m;
  }
  return out;
}

std::vector<std::string> pairing_mismatches(const PairingTable& t,
                                            const LatticeClass& a,
                                            const LatticeClass& b) {
  std::vector<std::string> out;
  auto check = [&](const LatticeClass& dir, const std::string& label) {
    if (intersect(t, a, dir) != intersect(t, b, dir)) out.push_back(label);
  };
  check(LatticeClass::general_line(), "F");
  for (int i = 1; i <= t.node_count(); ++i)
    check(LatticeClass::node(i), "A" + std::to_string(i));
  for (const auto& n : t.declared_names()) check(LatticeClass::named(n), n);
  const Rat aa = intersect(t, a, a);
  const Rat bb = intersect(t, b, b);
  const Rat ab = intersect(t, a, b);
  if (aa != bb || aa != ab) out.push_back("self");
  return out;
}

CertificateCheck even_set_check(const PairingTable& t,
                                const EvenSetCertificate& cert) {
  CertificateCheck out;
  auto flag = [&](const std::string& r) { out.reasons.push_back(r); };

  std::set<int> subset(cert.subset.begin(), cert.subset.end());
  if (subset.size() != cert.subset.size()) flag("repeated node index in subset");
  for (int i : subset)
    if (i < 1 || i > t.node_count()) flag("subset index out of range");

  std::set<int> odd;
  for (const auto& [i, m] : cert.exceptional) {
    if (i < 1 || i > t.node_count()) flag("exceptional index out of range");
    if (m < 0) flag("negative exceptional multiplicity");
    if (m % 2 != 0) odd.insert(i);
  }
  if (odd != subset)
    flag("parity pattern mismatch: odd multiplicities do not match subset");

  if (!cert.carrier.nodes.empty())
    flag("carrier must not contain exceptional curves");
  if (!cert.carrier.integral()) flag("carrier has non-integral coefficients");
  if (!cert.half_expected.integral())
    flag("half_expected has non-integral coefficients");

  LatticeClass decomposition = Rat(2) * cert.carrier;
  for (const auto& [i, m] : cert.exceptional)
    decomposition += LatticeClass::node(i, m);
  const LatticeClass expected = Rat(2) * cert.half_expected;
  for (const auto& dir : pairing_mismatches(t, decomposition, expected))
    flag("pairing mismatch in direction " + dir);

  out.witness = cert.carrier;
  for (const auto& [i, m] : cert.exceptional)
    if (m / 2 != 0) out.witness += LatticeClass::node(i, m / 2);

  out.half_set = cert.half_expected - out.witness;
  out.l_self = intersect(t, out.half_set, out.half_set);
  out.l_k = intersect(t, out.half_set, t.canonical());

  const Rat want = Rat(-static_cast<int>(subset.size())) / 2;
  if (out.l_self != want)
    flag("half-class self-intersection " + format_rational(out.l_self) +
         " differs from " + format_rational(want));
  if (!is_integer(out.l_self))
    flag("half-class self-intersection is not an integer");
  const Rat parity = out.l_self + out.l_k;
  if (!is_integer(parity) ||
      boost::multiprecision::numerator(parity) % 2 != 0)
    flag("half-class violates adjunction integrality");

  out.valid = out.reasons.empty();
  return out;
}

EvenSetCertificate combine_certificates(const EvenSetCertificate& a,
                                        const EvenSetCertificate& b) {
  std::set<int> sa(a.subset.begin(), a.subset.end());
  for (int i : b.subset)
    require(!sa.count(i), ErrorKind::Config,
            "certified subsets overlap at node " + std::to_string(i));
  EvenSetCertificate out;
  out.name = a.name + " + " + b.name;
  out.subset = a.subset;
  out.subset.insert(out.subset.end(), b.subset.begin(), b.subset.end());
  std::sort(out.subset.begin(), out.subset.end());
  out.carrier = a.carrier + b.carrier;
  out.exceptional = a.exceptional;
  for (const auto& [i, m] : b.exceptional) out.exceptional[i] += m;
  out.half_expected = a.half_expected + b.half_expected;
  return out;
}

std::pair<Rat, Rat> half_class(const PairingTable& t,
                               const std::vector<int>& subset) {
  std::set<int> seen;
  LatticeClass l;
  for (int i : subset) {
    require(i >= 1 && i <= t.node_count(), ErrorKind::Config,
            "node index out of range");
    require(seen.insert(i).second, ErrorKind::Config,
            "repeated node index " + std::to_string(i));
    l += LatticeClass::node(i, Rat(1) / 2);
  }
  return {intersect(t, l, l), intersect(t, l, t.canonical())};
}

}  // namespace planecover
