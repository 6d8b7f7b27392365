#include "planecover/rational.hpp"

#include <cctype>

namespace planecover {
namespace {

bool parse_integer(const std::string& s, Int* out) {
  std::size_t i = 0, n = s.size();
  while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  std::size_t end = n;
  while (end > i && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  if (i == end) return false;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  if (i == end) return false;
  Int value = 0;
  for (; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    value = value * 10 + (s[i] - '0');
  }
  *out = neg ? Int(-value) : value;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    Int n;
    if (!parse_integer(text, &n))
      fail(ErrorKind::Config, "not a rational: '" + text + "'");
    return Rat(n);
  }
  if (text.find('/', slash + 1) != std::string::npos)
    fail(ErrorKind::Config, "not a rational: '" + text + "'");
  Int num, den;
  if (!parse_integer(text.substr(0, slash), &num) ||
      !parse_integer(text.substr(slash + 1), &den))
    fail(ErrorKind::Config, "not a rational: '" + text + "'");
  if (den == 0) fail(ErrorKind::Config, "zero denominator: '" + text + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

std::string format_rational(const Rat& r) {
  Int n = rat_num(r), d = rat_den(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

SquarefreeSplit squarefree_split(const Int& n) {
  require(n != 0, ErrorKind::Internal, "squarefree_split of zero");
  Int m = boost::multiprecision::abs(n);
  Int root = 1, sqfree = 1;
  constexpr long kTrialBound = 1000000;
  for (Int p = 2; p <= kTrialBound && p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2) sqfree *= p;
  }
  if (m > 1) {
    Int s = boost::multiprecision::sqrt(m);
    if (s * s == m) {
      root *= s;
    } else if (m < Int("1000000000000000000")) {
      // No prime factor below 10^6 and below 10^18: at most two primes,
      // not a square, hence squarefree.
      sqfree *= m;
    } else {
      fail(ErrorKind::UnsupportedField,
           "cannot certify squarefree part of " + n.str());
    }
  }
  if (n < 0) sqfree = -sqfree;
  return {root, sqfree};
}

RatSquarefreeSplit squarefree_split(const Rat& r) {
  require(r != 0, ErrorKind::Internal, "squarefree_split of zero");
  SquarefreeSplit num = squarefree_split(rat_num(r));
  SquarefreeSplit den = squarefree_split(rat_den(r));
  // r = (num.root/den.root)^2 * num.sf/den.sf; clear the denominator's
  // squarefree part: 1/den.sf = den.sf/den.sf^2.
  Int g = boost::multiprecision::gcd(boost::multiprecision::abs(num.squarefree),
                                     den.squarefree);
  Rat root = Rat(num.root * g, den.root * den.squarefree);
  if (root < 0) root = -root;
  Int sqfree = (num.squarefree / g) * (den.squarefree / g);
  return {root, sqfree};
}

bool is_rational_square(const Rat& r, Rat* root) {
  if (r == 0) {
    if (root) *root = 0;
    return true;
  }
  if (r < 0) return false;
  Int n = rat_num(r), d = rat_den(r);
  Int sn = boost::multiprecision::sqrt(n);
  Int sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  if (root) *root = Rat(sn, sd);
  return true;
}

}  // namespace planecover
