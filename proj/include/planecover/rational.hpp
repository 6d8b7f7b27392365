#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "planecover/error.hpp"

namespace planecover {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Accepts "p" or "p/q" with optional sign and surrounding whitespace;
// q must be nonzero. No floats. Throws Config on anything else.
Rat parse_rational(const std::string& text);

// "p" when the denominator is 1, else "p/q" with q > 0.
std::string format_rational(const Rat& r);

// n = root^2 * squarefree with sign(squarefree) = sign(n).
// Certified by trial division below 10^6: the remaining cofactor has no
// prime factor below that bound, so if it is not a perfect square and is
// below 10^18 it has at most two prime factors and is squarefree.
// Cofactors that resist both tests raise UnsupportedField.
struct SquarefreeSplit {
  Int root;        // > 0
  Int squarefree;  // squarefree, same sign as the input
};
SquarefreeSplit squarefree_split(const Int& n);  // n != 0

// r = root^2 * squarefree with rational root > 0 and squarefree integer.
struct RatSquarefreeSplit {
  Rat root;
  Int squarefree;
};
RatSquarefreeSplit squarefree_split(const Rat& r);  // r != 0

// True iff r is the square of a rational; fills *root with the
// nonnegative square root when given.
bool is_rational_square(const Rat& r, Rat* root = nullptr);

}  // namespace planecover
