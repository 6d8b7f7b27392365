#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planecover/error.hpp"

namespace planecover {

// Elements and characters of G = (Z/2)^r as r-bit masks. Bit i is the
// exponent of the i-th generator; for r <= 3 the generators are named
// x, y, z in that bit order. The group is self-dual but elements and
// characters are kept as distinct types to prevent category errors.
struct GroupElement {
  int r = 0;
  std::uint32_t bits = 0;

  bool is_identity() const { return bits == 0; }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct Character {
  int r = 0;
  std::uint32_t bits = 0;

  bool is_trivial() const { return bits == 0; }
  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;
};

GroupElement group_element(int r, std::uint32_t bits);
Character character(int r, std::uint32_t bits);

// Bitwise sum mod 2; ranks must agree.
GroupElement compose(const GroupElement& a, const GroupElement& b);
Character compose(const Character& a, const Character& b);

// (-1)^(dot product of the bit vectors); ranks must agree.
int char_eval(const Character& chi, const GroupElement& sigma);

// Generator-name parsing and printing: "xyz", "xz", "Id" (r <= 3 uses
// letters x, y, z; larger r uses g1..gr, e.g. "g1g4").
GroupElement parse_group_element(int r, const std::string& name);
std::string element_name(const GroupElement& e);
std::string character_name(const Character& c);

// All elements / characters ordered by decreasing bit value. This makes
// the r = 1 table rows read (-1, 1) for the nontrivial element and
// (1, 1) for the identity; any published variant ordering is a fixed
// permutation of this one.
std::vector<GroupElement> all_elements(int r);
std::vector<Character> all_characters(int r);

struct CharacterTable {
  int r = 0;
  std::vector<GroupElement> rows;        // decreasing bit value
  std::vector<Character> cols;           // decreasing bit value
  std::vector<std::vector<int>> signs;   // signs[i][j] = cols[j](rows[i])
};

// 2^r x 2^r sign matrix with the canonical ordering above; 1 <= r <= 8.
CharacterTable character_table(int r);

// Closure of the given elements under composition, sorted by increasing
// bit value; always contains the identity.
std::vector<GroupElement> subgroup_generated(int r,
                                             const std::vector<GroupElement>& gens);

// Characters trivial on every element of the subgroup, sorted by
// increasing bit value. Size is 2^r / |subgroup| for an actual subgroup.
std::vector<Character> characters_trivial_on(int r,
                                             const std::vector<GroupElement>& subgroup);

// One label per coset of the subgroup: the smallest bit value in each
// coset, ascending. The identity coset labels first.
std::vector<GroupElement> coset_labels(int r,
                                       const std::vector<GroupElement>& subgroup);

}  // namespace planecover
