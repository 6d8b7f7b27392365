#include "planecover/z2r_group.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>

namespace planecover {
namespace {

void check_rank(int r) {
  require(r >= 1 && r <= 8, ErrorKind::Dimension,
          "group rank out of range: " + std::to_string(r));
}

void check_bits(int r, std::uint32_t bits) {
  check_rank(r);
  require(bits < (1u << r), ErrorKind::Dimension, "element bits exceed rank");
}

std::string bits_name(int r, std::uint32_t bits) {
  if (bits == 0) return "Id";
  std::string out;
  for (int i = 0; i < r; ++i) {
    if (!(bits & (1u << i))) continue;
    if (r <= 3)
      out += static_cast<char>('x' + i);
    else
      out += "g" + std::to_string(i + 1);
  }
  return out;
}

}  // namespace

GroupElement group_element(int r, std::uint32_t bits) {
  check_bits(r, bits);
  return {r, bits};
}

Character character(int r, std::uint32_t bits) {
  check_bits(r, bits);
  return {r, bits};
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  require(a.r == b.r, ErrorKind::Dimension, "group rank mismatch");
  return {a.r, a.bits ^ b.bits};
}

Character compose(const Character& a, const Character& b) {
  require(a.r == b.r, ErrorKind::Dimension, "character rank mismatch");
  return {a.r, a.bits ^ b.bits};
}

int char_eval(const Character& chi, const GroupElement& sigma) {
  require(chi.r == sigma.r, ErrorKind::Dimension,
          "character/element rank mismatch");
  return (std::popcount(chi.bits & sigma.bits) % 2) ? -1 : 1;
}

GroupElement parse_group_element(int r, const std::string& name) {
  check_rank(r);
  if (name == "Id" || name == "id" || name == "1" || name == "e")
    return {r, 0};
  std::uint32_t bits = 0;
  if (r <= 3) {
    for (char ch : name) {
      if (ch == '*' || ch == ' ') continue;
      int i = ch - 'x';
      require(i >= 0 && i < r, ErrorKind::Config,
              "unknown generator '" + std::string(1, ch) + "' in '" + name + "'");
      std::uint32_t bit = 1u << i;
      require(!(bits & bit), ErrorKind::Config,
              "repeated generator in '" + name + "'");
      bits |= bit;
    }
  } else {
    std::size_t i = 0;
    while (i < name.size()) {
      require(name[i] == 'g', ErrorKind::Config, "bad element name '" + name + "'");
      ++i;
      std::size_t j = i;
      while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j])))
        ++j;
      require(j > i, ErrorKind::Config, "bad element name '" + name + "'");
      int idx = std::stoi(name.substr(i, j - i)) - 1;
      require(idx >= 0 && idx < r, ErrorKind::Config,
              "generator index out of range in '" + name + "'");
      std::uint32_t bit = 1u << idx;
      require(!(bits & bit), ErrorKind::Config,
              "repeated generator in '" + name + "'");
      bits |= bit;
      i = j;
    }
  }
  require(bits != 0, ErrorKind::Config, "empty element name '" + name + "'");
  return {r, bits};
}

std::string element_name(const GroupElement& e) { return bits_name(e.r, e.bits); }

std::string character_name(const Character& c) {
  if (c.bits == 0) return "chi_Id";
  return "chi_" + bits_name(c.r, c.bits);
}

std::vector<GroupElement> all_elements(int r) {
  check_rank(r);
  std::vector<GroupElement> out;
  for (std::uint32_t b = (1u << r); b-- > 0;) out.push_back({r, b});
  return out;
}

std::vector<Character> all_characters(int r) {
  check_rank(r);
  std::vector<Character> out;
  for (std::uint32_t b = (1u << r); b-- > 0;) out.push_back({r, b});
  return out;
}

CharacterTable character_table(int r) {
  check_rank(r);
  CharacterTable t;
  t.r = r;
  t.rows = all_elements(r);
  t.cols = all_characters(r);
  t.signs.resize(t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    t.signs[i].resize(t.cols.size());
    for (std::size_t j = 0; j < t.cols.size(); ++j)
      t.signs[i][j] = char_eval(t.cols[j], t.rows[i]);
  }
  return t;
}

std::vector<GroupElement> subgroup_generated(int r,
                                             const std::vector<GroupElement>& gens) {
  check_rank(r);
  std::set<std::uint32_t> closure = {0};
  for (const auto& g : gens) {
    require(g.r == r, ErrorKind::Dimension, "generator rank mismatch");
    std::set<std::uint32_t> next = closure;
    for (std::uint32_t b : closure) next.insert(b ^ g.bits);
    closure.swap(next);
  }
  std::vector<GroupElement> out;
  for (std::uint32_t b : closure) out.push_back({r, b});
  return out;
}

std::vector<Character> characters_trivial_on(int r,
                                             const std::vector<GroupElement>& subgroup) {
  check_rank(r);
  std::vector<Character> out;
  for (std::uint32_t b = 0; b < (1u << r); ++b) {
    Character c{r, b};
    bool trivial = true;
    for (const auto& s : subgroup)
      if (char_eval(c, s) != 1) {
        trivial = false;
        break;
      }
    if (trivial) out.push_back(c);
  }
  return out;
}

std::vector<GroupElement> coset_labels(int r,
                                       const std::vector<GroupElement>& subgroup) {
  check_rank(r);
  std::set<std::uint32_t> sub;
  for (const auto& s : subgroup) sub.insert(s.bits);
  std::vector<GroupElement> out;
  std::set<std::uint32_t> seen;
  for (std::uint32_t b = 0; b < (1u << r); ++b) {
    if (seen.count(b)) continue;
    out.push_back({r, b});  // b is minimal in its coset: smaller values seen
    for (std::uint32_t s : sub) seen.insert(b ^ s);
  }
  return out;
}

}  // namespace planecover
