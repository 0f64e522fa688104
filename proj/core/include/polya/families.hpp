#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polya/perm.hpp"
#include "polya/permgroup.hpp"

namespace polya {

// A group given by generators on `degree` points, with a display name.
struct GroupPresentation {
  std::string name;
  int degree = 0;
  std::vector<Perm> generators;

  PermGroup build(std::size_t max_order = kDefaultMaxGroupOrder) const {
    return PermGroup::generate(degree, generators, max_order);
  }
};

// Symbolic families on n points: 'S', 'A', 'D' (dihedral, order 2n), 'C'.
GroupPresentation family_group(char family, int n);

// "S5", "A4", "D4", "C7" or "F20" (5-cycle plus a 4-cycle normalising it).
GroupPresentation named_group(std::string_view token);

// Text format: a `degree=<n>` line followed by one generator per line in
// 1-indexed cycle notation. Blank lines and '#' comments are ignored. A
// single symbolic token (e.g. "S5") is also accepted.
GroupPresentation parse_group_text(std::string_view text, std::string name = "file");

std::string format_group_text(const GroupPresentation& group);

}  // namespace polya
