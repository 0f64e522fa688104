#pragma once

#include <string>
#include <string_view>

#include "polya/abelian.hpp"

namespace polya {

// Monic x^3 + a2 x^2 + a1 x + a0.
struct CubicPoly {
  Int a2 = 0;
  Int a1 = 0;
  Int a0 = 0;

  // Accepts "x^3 + a*x^2 + b*x + c" (any spacing, '*' optional, terms in any
  // order) or the triple form "a2,a1,a0". Throws ParseError otherwise,
  // including for non-monic or non-cubic input.
  static CubicPoly parse(std::string_view text);

  Int eval(Int x) const;
  std::string to_string() const;

  friend bool operator==(const CubicPoly&, const CubicPoly&) = default;
};

Int discriminant(const CubicPoly& f);
bool is_irreducible(const CubicPoly& f);
// Cyclic cubic: the discriminant is a perfect square.
bool is_galois_cubic(const CubicPoly& f);

}  // namespace polya
