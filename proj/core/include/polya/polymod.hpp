#pragma once

#include <utility>
#include <vector>

#include "polya/abelian.hpp"

namespace polya::fp {

// Dense polynomial over F_p, coefficients low degree first, no trailing zeros.
using Poly = std::vector<Int>;

Poly normalize(Poly a, Int p);
int degree(const Poly& a);  // -1 for zero
Poly add(const Poly& a, const Poly& b, Int p);
Poly sub(const Poly& a, const Poly& b, Int p);
Poly mul(const Poly& a, const Poly& b, Int p);
// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, Int p);
Poly monic(const Poly& a, Int p);
Poly gcd(Poly a, Poly b, Int p);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus, Int p);
Int eval(const Poly& a, Int x, Int p);

// Distinct roots in F_p, ascending.
std::vector<Int> roots(const Poly& a, Int p);

// Factorisation of a polynomial of degree <= 3 into monic irreducibles with
// multiplicities, sorted by (degree, coefficients).
std::vector<std::pair<Poly, int>> factor_small(const Poly& a, Int p);

}  // namespace polya::fp
