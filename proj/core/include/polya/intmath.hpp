#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "polya/abelian.hpp"

namespace polya {

Int floor_mod(Int a, Int m);
Int floor_div(Int a, Int b);
Int mul_mod(Int a, Int b, Int m);
Int pow_mod(Int a, std::uint64_t e, Int m);
Int inv_mod(Int a, Int m);  // throws std::domain_error if not invertible
Int checked_mul(Int a, Int b);
Int checked_add(Int a, Int b);
Int ipow(Int base, int exp);
Int isqrt(Int n);  // floor(sqrt(n)), n >= 0
bool is_square(Int n);
bool is_prime(Int n);
std::vector<Int> primes_up_to(Int n);
// Prime factorisation of |n| by trial division, ascending primes.
std::vector<std::pair<Int, int>> factorize(Int n);
// (p, k) if q = p^k with p prime, otherwise nullopt-like {0, 0}.
std::pair<Int, int> prime_power(Int q);

}  // namespace polya
