#include "polya/intmath.hpp"

#include <cmath>
#include <stdexcept>

namespace polya {

Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mul_mod(Int a, Int b, Int m) {
  return static_cast<Int>(floor_mod(static_cast<Int>((static_cast<__int128>(a) * b) % m), m));
}

Int pow_mod(Int a, std::uint64_t e, Int m) {
  if (m == 1) return 0;
  Int base = floor_mod(a, m), acc = 1;
  while (e) {
    if (e & 1) acc = mul_mod(acc, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return acc;
}

Int inv_mod(Int a, Int m) {
  Int g = m, x = 0, x1 = 1, a1 = floor_mod(a, m);
  while (a1) {
    Int q = g / a1;
    Int t = g - q * a1;
    g = a1;
    a1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw std::domain_error("element not invertible");
  return floor_mod(x, m);
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

Int ipow(Int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

Int isqrt(Int n) {
  if (n < 0) throw std::domain_error("isqrt of negative number");
  Int r = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(Int n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  Int d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // Deterministic for 64-bit inputs.
  for (Int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = pow_mod(a, static_cast<std::uint64_t>(d), n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<Int> primes_up_to(Int n) {
  std::vector<Int> out;
  if (n < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(n + 1), true);
  for (Int i = 2; i <= n; ++i) {
    if (!sieve[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (Int j = i * i; j <= n; j += i) sieve[static_cast<std::size_t>(j)] = false;
  }
  return out;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n == 0) throw std::domain_error("cannot factorise zero");
  std::vector<std::pair<Int, int>> out;
  Int m = n < 0 ? -n : n;
  for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p) continue;
    int k = 0;
    while (m % p == 0) m /= p, ++k;
    out.emplace_back(p, k);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::pair<Int, int> prime_power(Int q) {
  if (q < 2) return {0, 0};
  auto f = factorize(q);
  if (f.size() != 1) return {0, 0};
  return f.front();
}

}  // namespace polya
