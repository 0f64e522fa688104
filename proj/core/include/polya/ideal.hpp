#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "polya/artin.hpp"
#include "polya/intmath.hpp"
#include "polya/order.hpp"

namespace polya {

// Nonzero integral ideal of O_K, stored as the upper-triangular Hermite
// basis (rows in integral-basis coordinates).
class Ideal {
 public:
  Ideal();  // the unit ideal

  // O_K-module generated by gens; `multiple` is a positive integer known to lie
  // in the ideal (used as the reduction modulus).
  static Ideal generated(const MaximalOrder& O, std::span<const Elem> gens, Int multiple);
  // Z-span of rows plus multiple * O_K; rows must already span an ideal.
  static Ideal from_lattice(std::span<const Elem> rows, Int multiple);
  static Ideal principal(const MaximalOrder& O, const Elem& alpha);
  static Ideal rational(Int n);

  const ElemMat& hnf() const { return hnf_; }
  Int norm() const;
  bool is_unit() const { return norm() == 1; }
  bool contains(const Elem& a) const;
  // Smallest positive integer in the ideal.
  Int minimum() const;
  std::string to_string() const;

  friend bool operator==(const Ideal&, const Ideal&) = default;
  friend auto operator<=>(const Ideal&, const Ideal&) = default;

 private:
  explicit Ideal(const ElemMat& h) : hnf_(h) {}
  ElemMat hnf_;
};

Ideal multiply(const MaximalOrder& O, const Ideal& a, const Ideal& b);
Ideal power(const MaximalOrder& O, const Ideal& a, unsigned k);
// Closure check: the lattice is stable under multiplication by O_K.
bool is_ideal_lattice(const MaximalOrder& O, const ElemMat& hnf);

struct PrimeIdeal {
  Int p = 0;
  int f = 0;  // residue degree
  int e = 0;  // ramification index
  Ideal ideal;
  Elem generator{};  // ideal = (p, generator)
  // g with generator = g(t), low degree first; filled on the Kummer-Dedekind route only.
  std::vector<Int> generator_poly;
  Elem uniformizer_helper{};  // a with a * P subset pO and a not in pO
  std::string label;  // e.g. "7a", ordered by (f, e, hnf) among primes over p

  Int norm() const { return ipow(p, f); }
  friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) { return a.ideal == b.ideal; }
};

// Primes of O_K above the rational prime p. Uses Kummer-Dedekind when p does
// not divide the index and the structure of O_K/pO_K otherwise.
std::vector<PrimeIdeal> factor_prime(const MaximalOrder& O, Int p);
// Kummer-Dedekind only; throws std::domain_error if p divides the index.
std::vector<PrimeIdeal> factor_prime_dedekind(const MaximalOrder& O, Int p);
// Radical and idempotent decomposition of O_K/pO_K; valid for every p.
std::vector<PrimeIdeal> factor_prime_algebra(const MaximalOrder& O, Int p);

// v_P(alpha) for nonzero alpha.
int valuation(const MaximalOrder& O, const PrimeIdeal& P, Elem alpha);

SplittingType splitting_type(const std::vector<PrimeIdeal>& primes);

}  // namespace polya
