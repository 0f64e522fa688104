#pragma once

#include <boost/rational.hpp>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polya/abelian.hpp"
#include "polya/permgroup.hpp"

namespace polya {

using Rational = boost::rational<Int>;

// Residue degrees and ramification indices of the primes over p, as
// (f, e) pairs sorted ascending.
struct SplittingType {
  std::vector<std::pair<int, int>> parts;

  // "1+2", "3", "1+1+1"; ramified parts carry "^e", e.g. "1^3".
  std::string to_string() const;
  static SplittingType parse(const std::string& text);
  int degree() const;  // sum of e*f
  bool unramified() const;

  friend auto operator<=>(const SplittingType&, const SplittingType&) = default;
  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

// H / H' with the projection H -> H/H'.
class Abelianization {
 public:
  explicit Abelianization(PermGroup H);

  const AbelianGroup& group() const { return quotient_.group(); }
  const PermGroup& subgroup() const { return H_; }
  const PermGroup& derived() const { return derived_; }
  std::vector<Int> project(const Perm& h) const;

 private:
  PermGroup H_;
  PermGroup derived_;
  CosetAction cosets_;                         // right cosets of H' in H
  std::vector<std::vector<Int>> coset_words_;  // generator exponents per coset
  AbelianQuotient quotient_;
};

Abelianization abelianization(const PermGroup& H);

// Cycle lengths of g on the coset space, each with e = 1.
SplittingType splitting_from_frobenius(const Perm& g, const CosetAction& action);

// Class in H/H' of the product over the cycles of length f of s g^f s^-1,
// with s the cycle's representative. Identity class if no cycle has length f.
std::vector<Int> pi_class(const Perm& g, int f, const CosetAction& action, const Abelianization& ab);
// Same with caller-chosen representatives (one per cycle, in cycle_structure order).
std::vector<Int> pi_class(const Perm& g, int f, const std::vector<CosetCycle>& cycles, const Abelianization& ab);

// Product over all cycles: the transfer of g into H/H'.
std::vector<Int> total_class(const Perm& g, const CosetAction& action, const Abelianization& ab);

// Proportion of elements of G with each cycle type on the coset space.
std::map<SplittingType, Rational> chebotarev_densities(const PermGroup& G, const CosetAction& action);

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace polya
