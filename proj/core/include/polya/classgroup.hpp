#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polya/artin.hpp"
#include "polya/ideal.hpp"
#include "polya/lattice.hpp"

namespace polya {

// (4/pi)^r2 * (3!/3^3) * sqrt|d_K|, rounded up: 4/pi is replaced by 637/500
// and the square root by a decimal upper bound.
Rational minkowski_bound(const MaximalOrder& O);

struct ClassGroupOptions {
  int initial_budget = 4;  // half-width of the first coefficient box
  int max_budget = 32;
  PrincipalSearch principal{};
};

// A principal factor-base prime together with its generator.
struct PrincipalCertificate {
  std::string label;
  Elem generator{};
};

// All primes over rational p <= floor(Minkowski bound), in harvest order.
struct FactorBase {
  std::vector<Int> rational_primes;
  std::vector<PrimeIdeal> primes;
  // primes over rational_primes[i] occupy [offsets[i], offsets[i + 1]).
  std::vector<std::size_t> offsets{0};
  std::size_t size() const { return primes.size(); }
  std::optional<std::size_t> find(const std::string& label) const;
};

FactorBase factor_base(const MaximalOrder& O, Int bound);

// Exponent vector of alpha * O_K over the factor base, or nullopt if the norm
// is not smooth over it.
std::optional<std::vector<Int>> factor_base_relation(const MaximalOrder& O, const FactorBase& fb, const Elem& alpha);

// Invariant factors of the quotient of Z^fb by the relations harvested at a
// fixed box half-width (split primes, certificates and the coefficient box),
// or nullopt when those relations are not of full rank.
std::optional<std::vector<Int>> harvest_invariants(const MaximalOrder& O, int budget, const ClassGroupOptions& opts = {});

class ClassGroup {
 public:
  // Throws Inconclusive when the invariants do not stabilise by max_budget.
  static ClassGroup compute(const MaximalOrder& O, const ClassGroupOptions& opts = {});

  const MaximalOrder& order() const { return O_; }
  const AbelianGroup& group() const { return quotient_.group(); }
  Int class_number() const { return group().order(); }
  const Rational& minkowski() const { return minkowski_; }
  const FactorBase& factor_base() const { return fb_; }
  // Labels of factor-base primes of norm <= the Minkowski bound.
  const std::vector<std::string>& generators() const { return generators_; }
  std::map<std::string, std::vector<Int>> generator_classes() const;
  const std::vector<PrincipalCertificate>& certificates() const { return certificates_; }
  // Budget at which the invariants agreed with those at twice the budget.
  int stable_budget() const { return stable_budget_; }
  std::size_t relations() const { return relations_; }

  std::vector<Int> class_of_exponents(const std::vector<Int>& exponents) const { return quotient_.image(exponents); }
  // Any prime: factor-base primes directly, others by finding an element of
  // P whose cofactor is smooth over the factor base.
  std::vector<Int> class_of_prime(const PrimeIdeal& P) const;

 private:
  ClassGroup(const MaximalOrder& O) : O_(O) {}
  MaximalOrder O_;
  Rational minkowski_;
  FactorBase fb_;
  std::vector<std::string> generators_;
  std::vector<PrincipalCertificate> certificates_;
  AbelianQuotient quotient_;
  int stable_budget_ = 0;
  std::size_t relations_ = 0;
  PrincipalSearch principal_;
};

}  // namespace polya
