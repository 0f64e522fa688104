#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polya/classgroup.hpp"

namespace polya {

inline constexpr Int kDefaultPrimeBound = 200;

// Pi_q(K): the product of all primes of norm exactly q (O_K if there are none).
struct PiIdeal {
  Int q = 1;
  Int p = 0;  // 0 when q is not a prime power
  int f = 0;
  std::vector<PrimeIdeal> primes;
  Ideal ideal;
};

PiIdeal pi_ideal(const MaximalOrder& O, Int q);
// Pi_{p^f} from a factorisation of p already at hand.
PiIdeal pi_ideal(const MaximalOrder& O, Int p, int f, const std::vector<PrimeIdeal>& over_p);

enum class PolyaVariant { all, nr, nr1 };
std::string to_string(PolyaVariant v);

// Class of one non-trivial Pi_{p^f}, p at most the prime bound.
struct PiClass {
  Int p = 0;
  int f = 0;
  bool ramified = false;
  std::vector<std::string> primes;  // labels
  std::vector<Int> cls;

  friend bool operator==(const PiClass&, const PiClass&) = default;
};

// Every non-trivial Pi_{p^f} with p <= prime_bound, ordered by (p, f).
std::vector<PiClass> pi_classes(const ClassGroup& cl, Int prime_bound);

struct PolyaSubgroup {
  PolyaVariant variant = PolyaVariant::all;
  Int order = 1;
  std::vector<std::pair<Int, int>> used;  // (p, f) whose classes generate

  friend bool operator==(const PolyaSubgroup&, const PolyaSubgroup&) = default;
};

PolyaSubgroup polya_group(const ClassGroup& cl, const std::vector<PiClass>& table, PolyaVariant v);
PolyaSubgroup polya_group(const ClassGroup& cl, Int prime_bound, PolyaVariant v);

// Least B such that the unramified Pi_p with p <= B generate Cl(K), if some
// B <= prime_bound works.
std::optional<Int> nr1_generation_bound(const ClassGroup& cl, const std::vector<PiClass>& table);

// Every unramified Pi_{p^f}, p <= prime_bound, tested for a generator directly.
struct OstrowskiCheck {
  Int primes_checked = 0;
  Int ideals_checked = 0;
  bool all_principal = true;
  std::vector<std::pair<Int, int>> failures;

  friend bool operator==(const OstrowskiCheck&, const OstrowskiCheck&) = default;
};

OstrowskiCheck ostrowski_check(const MaximalOrder& O, Int prime_bound, const PrincipalSearch& opts = {});

struct Witness {
  std::string label;
  Elem generator{};
  std::string element;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct PolyaReport {
  std::string polynomial;
  std::array<Int, 3> coefficients{};  // a2, a1, a0
  Int poly_discriminant = 0;
  Int field_discriminant = 0;
  Int index = 1;
  int r1 = 0;
  int r2 = 0;
  bool galois = false;
  std::vector<std::string> integral_basis;
  std::string minkowski_bound;

  std::vector<Int> invariant_factors;
  Int class_number = 1;
  std::vector<std::string> generators;
  std::map<std::string, std::vector<Int>> generator_classes;
  int stable_budget = 0;
  std::vector<Witness> witnesses;

  Int prime_bound = kDefaultPrimeBound;
  std::vector<PiClass> pi_classes;
  PolyaSubgroup po;
  PolyaSubgroup po_nr;
  PolyaSubgroup po_nr1;
  bool cl_eq_po = false;
  bool po_eq_po_nr = false;
  bool po_nr_eq_po_nr1 = false;
  bool cl_eq_po_nr1 = false;
  std::optional<Int> nr1_bound;
  std::optional<OstrowskiCheck> ostrowski;
  // "verified", "undetermined at bound B" or "galois"
  std::string status;

  bool all_equal() const { return cl_eq_po && po_eq_po_nr && po_nr_eq_po_nr1 && cl_eq_po_nr1; }
  friend bool operator==(const PolyaReport&, const PolyaReport&) = default;
};

// Cl(K), Po(K), Po(K)_nr and Po(K)_nr1 with the equality flags. Requires a
// non-Galois field (std::invalid_argument otherwise).
PolyaReport verify_main_theorem(const MaximalOrder& O, Int prime_bound = kDefaultPrimeBound,
                                const ClassGroupOptions& opts = {});
// Any field: Galois fields get the Ostrowski check and status "galois".
PolyaReport analyze_field(const MaximalOrder& O, Int prime_bound = kDefaultPrimeBound,
                          const ClassGroupOptions& opts = {});

SplittingType splitting_type_of(const MaximalOrder& O, Int p);

struct CensusRow {
  SplittingType type;
  Int count = 0;
  double frequency = 0;
  Rational predicted{0};
  double deviation = 0;
};

// Splitting types of unramified p <= prime_bound against the densities of
// S3 (or C3 for Galois fields) acting on three points.
std::vector<CensusRow> splitting_census(const MaximalOrder& O, Int prime_bound);
std::map<SplittingType, Rational> predicted_densities(const MaximalOrder& O);

}  // namespace polya
