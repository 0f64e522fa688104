#include "polya/classgroup.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polya/errors.hpp"
#include "polya/intmath.hpp"

namespace polya {

namespace {

Int sqrt_upper_scale(Int n, Int& scale) {
  if (is_square(n)) {
    scale = 1;
    return isqrt(n);
  }
  scale = 1000;
  if (n > INT64_MAX / 1'000'000) scale = 1;
  return isqrt(n * scale * scale) + 1;
}

// Exponents of alpha * O_K over the factor base, given the smooth part m of
// its norm; nullopt if m has a prime factor outside the base.
std::optional<std::vector<Int>> exponents_for(const MaximalOrder& O, const FactorBase& fb, const Elem& alpha, Int m) {
  std::vector<Int> v(fb.size(), 0);
  for (std::size_t r = 0; r < fb.rational_primes.size() && m > 1; ++r) {
    const Int q = fb.rational_primes[r];
    if (m % q) continue;
    Int k = 0;
    while (m % q == 0) m /= q, ++k;
    const std::size_t lo = fb.offsets[r], hi = fb.offsets[r + 1];
    if (hi - lo == 1) {
      const int f = fb.primes[lo].f;
      if (k % f != 0) throw std::logic_error("norm exponent incompatible with residue degree");
      v[lo] = k / f;
      continue;
    }
    Int total = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      v[i] = valuation(O, fb.primes[i], alpha);
      total += v[i] * fb.primes[i].f;
    }
    if (total != k) throw std::logic_error("valuations do not account for the norm");
  }
  if (m != 1) return std::nullopt;
  return v;
}

class Harvester {
 public:
  Harvester(const MaximalOrder& O, const FactorBase& fb)
      : O_(O), fb_(fb), lattice_(fb.size()), basis_(lll_reduce(O, {Elem{1, 0, 0}, Elem{0, 1, 0}, Elem{0, 0, 1}})) {}

  void split_primes() {
    for (std::size_t r = 0; r < fb_.rational_primes.size(); ++r) {
      std::vector<Int> rel(fb_.size(), 0);
      for (std::size_t i = fb_.offsets[r]; i < fb_.offsets[r + 1]; ++i) rel[i] = fb_.primes[i].e;
      lattice_.add(rel);
    }
  }

  void certificates(const PrincipalSearch& opts) {
    for (std::size_t i = 0; i < fb_.size(); ++i) {
      std::optional<Elem> g;
      try {
        g = find_generator(O_, fb_.primes[i].ideal, opts);
      } catch (const BudgetExceeded&) {
        continue;
      }
      if (!g) continue;
      certs_.push_back({fb_.primes[i].label, *g});
      std::vector<Int> rel(fb_.size(), 0);
      rel[i] = 1;
      lattice_.add(rel);
    }
  }

  // Coefficient vectors over the reduced basis with inner < max|c| <= outer,
  // lexicographic, one of each pair +-c.
  void box(int inner, int outer, bool stop_when_trivial) {
    for (Int a = 0; a <= outer; ++a)
      for (Int b = (a == 0 ? 0 : -outer); b <= outer; ++b)
        for (Int c = (a == 0 && b == 0 ? 1 : -outer); c <= outer; ++c) {
          if (std::max({a, b < 0 ? -b : b, c < 0 ? -c : c}) <= inner) continue;
          Elem alpha{0, 0, 0};
          for (std::size_t k = 0; k < 3; ++k)
            alpha[k] = checked_add(checked_add(checked_mul(a, basis_[0][k]), checked_mul(b, basis_[1][k])),
                                   checked_mul(c, basis_[2][k]));
          Int n = O_.norm(alpha);
          if (n < 0) n = -n;
          if (n <= 1) continue;
          auto rel = exponents_for(O_, fb_, alpha, n);
          if (!rel) continue;
          lattice_.add(*rel);
          if (stop_when_trivial && trivial()) return;
        }
  }

  bool trivial() const {
    auto i = lattice_.index();
    return i && *i == 1;
  }

  std::optional<std::vector<Int>> invariants() const {
    if (!lattice_.full_rank()) return std::nullopt;
    return lattice_.quotient().group().invariant_factors();
  }

  const RelationLattice& lattice() const { return lattice_; }
  std::vector<PrincipalCertificate>& certs() { return certs_; }

 private:
  const MaximalOrder& O_;
  const FactorBase& fb_;
  RelationLattice lattice_;
  ElemMat basis_;
  std::vector<PrincipalCertificate> certs_;
};

}  // namespace

Rational minkowski_bound(const MaximalOrder& O) {
  Int d = O.discriminant();
  if (d < 0) d = -d;
  Int scale = 1;
  Int root = sqrt_upper_scale(d, scale);
  Rational m(2 * root, 9 * scale);
  for (int i = 0; i < O.r2(); ++i) m *= Rational(637, 500);
  return m;
}

std::optional<std::size_t> FactorBase::find(const std::string& label) const {
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (primes[i].label == label) return i;
  return std::nullopt;
}

FactorBase factor_base(const MaximalOrder& O, Int bound) {
  FactorBase fb;
  for (Int p : primes_up_to(bound)) {
    fb.rational_primes.push_back(p);
    for (auto& P : factor_prime(O, p)) fb.primes.push_back(std::move(P));
    fb.offsets.push_back(fb.primes.size());
  }
  return fb;
}

std::optional<std::vector<Int>> factor_base_relation(const MaximalOrder& O, const FactorBase& fb, const Elem& alpha) {
  Int n = O.norm(alpha);
  if (n == 0) throw std::invalid_argument("relation for zero");
  return exponents_for(O, fb, alpha, n < 0 ? -n : n);
}

std::optional<std::vector<Int>> harvest_invariants(const MaximalOrder& O, int budget, const ClassGroupOptions& opts) {
  const Rational M = minkowski_bound(O);
  const FactorBase fb = factor_base(O, M.numerator() / M.denominator());
  Harvester h(O, fb);
  h.split_primes();
  h.certificates(opts.principal);
  h.box(0, budget, false);
  return h.invariants();
}

ClassGroup ClassGroup::compute(const MaximalOrder& O, const ClassGroupOptions& opts) {
  if (opts.initial_budget < 1 || opts.max_budget < opts.initial_budget)
    throw std::invalid_argument("bad class group budgets");
  ClassGroup cg(O);
  cg.principal_ = opts.principal;
  cg.minkowski_ = minkowski_bound(O);
  cg.fb_ = polya::factor_base(O, cg.minkowski_.numerator() / cg.minkowski_.denominator());
  for (const auto& P : cg.fb_.primes)
    if (Rational(P.norm()) <= cg.minkowski_) cg.generators_.push_back(P.label);

  Harvester h(cg.O_, cg.fb_);
  h.split_primes();
  h.certificates(opts.principal);
  bool stable = h.trivial();
  if (!stable) {
    std::optional<std::vector<Int>> prev;
    int inner = 0;
    for (int budget = opts.initial_budget; budget <= opts.max_budget; budget *= 2) {
      h.box(inner, budget, true);
      inner = budget;
      if (h.trivial()) {
        cg.stable_budget_ = budget;
        stable = true;
        break;
      }
      auto cur = h.invariants();
      if (prev && cur && *prev == *cur) {
        cg.stable_budget_ = budget / 2;
        stable = true;
        break;
      }
      prev = std::move(cur);
    }
  }
  if (!stable)
    throw Inconclusive("class group relations did not stabilise by box half-width " + std::to_string(opts.max_budget));
  cg.quotient_ = h.lattice().quotient();
  cg.relations_ = h.lattice().relations_added();
  cg.certificates_ = std::move(h.certs());
  return cg;
}

std::map<std::string, std::vector<Int>> ClassGroup::generator_classes() const {
  std::map<std::string, std::vector<Int>> out;
  for (std::size_t i = 0; i < fb_.size(); ++i) out[fb_.primes[i].label] = quotient_.image_of_generator(i);
  return out;
}

std::vector<Int> ClassGroup::class_of_prime(const PrimeIdeal& P) const {
  if (group().is_trivial()) return {};
  if (auto i = fb_.find(P.label); i && fb_.primes[*i] == P) return quotient_.image_of_generator(*i);
  const Int np = P.norm();
  const ElemMat basis = lll_reduce(O_, P.ideal.hnf());
  double bound = generator_search_bound(O_, np, 1.0);
  for (int round = 0; round < 6; ++round, bound *= 4) {
    std::optional<std::vector<Int>> rel;
    enumerate_short(O_, basis, bound, principal_.max_nodes, [&](const Elem& a, double) {
      Int n = O_.norm(a);
      if (n < 0) n = -n;
      if (n % np != 0) return true;
      Int m = n / np;
      if (m % P.p == 0) return true;
      rel = exponents_for(O_, fb_, a, m);
      return !rel.has_value();
    });
    if (rel) return group().neg(quotient_.image(*rel));
  }
  throw Inconclusive("no smooth element found for prime " + P.label);
}

}  // namespace polya
