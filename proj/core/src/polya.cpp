#include "polya/polya.hpp"

#include <algorithm>
#include <stdexcept>

#include "polya/families.hpp"
#include "polya/intmath.hpp"
#include "polya/polymod.hpp"

namespace polya {

namespace {

bool ramified_in(const MaximalOrder& O, Int p) { return O.discriminant() % p == 0; }

std::vector<Int> add_classes(const AbelianGroup& G, std::vector<Int> acc, const std::vector<Int>& x) {
  if (G.is_trivial()) return {};
  return G.add(acc, x);
}

}  // namespace

PiIdeal pi_ideal(const MaximalOrder& O, Int p, int f, const std::vector<PrimeIdeal>& over_p) {
  PiIdeal pi;
  pi.p = p;
  pi.f = f;
  pi.q = ipow(p, f);
  for (const auto& P : over_p) {
    if (P.p != p) throw std::invalid_argument("prime list is not over p");
    if (P.f != f) continue;
    pi.primes.push_back(P);
    pi.ideal = multiply(O, pi.ideal, P.ideal);
  }
  return pi;
}

PiIdeal pi_ideal(const MaximalOrder& O, Int q) {
  if (q < 1) throw std::invalid_argument("pi_ideal needs q >= 1");
  auto [p, f] = prime_power(q);
  if (p == 0) {
    PiIdeal pi;
    pi.q = q;
    return pi;
  }
  return pi_ideal(O, p, f, factor_prime(O, p));
}

std::string to_string(PolyaVariant v) {
  switch (v) {
    case PolyaVariant::all:
      return "all";
    case PolyaVariant::nr:
      return "nr";
    case PolyaVariant::nr1:
      return "nr1";
  }
  return "?";
}

std::vector<PiClass> pi_classes(const ClassGroup& cl, Int prime_bound) {
  if (prime_bound < 2) throw std::invalid_argument("prime bound must be at least 2");
  const MaximalOrder& O = cl.order();
  const AbelianGroup& G = cl.group();
  std::vector<PiClass> out;
  for (Int p : primes_up_to(prime_bound)) {
    auto over = factor_prime(O, p);
    for (int f = 1; f <= 3; ++f) {
      PiClass pc;
      pc.p = p;
      pc.f = f;
      pc.ramified = ramified_in(O, p);
      pc.cls = G.zero();
      for (const auto& P : over) {
        if (P.f != f) continue;
        pc.primes.push_back(P.label);
        pc.cls = add_classes(G, pc.cls, cl.class_of_prime(P));
      }
      if (!pc.primes.empty()) out.push_back(std::move(pc));
    }
  }
  return out;
}

namespace {

bool admits(const PiClass& pc, PolyaVariant v) {
  switch (v) {
    case PolyaVariant::all:
      return true;
    case PolyaVariant::nr:
      return !pc.ramified;
    case PolyaVariant::nr1:
      return !pc.ramified && pc.f == 1;
  }
  return false;
}

}  // namespace

PolyaSubgroup polya_group(const ClassGroup& cl, const std::vector<PiClass>& table, PolyaVariant v) {
  PolyaSubgroup sg;
  sg.variant = v;
  std::vector<std::vector<Int>> gens;
  for (const auto& pc : table) {
    if (!admits(pc, v)) continue;
    sg.used.emplace_back(pc.p, pc.f);
    gens.push_back(pc.cls);
  }
  sg.order = cl.group().is_trivial() ? 1 : cl.group().subgroup_order(gens);
  return sg;
}

PolyaSubgroup polya_group(const ClassGroup& cl, Int prime_bound, PolyaVariant v) {
  return polya_group(cl, pi_classes(cl, prime_bound), v);
}

std::optional<Int> nr1_generation_bound(const ClassGroup& cl, const std::vector<PiClass>& table) {
  const AbelianGroup& G = cl.group();
  if (G.is_trivial()) return 2;
  std::vector<std::vector<Int>> gens;
  for (const auto& pc : table) {
    if (!admits(pc, PolyaVariant::nr1)) continue;
    gens.push_back(pc.cls);
    if (G.subgroup_order(gens) == G.order()) return pc.p;
  }
  return std::nullopt;
}

OstrowskiCheck ostrowski_check(const MaximalOrder& O, Int prime_bound, const PrincipalSearch& opts) {
  OstrowskiCheck check;
  for (Int p : primes_up_to(prime_bound)) {
    if (ramified_in(O, p)) continue;
    ++check.primes_checked;
    auto over = factor_prime(O, p);
    for (int f = 1; f <= 3; ++f) {
      PiIdeal pi = pi_ideal(O, p, f, over);
      if (pi.primes.empty()) continue;
      ++check.ideals_checked;
      if (!find_generator(O, pi.ideal, opts)) {
        check.all_principal = false;
        check.failures.emplace_back(p, f);
      }
    }
  }
  return check;
}

namespace {

PolyaReport base_report(const MaximalOrder& O, Int prime_bound, const ClassGroupOptions& opts) {
  if (prime_bound < 2) throw std::invalid_argument("prime bound must be at least 2");
  PolyaReport r;
  const CubicPoly& f = O.poly();
  r.polynomial = f.to_string();
  r.coefficients = {f.a2, f.a1, f.a0};
  r.poly_discriminant = O.poly_discriminant();
  r.field_discriminant = O.discriminant();
  r.index = O.index();
  r.r1 = O.r1();
  r.r2 = O.r2();
  r.galois = is_galois_cubic(f);
  for (std::size_t i = 0; i < 3; ++i) {
    Elem w{0, 0, 0};
    w[i] = 1;
    r.integral_basis.push_back(O.format(w));
  }
  r.prime_bound = prime_bound;

  const ClassGroup cl = ClassGroup::compute(O, opts);
  r.minkowski_bound = to_string(cl.minkowski());
  r.invariant_factors = cl.group().invariant_factors();
  r.class_number = cl.class_number();
  r.generators = cl.generators();
  r.generator_classes = cl.generator_classes();
  r.stable_budget = cl.stable_budget();
  for (const auto& c : cl.certificates()) r.witnesses.push_back({c.label, c.generator, O.format(c.generator)});

  r.pi_classes = pi_classes(cl, prime_bound);
  r.po = polya_group(cl, r.pi_classes, PolyaVariant::all);
  r.po_nr = polya_group(cl, r.pi_classes, PolyaVariant::nr);
  r.po_nr1 = polya_group(cl, r.pi_classes, PolyaVariant::nr1);
  r.cl_eq_po = r.po.order == r.class_number;
  r.po_eq_po_nr = r.po.order == r.po_nr.order;
  r.po_nr_eq_po_nr1 = r.po_nr.order == r.po_nr1.order;
  r.cl_eq_po_nr1 = r.po_nr1.order == r.class_number;
  r.nr1_bound = nr1_generation_bound(cl, r.pi_classes);
  return r;
}

}  // namespace

PolyaReport verify_main_theorem(const MaximalOrder& O, Int prime_bound, const ClassGroupOptions& opts) {
  if (is_galois_cubic(O.poly())) throw std::invalid_argument("the field is Galois: " + O.poly().to_string());
  PolyaReport r = base_report(O, prime_bound, opts);
  r.status = r.all_equal() ? "verified" : "undetermined at bound " + std::to_string(prime_bound);
  return r;
}

PolyaReport analyze_field(const MaximalOrder& O, Int prime_bound, const ClassGroupOptions& opts) {
  if (!is_galois_cubic(O.poly())) return verify_main_theorem(O, prime_bound, opts);
  PolyaReport r = base_report(O, prime_bound, opts);
  r.ostrowski = ostrowski_check(O, prime_bound, opts.principal);
  r.status = "galois";
  return r;
}

SplittingType splitting_type_of(const MaximalOrder& O, Int p) {
  if (O.index() % p == 0) return splitting_type(factor_prime(O, p));
  const CubicPoly& f = O.poly();
  SplittingType t;
  for (const auto& [g, e] : fp::factor_small(fp::Poly{f.a0, f.a1, f.a2, 1}, p)) t.parts.emplace_back(fp::degree(g), e);
  std::sort(t.parts.begin(), t.parts.end());
  return t;
}

std::map<SplittingType, Rational> predicted_densities(const MaximalOrder& O) {
  const bool cyclic = is_galois_cubic(O.poly());
  PermGroup G = family_group(cyclic ? 'C' : 'S', 3).build();
  CosetAction action(G, G.stabilizer(2));
  return chebotarev_densities(G, action);
}

std::vector<CensusRow> splitting_census(const MaximalOrder& O, Int prime_bound) {
  if (prime_bound < 2) throw std::invalid_argument("prime bound must be at least 2");
  std::map<SplittingType, Int> counts;
  Int total = 0;
  for (Int p : primes_up_to(prime_bound)) {
    if (ramified_in(O, p)) continue;
    ++counts[splitting_type_of(O, p)];
    ++total;
  }
  const auto predicted = predicted_densities(O);
  std::map<SplittingType, CensusRow> rows;
  for (const auto& [t, d] : predicted) {
    rows[t].type = t;
    rows[t].predicted = d;
  }
  for (const auto& [t, c] : counts) {
    rows[t].type = t;
    rows[t].count = c;
  }
  std::vector<CensusRow> out;
  for (auto& [t, row] : rows) {
    row.frequency = total ? static_cast<double>(row.count) / static_cast<double>(total) : 0.0;
    row.deviation = std::abs(row.frequency - boost::rational_cast<double>(row.predicted));
    out.push_back(row);
  }
  return out;
}

}  // namespace polya
