#include "polya/report.hpp"

#include <cstdio>

namespace polya {

using nlohmann::json;

namespace {

json subgroup_json(const PolyaSubgroup& s) {
  json used = json::array();
  for (const auto& [p, f] : s.used) used.push_back({p, f});
  return {{"order", s.order}, {"generated_by", used}};
}

PolyaSubgroup subgroup_from(const json& j, PolyaVariant v) {
  PolyaSubgroup s;
  s.variant = v;
  s.order = j.at("order").get<Int>();
  for (const auto& u : j.at("generated_by")) s.used.emplace_back(u.at(0).get<Int>(), u.at(1).get<int>());
  return s;
}

std::string fixed6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

void to_json(json& j, const PolyaReport& r) {
  json pis = json::array();
  for (const auto& pc : r.pi_classes)
    pis.push_back({{"p", pc.p}, {"f", pc.f}, {"q", ipow(pc.p, pc.f)}, {"ramified", pc.ramified}, {"primes", pc.primes},
                   {"class", pc.cls}});
  json wit = json::array();
  for (const auto& w : r.witnesses) wit.push_back({{"ideal", w.label}, {"generator", w.generator}, {"element", w.element}});
  j = json{
      {"polynomial", r.polynomial},
      {"coefficients", r.coefficients},
      {"poly_discriminant", r.poly_discriminant},
      {"field_discriminant", r.field_discriminant},
      {"index", r.index},
      {"signature", {r.r1, r.r2}},
      {"galois", r.galois},
      {"integral_basis", r.integral_basis},
      {"minkowski_bound", r.minkowski_bound},
      {"class_group",
       {{"invariant_factors", r.invariant_factors},
        {"order", r.class_number},
        {"generators", r.generators},
        {"generator_classes", r.generator_classes},
        {"stable_budget", r.stable_budget}}},
      {"witnesses", wit},
      {"prime_bound", r.prime_bound},
      {"pi_classes", pis},
      {"po", subgroup_json(r.po)},
      {"po_nr", subgroup_json(r.po_nr)},
      {"po_nr1", subgroup_json(r.po_nr1)},
      {"equalities",
       {{"cl_eq_po", r.cl_eq_po},
        {"po_eq_po_nr", r.po_eq_po_nr},
        {"po_nr_eq_po_nr1", r.po_nr_eq_po_nr1},
        {"cl_eq_po_nr1", r.cl_eq_po_nr1}}},
      {"nr1_generation_bound", r.nr1_bound ? json(*r.nr1_bound) : json(nullptr)},
      {"status", r.status},
  };
  if (r.ostrowski) {
    json fails = json::array();
    for (const auto& [p, f] : r.ostrowski->failures) fails.push_back({p, f});
    j["ostrowski"] = {{"primes_checked", r.ostrowski->primes_checked},
                      {"ideals_checked", r.ostrowski->ideals_checked},
                      {"all_principal", r.ostrowski->all_principal},
                      {"failures", fails}};
  }
}

void from_json(const json& j, PolyaReport& r) {
  r = PolyaReport{};
  r.polynomial = j.at("polynomial").get<std::string>();
  r.coefficients = j.at("coefficients").get<std::array<Int, 3>>();
  r.poly_discriminant = j.at("poly_discriminant").get<Int>();
  r.field_discriminant = j.at("field_discriminant").get<Int>();
  r.index = j.at("index").get<Int>();
  r.r1 = j.at("signature").at(0).get<int>();
  r.r2 = j.at("signature").at(1).get<int>();
  r.galois = j.at("galois").get<bool>();
  r.integral_basis = j.at("integral_basis").get<std::vector<std::string>>();
  r.minkowski_bound = j.at("minkowski_bound").get<std::string>();
  const json& cg = j.at("class_group");
  r.invariant_factors = cg.at("invariant_factors").get<std::vector<Int>>();
  r.class_number = cg.at("order").get<Int>();
  r.generators = cg.at("generators").get<std::vector<std::string>>();
  r.generator_classes = cg.at("generator_classes").get<std::map<std::string, std::vector<Int>>>();
  r.stable_budget = cg.at("stable_budget").get<int>();
  for (const auto& w : j.at("witnesses"))
    r.witnesses.push_back({w.at("ideal").get<std::string>(), w.at("generator").get<Elem>(), w.at("element").get<std::string>()});
  r.prime_bound = j.at("prime_bound").get<Int>();
  for (const auto& pc : j.at("pi_classes")) {
    PiClass c;
    c.p = pc.at("p").get<Int>();
    c.f = pc.at("f").get<int>();
    c.ramified = pc.at("ramified").get<bool>();
    c.primes = pc.at("primes").get<std::vector<std::string>>();
    c.cls = pc.at("class").get<std::vector<Int>>();
    r.pi_classes.push_back(std::move(c));
  }
  r.po = subgroup_from(j.at("po"), PolyaVariant::all);
  r.po_nr = subgroup_from(j.at("po_nr"), PolyaVariant::nr);
  r.po_nr1 = subgroup_from(j.at("po_nr1"), PolyaVariant::nr1);
  const json& eq = j.at("equalities");
  r.cl_eq_po = eq.at("cl_eq_po").get<bool>();
  r.po_eq_po_nr = eq.at("po_eq_po_nr").get<bool>();
  r.po_nr_eq_po_nr1 = eq.at("po_nr_eq_po_nr1").get<bool>();
  r.cl_eq_po_nr1 = eq.at("cl_eq_po_nr1").get<bool>();
  if (!j.at("nr1_generation_bound").is_null()) r.nr1_bound = j.at("nr1_generation_bound").get<Int>();
  if (j.contains("ostrowski")) {
    const json& o = j.at("ostrowski");
    OstrowskiCheck c;
    c.primes_checked = o.at("primes_checked").get<Int>();
    c.ideals_checked = o.at("ideals_checked").get<Int>();
    c.all_principal = o.at("all_principal").get<bool>();
    for (const auto& f : o.at("failures")) c.failures.emplace_back(f.at(0).get<Int>(), f.at(1).get<int>());
    r.ostrowski = c;
  }
  r.status = j.at("status").get<std::string>();
}

json densities_to_json(const std::map<SplittingType, Rational>& densities) {
  json out = json::array();
  for (const auto& [t, d] : densities) out.push_back({{"splitting_type", t.to_string()}, {"density", to_string(d)}});
  return out;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::string s = "splitting_type,count,frequency,predicted_density,deviation\n";
  for (const auto& r : rows)
    s += r.type.to_string() + "," + std::to_string(r.count) + "," + fixed6(r.frequency) + "," + to_string(r.predicted) +
         "," + fixed6(r.deviation) + "\n";
  return s;
}

json census_to_json(const std::vector<CensusRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"splitting_type", r.type.to_string()},
                   {"count", r.count},
                   {"frequency", r.frequency},
                   {"predicted_density", to_string(r.predicted)},
                   {"deviation", r.deviation}});
  return out;
}

}  // namespace polya
