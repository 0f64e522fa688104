// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include "json.hpp"
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "polya/families.hpp"
#include "polya/intmath.hpp"
#include "polya/polya.hpp"
#include "polya_cli/commands.hpp"

using namespace polya;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kTableSeconds = 60.0;
constexpr int kPerturbationSamples = 10'000;
constexpr std::size_t kCoreOrderLimit = 360;
constexpr Int kPiPrimeBound = 500;
constexpr double kPiSeconds = 30.0;
constexpr Int kSurveyBox = 12;
constexpr Int kSurveyPrimeBound = 200;
constexpr Int kOstrowskiBound = 500;
constexpr Int kCensusBound = 10'000;
constexpr double kCensusTolerance = 0.05;
constexpr double kCensusSeconds = 10.0;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Result {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

PermGroup last_point_stabilizer(const PermGroup& G) { return G.stabilizer(G.degree() - 1); }

Result condition_table() {
  Result r;
  auto t0 = Clock::now();
  for (int n = 3; n <= 8; ++n) {
    for (char fam : {'S', 'A'}) {
      auto G = family_group(fam, n).build();
      bool holds = check_condition_2B(G, last_point_stabilizer(G)).holds;
      bool expected = fam == 'S' ? n != 4 : (n != 3 && n != 5);
      if (holds != expected) r.fail(std::string(1, fam) + std::to_string(n) + " mismatch");
    }
  }
  double s = seconds_since(t0);
  if (s >= kTableSeconds) r.fail("took " + std::to_string(s) + " s");
  if (r.pass) r.detail = std::to_string(s).substr(0, 5) + " s";
  return r;
}

Result frobenius_lemma() {
  Result r;
  std::ifstream in(oracle::fixture_path("F21.txt"));
  std::stringstream ss;
  ss << in.rdbuf();
  std::vector<GroupPresentation> yes{family_group('S', 3), family_group('A', 4), named_group("F20"),
                                     parse_group_text(ss.str(), "F21")};
  for (const auto& g : yes) {
    auto G = g.build();
    auto H = last_point_stabilizer(G);
    CosetAction act(G, H);
    auto T = compute_T(G, H);
    std::set<Perm> expected(H.elements().begin() + 1, H.elements().end());
    if (!is_frobenius(G, act)) r.fail(g.name + " not Frobenius");
    if (std::set<Perm>(T.begin(), T.end()) != expected) r.fail(g.name + " T differs from H minus 1");
    if (!check_condition_2B(G, H).holds) r.fail(g.name + " fails 2B");
  }
  for (const auto& g : {family_group('D', 4), family_group('C', 4)}) {
    auto G = g.build();
    if (is_frobenius(G, CosetAction(G, last_point_stabilizer(G)))) r.fail(g.name + " reported Frobenius");
  }
  return r;
}

Result representative_independence() {
  Result r;
  std::mt19937_64 rng(20240601);
  std::vector<GroupPresentation> corpus;
  for (const auto& g : oracle::group_corpus())
    if (g.degree <= 7) corpus.push_back(g);
  struct Ctx {
    PermGroup G;
    CosetAction act;
    Abelianization ab;
  };
  std::vector<Ctx> ctx;
  for (const auto& g : corpus) {
    auto G = g.build();
    // every point stabilizer, so H varies as well as G
    for (int pt = 0; pt < G.degree(); ++pt) {
      CosetAction act(G, G.stabilizer(pt));
      ctx.push_back({G, act, abelianization(act.subgroup())});
    }
  }
  int failures = 0;
  for (int i = 0; i < kPerturbationSamples; ++i) {
    const auto& c = ctx[rng() % ctx.size()];
    Perm x = oracle::random_element(c.G, rng);
    auto cycles = cycle_structure(x, c.act);
    auto moved = cycles;
    for (auto& cy : moved) cy.representative = oracle::random_element(c.act.subgroup(), rng) * cy.representative;
    for (int f = 1; f <= c.G.degree(); ++f)
      if (pi_class(x, f, cycles, c.ab) != pi_class(x, f, moved, c.ab)) ++failures;
  }
  r.detail = std::to_string(kPerturbationSamples) + " samples, " + std::to_string(failures) + " failures";
  if (failures) r.pass = false;
  return r;
}

Result core_lemmas() {
  Result r;
  int pairs = 0, failures = 0;
  for (const auto& g : oracle::group_corpus()) {
    auto G = g.build();
    if (G.order() > kCoreOrderLimit) continue;
    std::set<PermGroup*> none;
    std::vector<PermGroup> subgroups;
    for (int pt = 0; pt < G.degree(); ++pt) subgroups.push_back(G.stabilizer(pt));
    std::set<std::vector<Perm>> seen;
    for (const auto& x : G.elements()) {
      auto C = PermGroup::generate(G.degree(), {x});
      if (C.order() == G.order() || G.order() / C.order() > 200) continue;
      if (seen.insert(C.elements()).second) subgroups.push_back(C);
    }
    for (const auto& H : subgroups) {
      ++pairs;
      CosetAction act(G, H);
      std::vector<Perm> image_gens;
      for (const auto& s : G.generators()) image_gens.push_back(act.on_cosets(s));
      auto G0 = PermGroup::generate(static_cast<int>(act.size()), image_gens);
      auto H0 = G0.stabilizer(0);
      auto T = compute_T(G, H);
      auto T0v = compute_T(G0, H0);
      std::set<Perm> Ts(T.begin(), T.end()), T0(T0v.begin(), T0v.end());
      for (const auto& h : H.elements())
        if (Ts.count(h) != T0.count(act.on_cosets(h))) ++failures;
      if (!T.empty()) {
        auto spanned = PermGroup::generate(G.degree(), T);
        if (!normal_core(G, H).is_subgroup_of(spanned)) ++failures;
      }
    }
  }
  r.detail = std::to_string(pairs) + " pairs, " + std::to_string(failures) + " failures";
  if (failures) r.pass = false;
  return r;
}

Result pi_identity() {
  Result r;
  auto t0 = Clock::now();
  int checked = 0;
  for (const char* poly : {"x^3-2", "x^3-x-1", "x^3-x^2-2x-8"}) {
    MaximalOrder O(CubicPoly::parse(poly));
    for (Int p : primes_up_to(kPiPrimeBound)) {
      if (O.discriminant() % p == 0) continue;
      auto over = factor_prime(O, p);
      Ideal prod;
      for (int f = 1; f <= 3; ++f) prod = multiply(O, prod, pi_ideal(O, p, f, over).ideal);
      ++checked;
      if (prod != Ideal::rational(p)) r.fail(std::string(poly) + " at p=" + std::to_string(p));
    }
  }
  double s = seconds_since(t0);
  if (s >= kPiSeconds) r.fail("took " + std::to_string(s) + " s");
  if (r.pass) r.detail = std::to_string(checked) + " primes";
  return r;
}

Result trivial_class_groups() {
  Result r;
  for (const char* poly : {"x^3-2", "x^3-x-1"}) {
    cli::FieldArgs a;
    a.poly = poly;
    std::ostringstream out, err;
    if (cli::field_analyze(a, out, err) != cli::kOk) {
      r.fail(std::string(poly) + ": " + err.str());
      continue;
    }
    auto j = nlohmann::json::parse(out.str());
    if (!j["class_group"]["invariant_factors"].empty()) r.fail(std::string(poly) + " nontrivial");
    for (const char* k : {"cl_eq_po", "po_eq_po_nr", "po_nr_eq_po_nr1", "cl_eq_po_nr1"})
      if (j["equalities"][k] != true) r.fail(std::string(poly) + " " + k);
  }
  return r;
}

struct WitnessRow {
  std::string invariants;
  Int fields = 0;
  std::string poly;
  Int disc = 0;
};

std::vector<WitnessRow> frozen_witnesses() {
  std::ifstream in(oracle::fixture_path("survey_witnesses.txt"));
  std::vector<WitnessRow> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> parts;
    std::stringstream ss(line);
    for (std::string p; std::getline(ss, p, '|');) {
      p.erase(0, p.find_first_not_of(' '));
      p.erase(p.find_last_not_of(' ') + 1);
      parts.push_back(p);
    }
    out.push_back({parts[0], std::stoll(parts[1]), parts[2], std::stoll(parts[3])});
  }
  return out;
}

std::string join(const std::vector<Int>& v) {
  std::string s;
  for (Int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

Result survey_witnesses() {
  Result r;
  cli::SurveyArgs a;
  a.a2 = a.a1 = a.a0 = {-kSurveyBox, kSurveyBox};
  a.prime_bound = kSurveyPrimeBound;
  a.brief = true;
  std::ostringstream out, err;
  cli::SurveyTally tally;
  if (cli::survey(a, out, err, &tally) != cli::kOk) r.fail("survey exit status");
  if (tally.errors) r.fail(std::to_string(tally.errors) + " fields inconclusive or failed");
  std::map<std::string, WitnessRow> seen;
  Int nontrivial = 0;
  std::istringstream lines(out.str());
  for (std::string line; std::getline(lines, line);) {
    auto j = nlohmann::json::parse(line);
    if (!j.contains("class_number")) continue;
    Int h = j["class_number"];
    if (h == 1) continue;
    ++nontrivial;
    if (j["po_nr1"] != h) r.fail(j["polynomial"].get<std::string>() + " Po_nr1 short of Cl");
    if (j["status"] != "verified" || j["nr1_generation_bound"].is_null() || j["nr1_generation_bound"] > kSurveyPrimeBound)
      r.fail(j["polynomial"].get<std::string>() + " not generated by p <= 200");
    auto key = join(j["invariant_factors"].get<std::vector<Int>>());
    Int d = j["field_discriminant"];
    auto& w = seen[key];
    w.invariants = key;
    ++w.fields;
    std::string poly = j["polynomial"];
    if (w.poly.empty() || std::make_pair(std::abs(d), poly) < std::make_pair(std::abs(w.disc), w.poly)) {
      w.poly = poly;
      w.disc = d;
    }
  }
  if (nontrivial == 0) r.fail("no field with nontrivial class group");
  auto frozen = frozen_witnesses();
  if (frozen.size() != seen.size()) r.fail("witness table size changed");
  for (const auto& f : frozen) {
    auto it = seen.find(f.invariants);
    if (it == seen.end() || it->second.fields != f.fields || it->second.poly != f.poly || it->second.disc != f.disc)
      r.fail("witness row " + f.invariants + " changed");
    // stability oracle on the witness itself
    MaximalOrder O(CubicPoly::parse(f.poly));
    auto cl = ClassGroup::compute(O);
    int b = std::max(cl.stable_budget(), ClassGroupOptions{}.initial_budget);
    auto lo = harvest_invariants(O, b), hi = harvest_invariants(O, 2 * b);
    if (!lo || lo != hi || join(*lo) != f.invariants) r.fail("witness " + f.poly + " unstable");
  }
  if (r.pass)
    r.detail = std::to_string(nontrivial) + " fields with h > 1 among " + std::to_string(tally.verified) + " verified";
  return r;
}

Result ostrowski() {
  Result r;
  MaximalOrder O(CubicPoly::parse("x^3-3x-1"));
  auto c = ostrowski_check(O, kOstrowskiBound);
  if (!c.all_principal) r.fail(std::to_string(c.failures.size()) + " non-principal");
  if (c.primes_checked == 0) r.fail("nothing checked");
  if (r.pass) r.detail = std::to_string(c.ideals_checked) + " ideals";
  return r;
}

Result census() {
  Result r;
  auto t0 = Clock::now();
  MaximalOrder O(CubicPoly::parse("x^3-2"));
  auto rows = splitting_census(O, kCensusBound);
  double s = seconds_since(t0);
  std::map<std::string, Rational> want{{"1+1+1", Rational(1, 6)}, {"1+2", Rational(1, 2)}, {"3", Rational(1, 3)}};
  if (rows.size() != want.size()) r.fail("unexpected splitting types");
  double worst = 0;
  for (const auto& row : rows) {
    auto it = want.find(row.type.to_string());
    if (it == want.end() || it->second != row.predicted) {
      r.fail("density for " + row.type.to_string());
      continue;
    }
    double dev = std::abs(row.frequency - boost::rational_cast<double>(it->second));
    worst = std::max(worst, dev);
    if (dev > kCensusTolerance) r.fail(row.type.to_string() + " off by " + std::to_string(dev));
  }
  if (s >= kCensusSeconds) r.fail("took " + std::to_string(s) + " s");
  if (r.pass) r.detail = "max deviation " + std::to_string(worst);
  return r;
}

Result harvest_stability() {
  Result r;
  for (const auto& fx : oracle::field_fixtures()) {
    MaximalOrder O(CubicPoly::parse(fx.poly));
    auto cl = ClassGroup::compute(O);
    int b = std::max(cl.stable_budget(), ClassGroupOptions{}.initial_budget);
    auto lo = harvest_invariants(O, b), hi = harvest_invariants(O, 2 * b);
    if (!lo || lo != hi) r.fail(fx.poly + " changes under doubling");
    else if (*lo != fx.invariants) r.fail(fx.poly + " differs from fixture");
  }
  return r;
}

}  // namespace

int main() {
  std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"condition 2B on S_n and A_n, n=3..8", condition_table},
      {"Frobenius groups", frobenius_lemma},
      {"pi_class representative independence", representative_independence},
      {"T vs T0 and core inside <T>", core_lemmas},
      {"product of Pi_{p^f} equals pO", pi_identity},
      {"trivial class groups", trivial_class_groups},
      {"survey witnesses with h > 1", survey_witnesses},
      {"Pi_{p^f} principal in x^3-3x-1", ostrowski},
      {"splitting census of x^3-2", census},
      {"harvest stable under doubling", harvest_stability},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    all = all && r.pass;
    std::printf("%s %zu %s%s%s\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, r.detail.empty() ? "" : ": ",
                r.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
