#include "doctest.h"

#include "json.hpp"

#include "oracles.hpp"
#include "polya/intmath.hpp"
#include "polya/polya.hpp"
#include "polya/report.hpp"

using namespace polya;

namespace {

MaximalOrder order_of(const char* text) { return MaximalOrder(CubicPoly::parse(text)); }

}  // namespace

TEST_CASE("pi ideals") {
  auto O = order_of("x^3-2");
  // 5 = P1 * P2 with f = 1, 2
  CHECK(pi_ideal(O, 5).ideal.norm() == 5);
  CHECK(pi_ideal(O, 25).ideal.norm() == 25);
  CHECK(pi_ideal(O, 125).ideal.is_unit());
  CHECK(pi_ideal(O, 6).ideal.is_unit());
  CHECK(pi_ideal(O, 6).p == 0);
  // 2 is totally ramified
  CHECK(pi_ideal(O, 2).primes.size() == 1);
  CHECK(multiply(O, pi_ideal(O, 2).ideal, multiply(O, pi_ideal(O, 2).ideal, pi_ideal(O, 2).ideal)) == Ideal::rational(2));
}

TEST_CASE("pi ideals multiply to pO for unramified p") {
  for (const char* poly : {"x^3-2", "x^3-x^2-2x-8", "x^3-12x^2+8x-1"}) {
    auto O = order_of(poly);
    for (Int p : primes_up_to(150)) {
      if (O.discriminant() % p == 0) continue;
      Ideal prod;
      for (int f = 1; f <= 3; ++f) prod = multiply(O, prod, pi_ideal(O, ipow(p, f)).ideal);
      CHECK(prod == Ideal::rational(p));
    }
  }
}

TEST_CASE("Polya subgroups nest") {
  for (const auto& fx : oracle::field_fixtures()) {
    auto O = MaximalOrder(CubicPoly::parse(fx.poly));
    if (is_galois_cubic(O.poly())) continue;
    CAPTURE(fx.poly);
    auto cl = ClassGroup::compute(O);
    auto table = pi_classes(cl, 100);
    auto all = polya_group(cl, table, PolyaVariant::all);
    auto nr = polya_group(cl, table, PolyaVariant::nr);
    auto nr1 = polya_group(cl, table, PolyaVariant::nr1);
    CHECK(nr1.order <= nr.order);
    CHECK(nr.order <= all.order);
    CHECK(all.order <= cl.class_number());
    CHECK(cl.class_number() % all.order == 0);
    CHECK(all.order % nr.order == 0);
    CHECK(nr.order % nr1.order == 0);
    for (const auto& row : table) {
      CHECK(row.ramified == (O.discriminant() % row.p == 0));
      CHECK_FALSE(row.primes.empty());
    }
  }
}

TEST_CASE("pi class of an unramified prime sums to zero") {
  auto O = order_of("x^3-x^2+12x-6");
  auto cl = ClassGroup::compute(O);
  auto table = pi_classes(cl, 200);
  std::map<Int, std::vector<Int>> sum;
  for (const auto& row : table) {
    if (row.ramified) continue;
    auto& s = sum.try_emplace(row.p, cl.group().zero()).first->second;
    s = cl.group().add(s, row.cls);
  }
  for (const auto& [p, s] : sum) CHECK(cl.group().is_zero(s));
}

TEST_CASE("main theorem on the fixture fields") {
  for (const auto& fx : oracle::field_fixtures()) {
    auto O = MaximalOrder(CubicPoly::parse(fx.poly));
    CAPTURE(fx.poly);
    auto r = analyze_field(O);
    if (r.galois) {
      CHECK(r.status == "galois");
      REQUIRE(r.ostrowski.has_value());
      CHECK(r.ostrowski->all_principal);
      CHECK_THROWS_AS(verify_main_theorem(O), std::invalid_argument);
      continue;
    }
    CHECK(r.status == "verified");
    CHECK(r.all_equal());
    CHECK(r.invariant_factors == fx.invariants);
    REQUIRE(r.nr1_bound.has_value());
    CHECK(*r.nr1_bound <= 200);
  }
}

TEST_CASE("nr1 bound is the least sufficient bound") {
  auto O = order_of("x^3-7x^2+7x-10");
  auto cl = ClassGroup::compute(O);
  auto table = pi_classes(cl, 200);
  auto b = nr1_generation_bound(cl, table);
  REQUIRE(b.has_value());
  CHECK(polya_group(cl, *b, PolyaVariant::nr1).order == cl.class_number());
  Int prev = 1;
  for (Int p : primes_up_to(*b)) if (p < *b) prev = p;
  if (prev > 1) CHECK(polya_group(cl, prev, PolyaVariant::nr1).order < cl.class_number());
}

TEST_CASE("report JSON round trip") {
  for (const char* poly : {"x^3-2", "x^3-x^2-2x-8", "x^3-7x^2+7x-10", "x^3-3x-1"}) {
    auto r = analyze_field(order_of(poly), 50);
    nlohmann::json j = r;
    auto back = j.get<PolyaReport>();
    CHECK(back == r);
    CHECK(nlohmann::json(back).dump() == j.dump());
  }
}

TEST_CASE("splitting type is constant across generating polynomials") {
  auto a = order_of("x^3-2");
  // x -> x + 1
  auto b = order_of("x^3-3x^2+3x-3");
  for (Int p : primes_up_to(300)) CHECK(splitting_type_of(a, p) == splitting_type_of(b, p));
}

TEST_CASE("census rows") {
  auto O = order_of("x^3-2");
  auto rows = splitting_census(O, 2000);
  Int total = 0;
  for (const auto& r : rows) total += r.count;
  // 2 and 3 ramify
  CHECK(total == static_cast<Int>(primes_up_to(2000).size()) - 2);
  CHECK(rows.size() == 3);
  for (const auto& r : rows) CHECK(r.deviation < 0.05);
  auto csv = census_csv(rows);
  CHECK(csv.rfind("splitting_type,count,frequency,predicted_density,deviation\n", 0) == 0);
  auto g = splitting_census(order_of("x^3-3x-1"), 1000);
  CHECK(g.size() == 2);
  CHECK(predicted_densities(order_of("x^3-3x-1")).at(SplittingType::parse("3")) == Rational(2, 3));
}
