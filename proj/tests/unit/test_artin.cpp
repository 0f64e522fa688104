#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "polya/artin.hpp"
#include "polya/errors.hpp"
#include "polya/families.hpp"

using namespace polya;

TEST_CASE("splitting type text") {
  for (const char* s : {"1+1+1", "1+2", "3", "1^3", "1+1^2", "1+1+1+2"}) CHECK(SplittingType::parse(s).to_string() == s);
  CHECK(SplittingType::parse("2+1").to_string() == "1+2");
  CHECK(SplittingType::parse("1+1^2").degree() == 3);
  CHECK_FALSE(SplittingType::parse("1^3").unramified());
  for (const char* bad : {"1+", "", "+1", "1^", "x", "1+0", "2^1^1"}) CHECK_THROWS_AS(SplittingType::parse(bad), ParseError);
}

TEST_CASE("smith diagonal") {
  CHECK(smith_diagonal({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<Int>{2, 6, 12});
  CHECK(smith_diagonal({{2, 0}, {0, 3}}) == std::vector<Int>{1, 6});
  CHECK(smith_diagonal({{1, 2}, {2, 4}}) == std::vector<Int>{1, 0});
}

TEST_CASE("abelian group basics") {
  AbelianGroup A({2, 4});
  CHECK(A.order() == 8);
  CHECK(A.elements().size() == 8);
  CHECK(A.element_order(std::vector<Int>{1, 1}) == 4);
  CHECK(A.subgroup_order({{1, 2}}) == 2);
  CHECK(A.subgroup_order({{1, 0}, {0, 1}}) == 8);
  CHECK_THROWS(AbelianGroup({4, 2}));
}

TEST_CASE("relation lattice quotient orders") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t k = 1 + rng() % 4;
    RelationLattice L(k);
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < k + 2; ++i) {
      std::vector<Int> r(k);
      for (auto& x : r) x = static_cast<Int>(rng() % 13) - 6;
      rows.push_back(r);
      L.add(r);
    }
    auto diag = smith_diagonal(rows);
    Int det = 1;
    for (Int d : diag) det *= d;
    CHECK(L.full_rank() == (det != 0));
    if (det == 0) continue;
    CHECK(L.index().value() == (det < 0 ? -det : det));
    auto q = L.quotient();
    CHECK(q.group().order() == *L.index());
    // every relation dies in the quotient
    for (const auto& r : rows) CHECK(q.group().is_zero(q.image(r)));
  }
}

TEST_CASE("abelianization of S4 stabilizer") {
  auto G = family_group('S', 4).build();
  auto ab = abelianization(G.stabilizer(3));
  CHECK(ab.group().order() == 2);
  CHECK(ab.derived().order() == 3);
}

TEST_CASE("densities of S3 and C3 on three points") {
  auto S3 = family_group('S', 3).build();
  auto d = chebotarev_densities(S3, CosetAction(S3, S3.stabilizer(2)));
  CHECK(d.at(SplittingType::parse("1+1+1")) == Rational(1, 6));
  CHECK(d.at(SplittingType::parse("1+2")) == Rational(1, 2));
  CHECK(d.at(SplittingType::parse("3")) == Rational(1, 3));
  auto C3 = family_group('C', 3).build();
  auto c = chebotarev_densities(C3, CosetAction(C3, C3.stabilizer(2)));
  CHECK(c.size() == 2);
  CHECK(c.at(SplittingType::parse("3")) == Rational(2, 3));
}

TEST_CASE("densities count cycle types") {
  for (const auto& g : oracle::group_corpus()) {
    auto G = g.build();
    if (G.order() > 720) continue;
    CosetAction act(G, G.stabilizer(G.degree() - 1));
    auto d = chebotarev_densities(G, act);
    Rational total(0);
    for (const auto& [t, r] : d) total += r;
    CHECK(total == Rational(1));
    // cycle type on cosets equals the cycle type on points for a point stabilizer
    std::map<SplittingType, Int> count;
    for (const auto& x : G.elements()) {
      SplittingType t;
      for (int len : x.cycle_type()) t.parts.emplace_back(len, 1);
      std::sort(t.parts.begin(), t.parts.end());
      ++count[t];
    }
    for (const auto& [t, n] : count) CHECK(d.at(t) == Rational(n, static_cast<Int>(G.order())));
  }
}

TEST_CASE("rational text") {
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(parse_rational("4/8") == Rational(1, 2));
  CHECK(parse_rational("5") == Rational(5));
}

TEST_CASE("total class is the sum of the pi classes") {
  std::mt19937_64 rng(17);
  for (const auto& g : oracle::group_corpus()) {
    auto G = g.build();
    if (G.order() > 720) continue;
    CAPTURE(g.name);
    CosetAction act(G, G.stabilizer(G.degree() - 1));
    auto ab = abelianization(act.subgroup());
    for (int k = 0; k < 40; ++k) {
      Perm x = oracle::random_element(G, rng);
      auto sum = ab.group().zero();
      for (int f = 1; f <= G.degree(); ++f) sum = ab.group().add(sum, pi_class(x, f, act, ab));
      CHECK(sum == total_class(x, act, ab));
    }
  }
}

TEST_CASE("pi class ignores the choice of representatives") {
  std::mt19937_64 rng(23);
  for (const auto& g : oracle::group_corpus()) {
    auto G = g.build();
    if (G.order() > 720) continue;
    CAPTURE(g.name);
    CosetAction act(G, G.stabilizer(G.degree() - 1));
    auto ab = abelianization(act.subgroup());
    for (int k = 0; k < 30; ++k) {
      Perm x = oracle::random_element(G, rng);
      auto cycles = cycle_structure(x, act);
      auto moved = cycles;
      for (auto& c : moved) c.representative = oracle::random_element(act.subgroup(), rng) * c.representative;
      for (int f = 1; f <= G.degree(); ++f) CHECK(pi_class(x, f, cycles, ab) == pi_class(x, f, moved, ab));
    }
  }
}

TEST_CASE("splitting from Frobenius is the cycle type on cosets") {
  auto G = family_group('S', 4).build();
  CosetAction act(G, G.stabilizer(3));
  for (const auto& x : G.elements()) {
    auto t = splitting_from_frobenius(x, act);
    CHECK(t.degree() == 4);
    CHECK(t.unramified());
  }
}
