#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "polya/errors.hpp"
#include "polya/families.hpp"
#include "polya/permgroup.hpp"

using namespace polya;

namespace {

std::set<Perm> as_set(const std::vector<Perm>& v) { return {v.begin(), v.end()}; }

PermGroup point_stabilizer(const PermGroup& G) { return G.stabilizer(G.degree() - 1); }

}  // namespace

TEST_CASE("perm parsing and printing") {
  Perm p = Perm::parse(5, "(1 2 3)(4 5)");
  CHECK(p.to_string() == "(1 2 3)(4 5)");
  CHECK(p.order() == 6);
  CHECK(p.cycle_type() == std::vector<int>{2, 3});
  CHECK(Perm::parse(4, "()").is_identity());
  CHECK_THROWS_AS(Perm::parse(3, "(1 4)"), ParseError);
  CHECK_THROWS_AS(Perm::parse(3, "(1 2 1)"), ParseError);
  CHECK_THROWS_AS(Perm::parse(3, "(1 2"), ParseError);
}

TEST_CASE("composition applies the left factor first") {
  Perm a = Perm::parse(3, "(1 2)"), b = Perm::parse(3, "(2 3)");
  // 1 -> 2 under a, then 2 -> 3 under b
  CHECK((a * b)[0] == 2);
  CHECK((a * b).to_string() == "(1 3 2)");
}

TEST_CASE("random permutations satisfy the group axioms") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    auto rnd = [&] {
      std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      return Perm(img);
    };
    Perm a = rnd(), b = rnd(), c = rnd();
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.pow(a.order()).is_identity());
    CHECK(a.pow(-1) == a.inverse());
    CHECK(Perm::parse(n, a.to_string()) == a);
  }
}

TEST_CASE("closure matches brute force on the corpus") {
  for (const auto& g : oracle::group_corpus()) {
    if (g.build().order() > 720) continue;
    CAPTURE(g.name);
    auto G = g.build();
    CHECK(as_set(G.elements()) == oracle::closure(g.degree, g.generators));
  }
}

TEST_CASE("family orders") {
  auto fact = [](int n) { Int r = 1; for (int i = 2; i <= n; ++i) r *= i; return r; };
  for (int n = 3; n <= 7; ++n) {
    CHECK(family_group('S', n).build().order() == static_cast<std::size_t>(fact(n)));
    CHECK(family_group('A', n).build().order() == static_cast<std::size_t>(fact(n) / 2));
    CHECK(family_group('D', n).build().order() == static_cast<std::size_t>(2 * n));
    CHECK(family_group('C', n).build().order() == static_cast<std::size_t>(n));
  }
  CHECK(named_group("F20").build().order() == 20);
}

TEST_CASE("closure budget is enforced") {
  CHECK_THROWS_AS(family_group('S', 7).build(1000), BudgetExceeded);
}

TEST_CASE("group file format round trips") {
  auto g = named_group("F20");
  auto back = parse_group_text(format_group_text(g), "F20");
  CHECK(back.build() == g.build());
  CHECK_THROWS_AS(parse_group_text("degree=3\n(1 2 5)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_text("(1 2)\n"), ParseError);
}

TEST_CASE("coset action") {
  for (const auto& g : oracle::group_corpus()) {
    auto G = g.build();
    if (G.order() > 720) continue;
    CAPTURE(g.name);
    auto H = point_stabilizer(G);
    CosetAction act(G, H);
    auto cosets = oracle::right_cosets(G, H);
    REQUIRE(act.size() == cosets.size());
    CHECK(act.representative(0).is_identity());
    for (std::size_t i = 0; i < act.size(); ++i) {
      // least element of its coset
      auto idx = oracle::coset_index(cosets, act.representative(i));
      CHECK(act.representative(i) == *cosets[idx].begin());
    }
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
      Perm x = oracle::random_element(G, rng);
      std::size_t i = rng() % act.size();
      auto a = oracle::coset_index(cosets, act.representative(i));
      auto b = oracle::coset_index(cosets, act.representative(act.act(i, x)));
      CHECK(b == oracle::coset_index(cosets, *cosets[a].begin() * x));
    }
  }
  CHECK_THROWS_AS(CosetAction(family_group('S', 3).build(), family_group('C', 4).build()), std::invalid_argument);
}

TEST_CASE("cycle structure lengths partition the cosets") {
  auto G = family_group('S', 5).build();
  CosetAction act(G, point_stabilizer(G));
  for (const auto& g : G.elements()) {
    auto cyc = cycle_structure(g, act);
    int total = 0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      total += cyc[i].length;
      if (i) CHECK(cyc[i].least_coset > last);
      last = cyc[i].least_coset;
      CHECK(cyc[i].representative == act.representative(cyc[i].least_coset));
    }
    CHECK(total == 5);
  }
}

TEST_CASE("derived subgroup and core against brute force") {
  for (const auto& g : oracle::group_corpus()) {
    auto G = g.build();
    if (G.order() > 360) continue;
    CAPTURE(g.name);
    auto H = point_stabilizer(G);
    CHECK(as_set(derived_subgroup(H).elements()) == oracle::derived_all_pairs(H));
    CHECK(as_set(derived_subgroup(G).elements()) == oracle::derived_all_pairs(G));
    CHECK(as_set(normal_core(G, H).elements()) == oracle::kernel_of_action(G, H));
  }
}

TEST_CASE("T three ways") {
  for (const auto& g : oracle::group_corpus()) {
    auto G = g.build();
    if (G.order() > 720) continue;
    CAPTURE(g.name);
    auto H = point_stabilizer(G);
    auto T = as_set(compute_T(G, H));
    CHECK(T == as_set(compute_T_by_conjugation(G, H)));
    CHECK(T == oracle::T_direct(G, H));
  }
  auto S3 = family_group('S', 3).build();
  CHECK_THROWS_AS(compute_T(S3, S3), std::invalid_argument);
}

TEST_CASE("T is closed under conjugation by H") {
  for (const auto& g : oracle::group_corpus()) {
    auto G = g.build();
    if (G.order() > 720) continue;
    auto H = point_stabilizer(G);
    auto T = as_set(compute_T(G, H));
    for (const auto& t : T)
      for (const auto& h : H.generators()) CHECK(T.count(conjugate(h, t)));
  }
}

TEST_CASE("2-transitive groups have T nonempty") {
  for (const auto& g : oracle::group_corpus()) {
    auto G = g.build();
    if (G.order() > 720) continue;
    CAPTURE(g.name);
    auto H = point_stabilizer(G);
    CosetAction act(G, H);
    if (is_2transitive(G, act)) CHECK_FALSE(compute_T(G, H).empty());
  }
}

TEST_CASE("Frobenius groups have T = H minus the identity") {
  for (const auto& g : oracle::group_corpus()) {
    auto G = g.build();
    if (G.order() > 720) continue;
    CAPTURE(g.name);
    auto H = point_stabilizer(G);
    CosetAction act(G, H);
    if (!is_frobenius(G, act)) continue;
    auto T = as_set(compute_T(G, H));
    CHECK(T.size() + 1 == H.order());
    CHECK_FALSE(T.count(H.identity()));
  }
}

TEST_CASE("condition 2B on small families") {
  for (int n = 3; n <= 7; ++n) {
    auto S = family_group('S', n).build();
    auto A = family_group('A', n).build();
    CHECK(check_condition_2B(S, point_stabilizer(S)).holds == (n != 4));
    CHECK(check_condition_2B(A, point_stabilizer(A)).holds == (n != 3 && n != 5));
  }
  auto C4 = family_group('C', 4).build();
  auto r = check_condition_2B(C4, point_stabilizer(C4));
  CHECK_FALSE(r.holds);
  CHECK_FALSE(r.T_nonempty);
}

TEST_CASE("condition 2B report is consistent") {
  for (const auto& g : oracle::group_corpus()) {
    auto G = g.build();
    if (G.order() > 720) continue;
    auto H = point_stabilizer(G);
    auto r = check_condition_2B(G, H);
    CHECK(r.generated.is_subgroup_of(H));
    CHECK(r.derived.is_subgroup_of(r.generated));
    CHECK(r.holds == (r.T_nonempty && r.generated.order() == H.order()));
  }
}
