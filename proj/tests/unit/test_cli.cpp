#include "doctest.h"

#include "json.hpp"
#include <sstream>

#include "oracles.hpp"
#include "polya_cli/commands.hpp"

using namespace polya;
using namespace polya::cli;

TEST_CASE("ranges") {
  auto r = parse_range("-3..4");
  CHECK(r.lo == -3);
  CHECK(r.hi == 4);
  CHECK(parse_range("7").lo == 7);
  CHECK(parse_range("2..1").empty());
  CHECK_THROWS(parse_range("a..b"));
}

TEST_CASE("group-check output and exit codes") {
  std::ostringstream out, err;
  GroupCheckArgs a;
  a.family = "S";
  a.n = parse_range("3..5");
  CHECK(group_check(a, out, err) == kOk);
  std::istringstream lines(out.str());
  std::vector<bool> holds;
  for (std::string line; std::getline(lines, line);) holds.push_back(nlohmann::json::parse(line).at("condition_2B"));
  CHECK(holds == std::vector<bool>{true, false, true});

  GroupCheckArgs f;
  f.file = oracle::fixture_path("F21.txt");
  std::ostringstream o2, e2;
  CHECK(group_check(f, o2, e2) == kOk);
  auto j = nlohmann::json::parse(o2.str());
  CHECK(j.at("order") == 21);
  CHECK(j.at("frobenius") == true);

  GroupCheckArgs big;
  big.family = "S";
  big.n = parse_range("7");
  big.budgets.max_closure = 100;
  std::ostringstream o3, e3;
  CHECK(group_check(big, o3, e3) == kBudgetExceeded);

  GroupCheckArgs bad;
  bad.family = "Q";
  bad.n = parse_range("3");
  std::ostringstream o4, e4;
  CHECK(group_check(bad, o4, e4) == kParseError);
}

TEST_CASE("field-analyze exit codes") {
  std::ostringstream out, err;
  FieldArgs a;
  a.poly = "x^2-1";
  CHECK(field_analyze(a, out, err) == kParseError);
  a.poly = "x^3-8";
  CHECK(field_analyze(a, out, err) == kParseError);
  a.poly = "x^3-3x-1";
  a.budgets.max_enum = 2;
  std::ostringstream o2, e2;
  CHECK(field_analyze(a, o2, e2) == kBudgetExceeded);
}

TEST_CASE("field-analyze is deterministic") {
  FieldArgs a;
  a.poly = "x^3-x^2-2x-8";
  std::ostringstream o1, o2, e;
  CHECK(field_analyze(a, o1, e) == kOk);
  CHECK(field_analyze(a, o2, e) == kOk);
  CHECK(o1.str() == o2.str());
  auto j = nlohmann::json::parse(o1.str());
  CHECK(j.at("field_discriminant") == -503);
  CHECK(j.at("index") == 2);
}

TEST_CASE("survey output does not depend on worker count") {
  SurveyArgs a;
  a.a2 = parse_range("-2..2");
  a.a1 = parse_range("-2..2");
  a.a0 = parse_range("-3..3");
  a.prime_bound = 60;
  std::ostringstream o1, o3, e;
  SurveyTally t1, t3;
  CHECK(survey(a, o1, e, &t1) == kOk);
  a.workers = 3;
  CHECK(survey(a, o3, e, &t3) == kOk);
  CHECK(o1.str() == o3.str());
  CHECK(t1.fields == 175);
  CHECK(t1.verified + t1.undetermined + t1.skipped + t1.errors == t1.fields);
  CHECK(t1.errors == 0);
}

TEST_CASE("census CSV") {
  FieldArgs a;
  a.poly = "x^3-2";
  a.prime_bound = 500;
  a.format = Format::csv;
  std::ostringstream out, err;
  CHECK(census(a, out, err) == kOk);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "splitting_type,count,frequency,predicted_density,deviation");
}

TEST_CASE("survey discriminant filter") {
  SurveyArgs a;
  a.a2 = parse_range("-3..3");
  a.a1 = parse_range("-3..3");
  a.a0 = parse_range("-3..3");
  a.disc = parse_range("-300..-1");
  a.prime_bound = 50;
  a.brief = true;
  std::ostringstream out, err;
  SurveyTally t;
  CHECK(survey(a, out, err, &t) == kOk);
  CHECK(t.fields + t.outside == 343);
  CHECK(t.fields > 0);
  std::istringstream lines(out.str());
  for (std::string line; std::getline(lines, line);) {
    auto j = nlohmann::json::parse(line);
    if (j.contains("summary")) {
      CHECK(j["summary"]["outside_disc_range"] == t.outside);
      continue;
    }
    if (j.contains("field_discriminant")) {
      Int d = j["field_discriminant"];
      CHECK(d >= -300);
      CHECK(d <= -1);
    }
  }
}

TEST_CASE("empty survey box") {
  SurveyArgs a;
  a.a2 = parse_range("1..0");
  a.a1 = a.a0 = parse_range("0");
  std::ostringstream out, err;
  CHECK(survey(a, out, err) == kOk);
  CHECK(out.str().empty());
}
