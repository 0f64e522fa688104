#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "polya/polya.hpp"

namespace polya::cli {

enum ExitCode : int { kOk = 0, kParseError = 2, kBudgetExceeded = 3, kInconclusive = 4 };

enum class Format { json, csv };
Format parse_format(const std::string& s);

struct Budgets {
  std::size_t max_closure = kDefaultMaxGroupOrder;
  std::uint64_t max_enum = PrincipalSearch{}.max_nodes;
};

// Inclusive integer range written "a..b" or as a single integer.
struct Range {
  Int lo = 0;
  Int hi = -1;
  bool empty() const { return hi < lo; }
};
Range parse_range(const std::string& text);

struct GroupCheckArgs {
  std::string family;  // "S", "A", "D", "C" with n, or a full token such as "F20"
  std::optional<Range> n;
  std::string file;
  Format format = Format::json;
  Budgets budgets;
};

struct FieldArgs {
  std::string poly;
  Int prime_bound = kDefaultPrimeBound;
  Format format = Format::json;
  Budgets budgets;
};

struct SurveyArgs {
  Range a2, a1, a0;
  // Keep only fields with d_K in this range; reducible polynomials are dropped too.
  std::optional<Range> disc;
  Int prime_bound = kDefaultPrimeBound;
  unsigned workers = 1;
  bool brief = false;
  Format format = Format::json;
  Budgets budgets;
};

struct SurveyTally {
  Int fields = 0;
  Int verified = 0;
  Int undetermined = 0;
  Int skipped = 0;
  Int errors = 0;
  Int outside = 0;  // not counted in fields
};

int group_check(const GroupCheckArgs& args, std::ostream& out, std::ostream& err);
int field_analyze(const FieldArgs& args, std::ostream& out, std::ostream& err);
int survey(const SurveyArgs& args, std::ostream& out, std::ostream& err, SurveyTally* tally = nullptr);
int census(const FieldArgs& args, std::ostream& out, std::ostream& err);

}  // namespace polya::cli
