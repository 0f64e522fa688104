#include <iostream>

#include "CLI11.hpp"
#include "polya/errors.hpp"
#include "polya_cli/commands.hpp"

using namespace polya::cli;

int main(int argc, char** argv) {
  CLI::App app{"Polya groups of cubic fields and the (2B) group condition"};
  app.require_subcommand(1);

  std::string format = "json";
  Budgets budgets;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or csv");
    sub->add_option("--max-closure", budgets.max_closure, "ceiling on group orders during closure");
    sub->add_option("--max-enum", budgets.max_enum, "ceiling on lattice enumeration nodes");
  };

  GroupCheckArgs gc;
  std::string n_range;
  auto* cmd_gc = app.add_subcommand("group-check", "check condition (2B), Frobenius and 2-transitivity");
  cmd_gc->add_option("--family", gc.family, "S, A, D, C with --n, or a token such as F20 or S5");
  cmd_gc->add_option("--n", n_range, "degree or range a..b");
  cmd_gc->add_option("--file", gc.file, "generator file (degree=<n> then one cycle string per line)");
  add_common(cmd_gc);

  FieldArgs fa;
  auto* cmd_fa = app.add_subcommand("field-analyze", "class group and Polya groups of one cubic field");
  cmd_fa->add_option("poly", fa.poly, "e.g. \"x^3-2\" or 0,0,-2")->required();
  cmd_fa->add_option("--prime-bound", fa.prime_bound, "largest p used for Pi_q generators");
  add_common(cmd_fa);

  SurveyArgs sv;
  std::string box, a2, a1, a0, disc;
  auto* cmd_sv = app.add_subcommand("survey", "run field-analyze over a coefficient box");
  cmd_sv->add_option("--box", box, "N: all |a_i| <= N");
  cmd_sv->add_option("--a2", a2, "range lo..hi");
  cmd_sv->add_option("--a1", a1, "range lo..hi");
  cmd_sv->add_option("--a0", a0, "range lo..hi");
  cmd_sv->add_option("--disc", disc, "field discriminant range lo..hi, applied within the box");
  cmd_sv->add_option("--prime-bound", sv.prime_bound, "largest p used for Pi_q generators");
  cmd_sv->add_option("--workers", sv.workers, "worker threads");
  cmd_sv->add_flag("--brief", sv.brief, "one summary object per field instead of the full report");
  add_common(cmd_sv);

  FieldArgs cs;
  auto* cmd_cs = app.add_subcommand("census", "splitting types against Chebotarev densities");
  cmd_cs->add_option("poly", cs.poly, "e.g. \"x^3-2\"")->required();
  cmd_cs->add_option("--prime-bound", cs.prime_bound, "largest prime tallied");
  cmd_cs->add_option("--format", format, "csv (default) or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kParseError;
  }

  try {
    if (*cmd_cs && !cmd_cs->count("--format")) format = "csv";
    Format fmt = parse_format(format);
    if (*cmd_gc) {
      if (!n_range.empty()) gc.n = parse_range(n_range);
      gc.format = fmt;
      gc.budgets = budgets;
      return group_check(gc, std::cout, std::cerr);
    }
    if (*cmd_fa) {
      fa.format = fmt;
      fa.budgets = budgets;
      return field_analyze(fa, std::cout, std::cerr);
    }
    if (*cmd_sv) {
      if (!box.empty()) {
        Range r = parse_range(box);
        Range sym = r.lo == r.hi ? Range{-r.lo, r.lo} : r;
        sv.a2 = sv.a1 = sv.a0 = sym;
      }
      if (!a2.empty()) sv.a2 = parse_range(a2);
      if (!a1.empty()) sv.a1 = parse_range(a1);
      if (!a0.empty()) sv.a0 = parse_range(a0);
      if (!disc.empty()) sv.disc = parse_range(disc);
      if (box.empty() && (a2.empty() || a1.empty() || a0.empty())) throw polya::ParseError("survey needs --box or all of --a2 --a1 --a0");
      sv.format = fmt;
      sv.budgets = budgets;
      return survey(sv, std::cout, std::cerr);
    }
    if (*cmd_cs) {
      cs.format = fmt;
      return census(cs, std::cout, std::cerr);
    }
  } catch (const polya::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}
