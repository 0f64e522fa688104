#include "polya_cli/commands.hpp"

#include <atomic>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "json.hpp"
#include "polya/errors.hpp"
#include "polya/families.hpp"
#include "polya/report.hpp"

namespace polya::cli {

using nlohmann::json;

namespace {

std::string join(const std::vector<Int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<GroupPresentation> resolve_groups(const GroupCheckArgs& args) {
  std::vector<GroupPresentation> out;
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) throw ParseError("cannot read " + args.file);
    std::stringstream ss;
    ss << in.rdbuf();
    out.push_back(parse_group_text(ss.str(), args.file));
    return out;
  }
  if (args.family.empty()) throw ParseError("either --family or --file is required");
  if (args.family.size() == 1) {
    if (!args.n) throw ParseError("family " + args.family + " needs --n");
    for (Int n = args.n->lo; n <= args.n->hi; ++n) out.push_back(family_group(args.family[0], static_cast<int>(n)));
    return out;
  }
  if (args.n) throw ParseError("--n only applies to single-letter families");
  out.push_back(named_group(args.family));
  return out;
}

ClassGroupOptions class_options(const Budgets& b) {
  ClassGroupOptions opts;
  opts.principal.max_nodes = b.max_enum;
  return opts;
}

std::string report_csv_header() {
  return "polynomial,status,field_discriminant,class_number,invariant_factors,po,po_nr,po_nr1,nr1_generation_bound";
}

std::string report_csv_row(const PolyaReport& r) {
  return "\"" + r.polynomial + "\"," + r.status + "," + std::to_string(r.field_discriminant) + "," +
         std::to_string(r.class_number) + "," + join(r.invariant_factors, ';') + "," + std::to_string(r.po.order) + "," +
         std::to_string(r.po_nr.order) + "," + std::to_string(r.po_nr1.order) + "," +
         (r.nr1_bound ? std::to_string(*r.nr1_bound) : std::string());
}

json brief_json(const PolyaReport& r) {
  return {{"polynomial", r.polynomial},
          {"field_discriminant", r.field_discriminant},
          {"invariant_factors", r.invariant_factors},
          {"class_number", r.class_number},
          {"po", r.po.order},
          {"po_nr", r.po_nr.order},
          {"po_nr1", r.po_nr1.order},
          {"nr1_generation_bound", r.nr1_bound ? json(*r.nr1_bound) : json(nullptr)},
          {"status", r.status}};
}

enum class Outcome { verified, undetermined, skipped, error, outside };

struct SurveyItem {
  Outcome outcome = Outcome::error;
  std::string line;
};

SurveyItem survey_one(const CubicPoly& f, const SurveyArgs& args) {
  SurveyItem item;
  auto skip = [&](const char* why) {
    item.outcome = Outcome::skipped;
    if (args.format == Format::csv)
      item.line = "\"" + f.to_string() + "\",skipped:" + why + ",,,,,,,";
    else
      item.line = json{{"polynomial", f.to_string()}, {"skipped", why}}.dump();
  };
  auto fail = [&](const char* kind, const std::string& what) {
    item.outcome = Outcome::error;
    if (args.format == Format::csv)
      item.line = "\"" + f.to_string() + "\",error:" + kind + ",,,,,,,";
    else
      item.line = json{{"polynomial", f.to_string()}, {"error", kind}, {"message", what}}.dump();
  };
  try {
    if (!is_irreducible(f)) {
      if (args.disc) item.outcome = Outcome::outside;
      else skip("reducible");
      return item;
    }
    std::optional<MaximalOrder> O;
    if (args.disc) {
      O.emplace(f);
      Int d = O->discriminant();
      if (d < args.disc->lo || d > args.disc->hi) {
        item.outcome = Outcome::outside;
        return item;
      }
    }
    if (is_galois_cubic(f)) {
      skip("galois");
      return item;
    }
    if (!O) O.emplace(f);
    PolyaReport r = verify_main_theorem(*O, args.prime_bound, class_options(args.budgets));
    item.outcome = r.status == "verified" ? Outcome::verified : Outcome::undetermined;
    if (args.format == Format::csv)
      item.line = report_csv_row(r);
    else
      item.line = args.brief ? brief_json(r).dump() : json(r).dump();
  } catch (const Inconclusive& e) {
    fail("inconclusive", e.what());
  } catch (const BudgetExceeded& e) {
    fail("budget", e.what());
  } catch (const std::overflow_error& e) {
    fail("overflow", e.what());
  }
  return item;
}

}  // namespace

int group_check(const GroupCheckArgs& args, std::ostream& out, std::ostream& err) {
  try {
    auto groups = resolve_groups(args);
    if (args.format == Format::csv)
      out << "group,degree,order,subgroup_order,T_size,condition_2B,frobenius,two_transitive\n";
    for (const auto& pres : groups) {
      PermGroup G = pres.build(args.budgets.max_closure);
      PermGroup H = G.stabilizer(G.degree() - 1);
      if (H.order() == G.order()) throw std::invalid_argument(pres.name + ": the point stabiliser is the whole group");
      CosetAction action(G, H);
      ConditionReport rep = check_condition_2B(G, H);
      bool frob = is_frobenius(G, action);
      bool two = action.size() >= 2 && is_2transitive(G, action);
      if (args.format == Format::csv) {
        out << pres.name << ',' << G.degree() << ',' << G.order() << ',' << H.order() << ',' << rep.T.size() << ','
            << (rep.holds ? "true" : "false") << ',' << (frob ? "true" : "false") << ',' << (two ? "true" : "false")
            << '\n';
      } else {
        out << json{{"group", pres.name},
                    {"degree", G.degree()},
                    {"order", G.order()},
                    {"subgroup_order", H.order()},
                    {"T_size", rep.T.size()},
                    {"derived_order", rep.derived.order()},
                    {"generated_order", rep.generated.order()},
                    {"condition_2B", rep.holds},
                    {"frobenius", frob},
                    {"two_transitive", two}}
                   .dump()
            << '\n';
      }
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kOk;
}

namespace {

// Shared front half of field-analyze and census.
std::optional<MaximalOrder> load_field(const FieldArgs& args, std::ostream& err) {
  if (args.prime_bound < 2) {
    err << "error: --prime-bound must be at least 2\n";
    return std::nullopt;
  }
  try {
    CubicPoly f = CubicPoly::parse(args.poly);
    if (!is_irreducible(f)) {
      err << "error: reducible polynomial " << f.to_string() << '\n';
      return std::nullopt;
    }
    return MaximalOrder(f);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return std::nullopt;
}

}  // namespace

int field_analyze(const FieldArgs& args, std::ostream& out, std::ostream& err) {
  auto O = load_field(args, err);
  if (!O) return kParseError;
  try {
    PolyaReport r = analyze_field(*O, args.prime_bound, class_options(args.budgets));
    if (args.format == Format::csv)
      out << report_csv_header() << '\n' << report_csv_row(r) << '\n';
    else
      out << json(r).dump(2) << '\n';
  } catch (const Inconclusive& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::overflow_error& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  }
  return kOk;
}

int census(const FieldArgs& args, std::ostream& out, std::ostream& err) {
  auto O = load_field(args, err);
  if (!O) return kParseError;
  auto rows = splitting_census(*O, args.prime_bound);
  if (args.format == Format::csv)
    out << census_csv(rows);
  else
    out << census_to_json(rows).dump(2) << '\n';
  return kOk;
}

int survey(const SurveyArgs& args, std::ostream& out, std::ostream& err, SurveyTally* tally) {
  if (args.prime_bound < 2) {
    err << "error: --prime-bound must be at least 2\n";
    return kParseError;
  }
  std::vector<CubicPoly> polys;
  if (!args.a2.empty() && !args.a1.empty() && !args.a0.empty())
    for (Int a2 = args.a2.lo; a2 <= args.a2.hi; ++a2)
      for (Int a1 = args.a1.lo; a1 <= args.a1.hi; ++a1)
        for (Int a0 = args.a0.lo; a0 <= args.a0.hi; ++a0) polys.push_back({a2, a1, a0});

  std::vector<std::optional<SurveyItem>> slots(polys.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < polys.size();) {
      SurveyItem item = survey_one(polys[i], args);
      {
        std::lock_guard lock(mu);
        slots[i] = std::move(item);
      }
      ready.notify_all();
    }
  };
  const unsigned nworkers = std::max(1u, args.workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < nworkers; ++w) pool.emplace_back(work);

  SurveyTally t;
  if (args.format == Format::csv && !polys.empty()) out << report_csv_header() << '\n';
  for (std::size_t i = 0; i < polys.size(); ++i) {
    SurveyItem item;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[i].has_value(); });
      item = std::move(*slots[i]);
      slots[i].reset();
    }
    if (item.outcome == Outcome::outside) {
      ++t.outside;
      continue;
    }
    out << item.line << '\n';
    ++t.fields;
    switch (item.outcome) {
      case Outcome::verified:
        ++t.verified;
        break;
      case Outcome::undetermined:
        ++t.undetermined;
        break;
      case Outcome::skipped:
        ++t.skipped;
        break;
      case Outcome::error:
        ++t.errors;
        break;
      case Outcome::outside:
        break;
    }
  }
  for (auto& th : pool) th.join();
  if (!polys.empty()) {
    json summary{{"fields", t.fields},
                 {"verified", t.verified},
                 {"undetermined_at_bound", t.undetermined},
                 {"skipped", t.skipped},
                 {"errors", t.errors},
                 {"prime_bound", args.prime_bound},
                 {"dedup", "by polynomial only"}};
    if (args.disc) summary["outside_disc_range"] = t.outside;
    if (args.format == Format::csv)
      err << "summary: " << summary.dump() << '\n';
    else
      out << json{{"summary", summary}}.dump() << '\n';
  }
  if (tally) *tally = t;
  return kOk;
}

}  // namespace polya::cli
