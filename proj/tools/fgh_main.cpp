#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fgh/adversary.hpp"
#include "fgh/errors.hpp"
#include "fgh/fundamental.hpp"
#include "fgh/machine.hpp"
#include "fgh/notation.hpp"
#include "fgh/oracle.hpp"

namespace {

using namespace fgh;
using nlohmann::json;

// Exit codes (a stable contract): 0 ok, 2 parse error, 3 domain error,
// 4 fuel exhausted, 5 claim failed, 6 derivation converged.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitFuel = 4;
constexpr int kExitFailed = 5;
constexpr int kExitConverged = 6;

[[noreturn]] void fail_parse(const std::string& input, const ParseError& e) {
  std::cerr << "parse error: " << e.message << "\n";
  std::cerr << "  " << input << "\n";
  std::cerr << "  " << std::string(std::min(e.position, input.size()), ' ') << "^\n";
  std::exit(kExitParse);
}

Ordinal parse_or_exit(const std::string& text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    fail_parse(text, e);
  }
}

Nat nat_or_exit(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    std::cerr << "parse error: expected a decimal natural, got '" << text << "'\n";
    std::exit(kExitParse);
  }
  return Nat(text);
}

// fspec grammar: succ | affine:a,b | table:v0,v1,...;affine:a,b
BaseFunction::Affine affine_or_exit(const std::string& spec, const std::string& whole) {
  auto comma = spec.find(',');
  if (spec.rfind("affine:", 0) != 0 || comma == std::string::npos) {
    std::cerr << "parse error: expected 'affine:a,b' in '" << whole << "'\n";
    std::exit(kExitParse);
  }
  Nat a = nat_or_exit(spec.substr(7, comma - 7));
  Nat b = nat_or_exit(spec.substr(comma + 1));
  if (a < 1) {
    std::cerr << "parse error: affine slope must be >= 1 in '" << whole << "'\n";
    std::exit(kExitParse);
  }
  return BaseFunction::Affine{std::move(a), std::move(b)};
}

BaseFunction fspec_or_exit(const std::string& spec) {
  if (spec == "succ") return BaseFunction::succ();
  if (spec.rfind("affine:", 0) == 0) {
    BaseFunction::Affine aff = affine_or_exit(spec, spec);
    return BaseFunction::affine(std::move(aff.a), std::move(aff.b));
  }
  if (spec.rfind("table:", 0) == 0) {
    auto semi = spec.find(';');
    if (semi == std::string::npos) {
      std::cerr << "parse error: table spec needs ';affine:a,b' tail in '" << spec << "'\n";
      std::exit(kExitParse);
    }
    std::vector<Nat> values;
    std::string list = spec.substr(6, semi - 6);
    if (!list.empty()) {
      std::istringstream in(list);
      std::string item;
      while (std::getline(in, item, ',')) values.push_back(nat_or_exit(item));
    }
    return BaseFunction::table(std::move(values), affine_or_exit(spec.substr(semi + 1), spec));
  }
  std::cerr << "parse error: unknown base function '" << spec
            << "' (expected succ | affine:a,b | table:...;affine:a,b)\n";
  std::exit(kExitParse);
}

std::string reg_summary(const Nat& reg) {
  std::size_t digits = decimal_digits(reg);
  if (digits <= 40) return reg.str();
  return "~10^" + std::to_string(digits - 1);
}

std::string state_summary(const MachineState& s) {
  std::ostringstream out;
  out << "stack=[";
  for (std::size_t i = 0; i < s.stack.size(); ++i) {
    if (i) out << ", ";
    out << render(s.stack[i].ordinal);
    if (s.stack[i].count != 1) out << " x" << s.stack[i].count;
  }
  out << "] reg=" << reg_summary(s.reg);
  return out.str();
}

int report_fuel_exhausted(const EvalResult& res) {
  std::cout << "FUEL_EXHAUSTED (steps=" << res.steps << ")\n";
  std::cout << "last: " << state_summary(res.last) << "\n";
  return kExitFuel;
}

int cmd_eval(const std::string& alpha_text, const std::string& x_text,
             const std::string& f_spec, std::uint64_t fuel, const std::string& engine) {
  Ordinal alpha = parse_or_exit(alpha_text);
  Nat x = nat_or_exit(x_text);
  BaseFunction f = fspec_or_exit(f_spec);
  Budget budget(fuel);
  EvalResult res = engine == "recursive" ? eval_recursive(f, alpha, x, budget)
                                         : run(f, alpha, x, budget);
  if (!res.value) return report_fuel_exhausted(res);
  std::cout << *res.value << " (steps=" << res.steps << ")\n";
  return kExitOk;
}

int cmd_trace(const std::string& alpha_text, const std::string& x_text,
              const std::string& f_spec, std::uint64_t fuel, const std::string& format) {
  Ordinal alpha = parse_or_exit(alpha_text);
  Nat x = nat_or_exit(x_text);
  BaseFunction f = fspec_or_exit(f_spec);
  Trace cursor(f, alpha, x, Budget(fuel));
  bool emptied = false;
  while (auto entry = cursor.next()) {
    emptied = entry->state.stack.empty();
    if (format == "jsonl") {
      json line;
      line["index"] = entry->index;
      json stack = json::array();
      for (const StackRun& run : entry->state.stack) {
        stack.push_back(json::array({render(run.ordinal), run.count.str()}));
      }
      line["stack"] = std::move(stack);
      line["reg"] = entry->state.reg.str();
      line["measure"] = render(entry->measure);
      std::cout << line.dump() << "\n";
    } else {
      std::cout << entry->index << ": measure=" << render(entry->measure) << " "
                << state_summary(entry->state) << "\n";
    }
  }
  return emptied ? kExitOk : kExitFuel;
}

int cmd_adversary(const std::string& path, std::uint64_t fuel, bool extend, bool as_json) {
  DescendingSequence seq;
  try {
    seq = load_sequence_file(path);
  } catch (const ParseError& e) {
    std::cerr << "parse error in " << path << ": " << e.what() << "\n";
    return kExitParse;
  }
  GuardPolicy policy = extend ? GuardPolicy::Extend : GuardPolicy::Fail;
  ClaimReport report = verify_claim(seq, Budget(fuel), policy);

  if (as_json) {
    std::cout << to_json(report) << "\n";
  } else {
    std::cout << "f:";
    for (const Nat& v : report.f_prefix) std::cout << " " << v;
    std::cout << "   (x = 0.." << report.f_prefix.size() - 1 << ")\n";
    std::cout << "schedule:\n";
    for (const ScheduleEntry& e : report.schedule.entries) {
      std::cout << "  i=" << e.i << " a=" << e.a
                << " case=" << (e.kase == ScheduleCase::One ? "one" : "two");
      if (e.two) {
        std::cout << " b=" << e.two->b << " beta=" << render(e.two->beta)
                  << " n=" << e.two->n << " z=" << e.two->z;
      }
      std::cout << "\n";
    }
    std::cout << "checks:\n";
    for (const IndexCheck& c : report.checks) {
      std::cout << "  i=" << c.i << " a=" << c.a << " h=" << render(c.measure)
                << (c.measure_ok ? " > " : " !> ") << render(c.bound)
                << (c.measure_ok ? " ok" : " FAIL") << "; reg=" << reg_summary(c.reg)
                << (c.register_ok ? " >= " : " !>= ") << "f(" << c.i << ")=" << c.f_i
                << (c.register_ok ? " ok" : " FAIL") << "\n";
    }
    if (report.schedule.note) std::cout << "note: " << *report.schedule.note << "\n";
  }

  switch (report.status) {
    case ClaimStatus::AllVerified:
      if (!as_json) std::cout << "status: ALL_VERIFIED\n";
      return kExitOk;
    case ClaimStatus::FailedAt:
      if (!as_json) std::cout << "status: FAILED_AT i=" << *report.failed_index << "\n";
      return kExitFailed;
    case ClaimStatus::FuelExhausted:
      if (!as_json) {
        std::cout << "status: FUEL_EXHAUSTED (spent=" << report.schedule.fuel_spent << ")\n";
      }
      return kExitFuel;
    case ClaimStatus::Converged:
      if (!as_json) {
        std::cout << "status: CONVERGED (steps=" << *report.schedule.converged_steps << ")\n";
      }
      return kExitConverged;
  }
  return kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordinal arithmetic and the relativised fast-growing hierarchy"};
  app.require_subcommand(1);

  std::string expr_a, expr_b, x_text, f_spec = "succ", seq_path;
  std::uint64_t fuel = kDefaultFuel;
  unsigned tower_n = 0, tower_depth = kDefaultTowerDepth;
  std::string engine = "machine", format = "text";
  bool extend = false, as_json = false;

  auto* norm = app.add_subcommand("normalize", "parse an ordinal and print its canonical form");
  norm->add_option("expr", expr_a, "ordinal expression")->required();

  auto* cmp = app.add_subcommand("cmp", "compare two ordinals (LT, EQ or GT)");
  cmp->add_option("a", expr_a)->required();
  cmp->add_option("b", expr_b)->required();

  auto* mc = app.add_subcommand("mc", "maximal coefficient of an ordinal");
  mc->add_option("expr", expr_a)->required();

  auto* fs = app.add_subcommand("fs", "x-th fundamental sequence member of a limit ordinal");
  fs->add_option("expr", expr_a)->required();
  fs->add_option("x", x_text)->required();

  auto* tower = app.add_subcommand("tower", "the n-th term of the omega tower");
  tower->add_option("n", tower_n)->required();
  tower->add_option("--max-depth", tower_depth, "tower depth guard");

  auto* eval = app.add_subcommand("eval", "evaluate F_alpha(x) relative to a base function");
  eval->add_option("--alpha", expr_a)->required();
  eval->add_option("--x", x_text)->required();
  eval->add_option("--f", f_spec, "succ | affine:a,b | table:v0,v1,...;affine:a,b");
  eval->add_option("--fuel", fuel, "step budget");
  eval->add_option("--engine", engine)->check(CLI::IsMember({"machine", "recursive"}));

  auto* trace = app.add_subcommand("trace", "print the derivation state by state");
  trace->add_option("--alpha", expr_a)->required();
  trace->add_option("--x", x_text)->required();
  trace->add_option("--f", f_spec, "succ | affine:a,b | table:v0,v1,...;affine:a,b");
  trace->add_option("--fuel", fuel, "step budget");
  trace->add_option("--format", format)->check(CLI::IsMember({"text", "jsonl"}));

  auto* adv = app.add_subcommand("adversary",
                                 "build f from a descending sequence and verify the claim");
  adv->add_option("--seq", seq_path, "sequence file")->required();
  adv->add_option("--fuel", fuel, "step budget");
  adv->add_flag("--extend", extend, "extend f past its prefix instead of failing");
  adv->add_flag("--json", as_json, "print the report as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*norm) {
      std::cout << render(parse_or_exit(expr_a)) << "\n";
    } else if (*cmp) {
      Ordering ord = compare(parse_or_exit(expr_a), parse_or_exit(expr_b));
      std::cout << (ord == Ordering::LT ? "LT" : ord == Ordering::EQ ? "EQ" : "GT") << "\n";
    } else if (*mc) {
      std::cout << max_coefficient(parse_or_exit(expr_a)) << "\n";
    } else if (*fs) {
      std::cout << render(fund_seq(parse_or_exit(expr_a), nat_or_exit(x_text))) << "\n";
    } else if (*tower) {
      std::cout << render(omega_tower(tower_n, tower_depth)) << "\n";
    } else if (*eval) {
      return cmd_eval(expr_a, x_text, f_spec, fuel, engine);
    } else if (*trace) {
      return cmd_trace(expr_a, x_text, f_spec, fuel, format);
    } else if (*adv) {
      return cmd_adversary(seq_path, fuel, extend, as_json);
    }
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
