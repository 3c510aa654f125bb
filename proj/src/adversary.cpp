#include "fgh/adversary.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "fgh/errors.hpp"
#include "fgh/notation.hpp"

namespace fgh {

void validate_sequence(const DescendingSequence& seq) {
  if (seq.alpha.is_epsilon0()) {
    throw ValidationError(0, "alpha must be below e0");
  }
  if (seq.entries.size() < 3) {
    std::size_t at = seq.entries.empty() ? 0 : seq.entries.size() - 1;
    throw ValidationError(at, "need at least three entries (the claim looks two ahead)");
  }
  if (seq.entries[0] != omega_pow(seq.alpha)) {
    throw ValidationError(0, "first entry must be w^alpha");
  }
  for (std::size_t i = 0; i + 1 < seq.entries.size(); ++i) {
    if (compare(seq.entries[i + 1], seq.entries[i]) != Ordering::LT) {
      throw ValidationError(i + 1, "entries must be strictly decreasing");
    }
  }
}

std::vector<Nat> base_function_prefix(const DescendingSequence& seq) {
  validate_sequence(seq);
  const std::size_t m = seq.entries.size() - 1;
  std::vector<Nat> prefix;
  prefix.reserve(m);
  Nat first = max_coefficient(seq.entries[1]) + 2;
  prefix.push_back(std::move(first));
  for (std::size_t x = 1; x < m; ++x) {
    Nat floor = prefix.back() + 1;
    Nat constraint = max_coefficient(seq.entries[x + 1]) + x + 2;
    prefix.push_back(floor > constraint ? std::move(floor) : std::move(constraint));
  }
  return prefix;
}

BaseFunction build_base_function(const DescendingSequence& seq, GuardPolicy policy) {
  return BaseFunction::derived(base_function_prefix(seq), policy);
}

namespace {

enum class WalkOutcome { Arrived, Fuel, Empty };

// Cursor over the main derivation, charging every step (its own and the
// sub-derivations') against one shared budget.
struct Cursor {
  const BaseFunction& f;
  const Budget& budget;
  MachineState state;
  std::uint64_t idx = 0;
  std::uint64_t spent = 0;
  std::optional<std::uint64_t> first_empty;

  void tick() {
    try {
      state = fgh::step(f, state, budget.max_tower);
    } catch (OutOfDomain& e) {
      if (!e.step) e.step = idx;
      throw;
    }
    ++idx;
    ++spent;
    if (state.stack.empty() && !first_empty) first_empty = idx;
    if (decimal_digits(state.reg) > budget.max_register_digits) {
      RegisterOverflow err("register exceeded the digit guard");
      err.step = idx;
      throw err;
    }
  }

  WalkOutcome advance_to(std::uint64_t target) {
    for (;;) {
      if (state.stack.empty()) return WalkOutcome::Empty;
      if (idx == target) return WalkOutcome::Arrived;
      if (spent == budget.steps) return WalkOutcome::Fuel;
      tick();
    }
  }

  WalkOutcome advance_until_successor() {
    for (;;) {
      if (state.stack.empty()) return WalkOutcome::Empty;
      if (classify(state.stack.back().ordinal) == OrdinalKind::Successor) {
        return WalkOutcome::Arrived;
      }
      if (spent == budget.steps) return WalkOutcome::Fuel;
      tick();
    }
  }
};

ClaimReport run_construction(const DescendingSequence& seq, const Budget& budget,
                             GuardPolicy policy, bool check_claims) {
  validate_sequence(seq);

  ClaimReport report;
  report.f_prefix = base_function_prefix(seq);
  const BaseFunction f = build_base_function(seq, policy);
  const std::size_t m = seq.entries.size() - 1;

  Cursor cur{f, budget, initial_state(seq.alpha, report.f_prefix[0])};
  std::uint64_t a = 0;

  auto stop_fuel = [&] {
    report.status = ClaimStatus::FuelExhausted;
    report.schedule.stop = StopReason::FuelExhausted;
  };
  auto stop_converged = [&] {
    report.status = ClaimStatus::Converged;
    report.schedule.stop = StopReason::Converged;
    report.schedule.converged_steps = cur.first_empty;
  };

  auto walk = [&] {
    for (std::size_t i = 0; i < m; ++i) {
      switch (cur.advance_to(a)) {
        case WalkOutcome::Empty:
          stop_converged();
          return;
        case WalkOutcome::Fuel:
          stop_fuel();
          return;
        case WalkOutcome::Arrived:
          break;
      }

      if (check_claims) {
        IndexCheck chk;
        chk.i = i;
        chk.a = a;
        chk.measure = measure(cur.state);
        chk.bound = seq.entries[i + 1];
        chk.measure_ok = compare(chk.measure, chk.bound) == Ordering::GT;
        chk.reg = cur.state.reg;
        chk.f_i = report.f_prefix[i];
        chk.register_ok = chk.reg >= chk.f_i;
        bool ok = chk.ok();
        report.checks.push_back(std::move(chk));
        if (!ok) {
          report.status = ClaimStatus::FailedAt;
          report.failed_index = i;
          report.schedule.stop = StopReason::Complete;
          return;
        }
      }

      ScheduleEntry entry;
      entry.i = i;
      entry.a = a;
      if (classify(cur.state.stack.back().ordinal) == OrdinalKind::Zero) {
        entry.kase = ScheduleCase::One;
        a += 1;
      } else {
        entry.kase = ScheduleCase::Two;
        switch (cur.advance_until_successor()) {
          case WalkOutcome::Empty:
            stop_converged();
            return;
          case WalkOutcome::Fuel:
            stop_fuel();
            return;
          case WalkOutcome::Arrived:
            break;
        }
        CaseTwoInfo info;
        info.b = cur.idx;
        info.beta = predecessor(cur.state.stack.back().ordinal);

        Budget sub = budget;
        sub.steps = budget.steps - cur.spent;
        EvalResult res =
            run_to_empty(f, {StackRun{info.beta, Nat(i) + 1}}, 1, sub);
        cur.spent += res.steps;
        if (!res.value) {
          stop_fuel();
          return;
        }
        info.n = res.steps;
        info.z = *res.value;
        entry.two = std::move(info);
        a = entry.two->b + entry.two->n + 1;
      }
      report.schedule.entries.push_back(std::move(entry));
    }
    report.status = ClaimStatus::AllVerified;
    report.schedule.stop = StopReason::Complete;
  };

  try {
    walk();
  } catch (const OutOfDomain& e) {
    // A finite prefix ran out of data, not a refuted claim: report it like
    // fuel, with the reason attached.
    stop_fuel();
    std::ostringstream note;
    note << "base function needed past its prefix";
    if (e.step) note << " (step " << *e.step << ")";
    report.schedule.note = note.str();
  }
  report.schedule.fuel_spent = cur.spent;
  return report;
}

}  // namespace

Schedule schedule(const DescendingSequence& seq, const Budget& budget, GuardPolicy policy) {
  return run_construction(seq, budget, policy, /*check_claims=*/false).schedule;
}

ClaimReport verify_claim(const DescendingSequence& seq, const Budget& budget,
                         GuardPolicy policy) {
  return run_construction(seq, budget, policy, /*check_claims=*/true);
}

namespace {

std::string strip(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

DescendingSequence parse_sequence_text(std::string_view text) {
  DescendingSequence seq;
  bool have_alpha = false;
  std::size_t line_start = 0;

  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view raw = text.substr(line_start, line_end - line_start);

    std::string_view body = raw.substr(0, raw.find('#'));
    std::string line = strip(body);
    if (!line.empty()) {
      try {
        if (!have_alpha) {
          if (line.rfind("alpha:", 0) != 0) {
            throw ParseError(0, "expected 'alpha: <ordinal>' header");
          }
          seq.alpha = parse(line.substr(6));
          have_alpha = true;
        } else {
          seq.entries.push_back(parse(line));
        }
      } catch (const ParseError& e) {
        // Re-anchor the offset to the whole text.
        throw ParseError(line_start + e.position, e.message);
      }
    }

    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }

  if (!have_alpha) {
    throw ParseError(text.size(), "expected 'alpha: <ordinal>' header");
  }
  return seq;
}

DescendingSequence load_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open sequence file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequence_text(buf.str());
}

namespace {

using nlohmann::json;

const char* status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::AllVerified: return "all_verified";
    case ClaimStatus::FailedAt: return "failed_at";
    case ClaimStatus::FuelExhausted: return "fuel_exhausted";
    case ClaimStatus::Converged: return "converged";
  }
  return "unknown";
}

const char* stop_name(StopReason s) {
  switch (s) {
    case StopReason::Complete: return "complete";
    case StopReason::FuelExhausted: return "fuel_exhausted";
    case StopReason::Converged: return "converged";
  }
  return "unknown";
}

json schedule_to_json_obj(const Schedule& sched) {
  json entries = json::array();
  for (const ScheduleEntry& e : sched.entries) {
    json row;
    row["i"] = e.i;
    row["a"] = e.a;
    row["case"] = e.kase == ScheduleCase::One ? "one" : "two";
    if (e.two) {
      row["b"] = e.two->b;
      row["beta"] = render(e.two->beta);
      row["n"] = e.two->n;
      row["z"] = e.two->z.str();
    }
    entries.push_back(std::move(row));
  }
  json j;
  j["entries"] = std::move(entries);
  j["stop"] = stop_name(sched.stop);
  j["fuel_spent"] = sched.fuel_spent;
  if (sched.converged_steps) j["converged_steps"] = *sched.converged_steps;
  if (sched.note) j["note"] = *sched.note;
  return j;
}

}  // namespace

std::string to_json(const Schedule& sched) { return schedule_to_json_obj(sched).dump(); }

std::string to_json(const ClaimReport& report) {
  json checks = json::array();
  for (const IndexCheck& c : report.checks) {
    json row;
    row["i"] = c.i;
    row["a"] = c.a;
    row["measure"] = render(c.measure);
    row["bound"] = render(c.bound);
    row["measure_ok"] = c.measure_ok;
    row["reg"] = c.reg.str();
    row["f_i"] = c.f_i.str();
    row["register_ok"] = c.register_ok;
    checks.push_back(std::move(row));
  }
  json prefix = json::array();
  for (const Nat& v : report.f_prefix) prefix.push_back(v.str());

  json j;
  j["status"] = status_name(report.status);
  if (report.failed_index) j["failed_index"] = *report.failed_index;
  j["checks"] = std::move(checks);
  j["f_prefix"] = std::move(prefix);
  j["schedule"] = schedule_to_json_obj(report.schedule);
  return j.dump();
}

}  // namespace fgh
