#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgh/machine.hpp"

namespace fgh {

// A strictly descending prefix w^alpha = entries[0] > entries[1] > ... of the
// would-be infinite sequence; the adversary turns it into a base function and
// a divergence witness.
struct DescendingSequence {
  Ordinal alpha;
  std::vector<Ordinal> entries;
};

// Checks alpha < e0, entries[0] == w^alpha, strict descent, and length >= 3
// (the claim looks two entries ahead). Throws ValidationError with the first
// offending index.
void validate_sequence(const DescendingSequence& seq);

// The minimal strictly increasing f with f(x) > mc(entries[x+1]) + x + 1:
//   f(0) = mc(entries[1]) + 2
//   f(x) = max(f(x-1) + 1, mc(entries[x+1]) + x + 2)
// Defined for 0 <= x <= m-1 where m = entries.size() - 1.
std::vector<Nat> base_function_prefix(const DescendingSequence& seq);

// base_function_prefix wrapped as a Derived BaseFunction with the given
// out-of-prefix policy.
BaseFunction build_base_function(const DescendingSequence& seq,
                                 GuardPolicy policy = GuardPolicy::Fail);

enum class ScheduleCase { One, Two };

// Extra data recorded for a Case Two transition: the least b >= a_i whose
// stack tops with a successor beta+1, and the length n and final register z
// of the standalone sub-derivation of i+1 copies of beta from register 1.
struct CaseTwoInfo {
  std::uint64_t b = 0;
  Ordinal beta;
  std::uint64_t n = 0;
  Nat z;
};

// The transition out of checkpoint i: at step a the stack topped with 0
// (Case One, next checkpoint a+1) or not (Case Two, next checkpoint b+n+1).
struct ScheduleEntry {
  std::size_t i = 0;
  std::uint64_t a = 0;
  ScheduleCase kase = ScheduleCase::One;
  std::optional<CaseTwoInfo> two;
};

enum class StopReason { Complete, FuelExhausted, Converged };

// Checkpoint schedule a_0 = 0 < a_1 < ... along the derivation of
// F^f_alpha(f(0)), produced as far as the claim range (i <= m-1) and fuel
// allow. `note` explains an early stop that was not plain fuel (the base
// function running past its prefix under GuardPolicy::Fail).
struct Schedule {
  std::vector<ScheduleEntry> entries;
  StopReason stop = StopReason::Complete;
  std::optional<std::uint64_t> converged_steps;
  std::uint64_t fuel_spent = 0;
  std::optional<std::string> note;
};

Schedule schedule(const DescendingSequence& seq, const Budget& budget = {},
                  GuardPolicy policy = GuardPolicy::Fail);

// Both claim inequalities at checkpoint i, with the witnessed values.
struct IndexCheck {
  std::size_t i = 0;
  std::uint64_t a = 0;
  Ordinal measure;  // h at step a_i
  Ordinal bound;    // entries[i+1]
  bool measure_ok = false;
  Nat reg;   // register at step a_i
  Nat f_i;   // f(i)
  bool register_ok = false;

  bool ok() const { return measure_ok && register_ok; }
};

enum class ClaimStatus { AllVerified, FailedAt, FuelExhausted, Converged };

struct ClaimReport {
  ClaimStatus status = ClaimStatus::FuelExhausted;
  std::optional<std::size_t> failed_index;  // set iff status == FailedAt
  std::vector<IndexCheck> checks;
  Schedule schedule;
  std::vector<Nat> f_prefix;
};

// Walks the derivation of F^f_alpha(f(0)), checking at every checkpoint a_i
// with i+1 <= m that the measure exceeds entries[i+1] and the register is at
// least f(i). Converged (the stack emptied — an artifact of the finite
// prefix) and FuelExhausted are distinct non-failure outcomes; FailedAt
// reports the first index where an inequality is false.
ClaimReport verify_claim(const DescendingSequence& seq, const Budget& budget = {},
                         GuardPolicy policy = GuardPolicy::Fail);

// Text form: first line `alpha: <ordinal>`, then one entry per line, '#'
// starts a comment, blank lines ignored. Throws ParseError / ValidationError.
DescendingSequence parse_sequence_text(std::string_view text);
DescendingSequence load_sequence_file(const std::string& path);

// Compact JSON renderings (per-index records; naturals as decimal strings).
std::string to_json(const ClaimReport& report);
std::string to_json(const Schedule& sched);

}  // namespace fgh
