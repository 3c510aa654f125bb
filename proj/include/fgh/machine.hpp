#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fgh/base_function.hpp"
#include "fgh/nat.hpp"
#include "fgh/ordinal.hpp"

namespace fgh {

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;
inline constexpr std::size_t kDefaultRegisterDigits = 100'000;
inline constexpr unsigned kDefaultRecursionDepth = 10'000;

// One run of equal ordinals on the stack. The successor rule pushes reg+1
// copies at once, where reg can be astronomically large; run-length encoding
// keeps that push O(1) in the count.
struct StackRun {
  Ordinal ordinal;
  Nat count;  // >= 1

  bool operator==(const StackRun& other) const {
    return count == other.count && ordinal == other.ordinal;
  }
};

// A point of a derivation: logical stack (concatenation of runs, front
// first; the machine works on the BACK) plus the numeric register.
struct MachineState {
  std::vector<StackRun> stack;  // canonical: adjacent runs differ
  Nat reg;

  bool operator==(const MachineState& other) const {
    return reg == other.reg && stack == other.stack;
  }
  bool operator!=(const MachineState& other) const { return !(*this == other); }
};

// Builds a state from an explicit run list, merging adjacent equal runs into
// canonical form. Throws std::invalid_argument on a zero count or a negative
// register.
MachineState make_state(std::vector<StackRun> stack, Nat reg);

// ([alpha], x).
MachineState initial_state(Ordinal alpha, Nat x);

// Resource limits for a bounded evaluation. Implicitly convertible from a
// bare step count, so run(f, a, x, 500) reads naturally.
struct Budget {
  std::uint64_t steps = kDefaultFuel;
  std::size_t max_register_digits = kDefaultRegisterDigits;
  unsigned max_recursion = kDefaultRecursionDepth;  // recursive oracle only
  unsigned max_tower = kDefaultTowerDepth;

  Budget() = default;
  Budget(std::uint64_t steps) : steps(steps) {}
};

// One application of the step function K to the LAST stack element:
//   empty stack          -> unchanged (fixed point)
//   top 0                -> pop, reg := f(reg)
//   top successor beta+1 -> pop, push (beta, reg+1) merging runs, reg := 1
//   top limit gamma      -> pop, push (gamma[reg], 1), reg unchanged
// Pure: no fuel, no register guard. Propagates eval_base errors untagged.
MachineState step(const BaseFunction& f, const MachineState& s,
                  unsigned max_tower = kDefaultTowerDepth);

// Ordinal measure h: sum of w^{a_i} over the logical stack, 0 for the empty
// stack. Strictly decreases under step while the stack is nonempty.
Ordinal measure(const MachineState& s);

// Outcome of a fuel-bounded evaluation. `value` is engaged iff the stack
// emptied within fuel, in which case `steps` is the FIRST empty-stack index;
// otherwise `steps` spent fuel. `last` is the final state either way.
struct EvalResult {
  std::optional<Nat> value;
  std::uint64_t steps = 0;
  MachineState last;
};

// F^f_alpha(x): iterate step from ([alpha], x) until the stack empties or
// fuel runs out. Throws OutOfDomain / RegisterOverflow (tagged with the step
// index) and DepthExceeded from the tower guard.
EvalResult run(const BaseFunction& f, const Ordinal& alpha, const Nat& x,
               const Budget& budget = {});

// Same loop from an arbitrary start state: smallest n with empty stack plus
// the final register.
EvalResult run_to_empty(const BaseFunction& f, std::vector<StackRun> stack, Nat reg,
                        const Budget& budget = {});

// k-fold application of F^f_beta starting from seed; k = 0 returns seed.
// The budget is shared across all k runs.
EvalResult iterate(const BaseFunction& f, const Ordinal& beta, const Nat& k, Nat seed,
                   const Budget& budget = {});

// One observable record of a derivation.
struct TraceEntry {
  std::uint64_t index = 0;
  MachineState state;
  Ordinal measure;
};

// Lazy derivation cursor: yields entries 0, 1, ... up to and including the
// first empty-stack state, or until fuel is spent. next() returns nullopt
// once exhausted.
class Trace {
 public:
  Trace(BaseFunction f, const Ordinal& alpha, const Nat& x, const Budget& budget = {});

  std::optional<TraceEntry> next();

 private:
  BaseFunction f_;
  Budget budget_;
  MachineState state_;
  std::uint64_t index_ = 0;
  bool finished_ = false;
};

// Eager convenience wrapper around Trace.
std::vector<TraceEntry> collect_trace(const BaseFunction& f, const Ordinal& alpha,
                                      const Nat& x, const Budget& budget = {});

}  // namespace fgh
