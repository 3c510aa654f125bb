#include "fgh/machine.hpp"

#include <stdexcept>
#include <utility>

#include "fgh/errors.hpp"
#include "fgh/fundamental.hpp"

namespace fgh {

MachineState make_state(std::vector<StackRun> stack, Nat reg) {
  if (reg < 0) throw std::invalid_argument("register must be a natural");
  std::vector<StackRun> canon;
  canon.reserve(stack.size());
  for (StackRun& run : stack) {
    if (run.count < 1) throw std::invalid_argument("stack run count must be >= 1");
    if (!canon.empty() && canon.back().ordinal == run.ordinal) {
      canon.back().count += run.count;
    } else {
      canon.push_back(std::move(run));
    }
  }
  return MachineState{std::move(canon), std::move(reg)};
}

MachineState initial_state(Ordinal alpha, Nat x) {
  if (x < 0) throw std::invalid_argument("register must be a natural");
  return MachineState{{StackRun{std::move(alpha), 1}}, std::move(x)};
}

namespace {

// Removes one copy of the top ordinal.
void pop_one(std::vector<StackRun>& stack) {
  if (stack.back().count > 1) {
    stack.back().count -= 1;
  } else {
    stack.pop_back();
  }
}

// Pushes `count` copies of `a`, merging with an equal run already on top.
void push_run(std::vector<StackRun>& stack, Ordinal a, Nat count) {
  if (!stack.empty() && stack.back().ordinal == a) {
    stack.back().count += count;
  } else {
    stack.push_back(StackRun{std::move(a), std::move(count)});
  }
}

}  // namespace

MachineState step(const BaseFunction& f, const MachineState& s, unsigned max_tower) {
  if (s.stack.empty()) return s;

  MachineState next = s;
  const Ordinal top = next.stack.back().ordinal;
  switch (classify(top)) {
    case OrdinalKind::Zero:
      pop_one(next.stack);
      next.reg = eval_base(f, next.reg);
      break;
    case OrdinalKind::Successor: {
      Ordinal beta = predecessor(top);
      Nat copies = next.reg + 1;
      pop_one(next.stack);
      push_run(next.stack, std::move(beta), std::move(copies));
      next.reg = 1;
      break;
    }
    case OrdinalKind::Limit: {
      Ordinal member = fund_seq(top, next.reg, max_tower);
      pop_one(next.stack);
      push_run(next.stack, std::move(member), 1);
      break;
    }
  }
  return next;
}

Ordinal measure(const MachineState& s) {
  if (s.stack.empty()) return Ordinal{};

  // Derivation stacks are weakly decreasing front-to-back, so after RLE the
  // run ordinals are strictly decreasing and the sum is already in CNF.
  bool sorted = true;
  bool has_eps0 = false;
  for (std::size_t i = 0; i < s.stack.size(); ++i) {
    if (s.stack[i].ordinal.is_epsilon0()) has_eps0 = true;
    if (i > 0 && compare(s.stack[i - 1].ordinal, s.stack[i].ordinal) != Ordering::GT) {
      sorted = false;
    }
  }
  // w^{e0} = e0 and e0 absorbs everything after it under add.
  if (has_eps0) return Ordinal::epsilon0();
  if (sorted) {
    std::vector<Ordinal::Term> terms;
    terms.reserve(s.stack.size());
    for (const StackRun& run : s.stack) {
      terms.push_back(Ordinal::Term{run.ordinal, run.count});
    }
    return Ordinal::from_terms(std::move(terms));
  }
  // Hand-built non-monotonic stack: fold the ordinal sum left to right.
  Ordinal acc;
  for (const StackRun& run : s.stack) {
    acc = add(acc, Ordinal::single_term(run.ordinal, run.count));
  }
  return acc;
}

namespace {

// The shared evaluation loop: steps `state` until the stack empties or
// `budget.steps` applications are spent, enforcing the register guard and
// tagging domain errors with the step index.
EvalResult bounded_loop(const BaseFunction& f, MachineState state, const Budget& budget) {
  std::uint64_t n = 0;
  for (;;) {
    if (state.stack.empty()) {
      Nat value = state.reg;
      return EvalResult{std::move(value), n, std::move(state)};
    }
    if (n == budget.steps) {
      return EvalResult{std::nullopt, n, std::move(state)};
    }
    try {
      state = step(f, state, budget.max_tower);
    } catch (OutOfDomain& e) {
      if (!e.step) e.step = n;
      throw;
    }
    ++n;
    if (decimal_digits(state.reg) > budget.max_register_digits) {
      RegisterOverflow err("register exceeded the digit guard");
      err.step = n;
      throw err;
    }
  }
}

}  // namespace

EvalResult run(const BaseFunction& f, const Ordinal& alpha, const Nat& x,
               const Budget& budget) {
  return bounded_loop(f, initial_state(alpha, x), budget);
}

EvalResult run_to_empty(const BaseFunction& f, std::vector<StackRun> stack, Nat reg,
                        const Budget& budget) {
  return bounded_loop(f, make_state(std::move(stack), std::move(reg)), budget);
}

EvalResult iterate(const BaseFunction& f, const Ordinal& beta, const Nat& k, Nat seed,
                   const Budget& budget) {
  if (k < 0) throw std::invalid_argument("iteration count must be a natural");
  Nat cur = std::move(seed);
  std::uint64_t spent = 0;
  for (Nat j = 0; j < k; ++j) {
    Budget inner = budget;
    inner.steps = budget.steps - spent;
    EvalResult res = bounded_loop(f, initial_state(beta, cur), inner);
    spent += res.steps;
    if (!res.value) {
      return EvalResult{std::nullopt, spent, std::move(res.last)};
    }
    cur = *res.value;
  }
  MachineState final_state{{}, cur};
  return EvalResult{std::move(cur), spent, std::move(final_state)};
}

Trace::Trace(BaseFunction f, const Ordinal& alpha, const Nat& x, const Budget& budget)
    : f_(std::move(f)), budget_(budget), state_(initial_state(alpha, x)) {}

std::optional<TraceEntry> Trace::next() {
  if (finished_) return std::nullopt;

  TraceEntry entry{index_, state_, measure(state_)};
  if (state_.stack.empty() || index_ == budget_.steps) {
    finished_ = true;
    return entry;
  }
  try {
    state_ = step(f_, state_, budget_.max_tower);
  } catch (OutOfDomain& e) {
    if (!e.step) e.step = index_;
    throw;
  }
  ++index_;
  if (decimal_digits(state_.reg) > budget_.max_register_digits) {
    RegisterOverflow err("register exceeded the digit guard");
    err.step = index_;
    throw err;
  }
  return entry;
}

std::vector<TraceEntry> collect_trace(const BaseFunction& f, const Ordinal& alpha,
                                      const Nat& x, const Budget& budget) {
  Trace cursor(f, alpha, x, budget);
  std::vector<TraceEntry> out;
  while (auto entry = cursor.next()) {
    out.push_back(std::move(*entry));
  }
  return out;
}

}  // namespace fgh
