#include "fgh/oracle.hpp"

#include <optional>
#include <utility>

#include "fgh/errors.hpp"
#include "fgh/fundamental.hpp"

namespace fgh {

namespace {

struct RecEval {
  const BaseFunction& f;
  const Budget& budget;
  std::uint64_t spent = 0;
  MachineState exhausted_at;  // innermost pending call when fuel ran out

  std::optional<Nat> eval(const Ordinal& alpha, const Nat& x, unsigned depth) {
    if (depth > budget.max_recursion) {
      throw DepthExceeded("recursive evaluator past its depth limit");
    }
    if (spent == budget.steps) {
      exhausted_at = MachineState{{StackRun{alpha, 1}}, x};
      return std::nullopt;
    }
    ++spent;

    switch (classify(alpha)) {
      case OrdinalKind::Zero: {
        Nat value = eval_base(f, x);
        if (decimal_digits(value) > budget.max_register_digits) {
          throw RegisterOverflow("value exceeded the digit guard");
        }
        return value;
      }
      case OrdinalKind::Successor: {
        Ordinal beta = predecessor(alpha);
        Nat cur = 1;
        for (Nat j = 0; j <= x; ++j) {
          std::optional<Nat> next = eval(beta, cur, depth + 1);
          if (!next) return std::nullopt;
          cur = std::move(*next);
        }
        return cur;
      }
      case OrdinalKind::Limit:
        return eval(fund_seq(alpha, x, budget.max_tower), x, depth + 1);
    }
    throw Error("eval_recursive: unreachable");
  }
};

}  // namespace

EvalResult eval_recursive(const BaseFunction& f, const Ordinal& alpha, const Nat& x,
                          const Budget& budget) {
  RecEval rec{f, budget};
  std::optional<Nat> value = rec.eval(alpha, x, 0);
  if (value) {
    MachineState done{{}, *value};
    return EvalResult{std::move(value), rec.spent, std::move(done)};
  }
  return EvalResult{std::nullopt, rec.spent, std::move(rec.exhausted_at)};
}

}  // namespace fgh
