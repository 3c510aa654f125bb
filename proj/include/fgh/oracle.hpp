#pragma once

#include "fgh/machine.hpp"

namespace fgh {

// Direct-recursion evaluator of F^f_alpha, implementing the defining
// equations literally:
//
//   F^f_0(x)     = f(x)
//   F^f_{b+1}(x) = (F^f_b)^{(x+1)}(1)
//   F^f_g(x)     = F^f_{g[x]}(x)        for g a limit
//
// Deliberately naive (no memoization, no sharing with the machine) so it is
// an independent cross-check. Fuel decrements on every recursive call;
// `steps` in the result counts those calls. Native recursion depth is capped
// by budget.max_recursion (DepthExceeded beyond it).
EvalResult eval_recursive(const BaseFunction& f, const Ordinal& alpha, const Nat& x,
                          const Budget& budget = {});

}  // namespace fgh
