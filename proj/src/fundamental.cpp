#include "fgh/fundamental.hpp"

#include <utility>
#include <vector>

#include "fgh/errors.hpp"

namespace fgh {

Ordinal fund_seq(const Ordinal& gamma, const Nat& x, unsigned max_tower) {
  if (classify(gamma) != OrdinalKind::Limit) {
    throw NotALimit("fund_seq: argument is not a limit ordinal");
  }
  if (x < 0) {
    throw NotFinite("fund_seq: negative index");
  }
  if (gamma.is_epsilon0()) {
    if (x > max_tower) {
      throw DepthExceeded("fund_seq: epsilon0 index exceeds tower guard");
    }
    return omega_tower(static_cast<unsigned>(x), max_tower);
  }

  // gamma = delta + w^beta * a with beta > 0 (limit => last exponent nonzero).
  const auto& ts = gamma.terms();
  const Ordinal::Term& last = ts.back();
  const Ordinal& beta = last.exponent;

  // delta' = delta + w^beta * (a - 1); drop the term when a == 1.
  std::vector<Ordinal::Term> head(ts.begin(), ts.end() - 1);
  if (last.coefficient > 1) {
    head.push_back(Ordinal::Term{beta, last.coefficient - 1});
  }

  switch (classify(beta)) {
    case OrdinalKind::Successor: {
      // gamma[x] = delta' + w^{beta0} * x.
      if (x == 0) {
        return Ordinal::from_terms(std::move(head));
      }
      Ordinal beta0 = predecessor(beta);
      head.push_back(Ordinal::Term{std::move(beta0), x});
      return Ordinal::from_terms(std::move(head));
    }
    case OrdinalKind::Limit: {
      // gamma[x] = delta' + w^{beta[x]}.
      Ordinal bx = fund_seq(beta, x, max_tower);
      head.push_back(Ordinal::Term{std::move(bx), 1});
      return Ordinal::from_terms(std::move(head));
    }
    case OrdinalKind::Zero:
      break;  // unreachable: last exponent of a limit is nonzero
  }
  throw Error("fund_seq: malformed limit ordinal");
}

bool notice1_holds(const Ordinal& gamma, const Ordinal& beta, unsigned max_tower) {
  Nat index = max_coefficient(beta) + 1;
  return compare(fund_seq(gamma, index, max_tower), beta) == Ordering::GT;
}

}  // namespace fgh
