#include "fgh/ordinal.hpp"

#include <algorithm>
#include <utility>

#include "fgh/errors.hpp"

namespace fgh {

Ordinal Ordinal::epsilon0() {
  Ordinal o;
  o.eps0_ = true;
  return o;
}

Ordinal Ordinal::from_nat(Nat n) {
  Ordinal o;
  if (n > 0) o.terms_.push_back(Term{Ordinal{}, std::move(n)});
  return o;
}

Ordinal Ordinal::single_term(Ordinal exponent, Nat coefficient) {
  if (coefficient == 0) return Ordinal{};
  if (exponent.is_epsilon0())
    throw ArgumentTooLarge("epsilon_0 cannot appear as an exponent");
  Ordinal o;
  o.terms_.push_back(Term{std::move(exponent), std::move(coefficient)});
  return o;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) throw Error("CNF coefficient must be >= 1");
    if (terms[i].exponent.is_epsilon0())
      throw ArgumentTooLarge("epsilon_0 cannot appear as an exponent");
    if (i > 0 && compare(terms[i - 1].exponent, terms[i].exponent) != Ordering::GT)
      throw Error("CNF exponents must be strictly decreasing");
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

bool Ordinal::is_finite() const {
  if (eps0_) return false;
  return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent.is_zero());
}

bool Ordinal::operator==(const Ordinal& other) const {
  return eps0_ == other.eps0_ && terms_ == other.terms_;
}

Ordering compare(const Ordinal& a, const Ordinal& b) {
  if (a.is_epsilon0()) return b.is_epsilon0() ? Ordering::EQ : Ordering::GT;
  if (b.is_epsilon0()) return Ordering::LT;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    Ordering e = compare(ta[i].exponent, tb[i].exponent);
    if (e != Ordering::EQ) return e;
    if (ta[i].coefficient != tb[i].coefficient)
      return ta[i].coefficient < tb[i].coefficient ? Ordering::LT : Ordering::GT;
  }
  if (ta.size() == tb.size()) return Ordering::EQ;
  return ta.size() < tb.size() ? Ordering::LT : Ordering::GT;
}

OrdinalKind classify(const Ordinal& a) {
  if (a.is_epsilon0()) return OrdinalKind::Limit;
  if (a.terms().empty()) return OrdinalKind::Zero;
  return a.terms().back().exponent.is_zero() ? OrdinalKind::Successor : OrdinalKind::Limit;
}

Ordinal predecessor(const Ordinal& a) {
  if (classify(a) != OrdinalKind::Successor)
    throw NotASuccessor("predecessor of a non-successor ordinal");
  std::vector<Ordinal::Term> terms = a.terms();
  if (terms.back().coefficient == 1)
    terms.pop_back();
  else
    terms.back().coefficient -= 1;
  return Ordinal::from_terms(std::move(terms));
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (a.is_epsilon0() || b.is_epsilon0()) return Ordinal::epsilon0();
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.terms().front().exponent;
  std::vector<Ordinal::Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  std::size_t i = 0;
  while (i < a.terms().size() && compare(a.terms()[i].exponent, lead) == Ordering::GT) {
    out.push_back(a.terms()[i]);
    ++i;
  }
  if (i < a.terms().size() && compare(a.terms()[i].exponent, lead) == Ordering::EQ) {
    out.push_back(Ordinal::Term{lead, a.terms()[i].coefficient + b.terms().front().coefficient});
    out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
  } else {
    out.insert(out.end(), b.terms().begin(), b.terms().end());
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal omega_pow(const Ordinal& a) {
  if (a.is_epsilon0()) throw ArgumentTooLarge("omega_pow(epsilon_0)");
  return Ordinal::single_term(a, 1);
}

Ordinal from_nat(Nat n) { return Ordinal::from_nat(std::move(n)); }

Nat to_nat(const Ordinal& a) {
  if (!a.is_finite()) throw NotFinite("to_nat of an ordinal >= w");
  return a.terms().empty() ? Nat(0) : a.terms().front().coefficient;
}

Nat max_coefficient(const Ordinal& a) {
  if (a.is_epsilon0()) throw ArgumentTooLarge("mc(epsilon_0)");
  Nat best = 0;
  for (const auto& t : a.terms()) {
    if (t.coefficient > best) best = t.coefficient;
    Nat sub = max_coefficient(t.exponent);
    if (sub > best) best = std::move(sub);
  }
  return best;
}

Ordinal omega_tower(unsigned n, unsigned max_depth) {
  if (n > max_depth)
    throw DepthExceeded("omega_tower(" + std::to_string(n) + ") exceeds depth limit " +
                        std::to_string(max_depth));
  Ordinal t;  // w_0 = 0
  for (unsigned i = 0; i < n; ++i) t = omega_pow(t);
  return t;
}

}  // namespace fgh
