#pragma once

#include <vector>

#include "fgh/nat.hpp"

namespace fgh {

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

enum class OrdinalKind { Zero, Successor, Limit };

// An ordinal term <= epsilon_0 in Cantor normal form:
//
//   w^{e_0} * c_0 + ... + w^{e_n} * c_n
//
// with exponents strictly decreasing and coefficients >= 1, stored as a term
// list; the empty list is 0. epsilon_0 is a distinguished constant and never
// appears inside an exponent. Values are canonical: two ordinals are equal
// exactly when they are structurally identical.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;  // zero

  static Ordinal epsilon0();
  static Ordinal from_nat(Nat n);
  // w^exponent * coefficient; coefficient 0 gives zero.
  static Ordinal single_term(Ordinal exponent, Nat coefficient);
  // Builds from an explicit term list, validating the CNF invariants.
  static Ordinal from_terms(std::vector<Term> terms);

  bool is_epsilon0() const { return eps0_; }
  bool is_zero() const { return !eps0_ && terms_.empty(); }
  bool is_finite() const;  // < w

  // Term list view. Meaningless for epsilon_0 (always empty there).
  const std::vector<Term>& terms() const { return terms_; }

  bool operator==(const Ordinal& other) const;
  bool operator!=(const Ordinal& other) const { return !(*this == other); }

 private:
  std::vector<Term> terms_;
  bool eps0_ = false;
};

struct Ordinal::Term {
  Ordinal exponent;
  Nat coefficient;  // >= 1

  bool operator==(const Term& other) const {
    return exponent == other.exponent && coefficient == other.coefficient;
  }
};

// Total order on well-formed ordinals; epsilon_0 sits strictly above every
// CNF term list.
Ordering compare(const Ordinal& a, const Ordinal& b);

inline bool operator<(const Ordinal& a, const Ordinal& b) { return compare(a, b) == Ordering::LT; }
inline bool operator>(const Ordinal& a, const Ordinal& b) { return compare(a, b) == Ordering::GT; }
inline bool operator<=(const Ordinal& a, const Ordinal& b) { return compare(a, b) != Ordering::GT; }
inline bool operator>=(const Ordinal& a, const Ordinal& b) { return compare(a, b) != Ordering::LT; }

// Zero iff the term list is empty; Successor iff the last term has exponent
// 0; Limit otherwise. epsilon_0 is a limit.
OrdinalKind classify(const Ordinal& a);

// The b with b + 1 == a. Throws NotASuccessor unless classify(a) == Successor.
Ordinal predecessor(const Ordinal& a);

// Ordinary (non-commutative) ordinal addition in CNF: trailing terms of `a`
// below the leading exponent of `b` are absorbed. epsilon_0 absorbs from
// either side; the result is capped at epsilon_0.
Ordinal add(const Ordinal& a, const Ordinal& b);

// w^a. Throws ArgumentTooLarge for epsilon_0.
Ordinal omega_pow(const Ordinal& a);

// Inverse pair between naturals and ordinals below w. to_nat throws NotFinite
// for a >= w.
Ordinal from_nat(Nat n);
Nat to_nat(const Ordinal& a);

// Maximal coefficient: mc(0) = 0, otherwise the largest natural appearing as
// a coefficient anywhere in the term, exponents included. Throws
// ArgumentTooLarge for epsilon_0.
Nat max_coefficient(const Ordinal& a);

inline constexpr unsigned kDefaultTowerDepth = 10;

// w_0 = 0, w_{n+1} = w^{w_n}. Throws DepthExceeded for n > max_depth.
Ordinal omega_tower(unsigned n, unsigned max_depth = kDefaultTowerDepth);

}  // namespace fgh
