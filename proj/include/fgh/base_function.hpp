#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "fgh/nat.hpp"

namespace fgh {

// What a Derived base function does past the end of its table: refuse
// (OutOfDomain) or keep climbing by one per step. Extending voids the
// mc-versus-sequence guarantees the table was built from, so Fail is the
// default everywhere.
enum class GuardPolicy { Fail, Extend };

// A total function N -> N given by a finite spec: the parameter f of the
// relativised hierarchy.
class BaseFunction {
 public:
  struct Succ {};
  struct Affine {
    Nat a;  // >= 1
    Nat b;
  };
  struct Table {
    std::vector<Nat> values;
    Affine tail;  // used at indices past the table
  };
  // Finite strictly increasing table, typically produced by the adversary
  // construction; shared so copies stay cheap.
  struct Derived {
    std::shared_ptr<const std::vector<Nat>> prefix;  // nonempty
    GuardPolicy policy = GuardPolicy::Fail;
  };

  BaseFunction() : spec_(Succ{}) {}

  static BaseFunction succ() { return BaseFunction(Succ{}); }
  static BaseFunction affine(Nat a, Nat b);
  static BaseFunction table(std::vector<Nat> values, Affine tail);
  static BaseFunction derived(std::vector<Nat> prefix, GuardPolicy policy = GuardPolicy::Fail);

  using Spec = std::variant<Succ, Affine, Table, Derived>;
  const Spec& spec() const { return spec_; }

 private:
  explicit BaseFunction(Spec spec) : spec_(std::move(spec)) {}
  Spec spec_;
};

// f(x). Throws OutOfDomain for a Derived spec past its prefix under
// GuardPolicy::Fail; total otherwise.
Nat eval_base(const BaseFunction& f, const Nat& x);

}  // namespace fgh
