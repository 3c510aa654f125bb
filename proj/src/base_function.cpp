#include "fgh/base_function.hpp"

#include <stdexcept>
#include <utility>

#include "fgh/errors.hpp"

namespace fgh {

BaseFunction BaseFunction::affine(Nat a, Nat b) {
  if (a < 1) throw std::invalid_argument("affine base function needs slope >= 1");
  return BaseFunction(Affine{std::move(a), std::move(b)});
}

BaseFunction BaseFunction::table(std::vector<Nat> values, Affine tail) {
  if (tail.a < 1) throw std::invalid_argument("affine tail needs slope >= 1");
  return BaseFunction(Table{std::move(values), std::move(tail)});
}

BaseFunction BaseFunction::derived(std::vector<Nat> prefix, GuardPolicy policy) {
  if (prefix.empty()) throw std::invalid_argument("derived base function needs a nonempty prefix");
  return BaseFunction(Derived{
      std::make_shared<const std::vector<Nat>>(std::move(prefix)), policy});
}

namespace {

struct EvalVisitor {
  const Nat& x;

  Nat operator()(const BaseFunction::Succ&) const { return x + 1; }

  Nat operator()(const BaseFunction::Affine& f) const { return f.a * x + f.b; }

  Nat operator()(const BaseFunction::Table& f) const {
    if (x < f.values.size()) {
      return f.values[static_cast<std::size_t>(x)];
    }
    return f.tail.a * x + f.tail.b;
  }

  Nat operator()(const BaseFunction::Derived& f) const {
    const auto& prefix = *f.prefix;
    if (x < prefix.size()) {
      return prefix[static_cast<std::size_t>(x)];
    }
    if (f.policy == GuardPolicy::Fail) {
      throw OutOfDomain("base function argument past the derived prefix");
    }
    // Extend: keep climbing by one past the table.
    return prefix.back() + (x - prefix.size() + 1);
  }
};

}  // namespace

Nat eval_base(const BaseFunction& f, const Nat& x) {
  if (x < 0) throw std::invalid_argument("base function argument must be a natural");
  return std::visit(EvalVisitor{x}, f.spec());
}

}  // namespace fgh
