#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "fgh/adversary.hpp"
#include "fgh/errors.hpp"
#include "fgh/fundamental.hpp"
#include "fgh/machine.hpp"
#include "fgh/notation.hpp"
#include "fgh/oracle.hpp"

namespace py = pybind11;

namespace {

using namespace fgh;

py::int_ nat_to_py(const Nat& n) {
  return py::module_::import("builtins").attr("int")(n.str());
}

Nat py_to_nat(const py::int_& v) {
  std::string text = py::repr(v).cast<std::string>();
  if (!text.empty() && text[0] == '-') {
    throw py::value_error("expected a non-negative integer");
  }
  return Nat(text);
}

const char* kind_name(OrdinalKind k) {
  switch (k) {
    case OrdinalKind::Zero: return "zero";
    case OrdinalKind::Successor: return "successor";
    case OrdinalKind::Limit: return "limit";
  }
  return "unknown";
}

// (value or None, steps) — the shape the smoke tests consume.
py::tuple result_to_py(const EvalResult& res) {
  py::object value = res.value ? py::object(nat_to_py(*res.value)) : py::none();
  return py::make_tuple(value, res.steps);
}

DescendingSequence make_sequence(const std::string& alpha,
                                 const std::vector<std::string>& entries) {
  DescendingSequence seq;
  seq.alpha = parse(alpha);
  seq.entries.reserve(entries.size());
  for (const std::string& e : entries) seq.entries.push_back(parse(e));
  return seq;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cantor normal form ordinals and the relativised fast-growing hierarchy";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const ValidationError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Ordinal>(m, "Ordinal")
      .def_static("epsilon0", &Ordinal::epsilon0)
      .def("is_epsilon0", &Ordinal::is_epsilon0)
      .def("is_zero", &Ordinal::is_zero)
      .def("is_finite", &Ordinal::is_finite)
      .def("__str__", [](const Ordinal& a) { return render(a); })
      .def("__repr__", [](const Ordinal& a) { return "Ordinal('" + render(a) + "')"; })
      .def("__eq__", [](const Ordinal& a, const Ordinal& b) { return a == b; }, py::is_operator())
      .def("__lt__", [](const Ordinal& a, const Ordinal& b) { return a < b; }, py::is_operator())
      .def("__le__", [](const Ordinal& a, const Ordinal& b) { return a <= b; }, py::is_operator())
      .def("__gt__", [](const Ordinal& a, const Ordinal& b) { return a > b; }, py::is_operator())
      .def("__ge__", [](const Ordinal& a, const Ordinal& b) { return a >= b; }, py::is_operator())
      .def("__hash__", [](const Ordinal& a) { return py::hash(py::str(render(a))); });

  m.def("parse", [](const std::string& text) { return parse(text); }, py::arg("text"));
  m.def("render", [](const Ordinal& a) { return render(a); }, py::arg("a"));
  m.def("compare", [](const Ordinal& a, const Ordinal& b) { return static_cast<int>(compare(a, b)); },
        py::arg("a"), py::arg("b"), "-1, 0 or 1");
  m.def("classify", [](const Ordinal& a) { return kind_name(classify(a)); }, py::arg("a"));
  m.def("predecessor", &predecessor, py::arg("a"));
  m.def("add", &add, py::arg("a"), py::arg("b"));
  m.def("omega_pow", &omega_pow, py::arg("a"));
  m.def("from_nat", [](const py::int_& n) { return from_nat(py_to_nat(n)); }, py::arg("n"));
  m.def("to_nat", [](const Ordinal& a) { return nat_to_py(to_nat(a)); }, py::arg("a"));
  m.def("mc", [](const Ordinal& a) { return nat_to_py(max_coefficient(a)); }, py::arg("a"),
        "maximal coefficient");
  m.def("omega_tower", &omega_tower, py::arg("n"), py::arg("max_depth") = kDefaultTowerDepth);
  m.def("fund_seq",
        [](const Ordinal& g, const py::int_& x, unsigned max_tower) {
          return fund_seq(g, py_to_nat(x), max_tower);
        },
        py::arg("g"), py::arg("x"), py::arg("max_tower") = kDefaultTowerDepth);

  py::class_<BaseFunction>(m, "BaseFunction")
      .def_static("succ", &BaseFunction::succ)
      .def_static("affine",
                  [](const py::int_& a, const py::int_& b) {
                    return BaseFunction::affine(py_to_nat(a), py_to_nat(b));
                  },
                  py::arg("a"), py::arg("b"))
      .def_static("table",
                  [](const std::vector<py::int_>& values, const py::int_& tail_a,
                     const py::int_& tail_b) {
                    std::vector<Nat> vals;
                    vals.reserve(values.size());
                    for (const py::int_& v : values) vals.push_back(py_to_nat(v));
                    return BaseFunction::table(
                        std::move(vals),
                        BaseFunction::Affine{py_to_nat(tail_a), py_to_nat(tail_b)});
                  },
                  py::arg("values"), py::arg("tail_a"), py::arg("tail_b"));

  m.def("eval_base",
        [](const BaseFunction& f, const py::int_& x) { return nat_to_py(eval_base(f, py_to_nat(x))); },
        py::arg("f"), py::arg("x"));
  m.def("run",
        [](const BaseFunction& f, const Ordinal& alpha, const py::int_& x, std::uint64_t fuel) {
          return result_to_py(run(f, alpha, py_to_nat(x), Budget(fuel)));
        },
        py::arg("f"), py::arg("alpha"), py::arg("x"), py::arg("fuel") = kDefaultFuel,
        "machine evaluation of F_alpha(x); returns (value or None, steps)");
  m.def("eval_recursive",
        [](const BaseFunction& f, const Ordinal& alpha, const py::int_& x, std::uint64_t fuel) {
          return result_to_py(eval_recursive(f, alpha, py_to_nat(x), Budget(fuel)));
        },
        py::arg("f"), py::arg("alpha"), py::arg("x"), py::arg("fuel") = kDefaultFuel,
        "direct-recursion evaluation; returns (value or None, steps)");

  m.def("base_function_prefix",
        [](const std::string& alpha, const std::vector<std::string>& entries) {
          std::vector<Nat> prefix = base_function_prefix(make_sequence(alpha, entries));
          py::list out;
          for (const Nat& v : prefix) out.append(nat_to_py(v));
          return out;
        },
        py::arg("alpha"), py::arg("entries"));
  m.def("verify_claim_json",
        [](const std::string& alpha, const std::vector<std::string>& entries, std::uint64_t fuel,
           bool extend) {
          GuardPolicy policy = extend ? GuardPolicy::Extend : GuardPolicy::Fail;
          return to_json(verify_claim(make_sequence(alpha, entries), Budget(fuel), policy));
        },
        py::arg("alpha"), py::arg("entries"), py::arg("fuel") = kDefaultFuel,
        py::arg("extend") = false, "claim verification report as a JSON string");
}
