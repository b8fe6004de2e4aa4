#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "thetawpo/collapse_map.hpp"
#include "thetawpo/errors.hpp"
#include "thetawpo/gap_trees.hpp"
#include "thetawpo/ordinal_ops.hpp"
#include "thetawpo/ordinal_text.hpp"
#include "thetawpo/tree_terms.hpp"
#include "thetawpo/verify.hpp"
#include "thetawpo/wpo.hpp"

namespace py = pybind11;
using namespace thetawpo;

namespace {

System system_of(const std::string& name) {
  auto s = parse_system(name);
  if (!s) throw DomainError("unknown system '" + name + "' (use full or restricted)");
  return *s;
}

/// A tree term together with the constructor expression it lives over.
struct Tree {
  TreeTerm term;
  WExpr w;
};

const WExpr& btree() {
  static const WExpr w = WExpr::btree(WExpr::hole());
  return w;
}

void same_w(const Tree& s, const Tree& t) {
  if (!(s.w == t.w)) throw ShapeError("terms over different expressions: " + to_string(s.w) + " and " + to_string(t.w));
}

std::vector<Tree> wrap(const std::vector<TreeTerm>& ts, const WExpr& w) {
  std::vector<Tree> out;
  for (TreeTerm t : ts) out.push_back({t, w});
  return out;
}

py::object to_python(const nlohmann::ordered_json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ordinal notations, well-partial-order combinators, tree terms and gap embeddings.";

  auto parse_error = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidTermError>(m, "InvalidTermError", parse_error.ptr());
  py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<Ordinal>(m, "Ordinal")
      .def(py::init([](const std::string& text, const std::string& system) { return parse_ordinal(text, system_of(system)); }),
           py::arg("text"), py::arg("system") = "full")
      .def_static("zero", &Ordinal::zero)
      .def_static("theta", &Ordinal::theta)
      .def_property_readonly("kind", [](Ordinal a) {
        static const char* names[] = {"zero", "theta", "sum", "cnf", "omega_pow", "theta_part"};
        return std::string(names[static_cast<int>(a.kind())]);
      })
      .def_property_readonly("countable", &is_countable)
      .def("__str__", [](Ordinal a) { return to_string(a); })
      .def("__repr__", [](Ordinal a) { return "Ordinal('" + to_string(a) + "')"; })
      .def("__eq__", [](Ordinal a, Ordinal b) { return a == b; })
      .def("__lt__", [](Ordinal a, Ordinal b) { return less(a, b); })
      .def("__le__", [](Ordinal a, Ordinal b) { return compare(a, b) != Ordering3::GT; })
      .def("__hash__", [](Ordinal a) { return a.id(); });

  m.def("compare", [](Ordinal a, Ordinal b) { return to_string(compare(a, b)); }, "'LT', 'EQ' or 'GT'.");
  m.def("coefficient_set", &coefficient_set);
  m.def("max_coefficient", &max_coefficient);
  m.def("complexity", [](Ordinal a, const std::string& system) { return complexity(a, system_of(system)); }, py::arg("a"),
        py::arg("system") = "full");
  m.def("natural_sum", [](Ordinal a, Ordinal b, const std::string& system) { return natural_sum(a, b, system_of(system)); },
        py::arg("a"), py::arg("b"), py::arg("system") = "full");
  m.def("natural_product",
        [](Ordinal a, Ordinal b, const std::string& system) { return natural_product(a, b, system_of(system)); }, py::arg("a"),
        py::arg("b"), py::arg("system") = "full");
  m.def(
      "validate",
      [](const std::string& text, const std::string& system) -> py::tuple {
        try {
          parse_ordinal(text, system_of(system));
          return py::make_tuple(true, "", "");
        } catch (const InvalidTermError& e) {
          return py::make_tuple(false, e.clause(), e.what());
        }
      },
      py::arg("text"), py::arg("system") = "full", "(valid, clause, detail); raises ParseError on malformed text.");
  m.def(
      "enumerate_terms",
      [](const std::string& system, unsigned max_complexity, bool countable_only, unsigned width, unsigned cnf_width,
         unsigned max_exponent) {
        return enumerate_terms(system_of(system), EnumBounds{max_complexity, countable_only, width, cnf_width, max_exponent});
      },
      py::arg("system"), py::arg("max_complexity"), py::arg("countable_only") = false, py::arg("width") = 2,
      py::arg("cnf_width") = 2, py::arg("max_exponent") = 2);
  m.def("encode", [](Ordinal a) { return py::int_(py::str(encode(a).str())); });
  m.def(
      "decode", [](const py::int_& n, const std::string& system) { return decode(Code(py::repr(n).cast<std::string>()), system_of(system)); },
      py::arg("n"), py::arg("system") = "full");

  py::class_<WExpr>(m, "W")
      .def(py::init([](const std::string& text) { return parse_wexpr(text); }), py::arg("text"))
      .def("__str__", [](const WExpr& w) { return to_string(w); })
      .def("__repr__", [](const WExpr& w) { return "W('" + to_string(w) + "')"; })
      .def("__eq__", [](const WExpr& a, const WExpr& b) { return a == b; });

  py::class_<Tree>(m, "Tree")
      .def(py::init([](const std::string& text, const WExpr& w) { return Tree{parse_tree_term(text, w), w}; }), py::arg("text"),
           py::arg("w") = btree())
      .def_property_readonly("size", [](const Tree& t) { return t.term.size(); })
      .def_property_readonly("w", [](const Tree& t) { return t.w; })
      .def("children", [](const Tree& t) { return wrap(t.term.children(), t.w); })
      .def("to_dot", [](const Tree& t) { return to_dot(t.term, t.w); })
      .def("__str__", [](const Tree& t) { return to_string(t.term, t.w); })
      .def("__repr__", [](const Tree& t) { return "Tree('" + to_string(t.term, t.w) + "', W('" + to_string(t.w) + "'))"; })
      .def("__eq__", [](const Tree& s, const Tree& t) { return s.w == t.w && s.term == t.term; })
      .def("__le__", [](const Tree& s, const Tree& t) {
        same_w(s, t);
        return t_leq(s.term, t.term, s.w);
      })
      .def("__hash__", [](const Tree& t) { return t.term.id(); });

  m.def("t_leq", [](const Tree& s, const Tree& t) {
    same_w(s, t);
    return t_leq(s.term, t.term, s.w);
  });
  m.def(
      "enumerate_trees", [](const WExpr& w, std::size_t size) { return wrap(enumerate_trees(w, size), w); }, py::arg("w"),
      py::arg("size"));
  m.def(
      "left_set", [](const Tree& t, std::size_t size) { return wrap(left_set_bounded(t.term, t.w, size), t.w); }, py::arg("t"),
      py::arg("size"), "Terms s with at most `size` nodes such that t is not below s.");
  m.def("ord_to_tree", [](Ordinal a) { return Tree{ord_to_tree(a), btree()}; });

  py::class_<LabeledTree>(m, "LabeledTree")
      .def(py::init([](const std::string& text) { return parse_labeled_tree(text); }), py::arg("text"))
      .def_readonly("label", &LabeledTree::label)
      .def_readonly("children", &LabeledTree::children)
      .def_property_readonly("size", &LabeledTree::size)
      .def("to_dot", [](const LabeledTree& t) { return to_dot(t); })
      .def("__str__", [](const LabeledTree& t) { return to_string(t); })
      .def("__repr__", [](const LabeledTree& t) { return "LabeledTree('" + to_string(t) + "')"; })
      .def("__eq__", [](const LabeledTree& a, const LabeledTree& b) { return a == b; });

  m.def("gap_leq", &gap_leq, py::arg("s"), py::arg("t"), py::arg("structured") = true);
  m.def("brute_gap_leq", &brute_gap_leq, py::arg("s"), py::arg("t"), py::arg("structured") = true);
  m.def("in_t2bar", &in_t2bar);
  m.def("to_gap", [](const Tree& t) {
    if (!(t.w == btree())) throw ShapeError("to_gap needs a term over B(_)");
    return to_gap(t.term);
  });
  m.def("from_gap", [](const LabeledTree& t) { return Tree{from_gap(t), btree()}; });

  m.def(
      "higman_leq",
      [](const std::vector<std::size_t>& xs, const std::vector<std::size_t>& ys, std::optional<std::string> poset) {
        if (!poset) return higman_leq<std::size_t>(xs, ys, [](std::size_t a, std::size_t b) { return a <= b; });
        WExpr pw = parse_wexpr(*poset);
        if (pw.kind() != WKind::Const) throw ShapeError("poset must be a literal P{n;...}");
        const FinitePoset& p = pw.poset();
        for (const auto* v : {&xs, &ys})
          for (std::size_t x : *v)
            if (x >= p.size()) throw DomainError("element " + std::to_string(x) + " is outside the poset");
        return higman_leq<std::size_t>(xs, ys, [&p](std::size_t a, std::size_t b) { return p.leq(a, b); });
      },
      py::arg("xs"), py::arg("ys"), py::arg("poset") = py::none());

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, std::optional<std::size_t> size, std::uint64_t seed, std::optional<std::size_t> samples,
         std::optional<std::string> system) {
        SuiteParams p{size, seed, samples, std::nullopt};
        if (system) p.system = system_of(*system);
        SuiteReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(name, p);
        }
        return to_python(to_json(r));
      },
      py::arg("name"), py::arg("size") = py::none(), py::arg("seed") = 1, py::arg("samples") = py::none(),
      py::arg("system") = py::none(), "The suite report as a dict.");
}
