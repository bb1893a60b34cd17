#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flagweak/chains.hpp"
#include "flagweak/checks.hpp"
#include "flagweak/export.hpp"
#include "flagweak/genfun.hpp"
#include "flagweak/io.hpp"
#include "flagweak/lattice.hpp"
#include "flagweak/presentation.hpp"

namespace py = pybind11;
using namespace flagweak;

namespace {

Notation notation_for(const GroupContext& ctx, bool signed_notation) {
  return signed_notation && ctx.r() == 2 ? Notation::Signed : Notation::General;
}

std::vector<int> window_values(const ColoredPermutation& g) {
  std::vector<int> out;
  for (const auto& l : g.window()) out.push_back(l.value);
  return out;
}

std::vector<int> window_colors(const ColoredPermutation& g) {
  std::vector<int> out;
  for (const auto& l : g.window()) out.push_back(l.color);
  return out;
}

py::dict check_dict(const CheckResult& r) {
  py::dict d;
  d["suite"] = r.suite;
  d["passed"] = r.passed;
  d["cases"] = r.cases;
  d["note"] = r.note;
  d["witness"] = r.witness;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Flag weak order on colored permutation groups G(r,n)";

  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<NotComparable>(m, "NotComparable", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<GroupContext>(m, "Group")
      .def(py::init<int, int, std::uint64_t>(), py::arg("r"), py::arg("n"), py::arg("cap") = kDefaultElementCap)
      .def_property_readonly("r", &GroupContext::r)
      .def_property_readonly("n", &GroupContext::n)
      .def_property_readonly("order", &GroupContext::order)
      .def("identity", &identity)
      .def("mu0", &mu0)
      .def("elements", &enumerate)
      .def("element", [](const GroupContext& ctx, std::string_view text) { return parse_element(ctx, text); })
      .def("generator", [](const GroupContext& ctx, std::string_view label) {
        return generator(ctx, parse_generator(label));
      })
      .def("__eq__", [](const GroupContext& a, const GroupContext& b) { return a == b; })
      .def("__repr__", [](const GroupContext& ctx) {
        return "Group(r=" + std::to_string(ctx.r()) + ", n=" + std::to_string(ctx.n()) + ")";
      });

  py::class_<ColoredPermutation>(m, "Element")
      .def_property_readonly("group", &ColoredPermutation::context)
      .def_property_readonly("values", &window_values)
      .def_property_readonly("colors", &window_colors)
      .def_property_readonly("finv", [](const ColoredPermutation& g) { return finv(g); })
      .def_property_readonly("wdes", [](const ColoredPermutation& g) { return wdes(g); })
      .def("inverse", &inverse)
      .def("dual", &dual)
      .def("up_covers", [](const ColoredPermutation& g) {
        std::vector<std::pair<std::string, ColoredPermutation>> out;
        for (const auto& c : up_covers(g)) out.emplace_back(c.label.to_string(), c.element);
        return out;
      })
      .def("down_covers", [](const ColoredPermutation& g) {
        std::vector<std::pair<std::string, ColoredPermutation>> out;
        for (const auto& c : down_covers(g)) out.emplace_back(c.label.to_string(), c.element);
        return out;
      })
      .def("format", [](const ColoredPermutation& g, bool signed_notation) {
        return format_element(g, notation_for(g.context(), signed_notation));
      }, py::arg("signed") = true)
      .def("__mul__", &compose)
      .def(py::self == py::self)
      .def("__hash__", [](const ColoredPermutation& g) { return py::hash(py::int_(index_of(g))); })
      .def("__str__", [](const ColoredPermutation& g) { return format_element(g, notation_for(g.context(), true)); })
      .def("__repr__", [](const ColoredPermutation& g) {
        return "Element('" + format_element(g, notation_for(g.context(), true)) + "')";
      });

  m.def("leq", &leq, py::arg("g"), py::arg("h"));
  m.def("meet", &meet);
  m.def("join", &join);
  m.def("mobius", &mobius);
  m.def("homotopy", [](const ColoredPermutation& g, const ColoredPermutation& h) {
    return classify_homotopy(g, h).to_string();
  });
  m.def("atoms", [](const ColoredPermutation& g, const ColoredPermutation& h) { return atoms(build_interval(g, h)); });

  m.def("maximal_chains", [](const ColoredPermutation& g, const ColoredPermutation& h, std::uint64_t cap) {
    std::vector<std::string> out;
    for (const auto& w : maximal_chains(build_interval(g, h), cap)) out.push_back(w.to_string());
    return out;
  }, py::arg("g"), py::arg("h"), py::arg("cap") = kDefaultChainCap);
  m.def("chain_graph", [](const ColoredPermutation& g, const ColoredPermutation& h, int jobs) {
    const auto graph = gamma_graph(build_interval(g, h));
    const auto d = diameter(graph, jobs);
    py::dict out;
    out["chains"] = graph.vertices.size();
    out["edges"] = graph.edges.size();
    out["connected"] = d.connected;
    out["diameter"] = d.value;
    out["exact"] = d.exact;
    out["empirical"] = graph.empirical;
    return out;
  }, py::arg("g"), py::arg("h"), py::arg("jobs") = 1);

  m.def("finv_genfun", [](int r, int n, int jobs) { return finv_genfun(GroupContext(r, n), jobs).coefficients(); },
        py::arg("r"), py::arg("n"), py::arg("jobs") = 1);
  m.def("wdes_genfun", [](int r, int n, int jobs) { return wdes_genfun(GroupContext(r, n), jobs).coefficients(); },
        py::arg("r"), py::arg("n"), py::arg("jobs") = 1);
  m.def("prod_q_int", [](int r, int n) { return prod_q_int(r, n).coefficients(); });
  m.def("wdes_rhs", [](int r, int n) { return wdes_rhs(r, n).coefficients(); });

  m.def("hasse_json", [](int r, int n, bool signed_notation) {
    const GroupContext ctx(r, n);
    return to_json(build_hasse(ctx), notation_for(ctx, signed_notation));
  }, py::arg("r"), py::arg("n"), py::arg("signed") = true);
  m.def("hasse_dot", [](int r, int n, bool signed_notation) {
    const GroupContext ctx(r, n);
    return to_dot(build_hasse(ctx), notation_for(ctx, signed_notation));
  }, py::arg("r"), py::arg("n"), py::arg("signed") = true);

  m.def("verify_relations", [](int r, int n) { return verify_relations_B(GroupContext(r, n)).ok(); });
  m.def("verify_remark_derivation", py::overload_cast<int>(&verify_remark_derivation));
  m.def("check", [](const std::string& suite, int r, int n, int jobs) {
    const GroupContext ctx(r, n);
    if (suite == "order") return check_dict(check_order(ctx, jobs));
    if (suite == "lattice") return check_dict(check_lattice(ctx, jobs));
    if (suite == "mobius") return check_dict(check_mobius(ctx, jobs));
    if (suite == "tits") return check_dict(check_tits(ctx, jobs));
    if (suite == "genfun") return check_dict(check_genfun(ctx, jobs));
    if (suite == "present") return check_dict(check_present(ctx, jobs));
    throw py::value_error("unknown suite: " + suite);
  }, py::arg("suite"), py::arg("r"), py::arg("n"), py::arg("jobs") = 1);
}
