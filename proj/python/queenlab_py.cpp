#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "queenlab/constructions.hpp"
#include "queenlab/enumeration.hpp"
#include "queenlab/io.hpp"
#include "queenlab/product.hpp"

namespace py = pybind11;
using namespace queenlab;

namespace {

using ArcTuple = std::pair<int, int>;

std::vector<Arc> to_arcs(const std::vector<ArcTuple>& arcs) {
  std::vector<Arc> out;
  out.reserve(arcs.size());
  for (const auto& [t, h] : arcs) out.push_back({t, h});
  return out;
}

std::vector<ArcTuple> to_tuples(const std::vector<Arc>& arcs) {
  std::vector<ArcTuple> out;
  out.reserve(arcs.size());
  for (const Arc& a : arcs) out.emplace_back(a.tail, a.head);
  return out;
}

FamilyAssignment make_assignment(const std::vector<LabeledDigraph>& family,
                                 const std::map<ArcTuple, std::size_t>& h) {
  std::map<Arc, std::size_t> assign;
  for (const auto& [arc, k] : h) assign.emplace(Arc{arc.first, arc.second}, k);
  return FamilyAssignment(family, std::move(assign));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Queen labelings of 1-regular digraphs";
  m.attr("__version__") = "0.1.0";

  py::register_exception<io::DocumentError>(m, "DocumentError", PyExc_ValueError);

  py::class_<LabeledDigraph>(m, "LabeledDigraph")
      .def(py::init([](int n, const std::vector<ArcTuple>& arcs) {
             const auto a = to_arcs(arcs);
             return from_arcs(n, a);
           }),
           py::arg("n"), py::arg("arcs"))
      .def_static(
          "from_permutation",
          [](const std::vector<int>& image) { return from_permutation(image); }, py::arg("image"))
      .def_property_readonly("order", &LabeledDigraph::order)
      .def_property_readonly("arcs", [](const LabeledDigraph& d) { return to_tuples(d.arcs()); })
      .def("__len__", &LabeledDigraph::size)
      .def("__contains__",
           [](const LabeledDigraph& d, const ArcTuple& a) { return d.contains({a.first, a.second}); })
      .def("__eq__", [](const LabeledDigraph& a, const LabeledDigraph& b) { return a == b; })
      .def("__repr__", [](const LabeledDigraph& d) {
        return "LabeledDigraph(" + std::to_string(d.order()) + ", " + std::to_string(d.size()) + " arcs)";
      });

  py::class_<Placement>(m, "Placement")
      .def_property_readonly("n", &Placement::size)
      .def_property_readonly("queens",
                             [](const Placement& p) {
                               std::vector<ArcTuple> out;
                               for (const Square& q : p.queens()) out.emplace_back(q.row, q.col);
                               return out;
                             })
      .def("__eq__", [](const Placement& a, const Placement& b) { return a == b; })
      .def("render", [](const Placement& p) { return io::render_ascii(p); });

  py::enum_<Board>(m, "Board").value("STANDARD", Board::Standard).value("MODULAR", Board::Modular);

  py::class_<Failure>(m, "Failure")
      .def_property_readonly("condition", [](const Failure& f) { return to_string(f.condition); })
      .def_property_readonly("witness",
                             [](const Failure& f) -> std::optional<std::pair<ArcTuple, ArcTuple>> {
                               if (!f.witness) return std::nullopt;
                               return std::make_pair(ArcTuple{f.witness->first.tail, f.witness->first.head},
                                                     ArcTuple{f.witness->second.tail, f.witness->second.head});
                             })
      .def_readonly("detail", &Failure::detail)
      .def("__str__", [](const Failure& f) { return to_string(f); });

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("failures", &VerificationReport::failures)
      .def_property_readonly("valid", &VerificationReport::is_valid)
      .def("__bool__", &VerificationReport::is_valid);

  py::class_<ProductReport>(m, "ProductReport")
      .def_readonly("base", &ProductReport::base)
      .def_readonly("family", &ProductReport::family)
      .def_readonly("sum_condition", &ProductReport::sum_condition)
      .def_readonly("diff_condition", &ProductReport::diff_condition)
      .def_readonly("product", &ProductReport::product)
      .def_readonly("result", &ProductReport::result)
      .def("hypotheses_hold", &ProductReport::hypotheses_hold)
      .def("conclusion_holds", &ProductReport::conclusion_holds)
      .def("is_counterexample", &ProductReport::is_counterexample);

  py::class_<BoundCheckReport>(m, "BoundCheckReport")
      .def_readonly("mode", &BoundCheckReport::mode)
      .def_readonly("generated", &BoundCheckReport::generated)
      .def_readonly("valid", &BoundCheckReport::valid)
      .def_readonly("distinct_products", &BoundCheckReport::distinct_products)
      .def_readonly("bound", &BoundCheckReport::bound)
      .def("all_valid", &BoundCheckReport::all_valid)
      .def("distinct", &BoundCheckReport::distinct);

  // digraphs
  m.def("is_one_regular", &is_one_regular);
  m.def("as_permutation", &as_permutation);
  m.def("cycle_type", [](const LabeledDigraph& d) { return cycle_type(d).lengths(); });
  m.def("disjoint_union", &disjoint_union);
  m.def("reverse", &reverse);
  m.def("rotate_quarter", &rotate_quarter);

  // labelings
  m.def("sum_multiset", &sum_multiset);
  m.def("diff_multiset", &diff_multiset);
  m.def("verify_queen", &verify_queen);
  m.def("verify_modular_queen", &verify_modular_queen);
  m.def("verify_solution", &verify_solution, py::arg("d"), py::arg("board") = Board::Standard);
  m.def("to_placement", &to_placement);
  m.def("from_placement", &from_placement);
  m.def("placement_from_permutation", &placement_from_permutation);
  m.def("sigma_identity_check", &sigma_identity_check);

  // products
  m.def(
      "oh_product",
      [](const LabeledDigraph& base, const std::vector<LabeledDigraph>& family,
         const std::map<ArcTuple, std::size_t>& h) { return oh_product(base, make_assignment(family, h)); },
      py::arg("base"), py::arg("family"), py::arg("h"));
  m.def("direct_product", &direct_product);
  m.def(
      "product_preserves_queen",
      [](const LabeledDigraph& base, const std::vector<LabeledDigraph>& family,
         const std::map<ArcTuple, std::size_t>& h) {
        return product_preserves_queen(base, make_assignment(family, h));
      },
      py::arg("base"), py::arg("family"), py::arg("h"));
  m.def(
      "product_preserves_modular",
      [](const LabeledDigraph& base, const std::vector<LabeledDigraph>& family,
         const std::map<ArcTuple, std::size_t>& h) {
        return product_preserves_modular(base, make_assignment(family, h));
      },
      py::arg("base"), py::arg("family"), py::arg("h"));
  m.def("check_corollary_sets", &check_corollary_sets);

  // constructions
  m.def("is_prime", &is_prime);
  m.def("multiplicative_order", &multiplicative_order);
  m.def("is_primitive_root", &is_primitive_root);
  m.def("park_criterion", &park_criterion);
  m.def("strong_cycle", &strong_cycle);
  m.def("polya_doubling", &polya_doubling);
  m.def("doubling_structure", [](int p) { return doubling_structure(p).lengths(); });
  m.def("jacobsthal_number", &jacobsthal_number);
  m.def("jacobsthal_digraph", &jacobsthal_digraph);
  m.def("theta_partition", [](int n) { return theta_partition(n).classes; });
  m.def("three_cycles_placement", &three_cycles_placement);
  m.def("polya_composite", &polya_composite, py::arg("standard"), py::arg("pi"), py::arg("g"));
  m.def("final_lemma_structure", [](int mm, int p) { return final_lemma_structure(mm, p).lengths(); });
  m.def("final_lemma_digraph", &final_lemma_digraph);

  // enumeration
  m.def("enumerate_standard", &enumerate_standard, py::arg("n"), py::arg("limit") = py::none());
  m.def("enumerate_modular", &enumerate_modular, py::arg("n"), py::arg("limit") = py::none());
  m.def("count_standard", &count_standard, py::call_guard<py::gil_scoped_release>());
  m.def("count_modular", &count_modular, py::call_guard<py::gil_scoped_release>());
  m.def("achievable_cycle_types", [](int n) {
    std::vector<std::vector<int>> out;
    for (const CycleType& t : achievable_cycle_types(n)) out.push_back(t.lengths());
    return out;
  });
  m.def(
      "modular_bound_check",
      [](int mm, int n, std::optional<std::vector<LabeledDigraph>> family) {
        return family ? modular_bound_check(mm, n, *family) : modular_bound_check(mm, n);
      },
      py::arg("m"), py::arg("n"), py::arg("family") = py::none());

  // documents
  m.def("load_digraph", [](const std::string& text) { return io::digraph_from_json(io::parse(text)); });
  m.def("dump_digraph", [](const LabeledDigraph& d) { return io::dump(io::digraph_to_json(d)); });
  m.def("load_placement",
        [](const std::string& text) { return io::placement_from_json(io::parse(text)).placement; });
  m.def("dump_placement", [](const Placement& p, std::optional<bool> modular) {
    return io::dump(io::placement_to_json({p, modular}));
  }, py::arg("placement"), py::arg("modular") = py::none());
}
