#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tomo/io.hpp"
#include "tomo/partition.hpp"

namespace py = pybind11;
using namespace tomo;

namespace {

Filter filter_from_string(const std::string& name) {
  if (name == "all") return Filter::all;
  if (name == "commutative") return Filter::commutative;
  if (name == "archimedean") return Filter::archimedean;
  throw py::value_error("filter must be 'all', 'commutative' or 'archimedean'");
}

py::dict report_to_dict(const VerifyReport& report) {
  py::dict out;
  out["ok"] = report.ok();
  py::list violations;
  for (const Violation& v : report.violations)
    violations.append(py::make_tuple(std::string(to_string(v.kind)), v.witness));
  out["violations"] = violations;
  return out;
}

py::tuple pair_to_tuple(const IdempotentPair& pair) {
  return py::make_tuple(pair.left, pair.right);
}

py::tuple cell_to_tuple(const Cell& cell) {
  return py::make_tuple(cell.row, cell.col);
}

py::dict record_to_dict(const GenRecord& rec) {
  py::dict out;
  out["id"] = rec.id;
  out["parent"] = rec.parent ? py::object(py::cast(*rec.parent)) : py::none();
  out["table"] = rec.table;
  out["pair"] = rec.pair ? py::object(pair_to_tuple(*rec.pair)) : py::none();
  out["choice"] = rec.choice ? py::object(py::cast(rec.choice->downset)) : py::none();
  out["commutative"] = rec.commutative;
  out["archimedean"] = rec.archimedean;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite negative totally ordered monoids: generation by one-element "
            "coextensions, verification, and rendering";

  py::class_<TomonoidTable>(m, "Table")
      .def(py::init(&TomonoidTable::from_rows), py::arg("rows"))
      .def_static("trivial", &TomonoidTable::trivial)
      .def_static("two_element", &TomonoidTable::two_element)
      .def_property_readonly("n", &TomonoidTable::size)
      .def("rows", &TomonoidTable::rows)
      .def("prod", &TomonoidTable::prod, py::arg("a"), py::arg("b"))
      .def("__eq__",
           [](const TomonoidTable& a, const TomonoidTable& b) { return a == b; })
      .def("__lt__",
           [](const TomonoidTable& a, const TomonoidTable& b) { return a < b; })
      .def("__hash__",
           [](const TomonoidTable& t) {
             std::size_t h = std::hash<int>()(t.size());
             for (int v : t.cells()) h = h * 1000003 + static_cast<std::size_t>(v);
             return h;
           })
      .def("__repr__", [](const TomonoidTable& t) {
        return "Table(n=" + std::to_string(t.size()) + ")";
      });

  m.def("verify", [](const TomonoidTable& t) { return report_to_dict(verify_table(t)); },
        py::arg("table"));
  m.def("is_commutative", &is_commutative, py::arg("table"));
  m.def("is_archimedean", &is_archimedean, py::arg("table"));
  m.def("idempotents", &idempotents, py::arg("table"));
  m.def("atom_char_idempotents",
        [](const TomonoidTable& t) { return pair_to_tuple(atom_char_idempotents(t)); },
        py::arg("table"));
  m.def("rees_quotient", &rees_quotient, py::arg("table"), py::arg("q"));

  py::class_<LevelPartition>(m, "Partition")
      .def_property_readonly("n", [](const LevelPartition& p) { return p.chain.size(); })
      .def("class_at", &LevelPartition::class_at, py::arg("a"), py::arg("b"))
      .def_property_readonly("values",
                             [](const LevelPartition& p) { return p.value_of_class; })
      .def_property_readonly("class_of", [](const LevelPartition& p) {
        const int n = p.chain.size();
        std::vector<std::vector<int>> rows(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) rows[a][b] = p.class_at(a, b);
        return rows;
      });
  m.def("to_partition", &to_partition, py::arg("table"));
  m.def("from_partition", &from_partition, py::arg("partition"));
  m.def("verify_partition",
        [](const LevelPartition& p, bool strict) {
          return report_to_dict(verify_partition(p, strict));
        },
        py::arg("partition"), py::arg("strict") = false);

  py::class_<Ramification>(m, "Ramification")
      .def_property_readonly("obstructed",
                             [](const Ramification& r) { return r.obstructed; })
      .def_property_readonly("pair",
                             [](const Ramification& r) { return pair_to_tuple(r.pair); })
      .def_property_readonly("zero_class",
                             [](const Ramification& r) { return r.zero_class; })
      .def_property_readonly("atom_class",
                             [](const Ramification& r) { return r.atom_class; })
      .def_property_readonly("ext_size",
                             [](const Ramification& r) { return r.ext.size(); })
      .def("class_at", &Ramification::class_at, py::arg("row"), py::arg("col"))
      .def("support",
           [](const Ramification& r) {
             py::list out;
             const int m = r.ext.size();
             for (int row = 0; row < m; ++row)
               for (int col = 0; col < m; ++col)
                 if (r.in_support(row, col)) out.append(py::make_tuple(row, col));
             return out;
           })
      .def("classes", [](const Ramification& r) {
        py::dict out;
        for (int id : r.cosupport_class_ids()) {
          py::list cells;
          for (const Cell& c : r.class_cells(id)) cells.append(cell_to_tuple(c));
          out[py::cast(id)] = cells;
        }
        return out;
      });
  m.def("ramify",
        [](const TomonoidTable& t, std::pair<int, int> pair, bool commutative,
           bool archimedean) {
          return ramify(t, {pair.first, pair.second}, commutative, archimedean);
        },
        py::arg("table"), py::arg("pair"), py::arg("commutative") = false,
        py::arg("archimedean") = false);
  m.def("audit_ramification", &audit_ramification, py::arg("table"),
        py::arg("ramification"));

  py::class_<ClassDag>(m, "ClassDag")
      .def_property_readonly("node_count", &ClassDag::node_count)
      .def_property_readonly("zero_node", [](const ClassDag& d) { return d.zero_node; })
      .def_property_readonly("atom_node", [](const ClassDag& d) { return d.atom_node; })
      .def_property_readonly("covers", [](const ClassDag& d) { return d.covers; })
      .def_property_readonly("member_classes",
                             [](const ClassDag& d) { return d.member_classes; })
      .def("cells_of", [](const ClassDag& d, int node) {
        py::list out;
        for (const Cell& c : d.cells_of.at(node)) out.append(cell_to_tuple(c));
        return out;
      });
  m.def("class_poset", &class_poset, py::arg("ramification"));
  m.def("enumerate_choices",
        [](const ClassDag& dag) {
          std::vector<std::vector<int>> out;
          for (const CoextensionChoice& c : enumerate_choices(dag))
            out.push_back(c.downset);
          return out;
        },
        py::arg("dag"));
  m.def("materialise",
        [](const TomonoidTable& t, const Ramification& r, std::vector<int> downset,
           bool strict) {
          return materialise(t, r, CoextensionChoice{std::move(downset)}, strict);
        },
        py::arg("table"), py::arg("ramification"), py::arg("choice"),
        py::arg("strict") = false);

  m.def("coextensions",
        [](const TomonoidTable& t, const std::string& filter) {
          py::list out;
          for (const GenRecord& rec : coextensions(t, filter_from_string(filter)))
            out.append(record_to_dict(rec));
          return out;
        },
        py::arg("table"), py::arg("filter") = "all");
  m.def("generate",
        [](int max_size, const std::string& filter, int jobs) {
          py::list out;
          for (const GenRecord& rec :
               generate_all(max_size, filter_from_string(filter), jobs))
            out.append(record_to_dict(rec));
          return out;
        },
        py::arg("max_size"), py::arg("filter") = "all", py::arg("jobs") = 1);
  m.def("brute_force",
        [](int size, const std::string& filter) {
          return brute_force_all(size, filter_from_string(filter));
        },
        py::arg("size"), py::arg("filter") = "all");
  m.def("count",
        [](int max_size, bool cross_check) {
          py::dict out;
          for (const auto& [size, row] : count(max_size, cross_check).by_size)
            out[py::cast(size)] =
                py::make_tuple(row.total, row.commutative, row.archimedean,
                               row.commutative_archimedean);
          return out;
        },
        py::arg("max_size"), py::arg("cross_check") = false);
  m.def("oracle_cap", &oracle_cap);

  m.def("parse_table", &parse_table, py::arg("doc"));
  m.def("format_table", &format_table, py::arg("table"));
  m.def("render",
        [](const TomonoidTable& t, const std::string& format) {
          if (format == "ascii") return render(t, RenderFormat::ascii);
          if (format == "svg") return render(t, RenderFormat::svg);
          throw py::value_error("format must be 'ascii' or 'svg'");
        },
        py::arg("table"), py::arg("format") = "ascii");

  py::register_exception<ParseError>(m, "TableParseError", PyExc_ValueError);

  m.attr("__version__") = "0.1.0";
}
