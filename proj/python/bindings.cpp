#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gpw/catalog.hpp"
#include "gpw/classify.hpp"
#include "gpw/complexes.hpp"
#include "gpw/embeddings.hpp"
#include "gpw/io.hpp"
#include "gpw/words.hpp"

namespace py = pybind11;
using namespace gpw;

namespace {

struct Spec {
  SpecPtr ptr;
};

Order to_order(const py::handle& h) {
  if (h.is_none()) return Order::infinite();
  if (py::isinstance<py::str>(h)) return Order::parse(h.cast<std::string>());
  const auto m = h.cast<long long>();
  if (m < 2) throw std::invalid_argument("orders must be at least 2");
  return Order::finite(static_cast<std::uint64_t>(m));
}

Spec make_py_spec(const SimpleGraph& g, const py::object& orders) {
  std::vector<Order> out;
  if (py::isinstance<py::list>(orders) || py::isinstance<py::tuple>(orders)) {
    for (auto o : orders) out.push_back(to_order(o));
  } else {
    out.assign(g.size(), to_order(orders));
  }
  return {make_spec(GroupSpec(g, std::move(out)))};
}

py::dict classification_dict(const SimpleGraph& g, const Classification& c) {
  py::dict d;
  d["verdict"] = to_string(c.verdict);
  d["witness"] = c.witness ? py::cast(c.witness->str(g)) : py::none();
  d["basis"] = c.basis;
  d["note"] = c.note;
  return d;
}

NormalForm nf(const Spec& s, const std::string& w) { return normalize(Word::parse(s.ptr, w)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph products of cyclic groups: words, cube complexes, embeddings, classification";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<SimpleGraph>(m, "Graph")
      .def(py::init([](std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> edges) {
             return SimpleGraph(std::move(labels), edges);
           }),
           py::arg("labels"), py::arg("edges") = std::vector<std::pair<std::string, std::string>>{})
      .def_property_readonly("labels", &SimpleGraph::labels)
      .def("__len__", &SimpleGraph::size)
      .def("edges", [](const SimpleGraph& g) {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto [u, v] : g.edges()) out.emplace_back(g.label(u), g.label(v));
        return out;
      })
      .def("adjacent", [](const SimpleGraph& g, const std::string& u, const std::string& v) {
        return g.adjacent(g.index_of(u), g.index_of(v));
      })
      .def("graph6", [](const SimpleGraph& g) { return write_graph6(g); })
      .def("edge_list", [](const SimpleGraph& g) { return edge_list_string(g); })
      .def("__eq__", [](const SimpleGraph& a, const SimpleGraph& b) { return a == b; })
      .def("__repr__", [](const SimpleGraph& g) { return "<Graph " + write_graph6(g) + ">"; });

  m.def("named_graph", &catalog::by_name, py::arg("name"));
  m.def("from_graph6", [](const std::string& s) { return read_graph6(s); });
  m.def("parse_graph", [](const std::string& s) { return parse_graph_auto(s); });
  m.def("opposite", &opposite);
  m.def("induced_subgraph", py::overload_cast<const SimpleGraph&, const std::vector<std::string>&>(&induced_subgraph));
  m.def("contract_edge", &contract_edge);
  m.def("co_contract", &co_contract);
  m.def("double_along_link", [](const SimpleGraph& g, const std::string& t) { return double_along_link(g, t).graph; });
  m.def("find_hole", [](const SimpleGraph& g, std::size_t min_len) -> std::optional<std::vector<std::string>> {
    auto h = find_hole(g, min_len);
    if (!h) return std::nullopt;
    std::vector<std::string> out;
    for (auto v : *h) out.push_back(g.label(v));
    return out;
  }, py::arg("g"), py::arg("min_len") = 5);
  m.def("is_weakly_chordal", &is_weakly_chordal);
  m.def("is_chordal", &is_chordal);
  m.def("are_isomorphic", [](const SimpleGraph& a, const SimpleGraph& b) { return are_isomorphic(a, b).has_value(); });
  m.def("enumerate_graphs", &enumerate_graphs, py::arg("n"));

  py::class_<Spec>(m, "Spec")
      .def(py::init(&make_py_spec), py::arg("graph"), py::arg("orders"),
           "orders: one value or a list; ints >= 2, or None / 'inf' for infinite order")
      .def_static("parse", [](const std::string& text) { return Spec{make_spec(parse_group_spec(text))}; })
      .def_property_readonly("graph", [](const Spec& s) { return s.ptr->graph(); })
      .def_property_readonly("orders", [](const Spec& s) {
        std::vector<std::string> out;
        for (auto o : s.ptr->orders()) out.push_back(o.str());
        return out;
      })
      .def("text", [](const Spec& s) {
        std::ostringstream out;
        write_group_spec(out, *s.ptr);
        return out.str();
      });

  m.def("normalize", [](const Spec& s, const std::string& w) { return nf(s, w).str(); });
  m.def("multiply", [](const Spec& s, const std::vector<std::string>& ws) {
    auto acc = identity_element(s.ptr);
    for (const auto& w : ws) acc = multiply(acc, nf(s, w));
    return acc.str();
  });
  m.def("invert", [](const Spec& s, const std::string& w) { return invert(nf(s, w)).str(); });
  m.def("equal", [](const Spec& s, const std::string& u, const std::string& v) { return nf(s, u) == nf(s, v); });
  m.def("project", [](const Spec& s, const std::string& w, const std::string& v) {
    return project(Word::parse(s.ptr, w), s.ptr->graph().index_of(v)).str();
  });
  m.def("in_kernel_kp0", [](const Spec& s, const std::string& w) { return in_kernel_kp0(nf(s, w)); });
  m.def("in_kernel_kpf", [](const Spec& s, const std::string& w) { return in_kernel_kpf(nf(s, w)); });
  m.def("enumerate_elements", [](const Spec& s, std::size_t radius) {
    std::vector<std::string> out;
    for (const auto& x : enumerate_elements(s.ptr, radius)) out.push_back(x.str());
    return out;
  });

  py::class_<CubeComplex>(m, "CubeComplex")
      .def("cell_counts", [](const CubeComplex& x) {
        std::vector<std::string> out;
        for (const auto& c : cell_counts(x)) out.push_back(c.str());
        return out;
      })
      .def("euler_characteristic", [](const CubeComplex& x) { return euler_characteristic(x).convert_to<long long>(); })
      .def("is_npc", &is_npc)
      .def("is_special", [](const CubeComplex& x) { return check_special_map(x).special; })
      .def("is_closed_surface", &is_closed_surface)
      .def("stats", &stats_line)
      .def("text", [](const CubeComplex& x, bool dump) {
        std::ostringstream out;
        write_complex(out, x, dump);
        return out.str();
      }, py::arg("dump_cells") = false);
  m.def("build_z0", [](const Spec& s) { return build_Z0(s.ptr); });
  m.def("build_zf", [](const Spec& s, std::size_t q) { return build_Zf(s.ptr, q); });
  m.def("parse_complex", [](const std::string& text) { return parse_complex(text); });

  py::class_<HomomorphismSpec>(m, "Homomorphism")
      .def_property_readonly("source", [](const HomomorphismSpec& h) { return Spec{h.source}; })
      .def_property_readonly("target", [](const HomomorphismSpec& h) { return Spec{h.target}; })
      .def_property_readonly("images", [](const HomomorphismSpec& h) {
        std::vector<std::pair<std::string, std::string>> out;
        for (std::size_t v = 0; v < h.images.size(); ++v) out.emplace_back(h.source->graph().label(v), h.images[v].str());
        return out;
      })
      .def("relator_check", [](HomomorphismSpec& h) { return report_line(relator_check(h)); })
      .def("injectivity_sample", [](const HomomorphismSpec& h, std::size_t radius) {
        return report_line(injectivity_sample(h, radius));
      })
      .def("compose", [](const HomomorphismSpec& first, const HomomorphismSpec& second) { return compose(first, second); })
      .def("text", [](const HomomorphismSpec& h) {
        std::ostringstream out;
        write_homomorphism(out, h);
        return out.str();
      });
  m.def("double_homomorphism", [](const Spec& s, const std::string& t) {
    return double_homomorphism(s.ptr->graph(), t, s.ptr->orders());
  });
  m.def("co_contraction_embedding", [](const Spec& s, const std::string& x, const std::string& t) {
    return co_contraction_embedding(s.ptr->graph(), x, t, s.ptr->orders());
  });
  m.def("parse_homomorphism", [](const std::string& text) { return parse_homomorphism(text); });

  m.def("racg_surface_subgroup", [](const SimpleGraph& g) { return classification_dict(g, racg_surface_subgroup(g)); });
  m.def("raag_surface_subgroup", [](const SimpleGraph& g) { return classification_dict(g, raag_surface_subgroup(g)); });
  m.def("census", [](std::size_t n, std::size_t threads) {
    std::ostringstream out;
    write_census(out, census(n, threads));
    return out.str();
  }, py::arg("n"), py::arg("threads") = 0);
}
