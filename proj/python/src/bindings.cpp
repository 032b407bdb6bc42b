#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "widthlab/bounds.hpp"
#include "widthlab/census.hpp"
#include "widthlab/error.hpp"
#include "widthlab/handles.hpp"
#include "widthlab/inequalities.hpp"
#include "widthlab/report_json.hpp"
#include "widthlab/triangulation.hpp"
#include "widthlab/width.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace widthlab;

namespace {

// Results cross the boundary as JSON text; the Python side decodes them.
std::string dump(const json& j) { return j.dump(); }

std::string check(const std::string& text) {
  const Triangulation tri = parse_triangulation(text);
  const auto report = validate_closed(tri);
  return dump({{"validation", report},
               {"orientable", report.valid() && check_orientable(tri)},
               {"skeleton", skeleton(tri)}});
}

std::string dual_graph(const std::string& text) {
  const Triangulation tri = parse_triangulation(text);
  require_closed_orientable(tri);
  return format_edge_list(build_dual(tri));
}

std::string width(const std::string& edge_list, const std::string& param, std::optional<std::uint64_t> seed) {
  const MultiGraph g = parse_edge_list(edge_list);
  const Param p = parse_param(param);
  return dump(seed ? heuristic_upper(g, p, *seed) : width_exact(g, p));
}

std::string certify(const std::string& text, const std::string& mode, const std::string& witness) {
  const Triangulation tri = parse_triangulation(text);
  require_closed_orientable(tri);
  const MultiGraph dual = build_dual(tri);
  const HandleDecomposition hd(tri);
  if (mode == "linear") {
    const auto layout = witness.empty() ? std::get<LinearLayout>(cutwidth_exact(dual).witness)
                                        : parse_layout(dual, witness);
    return dump(linear_certificate(hd, layout));
  }
  if (mode == "graph") {
    const auto host =
        witness.empty() ? std::get<HostTree>(congestion_exact(dual).witness) : parse_host(witness);
    return dump(graph_certificate(hd, host));
  }
  throw Error(Errc::InvalidArgument, "unknown mode '" + mode + "'");
}

std::string inequalities(const std::string& edge_list) { return dump(verify_chain(parse_edge_list(edge_list))); }

std::string bounds(std::optional<int> tw, std::optional<int> pw, std::optional<int> cw, std::optional<int> cng,
                   bool irreducible, bool non_haken) {
  WidthSet w;
  auto set = [](std::optional<WidthValue>& slot, std::optional<int> v) {
    if (v) slot = WidthValue{*v, true};
  };
  set(w.tw, tw);
  set(w.pw, pw);
  set(w.cw, cw);
  set(w.cng, cng);
  return dump(genus_bounds(w, {true, true, irreducible, non_haken}));
}

py::list census(int max_tets) {
  py::list out;
  for (const auto& tri : enumerate_census(max_tets)) out.append(serialize(tri));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Width parameters of dual graphs and handle-decomposition certificates";
  // The exception carries the library error code as `code`.
  static const py::handle error_type = py::exception<Error>(m, "WidthlabError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });
  m.def("check", &check, py::arg("text"));
  m.def("dual_graph", &dual_graph, py::arg("text"));
  m.def("width", &width, py::arg("edge_list"), py::arg("param"), py::arg("seed") = std::nullopt);
  m.def("certify", &certify, py::arg("text"), py::arg("mode"), py::arg("witness") = "");
  m.def("inequalities", &inequalities, py::arg("edge_list"));
  m.def("bounds", &bounds, py::arg("tw") = std::nullopt, py::arg("pw") = std::nullopt, py::arg("cw") = std::nullopt,
        py::arg("cng") = std::nullopt, py::arg("irreducible") = false, py::arg("non_haken") = false);
  m.def("census", &census, py::arg("max_tets"));
}
