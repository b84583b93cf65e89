// SPDX-License-Identifier: MIT
//
// Python extension `twobridge._core`.  Every function returns the same JSON
// record the command-line tool emits, serialized to a string; the package
// wrapper decodes it.  Library errors become ValueError (domain violations)
// or OverflowError.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <vector>

#include "twobridge/classify.hpp"
#include "twobridge/error.hpp"
#include "twobridge/invariants.hpp"
#include "twobridge/oracle.hpp"
#include "twobridge/paths.hpp"
#include "twobridge/report.hpp"

namespace py = pybind11;
using namespace twobridge;

namespace {

std::string dump(const nlohmann::json& j) { return j.dump(); }

std::string catalog_record(i64 r, i64 s) { return dump(catalog_json(r, s)); }

std::string invariants(const std::string& family, int w, int u, i64 alpha, i64 beta, i64 n, bool closed) {
  const Weights wt = Weights::make(alpha, beta, n);
  const SurfaceData d = closed ? closed_form(family, w, u, alpha, beta, n) : assemble(path_edges(family, w, u), wt);
  return dump(to_json(d));
}

std::string genus_zero(const std::string& family, int w, int u, i64 alpha_max) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : genus_zero_solutions(family, w, u, alpha_max)) out.push_back(to_json(s));
  return dump(out);
}

std::string reducible(int w, int u) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reducible_surgeries(w, u)) out.push_back(to_json(r));
  return dump(out);
}

std::string surgery(int w, int u, const std::string& gamma) {
  return dump(to_json(surgery_knot(w, u, Rational::parse(gamma))));
}

std::string torus_knots(const std::string& fraction) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : torus_knot_surgeries(Rational::parse(fraction))) out.push_back(to_json(t));
  return dump(out);
}

std::string satellite(const std::string& fraction, const std::string& gamma) {
  return dump(to_json(satellite_candidates(Rational::parse(fraction), Rational::parse(gamma))));
}

std::string all_b(int m) { return dump(to_json(all_B_invariants(m))); }

std::string verify(i64 alpha_max, const std::vector<std::string>& families) {
  SweepSpec spec = SweepSpec::defaults(alpha_max);
  spec.families = families;
  spec.symmetry_alpha_max = std::min<i64>(alpha_max, 12);
  validate_spec(spec);
  const auto g = verify_genus_zero(spec);
  const auto c = verify_closed_forms(spec);
  const auto s = verify_symmetries(spec);
  nlohmann::json out;
  out["genus_zero"] = to_json(g);
  out["closed_forms"] = to_json(c);
  out["symmetries"] = to_json(s);
  out["ok"] = g.ok() && c.ok() && s.ok();
  return dump(out);
}

py::tuple link_ws(i64 r, i64 s) {
  const LinkParams lp = LinkParams::from_rs(r, s);
  return py::make_tuple(lp.w, lp.u);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Boundary slopes and surgery classification for two-bridge links";
  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const OverflowError& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    }
  });

  m.def("link_ws", &link_ws, py::arg("r"), py::arg("s"), "Parameters (w, u) of L([r, s]).");
  m.def("catalog", &catalog_record, py::arg("r"), py::arg("s"));
  m.def("invariants", &invariants, py::arg("family"), py::arg("w"), py::arg("u"), py::arg("alpha"),
        py::arg("beta"), py::arg("n") = 0, py::arg("closed_form") = false);
  m.def("genus_zero_solutions", &genus_zero, py::arg("family"), py::arg("w"), py::arg("u"),
        py::arg("alpha_max") = 64);
  m.def("reducible_surgeries", &reducible, py::arg("w"), py::arg("u"));
  m.def("surgery_knot", &surgery, py::arg("w"), py::arg("u"), py::arg("gamma"));
  m.def("torus_knot_surgeries", &torus_knots, py::arg("fraction"));
  m.def("satellite_candidates", &satellite, py::arg("fraction"), py::arg("gamma"));
  m.def("all_b_invariants", &all_b, py::arg("m"));
  m.def("verify", &verify, py::arg("alpha_max") = 24, py::arg("families") = std::vector<std::string>{});
}
