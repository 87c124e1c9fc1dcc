#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hsect/bundle_io.hpp"
#include "hsect/cli.hpp"
#include "hsect/cohomology.hpp"
#include "hsect/weyl_bott.hpp"

namespace py = pybind11;
using namespace hsect;

namespace {

py::object to_py(const Integer& n) { return py::int_(py::str(to_string(n))); }

std::vector<std::size_t> zero_based(const std::vector<int>& levi, int rank) {
  std::vector<std::size_t> out;
  for (int i : levi) {
    if (i < 1 || i > rank) throw std::invalid_argument("levi index outside 1.." + std::to_string(rank));
    out.push_back(static_cast<std::size_t>(i - 1));
  }
  return out;
}

py::list module_to_py(const GModuleDecomposition& g) {
  py::list out;
  for (const auto& e : g.entries) {
    py::dict d;
    d["weight"] = e.weight.coords();
    d["mult"] = e.multiplicity;
    d["dim"] = to_py(e.dimension);
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Global sections of homogeneous bundles on ADE flag varieties";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a command line; returns (exit code, stdout, stderr).");

  m.def(
      "bott",
      [](const std::string& type, const std::vector<int>& weight, const std::vector<int>& levi) {
        const auto t = CartanType::parse(type);
        const auto geom = build_geometry(t, zero_based(levi, t.rank));
        if (weight.size() != geom->rank()) throw std::invalid_argument("wrong number of coordinates");
        const auto b = bott(*geom, Weight(weight));
        py::dict d;
        d["singular"] = b.singular;
        if (!b.singular) {
          d["degree"] = b.degree;
          d["weight"] = b.weight.coords();
          d["dim"] = to_py(b.dimension);
        }
        return d;
      },
      py::arg("type"), py::arg("weight"), py::arg("levi") = std::vector<int>{});

  m.def(
      "h0", [](const std::string& text) { return module_to_py(h0(parse_bundle(text))); },
      py::arg("bundle_json"));

  m.def(
      "h_graded",
      [](const std::string& text, int degree) {
        return module_to_py(h_graded(parse_bundle(text), degree));
      },
      py::arg("bundle_json"), py::arg("degree"));

  m.def(
      "euler", [](const std::string& text) { return to_py(euler(parse_bundle(text))); },
      py::arg("bundle_json"));

  m.def(
      "check",
      [](const std::string& text) {
        const QuiverRep rep = parse_bundle(text);
        std::vector<std::string> problems = validate(rep);
        if (problems.empty() && rep.geometry().is_borel()) {
          for (const auto& r : check_relations(rep)) {
            problems.push_back("relation fails at " + r.source.str());
          }
        }
        return problems;
      },
      py::arg("bundle_json"), "Structural problems and failed relations; empty when valid.");

  m.def(
      "solve",
      [](const std::string& text) -> py::object {
        const auto out = solve_derived_arrows(parse_bundle(text));
        if (!out.consistent) return py::none();
        return py::str(dump_bundle(out.rep));
      },
      py::arg("bundle_json"), "Completed bundle as JSON text, or None when inconsistent.");
}
