// Copyright 2026 The hypermdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "hypermdim/circle_class.hpp"
#include "hypermdim/cli.hpp"
#include "hypermdim/explosion.hpp"
#include "hypermdim/hyperspace.hpp"
#include "hypermdim/sepspan.hpp"
#include "hypermdim/serialize.hpp"

namespace py = pybind11;
using namespace hypermdim;

namespace {

py::object to_py(const json& j) {
  static auto* loads = new py::object(py::module_::import("json").attr("loads"));
  return (*loads)(j.dump());
}

json from_py(const py::object& obj) {
  static auto* dumps = new py::object(py::module_::import("json").attr("dumps"));
  return json::parse((*dumps)(obj).cast<std::string>());
}

DynSystem system_from(const std::string& kind, const py::object& params) {
  json spec{{"kind", kind}};
  if (!params.is_none()) {
    json p = from_py(params);
    for (const char* key : {"breakpoints", "space"})
      if (p.contains(key)) {
        spec[key] = p[key];
        p.erase(key);
      }
    spec["params"] = p;
  }
  return make_system(spec.get<SystemSpec>());
}

FinitePoint finite(const DynSystem& sys, const std::vector<double>& xs) {
  return FinitePoint(sys.space(), xs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Core routines of hypermdim";
  m.attr("__version__") = HYPERMDIM_VERSION;

  // Never destroyed: the interpreter may be gone by static destruction time.
  static auto* error = new py::exception<Error>(m, "HypermdimError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error->ptr(), (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<DynSystem>(m, "DynSystem")
      .def(py::init(&system_from), py::arg("kind"), py::arg("params") = py::none())
      .def_property_readonly("name", &DynSystem::name)
      .def_property_readonly("space", [](const DynSystem& s) { return std::string(to_string(s.space())); })
      .def_property_readonly("invertible", &DynSystem::is_homeomorphism)
      .def("__call__", [](const DynSystem& s, double x) { return s.forward(x); })
      .def("inverse", [](const DynSystem& s, double x) { return s.inverse(x); })
      .def("iterate", [](const DynSystem& s, double x, long n) { return iterate(s, x, n); })
      .def("spec", [](const DynSystem& s) { return to_py(json(s.spec())); })
      .def("__repr__", [](const DynSystem& s) { return "<DynSystem " + s.name() + ">"; });

  m.def("dyn_distance", [](const DynSystem& s, double x, double y, int k) {
    return dyn_distance(s, x, y, k);
  });
  m.def("hausdorff", [](const DynSystem& s, const std::vector<double>& a, const std::vector<double>& b) {
    return hausdorff(finite(s, a), finite(s, b));
  }, "Hausdorff distance between finite sets in the system's space");
  m.def("induced_dyn_distance",
        [](const DynSystem& s, const std::vector<double>& a, const std::vector<double>& b, int k) {
          return induced_dyn_distance(s, finite(s, a), finite(s, b), k);
        });

  m.def("max_separated",
        [](const DynSystem& s, const std::vector<double>& pool, int k, double eps,
           const std::string& method) {
          return to_py(json(max_separated(s, pool, k, eps, method_from_string(method))));
        },
        py::arg("system"), py::arg("pool"), py::arg("k"), py::arg("eps"),
        py::arg("method") = "exact");
  m.def("min_spanning",
        [](const DynSystem& s, const std::vector<double>& pool, const std::vector<double>& targets,
           int k, double eps, const std::string& method) {
          return to_py(json(min_spanning(s, pool, targets, k, eps, method_from_string(method))));
        },
        py::arg("system"), py::arg("pool"), py::arg("targets"), py::arg("k"), py::arg("eps"),
        py::arg("method") = "exact");
  m.def("entropy_estimate",
        [](const DynSystem& s, double eps, int k_min, int k_max, std::size_t grid) {
          GridPool pool;
          pool.size = grid;
          return to_py(json(entropy_estimate(s, eps, k_min, k_max, pool)));
        },
        py::arg("system"), py::arg("eps"), py::arg("k_min"), py::arg("k_max"),
        py::arg("grid") = 2000);
  m.def("subset_certificate",
        [](const DynSystem& s, int k, double eps, std::size_t grid, const std::string& selection) {
          CertificateOptions opt;
          opt.selection = selection_from_string(selection);
          return to_py(json(build_subset_certificate(s, k, eps, uniform_grid(s.space(), grid), opt)));
        },
        py::arg("system"), py::arg("k"), py::arg("eps"), py::arg("grid") = 200,
        py::arg("selection") = "isolated");
  m.def("find_wandering_interval", [](const DynSystem& s) {
    return to_py(json(find_wandering_interval(s)));
  });
  m.def("classify_circle", [](const DynSystem& s) { return to_py(json(classify_mdim(s))); });

  m.def("subcommands", &cli::subcommands);
  m.def("default_config", [](const std::string& sub) { return to_py(cli::default_config(sub)); });
  m.def("run",
        [](const std::string& sub, const py::object& config) {
          cli::RunOutput out = cli::run(sub, config.is_none() ? json::object() : from_py(config));
          return py::make_tuple(to_py(out.record), out.csv);
        },
        py::arg("subcommand"), py::arg("config") = py::none(),
        "Run one experiment; returns (result record, csv text).");
}
