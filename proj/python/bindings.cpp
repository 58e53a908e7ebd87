// Copyright 2026 The kbound Authors.
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

// Python bindings. Documents cross the boundary as JSON strings; the kbound
// package converts them to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "kbound/condition.hpp"
#include "kbound/design.hpp"
#include "kbound/generators.hpp"
#include "kbound/graver.hpp"
#include "kbound/harness.hpp"
#include "kbound/incidence.hpp"
#include "kbound/json_io.hpp"
#include "kbound/matroid.hpp"

namespace py = pybind11;
using kbound::Json;

namespace {

kbound::Matrix matrix(const std::string& s) { return kbound::matrix_from_json(Json::parse(s)); }
kbound::PointConfig points(const std::string& s) { return kbound::points_from_json(Json::parse(s)); }

kbound::LinearMatroid matroid(const std::string& s) {
  Json j = Json::parse(s);
  if (j.is_object() && j.contains("points")) return kbound::from_affine(kbound::points_from_json(j));
  return kbound::matroid_from_json(j);
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_kbound, m) {
  m.doc() = "Exact circuit imbalance, incidence, design and Graver computations";

  // Translators run newest first, so subclasses are registered after Error.
  auto& error = py::register_exception<kbound::Error>(m, "KboundError", PyExc_ValueError);
  py::register_exception<kbound::GuardExceeded>(m, "GuardExceeded", error.ptr());
  py::register_exception<kbound::PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("kappa", [](const std::string& a, const std::string& method) {
    kbound::Matrix mat = matrix(a);
    if (method == "circuit") return dump(kbound::to_json(kbound::kappa_circuit(mat)));
    if (method == "detratio") return dump(kbound::to_json(kbound::kappa_detratio(mat)));
    if (method == "auto") return dump(kbound::to_json(kbound::kappa(mat)));
    throw kbound::PreconditionError("method must be auto, circuit or detratio");
  }, py::arg("matrix"), py::arg("method") = "auto");
  m.def("delta", [](const std::string& a) { return dump(kbound::to_json(kbound::delta_measure(matrix(a)))); });
  m.def("deltamod", [](const std::string& a) { return dump(kbound::to_json(kbound::delta_modularity(matrix(a)))); });
  m.def("chibar", [](const std::string& a, std::size_t trials, std::uint64_t seed) {
    return kbound::chibar_sample(matrix(a), trials, seed);
  }, py::arg("matrix"), py::arg("trials") = 1000, py::arg("seed") = 42);
  m.def("project_kernel", [](const std::string& a, const std::vector<std::size_t>& j) {
    return dump(kbound::matrix_to_json(kbound::project_kernel(matrix(a), j)));
  });

  m.def("lines", [](const std::string& s) {
    kbound::PointConfig p = points(s);
    return dump(kbound::to_json(kbound::lines(p), p));
  });
  m.def("maxlines", [](const std::string& s) { return dump(kbound::to_json(kbound::maxlines(points(s)))); });
  m.def("check_sg", [](const std::string& s) { return dump(kbound::to_json(kbound::check_maxlines_bounds(points(s)))); });

  m.def("minor_chain", [](const std::string& s) {
    return dump(kbound::to_json(kbound::minor_chain_to_rank2(matroid(s), false)));
  });
  m.def("longest_line", [](const std::string& s) { return dump(kbound::to_json(kbound::longest_line_minor(matroid(s)))); });

  m.def("design_check", [](const std::string& a) { return dump(kbound::to_json(kbound::check_design(matrix(a)))); });
  m.def("design_build", [](const std::string& s) {
    kbound::SpecialLineDesign d = kbound::build_special_line_design(points(s));
    return dump({{"matrix", kbound::matrix_to_json(d.a)},
                 {"certificate", kbound::to_json(kbound::check_design(d.a))},
                 {"min_k", d.min_k},
                 {"all_lines_odd", d.all_lines_odd}});
  });
  m.def("design_rankcheck", [](const std::string& a) { return dump(kbound::to_json(kbound::design_rank_check(matrix(a)))); });
  m.def("scale", [](const std::string& a, const std::string& row_cap, double eps, std::size_t max_iter) {
    kbound::ScalingOptions opts;
    opts.eps = eps;
    opts.max_iter = max_iter;
    return dump(kbound::to_json(kbound::sinkhorn_scale(matrix(a), kbound::parse_rational(row_cap), opts)));
  }, py::arg("matrix"), py::arg("row_cap"), py::arg("eps") = 1e-9, py::arg("max_iter") = 100000);

  m.def("graver", [](const std::string& a) { return dump(kbound::to_json(kbound::graver_basis(matrix(a)))); });
  m.def("proximity", [](const std::string& ip) {
    return dump(kbound::to_json(kbound::proximity_experiment(kbound::ip_from_json(Json::parse(ip)))));
  });

  m.def("dowling", [](std::size_t d, std::size_t t) { return dump(kbound::matrix_to_json(kbound::dowling(d, t))); });
  m.def("half_circle", [](std::size_t n) { return dump(kbound::matrix_to_json(kbound::half_circle(n))); });
  m.def("incidence_complete", [](std::size_t v) {
    return dump(kbound::matrix_to_json(kbound::unsigned_incidence_complete(v)));
  });
  m.def("grid", [](std::size_t side) { return dump(kbound::points_to_json(kbound::grid(side))); });
  m.def("random_config", [](std::size_t d, std::size_t n, std::uint64_t seed) {
    return dump(kbound::points_to_json(kbound::random_config(d, n, seed)));
  });
  m.def("random_integer_matrix", [](std::size_t d, std::size_t n, long lo, long hi, std::uint64_t seed) {
    return dump(kbound::matrix_to_json(kbound::random_integer_matrix(d, n, lo, hi, seed)));
  });
  m.def("ip_instance", [](std::size_t d, std::size_t n, std::uint64_t seed, bool duplicate) {
    return dump(kbound::ip_to_json(kbound::random_ip_instance(d, n, seed, duplicate)));
  });

  m.def("suite_names", &kbound::suite_names);
  m.def("verify", [](const std::vector<std::string>& suites, std::uint64_t seed) {
    std::vector<kbound::CheckResult> results;
    {
      py::gil_scoped_release release;
      results = kbound::verify_suites(suites, seed);
    }
    return dump(kbound::report_to_json(results, seed, suites));
  });
}
