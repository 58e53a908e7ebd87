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

// kbound command-line tool. Every command reads JSON (--input, "-" for
// stdin) and writes a JSON report (--out, stdout by default).

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kbound/condition.hpp"
#include "kbound/design.hpp"
#include "kbound/generators.hpp"
#include "kbound/graver.hpp"
#include "kbound/harness.hpp"
#include "kbound/incidence.hpp"
#include "kbound/json_io.hpp"
#include "kbound/matroid.hpp"

namespace {

using kbound::Json;

struct Globals {
  std::string input = "-";
  std::string out = "-";
  std::uint64_t seed = 42;
  std::optional<double> tol;
};

// Applies --tol to float documents before parsing.
Json load(const Globals& g, const std::string& path) {
  Json j = kbound::read_json_file(path);
  if (g.tol && j.is_object() && j.contains("field") && j["field"] == "complex_float") j["tol"] = *g.tol;
  if (g.tol && j.is_object() && j.contains("rep") && j["rep"].is_object() &&
      j["rep"].value("field", "") == "complex_float") {
    j["rep"]["tol"] = *g.tol;
  }
  return j;
}

kbound::Matrix load_matrix(const Globals& g) { return kbound::matrix_from_json(load(g, g.input)); }
kbound::PointConfig load_points(const Globals& g) { return kbound::points_from_json(load(g, g.input)); }

// A point document becomes its affine matroid; anything else is read as a
// matroid or a bare matrix.
kbound::LinearMatroid load_matroid(const Globals& g) {
  Json j = load(g, g.input);
  if (j.is_object() && j.contains("points")) return kbound::from_affine(kbound::points_from_json(j));
  return kbound::matroid_from_json(j);
}

void emit(const Globals& g, const Json& j) { kbound::write_json(j, g.out); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circuit imbalance, incidence and Graver bound toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--input", g.input, "Input JSON file ('-' for stdin)");
  app.add_option("--out", g.out, "Output JSON file ('-' for stdout)");
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--tol", g.tol, "Zero tolerance for complex_float inputs")->check(CLI::PositiveNumber);

  int status = 0;

  auto* kappa_cmd = app.add_subcommand("kappa", "Circuit imbalance measure");
  std::string method;
  kappa_cmd->add_option("--method", method, "Defaults to circuit for exact input, detratio for floats")->check(CLI::IsMember({"circuit", "detratio", "both"}));
  kappa_cmd->callback([&] {
    kbound::Matrix a = load_matrix(g);
    if (method.empty()) {
      emit(g, kbound::to_json(kbound::kappa(a)));
    } else if (method == "circuit") {
      emit(g, kbound::to_json(kbound::kappa_circuit(a)));
    } else if (method == "detratio") {
      emit(g, kbound::to_json(kbound::kappa_detratio(a)));
    } else {
      kbound::Kappa c = kbound::kappa_circuit(a);
      kbound::Kappa d = kbound::kappa_detratio(a);
      bool agree = c.value_sq && d.value_sq ? *c.value_sq == *d.value_sq
                                            : std::abs(c.value - d.value) <= 1e-9 * std::max(1.0, c.value);
      emit(g, {{"circuit", kbound::to_json(c)}, {"detratio", kbound::to_json(d)}, {"agree", agree}});
    }
  });

  app.add_subcommand("delta", "delta distance measure")->callback([&] {
    emit(g, kbound::to_json(kbound::delta_measure(load_matrix(g))));
  });
  app.add_subcommand("deltamod", "Largest rank-sized subdeterminant of an integer matrix")->callback([&] {
    emit(g, kbound::to_json(kbound::delta_modularity(load_matrix(g))));
  });

  auto* chibar_cmd = app.add_subcommand("chibar", "Sampled lower estimate of chi-bar");
  std::size_t trials = 1000;
  chibar_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
  chibar_cmd->callback([&] {
    kbound::Matrix a = load_matrix(g);
    double c = kbound::chibar_sample(a, trials, g.seed);
    emit(g, {{"chibar_sample", c}, {"trials", trials}, {"seed", g.seed}, {"kind", "lower estimate"}});
  });

  app.add_subcommand("lines", "Lines of a point configuration")->callback([&] {
    kbound::PointConfig s = load_points(g);
    emit(g, kbound::to_json(kbound::lines(s), s));
  });
  app.add_subcommand("maxlines", "Most lines through one point")->callback([&] {
    emit(g, kbound::to_json(kbound::maxlines(load_points(g))));
  });
  app.add_subcommand("check-sg", "Check both maxlines lower bounds")->callback([&] {
    kbound::MaxlinesReport r = kbound::check_maxlines_bounds(load_points(g));
    emit(g, kbound::to_json(r));
    if (!r.pass()) status = 1;
  });

  auto* chain_cmd = app.add_subcommand("minor-chain", "Greedy contraction chain down to a rank-2 minor");
  std::size_t to_rank = 2;
  chain_cmd->add_option("--to-rank", to_rank)->check(CLI::IsMember({2}));
  chain_cmd->callback([&] {
    kbound::MinorChain c = kbound::minor_chain_to_rank2(load_matroid(g), false);
    emit(g, kbound::to_json(c));
    if (!c.bound_holds) status = 1;
  });
  app.add_subcommand("longest-line", "Largest U_{2,l} obtained by contraction and simplification")->callback([&] {
    emit(g, kbound::to_json(kbound::longest_line_minor(load_matroid(g))));
  });

  auto* design_cmd = app.add_subcommand("design", "Design matrices");
  design_cmd->require_subcommand(1);
  design_cmd->add_subcommand("check", "(q,k,t) parameters of a matrix")->callback([&] {
    emit(g, kbound::to_json(kbound::check_design(load_matrix(g))));
  });
  design_cmd->add_subcommand("build", "Design from the special lines of a point configuration")->callback([&] {
    kbound::SpecialLineDesign d = kbound::build_special_line_design(load_points(g));
    emit(g, {{"matrix", kbound::matrix_to_json(d.a)},
             {"certificate", kbound::to_json(kbound::check_design(d.a))},
             {"min_k", d.min_k},
             {"all_lines_odd", d.all_lines_odd}});
  });
  design_cmd->add_subcommand("rankcheck", "Rank lower bound and scaled Gram inequalities")->callback([&] {
    kbound::DesignRankReport r = kbound::design_rank_check(load_matrix(g));
    emit(g, kbound::to_json(r));
    if (!r.pass()) status = 1;
  });

  auto* scale_cmd = app.add_subcommand("scale", "Sinkhorn scaling to (<= row cap, 1)");
  std::string row_cap;
  kbound::ScalingOptions scale_opts;
  scale_cmd->add_option("--row-cap", row_cap, "Rational row cap; defaults to q/k of the matrix");
  scale_cmd->add_option("--eps", scale_opts.eps)->check(CLI::PositiveNumber);
  scale_cmd->add_option("--max-iter", scale_opts.max_iter)->check(CLI::PositiveNumber);
  scale_cmd->callback([&] {
    kbound::Matrix a = load_matrix(g);
    mpq_class cap;
    if (row_cap.empty()) {
      kbound::DesignCertificate c = kbound::check_design(a);
      cap = mpq_class(static_cast<long>(c.q), static_cast<long>(c.k));
      cap.canonicalize();
    } else {
      cap = kbound::parse_rational(row_cap);
    }
    Json out = kbound::to_json(kbound::sinkhorn_scale(a, cap, scale_opts));
    out["row_cap"] = kbound::rational_to_json(cap);
    emit(g, out);
  });

  app.add_subcommand("graver", "Graver basis of a small integer matrix")->callback([&] {
    kbound::Matrix a = load_matrix(g);
    Json out = kbound::to_json(kbound::graver_basis(a));
    out["kappa_check"] = kbound::to_json(kbound::kappa_vs_graver_check(a));
    emit(g, out);
  });

  auto* prox_cmd = app.add_subcommand("proximity", "LP/IP proximity through the separable reduction");
  std::string instance;
  prox_cmd->add_option("--instance", instance, "IP JSON file")->required();
  prox_cmd->callback([&] {
    kbound::ProximityReport r = kbound::proximity_experiment(kbound::ip_from_json(load(g, instance)));
    emit(g, kbound::to_json(r));
    if (!r.pass()) status = 1;
  });

  auto* gen = app.add_subcommand("generate", "Instance generators");
  gen->require_subcommand(1);
  std::size_t gd = 3, gt = 4, gn = 8, gv = 6, gside = 3;
  long lo = -3, hi = 3;
  bool duplicate = false;
  auto* g_dowling = gen->add_subcommand("dowling", "Dowling geometry matrix");
  g_dowling->add_option("--d", gd);
  g_dowling->add_option("--t", gt);
  g_dowling->callback([&] { emit(g, kbound::matrix_to_json(kbound::dowling(gd, gt))); });
  auto* g_half = gen->add_subcommand("halfcircle", "2 x n half-circle matrix");
  g_half->add_option("--n", gn);
  g_half->callback([&] { emit(g, kbound::matrix_to_json(kbound::half_circle(gn))); });
  auto* g_inc = gen->add_subcommand("incidence-complete", "Unsigned incidence matrix of K_v");
  g_inc->add_option("--v", gv);
  g_inc->callback([&] { emit(g, kbound::matrix_to_json(kbound::unsigned_incidence_complete(gv))); });
  auto* g_grid = gen->add_subcommand("grid", "side x side grid of points");
  g_grid->add_option("--side", gside);
  g_grid->callback([&] { emit(g, kbound::points_to_json(kbound::grid(gside))); });
  auto* g_rand = gen->add_subcommand("random-config", "Random full-dimensional configuration");
  g_rand->alias("random");
  g_rand->add_option("--d", gd);
  g_rand->add_option("--n", gn);
  g_rand->callback([&] { emit(g, kbound::points_to_json(kbound::random_config(gd, gn, g.seed))); });
  auto* g_int = gen->add_subcommand("random-integer-matrix", "Random integer matrix");
  g_int->add_option("--d", gd);
  g_int->add_option("--n", gn);
  g_int->add_option("--lo", lo);
  g_int->add_option("--hi", hi);
  g_int->callback([&] { emit(g, kbound::matrix_to_json(kbound::random_integer_matrix(gd, gn, lo, hi, g.seed))); });
  auto* g_ip = gen->add_subcommand("ip-instance", "Random feasible bounded IP");
  g_ip->add_option("--d", gd);
  g_ip->add_option("--n", gn);
  g_ip->add_flag("--duplicate-column", duplicate);
  g_ip->callback([&] { emit(g, kbound::ip_to_json(kbound::random_ip_instance(gd, gn, g.seed, duplicate))); });

  auto* verify = app.add_subcommand("verify", "Run bound-verification suites");
  std::vector<std::string> suites{"all"};
  bool list = false;
  verify->add_option("--suite", suites, "Suite names, or 'all'");
  verify->add_flag("--list", list, "List registered suites and exit");
  verify->callback([&] {
    if (list) {
      for (const auto& s : kbound::registered_suites()) std::cout << s.name << "\t" << s.description << "\n";
      return;
    }
    auto results = kbound::verify_suites(suites, g.seed);
    emit(g, kbound::report_to_json(results, g.seed, suites));
    std::size_t passed = 0;
    for (const auto& r : results) {
      passed += r.pass;
      if (!r.pass) std::cerr << "FAIL " << r.suite << "/" << r.name << "\n";
    }
    std::cerr << passed << "/" << results.size() << " checks passed\n";
    if (kbound::any_theorem_failure(results)) status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const kbound::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
