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

#include "kbound/harness.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <set>

#include "kbound/generators.hpp"

namespace kbound {

namespace {

const mpq_class kPiLower(333, 106);

std::uint64_t derive_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h ^ (seed * 0x9e3779b97f4a7c15ull);
}

// Counts instances and remembers the first failure.
struct Tally {
  std::size_t total = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void add(bool ok, const std::string& what) {
    ++total;
    if (!ok) {
      if (failed == 0) first_failure = what;
      ++failed;
    }
  }
  bool pass() const { return total > 0 && failed == 0; }
  Json json() const {
    Json out;
    out["holds"] = std::to_string(total - failed) + "/" + std::to_string(total);
    if (failed > 0) out["first_failure"] = first_failure;
    return out;
  }
};

CheckOutcome outcome(std::string descriptor, Json claimed, const Tally& t, Json extra = Json::object()) {
  Json observed = t.json();
  for (auto it = extra.begin(); it != extra.end(); ++it) observed[it.key()] = it.value();
  return {std::move(descriptor), std::move(claimed), std::move(observed), t.pass()};
}

std::string shape(const Matrix& a) { return std::to_string(a.rows()) + "x" + std::to_string(a.cols()); }

std::vector<PointConfig> generated_configs(std::size_t count, std::size_t min_dim, std::size_t max_dim,
                                           std::size_t max_extra, std::mt19937_64& rng) {
  std::vector<PointConfig> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t d = min_dim + i % (max_dim - min_dim + 1);
    std::size_t n = d + 3 + rng() % (max_extra + 1);
    out.push_back(random_config(d, n, rng()));
  }
  return out;
}

std::vector<std::pair<std::string, PointConfig>> special_configs(std::uint64_t seed) {
  std::vector<std::pair<std::string, PointConfig>> out;
  out.emplace_back("grid(3)", grid(3));
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < 10; ++i) {
    std::size_t d = 2 + i % 3;
    std::size_t n = 8 + i;
    std::uint64_t s = rng();
    out.emplace_back("random_special_config(d=" + std::to_string(d) + ",n=" + std::to_string(n) + ")",
                     random_special_config(d, n, s));
  }
  return out;
}

bool is_zero_matrix(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

mpq_class cap_of(const DesignCertificate& c) {
  mpq_class cap(static_cast<long>(c.q), static_cast<long>(c.k));
  cap.canonicalize();
  return cap;
}

// ---------------------------------------------------------------- kappa

CheckOutcome kappa_oracle(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    std::size_t d = 1 + rng() % 4;
    std::size_t n = d + 1 + rng() % (9 - d - 1 + 1);
    n = std::min<std::size_t>(n, 8);
    Matrix a = random_rational_matrix(d, n, rng());
    Kappa c = kappa_circuit(a);
    Kappa r = kappa_detratio(a);
    t.add(*c.value_sq == *r.value_sq && c.has_circuit == r.has_circuit, "instance " + std::to_string(i) + " " + shape(a));
  }
  return outcome("200 random rational matrices, d <= 4, n <= 8", "kappa_circuit == kappa_detratio (exact)", t);
}

CheckOutcome kappa_gaussian_oracle(std::uint64_t) {
  Tally t;
  for (std::size_t d : {2u, 3u}) {
    Matrix a = dowling(d, 4);
    t.add(*kappa_circuit(a).value_sq == *kappa_detratio(a).value_sq, "dowling(" + std::to_string(d) + ",4)");
  }
  return outcome("dowling(2,4), dowling(3,4) over Q(i)", "kappa_circuit == kappa_detratio (exact)", t);
}

CheckOutcome kappa_half_circle(std::uint64_t) {
  Tally t;
  Json values = Json::object();
  for (std::size_t n : {4u, 8u, 16u, 32u}) {
    double k = kappa_detratio(half_circle(n)).value;
    values[std::to_string(n)] = k;
    t.add(k >= n / std::numbers::pi, "n=" + std::to_string(n));
  }
  double k4 = values["4"].get<double>();
  t.add(std::abs(k4 - std::sqrt(2.0)) <= 1e-9, "kappa(half_circle(4)) != sqrt(2)");
  return outcome("half_circle(n), n in {4,8,16,32}", "kappa >= n/pi; kappa(half_circle(4)) = sqrt(2) +- 1e-9", t,
                 {{"kappa", values}});
}

CheckOutcome kappa_complete_graph(std::uint64_t) {
  Matrix a = unsigned_incidence_complete(6);
  Kappa k = kappa_circuit(a);
  DeltaModularity dm = delta_modularity(a);
  Tally t;
  t.add(*k.value_sq == 4, "kappa != 2");
  t.add(dm.value == 4, "Delta != 4");
  return outcome("unsigned incidence matrix of K6", "kappa = 2 and Delta = 4", t,
                 {{"kappa_sq", rational_to_json(*k.value_sq)}, {"delta", dm.value.get_str()}});
}

CheckOutcome kappa_tu(std::uint64_t) {
  Tally t;
  for (const auto& rows : std::vector<std::vector<std::vector<long>>>{
           {{1, 0, 1}, {0, 1, 1}}, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}}) {
    t.add(*kappa_circuit(Matrix::from_integers(rows)).value_sq == 1, shape(Matrix::from_integers(rows)));
  }
  return outcome("two totally unimodular matrices", "kappa = 1", t);
}

CheckOutcome kappa_2d(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  double worst = 1e300;
  for (int i = 0; i < 200; ++i) {
    std::size_t l = 2 + rng() % 14;
    Matrix a = random_noncollinear_2xl(l, rng());
    Kappa k = kappa_circuit(a);
    mpq_class c(static_cast<long>(l), 4);
    worst = std::min(worst, k.value * 4 * std::numbers::pi / l);
    t.add(kappa_at_least_c_over_pi(*k.value_sq, c), "instance " + std::to_string(i) + " l=" + std::to_string(l));
  }
  return outcome("200 random 2 x l integer matrices, nonzero non-collinear columns, l <= 15",
                 "kappa >= l/(4 pi)", t, {{"min_kappa_4pi_over_l", worst}});
}

// ----------------------------------------------------------- inequalities

CheckOutcome kappa_le_delta(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    std::size_t d = 1 + rng() % 4;
    std::size_t n = d + 1 + rng() % 4;
    Matrix a = random_integer_matrix(d, n, -4, 4, rng());
    Kappa k = kappa_circuit(a);
    DeltaModularity dm = delta_modularity(a);
    mpq_class delta_sq(dm.value * dm.value);
    t.add(!k.has_circuit || *k.value_sq <= delta_sq, "instance " + std::to_string(i));
  }
  return outcome("200 random integer matrices, entries in [-4,4]", "kappa <= Delta", t);
}

CheckOutcome kappa_delta_product(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  for (int i = 0; t.total < 200; ++i) {
    std::size_t d = 2 + rng() % 2;
    std::size_t n = d + 1 + rng() % 3;
    Matrix a = random_unit_column_matrix(d, n, rng());
    if (rank(a) != d) continue;
    Kappa k = kappa_circuit(a);
    DeltaMeasure dl = delta_measure(a);
    t.add(*k.value_sq * *dl.delta_sq <= 1, "instance " + std::to_string(i));
  }
  return outcome("200 random full-row-rank matrices with exact unit-norm rational columns", "kappa^2 delta^2 <= 1", t);
}

CheckOutcome chibar_upper(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  for (int i = 0; i < 20; ++i) {
    std::size_t d = 2 + rng() % 2;
    std::size_t n = d + 1 + rng() % 3;
    Matrix a = random_integer_matrix(d, n, -3, 3, rng());
    if (rank(a) != d) continue;
    double c = chibar_sample(a, 200, rng());
    double k = kappa_circuit(a).value;
    t.add(c <= std::sqrt(static_cast<double>(n)) * k + 1e-6, "instance " + std::to_string(i));
  }
  return outcome("random full-row-rank integer matrices, 200 sampled diagonals each",
                 "chibar_sample <= sqrt(n) kappa + 1e-6", t);
}

CheckOutcome projection_monotone(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  for (int i = 0; i < 100; ++i) {
    std::size_t d = 1 + rng() % 3;
    std::size_t n = d + 2 + rng() % 3;
    Matrix a = random_rational_matrix(d, n, rng());
    IndexList j;
    for (std::size_t c = 0; c < n; ++c) {
      if (rng() % 2) j.push_back(c);
    }
    Kappa whole = kappa_circuit(a);
    Kappa proj = kappa_circuit(project_kernel(a, j));
    t.add(*proj.value_sq <= *whole.value_sq, "instance " + std::to_string(i));
  }
  return outcome("100 random (A, J) pairs", "kappa(pi_J(ker A)) <= kappa(ker A)", t);
}

// -------------------------------------------------------------- main-kappa

struct KappaInstance {
  std::string name;
  Matrix a;
  std::optional<PointConfig> points;
};

std::vector<KappaInstance> main_kappa_instances(std::uint64_t seed) {
  std::vector<KappaInstance> out;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 12; ++i) {
    std::size_t d = 3 + i % 3;
    std::size_t n = d + 4 + rng() % 5;
    PointConfig s = random_config(d, n, rng());
    out.push_back({"affine lift of random_config(d=" + std::to_string(d) + ",n=" + std::to_string(n) + ")",
                   from_affine(s).rep(), s});
  }
  out.push_back({"dowling(4,1)", dowling(4, 1), std::nullopt});
  out.push_back({"dowling(4,2)", dowling(4, 2), std::nullopt});
  return out;
}

CheckOutcome main_kappa_envelope(std::uint64_t seed) {
  Tally t;
  double worst = 0.0;
  for (const auto& inst : main_kappa_instances(seed)) {
    const Matrix& a = inst.a;
    mpq_class d4(static_cast<long>(a.rows() * a.rows() * a.rows() * a.rows()));
    Kappa k = kappa_circuit(a);
    worst = std::max(worst, a.cols() / (d4.get_d() * k.value));
    t.add(at_most_pi_c_kappa(mpq_class(static_cast<long>(a.cols())), d4, *k.value_sq), inst.name);
  }
  return outcome("exact matrices with d >= 4 rows and non-collinear columns (affine lifts, Dowling)",
                 "n <= pi d^4 kappa", t, {{"max_n_over_d4_kappa", worst}});
}

CheckOutcome main_kappa_line_chain(std::uint64_t seed) {
  Tally t;
  for (const auto& inst : main_kappa_instances(seed)) {
    if (!inst.points) continue;
    MinorChain chain = minor_chain_to_rank2(LinearMatroid(inst.a), false);
    Kappa k = kappa_circuit(inst.a);
    mpq_class c(static_cast<long>(chain.final.simple_size()), 4);
    t.add(chain.bound_holds && kappa_at_least_c_over_pi(*k.value_sq, c), inst.name);
  }
  return outcome("affine lifts of random configurations",
                 "kappa >= |rank-2 minor| / (4 pi) >= (prod f(i)) n / (4 pi)", t);
}

CheckOutcome main_kappa_complex(std::uint64_t) {
  Json ratios = Json::object();
  Tally t;
  for (std::size_t tt : {1u, 2u, 3u, 4u}) {
    Matrix a = dowling(4, tt);
    double k = kappa(a).value;
    double ratio = a.cols() / (std::pow(4.0, 4) * k * k);
    ratios["dowling(4," + std::to_string(tt) + ")"] = ratio;
    t.add(true, "");
  }
  return outcome("dowling(4,t), t = 1..4 (complex for t >= 3)", "n <= O(d^4 kappa^2): ratio reported only", t,
                 {{"n_over_d4_kappa_sq", ratios}});
}

CheckOutcome complex_rep(std::uint64_t seed) {
  Tally t;
  Json rows = Json::array();
  auto check = [&](const std::string& name, const LinearMatroid& m0) {
    LinearMatroid m = simplify(m0).matroid;
    std::size_t d = m.rank();
    LongestLine ll = longest_line_minor(m);
    std::size_t l = ll.length + 1;  // U_{2,l} is excluded
    mpz_class lhs = 4 * mpz_class(static_cast<unsigned long>(m.size()));
    mpz_class rhs = mpz_class(static_cast<unsigned long>(d * d * d * d)) * static_cast<unsigned long>(l);
    rows.push_back({{"instance", name}, {"n", m.size()}, {"d", d}, {"excluded_line", l}});
    t.add(lhs <= rhs, name);
  };
  for (std::size_t tt : {1u, 2u, 3u, 4u, 5u}) check("dowling(3," + std::to_string(tt) + ")", LinearMatroid(dowling(3, tt)));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 6; ++i) {
    std::size_t d = 2 + i % 3;
    PointConfig s = random_config(d, d + 6, rng());
    check("affine matroid of random_config(d=" + std::to_string(d) + ")", from_affine(s));
  }
  return outcome("simple rank-d matroids (Dowling geometries, affine matroids), d >= 3",
                 "n <= d^4 l / 4 when U_{2,l} is not a minor", t, {{"instances", rows}});
}

// ------------------------------------------------------- sylvester-gallai

CheckOutcome sg_maxlines(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  double worst = 1e300;
  auto configs = generated_configs(300, 2, 6, 9, rng);
  configs.push_back(grid(3));
  for (std::size_t i = 0; i < configs.size(); ++i) {
    MaxlinesReport r = check_maxlines_bounds(configs[i]);
    if (r.applicable && r.n > 0) worst = std::min(worst, static_cast<double>(r.observed.count) / r.n);
    t.add(r.pass(), "config " + std::to_string(i) + " d=" + std::to_string(configs[i].dim()));
  }
  return outcome("300 random full-dimensional configurations (d = 2..6) plus the 3x3 grid",
                 "maxlines >= floor(n/3)+1 and maxlines >= (1 - 4/(d+1)) n", t,
                 {{"min_maxlines_over_n", worst}});
}

CheckOutcome sg_grid(std::uint64_t) {
  PointConfig g = grid(3);
  LineSet ls = lines(g);
  MaxLines m = maxlines(ls);
  Tally t;
  t.add(m.count == 6, "maxlines != 6");
  t.add(ls.lines.size() == 20 && ls.special_count() == 8, "line counts");
  return outcome("3x3 grid", "maxlines = 6 with n = 9 (20 lines, 8 special)", t,
                 {{"maxlines", m.count}, {"lines", ls.lines.size()}, {"special", ls.special_count()}});
}

CheckOutcome sg_affine_matroid(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  for (const auto& s : generated_configs(30, 2, 4, 6, rng)) {
    LinearMatroid m = from_affine(s);
    LineSet ls = lines(s);
    for (std::size_t e = 0; e < s.size(); ++e) {
      std::size_t contracted = simplify(contract(m, e)).matroid.size();
      t.add(contracted == ls.point_to_lines[e].size(), "point " + std::to_string(e));
    }
  }
  return outcome("30 random configurations, every point", "|si(M/e)| = number of lines through e", t);
}

// -------------------------------------------------------------- minor-chain

CheckOutcome chain_bound(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  double worst = 1e300;
  auto configs = generated_configs(100, 2, 6, 8, rng);
  configs.push_back(grid(3));
  for (std::size_t i = 0; i < configs.size(); ++i) {
    MinorChain c = minor_chain_to_rank2(from_affine(configs[i]), false);
    worst = std::min(worst, c.final.size() / (c.product.get_d() * c.n));
    t.add(c.bound_holds, "config " + std::to_string(i));
  }
  return outcome("100 random configurations (d = 2..6) plus the 3x3 grid",
                 "|final rank-2 minor| >= ceil(prod_{i=2}^{d-1} f(i) n)", t,
                 {{"min_final_over_product_n", worst}});
}

CheckOutcome chain_dowling(std::uint64_t) {
  Tally t;
  Json obs = Json::object();
  for (std::size_t tt : {1u, 2u, 4u}) {
    LinearMatroid m(dowling(3, tt));
    LongestLine ll = longest_line_minor(m);
    obs["t=" + std::to_string(tt)] = {{"size", m.size()}, {"longest_line", ll.length}};
    t.add(m.size() == 3 + 3 * tt && ll.length == tt + 2, "t=" + std::to_string(tt));
  }
  return outcome("dowling(3,t), t in {1,2,4}", "3 + 3t elements and longest line t + 2", t, {{"observed", obs}});
}

CheckOutcome chain_ordinary_flats(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  for (int i = 0; i < 4; ++i) {
    std::size_t n = 12 + i;
    PointConfig s = random_config(8, n, rng());
    LinearMatroid m = from_affine(s);
    mpq_class eps = 2 * f_lower_bound(8) - 1;
    FlatReport r = find_flat_with_ordinary(m, 2, eps);
    t.add(r.pass, "n=" + std::to_string(n));
  }
  return outcome("rank-9 affine matroids of random configurations, k = 2, eps = 2 f(8) - 1",
                 ">= ceil(eps n) ordinary k-flats through the contracted flat", t);
}

// -------------------------------------------------------------- design-rank

CheckOutcome design_built(std::uint64_t seed) {
  Tally t;
  Json rows = Json::array();
  for (const auto& [name, s] : special_configs(seed)) {
    SpecialLineDesign des = build_special_line_design(s);
    DesignCertificate c = check_design(des.a);
    bool kernel = is_zero_matrix(des.a * affine_lift(s));
    DesignRankReport r = design_rank_check(des.a);
    rows.push_back({{"instance", name}, {"q", c.q}, {"k", c.k}, {"t", c.t}, {"rank", r.rank},
                    {"required", r.required.get_str()}});
    t.add(c.q <= 3 && c.t <= 6 && kernel && r.rank_pass && r.bound_above_old, name);
  }
  return outcome("designs built from the 3x3 grid and 10 random special configurations",
                 "q <= 3, t <= 6, A [1 V] = 0, rank >= ceil(n / (1 + t(q-1)/k))", t, {{"instances", rows}});
}

CheckOutcome design_fixed(std::uint64_t) {
  Tally t;
  DesignRankReport triples = design_rank_check(all_triples_matrix(5));
  t.add(triples.rank == 4 && triples.required == 3 && triples.rank_pass, "all-triples on [5]");
  DesignRankReport id = design_rank_check(Matrix::identity(FieldMode::kRational, 6));
  t.add(id.rank == 6 && id.required == 6 && id.rank_pass, "identity");
  return outcome("all-triples matrix on [5]; 6x6 identity", "rank 4 >= 3; rank 6 >= 6", t,
                 {{"all_triples_rank", triples.rank}, {"identity_rank", id.rank}});
}

CheckOutcome design_explicit_scaling(std::uint64_t seed) {
  Tally t;
  for (const auto& [name, s] : special_configs(seed)) {
    Matrix a = build_special_line_design(s).a;
    DesignCertificate c = check_design(a);
    std::vector<std::size_t> col_support(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) col_support[j] += !a(i, j).is_zero();
    bool ok = true;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      mpq_class row = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!a(i, j).is_zero()) row += mpq_class(1, static_cast<unsigned long>(col_support[j]));
      }
      ok = ok && row <= cap_of(c);
    }
    t.add(ok, name);
  }
  return outcome("built designs", "z_ij = 1/k_j has row sums <= q/k and unit column sums", t);
}

CheckOutcome design_trace_bound(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  for (int i = 0; i < 100; ++i) {
    std::size_t rows = 1 + rng() % 4;
    std::size_t n = 2 + rng() % 4;
    Matrix g = random_rational_matrix(rows, n, rng());
    Matrix m = g.transpose() * g;
    mpq_class tr = 0, fro = 0;
    for (std::size_t j = 0; j < n; ++j) tr += m(j, j).real_rational();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) fro += m(a, b).real_rational() * m(a, b).real_rational();
    bool ok = fro == 0 || ceil_rational(tr * tr / fro) <= static_cast<long>(rank(m));
    t.add(ok, "instance " + std::to_string(i));
  }
  return outcome("100 random rational Gram matrices M = G^T G", "rank(M) >= ceil(Tr[M]^2 / |M|_F^2)", t);
}

CheckOutcome design_scaled_inequalities(std::uint64_t seed) {
  Tally t;
  ScalingOptions opts;
  opts.eps = 1e-9;
  for (const auto& [name, s] : special_configs(seed)) {
    DesignRankReport r = design_rank_check(build_special_line_design(s).a, opts);
    t.add(r.scaled && r.trace_pass && r.offdiag_pass, name);
  }
  return outcome("scaled built designs, M = B^* B",
                 "rank >= Tr[M]^2/|M|_F^2 and off-diagonal mass <= t (1 - 1/q) alpha |B|_F^2", t);
}

// ------------------------------------------------------------------ scaling

bool scaled_within(const ScalingResult& r, double cap) {
  if (!r.converged || r.eps_achieved > 1e-6 || r.iterations > 100000) return false;
  for (double x : r.row_sq_norms)
    if (x > cap + 1e-6) return false;
  for (double x : r.col_sq_norms)
    if (std::abs(x - 1.0) > 1e-6) return false;
  return true;
}

CheckOutcome scaling_example(std::uint64_t) {
  ScalingOptions opts;
  opts.eps = 1e-6;
  ScalingResult r = sinkhorn_scale(Matrix::from_integers({{1, 1}, {0, 1}}), mpq_class(1), opts);
  Tally t;
  t.add(scaled_within(r, 1.0), "[[1,1],[0,1]]");
  return outcome("[[1,1],[0,1]] with row cap 1", "eps <= 1e-6 within 1e5 iterations", t,
                 {{"eps_achieved", r.eps_achieved}, {"iterations", r.iterations}});
}

CheckOutcome scaling_designs(std::uint64_t seed) {
  ScalingOptions opts;
  opts.eps = 1e-6;
  Tally t;
  std::size_t max_iter = 0;
  for (const auto& [name, s] : special_configs(seed)) {
    Matrix a = build_special_line_design(s).a;
    mpq_class cap = cap_of(check_design(a));
    ScalingResult r = sinkhorn_scale(a, cap, opts);
    max_iter = std::max(max_iter, r.iterations);
    t.add(scaled_within(r, cap.get_d()), name);
  }
  return outcome("built designs with row cap q/k",
                 "eps <= 1e-6 within 1e5 iterations; rows <= q/k + 1e-6; columns within 1e-6 of 1", t,
                 {{"max_iterations", max_iter}});
}

CheckOutcome scaling_transportation(std::uint64_t) {
  Tally t;
  std::vector<mpq_class> one{1, 1};
  auto sol = transportation_feasible(2, 2, support_edges(Matrix::from_integers({{1, 1}, {0, 1}})), one, one);
  t.add(sol.feasible, "support of [[1,1],[0,1]]");
  auto iso = transportation_feasible(2, 2, {{0, 0}, {1, 0}}, one, one);
  t.add(!iso.feasible, "isolated column");
  return outcome("support of [[1,1],[0,1]]; a support with an isolated column",
                 "feasible with r = c = 1; infeasible when a column has no edge", t);
}

// ------------------------------------------------------------------- graver

std::vector<Matrix> graver_instances(std::uint64_t seed) {
  std::vector<Matrix> out;
  for (const auto& rows : std::vector<std::vector<std::vector<long>>>{
           {{1, 1, 1}}, {{1, 2}}, {{2, 3}}, {{1, 2, 3}}, {{1, 2, 3, 4}}, {{1, 0, 1}, {0, 1, 1}},
           {{1, 0, 2}, {0, 1, 1}}, {{1, 1, 1, 1}, {0, 1, 2, 3}}}) {
    out.push_back(Matrix::from_integers(rows));
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 20; ++i) {
    std::size_t d = 1 + i % 2;
    std::size_t n = d + 1 + i % 3;
    out.push_back(random_integer_matrix(d, n, -3, 3, rng()));
  }
  return out;
}

// Conformally minimal kernel vectors in [-bound, bound]^n.
std::vector<IntVector> box_minimal(const Matrix& a, std::int64_t bound) {
  const std::size_t n = a.cols();
  std::vector<IntVector> kernel;
  IntVector x(n, -bound);
  while (true) {
    bool nonzero = false, in_kernel = true;
    for (auto v : x) nonzero = nonzero || v != 0;
    for (std::size_t i = 0; i < a.rows() && in_kernel; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a(i, j).real_rational().get_num().get_si() * x[j];
      in_kernel = s == 0;
    }
    if (nonzero && in_kernel) kernel.push_back(x);
    std::size_t j = n;
    while (j > 0 && x[j - 1] == bound) x[--j] = -bound;
    if (j == 0) break;
    ++x[j - 1];
  }
  std::vector<IntVector> out;
  for (const auto& v : kernel) {
    bool minimal = std::none_of(kernel.begin(), kernel.end(),
                                [&](const IntVector& w) { return w != v && conformal_leq(w, v); });
    if (minimal) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CheckOutcome graver_oracle(std::uint64_t seed) {
  Tally t;
  std::size_t skipped = 0;
  for (const auto& a : graver_instances(seed)) {
    GraverBasis gb = graver_basis(a);
    double points = std::pow(2.0 * (gb.g_inf + 1) + 1, static_cast<double>(a.cols()));
    if (points > 3e6) {
      ++skipped;
      continue;
    }
    t.add(gb.elements == box_minimal(a, gb.g_inf + 1), shape(a));
  }
  return outcome("8 fixed and 20 random guarded integer matrices",
                 "completion output equals the box oracle on [-g-1, g+1]^n", t, {{"skipped_large_box", skipped}});
}

CheckOutcome graver_kappa(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  for (int i = 0; i < 100; ++i) {
    std::size_t d = 1 + i % 3;
    std::size_t n = d + 1 + i % 2;
    t.add(kappa_vs_graver_check(random_integer_matrix(d, n, -4, 4, rng())).pass, "instance " + std::to_string(i));
  }
  return outcome("100 random small integer matrices", "kappa <= g_inf", t);
}

CheckOutcome graver_collinear(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-12, 12);
  Tally t;
  for (int i = 0; i < 50; ++i) {
    std::size_t k = 2 + i % 4;
    std::set<long> vals;
    while (vals.size() < k) {
      long v = entry(rng);
      if (v != 0) vals.insert(v);
    }
    std::vector<long> z(vals.begin(), vals.end());
    std::shuffle(z.begin(), z.end(), rng);
    t.add(collinear_block_check(z).pass, "block " + std::to_string(i));
  }
  return outcome("50 random blocks of distinct nonzero integers, k <= 5", "k <= 2 g_inf^2 + 2", t);
}

std::vector<IPInstance> proximity_instances(std::uint64_t seed) {
  std::vector<IPInstance> out;
  IPInstance w;
  w.a = Matrix::from_integers({{2, 3}});
  w.b = {4};
  w.u = {2, 2};
  w.c = {1, 0};
  out.push_back(w);
  std::mt19937_64 rng(seed);
  for (int i = 0; out.size() < 50; ++i) {
    out.push_back(random_ip_instance(1 + i % 2, 3 + i % 3, rng(), i % 2 == 0));
  }
  return out;
}

CheckOutcome graver_proximity(std::uint64_t seed) {
  Tally t;
  Json witness;
  for (const auto& ip : proximity_instances(seed)) {
    ProximityReport r = proximity_experiment(ip);
    if (witness.is_null()) {
      witness = {{"proximity", rational_to_json(r.proximity)}, {"hemmecke_bound", r.hemmecke_bound}};
    }
    t.add(r.pass(), shape(ip.a));
  }
  return outcome("A = [2 3] witness plus 49 random bounded IPs (half with duplicated columns)",
                 "|x_LP - x_IP| <= |x_LP' - x_IP'| <= r g_inf(A')", t, {{"witness", witness}});
}

CheckOutcome graver_envelope(std::uint64_t seed) {
  double worst = 0.0;
  double worst_cols = 0.0;
  Tally t;
  for (const auto& ip : proximity_instances(seed)) {
    ProximityReport r = proximity_experiment(ip);
    if (r.envelope > 0) worst = std::max(worst, r.proximity.get_d() / r.envelope.get_d());
    if (r.distinct_column_envelope > 0) {
      worst_cols = std::max(worst_cols, static_cast<double>(r.r) / r.distinct_column_envelope.get_d());
    }
    t.add(true, "");
  }
  return outcome("the proximity instances", "O(d^4 g_inf^4) and O(d^4 g_inf^3): ratios reported only", t,
                 {{"max_proximity_over_d4_g4", worst}, {"max_r_over_d4_g3", worst_cols}});
}

std::vector<SuiteSpec> build_registry() {
  std::vector<SuiteSpec> s;
  s.push_back({"kappa-oracle", "circuit and determinant-ratio forms of kappa agree",
               {{"kappa.circuit_vs_detratio", "kappa as the largest circuit entry ratio equals the largest basis-swap determinant ratio", true, kappa_oracle},
                {"kappa.gaussian_circuit_vs_detratio", "the same equivalence over the Gaussian rationals", true, kappa_gaussian_oracle}}});
  s.push_back({"kappa-examples", "worked examples of kappa and Delta",
               {{"kappa.half_circle", "half-circle matrices have kappa = 1/sin(pi/n) >= n/pi", true, kappa_half_circle},
                {"kappa.complete_graph", "the unsigned incidence matrix of K6 has kappa = 2 and Delta = 4", true, kappa_complete_graph},
                {"kappa.totally_unimodular", "totally unimodular matrices have kappa = 1", true, kappa_tu}}});
  s.push_back({"kappa-2d", "two-row lower bound",
               {{"kappa.two_row_bound", "a 2 x l matrix with nonzero non-collinear columns has kappa >= l/(4 pi)", true, kappa_2d}}});
  s.push_back({"inequalities", "relations between condition measures",
               {{"kappa.le_delta_modularity", "kappa <= Delta for integer matrices", true, kappa_le_delta},
                {"kappa.delta_product", "kappa <= 1/delta for unit-norm columns", true, kappa_delta_product},
                {"chibar.upper", "chibar <= sqrt(n) kappa", true, chibar_upper},
                {"kappa.projection_monotone", "kappa of a coordinate projection of a subspace is at most kappa of the subspace", true, projection_monotone}}});
  s.push_back({"main-kappa", "column bound in terms of kappa",
               {{"main_kappa.envelope", "a real d x n matrix, d >= 4, with non-collinear columns has n <= pi d^4 kappa", true, main_kappa_envelope},
                {"main_kappa.line_minor_chain", "kappa >= |S'|/(4 pi) for the rank-2 minor S' of the contraction chain", true, main_kappa_line_chain},
                {"main_kappa.complex", "complex matrices with non-collinear columns have n <= O(d^4 kappa^2)", false, main_kappa_complex}}});
  s.push_back({"complex-rep", "excluded-line bound",
               {{"complex_rep.line_bound", "a simple rank-d complex-representable matroid without a U_{2,l} minor has at most d^4 l / 4 elements (d >= 3)", true, complex_rep}}});
  s.push_back({"sylvester-gallai", "lines through a point",
               {{"sg.maxlines", "maxlines(S) >= floor(|S|/3)+1 in the plane and >= (1 - 4/(d+1))|S| in dimension d", true, sg_maxlines},
                {"sg.grid", "the 3x3 grid has a point on 6 lines", true, sg_grid},
                {"sg.affine_matroid", "lines through e correspond to elements of si(M/e) for M the matroid of [1; V]", true, sg_affine_matroid}}});
  s.push_back({"minor-chain", "contraction chains and line minors",
               {{"chain.bound", "a simple rank-d affine matroid has a rank-2 minor with >= n prod_{i=2}^{d-1} f(i) elements", true, chain_bound},
                {"chain.dowling", "dowling(3,t) has 3 + 3t elements and a longest line minor of length t + 2", true, chain_dowling},
                {"chain.ordinary_flats", "an element with >= eps n ordinary k-flats through the contracted flat exists", true, chain_ordinary_flats}}});
  s.push_back({"design-rank", "design matrices and their rank",
               {{"design.built", "special-line configurations give (3, 3k, 6)-designs with A [1 V] = 0 and rank >= n/(1 + t(q-1)/k)", true, design_built},
                {"design.fixed", "rank >= n/(1 + t(q-1)/k) on the all-triples matrix and the identity", true, design_fixed},
                {"design.explicit_scaling", "z_ij = 1/k_j solves the transportation problem for (<= q/k, 1)-scaling", true, design_explicit_scaling},
                {"design.trace_bound", "rank(M) >= Tr[M]^2 / |M|_F^2 for PSD M", true, design_trace_bound},
                {"design.scaled_inequalities", "trace and off-diagonal inequalities hold on scaled designs", true, design_scaled_inequalities}}});
  s.push_back({"scaling", "asymptotic matrix scaling",
               {{"scaling.example", "[[1,1],[0,1]] is asymptotically (1,1)-scalable", true, scaling_example},
                {"scaling.designs", "(q,k,t)-designs are asymptotically (<= q/k, 1)-scalable", true, scaling_designs},
                {"scaling.transportation", "scalability is decided by a transportation problem on the support", true, scaling_transportation}}});
  s.push_back({"graver", "Graver bases and IP proximity",
               {{"graver.oracle", "completion returns exactly the conformally minimal kernel vectors", true, graver_oracle},
                {"graver.kappa_le_ginf", "kappa <= g_inf", true, graver_kappa},
                {"graver.collinear_block", "a block of k distinct collinear columns has k <= 2 g_inf^2 + 2", true, graver_collinear},
                {"graver.proximity_chain", "|x_LP - x_IP| <= |x_LP' - x_IP'| <= r g_inf(A')", true, graver_proximity},
                {"graver.proximity_envelope", "|x_IP - x_LP| <= O(d^4 g_inf^4) and n <= O(d^4 g_inf^3)", false, graver_envelope}}});
  return s;
}

}  // namespace

bool kappa_at_least_c_over_pi(const mpq_class& kappa_sq, const mpq_class& c) {
  mpq_class bound = c / kPiLower;
  return kappa_sq >= bound * bound;
}

bool at_most_pi_c_kappa(const mpq_class& x, const mpq_class& c, const mpq_class& kappa_sq) {
  mpq_class scale = kPiLower * c;
  return x * x <= scale * scale * kappa_sq;
}

const std::vector<SuiteSpec>& registered_suites() {
  static const std::vector<SuiteSpec> registry = build_registry();
  return registry;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : registered_suites()) out.push_back(s.name);
  return out;
}

std::vector<CheckResult> verify_suites(const std::vector<std::string>& names, std::uint64_t seed) {
  std::vector<const SuiteSpec*> chosen;
  for (const auto& name : names) {
    if (name == "all") {
      for (const auto& s : registered_suites()) chosen.push_back(&s);
      continue;
    }
    auto it = std::find_if(registered_suites().begin(), registered_suites().end(),
                           [&](const SuiteSpec& s) { return s.name == name; });
    if (it == registered_suites().end()) throw PreconditionError("unknown suite: " + name);
    chosen.push_back(&*it);
  }
  std::vector<std::future<CheckResult>> futures;
  for (const SuiteSpec* suite : chosen) {
    for (const CheckSpec& check : suite->checks) {
      futures.push_back(std::async(std::launch::async, [suite, &check, seed] {
        CheckResult r;
        r.suite = suite->name;
        r.name = check.name;
        r.paper_statement = check.statement;
        r.theorem_backed = check.theorem_backed;
        auto start = std::chrono::steady_clock::now();
        try {
          CheckOutcome o = check.run(derive_seed(seed, check.name));
          r.instance_descriptor = std::move(o.instance_descriptor);
          r.claimed_bound = std::move(o.claimed_bound);
          r.observed = std::move(o.observed);
          r.pass = o.pass;
        } catch (const std::exception& e) {
          r.observed = {{"error", e.what()}};
          r.pass = false;
        }
        r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        return r;
      }));
    }
  }
  std::vector<CheckResult> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

Json report_to_json(const std::vector<CheckResult>& results, std::uint64_t seed,
                    const std::vector<std::string>& suites) {
  Json out;
  out["report_version"] = 1;
  out["seed"] = seed;
  out["suites"] = suites;
  Json checks = Json::array();
  for (const auto& r : results) {
    Json c;
    c["suite"] = r.suite;
    c["name"] = r.name;
    c["paper_statement"] = r.paper_statement;
    c["instance_descriptor"] = r.instance_descriptor;
    c["claimed_bound"] = r.claimed_bound;
    c["observed"] = r.observed;
    c["pass"] = r.pass;
    c["theorem_backed"] = r.theorem_backed;
    c["runtime_ms"] = r.runtime_ms;
    checks.push_back(std::move(c));
  }
  out["checks"] = std::move(checks);
  out["all_pass"] = !any_theorem_failure(results);
  return out;
}

bool any_theorem_failure(const std::vector<CheckResult>& results) {
  return std::any_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.theorem_backed && !r.pass; });
}

}  // namespace kbound
