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

#include "kbound/json_io.hpp"

#include <fstream>
#include <iostream>

namespace kbound {

namespace {

[[noreturn]] void bad(const std::string& what) { throw PreconditionError("invalid JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

double tol_from(const Json& j) {
  if (!j.contains("tol") || j.at("tol").is_null()) return -1.0;
  double t = j.at("tol").get<double>();
  return t > 0 ? t : -1.0;
}

Json index_list(const IndexList& idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(i);
  return out;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Json rationals(const std::vector<mpq_class>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_to_json(q));
  return out;
}

Json integers(const std::vector<mpz_class>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(z.get_str());
  return out;
}

Json doubles(const std::vector<double>& v) { return Json(v); }

}  // namespace

Json rational_to_json(const mpq_class& q) { return rational_to_string(q); }

mpq_class rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  bad("expected a rational string, got " + j.dump());
}

mpz_class integer_from_json(const Json& j) {
  mpq_class q = rational_from_json(j);
  if (q.get_den() != 1) bad("expected an integer, got " + j.dump());
  return q.get_num();
}

Json scalar_to_json(const Scalar& s) {
  switch (s.mode()) {
    case FieldMode::kRational:
      return rational_to_json(s.as_rational());
    case FieldMode::kGaussianRational:
      return Json::array({rational_to_json(s.as_gaussian().re), rational_to_json(s.as_gaussian().im)});
    case FieldMode::kComplexFloat:
      return Json::array({s.to_complex().real(), s.to_complex().imag()});
  }
  return nullptr;
}

Scalar scalar_from_json(const Json& j, FieldMode mode) {
  switch (mode) {
    case FieldMode::kRational:
      return Scalar::rational(rational_from_json(j));
    case FieldMode::kGaussianRational:
      if (j.is_array()) {
        if (j.size() != 2) bad("gaussian entry needs [re, im]");
        return Scalar::gaussian(rational_from_json(j[0]), rational_from_json(j[1]));
      }
      return Scalar::gaussian(rational_from_json(j), mpq_class(0));
    case FieldMode::kComplexFloat:
      if (j.is_number()) return Scalar::complex({j.get<double>(), 0.0});
      if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        bad("complex_float entry needs [re, im], got " + j.dump());
      }
      return Scalar::complex({j[0].get<double>(), j[1].get<double>()});
  }
  bad("unknown field");
}

Json matrix_to_json(const Matrix& m) {
  Json out;
  out["field"] = std::string(field_mode_name(m.mode()));
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["tol"] = m.exact() ? 0.0 : m.tol();
  Json data = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) data.push_back(vector_to_json(m.row(i)));
  out["data"] = std::move(data);
  return out;
}

Matrix matrix_from_json(const Json& j) {
  FieldMode mode = parse_field_mode(field(j, "field").get<std::string>());
  const Json& data = field(j, "data");
  if (!data.is_array()) bad("'data' must be an array of rows");
  std::size_t rows = j.contains("rows") ? j.at("rows").get<std::size_t>() : data.size();
  if (data.size() != rows) bad("'rows' does not match 'data'");
  std::size_t cols = j.contains("cols") ? j.at("cols").get<std::size_t>()
                                        : (rows > 0 ? data[0].size() : 0);
  double tol = is_exact(mode) ? -1.0 : tol_from(j);
  Matrix m(mode, rows, cols, tol);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!data[i].is_array() || data[i].size() != cols) bad("row " + std::to_string(i) + " has wrong length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(data[i][k], mode);
  }
  return m;
}

PointConfig points_from_json(const Json& j) {
  FieldMode mode = parse_field_mode(field(j, "field").get<std::string>());
  const Json& pts = field(j, "points");
  if (!pts.is_array()) bad("'points' must be an array");
  std::size_t dim = j.contains("dim") ? j.at("dim").get<std::size_t>() : (pts.empty() ? 0 : pts[0].size());
  std::vector<Vector> points;
  for (const auto& p : pts) {
    if (!p.is_array()) bad("each point must be an array");
    Vector v;
    for (const auto& x : p) v.push_back(scalar_from_json(x, mode));
    points.push_back(std::move(v));
  }
  return PointConfig(mode, dim, std::move(points), is_exact(mode) ? -1.0 : tol_from(j));
}

Json points_to_json(const PointConfig& s) {
  Json out;
  out["field"] = std::string(field_mode_name(s.mode()));
  out["dim"] = s.dim();
  Json pts = Json::array();
  for (const auto& p : s.points()) pts.push_back(vector_to_json(p));
  out["points"] = std::move(pts);
  out["tol"] = s.exact() ? 0.0 : s.tol();
  return out;
}

Json matroid_to_json(const LinearMatroid& m) {
  Json out;
  out["rep"] = matrix_to_json(m.rep());
  out["ground"] = index_list(m.ground());
  return out;
}

LinearMatroid matroid_from_json(const Json& j) {
  if (j.is_object() && j.contains("rep")) {
    IndexList ground;
    if (j.contains("ground")) ground = j.at("ground").get<IndexList>();
    return LinearMatroid(matrix_from_json(j.at("rep")), std::move(ground));
  }
  return LinearMatroid(matrix_from_json(j));
}

Json ip_to_json(const IPInstance& ip) {
  Json out;
  out["A"] = matrix_to_json(ip.a);
  out["b"] = integers(ip.b);
  out["u"] = integers(ip.u);
  out["c"] = rationals(ip.c);
  return out;
}

IPInstance ip_from_json(const Json& j) {
  IPInstance ip;
  const Json& a = field(j, "A");
  if (a.is_object()) {
    ip.a = matrix_from_json(a);
  } else if (a.is_array()) {
    std::vector<Vector> rows;
    for (const auto& r : a) {
      Vector v;
      for (const auto& x : r) v.push_back(Scalar::rational(mpq_class(integer_from_json(x))));
      rows.push_back(std::move(v));
    }
    ip.a = Matrix::from_rows(FieldMode::kRational, rows);
  } else {
    bad("'A' must be a matrix document or an array of rows");
  }
  for (const auto& x : field(j, "b")) ip.b.push_back(integer_from_json(x));
  for (const auto& x : field(j, "u")) ip.u.push_back(integer_from_json(x));
  for (const auto& x : field(j, "c")) ip.c.push_back(rational_from_json(x));
  ip.validate();
  return ip;
}

Json read_json_file(const std::string& path) {
  if (path == "-") {
    try {
      return Json::parse(std::cin);
    } catch (const nlohmann::json::exception& e) {
      throw PreconditionError(std::string("stdin: ") + e.what());
    }
  }
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(path + ": " + e.what());
  }
}

void write_json(const Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << j.dump(2) << "\n";
}

Json to_json(const Circuit& c) {
  Json out;
  out["support"] = index_list(c.support);
  out["coeffs"] = vector_to_json(c.coeffs);
  return out;
}

Json to_json(const Kappa& k) {
  Json out;
  out["kappa"] = k.value;
  out["kappa_sq"] = k.value_sq ? Json(rational_to_json(*k.value_sq)) : Json(nullptr);
  out["has_circuit"] = k.has_circuit;
  if (k.circuit) {
    out["circuit"] = to_json(*k.circuit);
    out["ratio_num"] = k.ratio_num;
    out["ratio_den"] = k.ratio_den;
  }
  if (!k.basis.empty()) {
    out["basis"] = index_list(k.basis);
    out["swap_out"] = k.swap_out;
    out["swap_in"] = k.swap_in;
  }
  return out;
}

Json to_json(const DeltaMeasure& d) {
  Json out;
  out["delta_sq"] = d.delta_sq ? Json(rational_to_json(*d.delta_sq)) : Json(nullptr);
  out["delta_sq_float"] = d.delta_sq_float;
  out["basis"] = index_list(d.basis);
  out["column"] = d.column;
  return out;
}

Json to_json(const DeltaModularity& d) {
  Json out;
  out["delta"] = d.value.get_str();
  out["rank"] = d.rank;
  out["rows"] = index_list(d.rows);
  out["cols"] = index_list(d.cols);
  return out;
}

Json to_json(const LineSet& ls, const PointConfig& s) {
  Json out;
  out["n"] = s.size();
  out["lines"] = ls.lines.size();
  out["ordinary"] = ls.ordinary_count();
  out["special"] = ls.special_count();
  Json arr = Json::array();
  for (const auto& l : ls.lines) arr.push_back(index_list(l.members));
  out["members"] = std::move(arr);
  Json per = Json::array();
  for (const auto& st : classify(s, ls)) {
    per.push_back({{"lines", st.lines}, {"special_lines", st.special_lines}, {"k", st.k}});
  }
  out["points"] = std::move(per);
  return out;
}

Json to_json(const MaxLines& m) { return {{"point", m.point}, {"count", m.count}}; }

Json to_json(const MaxlinesReport& r) {
  Json out;
  out["applicable"] = r.applicable;
  if (!r.note.empty()) out["note"] = r.note;
  out["n"] = r.n;
  out["d"] = r.d;
  out["maxlines"] = to_json(r.observed);
  out["planar_bound"] = r.planar_bound.get_str();
  out["improved_bound"] = rational_to_json(r.improved_bound);
  out["planar_pass"] = r.planar_pass;
  out["improved_pass"] = r.improved_pass;
  out["pass"] = r.pass();
  return out;
}

Json to_json(const MinorChain& c) {
  Json out;
  out["n"] = c.n;
  out["start_rank"] = c.start_rank;
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back({{"element", s.element}, {"simple_size", s.simple_size}});
  out["steps"] = std::move(steps);
  out["final_size"] = c.final.size();
  out["final"] = matroid_to_json(c.final);
  out["product"] = rational_to_json(c.product);
  out["size_bound"] = c.size_bound.get_str();
  out["pass"] = c.bound_holds;
  return out;
}

Json to_json(const LongestLine& l) {
  return {{"length", l.length}, {"contracted", index_list(l.contracted)}};
}

Json to_json(const FlatReport& r) {
  Json out;
  out["k"] = r.flats.k;
  out["contracted"] = index_list(r.flats.contracted);
  out["flat"] = index_list(r.flats.flat);
  out["ordinary_points"] = index_list(r.flats.ordinary_points);
  out["ordinary_count"] = r.flats.ordinary_points.size();
  out["epsilon"] = rational_to_json(r.epsilon);
  out["parameter"] = rational_to_json(r.parameter);
  out["required"] = r.required.get_str();
  out["pass"] = r.pass;
  return out;
}

Json to_json(const DesignCertificate& c) {
  Json out;
  out["m"] = c.m;
  out["n"] = c.n;
  out["q"] = c.q;
  out["k"] = c.k;
  out["t"] = c.t;
  out["zero_column"] = c.zero_column;
  out["valid"] = c.valid();
  out["bound"] = rational_to_json(c.bound);
  out["old_bound"] = rational_to_json(c.old_bound);
  return out;
}

Json to_json(const ScalingResult& r) {
  Json out;
  out["converged"] = r.converged;
  out["iterations"] = r.iterations;
  out["eps_achieved"] = r.eps_achieved;
  out["rho"] = doubles(r.rho);
  out["gamma"] = doubles(r.gamma);
  out["row_sq_norms"] = doubles(r.row_sq_norms);
  out["col_sq_norms"] = doubles(r.col_sq_norms);
  out["B"] = matrix_to_json(r.b);
  return out;
}

Json to_json(const DesignRankReport& r) {
  Json out;
  out["certificate"] = to_json(r.cert);
  out["rank"] = r.rank;
  out["required"] = r.required.get_str();
  out["rank_pass"] = r.rank_pass;
  out["bound_above_old"] = r.bound_above_old;
  out["scaled"] = r.scaled;
  if (r.scaled) {
    out["scaling_eps"] = r.scaling.eps_achieved;
    out["scaling_iterations"] = r.scaling.iterations;
    out["trace"] = r.trace;
    out["frob_sq"] = r.frob_sq;
    out["trace_bound"] = r.trace_bound;
    out["trace_pass"] = r.trace_pass;
    out["offdiag"] = r.offdiag;
    out["offdiag_bound"] = r.offdiag_bound;
    out["offdiag_pass"] = r.offdiag_pass;
  }
  out["pass"] = r.pass();
  return out;
}

Json to_json(const GraverBasis& g) {
  Json out;
  out["size"] = g.elements.size();
  out["g_inf"] = g.g_inf;
  out["elements"] = g.elements;
  out["generators"] = g.generators;
  out["reductions"] = g.reductions;
  return out;
}

Json to_json(const KappaGraverReport& r) {
  return {{"kappa", r.kappa}, {"kappa_sq", rational_to_json(r.kappa_sq)}, {"g_inf", r.g_inf}, {"pass", r.pass}};
}

Json to_json(const CollinearBlockReport& r) {
  Json out;
  out["k"] = r.k;
  out["deduplicated"] = r.deduplicated;
  out["pair_max"] = r.pair_max;
  out["g_inf"] = r.g_inf;
  out["bound"] = r.bound;
  out["pass"] = r.pass;
  return out;
}

Json to_json(const SeparableReduction& r) {
  Json out;
  out["r"] = r.r();
  Json groups = Json::array();
  for (const auto& g : r.groups) groups.push_back(index_list(g));
  out["groups"] = std::move(groups);
  out["A_prime"] = matrix_to_json(r.a_prime);
  out["u_prime"] = integers(r.u_prime);
  Json s = Json::array();
  for (const auto& b : r.breakpoints) s.push_back(integers(b));
  out["breakpoints"] = std::move(s);
  Json c = Json::array();
  for (const auto& v : r.sorted_costs) c.push_back(rationals(v));
  out["sorted_costs"] = std::move(c);
  return out;
}

Json to_json(const LPSolution& s) {
  return {{"x", rationals(s.x)}, {"value", rational_to_json(s.value)}, {"vertices_checked", s.vertices_checked}};
}

Json to_json(const IPSolution& s) {
  return {{"x", integers(s.x)}, {"distance", rational_to_json(s.distance)}, {"points_checked", s.points_checked}};
}

Json to_json(const ProximityReport& r) {
  Json out;
  out["d"] = r.d;
  out["n"] = r.n;
  out["r"] = r.r;
  out["x_lp_prime"] = rationals(r.x_lp_prime);
  out["x_ip_prime"] = rationals(r.x_ip_prime);
  out["x_lp"] = rationals(r.x_lp);
  out["x_ip"] = rationals(r.x_ip);
  out["g_x_ip_prime"] = rationals(r.g_x_ip_prime);
  out["lp_value"] = rational_to_json(r.lp_value);
  out["proximity"] = rational_to_json(r.proximity);
  out["g_gap"] = rational_to_json(r.g_gap);
  out["prime_gap"] = rational_to_json(r.prime_gap);
  out["g_inf_A"] = r.g_inf_a;
  out["g_inf_A_prime"] = r.g_inf_a_prime;
  out["hemmecke_bound"] = r.hemmecke_bound;
  out["envelope_d4_g4"] = r.envelope.get_str();
  out["distinct_column_envelope_d4_g3"] = r.distinct_column_envelope.get_str();
  out["witness"] = {{"index", r.witness},
                    {"j", r.witness_j},
                    {"j_hi", r.witness_j_hi},
                    {"j_lo", r.witness_j_lo},
                    {"case", r.witness_case}};
  out["lp_value_matches"] = r.lp_value_matches;
  out["gmap_monotone"] = r.gmap_monotone;
  out["chain_pass"] = r.chain_pass;
  out["hemmecke_pass"] = r.hemmecke_pass;
  out["pass"] = r.pass();
  return out;
}

}  // namespace kbound
