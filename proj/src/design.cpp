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

#include "kbound/design.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace kbound {

namespace {

std::vector<std::vector<bool>> support_pattern(const Matrix& a) {
  std::vector<std::vector<bool>> s(a.rows(), std::vector<bool>(a.cols(), false));
  const double scale = a.exact() ? 0.0 : a.tol() * a.max_magnitude();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      s[i][j] = a.exact() ? !a(i, j).is_zero() : a(i, j).magnitude() > scale;
    }
  }
  return s;
}

double logsumexp(const std::vector<double>& v) {
  double hi = -std::numeric_limits<double>::infinity();
  for (double x : v) hi = std::max(hi, x);
  if (!std::isfinite(hi)) return hi;
  double acc = 0.0;
  for (double x : v) acc += std::exp(x - hi);
  return hi + std::log(acc);
}

}  // namespace

DesignCertificate check_design(const Matrix& a) {
  DesignCertificate c;
  c.m = a.rows();
  c.n = a.cols();
  auto s = support_pattern(a);
  for (std::size_t i = 0; i < c.m; ++i) {
    c.q = std::max<std::size_t>(c.q, std::count(s[i].begin(), s[i].end(), true));
  }
  c.k = c.m;
  for (std::size_t j = 0; j < c.n; ++j) {
    std::size_t col = 0;
    for (std::size_t i = 0; i < c.m; ++i) col += s[i][j];
    c.k = std::min(c.k, col);
    if (col == 0) c.zero_column = true;
    for (std::size_t j2 = j + 1; j2 < c.n; ++j2) {
      std::size_t both = 0;
      for (std::size_t i = 0; i < c.m; ++i) both += s[i][j] && s[i][j2];
      c.t = std::max(c.t, both);
    }
  }
  if (c.n == 0) c.k = 0;
  if (c.valid()) {
    mpq_class n(static_cast<unsigned long>(c.n)), q(static_cast<unsigned long>(c.q)),
        k(static_cast<unsigned long>(c.k)), t(static_cast<unsigned long>(c.t));
    c.bound = n / (1 + t * (q - 1) / k);
    c.old_bound = n - n * t * q * (q - 1) / k;
  }
  return c;
}

Matrix affine_lift(const PointConfig& s) {
  Matrix lift(s.mode(), s.size(), s.dim() + 1, s.exact() ? -1.0 : s.tol());
  for (std::size_t i = 0; i < s.size(); ++i) {
    lift(i, 0) = Scalar::one(s.mode());
    for (std::size_t c = 0; c < s.dim(); ++c) lift(i, c + 1) = s.point(i)[c];
  }
  return lift;
}

SpecialLineDesign build_special_line_design(const PointConfig& s) {
  LineSet ls = lines(s);
  auto stats = classify(s, ls);
  SpecialLineDesign out;
  out.min_k = std::numeric_limits<std::size_t>::max();
  for (const auto& st : stats) out.min_k = std::min(out.min_k, st.k);
  if (s.size() == 0 || out.min_k == 0) throw Error("no special structure");
  const double tol = s.exact() ? -1.0 : s.tol();

  std::vector<Vector> rows;
  for (const Line& line : ls.lines) {
    if (line.ordinary()) continue;
    const std::size_t sz = line.members.size();
    if (sz % 2 == 0) out.all_lines_odd = false;
    for (std::size_t i = 0; i < sz; ++i) {
      for (std::size_t j = 0; j < sz; ++j) {
        if (i == j) continue;
        // Odd lines: the idempotent symmetric Latin square (i + j) / 2 mod s,
        // which never collides with i or j. Even lines: (i + j) mod s.
        std::size_t l = sz % 2 == 1 ? ((i + j) * ((sz + 1) / 2)) % sz : (i + j) % sz;
        if (l == i || l == j) continue;
        IndexList triple = {line.members[i], line.members[j], line.members[l]};
        std::sort(triple.begin(), triple.end());
        Matrix dep(s.mode(), s.dim() + 1, 3, tol);
        for (std::size_t c = 0; c < 3; ++c) {
          dep(0, c) = Scalar::one(s.mode());
          for (std::size_t r = 0; r < s.dim(); ++r) dep(r + 1, c) = s.point(triple[c])[r];
        }
        KernelBasis kb = kernel_basis(dep);
        if (kb.vectors.size() != 1) throw Error("collinear triple has no unique affine dependency");
        const Vector& v = kb.vectors[0];
        Vector row(s.size(), Scalar::zero(s.mode()));
        for (std::size_t c = 0; c < 3; ++c) {
          bool zero = s.exact() ? v[c].is_zero() : v[c].magnitude() <= s.tol();
          if (zero) throw Error("degenerate affine dependency on a special line");
          row[triple[c]] = v[c];
        }
        rows.push_back(std::move(row));
      }
    }
  }
  out.a = Matrix::from_rows(s.mode(), rows, tol);
  Matrix residual = out.a * affine_lift(s);
  const double scale = s.exact() ? 0.0 : s.tol() * std::max(1.0, affine_lift(s).max_magnitude());
  for (std::size_t i = 0; i < residual.rows(); ++i) {
    for (std::size_t j = 0; j < residual.cols(); ++j) {
      bool zero = s.exact() ? residual(i, j).is_zero() : residual(i, j).magnitude() <= 3 * scale;
      if (!zero) throw Error("built design does not annihilate [1 V]");
    }
  }
  return out;
}

ScalingResult sinkhorn_scale(const Matrix& a, const mpq_class& row_cap, const ScalingOptions& opts) {
  if (row_cap <= 0) throw PreconditionError("row cap must be positive");
  const std::size_t m = a.rows(), n = a.cols();
  auto s = support_pattern(a);
  for (std::size_t j = 0; j < n; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < m; ++i) any = any || s[i][j];
    if (!any) throw PreconditionError("cannot scale a zero column");
  }
  const double cap = row_cap.get_d();
  const double log_cap = std::log(cap);
  std::vector<std::vector<double>> lw(m, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      lw[i][j] = s[i][j] ? std::log(std::norm(a(i, j).to_complex()))
                         : -std::numeric_limits<double>::infinity();
    }
  }
  std::vector<double> x(m, 0.0), y(n, 0.0), omega(m, 1.0);
  std::vector<double> buf;
  auto row_log_sum = [&](std::size_t i) {
    buf.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) buf[j] = lw[i][j] + x[i] + y[j];
    return logsumexp(buf);
  };
  auto col_log_sum = [&](std::size_t j) {
    buf.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) buf[i] = lw[i][j] + x[i] + y[j];
    return logsumexp(buf);
  };

  ScalingResult res;
  res.eps_achieved = std::numeric_limits<double>::infinity();
  for (std::size_t it = 1; it <= opts.max_iter; ++it) {
    for (std::size_t j = 0; j < n; ++j) y[j] -= col_log_sum(j);
    // Columns are exact here; the violation is the largest row excess.
    double worst = 0.0;
    std::vector<double> row_log(m);
    for (std::size_t i = 0; i < m; ++i) {
      row_log[i] = row_log_sum(i);
      worst = std::max(worst, std::exp(row_log[i]) - cap);
    }
    res.iterations = it;
    res.eps_achieved = worst;
    if (worst <= opts.eps) {
      res.converged = true;
      break;
    }
    if (it == opts.max_iter) break;
    for (std::size_t i = 0; i < m; ++i) {
      if (row_log[i] > log_cap) {
        x[i] -= omega[i] * (row_log[i] - log_cap);
        if (opts.over_relax) omega[i] = std::min(omega[i] * 2.0, 1073741824.0);
      } else {
        omega[i] = 1.0;
      }
    }
  }

  res.b = Matrix(FieldMode::kComplexFloat, m, n, a.exact() ? kDefaultFloatTol : a.tol());
  res.rho.resize(m);
  res.gamma.resize(n);
  for (std::size_t i = 0; i < m; ++i) res.rho[i] = std::exp(x[i] / 2.0);
  for (std::size_t j = 0; j < n; ++j) res.gamma[j] = std::exp(y[j] / 2.0);
  res.row_sq_norms.assign(m, 0.0);
  res.col_sq_norms.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!s[i][j]) continue;
      std::complex<double> v = a(i, j).to_complex() * std::exp((x[i] + y[j]) / 2.0);
      res.b(i, j) = Scalar::complex(v);
      res.row_sq_norms[i] += std::norm(v);
      res.col_sq_norms[j] += std::norm(v);
    }
  }
  return res;
}

std::vector<std::pair<std::size_t, std::size_t>> support_edges(const Matrix& a) {
  auto s = support_pattern(a);
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (s[i][j]) e.emplace_back(i, j);
    }
  }
  return e;
}

TransportationSolution transportation_feasible(
    std::size_t m, std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& support,
    const std::vector<mpq_class>& r, const std::vector<mpq_class>& c) {
  if (r.size() != m || c.size() != n) throw PreconditionError("margin sizes do not match");
  mpq_class total_r = 0, total_c = 0;
  for (const auto& v : r) {
    if (v < 0) throw PreconditionError("negative row margin");
    total_r += v;
  }
  for (const auto& v : c) {
    if (v < 0) throw PreconditionError("negative column margin");
    total_c += v;
  }
  TransportationSolution sol;
  sol.z.assign(support.size(), mpq_class(0));
  if (total_r != total_c) return sol;

  // Nodes: source 0, rows 1..m, columns m+1..m+n, sink m+n+1.
  struct Arc {
    std::size_t to;
    mpq_class cap;
  };
  const std::size_t nodes = m + n + 2, src = 0, sink = m + n + 1;
  std::vector<Arc> arcs;
  std::vector<std::vector<std::size_t>> adj(nodes);
  auto add = [&](std::size_t u, std::size_t v, const mpq_class& cap) {
    adj[u].push_back(arcs.size());
    arcs.push_back({v, cap});
    adj[v].push_back(arcs.size());
    arcs.push_back({u, mpq_class(0)});
    return arcs.size() - 2;
  };
  for (std::size_t i = 0; i < m; ++i) add(src, 1 + i, r[i]);
  std::vector<std::size_t> edge_arc;
  for (const auto& [i, j] : support) {
    if (i >= m || j >= n) throw PreconditionError("support edge out of range");
    edge_arc.push_back(add(1 + i, 1 + m + j, total_r));
  }
  for (std::size_t j = 0; j < n; ++j) add(1 + m + j, sink, c[j]);

  for (;;) {
    std::vector<std::size_t> via(nodes, SIZE_MAX);
    std::vector<bool> seen(nodes, false);
    std::deque<std::size_t> queue = {src};
    seen[src] = true;
    while (!queue.empty() && !seen[sink]) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (auto id : adj[u]) {
        if (arcs[id].cap > 0 && !seen[arcs[id].to]) {
          seen[arcs[id].to] = true;
          via[arcs[id].to] = id;
          queue.push_back(arcs[id].to);
        }
      }
    }
    if (!seen[sink]) break;
    mpq_class push = total_r + 1;
    for (std::size_t v = sink; v != src; v = arcs[via[v] ^ 1].to) push = std::min(push, arcs[via[v]].cap);
    for (std::size_t v = sink; v != src; v = arcs[via[v] ^ 1].to) {
      arcs[via[v]].cap -= push;
      arcs[via[v] ^ 1].cap += push;
    }
    sol.flow += push;
  }
  for (std::size_t e = 0; e < support.size(); ++e) sol.z[e] = arcs[edge_arc[e] ^ 1].cap;
  sol.feasible = sol.flow == total_r;
  return sol;
}

DesignRankReport design_rank_check(const Matrix& a, const ScalingOptions& opts) {
  DesignRankReport rep;
  rep.cert = check_design(a);
  if (!rep.cert.valid()) throw PreconditionError("matrix has a zero column; no design certificate");
  rep.rank = kbound::rank(a);
  rep.required = ceil_rational(rep.cert.bound);
  rep.rank_pass = mpz_class(static_cast<unsigned long>(rep.rank)) >= rep.required;
  rep.bound_above_old = rep.cert.bound >= rep.cert.old_bound;

  mpq_class cap(static_cast<unsigned long>(rep.cert.q), static_cast<unsigned long>(rep.cert.k));
  cap.canonicalize();
  rep.scaling = sinkhorn_scale(a, cap, opts);
  rep.scaled = true;
  const Matrix& b = rep.scaling.b;
  const std::size_t n = b.cols();
  std::vector<std::vector<std::complex<double>>> gram(n, std::vector<std::complex<double>>(n));
  for (std::size_t j1 = 0; j1 < n; ++j1) {
    for (std::size_t j2 = 0; j2 < n; ++j2) {
      std::complex<double> acc = 0.0;
      for (std::size_t i = 0; i < b.rows(); ++i) {
        acc += std::conj(b(i, j1).to_complex()) * b(i, j2).to_complex();
      }
      gram[j1][j2] = acc;
    }
  }
  double alpha = 0.0, frob_b = 0.0;
  for (double r : rep.scaling.row_sq_norms) {
    alpha = std::max(alpha, r);
    frob_b += r;
  }
  for (std::size_t j1 = 0; j1 < n; ++j1) {
    rep.trace += gram[j1][j1].real();
    for (std::size_t j2 = 0; j2 < n; ++j2) {
      double v = std::norm(gram[j1][j2]);
      rep.frob_sq += v;
      if (j1 != j2) rep.offdiag += v;
    }
  }
  const double slack = 1e-9;
  rep.trace_bound = rep.frob_sq > 0.0 ? rep.trace * rep.trace / rep.frob_sq : 0.0;
  rep.trace_pass = rep.trace_bound <= static_cast<double>(rep.rank) * (1.0 + slack);
  const double q = static_cast<double>(rep.cert.q), t = static_cast<double>(rep.cert.t);
  rep.offdiag_bound = t * (1.0 - 1.0 / q) * alpha * frob_b;
  rep.offdiag_pass = rep.offdiag <= rep.offdiag_bound * (1.0 + slack) + slack * frob_b * frob_b;
  return rep;
}

Matrix all_triples_matrix(std::size_t n) {
  if (n < 3) throw PreconditionError("all-triples matrix needs n >= 3");
  std::vector<Vector> rows;
  for_each_combination(n, 3, [&](const IndexList& tri) {
    for (std::size_t slot = 0; slot < 3; ++slot) {
      Vector row(n, Scalar::integer(0));
      for (std::size_t c = 0; c < 3; ++c) row[tri[c]] = Scalar::integer(c == slot ? -2 : 1);
      rows.push_back(std::move(row));
    }
    return true;
  });
  return Matrix::from_rows(FieldMode::kRational, rows);
}

}  // namespace kbound
