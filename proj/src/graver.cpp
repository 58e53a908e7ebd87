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

#include "kbound/graver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "kbound/condition.hpp"

namespace kbound {

namespace {

constexpr std::int64_t kEntryLimit = std::int64_t{1} << 40;

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw GuardExceeded("integer entry does not fit in 64 bits");
  return z.get_si();
}

std::int64_t linf(const IntVector& v) {
  std::int64_t m = 0;
  for (auto x : v) m = std::max(m, x < 0 ? -x : x);
  return m;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

bool sign_compatible(const IntVector& u, const IntVector& v) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if ((u[i] < 0 && v[i] > 0) || (u[i] > 0 && v[i] < 0)) return false;
  }
  return true;
}

IntVector negate(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

void check_graver_guard(const Matrix& a) {
  if (a.mode() != FieldMode::kRational || !a.all_integer()) {
    throw PreconditionError("graver_basis requires an integer matrix");
  }
  if (a.rows() > kGraverMaxRows || a.cols() > kGraverMaxCols) {
    throw GuardExceeded("graver guard is d <= 3 and n <= 6 (got " + std::to_string(a.rows()) +
                        "x" + std::to_string(a.cols()) + ")");
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (abs(a(i, j).as_rational()) > kGraverMaxEntry) {
        throw GuardExceeded("graver guard is |a_ij| <= 50 (entry " + a(i, j).to_string() + ")");
      }
    }
  }
}

// Subtracts conformally smaller elements of g until none fits.
IntVector normal_form(IntVector s, const std::vector<IntVector>& g) {
  bool reduced = true;
  while (reduced && !is_zero(s)) {
    reduced = false;
    for (const auto& h : g) {
      if (!conformal_leq(h, s)) continue;
      while (conformal_leq(h, s)) {
        for (std::size_t i = 0; i < s.size(); ++i) s[i] -= h[i];
      }
      reduced = true;
      break;
    }
  }
  return s;
}

std::vector<mpq_class> to_rational(const std::vector<mpz_class>& v) {
  return std::vector<mpq_class>(v.begin(), v.end());
}

mpq_class dot(const std::vector<mpq_class>& c, const std::vector<mpq_class>& x) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * x[i];
  return s;
}

// Smallest j >= 1 with x <= S(j).
std::size_t interval_of(const mpq_class& x, const std::vector<mpz_class>& s) {
  for (std::size_t j = 1; j < s.size(); ++j) {
    if (x <= s[j]) return j;
  }
  return s.size() - 1;
}

}  // namespace

bool conformal_leq(const IntVector& u, const IntVector& v) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (u[i] > 0 ? (v[i] < u[i]) : (v[i] > u[i])) return false;
  }
  return true;
}

std::vector<IntVector> lattice_kernel_basis(const Matrix& a) {
  if (a.mode() != FieldMode::kRational || !a.all_integer()) {
    throw PreconditionError("lattice_kernel_basis requires an integer matrix");
  }
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  // Row j is (column j of A | e_j); unimodular row operations keep the right
  // block a basis of Z^n.
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(d + n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[j][i] = a(i, j).as_rational().get_num();
    m[j][d + j] = 1;
  }
  std::size_t p = 0;
  for (std::size_t c = 0; c < d && p < n; ++c) {
    while (true) {
      std::size_t piv = n;
      for (std::size_t r = p; r < n; ++r) {
        if (m[r][c] != 0 && (piv == n || abs(m[r][c]) < abs(m[piv][c]))) piv = r;
      }
      if (piv == n) break;
      std::swap(m[p], m[piv]);
      bool clean = true;
      for (std::size_t r = p + 1; r < n; ++r) {
        if (m[r][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[p][c].get_mpz_t());
        for (std::size_t k = c; k < d + n; ++k) m[r][k] -= q * m[p][k];
        if (m[r][c] != 0) clean = false;
      }
      if (clean) {
        ++p;
        break;
      }
    }
  }
  std::vector<IntVector> out;
  for (std::size_t r = p; r < n; ++r) {
    IntVector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = to_int64(m[r][d + k]);
    out.push_back(std::move(v));
  }
  return out;
}

GraverBasis graver_basis(const Matrix& a) {
  check_graver_guard(a);
  GraverBasis out;
  std::vector<IntVector> g;
  std::set<IntVector> seen;
  for (auto& v : lattice_kernel_basis(a)) {
    for (auto w : {v, negate(v)}) {
      if (seen.insert(w).second) g.push_back(std::move(w));
    }
  }
  out.generators = g.size();

  std::deque<IntVector> pending;
  auto push_sums = [&](std::size_t idx) {
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (k == idx || sign_compatible(g[k], g[idx])) continue;
      IntVector s(g[idx].size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = g[idx][i] + g[k][i];
      if (!is_zero(s)) pending.push_back(std::move(s));
    }
  };
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t k = i + 1; k < g.size(); ++k) {
      if (sign_compatible(g[i], g[k])) continue;
      IntVector s(g[i].size());
      for (std::size_t t = 0; t < s.size(); ++t) s[t] = g[i][t] + g[k][t];
      if (!is_zero(s)) pending.push_back(std::move(s));
    }
  }
  while (!pending.empty()) {
    IntVector s = std::move(pending.front());
    pending.pop_front();
    ++out.reductions;
    IntVector r = normal_form(std::move(s), g);
    if (is_zero(r) || !seen.insert(r).second) continue;
    if (linf(r) > kEntryLimit) throw GuardExceeded("graver completion: entries overflow");
    g.push_back(std::move(r));
    if (g.size() > kGraverElementCutoff) {
      throw GuardExceeded("graver completion did not stabilise: " + std::to_string(g.size()) +
                          " elements, " + std::to_string(pending.size()) + " sums pending, " +
                          std::to_string(out.reductions) + " reduced");
    }
    push_sums(g.size() - 1);
  }

  for (std::size_t i = 0; i < g.size(); ++i) {
    bool minimal = true;
    for (std::size_t k = 0; k < g.size() && minimal; ++k) {
      if (k != i && conformal_leq(g[k], g[i])) minimal = false;
    }
    if (minimal) out.elements.push_back(g[i]);
  }
  std::sort(out.elements.begin(), out.elements.end());
  for (const auto& v : out.elements) out.g_inf = std::max(out.g_inf, linf(v));
  return out;
}

KappaGraverReport kappa_vs_graver_check(const Matrix& a) {
  check_graver_guard(a);
  KappaGraverReport rep;
  Kappa k = kappa_circuit(a);
  rep.kappa = k.value;
  rep.kappa_sq = *k.value_sq;
  rep.g_inf = graver_basis(a).g_inf;
  mpq_class g2(mpz_class(rep.g_inf) * rep.g_inf);
  // Without a circuit kappa is 1 by convention and g_inf is 0.
  rep.pass = !k.has_circuit || rep.kappa_sq <= g2;
  return rep;
}

CollinearBlockReport collinear_block_check(const std::vector<long>& z) {
  if (z.size() < 2) throw PreconditionError("collinear block needs k >= 2 entries");
  std::set<long> distinct(z.begin(), z.end());
  if (distinct.size() != z.size()) throw PreconditionError("collinear block entries must be distinct");
  if (distinct.count(0)) throw PreconditionError("collinear block entries must be nonzero");
  CollinearBlockReport rep;
  rep.k = z.size();
  for (long v : distinct) {
    if (std::find(rep.deduplicated.begin(), rep.deduplicated.end(), -v) == rep.deduplicated.end()) {
      rep.deduplicated.push_back(v);
    }
  }
  const long z1 = rep.deduplicated.front();
  for (std::size_t i = 1; i < rep.deduplicated.size(); ++i) {
    long zi = rep.deduplicated[i];
    long g = std::gcd(z1, zi);
    rep.pair_max = std::max<std::int64_t>(rep.pair_max, std::max(std::abs(z1), std::abs(zi)) / g);
  }
  std::vector<long> row(z.begin(), z.end());
  rep.g_inf = graver_basis(Matrix::from_integers({row})).g_inf;
  rep.bound = 2 * rep.g_inf * rep.g_inf + 2;
  rep.pass = static_cast<std::int64_t>(rep.k) <= rep.bound;
  return rep;
}

void IPInstance::validate() const {
  if (a.mode() != FieldMode::kRational || !a.all_integer()) {
    throw PreconditionError("IP constraint matrix must be integer");
  }
  if (b.size() != a.rows()) throw PreconditionError("IP: b has wrong length");
  if (u.size() != a.cols() || c.size() != a.cols()) {
    throw PreconditionError("IP: u and c must have one entry per column");
  }
  for (const auto& x : u) {
    if (x < 0) throw PreconditionError("IP: upper bounds must be nonnegative");
  }
}

IPInstance SeparableReduction::reduced(const IPInstance& ip) const {
  IPInstance out;
  out.a = a_prime;
  out.b = ip.b;
  out.u = u_prime;
  out.c.assign(r(), mpq_class(0));
  return out;
}

SeparableReduction separable_reduce(const IPInstance& ip) {
  ip.validate();
  SeparableReduction red;
  red.n = ip.cols();
  IndexList reps;
  for (std::size_t j = 0; j < ip.cols(); ++j) {
    Vector col = ip.a.column(j);
    std::size_t g = 0;
    while (g < reps.size() && ip.a.column(reps[g]) != col) ++g;
    if (g == reps.size()) {
      reps.push_back(j);
      red.groups.emplace_back();
    }
    red.groups[g].push_back(j);
  }
  red.a_prime = ip.a.select_columns(reps);
  for (auto& grp : red.groups) {
    std::stable_sort(grp.begin(), grp.end(),
                     [&](std::size_t x, std::size_t y) { return ip.c[x] < ip.c[y]; });
    std::vector<mpz_class> s{0};
    std::vector<mpq_class> costs;
    for (auto j : grp) {
      s.push_back(s.back() + ip.u[j]);
      costs.push_back(ip.c[j]);
    }
    red.u_prime.push_back(s.back());
    red.breakpoints.push_back(std::move(s));
    red.sorted_costs.push_back(std::move(costs));
  }
  return red;
}

std::vector<mpq_class> g_map(const std::vector<mpq_class>& x_prime, const SeparableReduction& red) {
  if (x_prime.size() != red.r()) throw PreconditionError("g_map: x' has wrong length");
  std::vector<mpq_class> out(red.n, mpq_class(0));
  for (std::size_t i = 0; i < red.r(); ++i) {
    const mpq_class& x = x_prime[i];
    const auto& s = red.breakpoints[i];
    if (x < 0 || x > s.back()) throw PreconditionError("g_map: x' outside [0, u']");
    for (std::size_t j = 1; j < s.size(); ++j) {
      std::size_t idx = red.groups[i][j - 1];
      if (x <= s[j - 1]) {
        out[idx] = 0;
      } else if (x <= s[j]) {
        out[idx] = x - s[j - 1];
      } else {
        out[idx] = s[j] - s[j - 1];
      }
    }
  }
  return out;
}

std::vector<mpq_class> aggregate(const std::vector<mpq_class>& x, const SeparableReduction& red) {
  std::vector<mpq_class> out(red.r(), mpq_class(0));
  for (std::size_t i = 0; i < red.r(); ++i) {
    for (auto j : red.groups[i]) out[i] += x[j];
  }
  return out;
}

LPSolution solve_lp_exact(const IPInstance& ip) {
  ip.validate();
  const std::size_t n = ip.cols();
  const std::size_t d = ip.rows();
  if (n > kGraverMaxCols) throw GuardExceeded("solve_lp_exact requires n <= 6");
  Matrix aug(FieldMode::kRational, d, n + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = ip.a(i, j);
    aug(i, n) = Scalar::rational(mpq_class(ip.b[i]));
  }
  RrefResult rr = rref(aug);
  if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == n) throw Infeasible("LP: Ax = b has no solution");
  const std::size_t r = rr.rank;
  // R x = beta with R of full row rank r.
  auto rcoef = [&](std::size_t i, std::size_t j) { return rr.echelon(i, j).as_rational(); };

  LPSolution best;
  bool found = false;
  std::vector<mpq_class> x(n);
  for_each_combination(n, r, [&](const IndexList& basis) {
    IndexList nonbasic;
    for (std::size_t j = 0, k = 0; j < n; ++j) {
      if (k < basis.size() && basis[k] == j) {
        ++k;
      } else {
        nonbasic.push_back(j);
      }
    }
    Matrix rb(FieldMode::kRational, r, r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < r; ++k) rb(i, k) = rr.echelon(i, basis[k]);
    }
    if (r > 0 && det(rb).is_zero()) return true;
    const std::size_t assignments = std::size_t{1} << nonbasic.size();
    for (std::size_t mask = 0; mask < assignments; ++mask) {
      for (std::size_t k = 0; k < nonbasic.size(); ++k) {
        x[nonbasic[k]] = (mask >> k & 1) ? mpq_class(ip.u[nonbasic[k]]) : mpq_class(0);
      }
      Matrix sys(FieldMode::kRational, r, r + 1);
      for (std::size_t i = 0; i < r; ++i) {
        mpq_class rhs = rr.echelon(i, n).as_rational();
        for (auto j : nonbasic) rhs -= rcoef(i, j) * x[j];
        for (std::size_t k = 0; k < r; ++k) sys(i, k) = rb(i, k);
        sys(i, r) = Scalar::rational(rhs);
      }
      RrefResult sol = rref(sys);
      bool ok = true;
      for (std::size_t k = 0; k < r && ok; ++k) {
        mpq_class v = sol.echelon(k, r).as_rational();
        if (v < 0 || v > ip.u[basis[k]]) ok = false;
        x[basis[k]] = v;
      }
      ++best.vertices_checked;
      if (!ok) continue;
      mpq_class val = dot(ip.c, x);
      if (!found || val < best.value || (val == best.value && x < best.x)) {
        found = true;
        best.value = val;
        best.x = x;
      }
    }
    return true;
  });
  if (!found) throw Infeasible("LP: no point of {Ax = b, 0 <= x <= u}");
  return best;
}

IPSolution solve_ip_bruteforce(const IPInstance& ip, const std::vector<mpq_class>& anchor) {
  ip.validate();
  const std::size_t n = ip.cols();
  const std::size_t d = ip.rows();
  if (n > kGraverMaxCols) throw GuardExceeded("solve_ip_bruteforce requires n <= 6");
  if (anchor.size() != n) throw PreconditionError("IP anchor has wrong length");
  mpz_class box = 1;
  for (const auto& u : ip.u) box *= u + 1;
  if (box > kMaxIpBox) throw GuardExceeded("IP box has more than 1e6 points (" + box.get_str() + ")");

  std::vector<std::vector<std::int64_t>> a(d, std::vector<std::int64_t>(n));
  std::vector<std::int64_t> b(d), u(n);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = to_int64(ip.a(i, j).as_rational().get_num());
    b[i] = to_int64(ip.b[i]);
  }
  for (std::size_t j = 0; j < n; ++j) u[j] = to_int64(ip.u[j]);

  IPSolution best;
  bool found = false;
  std::vector<std::int64_t> x(n, 0);
  std::vector<mpq_class> xq(n);
  // Odometer with the last coordinate fastest visits points in lex order, so
  // only strict improvements replace the incumbent.
  while (true) {
    ++best.points_checked;
    bool feasible = true;
    for (std::size_t i = 0; i < d && feasible; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a[i][j] * x[j];
      feasible = s == b[i];
    }
    if (feasible) {
      for (std::size_t j = 0; j < n; ++j) xq[j] = x[j];
      mpq_class dist = linf_distance(xq, anchor);
      if (!found || dist < best.distance) {
        found = true;
        best.distance = dist;
        best.x.assign(x.begin(), x.end());
      }
    }
    std::size_t j = n;
    while (j > 0 && x[j - 1] == u[j - 1]) {
      x[j - 1] = 0;
      --j;
    }
    if (j == 0) break;
    ++x[j - 1];
  }
  if (!found) throw Infeasible("IP: no integer point of {Ax = b, 0 <= x <= u}");
  return best;
}

mpq_class linf_distance(const std::vector<mpq_class>& x, const std::vector<mpq_class>& y) {
  mpq_class m = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mpq_class diff = abs(x[i] - y[i]);
    if (diff > m) m = diff;
  }
  return m;
}

ProximityReport proximity_experiment(const IPInstance& ip) {
  ip.validate();
  ProximityReport rep;
  rep.d = ip.rows();
  rep.n = ip.cols();
  SeparableReduction red = separable_reduce(ip);
  rep.r = red.r();

  LPSolution lp = solve_lp_exact(ip);
  rep.lp_value = lp.value;
  rep.x_lp_prime = aggregate(lp.x, red);
  rep.x_lp = g_map(rep.x_lp_prime, red);
  rep.g_lp_value = dot(ip.c, rep.x_lp);
  rep.lp_value_matches = rep.g_lp_value == rep.lp_value;

  IPInstance reduced = red.reduced(ip);
  rep.x_ip_prime = to_rational(solve_ip_bruteforce(reduced, rep.x_lp_prime).x);
  rep.x_ip = to_rational(solve_ip_bruteforce(ip, rep.x_lp).x);
  rep.g_x_ip_prime = g_map(rep.x_ip_prime, red);

  rep.proximity = linf_distance(rep.x_lp, rep.x_ip);
  rep.g_gap = linf_distance(rep.x_lp, rep.g_x_ip_prime);
  rep.prime_gap = linf_distance(rep.x_lp_prime, rep.x_ip_prime);

  rep.g_inf_a = graver_basis(ip.a).g_inf;
  rep.g_inf_a_prime = graver_basis(red.a_prime).g_inf;
  rep.hemmecke_bound = static_cast<std::int64_t>(rep.r) * rep.g_inf_a_prime;
  mpz_class d4 = mpz_class(rep.d) * rep.d * rep.d * rep.d;
  mpz_class g = rep.g_inf_a;
  rep.distinct_column_envelope = d4 * g * g * g;
  rep.envelope = rep.distinct_column_envelope * g;

  rep.gmap_monotone = true;
  mpq_class witness_gap = -1;
  for (std::size_t i = 0; i < red.r(); ++i) {
    mpq_class coord_gap = abs(rep.x_lp_prime[i] - rep.x_ip_prime[i]);
    for (std::size_t j = 0; j < red.groups[i].size(); ++j) {
      std::size_t idx = red.groups[i][j];
      mpq_class gap = abs(rep.x_lp[idx] - rep.g_x_ip_prime[idx]);
      if (gap > coord_gap) rep.gmap_monotone = false;
      if (gap > witness_gap) {
        witness_gap = gap;
        rep.witness = idx;
        rep.witness_j = j + 1;
        const auto& s = red.breakpoints[i];
        const mpq_class& hi = std::max(rep.x_lp_prime[i], rep.x_ip_prime[i]);
        const mpq_class& lo = std::min(rep.x_lp_prime[i], rep.x_ip_prime[i]);
        rep.witness_j_hi = interval_of(hi, s);
        rep.witness_j_lo = interval_of(lo, s);
      }
    }
  }
  if (witness_gap > 0) {
    const std::size_t j = rep.witness_j, jh = rep.witness_j_hi, jl = rep.witness_j_lo;
    if (jh == j && jl == j) {
      rep.witness_case = 1;
    } else if (jh == j && jl < j) {
      rep.witness_case = 2;
    } else if (jh > j && jl == j) {
      rep.witness_case = 3;
    } else if (jh > j && jl < j) {
      rep.witness_case = 4;
    }
  }

  rep.chain_pass = rep.proximity <= rep.g_gap && rep.g_gap <= rep.prime_gap;
  rep.hemmecke_pass = rep.prime_gap <= rep.hemmecke_bound;
  return rep;
}

IPInstance random_ip_instance(std::size_t d, std::size_t n, std::uint64_t seed, bool duplicate_column) {
  if (d == 0 || n == 0) throw PreconditionError("random_ip_instance: empty shape");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-3, 4), bound(0, 3), cost(-5, 5);
  std::vector<std::vector<long>> rows(d, std::vector<long>(n));
  for (auto& r : rows)
    for (auto& x : r) x = entry(rng);
  if (duplicate_column) {
    for (auto& r : rows) r[n - 1] = r[0];
  }
  IPInstance ip;
  ip.a = Matrix::from_integers(rows);
  std::vector<long> x0(n);
  for (std::size_t j = 0; j < n; ++j) {
    long u = bound(rng);
    ip.u.emplace_back(u);
    ip.c.emplace_back(cost(rng));
    x0[j] = static_cast<long>(rng() % (u + 1));
  }
  for (std::size_t i = 0; i < d; ++i) {
    long b = 0;
    for (std::size_t j = 0; j < n; ++j) b += rows[i][j] * x0[j];
    ip.b.emplace_back(b);
  }
  return ip;
}

}  // namespace kbound
