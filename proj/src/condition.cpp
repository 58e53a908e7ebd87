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

#include "kbound/condition.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <unordered_map>

namespace kbound {

namespace {

// n <= 20 and rank <= 8, or a wider matrix whose subset count C(n, rank+1)
// stays within the largest count allowed at n = 20.
void check_guard(const Matrix& a, std::size_t r, const char* what) {
  const std::size_t n = a.cols();
  bool ok = r <= kMaxEnumRank &&
            (n <= kMaxEnumCols ||
             (n <= kMaxEnumWideCols && binomial(n, r + 1) <= binomial(kMaxEnumCols, kMaxEnumRank + 1)));
  if (!ok) {
    throw GuardExceeded(std::string(what) +
                        ": enumeration guard is rank <= 8 and n <= 20, or n <= 64 with "
                        "C(n, rank+1) <= C(20, 9) (got n=" +
                        std::to_string(n) + ", rank=" + std::to_string(r) + ")");
  }
}

std::uint64_t mask_of(const IndexList& idx) {
  std::uint64_t m = 0;
  for (auto i : idx) m |= std::uint64_t{1} << i;
  return m;
}

IndexList indices_of(std::uint64_t mask) {
  IndexList out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

// Rows of the reduced echelon form: same kernel as A, full row rank.
Matrix independent_rows(const Matrix& a) {
  RrefResult rr = rref(a);
  IndexList keep(rr.rank);
  for (std::size_t i = 0; i < rr.rank; ++i) keep[i] = i;
  return rr.echelon.select_rows(keep);
}

void visit_circuits(const Matrix& a, std::size_t max_size, IndexList& subset,
                    std::vector<Circuit>& out) {
  std::size_t start = subset.empty() ? 0 : subset.back() + 1;
  for (std::size_t idx = start; idx < a.cols(); ++idx) {
    subset.push_back(idx);
    Matrix sub = a.select_columns(subset);
    std::size_t r = rank(sub);
    if (r == subset.size()) {
      if (subset.size() < max_size) visit_circuits(a, max_size, subset, out);
    } else if (r + 1 == subset.size()) {
      KernelBasis kb = kernel_basis(sub);
      const Vector& v = kb.vectors.front();
      bool full = std::none_of(v.begin(), v.end(), [&](const Scalar& x) {
        return a.exact() ? x.is_zero() : x.magnitude() <= a.tol();
      });
      if (full) {
        Circuit c;
        c.support = subset;
        c.coeffs.assign(a.cols(), Scalar::zero(a.mode()));
        for (std::size_t k = 0; k < subset.size(); ++k) c.coeffs[subset[k]] = v[k];
        out.push_back(std::move(c));
      }
    }
    subset.pop_back();
  }
}

}  // namespace

std::vector<Circuit> circuits(const Matrix& a) {
  std::size_t r = rank(a);
  check_guard(a, r, "circuits");
  std::vector<Circuit> out;
  IndexList subset;
  visit_circuits(a, r + 1, subset, out);
  return out;
}

Kappa kappa_circuit(const Matrix& a) {
  if (!a.exact()) {
    throw PreconditionError("kappa_circuit requires an exact field mode; use kappa_detratio");
  }
  Kappa best;
  best.value_sq = mpq_class(1);
  for (auto& c : circuits(a)) {
    std::size_t hi = c.support.front();
    std::size_t lo = c.support.front();
    mpq_class hi_sq = c.coeffs[hi].abs2().real_rational();
    mpq_class lo_sq = hi_sq;
    for (auto i : c.support) {
      mpq_class s = c.coeffs[i].abs2().real_rational();
      if (s > hi_sq) {
        hi_sq = s;
        hi = i;
      }
      if (s < lo_sq) {
        lo_sq = s;
        lo = i;
      }
    }
    mpq_class ratio = hi_sq / lo_sq;
    if (!best.has_circuit || ratio > *best.value_sq) {
      best.has_circuit = true;
      best.value_sq = ratio;
      best.ratio_num = hi;
      best.ratio_den = lo;
      best.circuit = std::move(c);
    }
  }
  best.value = std::sqrt(best.value_sq->get_d());
  return best;
}

Kappa kappa_detratio(const Matrix& input) {
  Matrix a = independent_rows(input);
  const std::size_t r = a.rows();
  const std::size_t n = a.cols();
  check_guard(input, r, "kappa_detratio");
  Kappa best;
  if (input.exact()) best.value_sq = mpq_class(1);
  if (r == n) return best;

  // A zero column is a loop: its circuit {j} has ratio 1.
  for (std::size_t j = 0; j < n; ++j) {
    if (input.column_is_zero(j)) {
      best.has_circuit = true;
      best.swap_in = j;
      break;
    }
  }
  if (r == 0) return best;

  std::vector<double> col_norm(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < r; ++i) col_norm[j] += std::norm(a(i, j).to_complex());
    col_norm[j] = std::sqrt(col_norm[j]);
  }
  std::unordered_map<std::uint64_t, Scalar> dets;
  for_each_combination(n, r, [&](const IndexList& b) {
    Scalar d = det(a.select_columns(b));
    bool nonzero = a.exact() ? !d.is_zero() : [&] {
      double scale = 1.0;
      for (auto j : b) scale *= col_norm[j];
      return d.magnitude() > a.tol() * scale;
    }();
    if (nonzero) dets.emplace(mask_of(b), std::move(d));
    return true;
  });

  double best_float = best.has_circuit ? 1.0 : 0.0;
  for (const auto& [bmask, bdet] : dets) {
    // Largest neighbouring determinant for this basis.
    const Scalar* top = nullptr;
    std::size_t top_out = 0, top_in = 0;
    Scalar top_abs2;
    double top_mag = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(bmask >> i & 1)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (bmask >> j & 1) continue;
        std::uint64_t m2 = (bmask & ~(std::uint64_t{1} << i)) | (std::uint64_t{1} << j);
        auto it = dets.find(m2);
        if (it == dets.end()) continue;
        bool better;
        if (a.exact()) {
          Scalar s = it->second.abs2();
          better = top == nullptr || s.real_rational() > top_abs2.real_rational();
          if (better) top_abs2 = s;
        } else {
          double mag = it->second.magnitude();
          better = mag > top_mag;
          if (better) top_mag = mag;
        }
        if (better) {
          top = &it->second;
          top_out = i;
          top_in = j;
        }
      }
    }
    if (top == nullptr) continue;
    bool improved = false;
    if (a.exact()) {
      mpq_class ratio = top_abs2.real_rational() / bdet.abs2().real_rational();
      if (!best.has_circuit || ratio > *best.value_sq) {
        best.value_sq = ratio;
        improved = true;
      }
    } else {
      double ratio = top_mag / bdet.magnitude();
      if (!best.has_circuit || ratio > best_float) {
        best_float = ratio;
        improved = true;
      }
    }
    if (improved) {
      best.has_circuit = true;
      best.basis = indices_of(bmask);
      best.swap_out = top_out;
      best.swap_in = top_in;
    }
  }
  best.value = a.exact() ? std::sqrt(best.value_sq->get_d()) : std::max(1.0, best_float);
  if (!best.has_circuit) best.value = 1.0;
  return best;
}

Kappa kappa(const Matrix& a) { return a.exact() ? kappa_circuit(a) : kappa_detratio(a); }

DeltaMeasure delta_measure(const Matrix& a) {
  const std::size_t d = a.rows();
  std::size_t r = rank(a);
  if (r != d) throw PreconditionError("delta_measure requires rank(A) = d");
  check_guard(a, d, "delta_measure");
  DeltaMeasure best;
  bool found = false;
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
  for_each_combination(a.cols(), d, [&](const IndexList& b) {
    if (rank(a.select_columns(b)) != d) return true;
    for (std::size_t k = 0; k < b.size(); ++k) {
      std::vector<Vector> rest;
      for (std::size_t t = 0; t < b.size(); ++t) {
        if (t != k) rest.push_back(cols[b[t]]);
      }
      Scalar dist = dist_sq_to_span(cols[b[k]], rest, a.tol());
      Scalar len = norm_sq(cols[b[k]]);
      if (a.exact()) {
        mpq_class v = dist.real_rational() / len.real_rational();
        if (!found || v < *best.delta_sq) {
          found = true;
          best.delta_sq = v;
          best.delta_sq_float = v.get_d();
          best.basis = b;
          best.column = b[k];
        }
      } else {
        double v = dist.to_complex().real() / len.to_complex().real();
        if (!found || v < best.delta_sq_float) {
          found = true;
          best.delta_sq_float = v;
          best.basis = b;
          best.column = b[k];
        }
      }
    }
    return true;
  });
  return best;
}

DeltaModularity delta_modularity(const Matrix& a) {
  if (!a.all_integer()) throw PreconditionError("delta_modularity requires an integer matrix");
  std::size_t r = rank(a);
  if (a.rows() > kMaxEnumCols) throw GuardExceeded("delta_modularity: too many rows");
  check_guard(a, r, "delta_modularity");
  DeltaModularity out;
  out.rank = r;
  out.value = 0;
  if (r == 0) return out;
  for_each_subdet(a, r, [&](const Subdeterminant& s) {
    mpz_class v = abs(s.value.as_rational().get_num());
    if (v > out.value) {
      out.value = v;
      out.rows = s.rows;
      out.cols = s.cols;
    }
  });
  return out;
}

double chibar_sample(const Matrix& a, std::size_t trials, std::uint64_t seed) {
  const auto d = static_cast<Eigen::Index>(a.rows());
  const auto n = static_cast<Eigen::Index>(a.cols());
  if (rank(a) != a.rows()) throw PreconditionError("chibar_sample requires rank(A) = d");
  Eigen::MatrixXcd am(d, n);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      am(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_complex();
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> expo(std::log(1e-6), std::log(1e6));
  double best = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Eigen::VectorXd diag(n);
    for (Eigen::Index j = 0; j < n; ++j) diag(j) = std::exp(expo(rng));
    Eigen::MatrixXcd ad = am * diag.asDiagonal();
    Eigen::MatrixXcd gram = ad * am.adjoint();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(gram);
    if (!lu.isInvertible()) continue;
    Eigen::MatrixXcd proj = am.adjoint() * lu.solve(ad);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(proj);
    double norm = svd.singularValues()(0);
    if (std::isfinite(norm)) best = std::max(best, norm);
  }
  return best;
}

Matrix project_kernel(const Matrix& a, const IndexList& j) {
  const double tol = a.exact() ? -1.0 : a.tol();
  for (auto c : j) {
    if (c >= a.cols()) throw PreconditionError("projection index out of range");
  }
  if (j.empty()) return Matrix(a.mode(), 1, 0, tol);
  KernelBasis kb = kernel_basis(a);
  std::vector<Vector> restricted;
  for (const auto& v : kb.vectors) {
    Vector w;
    for (auto c : j) w.push_back(v[c]);
    restricted.push_back(std::move(w));
  }
  Matrix w = restricted.empty() ? Matrix(a.mode(), 0, j.size(), tol)
                                : Matrix::from_rows(a.mode(), restricted, tol);
  KernelBasis annihilator = kernel_basis(w);
  if (annihilator.vectors.empty()) return Matrix(a.mode(), 1, j.size(), tol);
  return Matrix::from_rows(a.mode(), annihilator.vectors, tol);
}

}  // namespace kbound
