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

#include "kbound/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kbound {

namespace {

double resolve_tol(FieldMode mode, double tol) {
  if (is_exact(mode)) return 0.0;
  if (tol < 0.0) return kDefaultFloatTol;
  if (tol == 0.0) throw PreconditionError("complex_float mode requires tol > 0");
  return tol;
}

}  // namespace

Matrix::Matrix(FieldMode mode, std::size_t rows, std::size_t cols, double tol)
    : mode_(mode),
      rows_(rows),
      cols_(cols),
      tol_(resolve_tol(mode, tol)),
      data_(rows * cols, Scalar::zero(mode)) {}

Matrix Matrix::from_rows(FieldMode mode, const std::vector<Vector>& rows, double tol) {
  std::size_t n = rows.empty() ? 0 : rows.front().size();
  Matrix m(mode, rows.size(), n, tol);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j].mode() != mode) throw FieldMismatch("matrix entry has the wrong field mode");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_columns(FieldMode mode, std::size_t rows, const std::vector<Vector>& cols,
                            double tol) {
  Matrix m(mode, rows, cols.size(), tol);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw PreconditionError("column has the wrong length");
    for (std::size_t i = 0; i < rows; ++i) {
      if (cols[j][i].mode() != mode) throw FieldMismatch("matrix entry has the wrong field mode");
      m(i, j) = cols[j][i];
    }
  }
  return m;
}

Matrix Matrix::from_integers(const std::vector<std::vector<long>>& rows) {
  std::size_t n = rows.empty() ? 0 : rows.front().size();
  Matrix m(FieldMode::kRational, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar::integer(rows[i][j]);
  }
  return m;
}

Matrix Matrix::identity(FieldMode mode, std::size_t n, double tol) {
  Matrix m(mode, n, n, tol);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(mode);
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const {
  Matrix m(mode_, rows_, idx.size(), exact() ? -1.0 : tol_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
  }
  return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix m(mode_, idx.size(), cols_, exact() ? -1.0 : tol_);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(idx[k], j);
  }
  return m;
}

Matrix Matrix::submatrix(std::span<const std::size_t> rows,
                         std::span<const std::size_t> cols) const {
  Matrix m(mode_, rows.size(), cols.size(), exact() ? -1.0 : tol_);
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) m(a, b) = (*this)(rows[a], cols[b]);
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(mode_, cols_, rows_, exact() ? -1.0 : tol_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  }
  return m;
}

Matrix Matrix::conj_transpose() const {
  Matrix m(mode_, cols_, rows_, exact() ? -1.0 : tol_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j).conj();
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("matrix product dimension mismatch");
  if (mode_ != o.mode_) throw FieldMismatch("matrix product mixes field modes");
  Matrix m(mode_, rows_, o.cols_, exact() ? -1.0 : tol_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
    }
  }
  return m;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw PreconditionError("matrix-vector dimension mismatch");
  Vector out(rows_, Scalar::zero(mode_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

Matrix Matrix::to_float(double tol) const {
  Matrix m(FieldMode::kComplexFloat, rows_, cols_, tol);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = Scalar::complex(data_[i].to_complex());
  return m;
}

double Matrix::max_magnitude() const {
  double best = 0.0;
  for (const auto& x : data_) best = std::max(best, x.magnitude());
  return best;
}

bool Matrix::column_is_zero(std::size_t j) const {
  double scale = exact() ? 0.0 : max_magnitude();
  for (std::size_t i = 0; i < rows_; ++i) {
    const Scalar& x = (*this)(i, j);
    if (exact() ? !x.is_zero() : x.magnitude() > tol_ * scale) return false;
  }
  return true;
}

bool Matrix::all_integer() const {
  if (mode_ != FieldMode::kRational) return false;
  return std::all_of(data_.begin(), data_.end(),
                     [](const Scalar& x) { return x.as_rational().get_den() == 1; });
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.mode_ == b.mode_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(const Matrix& input) {
  Matrix m = input;
  const std::size_t d = m.rows();
  const std::size_t n = m.cols();
  const bool exact = m.exact();
  const double tol = m.tol();
  RrefResult result;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < d; ++c) {
    std::size_t pivot = d;
    if (exact) {
      for (std::size_t i = r; i < d; ++i) {
        if (!m(i, c).is_zero()) {
          pivot = i;
          break;
        }
      }
    } else {
      double best = 0.0;
      double col_max = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        double mag = m(i, c).magnitude();
        col_max = std::max(col_max, mag);
        if (i >= r && mag > best) {
          best = mag;
          pivot = i;
        }
      }
      double orig_max = 0.0;
      for (std::size_t i = 0; i < d; ++i) orig_max = std::max(orig_max, input(i, c).magnitude());
      if (best == 0.0 || best < tol * std::max(col_max, orig_max)) pivot = d;
    }
    if (pivot == d) {
      if (!exact) {
        for (std::size_t i = r; i < d; ++i) m(i, c) = Scalar::zero(m.mode());
      }
      continue;
    }
    if (pivot != r) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(r, j));
    }
    Scalar inv = Scalar::one(m.mode()) / m(r, c);
    for (std::size_t j = c; j < n; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < n; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
      m(i, c) = Scalar::zero(m.mode());
    }
    result.pivot_cols.push_back(c);
    ++r;
  }
  result.rank = r;
  result.echelon = std::move(m);
  return result;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Vector normalize_leading(Vector v, double tol) {
  double scale = 0.0;
  for (const auto& x : v) scale = std::max(scale, x.magnitude());
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool nonzero = tol > 0.0 ? v[i].magnitude() > tol * scale : !v[i].is_zero();
    if (nonzero) {
      Scalar lead = v[i];
      for (auto& x : v) x /= lead;
      return v;
    }
  }
  return v;
}

KernelBasis kernel_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  KernelBasis kb;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols(), Scalar::zero(m.mode()));
    v[f] = Scalar::one(m.mode());
    for (std::size_t r = 0; r < rr.rank; ++r) v[rr.pivot_cols[r]] = -rr.echelon(r, f);
    kb.vectors.push_back(normalize_leading(std::move(v), m.tol()));
  }
  return kb;
}

Scalar det(const Matrix& input) {
  if (input.rows() != input.cols()) throw PreconditionError("det requires a square matrix");
  const std::size_t n = input.rows();
  const FieldMode mode = input.mode();
  if (n == 0) return Scalar::one(mode);
  Matrix m = input;
  bool negate = false;
  if (input.exact()) {
    Scalar prev = Scalar::one(mode);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k).is_zero()) {
        std::size_t swap = k + 1;
        while (swap < n && m(swap, k).is_zero()) ++swap;
        if (swap == n) return Scalar::zero(mode);
        for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
        negate = !negate;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        }
      }
      prev = m(k, k);
    }
    Scalar result = m(n - 1, n - 1);
    return negate ? -result : result;
  }
  std::complex<double> acc(1.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).magnitude() > m(pivot, k).magnitude()) pivot = i;
    }
    if (m(pivot, k).is_zero()) return Scalar::zero(mode);
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      negate = !negate;
    }
    std::complex<double> p = m(k, k).to_complex();
    acc *= p;
    for (std::size_t i = k + 1; i < n; ++i) {
      std::complex<double> f = m(i, k).to_complex() / p;
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = Scalar::complex(m(i, j).to_complex() - f * m(k, j).to_complex());
      }
    }
  }
  return Scalar::complex(negate ? -acc : acc);
}

void for_each_subdet(const Matrix& m, std::size_t r,
                     const std::function<void(const Subdeterminant&)>& fn) {
  if (r > std::min(m.rows(), m.cols())) {
    throw PreconditionError("subdeterminant order exceeds matrix dimensions");
  }
  for_each_combination(m.rows(), r, [&](const IndexList& rows) {
    for_each_combination(m.cols(), r, [&](const IndexList& cols) {
      fn(Subdeterminant{rows, cols, det(m.submatrix(rows, cols))});
      return true;
    });
    return true;
  });
}

std::vector<Subdeterminant> all_subdets(const Matrix& m, std::size_t r) {
  std::vector<Subdeterminant> out;
  for_each_subdet(m, r, [&](const Subdeterminant& s) { out.push_back(s); });
  return out;
}

Scalar inner(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw PreconditionError("inner product dimension mismatch");
  if (a.empty()) return Scalar();
  Scalar acc = Scalar::zero(a.front().mode());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].conj() * b[i];
  return acc;
}

Scalar norm_sq(const Vector& v) {
  if (v.empty()) return Scalar();
  Scalar acc = Scalar::zero(v.front().mode());
  for (const auto& x : v) acc += x.abs2();
  return acc;
}

Scalar dist_sq_to_span(const Vector& v, const std::vector<Vector>& basis, double tol) {
  if (v.empty()) return Scalar();
  const FieldMode mode = v.front().mode();
  const double mtol = is_exact(mode) ? -1.0 : (tol > 0.0 ? tol : kDefaultFloatTol);
  if (basis.empty()) return norm_sq(v);
  for (const auto& b : basis) {
    if (b.size() != v.size()) throw PreconditionError("span vectors have mismatched dimension");
  }
  Matrix bm = Matrix::from_columns(mode, v.size(), basis, mtol);
  RrefResult rr = rref(bm);
  std::vector<Vector> indep;
  for (auto c : rr.pivot_cols) indep.push_back(basis[c]);
  const std::size_t k = indep.size();
  if (k == 0) return norm_sq(v);
  // Solve the Gram system G c = B^* v through the augmented echelon form.
  Matrix aug(mode, k, k + 1, mtol);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = inner(indep[i], indep[j]);
    aug(i, k) = inner(indep[i], v);
  }
  RrefResult gr = rref(aug);
  Vector residual = v;
  for (std::size_t i = 0; i < k; ++i) {
    const Scalar& coeff = gr.echelon(i, k);
    for (std::size_t t = 0; t < v.size(); ++t) residual[t] -= coeff * indep[i][t];
  }
  Scalar d = norm_sq(residual);
  if (!is_exact(mode)) d = Scalar::complex({std::max(0.0, d.to_complex().real()), 0.0});
  return d;
}

bool is_zero_vector(const Vector& v, double tol, double scale) {
  for (const auto& x : v) {
    if (tol > 0.0 ? x.magnitude() > tol * scale : !x.is_zero()) return false;
  }
  return true;
}

bool parallel(const Vector& a, const Vector& b, double tol) {
  if (a.size() != b.size()) throw PreconditionError("parallel test dimension mismatch");
  double na = 0.0, nb = 0.0;
  std::size_t p = a.size();
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double mag = a[i].magnitude();
    na += mag * mag;
    nb += b[i].magnitude() * b[i].magnitude();
    if (tol > 0.0) {
      if (mag > best) {
        best = mag;
        p = i;
      }
    } else if (p == a.size() && !a[i].is_zero()) {
      p = i;
    }
  }
  na = std::sqrt(na);
  nb = std::sqrt(nb);
  if (tol > 0.0) {
    if (na == 0.0 || nb == 0.0 || best == 0.0) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::complex<double> minor =
          b[i].to_complex() * a[p].to_complex() - a[i].to_complex() * b[p].to_complex();
      if (std::abs(minor) > tol * na * nb) return false;
    }
    return true;
  }
  if (p == a.size() || is_zero_vector(b)) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] * a[p] != a[i] * b[p]) return false;
  }
  return true;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const IndexList&)>& fn) {
  if (k > n) return;
  IndexList idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    std::size_t num = n - k + i;
    if (result > std::numeric_limits<std::size_t>::max() / num) {
      return std::numeric_limits<std::size_t>::max();
    }
    result = result * num / i;
  }
  return result;
}

}  // namespace kbound
