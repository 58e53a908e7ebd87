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

#include "kbound/matroid.hpp"

#include <algorithm>
#include <set>

#include "kbound/condition.hpp"

namespace kbound {

namespace {

double float_tol(const Matrix& m) { return m.exact() ? -1.0 : m.tol(); }

}  // namespace

LinearMatroid::LinearMatroid(Matrix rep, IndexList ground)
    : rep_(std::move(rep)), ground_(std::move(ground)) {
  if (ground_.empty()) {
    for (std::size_t j = 0; j < rep_.cols(); ++j) ground_.push_back(j);
  }
  if (ground_.size() != rep_.cols()) throw PreconditionError("ground set size differs from columns");
  for (std::size_t j = 1; j < ground_.size(); ++j) {
    if (ground_[j] <= ground_[j - 1]) throw PreconditionError("ground ids must be increasing");
  }
  rank_ = kbound::rank(rep_);
  const double tol = rep_.exact() ? 0.0 : rep_.tol();
  std::vector<Vector> reps;
  for (std::size_t j = 0; j < rep_.cols(); ++j) {
    if (rep_.column_is_zero(j)) {
      loops_.push_back(ground_[j]);
      continue;
    }
    Vector col = rep_.column(j);
    std::size_t c = 0;
    for (; c < classes_.size(); ++c) {
      if (parallel(reps[c], col, tol)) break;
    }
    if (c == classes_.size()) {
      classes_.push_back({ground_[j]});
      reps.push_back(std::move(col));
    } else {
      classes_[c].push_back(ground_[j]);
    }
  }
}

std::size_t LinearMatroid::position(std::size_t id) const {
  auto it = std::lower_bound(ground_.begin(), ground_.end(), id);
  if (it == ground_.end() || *it != id) {
    throw PreconditionError("element " + std::to_string(id) + " is not in the ground set");
  }
  return static_cast<std::size_t>(it - ground_.begin());
}

bool LinearMatroid::contains(std::size_t id) const {
  return std::binary_search(ground_.begin(), ground_.end(), id);
}

bool LinearMatroid::is_loop(std::size_t id) const {
  return std::binary_search(loops_.begin(), loops_.end(), id);
}

std::size_t LinearMatroid::rank_of(const IndexList& ids) const {
  if (ids.empty()) return 0;
  IndexList cols;
  for (auto id : ids) cols.push_back(position(id));
  return kbound::rank(rep_.select_columns(cols));
}

bool LinearMatroid::is_independent(const IndexList& ids) const { return rank_of(ids) == ids.size(); }

LinearMatroid from_affine(const PointConfig& s) {
  double tol = s.exact() ? -1.0 : kDefaultFloatTol;
  Matrix rep(s.mode(), s.dim() + 1, s.size(), tol);
  for (std::size_t j = 0; j < s.size(); ++j) {
    rep(0, j) = Scalar::one(s.mode());
    for (std::size_t i = 0; i < s.dim(); ++i) rep(i + 1, j) = s.point(j)[i];
  }
  return LinearMatroid(std::move(rep));
}

LinearMatroid contract(const LinearMatroid& m, std::size_t id) {
  if (m.rank() < 2) throw PreconditionError("contraction needs rank >= 2");
  if (m.is_loop(id)) throw PreconditionError("cannot contract loop " + std::to_string(id));
  const Matrix& a = m.rep();
  const std::size_t p = m.position(id);
  std::size_t pivot = a.rows();
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a.exact()) {
      if (!a(i, p).is_zero()) {
        pivot = i;
        break;
      }
    } else if (a(i, p).magnitude() > best) {
      best = a(i, p).magnitude();
      pivot = i;
    }
  }
  Matrix out(a.mode(), a.rows() - 1, a.cols() - 1, float_tol(a));
  std::size_t r = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i == pivot) continue;
    Scalar f = a(i, p) / a(pivot, p);
    std::size_t c = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j == p) continue;
      out(r, c++) = f.is_zero() ? a(i, j) : a(i, j) - f * a(pivot, j);
    }
    ++r;
  }
  IndexList ground;
  for (auto g : m.ground()) {
    if (g != id) ground.push_back(g);
  }
  return LinearMatroid(std::move(out), std::move(ground));
}

LinearMatroid contract_all(const LinearMatroid& m, const IndexList& ids) {
  LinearMatroid cur = m;
  for (auto id : ids) cur = contract(cur, id);
  return cur;
}

Simplification simplify(const LinearMatroid& m) {
  Simplification out;
  out.removed_loops = m.loops();
  IndexList keep_cols, keep_ids;
  for (const auto& cls : m.parallel_classes()) {
    keep_ids.push_back(cls.front());
    for (auto id : cls) out.class_map[id] = cls.front();
  }
  std::sort(keep_ids.begin(), keep_ids.end());
  for (auto id : keep_ids) keep_cols.push_back(m.position(id));
  out.matroid = LinearMatroid(m.rep().select_columns(keep_cols), keep_ids);
  return out;
}

namespace {

// One greedy step on a simple matroid of rank >= 3.
std::pair<std::size_t, LinearMatroid> greedy_step(const LinearMatroid& m) {
  std::size_t best_id = 0;
  std::size_t best_size = 0;
  LinearMatroid best;
  bool found = false;
  for (auto id : m.ground()) {
    if (m.is_loop(id)) continue;
    LinearMatroid s = simplify(contract(m, id)).matroid;
    if (!found || s.size() > best_size) {
      found = true;
      best_id = id;
      best_size = s.size();
      best = std::move(s);
    }
  }
  if (!found) throw PreconditionError("no element to contract");
  return {best_id, std::move(best)};
}

}  // namespace

MinorChain minor_chain_to_rank2(const LinearMatroid& m, bool enforce) {
  LinearMatroid cur = simplify(m).matroid;
  if (cur.rank() < 3) throw PreconditionError("minor chain requires rank >= 3");
  MinorChain chain;
  chain.n = cur.size();
  chain.start_rank = cur.rank();
  chain.product = 1;
  for (std::size_t i = 2; i < chain.start_rank; ++i) {
    chain.product *= f_lower_bound(i);
  }
  chain.size_bound = ceil_rational(chain.product * mpq_class(static_cast<unsigned long>(chain.n)));
  while (cur.rank() > 2) {
    auto [id, next] = greedy_step(cur);
    chain.steps.push_back({id, next.size()});
    cur = std::move(next);
  }
  chain.final = std::move(cur);
  chain.bound_holds = mpz_class(static_cast<unsigned long>(chain.final.size())) >= chain.size_bound;
  if (enforce && !chain.bound_holds) {
    throw BoundViolation("rank-2 minor has " + std::to_string(chain.final.size()) +
                         " elements, below the bound " + chain.size_bound.get_str());
  }
  return chain;
}

IndexList greedy_contraction_sequence(const LinearMatroid& m, std::size_t steps) {
  LinearMatroid cur = simplify(m).matroid;
  IndexList out;
  for (std::size_t s = 0; s < steps; ++s) {
    if (cur.rank() < 3) throw PreconditionError("greedy sequence would drop below rank 2");
    auto [id, next] = greedy_step(cur);
    out.push_back(id);
    cur = std::move(next);
  }
  return out;
}

LongestLine longest_line_minor(const LinearMatroid& m) {
  if (m.rank() < 2) throw PreconditionError("longest line needs rank >= 2");
  if (m.rank() > 6 || m.size() > kMaxEnumCols) {
    throw GuardExceeded("longest_line_minor: guard is rank <= 6 and n <= 20");
  }
  LongestLine best;
  if (m.rank() == 2) {
    best.length = m.simple_size();
    return best;
  }
  const std::size_t c = m.rank() - 2;
  std::set<IndexList> seen_closures;
  for_each_combination(m.size(), c, [&](const IndexList& pos) {
    IndexList ids;
    for (auto p : pos) ids.push_back(m.ground()[p]);
    if (!m.is_independent(ids)) return true;
    LinearMatroid minor = contract_all(m, ids);
    IndexList closure = ids;
    closure.insert(closure.end(), minor.loops().begin(), minor.loops().end());
    std::sort(closure.begin(), closure.end());
    if (!seen_closures.insert(closure).second) return true;
    if (minor.simple_size() > best.length) {
      best.length = minor.simple_size();
      best.contracted = ids;
    }
    return true;
  });
  return best;
}

OrdinaryFlats count_ordinary_flats(const LinearMatroid& m, std::size_t k) {
  if (k < 2 || k + 1 > m.rank()) throw PreconditionError("ordinary flats need 2 <= k <= rank - 1");
  OrdinaryFlats out;
  out.k = k;
  out.contracted = greedy_contraction_sequence(m, k - 1);
  LinearMatroid minor = contract_all(m, out.contracted);
  out.flat = out.contracted;
  out.flat.insert(out.flat.end(), minor.loops().begin(), minor.loops().end());
  std::sort(out.flat.begin(), out.flat.end());
  for (const auto& cls : minor.parallel_classes()) {
    if (cls.size() == 1) out.ordinary_points.push_back(cls.front());
  }
  return out;
}

FlatReport find_flat_with_ordinary(const LinearMatroid& m, std::size_t k,
                                   const mpq_class& epsilon) {
  const std::size_t d = m.rank();
  if (k < 2 || k + 1 > d) throw PreconditionError("ordinary flats need 2 <= k <= rank - 1");
  if (epsilon < 0 || epsilon > 1) throw PreconditionError("epsilon must lie in [0, 1]");
  FlatReport rep;
  mpq_class prod = 1;
  for (std::size_t i = 1; i <= k - 1; ++i) prod *= f_lower_bound(d - i);
  rep.parameter = 2 * prod - 1;
  rep.epsilon = epsilon;
  if (rep.parameter < epsilon) {
    throw PreconditionError("2 prod f(d-i) - 1 = " + rational_to_string(rep.parameter) +
                            " is below epsilon = " + rational_to_string(epsilon));
  }
  rep.flats = count_ordinary_flats(m, k);
  rep.required = ceil_rational(epsilon * mpq_class(static_cast<unsigned long>(m.simple_size())));
  rep.pass = mpz_class(static_cast<unsigned long>(rep.flats.ordinary_points.size())) >= rep.required;
  return rep;
}

}  // namespace kbound
