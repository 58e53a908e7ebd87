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

#pragma once

#include <map>
#include <vector>

#include "kbound/incidence.hpp"
#include "kbound/matrix.hpp"

namespace kbound {

// Column matroid of a representation matrix. Element ids label the columns
// and are kept when taking minors, so witnesses always name original
// columns. Ground ids are strictly increasing.
class LinearMatroid {
 public:
  LinearMatroid() = default;
  // Ground ids default to 0..n-1.
  explicit LinearMatroid(Matrix rep, IndexList ground = {});

  const Matrix& rep() const { return rep_; }
  const IndexList& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  std::size_t rank() const { return rank_; }
  const IndexList& loops() const { return loops_; }
  // Parallel classes of non-loops, each sorted, ordered by least id.
  const std::vector<IndexList>& parallel_classes() const { return classes_; }
  std::size_t simple_size() const { return classes_.size(); }
  bool is_simple() const { return loops_.empty() && classes_.size() == ground_.size(); }

  // Column position of an element id; throws if absent.
  std::size_t position(std::size_t id) const;
  bool contains(std::size_t id) const;
  bool is_loop(std::size_t id) const;
  bool is_independent(const IndexList& ids) const;
  // Rank of a set of element ids.
  std::size_t rank_of(const IndexList& ids) const;

 private:
  Matrix rep_;
  IndexList ground_;
  std::size_t rank_ = 0;
  IndexList loops_;
  std::vector<IndexList> classes_;
};

// Matroid of [1; V] for the points V of S.
LinearMatroid from_affine(const PointConfig& s);

// M / e. Requires rank(M) >= 2 and e not a loop.
LinearMatroid contract(const LinearMatroid& m, std::size_t id);
LinearMatroid contract_all(const LinearMatroid& m, const IndexList& ids);

struct Simplification {
  LinearMatroid matroid;
  // Every non-loop id mapped to the representative of its class.
  std::map<std::size_t, std::size_t> class_map;
  IndexList removed_loops;
};

// Drops loops and keeps the least id of every parallel class.
Simplification simplify(const LinearMatroid& m);

struct MinorStep {
  std::size_t element = 0;
  std::size_t simple_size = 0;
};

struct MinorChain {
  std::size_t n = 0;
  std::size_t start_rank = 0;
  std::vector<MinorStep> steps;
  LinearMatroid final;
  // prod_{i=2}^{d-1} f(i) and its ceiling times n.
  mpq_class product;
  mpz_class size_bound;
  bool bound_holds = true;
};

// Greedy contraction chain down to rank 2: at every step contract the
// element maximizing |si(M/e)| (least id on ties) and simplify. Non-simple
// input is simplified first and n counts the simple elements. Throws
// BoundViolation when the final size is below the bound and enforce is set.
MinorChain minor_chain_to_rank2(const LinearMatroid& m, bool enforce = true);

// The first `steps` greedy choices of minor_chain_to_rank2.
IndexList greedy_contraction_sequence(const LinearMatroid& m, std::size_t steps);

struct LongestLine {
  std::size_t length = 0;
  IndexList contracted;
};

// Largest l such that U_{2,l} is a minor: max over independent sets C of
// size rank - 2 of |si(M / C)|. Requires rank >= 2, rank <= 6, n <= 20.
LongestLine longest_line_minor(const LinearMatroid& m);

struct OrdinaryFlats {
  std::size_t k = 0;
  IndexList contracted;       // e_1 .. e_{k-1}
  IndexList flat;             // H = closure of the contracted set
  IndexList ordinary_points;  // v with H + v an ordinary k-flat
};

// Runs k - 1 greedy steps and lists the elements v whose k-flat H + v
// contains no other element, i.e. the singleton parallel classes of M / H.
OrdinaryFlats count_ordinary_flats(const LinearMatroid& m, std::size_t k);

struct FlatReport {
  OrdinaryFlats flats;
  mpq_class epsilon;
  mpq_class parameter;  // 2 prod_{i=1}^{k-1} f(d - i) - 1
  mpz_class required;   // ceil(epsilon n)
  bool pass = false;
};

// Requires 2 <= k <= rank - 1 and 2 prod_{i=1}^{k-1} f(d-i) - 1 >= epsilon
// with d = rank(M); throws PreconditionError otherwise.
FlatReport find_flat_with_ordinary(const LinearMatroid& m, std::size_t k, const mpq_class& epsilon);

}  // namespace kbound
