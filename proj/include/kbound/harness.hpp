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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kbound/json_io.hpp"

namespace kbound {

struct CheckResult {
  std::string suite;
  std::string name;
  std::string paper_statement;
  std::string instance_descriptor;
  Json claimed_bound;
  Json observed;
  bool pass = false;
  // Reported-only checks (bounds with unspecified constants) never fail a run.
  bool theorem_backed = true;
  std::int64_t runtime_ms = 0;
};

struct CheckOutcome {
  std::string instance_descriptor;
  Json claimed_bound;
  Json observed;
  bool pass = false;
};

struct CheckSpec {
  std::string name;
  std::string statement;
  bool theorem_backed = true;
  // Receives a seed derived from the run seed and the check name.
  std::function<CheckOutcome(std::uint64_t seed)> run;
};

struct SuiteSpec {
  std::string name;
  std::string description;
  std::vector<CheckSpec> checks;
};

// All suites in registration order.
const std::vector<SuiteSpec>& registered_suites();
std::vector<std::string> suite_names();

// Runs the named suites ("all" selects every suite). Checks run in parallel;
// results come back in registration order. A check that throws is reported
// as failed with the error message as its observation. Throws
// PreconditionError for an unknown suite name.
std::vector<CheckResult> verify_suites(const std::vector<std::string>& names, std::uint64_t seed);

// {"report_version": 1, "seed", "suites", "checks": [CheckResult...]}
Json report_to_json(const std::vector<CheckResult>& results, std::uint64_t seed,
                    const std::vector<std::string>& suites);

bool any_theorem_failure(const std::vector<CheckResult>& results);

// Conservative exact comparisons against pi using the lower bound
// 333/106 < pi; a true result proves the inequality.
// kappa >= c / pi, tested as kappa^2 >= (106 c / 333)^2.
bool kappa_at_least_c_over_pi(const mpq_class& kappa_sq, const mpq_class& c);
// x <= pi c kappa for x, c >= 0, tested as x^2 <= (333 c / 106)^2 kappa^2.
bool at_most_pi_c_kappa(const mpq_class& x, const mpq_class& c, const mpq_class& kappa_sq);

}  // namespace kbound
