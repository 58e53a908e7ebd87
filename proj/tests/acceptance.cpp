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

// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any
// criterion fails.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "kbound/harness.hpp"

int main() {
  const std::vector<std::pair<std::string, std::vector<std::string>>> criteria = {
      {"kappa oracle equivalence", {"kappa.circuit_vs_detratio"}},
      {"half-circle kappa", {"kappa.half_circle"}},
      {"complete-graph incidence", {"kappa.complete_graph"}},
      {"two-row kappa lower bound", {"kappa.two_row_bound"}},
      {"kappa <= Delta and kappa delta <= 1", {"kappa.le_delta_modularity", "kappa.delta_product"}},
      {"maxlines bounds and grid", {"sg.maxlines", "sg.grid"}},
      {"minor chain and n <= pi d^4 kappa", {"chain.bound", "main_kappa.envelope"}},
      {"Dowling sizes and longest lines", {"chain.dowling"}},
      {"design pipeline and rank bound", {"design.built", "design.fixed"}},
      {"Sinkhorn scaling", {"scaling.example", "scaling.designs"}},
      {"Graver oracle, kappa <= g_inf, proximity chain",
       {"graver.oracle", "graver.kappa_le_ginf", "graver.proximity_chain"}},
      {"projection monotonicity", {"kappa.projection_monotone"}},
  };

  std::map<std::string, kbound::CheckResult> by_name;
  for (auto& r : kbound::verify_suites({"all"}, 1)) by_name[r.name] = r;

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = true;
    std::string detail;
    for (const auto& name : criteria[i].second) {
      auto it = by_name.find(name);
      bool pass = it != by_name.end() && it->second.pass;
      ok = ok && pass;
      std::string holds = it == by_name.end() ? "missing" : it->second.observed.value("holds", std::string("error"));
      detail += (detail.empty() ? "" : ", ") + name + " " + holds;
    }
    failed += !ok;
    std::printf("criterion %2zu %s: %s (%s)\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
