// Copyright 2026 The walkdist Authors
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

#ifndef WALKDIST_SWEEP_HPP_
#define WALKDIST_SWEEP_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walkdist/analysis.hpp"
#include "walkdist/walks.hpp"

namespace walkdist {

struct SweepOptions {
  int n_max = 3;
  std::vector<double> grid = {0.0, 0.25, 1.0 / 3.0, 0.5, 0.75, 1.0};
  int k_max = 400;
  Tolerances tol;
  double limit_tol = 1e-5;
  double rate_tol = 1e-3;
  int threads = 0;  // 0: hardware concurrency
};

struct SweepRow {
  int graph_index = 0;
  int n = 0;
  std::string edges;  // "0-1 1-2 ..."
  Vertex u = 0;
  Vertex v = 0;
  double alpha = 0.0;
  double beta = 0.0;
  ClassificationReport report;
  double simulated_even = 0.0;  // W at the last even k <= k_max
  double simulated_odd = 0.0;   // W at the following odd k
  bool limits_ok = true;
  std::optional<bool> constancy_predicted;
  std::optional<bool> constancy_observed;
  bool constancy_ok = true;
  std::optional<double> lambda_even;
  std::optional<double> lambda_odd;
  bool rate_ok = true;

  bool consistent() const { return limits_ok && constancy_ok && rate_ok; }
};

struct SweepSummary {
  std::vector<SweepRow> rows;  // sorted by (graph, u, v, alpha, beta)
  std::vector<std::pair<double, double>> skipped;  // (alpha, beta) with alpha > beta
  int discrepancies = 0;
};

// Checks every Guvab on every connected graph with 2..n_max vertices against
// the closed-form classification, constancy characterization and spectral
// rate membership. Throws kLimitExceeded for n_max > 6.
SweepSummary run_sweep(const SweepOptions& options);

// Analysis of a single Guvab as performed by the sweep.
SweepRow evaluate_guvab(const Guvab& g, const SweepOptions& options);

}  // namespace walkdist

#endif  // WALKDIST_SWEEP_HPP_
