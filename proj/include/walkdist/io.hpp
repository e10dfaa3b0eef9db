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

#ifndef WALKDIST_IO_HPP_
#define WALKDIST_IO_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "walkdist/analysis.hpp"
#include "walkdist/sweep.hpp"
#include "walkdist/transport.hpp"
#include "walkdist/tree_transport.hpp"
#include "walkdist/walks.hpp"

namespace walkdist {

// Fixed 12 significant digits.
std::string format_real(double x);

std::string plan_to_csv(const TransportPlan& plan);
std::string potential_to_csv(const DualPotential& potential);

std::string report_to_json(const ClassificationReport& report);
std::string rate_to_json(const RateEstimate& rate);

// Columns k, W_k, |W_k - limit of k's parity|; followed by one '#' footer
// line holding the fitted rates as JSON when rates is nonempty.
std::string series_to_csv(std::span<const SeriesPoint> series,
                          const ClassificationReport& report,
                          std::span<const RateEstimate> rates);

// {"series": [{"k", "W_k", "deviation"}...], "report": .., "rates": [..]}.
std::string series_to_json(std::span<const SeriesPoint> series,
                           const ClassificationReport& report,
                           std::span<const RateEstimate> rates);

// {"value": .., "plan": [{"source", "target", "mass"}...], "potential": [..]}.
std::string transport_to_json(const TransportResult& result);

std::string sweep_to_csv(const SweepSummary& summary);

struct TreeTransportReport {
  int k = 0;
  Distribution xi;
  AlgorithmTrace trace;
  InequalityReport inequalities;
  double cost = 0.0;
  double half_l1 = 0.0;
  double wasserstein = 0.0;
};

TreeTransportReport tree_transport_report(const Guvab& g, int k,
                                          const Tolerances& tol = {});
std::string tree_transport_to_json(const TreeTransportReport& report);

// CSV rows "vertex,mass"; vertex is an index or a label of g.
Distribution parse_distribution_csv(const std::string& text, const Graph& g);

// Guvab configuration: {"graph": path, "u": .., "v": .., "alpha": ..,
// "beta": .., "k_max": .., "tol_mass": .., "tol_gap": ..}. u and v may be
// integers or vertex labels. Relative graph paths resolve against the
// directory holding the config file.
struct RunConfig {
  std::string graph_path;
  std::string u;
  std::string v;
  double alpha = 0.0;
  double beta = 0.0;
  int k_max = 50;
  Tolerances tol;
};

RunConfig parse_run_config(const std::string& text,
                           const std::string& base_dir = "");

std::string read_file(const std::string& path);

}  // namespace walkdist

#endif  // WALKDIST_IO_HPP_
