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

#include "walkdist/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "walkdist/error.hpp"

namespace walkdist {

namespace {

std::string edge_string(const Graph& g) {
  std::string out;
  for (const auto& [a, b] : g.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(a) + "-" + std::to_string(b);
  }
  return out;
}

std::optional<double> try_rate(std::span<const SeriesPoint> series,
                               double limit, Parity parity,
                               const SpectralData& spectral, double rate_tol,
                               bool& ok) {
  try {
    const auto rate = fit_rate(series, limit, parity);
    if (!matches_spectrum(rate.lambda, spectral, rate_tol)) ok = false;
    return rate.lambda;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEventuallyConstant &&
        e.code() != ErrorCode::kTooFewPoints) {
      throw;
    }
  }
  return std::nullopt;
}

}  // namespace

SweepRow evaluate_guvab(const Guvab& g, const SweepOptions& options) {
  SweepRow row;
  row.n = g.graph.vertex_count();
  row.edges = edge_string(g.graph);
  row.u = g.u;
  row.v = g.v;
  row.alpha = g.alpha;
  row.beta = g.beta;
  row.report = classify(g, options.tol);

  const int last_even = options.k_max - options.k_max % 2;
  const auto series = wk_series(g, last_even + 1, options.tol);
  row.simulated_even = series[last_even].w;
  row.simulated_odd = series[last_even + 1].w;
  row.limits_ok =
      std::abs(row.simulated_even - row.report.limit_even) <= options.limit_tol &&
      std::abs(row.simulated_odd - row.report.limit_odd) <= options.limit_tol;

  if (g.beta < 1.0) {
    row.constancy_predicted = row.report.constancy_predicted;
    row.constancy_observed = observed_constancy(g, 40, options.tol);
    row.constancy_ok = row.constancy_predicted == row.constancy_observed;
  }

  const auto spectral = spectral_data(g);
  row.lambda_even = try_rate(series, row.report.limit_even, Parity::kEven,
                             spectral, options.rate_tol, row.rate_ok);
  row.lambda_odd = try_rate(series, row.report.limit_odd, Parity::kOdd,
                            spectral, options.rate_tol, row.rate_ok);
  return row;
}

SweepSummary run_sweep(const SweepOptions& options) {
  if (options.n_max > kMaxEnumerationVertices) {
    throw Error(ErrorCode::kLimitExceeded,
                "n_max must be at most " + std::to_string(kMaxEnumerationVertices));
  }
  if (options.k_max < 0) throw Error(ErrorCode::kInvalidArgument, "k_max must be >= 0");
  for (double x : options.grid) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw Error(ErrorCode::kLazinessOutOfRange, "grid values must lie in [0, 1]");
    }
  }
  std::vector<double> grid = options.grid;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  SweepSummary summary;
  std::vector<std::pair<double, double>> pairs;
  for (double a : grid) {
    for (double b : grid) {
      if (a <= b) {
        pairs.emplace_back(a, b);
      } else {
        summary.skipped.emplace_back(a, b);
      }
    }
  }

  struct Job {
    int graph_index;
    Guvab guvab;
  };
  std::vector<Job> jobs;
  int graph_index = 0;
  enumerate_connected_graphs(options.n_max, [&](const Graph& g) {
    const int index = graph_index++;
    if (g.vertex_count() < 2) return;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (const auto& [a, b] : pairs) {
          jobs.push_back({index, make_guvab(g, u, v, a, b)});
        }
      }
    }
  });

  summary.rows.resize(jobs.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (size_t i = next++; i < jobs.size() && !failed; i = next++) {
      try {
        summary.rows[i] = evaluate_guvab(jobs[i].guvab, options);
        summary.rows[i].graph_index = jobs[i].graph_index;
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  int threads = options.threads > 0
                    ? options.threads
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (const auto& row : summary.rows) summary.discrepancies += !row.consistent();
  return summary;
}

}  // namespace walkdist
