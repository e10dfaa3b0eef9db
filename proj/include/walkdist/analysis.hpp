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

#ifndef WALKDIST_ANALYSIS_HPP_
#define WALKDIST_ANALYSIS_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "walkdist/graph.hpp"
#include "walkdist/walks.hpp"

namespace walkdist {

// The four mutually exclusive limiting regimes of W_k.
enum class Category { kW1, kWHalf, kW0, kBeta1 };

// Clauses under which W_k is eventually constant when beta < 1.
enum class ConstancyClause {
  kBipartiteOddDistance,  // alpha = beta = 0, bipartite, d(u, v) odd
  kHalfLaziness,          // alpha = 0, beta = 1/2, bipartite
  kSameNeighborhood,      // alpha = beta = 0, N(u) = N(v)
  kAdjacentTwins,         // alpha = beta = 1/(deg u + 1), u ~ v, twins
  kIdentical,             // alpha = beta, u = v
};

const char* category_name(Category c);
const char* clause_name(ConstancyClause c);

struct ClassificationReport {
  Category category = Category::kW0;
  bool converges = true;
  double limit_even = 0.0;
  double limit_odd = 0.0;
  std::optional<double> limit;
  // Empty when beta = 1: no characterization is available there.
  std::optional<bool> constancy_predicted;
  std::optional<ConstancyClause> constancy_reason;
  // Alternating degree-distance sum; set when beta = 1 on a bipartite graph.
  std::optional<double> divergence_sum;
  bool gluvab = false;
};

// Closed-form classification and limits. Never simulates.
ClassificationReport classify(const Guvab& g, const Tolerances& tol = {});

// sum_w (-1)^{d(v,w)} d(v,w) deg(w).
double divergence_sum(const Graph& g, const Metric& metric, Vertex v);

// Throws kBetaOne when beta == 1.
std::pair<bool, std::optional<ConstancyClause>> predict_constancy(
    const Guvab& g);

bool detect_gluvab(const Guvab& g, const Metric& metric);

struct SpectralData {
  std::vector<double> eigs_alpha;
  std::vector<double> eigs_beta;
  double lambda_max = 0.0;  // largest |lambda| < 1 over both spectra
};

SpectralData spectral_data(const Guvab& g);

struct RhoBounds {
  double lower = 0.0;
  double upper = 0.0;
  std::optional<int> empirical;
};

inline constexpr int kRhoConfirmWindow = 50;

// Bounds on the first index from which W_k stays at 1. The empirical value
// is the first N with W_k = 1 for every k in [N, N + confirm]; it is empty
// when none is found with N + confirm <= k_cap. Throws kWrongCategory unless
// the Guvab is in the W = 1 category.
RhoBounds rho_bounds(const Guvab& g, const SpectralData& spectral,
                     const Metric& metric, const Tolerances& tol = {},
                     int k_cap = 2000, int confirm = kRhoConfirmWindow);

struct SeriesPoint {
  int k = 0;
  double w = 0.0;
  // Magnitude of the terms xi_k was computed from; deviations below
  // kRateFloor * scale are rounding noise.
  double scale = 1.0;
};

enum class Parity { kEven, kOdd };

struct RateEstimate {
  double c = 0.0;
  double lambda = 0.0;
  Parity parity = Parity::kEven;
  double residual = 0.0;
  int points = 0;
};

inline constexpr double kRateFloor = 1e-13;
inline constexpr int kRateMinPoints = 6;

// Least-squares fit of log|W_k - limit| against k over the points of the
// requested parity whose deviation exceeds the numerical floor
// kRateFloor * scale. The fit uses
// the later half of those points so that subdominant modes have decayed.
// Throws kEventuallyConstant when no deviation is above the floor and
// kTooFewPoints when fewer than six are.
RateEstimate fit_rate(std::span<const SeriesPoint> series, double limit,
                      Parity parity);

// W_k for k = 0..k_max.
std::vector<SeriesPoint> wk_series(const Guvab& g, int k_max,
                                   const Tolerances& tol = {});

// W_1 = ... = W_{k_max} within tol.gap. Throws kWrongCategory unless the
// category is W0 or BETA1.
bool one_step_constancy_check(const Guvab& g, int k_max,
                              const Tolerances& tol = {});

// Decides eventual constancy from simulation plus the per-category
// structure: constancy from k = 1 for W0, a finite confirmed rho for W1, and
// an exact tail at 1/2 for W_HALF. Throws kBetaOne when beta == 1.
bool observed_constancy(const Guvab& g, int k_max, const Tolerances& tol = {});

// True when |lambda| matches |x| for some eigenvalue x of either walk.
bool matches_spectrum(double lambda, const SpectralData& spectral, double tol);

// xi_k(w) = sum_i c_i^w lambda_i^k for k >= 1 over the distinct nonzero
// eigenvalues of both walks; coefficients are projections onto the
// eigenvectors of the symmetrized walk.
struct SpectralExpansion {
  std::vector<double> eigenvalues;                // distinct, nonzero
  std::vector<std::vector<double>> coefficients;  // [w][i]

  double evaluate(Vertex w, int k) const;
};

SpectralExpansion spectral_expansion(const Guvab& g,
                                     double cluster_tol = 1e-9);

}  // namespace walkdist

#endif  // WALKDIST_ANALYSIS_HPP_
