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

#include "walkdist/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "walkdist/error.hpp"
#include "walkdist/spectrum.hpp"
#include "walkdist/transport.hpp"
#include "walkdist/tree_transport.hpp"

namespace walkdist {

const char* category_name(Category c) {
  switch (c) {
    case Category::kW1: return "W1";
    case Category::kWHalf: return "W_HALF";
    case Category::kW0: return "W0";
    case Category::kBeta1: return "BETA1";
  }
  return "?";
}

const char* clause_name(ConstancyClause c) {
  switch (c) {
    case ConstancyClause::kBipartiteOddDistance: return "bipartite_odd_distance";
    case ConstancyClause::kHalfLaziness: return "half_laziness";
    case ConstancyClause::kSameNeighborhood: return "same_neighborhood";
    case ConstancyClause::kAdjacentTwins: return "adjacent_twins";
    case ConstancyClause::kIdentical: return "identical_walks";
  }
  return "?";
}

double divergence_sum(const Graph& g, const Metric& metric, Vertex v) {
  if (!g.contains(v)) throw Error(ErrorCode::kInvalidArgument, "bad vertex");
  double total = 0.0;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    const int d = metric(v, w);
    total += (d % 2 == 0 ? 1.0 : -1.0) * d * g.degree(w);
  }
  return total;
}

namespace {

// (2 / sum deg) * sum_{w on side} d(v, w) deg(w).
double point_to_tau(const Graph& g, const Metric& metric,
                    const BipartiteStructure& bip, Vertex v, int side) {
  double total = 0.0;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (bip.side[w] == side) total += metric(v, w) * g.degree(w);
  }
  return 2.0 * total / g.degree_sum();
}

double point_to_pi(const Graph& g, const Metric& metric, Vertex v) {
  double total = 0.0;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    total += metric(v, w) * g.degree(w);
  }
  return total / g.degree_sum();
}

std::vector<Vertex> neighbors_without(const Graph& g, Vertex w, Vertex skip) {
  std::vector<Vertex> out;
  for (Vertex t : g.neighbors(w)) {
    if (t != skip) out.push_back(t);
  }
  return out;
}

}  // namespace

std::pair<bool, std::optional<ConstancyClause>> predict_constancy(
    const Guvab& g) {
  if (g.beta == 1.0) {
    throw Error(ErrorCode::kBetaOne,
                "constancy is only characterized for beta < 1");
  }
  const Graph& graph = g.graph;
  const auto bip = bipartite_decompose(graph);
  const Metric metric(graph);
  const bool lazy_free = g.alpha == 0.0 && g.beta == 0.0;
  if (lazy_free && bip.is_bipartite && metric(g.u, g.v) % 2 == 1) {
    return {true, ConstancyClause::kBipartiteOddDistance};
  }
  if (g.alpha == 0.0 && g.beta == 0.5 && bip.is_bipartite) {
    return {true, ConstancyClause::kHalfLaziness};
  }
  const auto nu = graph.neighbors(g.u);
  const auto nv = graph.neighbors(g.v);
  if (lazy_free && std::equal(nu.begin(), nu.end(), nv.begin(), nv.end())) {
    return {true, ConstancyClause::kSameNeighborhood};
  }
  if (g.alpha == g.beta && graph.adjacent(g.u, g.v) &&
      std::abs(g.alpha - 1.0 / (graph.degree(g.u) + 1.0)) <= 1e-12 &&
      neighbors_without(graph, g.u, g.v) == neighbors_without(graph, g.v, g.u)) {
    return {true, ConstancyClause::kAdjacentTwins};
  }
  if (g.alpha == g.beta && g.u == g.v) {
    return {true, ConstancyClause::kIdentical};
  }
  return {false, std::nullopt};
}

bool detect_gluvab(const Guvab& g, const Metric& metric) {
  if (g.beta != 1.0) return false;
  const Graph& graph = g.graph;
  const int far = metric.eccentricity(g.v);
  if (2 * metric(g.u, g.v) != far) return false;
  for (Vertex x = 0; x < graph.vertex_count(); ++x) {
    const int dx = metric(x, g.v);
    int closer = 0, farther = 0;
    for (Vertex t : graph.neighbors(x)) {
      const int dt = metric(t, g.v);
      closer += dt < dx;
      farther += dt > dx;
    }
    if (dx == far && closer != graph.degree(x)) return false;
    if (dx > 0 && dx < far &&
        (2 * closer != graph.degree(x) || 2 * farther != graph.degree(x))) {
      return false;
    }
  }
  return true;
}

ClassificationReport classify(const Guvab& g, const Tolerances& tol) {
  const Graph& graph = g.graph;
  const Metric metric(graph);
  const auto bip = bipartite_decompose(graph);
  ClassificationReport report;

  if (g.beta == 1.0) {
    report.category = Category::kBeta1;
    if (g.alpha == 1.0) {
      report.limit_even = report.limit_odd = metric(g.u, g.v);
    } else if (g.alpha == 0.0 && bip.is_bipartite) {
      const int even_side = bip.side[g.u];
      report.limit_even = point_to_tau(graph, metric, bip, g.v, even_side);
      report.limit_odd = point_to_tau(graph, metric, bip, g.v, 1 - even_side);
    } else {
      report.limit_even = report.limit_odd = point_to_pi(graph, metric, g.v);
    }
    if (bip.is_bipartite) report.divergence_sum = divergence_sum(graph, metric, g.v);
    report.gluvab = detect_gluvab(g, metric);
  } else {
    const bool same_side =
        !bip.is_bipartite || bip.side[g.u] == bip.side[g.v];
    const bool converges_to_zero =
        g.alpha > 0.0 || !bip.is_bipartite ||
        (g.alpha == 0.0 && g.beta == 0.0 && same_side);
    if (converges_to_zero) {
      report.category = Category::kW0;
      report.limit_even = report.limit_odd = 0.0;
    } else if (g.beta == 0.0) {
      report.category = Category::kW1;
      report.limit_even = report.limit_odd = 1.0;
    } else {
      report.category = Category::kWHalf;
      report.limit_even = report.limit_odd = 0.5;
    }
    auto [constant, clause] = predict_constancy(g);
    report.constancy_predicted = constant;
    report.constancy_reason = clause;
  }
  report.converges = std::abs(report.limit_even - report.limit_odd) <= tol.gap;
  if (report.converges) report.limit = report.limit_even;
  return report;
}

SpectralData spectral_data(const Guvab& g) {
  SpectralData out;
  out.eigs_alpha = spectrum(g.graph, g.alpha);
  out.eigs_beta = spectrum(g.graph, g.beta);
  for (const auto* eigs : {&out.eigs_alpha, &out.eigs_beta}) {
    for (double x : *eigs) {
      if (std::abs(x) < 1.0 - 1e-9) out.lambda_max = std::max(out.lambda_max, std::abs(x));
    }
  }
  return out;
}

std::vector<SeriesPoint> wk_series(const Guvab& g, int k_max,
                                   const Tolerances& tol) {
  if (k_max < 0) throw Error(ErrorCode::kInvalidArgument, "k_max must be >= 0");
  WalkPair walks(g);
  TransportSolver solver(g.graph);
  std::vector<SeriesPoint> out;
  out.reserve(k_max + 1);
  const double lambda_max = spectral_data(g).lambda_max;
  double initial = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    walks.advance_to(k);
    // Rounding seeds modes at ~eps * initial scale; none decays slower
    // than lambda_max.
    if (k == 0) initial = walks.xi_scale();
    const double seeded = initial * std::pow(lambda_max, k);
    out.push_back({k, solver.value(walks.xi(), tol.mass),
                   std::max(walks.xi_scale(), seeded)});
  }
  return out;
}

RhoBounds rho_bounds(const Guvab& g, const SpectralData& spectral,
                     const Metric& metric, const Tolerances& tol, int k_cap,
                     int confirm) {
  if (classify(g, tol).category != Category::kW1) {
    throw Error(ErrorCode::kWrongCategory,
                "rho is defined for Guvabs whose distance tends to 1");
  }
  RhoBounds out;
  out.lower = metric(g.u, g.v) / 2.0 - 1.0;
  const double n = g.graph.vertex_count();
  out.upper = 10.0 * std::log(n) / (1.0 - spectral.lambda_max * spectral.lambda_max);

  WalkPair walks(g);
  TransportSolver solver(g.graph);
  int run_start = -1;
  for (int k = 0; k <= k_cap; ++k) {
    walks.advance_to(k);
    const double w = solver.value(walks.xi(), tol.mass);
    if (std::abs(w - 1.0) <= tol.gap) {
      if (run_start < 0) run_start = k;
      if (k - run_start >= confirm) {
        out.empirical = run_start;
        break;
      }
    } else {
      run_start = -1;
    }
  }
  return out;
}

namespace {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rss = 0.0;
};

LineFit fit_line(std::span<const double> xs, std::span<const double> ys) {
  const double m = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (f.intercept + f.slope * xs[i]);
    f.rss += r * r;
  }
  return f;
}

// Two-term refinement: fits x_{j+2} = p x_{j+1} + q x_j to the signed,
// rescaled deviations and returns the dominant root (per two steps of k)
// when the two-mode model explains the data far better than one mode.
std::optional<double> two_mode_ratio(std::span<const double> x) {
  const size_t m = x.size();
  if (m < 5) return std::nullopt;
  long double a11 = 0, a12 = 0, a22 = 0, b1 = 0, b2 = 0;
  long double s11 = 0, s1b = 0;
  for (size_t j = 0; j + 2 < m; ++j) {
    const long double u = x[j + 1], w = x[j], t = x[j + 2];
    a11 += u * u;
    a12 += u * w;
    a22 += w * w;
    b1 += u * t;
    b2 += w * t;
  }
  for (size_t j = 0; j + 1 < m; ++j) {
    s11 += static_cast<long double>(x[j]) * x[j];
    s1b += static_cast<long double>(x[j]) * x[j + 1];
  }
  const long double det = a11 * a22 - a12 * a12;
  if (!(std::abs(det) > 0) || !(s11 > 0)) return std::nullopt;
  const long double p = (b1 * a22 - b2 * a12) / det;
  const long double q = (a11 * b2 - a12 * b1) / det;
  long double rss2 = 0, rss1 = 0;
  const long double r1 = s1b / s11;
  for (size_t j = 0; j + 2 < m; ++j) {
    const long double e = x[j + 2] - p * x[j + 1] - q * x[j];
    rss2 += e * e;
  }
  for (size_t j = 0; j + 1 < m; ++j) {
    const long double e = x[j + 1] - r1 * x[j];
    rss1 += e * e;
  }
  if (!(rss2 < 1e-2L * rss1)) return std::nullopt;
  const long double disc = p * p + 4 * q;
  if (disc < 0) return std::nullopt;
  const long double z1 = (p + std::sqrt(disc)) / 2;
  const long double z2 = (p - std::sqrt(disc)) / 2;
  const long double dom = std::abs(z1) >= std::abs(z2) ? z1 : z2;
  if (!(dom > 0)) return std::nullopt;
  return static_cast<double>(dom);
}

}  // namespace

RateEstimate fit_rate(std::span<const SeriesPoint> series, double limit,
                      Parity parity) {
  const int want = parity == Parity::kEven ? 0 : 1;
  std::vector<const SeriesPoint*> same;
  for (const auto& p : series) {
    if (p.k % 2 == want) same.push_back(&p);
  }
  auto above = [&](const SeriesPoint& p) {
    const double dev = std::abs(p.w - limit);
    return dev > kRateFloor * p.scale && dev >= std::numeric_limits<double>::min();
  };
  std::vector<double> xs, ys, signed_dev;
  size_t last = 0;
  for (size_t i = 0; i < same.size(); ++i) {
    if (!above(*same[i])) continue;
    xs.push_back(same[i]->k);
    ys.push_back(std::log(std::abs(same[i]->w - limit)));
    signed_dev.push_back(same[i]->w - limit);
    last = i;
  }
  if (xs.empty()) {
    throw Error(ErrorCode::kEventuallyConstant,
                "no deviation from the limit above the numerical floor");
  }
  if (static_cast<int>(xs.size()) < kRateMinPoints) {
    throw Error(ErrorCode::kTooFewPoints,
                "only " + std::to_string(xs.size()) + " usable points");
  }
  const size_t keep = std::max<size_t>(kRateMinPoints, xs.size() / 2);
  const size_t first = xs.size() - keep;
  const std::span<const double> wx(xs.data() + first, keep);
  const std::span<const double> wy(ys.data() + first, keep);
  const LineFit line = fit_line(wx, wy);

  // A deviation that drops to the floor while the fit still predicts a
  // large value has vanished, not decayed. Below the normal range the drop is
  // underflow.
  if (last + 1 < same.size()) {
    const SeriesPoint& next = *same[last + 1];
    const double predicted = std::exp(line.intercept + line.slope * next.k);
    const double floor = kRateFloor * next.scale;
    if (predicted > 100.0 * floor && floor >= std::numeric_limits<double>::min()) {
      throw Error(ErrorCode::kEventuallyConstant,
                  "deviation vanishes at k = " + std::to_string(next.k));
    }
  }

  double slope = line.slope;
  bool contiguous = true;
  for (size_t i = first + 1; i < xs.size(); ++i) {
    contiguous = contiguous && xs[i] - xs[i - 1] == 2.0;
  }
  if (contiguous) {
    const double mu = std::exp(2.0 * line.slope);
    std::vector<double> x(keep);
    for (size_t j = 0; j < keep; ++j) {
      x[j] = signed_dev[first + j] / std::exp(line.slope * (xs[first + j] - xs[first]));
    }
    if (auto ratio = two_mode_ratio(x);
        ratio && std::abs(std::sqrt(*ratio) - 1.0) < 0.02 && *ratio * mu < 1.0) {
      slope = 0.5 * std::log(*ratio * mu);
    }
  }
  double intercept = 0.0, rss = 0.0;
  for (size_t i = 0; i < keep; ++i) intercept += wy[i] - slope * wx[i];
  intercept /= static_cast<double>(keep);
  for (size_t i = 0; i < keep; ++i) {
    const double r = wy[i] - (intercept + slope * wx[i]);
    rss += r * r;
  }
  RateEstimate out;
  out.lambda = std::exp(slope);
  out.c = std::exp(intercept);
  out.parity = parity;
  out.residual = std::sqrt(rss / keep);
  out.points = static_cast<int>(keep);
  return out;
}

bool one_step_constancy_check(const Guvab& g, int k_max, const Tolerances& tol) {
  const auto category = classify(g, tol).category;
  if (category != Category::kW0 && category != Category::kBeta1) {
    throw Error(ErrorCode::kWrongCategory,
                "one-step constancy applies to the W0 and BETA1 categories");
  }
  if (k_max < 1) throw Error(ErrorCode::kInvalidArgument, "k_max must be >= 1");
  const auto series = wk_series(g, k_max, tol);
  for (int k = 2; k <= k_max; ++k) {
    if (std::abs(series[k].w - series[1].w) > tol.gap) return false;
  }
  return true;
}

bool observed_constancy(const Guvab& g, int k_max, const Tolerances& tol) {
  if (g.beta == 1.0) {
    throw Error(ErrorCode::kBetaOne,
                "constancy is only characterized for beta < 1");
  }
  const auto report = classify(g, tol);
  switch (report.category) {
    case Category::kW0:
      return one_step_constancy_check(g, k_max, tol);
    case Category::kW1: {
      const Metric metric(g.graph);
      return rho_bounds(g, spectral_data(g), metric, tol).empirical.has_value();
    }
    case Category::kWHalf: {
      // While xi_k satisfies the tree-based transport inequalities, W_k is
      // the total positive mass. Constancy means that value is exactly 1/2
      // over a run of steps where the inequalities keep holding.
      constexpr int kRun = 10;
      const auto tree = spanning_tree(g.graph, Metric(g.graph));
      const auto order = r_monotone_ordering(tree);
      WalkPair walks(g);
      TransportSolver solver(g.graph);
      int run_start = -1;
      std::vector<double> w;
      for (int k = 1; k <= k_max; ++k) {
        walks.advance_to(k);
        const auto xi = walks.xi();
        const auto trace = run_tree_transport(g.graph, tree, order, xi, tol.mass);
        if (!check_inequalities(g.graph, tree, order, xi, trace, tol.strict).holds) {
          run_start = -1;
          w.clear();
          continue;
        }
        if (run_start < 0) run_start = k;
        w.push_back(solver.value(xi, tol.mass));
        if (k - run_start == kRun) {
          return std::all_of(w.begin(), w.end(), [&](double x) {
            return std::abs(x - 0.5) <= tol.gap;
          });
        }
      }
      return false;
    }
    case Category::kBeta1:
      break;
  }
  return false;
}

bool matches_spectrum(double lambda, const SpectralData& spectral, double tol) {
  for (const auto* eigs : {&spectral.eigs_alpha, &spectral.eigs_beta}) {
    for (double x : *eigs) {
      if (std::abs(std::abs(x) - std::abs(lambda)) <= tol) return true;
    }
  }
  return false;
}

double SpectralExpansion::evaluate(Vertex w, int k) const {
  double total = 0.0;
  for (size_t i = 0; i < eigenvalues.size(); ++i) {
    total += coefficients[w][i] * std::pow(eigenvalues[i], k);
  }
  return total;
}

SpectralExpansion spectral_expansion(const Guvab& g, double cluster_tol) {
  const Graph& graph = g.graph;
  const int n = graph.vertex_count();
  const SymmetricEigen eig = walk_eigen(graph);
  // 1_s P_a^k (w) = sum_c sqrt(deg w / deg s) Q[s][c] Q[w][c] (a + (1 - a) x_c)^k.
  struct Term {
    double lambda;
    std::vector<double> coeff;
  };
  std::vector<Term> terms;
  auto add_walk = [&](Vertex s, double laziness, double sign) {
    for (int c = 0; c < n; ++c) {
      Term t{laziness + (1.0 - laziness) * eig.values[c], std::vector<double>(n)};
      for (Vertex w = 0; w < n; ++w) {
        t.coeff[w] = sign * std::sqrt(static_cast<double>(graph.degree(w)) / graph.degree(s)) *
                     eig.vectors[s * n + c] * eig.vectors[w * n + c];
      }
      terms.push_back(std::move(t));
    }
  };
  add_walk(g.u, g.alpha, 1.0);
  add_walk(g.v, g.beta, -1.0);
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.lambda < y.lambda; });

  SpectralExpansion out;
  std::vector<std::vector<double>> by_eigenvalue;
  for (size_t i = 0; i < terms.size();) {
    size_t j = i;
    double sum = 0.0;
    std::vector<double> coeff(n, 0.0);
    while (j < terms.size() && terms[j].lambda - terms[i].lambda <= cluster_tol) {
      sum += terms[j].lambda;
      for (Vertex w = 0; w < n; ++w) coeff[w] += terms[j].coeff[w];
      ++j;
    }
    double value = sum / static_cast<double>(j - i);
    i = j;
    if (std::abs(value) <= cluster_tol) continue;
    // Snap values that are +-1 up to rounding so their powers stay exact.
    if (std::abs(std::abs(value) - 1.0) <= cluster_tol) value = value > 0 ? 1.0 : -1.0;
    out.eigenvalues.push_back(value);
    by_eigenvalue.push_back(std::move(coeff));
  }
  out.coefficients.assign(n, std::vector<double>(out.eigenvalues.size()));
  for (size_t c = 0; c < out.eigenvalues.size(); ++c)
    for (Vertex w = 0; w < n; ++w) out.coefficients[w][c] = by_eigenvalue[c][w];
  return out;
}

}  // namespace walkdist
