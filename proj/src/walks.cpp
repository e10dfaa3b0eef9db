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

#include "walkdist/walks.hpp"

#include <cmath>
#include <numeric>
#include <tuple>
#include <string>

#include "walkdist/error.hpp"

namespace walkdist {

double Distribution::total() const {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

Distribution Distribution::point_mass(int n, Vertex w) {
  Distribution d;
  d.values.assign(n, 0.0);
  d.values[w] = 1.0;
  return d;
}

Distribution Distribution::zero(int n) {
  return {std::vector<double>(n, 0.0), DistributionKind::kSigned};
}

void validate(const Distribution& d, double tol_mass) {
  const double sum = d.total();
  if (d.kind == DistributionKind::kProbability) {
    for (int w = 0; w < d.size(); ++w) {
      if (d.values[w] < -tol_mass) {
        throw Error(ErrorCode::kInvalidArgument,
                    "negative probability at vertex " + std::to_string(w));
      }
    }
    if (std::abs(sum - 1.0) > tol_mass) {
      throw Error(ErrorCode::kInvalidArgument,
                  "probability distribution sums to " + std::to_string(sum));
    }
  } else if (std::abs(sum) > tol_mass) {
    throw Error(ErrorCode::kInvalidArgument,
                "signed distribution sums to " + std::to_string(sum));
  }
}

Distribution operator-(const Distribution& a, const Distribution& b) {
  Distribution out{a.values, DistributionKind::kSigned};
  for (int w = 0; w < out.size(); ++w) out.values[w] -= b.values[w];
  return out;
}

Distribution operator+(const Distribution& a, const Distribution& b) {
  Distribution out{a.values, DistributionKind::kSigned};
  for (int w = 0; w < out.size(); ++w) out.values[w] += b.values[w];
  return out;
}

Distribution operator*(double s, const Distribution& a) {
  Distribution out{a.values, DistributionKind::kSigned};
  for (double& x : out.values) x *= s;
  return out;
}

double max_abs_difference(const Distribution& a, const Distribution& b) {
  double worst = 0.0;
  for (int w = 0; w < a.size(); ++w) {
    worst = std::max(worst, std::abs(a.values[w] - b.values[w]));
  }
  return worst;
}

namespace {

void check_laziness(double laziness) {
  if (!(laziness >= 0.0 && laziness <= 1.0)) {
    throw Error(ErrorCode::kLazinessOutOfRange,
                "laziness " + std::to_string(laziness) + " outside [0, 1]");
  }
}

}  // namespace

Guvab make_guvab(Graph graph, Vertex u, Vertex v, double alpha, double beta) {
  if (graph.vertex_count() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "random walks need a graph with at least two vertices");
  }
  if (!graph.contains(u)) {
    throw Error(ErrorCode::kInvalidArgument,
                "u = " + std::to_string(u) + " is not a vertex");
  }
  if (!graph.contains(v)) {
    throw Error(ErrorCode::kInvalidArgument,
                "v = " + std::to_string(v) + " is not a vertex");
  }
  check_laziness(alpha);
  check_laziness(beta);
  if (alpha > beta) {
    throw Error(ErrorCode::kInvalidArgument,
                "alpha must not exceed beta (alpha = " + std::to_string(alpha) +
                    ", beta = " + std::to_string(beta) + ")");
  }
  return Guvab{std::move(graph), u, v, alpha, beta};
}

TransitionMatrix::TransitionMatrix(const Graph& g, double laziness)
    : n_(g.vertex_count()), laziness_(laziness), entries_(n_ * n_, 0.0) {
  check_laziness(laziness);
  for (Vertex i = 0; i < n_; ++i) {
    entries_[i * n_ + i] = laziness;
    const int deg = g.degree(i);
    if (deg == 0) {
      entries_[i * n_ + i] = 1.0;
      continue;
    }
    const double step = (1.0 - laziness) / deg;
    for (Vertex j : g.neighbors(i)) entries_[i * n_ + j] = step;
  }
}

std::vector<double> TransitionMatrix::apply(std::span<const double> mu) const {
  std::vector<double> out(n_, 0.0);
  for (Vertex i = 0; i < n_; ++i) {
    const double m = mu[i];
    if (m == 0.0) continue;
    const double* row = entries_.data() + i * n_;
    for (Vertex j = 0; j < n_; ++j) out[j] += m * row[j];
  }
  return out;
}

Distribution k_step(const Distribution& initial, const TransitionMatrix& p,
                    int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be nonnegative");
  Distribution out = initial;
  for (int step = 0; step < k; ++step) out.values = p.apply(out.values);
  return out;
}

WalkPair::WalkPair(const Guvab& g)
    : p_alpha_(g.graph, g.alpha),
      p_beta_(g.graph, g.beta),
      same_walk_(g.alpha == g.beta) {
  const auto bip = bipartite_decompose(g.graph);
  std::tie(limit_mu_[0], limit_mu_[1]) = limit_walk(g.graph, bip, g.u, g.alpha);
  std::tie(limit_nu_[0], limit_nu_[1]) = limit_walk(g.graph, bip, g.v, g.beta);
  for (int p = 0; p < 2; ++p) {
    limit_xi_[p] = limit_mu_[p] - limit_nu_[p];
  }
  const int n = g.graph.vertex_count();
  pi_ = stationary_pi(g.graph).values;
  if (bip.is_bipartite) {
    for (Vertex w = 0; w < n; ++w) sign_.push_back(bip.side[w] == 0 ? 1.0 : -1.0);
  }
  dev_mu_ = (Distribution::point_mass(n, g.u) - limit_mu_[0]).values;
  dev_nu_ = (Distribution::point_mass(n, g.v) - limit_nu_[0]).values;
  project(dev_mu_, g.alpha);
  project(dev_nu_, g.beta);
  if (same_walk_) {
    dev_xi_.resize(n);
    for (int w = 0; w < n; ++w) dev_xi_[w] = dev_mu_[w] - dev_nu_[w];
    project(dev_xi_, g.alpha);
  }
}

// Removes the components along the unit-modulus eigenvectors (pi, and the
// side-signed pi when the walk has period 2). They belong to the limit and
// only enter the deviation through rounding.
void WalkPair::project(std::vector<double>& dev, double laziness) const {
  if (laziness == 1.0) return;
  double total = 0.0;
  for (double x : dev) total += x;
  for (size_t w = 0; w < dev.size(); ++w) dev[w] -= total * pi_[w];
  if (laziness == 0.0 && !sign_.empty()) {
    double alternating = 0.0;
    for (size_t w = 0; w < dev.size(); ++w) alternating += sign_[w] * dev[w];
    for (size_t w = 0; w < dev.size(); ++w) dev[w] -= alternating * sign_[w] * pi_[w];
  }
}

Distribution WalkPair::mu() const {
  Distribution out = limit_mu_[k_ % 2];
  for (size_t w = 0; w < dev_mu_.size(); ++w) out.values[w] += dev_mu_[w];
  return out;
}

Distribution WalkPair::nu() const {
  Distribution out = limit_nu_[k_ % 2];
  for (size_t w = 0; w < dev_nu_.size(); ++w) out.values[w] += dev_nu_[w];
  return out;
}

Distribution WalkPair::xi() const {
  Distribution out = limit_xi_[k_ % 2];
  for (size_t w = 0; w < dev_mu_.size(); ++w) {
    out.values[w] += same_walk_ ? dev_xi_[w] : dev_mu_[w] - dev_nu_[w];
  }
  return out;
}

double WalkPair::xi_scale() const {
  double total = 0.0;
  for (double x : limit_xi_[k_ % 2].values) total += std::abs(x);
  if (same_walk_) {
    for (double x : dev_xi_) total += std::abs(x);
  } else {
    for (double x : dev_mu_) total += std::abs(x);
    for (double x : dev_nu_) total += std::abs(x);
  }
  return total;
}

void WalkPair::advance() {
  dev_mu_ = p_alpha_.apply(dev_mu_);
  dev_nu_ = p_beta_.apply(dev_nu_);
  project(dev_mu_, p_alpha_.laziness());
  project(dev_nu_, p_beta_.laziness());
  if (same_walk_) {
    dev_xi_ = p_alpha_.apply(dev_xi_);
    project(dev_xi_, p_alpha_.laziness());
  }
  ++k_;
}

void WalkPair::advance_to(int k) {
  while (k_ < k) advance();
}

Distribution xi_k(const Guvab& g, int k) {
  WalkPair walks(g);
  walks.advance_to(k);
  return walks.xi();
}

Distribution stationary_pi(const Graph& g) {
  Distribution pi;
  pi.values.resize(g.vertex_count());
  const double total = g.degree_sum();
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    pi.values[w] = g.degree(w) / total;
  }
  return pi;
}

std::pair<Distribution, Distribution> tau_distributions(
    const Graph& g, const BipartiteStructure& bip) {
  if (!bip.is_bipartite) {
    throw Error(ErrorCode::kNotBipartite, "graph is not bipartite");
  }
  const int n = g.vertex_count();
  Distribution tau1, tau2;
  tau1.values.assign(n, 0.0);
  tau2.values.assign(n, 0.0);
  const double total = g.degree_sum();
  for (Vertex w = 0; w < n; ++w) {
    auto& target = bip.side[w] == 0 ? tau1 : tau2;
    target.values[w] = 2.0 * g.degree(w) / total;
  }
  return {tau1, tau2};
}

std::pair<Distribution, Distribution> limit_walk(const Graph& g,
                                                 const BipartiteStructure& bip,
                                                 Vertex start,
                                                 double laziness) {
  const int n = g.vertex_count();
  if (laziness == 1.0) {
    auto frozen = Distribution::point_mass(n, start);
    return {frozen, frozen};
  }
  if (laziness == 0.0 && bip.is_bipartite) {
    auto [tau1, tau2] = tau_distributions(g, bip);
    if (bip.side[start] == 0) return {tau1, tau2};
    return {tau2, tau1};
  }
  auto pi = stationary_pi(g);
  return {pi, pi};
}

std::pair<Distribution, Distribution> limit_xi(const Guvab& g) {
  auto bip = bipartite_decompose(g.graph);
  auto [mu_even, mu_odd] = limit_walk(g.graph, bip, g.u, g.alpha);
  auto [nu_even, nu_odd] = limit_walk(g.graph, bip, g.v, g.beta);
  return {mu_even - nu_even, mu_odd - nu_odd};
}

TwoStateDist two_state_closed_form(double laziness, int k) {
  check_laziness(laziness);
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be nonnegative");
  const double power = std::pow(2.0 * laziness - 1.0, k);
  return {0.5 + 0.5 * power, 0.5 - 0.5 * power};
}

}  // namespace walkdist
