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

#ifndef WALKDIST_WALKS_HPP_
#define WALKDIST_WALKS_HPP_

#include <span>
#include <utility>
#include <vector>

#include "walkdist/graph.hpp"

namespace walkdist {

struct Tolerances {
  double mass = 1e-9;    // probability and zero-sum checks
  double gap = 1e-9;     // duality gap and W_k equality
  double strict = 1e-12; // strict inequalities of the tree-based transport
};

enum class DistributionKind { kProbability, kSigned };

struct Distribution {
  std::vector<double> values;
  DistributionKind kind = DistributionKind::kProbability;

  int size() const { return static_cast<int>(values.size()); }
  double operator[](Vertex w) const { return values[w]; }
  double total() const;

  static Distribution point_mass(int n, Vertex w);
  static Distribution zero(int n);  // signed
};

// Throws kInvalidArgument when the distribution violates its kind's
// invariant at the given tolerance.
void validate(const Distribution& d, double tol_mass);

Distribution operator-(const Distribution& a, const Distribution& b);
Distribution operator+(const Distribution& a, const Distribution& b);
Distribution operator*(double s, const Distribution& a);
double max_abs_difference(const Distribution& a, const Distribution& b);

// Pair of lazy walks: laziness alpha started at u, laziness beta started at v.
struct Guvab {
  Graph graph;
  Vertex u = 0;
  Vertex v = 0;
  double alpha = 0.0;
  double beta = 0.0;
};

// Throws kInvalidArgument (bad vertex, alpha > beta, fewer than 2 vertices)
// or kLazinessOutOfRange.
Guvab make_guvab(Graph graph, Vertex u, Vertex v, double alpha, double beta);

class TransitionMatrix {
 public:
  TransitionMatrix(const Graph& g, double laziness);

  int size() const { return n_; }
  double laziness() const { return laziness_; }
  double operator()(Vertex i, Vertex j) const { return entries_[i * n_ + j]; }
  std::span<const double> row(Vertex i) const {
    return {entries_.data() + i * n_, static_cast<size_t>(n_)};
  }

  // Row vector times matrix.
  std::vector<double> apply(std::span<const double> mu) const;

 private:
  int n_;
  double laziness_;
  std::vector<double> entries_;
};

inline TransitionMatrix transition_matrix(const Graph& g, double laziness) {
  return TransitionMatrix(g, laziness);
}

// mu0 * P^k by k vector-matrix products.
Distribution k_step(const Distribution& initial, const TransitionMatrix& p,
                    int k);

// Both walks advanced in lockstep; avoids rebuilding transition matrices
// when consecutive k are needed. Each walk is held as its limiting
// (period <= 2) distribution plus a deviation that is propagated on its own,
// so xi_k keeps full relative precision while it decays.
class WalkPair {
 public:
  explicit WalkPair(const Guvab& g);

  int step() const { return k_; }
  Distribution mu() const;
  Distribution nu() const;
  Distribution xi() const;
  // l1 size of the terms summed by xi(); bounds its rounding error.
  double xi_scale() const;

  void advance();
  void advance_to(int k);

 private:
  void project(std::vector<double>& dev, double laziness) const;

  TransitionMatrix p_alpha_;
  TransitionMatrix p_beta_;
  Distribution limit_mu_[2];
  Distribution limit_nu_[2];
  Distribution limit_xi_[2];
  std::vector<double> dev_mu_;
  std::vector<double> dev_nu_;
  std::vector<double> dev_xi_;  // propagated directly when alpha == beta
  bool same_walk_;
  std::vector<double> pi_;
  std::vector<double> sign_;  // +-1 by side; empty unless bipartite
  int k_ = 0;
};

Distribution xi_k(const Guvab& g, int k);

Distribution stationary_pi(const Graph& g);

// (tau_1, tau_2): tau_1 supported on side 0, tau_2 on side 1. Throws
// kNotBipartite.
std::pair<Distribution, Distribution> tau_distributions(
    const Graph& g, const BipartiteStructure& bip);

// Closed-form (xi^0, xi^1): limits of xi_{2k} and xi_{2k+1}.
std::pair<Distribution, Distribution> limit_xi(const Guvab& g);

// Closed-form (even, odd) limits of a single walk's distribution.
std::pair<Distribution, Distribution> limit_walk(const Graph& g,
                                                 const BipartiteStructure& bip,
                                                 Vertex start, double laziness);

struct TwoStateDist {
  double p0 = 1.0;
  double p1 = 0.0;
};

// Two-state chain started at s0 that stays with probability laziness.
TwoStateDist two_state_closed_form(double laziness, int k);

}  // namespace walkdist

#endif  // WALKDIST_WALKS_HPP_
