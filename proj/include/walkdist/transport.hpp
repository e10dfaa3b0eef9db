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

#ifndef WALKDIST_TRANSPORT_HPP_
#define WALKDIST_TRANSPORT_HPP_

#include <map>
#include <utility>
#include <vector>

#include "walkdist/graph.hpp"
#include "walkdist/walks.hpp"

namespace walkdist {

// Mass moved from source to target. All masses are nonnegative.
struct TransportPlan {
  std::map<std::pair<Vertex, Vertex>, double> moves;

  void add(Vertex source, Vertex target, double mass);
  bool empty() const { return moves.empty(); }
  // Outgoing minus incoming mass per vertex.
  std::vector<double> net_outflow(int n) const;
  std::vector<double> row_marginals(int n) const;
  std::vector<double> column_marginals(int n) const;
};

struct DualPotential {
  std::vector<double> ell;
};

struct TransportResult {
  double value = 0.0;
  TransportPlan plan;
  DualPotential potential;
};

double cost_of_plan(const TransportPlan& plan, const Metric& metric);

// Largest |ell(a) - ell(b)| - 1 over edges; <= 0 for a 1-Lipschitz potential.
double lipschitz_excess(const DualPotential& potential, const Graph& g);

// sum_w ell(w) xi(w). Throws kNotLipschitz when some edge constraint is
// violated by more than tol.
double dual_value(const DualPotential& potential, const Distribution& xi,
                  const Graph& g, double tol = 1e-12);

// Successive shortest paths with node potentials on the bidirected graph
// (unit arc costs, unbounded capacities). Holds scratch buffers; use one
// instance per thread.
class TransportSolver {
 public:
  explicit TransportSolver(const Graph& g);

  // Exact W(xi, 0) for a zero-sum xi. Throws kUnbalancedMass.
  TransportResult solve(const Distribution& xi, double tol_mass = 1e-9);
  // Value only; skips plan decomposition.
  double value(const Distribution& xi, double tol_mass = 1e-9);

  int augmentations() const { return augmentations_; }

 private:
  struct Arc {
    Vertex head;
    int reverse;  // index of the paired arc in arcs_
    double cost;
    double flow;  // forward arcs only carry flow; residual of reverse = flow
    bool forward;
  };

  void run(const Distribution& xi, double tol_mass);
  bool shortest_paths();
  void decompose(TransportPlan& plan) const;

  const Graph* graph_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<double> excess_;
  std::vector<double> potential_;
  std::vector<double> dist_;
  std::vector<int> parent_arc_;
  int augmentations_ = 0;
};

TransportResult wasserstein(const Distribution& xi, const Graph& g,
                            const Metric& metric, double tol_mass = 1e-9);

TransportResult wasserstein_between(const Distribution& mu,
                                    const Distribution& nu, const Graph& g,
                                    const Metric& metric,
                                    double tol_mass = 1e-9);

inline constexpr int kOracleMaxVertices = 8;

// Maximum of sum ell*xi over integer 1-Lipschitz ell with ell(0) = 0, by
// exhaustive enumeration. Throws kTooLarge above 8 vertices.
double wasserstein_oracle(const Distribution& xi, const Graph& g);

}  // namespace walkdist

#endif  // WALKDIST_TRANSPORT_HPP_
