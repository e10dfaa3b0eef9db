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

#ifndef WALKDIST_TREE_TRANSPORT_HPP_
#define WALKDIST_TREE_TRANSPORT_HPP_

#include <optional>
#include <vector>

#include "walkdist/graph.hpp"
#include "walkdist/transport.hpp"
#include "walkdist/walks.hpp"

namespace walkdist {

struct Transfer {
  Vertex source;
  Vertex target;
  double mass;  // >= 0
};

struct AlgorithmTrace {
  std::vector<Vertex> order;
  // states[i] is the mass after i steps; states.size() == n.
  std::vector<Distribution> states;
  // moves[i] lists the transfers made by step i + 1.
  std::vector<std::vector<Transfer>> moves;
  TransportPlan plan;
};

// Settles the vertices one at a time in the given order: nonnegative mass is
// split evenly among later neighbors in the graph, negative mass is pulled
// evenly from them. Throws kUnbalancedMass, or kNoLaterNeighbor when a vertex
// still holding mass has no later neighbor.
AlgorithmTrace run_tree_transport(const Graph& g, const SpanningTree& tree,
                                  std::span<const Vertex> order,
                                  const Distribution& xi,
                                  double tol_mass = 1e-9);

enum class InequalitySet { kI1, kI2 };

struct InequalityViolation {
  InequalitySet set;
  int step = -1;       // I1: i
  Vertex vertex = -1;  // I1: w_j; I2: t
  Vertex other = -1;   // I2: w
  double product = 0.0;
};

struct InequalityReport {
  bool holds = true;
  std::optional<InequalityViolation> first_violation;
};

// I1: xi(w_j) * A_i(xi)(w_j) > strict for 0 <= i <= n-2, j > i.
// I2: xi(t) * xi(w) < -strict for every edge {t, w}.
InequalityReport check_inequalities(const Graph& g, const SpanningTree& tree,
                                    std::span<const Vertex> order,
                                    const Distribution& xi,
                                    const AlgorithmTrace& trace,
                                    double strict = 1e-12);

// Total positive mass, 1/2 sum |xi(w)|.
double half_l1(const Distribution& xi);

// 1 / (|V| |E|).
double epsilon_bound(const Graph& g);

}  // namespace walkdist

#endif  // WALKDIST_TREE_TRANSPORT_HPP_
