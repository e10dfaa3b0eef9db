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

#include "walkdist/tree_transport.hpp"

#include <cmath>
#include <string>

#include "walkdist/error.hpp"

namespace walkdist {

AlgorithmTrace run_tree_transport(const Graph& g, const SpanningTree& tree,
                                  std::span<const Vertex> order,
                                  const Distribution& xi, double tol_mass) {
  (void)tree;  // the tree only shapes the ordering
  const int n = g.vertex_count();
  if (xi.size() != n || static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "size mismatch");
  }
  if (std::abs(xi.total()) > tol_mass) {
    throw Error(ErrorCode::kUnbalancedMass,
                "zero-sum distribution expected, total mass is " +
                    std::to_string(xi.total()));
  }
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;

  AlgorithmTrace trace;
  trace.order.assign(order.begin(), order.end());
  Distribution state = xi;
  state.kind = DistributionKind::kSigned;
  trace.states.push_back(state);
  std::vector<Vertex> later;
  for (int i = 0; i + 1 < n; ++i) {
    const Vertex w = order[i];
    std::vector<Transfer> step_moves;
    const double mass = state.values[w];
    later.clear();
    for (Vertex t : g.neighbors(w)) {
      if (position[t] > i) later.push_back(t);
    }
    if (mass != 0.0) {
      if (later.empty()) {
        if (std::abs(mass) > tol_mass) {
          throw Error(ErrorCode::kNoLaterNeighbor,
                      "step " + std::to_string(i + 1) + ": vertex " +
                          std::to_string(w) + " holds mass " +
                          std::to_string(mass) + " but has no later neighbor");
        }
      } else {
        const double share = mass / static_cast<double>(later.size());
        for (Vertex t : later) {
          state.values[t] += share;
          if (share > 0.0) {
            step_moves.push_back({w, t, share});
            trace.plan.add(w, t, share);
          } else {
            step_moves.push_back({t, w, -share});
            trace.plan.add(t, w, -share);
          }
        }
      }
      state.values[w] = 0.0;
    }
    trace.moves.push_back(std::move(step_moves));
    trace.states.push_back(state);
  }
  if (n == 1) trace.moves.clear();
  return trace;
}

InequalityReport check_inequalities(const Graph& g, const SpanningTree& tree,
                                    std::span<const Vertex> order,
                                    const Distribution& xi,
                                    const AlgorithmTrace& trace,
                                    double strict) {
  (void)tree;
  const int n = g.vertex_count();
  InequalityReport report;
  auto fail = [&](InequalityViolation v) {
    report.holds = false;
    report.first_violation = v;
    return report;
  };
  for (int i = 0; i + 2 <= n; ++i) {
    const Distribution& state = trace.states[i];
    for (int j = i; j < n; ++j) {
      const Vertex w = order[j];
      const double product = xi.values[w] * state.values[w];
      if (!(product > strict)) {
        return fail({InequalitySet::kI1, i, w, -1, product});
      }
    }
  }
  for (auto [a, b] : g.edges()) {
    const double product = xi.values[a] * xi.values[b];
    if (!(product < -strict)) {
      return fail({InequalitySet::kI2, -1, a, b, product});
    }
  }
  return report;
}

double half_l1(const Distribution& xi) {
  double total = 0.0;
  for (double x : xi.values) total += std::abs(x);
  return 0.5 * total;
}

double epsilon_bound(const Graph& g) {
  return 1.0 / (static_cast<double>(g.vertex_count()) * g.edge_count());
}

}  // namespace walkdist
