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

#include "walkdist/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "walkdist/error.hpp"

namespace walkdist {

void TransportPlan::add(Vertex source, Vertex target, double mass) {
  if (mass <= 0.0) return;
  moves[{source, target}] += mass;
}

std::vector<double> TransportPlan::net_outflow(int n) const {
  std::vector<double> net(n, 0.0);
  for (const auto& [key, mass] : moves) {
    net[key.first] += mass;
    net[key.second] -= mass;
  }
  return net;
}

std::vector<double> TransportPlan::row_marginals(int n) const {
  std::vector<double> out(n, 0.0);
  for (const auto& [key, mass] : moves) out[key.first] += mass;
  return out;
}

std::vector<double> TransportPlan::column_marginals(int n) const {
  std::vector<double> out(n, 0.0);
  for (const auto& [key, mass] : moves) out[key.second] += mass;
  return out;
}

double cost_of_plan(const TransportPlan& plan, const Metric& metric) {
  double total = 0.0;
  for (const auto& [key, mass] : plan.moves) {
    total += metric(key.first, key.second) * mass;
  }
  return total;
}

double lipschitz_excess(const DualPotential& potential, const Graph& g) {
  double worst = -1.0;
  for (auto [a, b] : g.edges()) {
    worst = std::max(worst, std::abs(potential.ell[a] - potential.ell[b]) - 1.0);
  }
  return worst;
}

double dual_value(const DualPotential& potential, const Distribution& xi,
                  const Graph& g, double tol) {
  if (static_cast<int>(potential.ell.size()) != g.vertex_count() ||
      xi.size() != g.vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument, "size mismatch");
  }
  if (lipschitz_excess(potential, g) > tol) {
    throw Error(ErrorCode::kNotLipschitz, "potential is not 1-Lipschitz");
  }
  double total = 0.0;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    total += potential.ell[w] * xi.values[w];
  }
  return total;
}

TransportSolver::TransportSolver(const Graph& g) : graph_(&g) {
  const int n = g.vertex_count();
  out_.assign(n, {});
  // Each edge yields two unit-cost arcs, each paired with a residual arc.
  for (auto [a, b] : g.edges()) {
    for (auto [tail, head] : {Edge{a, b}, Edge{b, a}}) {
      const int fwd = static_cast<int>(arcs_.size());
      arcs_.push_back({head, fwd + 1, 1.0, 0.0, true});
      arcs_.push_back({tail, fwd, -1.0, 0.0, false});
      out_[tail].push_back(fwd);
      out_[head].push_back(fwd + 1);
    }
  }
  excess_.resize(n);
  potential_.resize(n);
  dist_.resize(n);
  parent_arc_.resize(n);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

bool TransportSolver::shortest_paths() {
  const int n = graph_->vertex_count();
  std::fill(dist_.begin(), dist_.end(), kInf);
  std::fill(parent_arc_.begin(), parent_arc_.end(), -1);
  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (Vertex w = 0; w < n; ++w) {
    if (excess_[w] > 0.0) {
      dist_[w] = 0.0;
      queue.push({0.0, w});
    }
  }
  // Arc tails are recovered through the paired arc's head.
  while (!queue.empty()) {
    auto [d, w] = queue.top();
    queue.pop();
    if (d > dist_[w]) continue;
    for (int id : out_[w]) {
      const Arc& arc = arcs_[id];
      if (!arc.forward && arcs_[arc.reverse].flow <= 0.0) continue;
      const double reduced = arc.cost + potential_[w] - potential_[arc.head];
      const double nd = d + reduced;
      if (nd < dist_[arc.head]) {
        dist_[arc.head] = nd;
        parent_arc_[arc.head] = id;
        queue.push({nd, arc.head});
      }
    }
  }
  for (Vertex w = 0; w < n; ++w) {
    if (dist_[w] == kInf) return false;
  }
  return true;
}

void TransportSolver::run(const Distribution& xi, double tol_mass) {
  const int n = graph_->vertex_count();
  if (xi.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "distribution has " + std::to_string(xi.size()) +
                    " entries for a graph with " + std::to_string(n) +
                    " vertices");
  }
  const double sum = xi.total();
  if (std::abs(sum) > tol_mass) {
    throw Error(ErrorCode::kUnbalancedMass,
                "zero-sum distribution expected, total mass is " +
                    std::to_string(sum));
  }
  double scale = 0.0;
  for (double x : xi.values) scale = std::max(scale, std::abs(x));
  const double eps = 1e-15 * std::max(scale, 1e-300);

  for (auto& arc : arcs_) arc.flow = 0.0;
  std::fill(potential_.begin(), potential_.end(), 0.0);
  for (Vertex w = 0; w < n; ++w) {
    excess_[w] = std::abs(xi.values[w]) <= eps ? 0.0 : xi.values[w];
  }
  augmentations_ = 0;

  auto has = [&](auto pred) {
    return std::any_of(excess_.begin(), excess_.end(), pred);
  };
  const int max_augmentations = 64 * (n + 1) * (static_cast<int>(arcs_.size()) + 1);
  while (has([](double e) { return e > 0.0; }) &&
         has([](double e) { return e < 0.0; })) {
    if (!shortest_paths()) {
      throw Error(ErrorCode::kInvalidArgument, "residual graph disconnected");
    }
    Vertex sink = -1;
    for (Vertex w = 0; w < n; ++w) {
      if (excess_[w] < 0.0 && (sink < 0 || dist_[w] < dist_[sink])) sink = w;
    }
    for (Vertex w = 0; w < n; ++w) potential_[w] += dist_[w];

    double bottleneck = -excess_[sink];
    Vertex source = sink;
    while (parent_arc_[source] >= 0) {
      const Arc& arc = arcs_[parent_arc_[source]];
      if (!arc.forward) bottleneck = std::min(bottleneck, arcs_[arc.reverse].flow);
      source = arcs_[arc.reverse].head;
    }
    bottleneck = std::min(bottleneck, excess_[source]);

    for (Vertex w = sink; parent_arc_[w] >= 0;) {
      Arc& arc = arcs_[parent_arc_[w]];
      Arc& pair = arcs_[arc.reverse];
      if (arc.forward) {
        arc.flow += bottleneck;
      } else {
        pair.flow = pair.flow - bottleneck <= eps ? 0.0 : pair.flow - bottleneck;
      }
      w = pair.head;
    }
    auto settle = [&](double& e) {
      if (std::abs(e) <= eps) e = 0.0;
    };
    excess_[source] = excess_[source] == bottleneck ? 0.0 : excess_[source] - bottleneck;
    excess_[sink] = -excess_[sink] == bottleneck ? 0.0 : excess_[sink] + bottleneck;
    settle(excess_[source]);
    settle(excess_[sink]);
    if (++augmentations_ > max_augmentations) {
      throw Error(ErrorCode::kInvalidArgument,
                  "min-cost flow failed to converge");
    }
  }
}

void TransportSolver::decompose(TransportPlan& plan) const {
  const int n = graph_->vertex_count();
  std::vector<double> flow(arcs_.size(), 0.0);
  std::vector<double> supply(n, 0.0), demand(n, 0.0);
  std::vector<double> net(n, 0.0);
  double scale = 0.0;
  for (size_t id = 0; id < arcs_.size(); ++id) {
    if (!arcs_[id].forward) continue;
    flow[id] = arcs_[id].flow;
    const Vertex head = arcs_[id].head;
    const Vertex tail = arcs_[arcs_[id].reverse].head;
    net[tail] += flow[id];
    net[head] -= flow[id];
    scale = std::max(scale, flow[id]);
  }
  const double eps = 1e-14 * std::max(scale, 1e-300);
  for (Vertex w = 0; w < n; ++w) {
    if (net[w] > eps) supply[w] = net[w];
    if (net[w] < -eps) demand[w] = -net[w];
  }
  // Flow arcs are tight under the final potentials, so the flow is acyclic
  // and every path from a supply to a demand vertex is a shortest path.
  std::vector<int> path;
  for (Vertex s = 0; s < n; ++s) {
    int guard = 0;
    while (supply[s] > eps && guard++ < 4 * (n + 1) * (n + 1)) {
      path.clear();
      Vertex w = s;
      while (demand[w] <= eps) {
        int next = -1;
        for (int id : out_[w]) {
          if (arcs_[id].forward && flow[id] > eps) {
            next = id;
            break;
          }
        }
        if (next < 0) break;
        path.push_back(next);
        w = arcs_[next].head;
        if (static_cast<int>(path.size()) > n) break;
      }
      if (demand[w] <= eps) break;
      double mass = std::min(supply[s], demand[w]);
      for (int id : path) mass = std::min(mass, flow[id]);
      for (int id : path) flow[id] -= mass;
      supply[s] -= mass;
      demand[w] -= mass;
      plan.add(s, w, mass);
    }
  }
}

TransportResult TransportSolver::solve(const Distribution& xi, double tol_mass) {
  const int n = graph_->vertex_count();
  TransportResult result;
  result.potential.ell.assign(n, 0.0);
  bool nonzero = false;
  for (double x : xi.values) nonzero |= x != 0.0;
  if (!nonzero) {
    if (xi.size() != n) throw Error(ErrorCode::kInvalidArgument, "size mismatch");
    return result;
  }
  run(xi, tol_mass);
  double cost = 0.0;
  for (const auto& arc : arcs_) {
    if (arc.forward) cost += arc.flow;
  }
  result.value = cost;
  decompose(result.plan);

  // ell = -potential makes sum ell * xi the flow cost; anchor at the largest
  // positive entry.
  Vertex anchor = static_cast<Vertex>(
      std::max_element(xi.values.begin(), xi.values.end()) - xi.values.begin());
  for (Vertex w = 0; w < n; ++w) {
    result.potential.ell[w] = potential_[anchor] - potential_[w];
  }
  return result;
}

double TransportSolver::value(const Distribution& xi, double tol_mass) {
  bool nonzero = false;
  for (double x : xi.values) nonzero |= x != 0.0;
  if (!nonzero) return 0.0;
  run(xi, tol_mass);
  double cost = 0.0;
  for (const auto& arc : arcs_) {
    if (arc.forward) cost += arc.flow;
  }
  return cost;
}

TransportResult wasserstein(const Distribution& xi, const Graph& g,
                            const Metric& metric, double tol_mass) {
  TransportSolver solver(g);
  TransportResult result = solver.solve(xi, tol_mass);
  // The decomposed plan routes along shortest paths, so its cost under the
  // metric reproduces the flow cost.
  result.value = result.plan.empty() ? result.value
                                     : cost_of_plan(result.plan, metric);
  return result;
}

TransportResult wasserstein_between(const Distribution& mu,
                                    const Distribution& nu, const Graph& g,
                                    const Metric& metric, double tol_mass) {
  if (std::abs(mu.total() - nu.total()) > tol_mass) {
    throw Error(ErrorCode::kUnbalancedMass,
                "distributions carry different total mass");
  }
  return wasserstein(mu - nu, g, metric, tol_mass);
}

double wasserstein_oracle(const Distribution& xi, const Graph& g) {
  const int n = g.vertex_count();
  if (n > kOracleMaxVertices) {
    throw Error(ErrorCode::kTooLarge,
                "oracle enumeration is limited to " +
                    std::to_string(kOracleMaxVertices) + " vertices");
  }
  if (xi.size() != n) throw Error(ErrorCode::kInvalidArgument, "size mismatch");
  // BFS order guarantees every vertex after the first has an assigned
  // neighbor, which limits it to three candidate values.
  std::vector<Vertex> order{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (size_t i = 0; i < order.size(); ++i) {
    for (Vertex t : g.neighbors(order[i])) {
      if (!seen[t]) {
        seen[t] = 1;
        order.push_back(t);
      }
    }
  }
  std::vector<int> ell(n, 0);
  std::vector<char> assigned(n, 0);
  assigned[0] = 1;
  double best = -std::numeric_limits<double>::infinity();
  auto search = [&](auto&& self, size_t pos, double partial) -> void {
    if (pos == order.size()) {
      best = std::max(best, partial);
      return;
    }
    const Vertex w = order[pos];
    int lo = -n, hi = n;
    for (Vertex t : g.neighbors(w)) {
      if (!assigned[t]) continue;
      lo = std::max(lo, ell[t] - 1);
      hi = std::min(hi, ell[t] + 1);
    }
    assigned[w] = 1;
    for (int value = lo; value <= hi; ++value) {
      ell[w] = value;
      self(self, pos + 1, partial + value * xi.values[w]);
    }
    assigned[w] = 0;
  };
  search(search, 1, 0.0);
  return best;
}

}  // namespace walkdist
