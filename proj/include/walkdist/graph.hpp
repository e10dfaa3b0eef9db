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

#ifndef WALKDIST_GRAPH_HPP_
#define WALKDIST_GRAPH_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace walkdist {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Finite connected simple graph on vertices 0..n-1. Instances are only
// produced by build_graph and are immutable afterwards.
class Graph {
 public:
  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int degree(Vertex w) const { return static_cast<int>(adjacency_[w].size()); }
  int degree_sum() const { return 2 * edge_count(); }

  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex w) const { return adjacency_[w]; }
  // Edges as (i, j) with i < j, sorted lexicographically.
  std::span<const Edge> edges() const { return edges_; }
  bool adjacent(Vertex a, Vertex b) const;
  bool contains(Vertex w) const { return w >= 0 && w < vertex_count(); }

  // Optional display names; empty when the graph was given by index.
  const std::vector<std::string>& labels() const { return labels_; }
  // Index of a vertex given by label or decimal index; -1 when unknown.
  Vertex find_vertex(const std::string& name) const;
  std::string vertex_name(Vertex w) const;

 private:
  friend Graph build_graph(int, std::span<const Edge>, std::vector<std::string>);
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

// Validates and builds a graph. Throws Error with kEmptyVertexSet,
// kInvalidArgument (index out of range), kSelfLoop, kDuplicateEdge or
// kDisconnected.
Graph build_graph(int n, std::span<const Edge> edges,
                  std::vector<std::string> labels = {});

// All-pairs shortest-path distances.
class Metric {
 public:
  explicit Metric(const Graph& g);

  int operator()(Vertex a, Vertex b) const { return dist_[a * n_ + b]; }
  int size() const { return n_; }
  int eccentricity(Vertex w) const;
  int diameter() const;

 private:
  int n_;
  std::vector<int> dist_;
};

inline Metric all_pairs_distances(const Graph& g) { return Metric(g); }

struct BipartiteStructure {
  bool is_bipartite = false;
  // side[w] in {0, 1}; side[0] == 0. Empty when not bipartite.
  std::vector<int> side;
};

BipartiteStructure bipartite_decompose(const Graph& g);

struct SpanningTree {
  std::vector<Edge> tree_edges;  // (i, j), i < j
  std::vector<Vertex> leaves;    // ascending
  std::vector<int> r;            // graph distance to the nearest leaf
};

// BFS tree rooted at vertex 0, neighbors visited in ascending order.
SpanningTree spanning_tree(const Graph& g, const Metric& metric);

// Vertices sorted by r, ties broken by ascending index.
std::vector<Vertex> r_monotone_ordering(const SpanningTree& tree);

inline constexpr int kMaxEnumerationVertices = 6;

// Calls visit for every labeled connected simple graph with 1..n_max vertices,
// in order of increasing n and then increasing edge bitmask. Throws
// kLimitExceeded for n_max > 6 and kInvalidArgument for n_max < 1.
void enumerate_connected_graphs(int n_max,
                                const std::function<void(const Graph&)>& visit);

std::vector<Graph> connected_graphs(int n_max);

// Common test and example graphs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // center is vertex 0
Graph complete_bipartite_graph(int a, int b);  // sides {0..a-1}, {a..a+b-1}

// Text format: "n m" header then m lines "i j"; '#' starts a comment line.
// Non-integer tokens are treated as vertex names, numbered in order of first
// appearance.
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);
std::string format_graph(const Graph& g);

}  // namespace walkdist

#endif  // WALKDIST_GRAPH_HPP_
