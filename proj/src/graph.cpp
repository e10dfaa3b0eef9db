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

#include "walkdist/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "walkdist/error.hpp"

namespace walkdist {
namespace {

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex w = queue.front();
    queue.pop();
    for (Vertex t : g.neighbors(w)) {
      if (dist[t] < 0) {
        dist[t] = dist[w] + 1;
        queue.push(t);
      }
    }
  }
  return dist;
}

bool parse_int(const std::string& token, int& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

Vertex Graph::find_vertex(const std::string& name) const {
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == name) return static_cast<Vertex>(i);
  }
  int index = 0;
  if (parse_int(name, index) && contains(index)) return index;
  return -1;
}

std::string Graph::vertex_name(Vertex w) const {
  if (static_cast<size_t>(w) < labels_.size()) return labels_[w];
  return std::to_string(w);
}

Graph build_graph(int n, std::span<const Edge> edges,
                  std::vector<std::string> labels) {
  if (n < 1) throw Error(ErrorCode::kEmptyVertexSet, "graph has no vertices");
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "label count does not match n");
  }
  Graph g;
  g.adjacency_.assign(n, {});
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) +
                      ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (a == b) {
      throw Error(ErrorCode::kSelfLoop,
                  "self-loop at vertex " + std::to_string(a));
    }
    g.edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw Error(ErrorCode::kDuplicateEdge,
                "duplicate edge (" + std::to_string(dup->first) + "," +
                    std::to_string(dup->second) + ")");
  }
  for (auto [a, b] : g.edges_) {
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  g.labels_ = std::move(labels);

  auto dist = bfs_distances(g, 0);
  auto unreached = std::find(dist.begin(), dist.end(), -1);
  if (unreached != dist.end()) {
    throw Error(ErrorCode::kDisconnected,
                "vertex " + std::to_string(unreached - dist.begin()) +
                    " is not reachable from vertex 0");
  }
  return g;
}

Metric::Metric(const Graph& g) : n_(g.vertex_count()), dist_(n_ * n_) {
  for (Vertex s = 0; s < n_; ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), dist_.begin() + s * n_);
  }
}

int Metric::eccentricity(Vertex w) const {
  return *std::max_element(dist_.begin() + w * n_, dist_.begin() + (w + 1) * n_);
}

int Metric::diameter() const {
  return *std::max_element(dist_.begin(), dist_.end());
}

BipartiteStructure bipartite_decompose(const Graph& g) {
  // Distances from vertex 0 give the only candidate 2-coloring.
  auto dist = bfs_distances(g, 0);
  BipartiteStructure out;
  for (auto [a, b] : g.edges()) {
    if ((dist[a] - dist[b]) % 2 == 0) return out;
  }
  out.is_bipartite = true;
  out.side.resize(g.vertex_count());
  for (Vertex w = 0; w < g.vertex_count(); ++w) out.side[w] = dist[w] % 2;
  return out;
}

SpanningTree spanning_tree(const Graph& g, const Metric& metric) {
  const int n = g.vertex_count();
  SpanningTree tree;
  std::vector<char> seen(n, 0);
  std::vector<int> tree_degree(n, 0);
  std::queue<Vertex> queue;
  seen[0] = 1;
  queue.push(0);
  while (!queue.empty()) {
    Vertex w = queue.front();
    queue.pop();
    for (Vertex t : g.neighbors(w)) {
      if (seen[t]) continue;
      seen[t] = 1;
      tree.tree_edges.emplace_back(std::min(w, t), std::max(w, t));
      ++tree_degree[w];
      ++tree_degree[t];
      queue.push(t);
    }
  }
  std::sort(tree.tree_edges.begin(), tree.tree_edges.end());
  for (Vertex w = 0; w < n; ++w) {
    if (tree_degree[w] == 1) tree.leaves.push_back(w);
  }
  tree.r.assign(n, 0);
  if (tree.leaves.empty()) return tree;  // single vertex
  for (Vertex w = 0; w < n; ++w) {
    int best = metric(w, tree.leaves.front());
    for (Vertex leaf : tree.leaves) best = std::min(best, metric(w, leaf));
    tree.r[w] = best;
  }
  return tree;
}

std::vector<Vertex> r_monotone_ordering(const SpanningTree& tree) {
  std::vector<Vertex> order(tree.r.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Vertex>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return tree.r[a] < tree.r[b]; });
  return order;
}

void enumerate_connected_graphs(int n_max,
                                const std::function<void(const Graph&)>& visit) {
  if (n_max < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n_max must be at least 1");
  }
  if (n_max > kMaxEnumerationVertices) {
    throw Error(ErrorCode::kLimitExceeded,
                "enumeration is limited to n_max <= " +
                    std::to_string(kMaxEnumerationVertices));
  }
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Edge> slots;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const unsigned long total = 1ul << slots.size();
    std::vector<int> parent(n);
    std::vector<Edge> edges;
    for (unsigned long mask = 0; mask < total; ++mask) {
      // Union-find connectivity test before paying for a full build.
      for (int i = 0; i < n; ++i) parent[i] = i;
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      int components = n;
      edges.clear();
      for (size_t s = 0; s < slots.size(); ++s) {
        if (!(mask >> s & 1ul)) continue;
        edges.push_back(slots[s]);
        int a = find(slots[s].first), b = find(slots[s].second);
        if (a != b) {
          parent[a] = b;
          --components;
        }
      }
      if (components == 1) visit(build_graph(n, edges));
    }
  }
}

std::vector<Graph> connected_graphs(int n_max) {
  std::vector<Graph> out;
  enumerate_connected_graphs(n_max, [&](const Graph& g) { out.push_back(g); });
  return out;
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return build_graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return build_graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return build_graph(leaves + 1, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return build_graph(a + b, edges);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  int line_no = 0;
  std::vector<int> line_numbers;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    rows.push_back(std::move(tokens));
    line_numbers.push_back(line_no);
  }
  if (rows.empty()) throw Error(ErrorCode::kParse, "graph file is empty");
  int n = 0, m = 0;
  if (rows[0].size() != 2 || !parse_int(rows[0][0], n) ||
      !parse_int(rows[0][1], m) || m < 0) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_numbers[0]) +
                                       ": expected header \"n m\"");
  }
  if (static_cast<int>(rows.size()) - 1 != m) {
    throw Error(ErrorCode::kParse, "header declares " + std::to_string(m) +
                                       " edges but " +
                                       std::to_string(rows.size() - 1) +
                                       " edge lines follow");
  }
  bool named = false;
  for (size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != 2) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_numbers[r]) +
                                         ": expected two vertices");
    }
    int dummy = 0;
    for (const auto& tok : rows[r]) named |= !parse_int(tok, dummy);
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  if (named) {
    std::unordered_map<std::string, int> index;
    auto id = [&](const std::string& tok) {
      auto [it, inserted] = index.emplace(tok, static_cast<int>(labels.size()));
      if (inserted) labels.push_back(tok);
      return it->second;
    };
    for (size_t r = 1; r < rows.size(); ++r) {
      int a = id(rows[r][0]);
      int b = id(rows[r][1]);
      edges.emplace_back(a, b);
    }
    if (static_cast<int>(labels.size()) != n) {
      throw Error(ErrorCode::kParse, "header declares " + std::to_string(n) +
                                         " vertices but edges name " +
                                         std::to_string(labels.size()));
    }
  } else {
    for (size_t r = 1; r < rows.size(); ++r) {
      int a = 0, b = 0;
      parse_int(rows[r][0], a);
      parse_int(rows[r][1], b);
      edges.emplace_back(a, b);
    }
  }
  return build_graph(n, edges, std::move(labels));
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open graph file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [a, b] : g.edges()) {
    out << g.vertex_name(a) << ' ' << g.vertex_name(b) << '\n';
  }
  return out.str();
}

}  // namespace walkdist
