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

// Independent oracles and helpers shared by the test binaries. Nothing here
// calls into the code it is used to check.

#ifndef WALKDIST_TESTS_SUPPORT_HPP_
#define WALKDIST_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "walkdist/error.hpp"
#include "walkdist/graph.hpp"
#include "walkdist/walks.hpp"

namespace testing {

using walkdist::Distribution;
using walkdist::DistributionKind;
using walkdist::Graph;
using walkdist::Vertex;

#ifdef DOCTEST_LIBRARY_INCLUDED
// Error code thrown by f; fails the test when nothing is thrown.
template <typename F>
walkdist::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const walkdist::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return walkdist::ErrorCode::kInvalidArgument;
}
#endif

inline std::uint64_t seed() {
  const char* env = std::getenv("WALKDIST_SEED");
  return env ? std::strtoull(env, nullptr, 10) : 0;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(seed());
  return engine;
}

inline Distribution random_zero_sum(int n, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Distribution d{std::vector<double>(n), DistributionKind::kSigned};
  double sum = 0.0;
  for (auto& x : d.values) sum += (x = unit(gen));
  for (auto& x : d.values) x -= sum / n;
  return d;
}

inline Distribution random_probability(int n, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Distribution d{std::vector<double>(n), DistributionKind::kProbability};
  double sum = 0.0;
  for (auto& x : d.values) sum += (x = unit(gen));
  for (auto& x : d.values) x /= sum;
  return d;
}

// Floyd-Warshall on the adjacency relation.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.vertex_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [a, b] : g.edges()) d[a][b] = d[b][a] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// True when some closed walk of odd length <= 2n + 1 exists, by dynamic
// programming over walk lengths from every start vertex.
inline bool has_odd_closed_walk(const Graph& g) {
  const int n = g.vertex_count();
  for (int s = 0; s < n; ++s) {
    std::vector<bool> reach(n, false);
    reach[s] = true;
    for (int len = 1; len <= 2 * n + 1; ++len) {
      std::vector<bool> next(n, false);
      for (int w = 0; w < n; ++w) {
        if (!reach[w]) continue;
        for (Vertex t : g.neighbors(w)) next[t] = true;
      }
      reach = next;
      if (len % 2 == 1 && reach[s]) return true;
    }
  }
  return false;
}

using Matrix = std::vector<std::vector<double>>;

inline Matrix lazy_matrix(const Graph& g, double laziness) {
  const int n = g.vertex_count();
  Matrix p(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    p[i][i] = laziness;
    for (Vertex j : g.neighbors(i)) p[i][j] += (1.0 - laziness) / g.degree(i);
  }
  return p;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const size_t n = a.size();
  Matrix c(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// P^k by repeated squaring.
inline Matrix matrix_power(Matrix p, int k) {
  const size_t n = p.size();
  Matrix r(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i) r[i][i] = 1.0;
  for (; k > 0; k >>= 1) {
    if (k & 1) r = multiply(r, p);
    p = multiply(p, p);
  }
  return r;
}

// Row start of P^k: the distribution of a walk from `start` after k steps.
inline std::vector<double> walk_distribution(const Graph& g, double laziness,
                                             Vertex start, int k) {
  return matrix_power(lazy_matrix(g, laziness), k)[start];
}

// Integer ell with ell(0) = 0, entries in [-(n-1), n-1] and
// |ell(a) - ell(b)| <= 1 on every edge; plain odometer over the whole box.
inline std::vector<std::vector<int>> lipschitz_box(const Graph& g) {
  const int n = g.vertex_count();
  const int span = n - 1;
  std::vector<std::vector<int>> out;
  std::vector<int> ell(n, -span);
  ell[0] = 0;
  while (true) {
    bool ok = true;
    for (const auto& [a, b] : g.edges()) {
      if (std::abs(ell[a] - ell[b]) > 1) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(ell);
    int pos = 1;
    while (pos < n && ell[pos] == span) ell[pos++] = -span;
    if (pos >= n) break;
    ++ell[pos];
  }
  return out;
}

inline double lipschitz_max(const std::vector<std::vector<int>>& box,
                            const std::vector<double>& xi) {
  double best = 0.0;
  for (const auto& ell : box) {
    double v = 0.0;
    for (size_t w = 0; w < xi.size(); ++w) v += ell[w] * xi[w];
    best = std::max(best, v);
  }
  return best;
}

// Two-state chain staying with probability `laziness`, by 2x2 iteration.
inline std::pair<double, double> two_state_iterate(double laziness, int k) {
  double p0 = 1.0, p1 = 0.0;
  for (int i = 0; i < k; ++i) {
    const double q0 = laziness * p0 + (1.0 - laziness) * p1;
    const double q1 = (1.0 - laziness) * p0 + laziness * p1;
    p0 = q0;
    p1 = q1;
  }
  return {p0, p1};
}

inline double max_abs(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace testing

#endif  // WALKDIST_TESTS_SUPPORT_HPP_
