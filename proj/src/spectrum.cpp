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

#include "walkdist/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "walkdist/error.hpp"

namespace walkdist {
namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) sum += a[i * n + j] * a[i * n + j];
  return std::sqrt(sum);
}

}  // namespace

SymmetricEigen jacobi_eigen(std::vector<double> a, int n, double tol,
                            int max_sweeps) {
  if (static_cast<int>(a.size()) != n * n) {
    throw Error(ErrorCode::kInvalidArgument, "matrix is not n x n");
  }
  std::vector<double> v(n * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  SymmetricEigen out;
  while (off_diagonal_norm(a, n) > tol && out.sweeps < max_sweeps) {
    ++out.sweeps;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        // Rotation angle chosen to annihilate a[p][q].
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int x, int y) { return a[x * n + x] < a[y * n + y]; });
  out.values.resize(n);
  out.vectors.assign(n * n, 0.0);
  for (int j = 0; j < n; ++j) {
    out.values[j] = a[idx[j] * n + idx[j]];
    for (int k = 0; k < n; ++k) out.vectors[k * n + j] = v[k * n + idx[j]];
  }
  return out;
}

SymmetricEigen walk_eigen(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<double> s(n * n, 0.0);
  for (auto [a, b] : g.edges()) {
    const double entry = 1.0 / std::sqrt(static_cast<double>(g.degree(a)) *
                                         g.degree(b));
    s[a * n + b] = entry;
    s[b * n + a] = entry;
  }
  if (n == 1) s[0] = 1.0;
  return jacobi_eigen(std::move(s), n);
}

std::vector<double> spectrum(const Graph& g, double laziness) {
  if (!(laziness >= 0.0 && laziness <= 1.0)) {
    throw Error(ErrorCode::kLazinessOutOfRange, "laziness outside [0, 1]");
  }
  auto eig = walk_eigen(g);
  std::vector<double> out;
  out.reserve(eig.values.size());
  for (double x : eig.values) out.push_back(laziness + (1.0 - laziness) * x);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace walkdist
