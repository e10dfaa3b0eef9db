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

#ifndef WALKDIST_SPECTRUM_HPP_
#define WALKDIST_SPECTRUM_HPP_

#include <vector>

#include "walkdist/graph.hpp"

namespace walkdist {

struct SymmetricEigen {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column j (row-major n x n) pairs values[j]
  int sweeps = 0;
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is below tol.
// matrix is row-major n x n and must be symmetric.
SymmetricEigen jacobi_eigen(std::vector<double> matrix, int n,
                            double tol = 1e-12, int max_sweeps = 100);

// Eigenvalues of the lazy walk matrix, ascending. Computed from the symmetric
// matrix D^{1/2} P D^{-1/2} and mapped through laziness + (1 - laziness) x.
std::vector<double> spectrum(const Graph& g, double laziness);

// Eigen-decomposition of the non-lazy walk: P = D^{-1/2} Q diag(values) Q^T
// D^{1/2} where Q holds the eigenvectors of the symmetrized matrix.
SymmetricEigen walk_eigen(const Graph& g);

}  // namespace walkdist

#endif  // WALKDIST_SPECTRUM_HPP_
