// Copyright 2026 The qbe developers
//
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

#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "qbe/fdm.hpp"
#include "qbe/matrix.hpp"

namespace qbe {

enum class Pauli { I, X, Y, Z };

std::string to_string(Pauli p);
Pauli pauli_from_string(const std::string& name);

/// One summand chi * P_c * (diag (x) sigma) * P_c^dagger of a
/// block-diagonalized stencil.
struct BlockDiagTerm {
  int c = 0;                 // permutation shift, 0 or 1
  Pauli pauli = Pauli::I;
  double chi = 1.0;          // +1 for I and Z terms, -1 for X terms
  std::vector<double> diag;  // length N/2
};

struct Decomposition {
  BcKind variant = BcKind::periodic;
  std::size_t points = 0;  // N
  std::vector<BlockDiagTerm> terms;
};

/// Block-diagonalization of the 1-D stencil: four terms for
/// periodic/Dirichlet/Neumann, six for Robin.
Decomposition decompose(const BoundaryCondition& bc, const Grid& grid);

/// Cyclic shift-by-c matrix sum_i |i + c mod N><i|.
Mat permutation_matrix(int c, std::size_t N);

/// Evaluates the decomposition back into a dense stencil. Exact for the
/// integer-valued variants; the Robin corners carry the usual floating error.
StencilMatrix reconstruct(const Decomposition& dec);

/// Weights (sigma, w) with sum_sigma w * sigma equal to the given symmetric
/// 2x2 block; zero weights are omitted. Y never appears for real symmetric
/// input.
std::vector<std::pair<Pauli, double>> pauli_block_decompose_2x2(
    const std::array<std::array<double, 2>, 2>& block);

std::string to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const std::string& text);

}  // namespace qbe
