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

#include "qbe/blockdiag.hpp"

#include <string>

#include "qbe/errors.hpp"

namespace qbe {

std::string to_string(Pauli p) {
  switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
  }
  return "?";
}

Pauli pauli_from_string(const std::string& name) {
  if (name == "I") return Pauli::I;
  if (name == "X") return Pauli::X;
  if (name == "Y") return Pauli::Y;
  if (name == "Z") return Pauli::Z;
  throw UnsupportedVariant("unknown Pauli: " + name);
}

namespace {

std::vector<double> ones_diag(std::size_t half, double last) {
  std::vector<double> diag(half, 1.0);
  diag[half - 1] = last;
  return diag;
}

std::vector<double> zeros_diag(std::size_t half, double last) {
  std::vector<double> diag(half, 0.0);
  diag[half - 1] = last;
  return diag;
}

}  // namespace

Decomposition decompose(const BoundaryCondition& bc, const Grid& grid) {
  if (grid.d != 1)
    throw UnsupportedVariant("decompose takes 1-D grids; compose higher "
                             "dimensions from the 1-D terms");
  const std::size_t N = grid.points();
  const std::size_t half = N / 2;
  Decomposition dec;
  dec.variant = bc.kind;
  dec.points = N;

  switch (bc.kind) {
    case BcKind::periodic:
      for (int c : {0, 1}) {
        dec.terms.push_back({c, Pauli::I, 1.0, ones_diag(half, 1.0)});
        dec.terms.push_back({c, Pauli::X, -1.0, ones_diag(half, 1.0)});
      }
      break;
    case BcKind::dirichlet:
      // only the shifted X term loses its last block
      dec.terms.push_back({0, Pauli::I, 1.0, ones_diag(half, 1.0)});
      dec.terms.push_back({0, Pauli::X, -1.0, ones_diag(half, 1.0)});
      dec.terms.push_back({1, Pauli::I, 1.0, ones_diag(half, 1.0)});
      dec.terms.push_back({1, Pauli::X, -1.0, ones_diag(half, 0.0)});
      break;
    case BcKind::neumann:
      dec.terms.push_back({0, Pauli::I, 1.0, ones_diag(half, 1.0)});
      dec.terms.push_back({0, Pauli::X, -1.0, ones_diag(half, 1.0)});
      dec.terms.push_back({1, Pauli::I, 1.0, ones_diag(half, 0.0)});
      dec.terms.push_back({1, Pauli::X, -1.0, ones_diag(half, 0.0)});
      break;
    case BcKind::robin: {
      const auto [C, D] = robin_corners(bc, grid);
      dec.terms.push_back({0, Pauli::I, 1.0, ones_diag(half, D / 2.0)});
      dec.terms.push_back({0, Pauli::Z, 1.0, zeros_diag(half, 1.0 - D / 2.0)});
      dec.terms.push_back({0, Pauli::X, -1.0, ones_diag(half, 1.0)});
      dec.terms.push_back({1, Pauli::I, 1.0, ones_diag(half, C / 2.0)});
      dec.terms.push_back({1, Pauli::Z, 1.0, zeros_diag(half, 1.0 - C / 2.0)});
      dec.terms.push_back({1, Pauli::X, -1.0, ones_diag(half, 0.0)});
      break;
    }
  }
  return dec;
}

Mat permutation_matrix(int c, std::size_t N) {
  Mat p(N, N);
  for (std::size_t i = 0; i < N; ++i)
    p((i + static_cast<std::size_t>(c)) % N, i) = 1.0;
  return p;
}

StencilMatrix reconstruct(const Decomposition& dec) {
  const std::size_t N = dec.points;
  StencilMatrix out;
  out.size = N;
  out.variant = dec.variant;
  out.dim = 1;
  out.entries = Mat(N, N);

  for (const auto& term : dec.terms) {
    // P_c (diag (x) sigma) P_c^dagger shifts each 2x2 block by c along the
    // diagonal (indices mod N), so the sum can be accumulated directly.
    for (std::size_t k = 0; k < N / 2; ++k) {
      const double v = term.chi * term.diag[k];
      if (v == 0.0) continue;
      const std::size_t r0 = (2 * k + static_cast<std::size_t>(term.c)) % N;
      const std::size_t r1 = (2 * k + 1 + static_cast<std::size_t>(term.c)) % N;
      switch (term.pauli) {
        case Pauli::I:
          out.entries(r0, r0) += v;
          out.entries(r1, r1) += v;
          break;
        case Pauli::X:
          out.entries(r0, r1) += v;
          out.entries(r1, r0) += v;
          break;
        case Pauli::Z:
          out.entries(r0, r0) += v;
          out.entries(r1, r1) -= v;
          break;
        case Pauli::Y:
          // antisymmetric and imaginary; no stencil in scope produces it
          throw UnsupportedVariant("Y terms cannot appear in a real stencil");
      }
    }
  }
  return out;
}

std::vector<std::pair<Pauli, double>> pauli_block_decompose_2x2(
    const std::array<std::array<double, 2>, 2>& block) {
  const double wi = (block[0][0] + block[1][1]) / 2.0;
  const double wz = (block[0][0] - block[1][1]) / 2.0;
  const double wx = (block[0][1] + block[1][0]) / 2.0;
  std::vector<std::pair<Pauli, double>> weights;
  if (wi != 0.0) weights.emplace_back(Pauli::I, wi);
  if (wx != 0.0) weights.emplace_back(Pauli::X, wx);
  if (wz != 0.0) weights.emplace_back(Pauli::Z, wz);
  return weights;
}

}  // namespace qbe
