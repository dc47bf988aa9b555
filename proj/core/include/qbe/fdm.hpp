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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qbe/errors.hpp"
#include "qbe/matrix.hpp"

namespace qbe {

enum class BcKind { periodic, dirichlet, neumann, robin };

std::string to_string(BcKind kind);
BcKind bc_kind_from_string(const std::string& name);

/// Boundary condition of a 1-D Poisson problem on [0,1].
///
/// Robin data is a*u(0) + b*u'(0) = A and c*u(1) + d*u'(1) = B. The matrix
/// corner entries derived from it are C = 1 + a*h/b and D = 1 + c*h/d, which
/// must land in [0, 2) for the grid in use. `robin_cd` bypasses the raw
/// coefficients and fixes C and D directly.
struct BoundaryCondition {
  BcKind kind = BcKind::periodic;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double A = 0.0;
  double B = 0.0;
  std::optional<std::pair<double, double>> direct_cd;

  static BoundaryCondition periodic() { return {}; }
  static BoundaryCondition dirichlet(double a, double b) {
    return {BcKind::dirichlet, a, b, 0.0, 0.0, 0.0, 0.0, std::nullopt};
  }
  static BoundaryCondition neumann(double a, double b) {
    return {BcKind::neumann, a, b, 0.0, 0.0, 0.0, 0.0, std::nullopt};
  }
  static BoundaryCondition robin(double a, double b, double c, double d,
                                 double A = 0.0, double B = 0.0) {
    return {BcKind::robin, a, b, c, d, A, B, std::nullopt};
  }
  static BoundaryCondition robin_cd(double C, double D) {
    BoundaryCondition bc;
    bc.kind = BcKind::robin;
    bc.b = 1.0;
    bc.d = 1.0;
    bc.direct_cd = std::make_pair(C, D);
    return bc;
  }
};

/// Uniform grid with 2^n points per dimension.
struct Grid {
  int n = 2;  // qubits per dimension
  int d = 1;  // dimension count

  std::size_t points() const { return std::size_t{1} << n; }
  std::size_t total_size() const;

  /// Grid spacing: 1/N, except 1/(N+2) for Dirichlet.
  double spacing(BcKind kind) const;

  /// Grid constructed from a point count, which must be a power of two >= 4.
  static Grid from_points(std::size_t N, int d = 1);
};

/// Dense unscaled finite-difference stencil. The represented operator is
/// (1/h^2) * entries; the h^2 factor is folded into build_rhs instead so
/// that entries stay integer-valued (up to the Robin corners C, D).
struct StencilMatrix {
  std::size_t size = 0;
  Mat entries;
  BcKind variant = BcKind::periodic;
  int dim = 1;

  static constexpr const char* scale_note =
      "represented operator is (1/h^2) * entries";
};

/// Derived Robin corner entries (C, D); validates b, d != 0 and C, D in [0,2).
std::pair<double, double> robin_corners(const BoundaryCondition& bc,
                                        const Grid& grid);

/// N x N unscaled stencil for a 1-D problem.
StencilMatrix build_matrix(const BoundaryCondition& bc, const Grid& grid);

/// Right-hand side of the unscaled system: the h^2-scaled data vector plus
/// the variant's boundary contributions, so StencilMatrix * u = rhs.
std::vector<double> build_rhs(const BoundaryCondition& bc, const Grid& grid,
                              const std::vector<double>& f_samples);

/// Kronecker-sum operator over d dimensions, assembled densely.
StencilMatrix build_matrix_ndim(const BoundaryCondition& bc, const Grid& grid,
                                std::size_t size_cap = std::size_t{1} << 14);

/// Coordinates of the 1-D unknowns (Dirichlet excludes the boundary nodes).
std::vector<double> grid_points(const BoundaryCondition& bc, const Grid& grid);

/// Matrix Market coordinate export (symmetric real).
std::string to_matrix_market(const StencilMatrix& m);

}  // namespace qbe
