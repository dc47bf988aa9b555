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

#include "qbe/fdm.hpp"

#include <sstream>

namespace qbe {

std::string to_string(BcKind kind) {
  switch (kind) {
    case BcKind::periodic: return "periodic";
    case BcKind::dirichlet: return "dirichlet";
    case BcKind::neumann: return "neumann";
    case BcKind::robin: return "robin";
  }
  return "unknown";
}

BcKind bc_kind_from_string(const std::string& name) {
  if (name == "periodic") return BcKind::periodic;
  if (name == "dirichlet") return BcKind::dirichlet;
  if (name == "neumann") return BcKind::neumann;
  if (name == "robin") return BcKind::robin;
  throw UnsupportedVariant("unknown boundary condition: " + name);
}

std::size_t Grid::total_size() const {
  std::size_t s = 1;
  for (int k = 0; k < d; ++k) s *= points();
  return s;
}

double Grid::spacing(BcKind kind) const {
  const double N = static_cast<double>(points());
  return kind == BcKind::dirichlet ? 1.0 / (N + 2.0) : 1.0 / N;
}

Grid Grid::from_points(std::size_t N, int d) {
  if (N < 4 || (N & (N - 1)) != 0)
    throw NonPowerOfTwoSize("grid needs a power-of-two point count >= 4, got " +
                            std::to_string(N));
  int n = 0;
  while ((std::size_t{1} << n) < N) ++n;
  return Grid{n, d};
}

std::pair<double, double> robin_corners(const BoundaryCondition& bc,
                                        const Grid& grid) {
  double C, D;
  if (bc.direct_cd) {
    C = bc.direct_cd->first;
    D = bc.direct_cd->second;
  } else {
    if (bc.b == 0.0 || bc.d == 0.0)
      throw RobinDegenerate("Robin boundary needs b != 0 and d != 0");
    const double h = grid.spacing(BcKind::robin);
    C = 1.0 + bc.a * h / bc.b;
    D = 1.0 + bc.c * h / bc.d;
  }
  if (!(C >= 0.0 && C < 2.0) || !(D >= 0.0 && D < 2.0))
    throw RobinOutOfRange("Robin corners C=" + std::to_string(C) +
                          ", D=" + std::to_string(D) + " outside [0,2)");
  return {C, D};
}

StencilMatrix build_matrix(const BoundaryCondition& bc, const Grid& grid) {
  if (grid.n < 2)
    throw NonPowerOfTwoSize("need at least 4 grid points (n >= 2)");
  const std::size_t N = grid.points();
  StencilMatrix m;
  m.size = N;
  m.variant = bc.kind;
  m.dim = 1;
  m.entries = Mat(N, N);

  for (std::size_t i = 0; i < N; ++i) {
    m.entries(i, i) = 2.0;
    if (i + 1 < N) {
      m.entries(i, i + 1) = -1.0;
      m.entries(i + 1, i) = -1.0;
    }
  }
  switch (bc.kind) {
    case BcKind::periodic:
      m.entries(0, N - 1) = -1.0;
      m.entries(N - 1, 0) = -1.0;
      break;
    case BcKind::dirichlet:
      break;
    case BcKind::neumann:
      m.entries(0, 0) = 1.0;
      m.entries(N - 1, N - 1) = 1.0;
      break;
    case BcKind::robin: {
      const auto [C, D] = robin_corners(bc, grid);
      m.entries(0, 0) = C;
      m.entries(N - 1, N - 1) = D;
      break;
    }
  }
  return m;
}

std::vector<double> build_rhs(const BoundaryCondition& bc, const Grid& grid,
                              const std::vector<double>& f_samples) {
  const std::size_t N = grid.points();
  if (f_samples.size() != N)
    throw LengthMismatch("expected " + std::to_string(N) + " samples, got " +
                         std::to_string(f_samples.size()));
  const double h = grid.spacing(bc.kind);
  std::vector<double> rhs(N);
  for (std::size_t j = 0; j < N; ++j) rhs[j] = h * h * f_samples[j];
  switch (bc.kind) {
    case BcKind::periodic:
      break;
    case BcKind::dirichlet:
      rhs[0] -= bc.a;
      rhs[N - 1] -= bc.b;
      break;
    case BcKind::neumann:
      // the boundary rows replace the data samples outright
      rhs[0] = -bc.a * h;
      rhs[N - 1] = bc.b * h;
      break;
    case BcKind::robin:
      if (bc.b == 0.0 || bc.d == 0.0)
        throw RobinDegenerate("Robin boundary needs b != 0 and d != 0");
      rhs[0] = -bc.A * h * h / bc.b;
      rhs[N - 1] = bc.B * h * h / bc.d;
      break;
  }
  return rhs;
}

StencilMatrix build_matrix_ndim(const BoundaryCondition& bc, const Grid& grid,
                                std::size_t size_cap) {
  const std::size_t N = grid.points();
  const std::size_t total = grid.total_size();
  if (total > size_cap)
    throw SizeCapExceeded("dense assembly of size " + std::to_string(total) +
                          " exceeds cap " + std::to_string(size_cap));
  const StencilMatrix one = build_matrix(bc, Grid{grid.n, 1});
  StencilMatrix m;
  m.size = total;
  m.variant = bc.kind;
  m.dim = grid.d;
  m.entries = Mat(total, total);

  // sum_k I^(k-1) (x) L (x) I^(d-k): entry ((i,j)) couples indices that agree
  // on every digit except the k-th.
  std::vector<std::size_t> stride(grid.d);
  for (int k = 0; k < grid.d; ++k) {
    std::size_t s = 1;
    for (int j = k + 1; j < grid.d; ++j) s *= N;
    stride[k] = s;
  }
  for (std::size_t row = 0; row < total; ++row) {
    for (int k = 0; k < grid.d; ++k) {
      const std::size_t digit = (row / stride[k]) % N;
      const std::size_t base = row - digit * stride[k];
      for (std::size_t col_digit = 0; col_digit < N; ++col_digit) {
        const double v = one.entries(digit, col_digit);
        if (v == 0.0) continue;
        m.entries(row, base + col_digit * stride[k]) += v;
      }
    }
  }
  return m;
}

std::vector<double> grid_points(const BoundaryCondition& bc, const Grid& grid) {
  const std::size_t N = grid.points();
  const double h = grid.spacing(bc.kind);
  std::vector<double> x(N);
  const double offset = bc.kind == BcKind::dirichlet ? 1.0 : 0.0;
  for (std::size_t j = 0; j < N; ++j)
    x[j] = (static_cast<double>(j) + offset) * h;
  return x;
}

std::string to_matrix_market(const StencilMatrix& m) {
  std::ostringstream out;
  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  std::size_t nnz = 0;
  for (std::size_t i = 0; i < m.size; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (m.entries(i, j) != 0.0) ++nnz;
  out << m.size << " " << m.size << " " << nnz << "\n";
  out.precision(17);
  for (std::size_t i = 0; i < m.size; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (m.entries(i, j) != 0.0)
        out << i + 1 << " " << j + 1 << " " << m.entries(i, j) << "\n";
  return out.str();
}

}  // namespace qbe
