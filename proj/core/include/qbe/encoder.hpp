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
#include <string>

#include "qbe/blockdiag.hpp"
#include "qbe/circuit.hpp"
#include "qbe/fdm.hpp"

namespace qbe {

enum class Form { lcu, simplified };
enum class NdScheme { shared, flagged };

std::string to_string(Form form);
std::string to_string(NdScheme scheme);

/// A unitary circuit whose upper-left block (ancillae projected onto |0>)
/// equals the target matrix divided by eta.
struct BlockEncoding {
  Circuit circuit;
  int ancillae = 0;             // m; the first m qubits of the circuit
  double eta = 1.0;             // subnormalization
  std::size_t target_size = 0;  // rows of the encoded matrix
  BcKind variant = BcKind::periodic;
  int dim = 1;
  Form form = Form::lcu;
};

/// Encoding of a single decomposition term, laid out as
/// [inner ancilla (if used)] + [system]. Terms with an all-ones diagonal are
/// bare unitaries; the rest carry one inner ancilla. `subnorm` is the scalar
/// the term circuit's block is short by (1 except for the Robin Z terms).
struct TermEncoding {
  Circuit circuit;
  bool uses_inner = false;
  double subnorm = 1.0;
};

TermEncoding encode_term(const BlockDiagTerm& term, int n);

/// Block-encoding of the n-qubit zero operator: a single X on the ancilla
/// moves every branch outside the projector.
BlockEncoding zero_block_encoding(int n);

/// Block-encoding circuit for the 1-D stencil. The lcu form is generated
/// from the decomposition; the simplified form is the fixed gate sequence
/// with the same block. Ancilla counts are 2/3/3/5 and eta is 4/4/4/8 for
/// periodic/Dirichlet/Neumann/Robin.
BlockEncoding encode(const BoundaryCondition& bc, const Grid& grid, Form form);

/// Block-encoding of the d-dimensional Kronecker sum, d >= 2. The shared
/// scheme reuses one set of 1-D ancillae across dimensions under a
/// ceil(log2 d)-qubit dimension selector; the flagged scheme toggles one
/// flag qubit per dimension and gives each dimension its own ancillae.
/// eta = eta_1d * 2^ceil(log2 d). d = 1 delegates to encode().
BlockEncoding encode_ndim(const BoundaryCondition& bc, const Grid& grid,
                          NdScheme scheme, Form inner_form = Form::simplified);

/// JSON manifest describing an emitted encoding.
std::string manifest_json(const BlockEncoding& be,
                          const std::string& qasm_file);

}  // namespace qbe
