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

#include <string>
#include <variant>
#include <vector>

#include "qbe/errors.hpp"

namespace qbe {

// Qubit 0 of a register is its most significant bit, so |i> corresponds to
// the integer i read left to right across the register.

struct HGate {
  int target;
};
struct XGate {
  int target;
};
struct ZGate {
  int target;
};
struct RyGate {
  int target;
  double theta;  // Ry(theta)|0> = cos(theta/2)|0> + sin(theta/2)|1>
};

enum class Polarity { open, closed };

struct Control {
  int qubit;
  Polarity polarity = Polarity::closed;
};

using BaseGate = std::variant<HGate, XGate, ZGate, RyGate>;

struct MultiControlled {
  std::vector<Control> controls;
  BaseGate base;
};

/// Modulo-2^n incrementer over the listed qubits (most significant first).
struct Add1 {
  std::vector<int> reg;
};
struct Add1Dag {
  std::vector<int> reg;
};

using Gate = std::variant<HGate, XGate, ZGate, RyGate, MultiControlled, Add1,
                          Add1Dag>;

int gate_target(const BaseGate& g);

/// Named index ranges inside a circuit; empty registers have size 0.
struct Layout {
  int lcu_start = 0, lcu_size = 0;
  int inner_start = 0, inner_size = 0;
  int flag_start = 0, flag_size = 0;
  int system_start = 0, system_size = 0;

  bool in_system(int qubit) const {
    return qubit >= system_start && qubit < system_start + system_size;
  }
};

struct Circuit {
  int qubit_count = 0;
  Layout layout;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int qubits) : qubit_count(qubits) {}
  Circuit(int qubits, Layout lay) : qubit_count(qubits), layout(lay) {}

  /// Appends a gate after validating that its qubits are in range and that
  /// controls are pairwise distinct and disjoint from the target.
  void add(Gate g);

  // convenience builders
  void h(int t) { add(HGate{t}); }
  void x(int t) { add(XGate{t}); }
  void z(int t) { add(ZGate{t}); }
  void ry(int t, double theta) { add(RyGate{t, theta}); }
  void mcx(std::vector<Control> controls, int t) {
    add(MultiControlled{std::move(controls), XGate{t}});
  }
  /// Phase flip on the all-closed state of `qubits` (last one is the Z base).
  void mcz(const std::vector<int>& qubits);
};

/// Incrementer i -> i+1 mod 2^n as a descending ladder of multi-controlled
/// X gates followed by an unconditional flip of the least significant bit.
Circuit add1_circuit(int n);

/// The ladder gates of add1_circuit placed on an explicit qubit list, with
/// optional extra controls on every gate.
std::vector<Gate> add1_gates(const std::vector<int>& reg,
                             const std::vector<Control>& extra = {});
std::vector<Gate> add1dag_gates(const std::vector<int>& reg,
                                const std::vector<Control>& extra = {});

Gate inverse_gate(const Gate& g);

/// Reversed gate order with every gate inverted.
Circuit adjoint(const Circuit& circ);

/// OpenQASM 3 source. Multi-controls use ctrl modifiers with open controls
/// wrapped in X conjugation; Add1 nodes are expanded to their ladder first.
/// Output is deterministic for identical circuits.
std::string emit_qasm(const Circuit& circ);

}  // namespace qbe
