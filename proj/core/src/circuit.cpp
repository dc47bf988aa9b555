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

#include "qbe/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace qbe {

int gate_target(const BaseGate& g) {
  return std::visit([](const auto& b) { return b.target; }, g);
}

namespace {

void check_range(int qubit, int count) {
  if (qubit < 0 || qubit >= count)
    throw CircuitError("qubit index " + std::to_string(qubit) +
                       " out of range for " + std::to_string(count) +
                       " qubits");
}

void check_register(const std::vector<int>& reg, int count) {
  if (reg.empty()) throw CircuitError("Add1 register must be non-empty");
  std::set<int> seen;
  for (int q : reg) {
    check_range(q, count);
    if (!seen.insert(q).second)
      throw CircuitError("Add1 register qubits must be distinct");
  }
}

void validate(const Gate& g, int count) {
  std::visit(
      [count](const auto& gate) {
        using T = std::decay_t<decltype(gate)>;
        if constexpr (std::is_same_v<T, MultiControlled>) {
          const int t = gate_target(gate.base);
          check_range(t, count);
          std::set<int> seen{t};
          for (const auto& c : gate.controls) {
            check_range(c.qubit, count);
            if (!seen.insert(c.qubit).second)
              throw CircuitError(
                  "control qubits must be distinct from each other and from "
                  "the target");
          }
        } else if constexpr (std::is_same_v<T, Add1> ||
                             std::is_same_v<T, Add1Dag>) {
          check_register(gate.reg, count);
        } else {
          check_range(gate.target, count);
        }
      },
      g);
}

}  // namespace

void Circuit::add(Gate g) {
  validate(g, qubit_count);
  gates.push_back(std::move(g));
}

void Circuit::mcz(const std::vector<int>& qubits) {
  if (qubits.empty()) throw CircuitError("mcz needs at least one qubit");
  if (qubits.size() == 1) {
    z(qubits.front());
    return;
  }
  std::vector<Control> controls;
  for (std::size_t i = 0; i + 1 < qubits.size(); ++i)
    controls.push_back({qubits[i], Polarity::closed});
  add(MultiControlled{std::move(controls), ZGate{qubits.back()}});
}

std::vector<Gate> add1_gates(const std::vector<int>& reg,
                             const std::vector<Control>& extra) {
  const int n = static_cast<int>(reg.size());
  std::vector<Gate> gates;
  for (int k = 0; k < n - 1; ++k) {
    std::vector<Control> controls = extra;
    for (int m = k + 1; m < n; ++m)
      controls.push_back({reg[m], Polarity::closed});
    gates.push_back(MultiControlled{std::move(controls), XGate{reg[k]}});
  }
  if (extra.empty()) {
    gates.push_back(XGate{reg[n - 1]});
  } else {
    gates.push_back(MultiControlled{extra, XGate{reg[n - 1]}});
  }
  return gates;
}

std::vector<Gate> add1dag_gates(const std::vector<int>& reg,
                                const std::vector<Control>& extra) {
  auto gates = add1_gates(reg, extra);
  std::reverse(gates.begin(), gates.end());  // every ladder gate is self-inverse
  return gates;
}

Circuit add1_circuit(int n) {
  if (n < 1) throw CircuitError("add1_circuit needs n >= 1");
  Layout lay;
  lay.system_start = 0;
  lay.system_size = n;
  Circuit circ(n, lay);
  std::vector<int> reg(n);
  for (int i = 0; i < n; ++i) reg[i] = i;
  for (auto& g : add1_gates(reg)) circ.add(std::move(g));
  return circ;
}

Gate inverse_gate(const Gate& g) {
  return std::visit(
      [](const auto& gate) -> Gate {
        using T = std::decay_t<decltype(gate)>;
        if constexpr (std::is_same_v<T, RyGate>) {
          return RyGate{gate.target, -gate.theta};
        } else if constexpr (std::is_same_v<T, MultiControlled>) {
          MultiControlled inv = gate;
          if (auto* ry = std::get_if<RyGate>(&inv.base)) ry->theta = -ry->theta;
          return inv;
        } else if constexpr (std::is_same_v<T, Add1>) {
          return Add1Dag{gate.reg};
        } else if constexpr (std::is_same_v<T, Add1Dag>) {
          return Add1{gate.reg};
        } else {
          return gate;  // H, X, Z are self-inverse
        }
      },
      g);
}

Circuit adjoint(const Circuit& circ) {
  Circuit out(circ.qubit_count, circ.layout);
  out.gates.reserve(circ.gates.size());
  for (auto it = circ.gates.rbegin(); it != circ.gates.rend(); ++it)
    out.gates.push_back(inverse_gate(*it));
  return out;
}

namespace {

std::string format_angle(double theta) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", theta);
  return buf;
}

void emit_base(std::ostringstream& out, const BaseGate& base) {
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, HGate>) out << "h";
        else if constexpr (std::is_same_v<T, XGate>) out << "x";
        else if constexpr (std::is_same_v<T, ZGate>) out << "z";
        else out << "ry(" << format_angle(b.theta) << ")";
      },
      base);
}

void emit_gate(std::ostringstream& out, const Gate& g) {
  std::visit(
      [&](const auto& gate) {
        using T = std::decay_t<decltype(gate)>;
        if constexpr (std::is_same_v<T, HGate>) {
          out << "h q[" << gate.target << "];\n";
        } else if constexpr (std::is_same_v<T, XGate>) {
          out << "x q[" << gate.target << "];\n";
        } else if constexpr (std::is_same_v<T, ZGate>) {
          out << "z q[" << gate.target << "];\n";
        } else if constexpr (std::is_same_v<T, RyGate>) {
          out << "ry(" << format_angle(gate.theta) << ") q[" << gate.target
              << "];\n";
        } else if constexpr (std::is_same_v<T, MultiControlled>) {
          for (const auto& c : gate.controls)
            if (c.polarity == Polarity::open) out << "x q[" << c.qubit << "];\n";
          out << "ctrl(" << gate.controls.size() << ") @ ";
          emit_base(out, gate.base);
          out << " ";
          for (const auto& c : gate.controls) out << "q[" << c.qubit << "], ";
          out << "q[" << gate_target(gate.base) << "];\n";
          for (const auto& c : gate.controls)
            if (c.polarity == Polarity::open) out << "x q[" << c.qubit << "];\n";
        } else if constexpr (std::is_same_v<T, Add1>) {
          for (const auto& sub : add1_gates(gate.reg)) emit_gate(out, sub);
        } else {
          for (const auto& sub : add1dag_gates(gate.reg)) emit_gate(out, sub);
        }
      },
      g);
}

}  // namespace

std::string emit_qasm(const Circuit& circ) {
  std::ostringstream out;
  out << "OPENQASM 3.0;\n";
  out << "include \"stdgates.inc\";\n";
  out << "qubit[" << circ.qubit_count << "] q;\n";
  for (const auto& g : circ.gates) emit_gate(out, g);
  return out.str();
}

}  // namespace qbe
