// Copyright 2026 The mpsprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mpsprep/sim.hpp"

#include <cmath>
#include <string>

#include "mpsprep/error.hpp"
#include "mpsprep/qubit_order.hpp"

namespace mpsprep {

StateVector StateVector::zero(std::size_t num_qubits) {
    if (num_qubits < 1 || num_qubits > 30) {
        throw Error(ErrorCode::BadInput, "register size out of range");
    }
    StateVector s;
    s.num_qubits = num_qubits;
    s.amps.assign(std::size_t{1} << num_qubits, Complex{});
    s.amps[0] = 1.0;
    return s;
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const Complex &z : amps) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

void apply_gate_inplace(StateVector &s, const GateOp &g) {
    if (g.width < 1 || g.start_qubit < 1 || g.last_qubit() > s.num_qubits) {
        throw Error(ErrorCode::SpanError, "gate span [" + std::to_string(g.start_qubit) + ", " +
                                              std::to_string(g.last_qubit()) + "] outside a " +
                                              std::to_string(s.num_qubits) + "-qubit register");
    }
    const std::size_t block = std::size_t{1} << g.width;
    if (static_cast<std::size_t>(g.matrix.rows()) != block || static_cast<std::size_t>(g.matrix.cols()) != block) {
        throw Error(ErrorCode::DimensionMismatch, "gate matrix size does not match its width");
    }
    if (!all_finite(g.matrix) || isometry_residual(g.matrix) > kUnitaryTolerance) {
        throw Error(ErrorCode::NotUnitary, "gate on qubit " + std::to_string(g.start_qubit) + " is not unitary");
    }

    // Register offset of each local basis index.
    std::vector<std::size_t> offset(block, 0);
    for (std::size_t local = 0; local < block; ++local) {
        for (std::size_t q = g.start_qubit; q <= g.last_qubit(); ++q) {
            if ((local >> local_bit(g.start_qubit, q)) & 1U) {
                offset[local] |= std::size_t{1} << register_bit(s.num_qubits, q);
            }
        }
    }
    // The span occupies register bits [low, low + width).
    const std::size_t low = register_bit(s.num_qubits, g.last_qubit());
    const std::size_t low_mask = (std::size_t{1} << low) - 1;
    const std::size_t outer = s.amps.size() >> g.width;

    Eigen::VectorXcd in(static_cast<Eigen::Index>(block));
    Eigen::VectorXcd out(static_cast<Eigen::Index>(block));
    for (std::size_t rest = 0; rest < outer; ++rest) {
        const std::size_t base = (rest & low_mask) | ((rest >> low) << (low + g.width));
        for (std::size_t l = 0; l < block; ++l) {
            in[static_cast<Eigen::Index>(l)] = s.amps[base | offset[l]];
        }
        out.noalias() = g.matrix * in;
        for (std::size_t l = 0; l < block; ++l) {
            s.amps[base | offset[l]] = out[static_cast<Eigen::Index>(l)];
        }
    }
}

StateVector apply_gate(StateVector s, const GateOp &g) {
    apply_gate_inplace(s, g);
    return s;
}

StateVector run(const Circuit &c) {
    StateVector s = StateVector::zero(c.num_qubits);
    for (const GateOp &g : c.gates) {
        apply_gate_inplace(s, g);
    }
    return s;
}

VerifyResult verify(const Circuit &c, const AmplitudeVector &target) {
    if (c.num_qubits != target.num_qubits()) {
        throw Error(ErrorCode::DimensionMismatch, "circuit and target have different qubit counts");
    }
    const StateVector s = run(c);
    VerifyResult result;
    result.fidelity = fidelity(s.to_amplitudes(), target);
    result.probabilities.reserve(s.amps.size());
    for (const Complex &z : s.amps) {
        result.probabilities.push_back(std::norm(z));
    }
    return result;
}

}  // namespace mpsprep
