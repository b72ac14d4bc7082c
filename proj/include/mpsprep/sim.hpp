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

#pragma once

#include <cstddef>
#include <vector>

#include "mpsprep/circuit.hpp"
#include "mpsprep/mps.hpp"

namespace mpsprep {

/// Exact register state; same index convention as AmplitudeVector.
struct StateVector {
    std::size_t num_qubits = 0;
    std::vector<Complex> amps;

    /// |0...0>
    static StateVector zero(std::size_t num_qubits);

    double norm() const;
    AmplitudeVector to_amplitudes() const { return AmplitudeVector(amps); }
};

/// Unitarity residual accepted by apply_gate.
inline constexpr double kUnitaryTolerance = 1e-8;

/// Multiplies g into s in place (stride-block application, one 2^d scratch block).
void apply_gate_inplace(StateVector &s, const GateOp &g);

StateVector apply_gate(StateVector s, const GateOp &g);

/// Applies the gates in order to |0...0>.
StateVector run(const Circuit &c);

struct VerifyResult {
    double fidelity = 0.0;
    std::vector<double> probabilities;  // |amp|^2 of the simulated state
};

VerifyResult verify(const Circuit &c, const AmplitudeVector &target);

}  // namespace mpsprep
