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

namespace mpsprep {

// Single source of truth for how qubit labels map onto bits. Both the gate
// synthesizer and the simulator go through these two functions.
//
// Register: qubit n (1-based) carries j_n, and j_1 is the most significant
// bit of an amplitude index, i = sum_n j_n 2^(Q-n).
//
// Gate: a gate spanning qubits start..start+width-1 indexes its 2^width local
// basis with qubit `start` as bit 0. Gate n therefore reads alpha^{n-1} on its
// span (fresh |0> qubits land in the high bits) and writes alpha^n * 2 + j_n.

constexpr std::size_t register_bit(std::size_t num_qubits, std::size_t qubit) { return num_qubits - qubit; }

constexpr std::size_t local_bit(std::size_t start_qubit, std::size_t qubit) { return qubit - start_qubit; }

}  // namespace mpsprep
