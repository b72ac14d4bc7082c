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
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mpsprep/linalg.hpp"
#include "mpsprep/mps.hpp"

namespace mpsprep {

/// A width-qubit unitary on the contiguous span [start_qubit, start_qubit+width-1].
struct GateOp {
    std::size_t start_qubit = 1;
    std::size_t width = 1;
    ComplexMatrix matrix;

    std::size_t last_qubit() const { return start_qubit + width - 1; }
};

/// Analytic two-qubit-gate count per gate width. Width 1 is free, width 2 costs
/// `two_qubit`, and width d >= 3 costs
/// ceil((c4 * 4^d + c2 * 2^d + c0) / denominator).
struct CostModel {
    std::string name = "generic-unitary-leading-order";
    std::int64_t two_qubit = 3;
    std::int64_t c4 = 23;
    std::int64_t c2 = -72;
    std::int64_t c0 = 64;
    std::int64_t denominator = 48;

    std::int64_t gate_cost(std::size_t width) const;
};

struct Circuit {
    std::size_t num_qubits = 0;
    std::vector<GateOp> gates;  // applied in order, gate 1 first
    CostModel cost_model;

    std::vector<std::size_t> widths() const;
    std::map<std::size_t, std::size_t> width_histogram() const;
    /// Number of sequential gates (Q).
    std::size_t sequential_depth() const { return gates.size(); }
    /// ASAP layering: each gate sits one layer above the latest earlier gate
    /// sharing a qubit with it.
    std::size_t depth_estimate() const;
};

/// d_n = 1 + ceil(log2 dim alpha^n) for n < Q, d_Q = 1.
std::vector<std::size_t> gate_widths(const MpsState &mps);

/// Embeds each right-canonical core into a 2^{d_n} unitary and completes it.
Circuit synthesize(const MpsState &mps, const CostModel &model = {});

/// The single-layer sequential 2-qubit-gate baseline: decompose with every
/// rank capped at 2, then synthesize.
Circuit capped_baseline(const AmplitudeVector &target, const CostModel &model = {});

/// Rank caps of 2 at every bond of a Q-qubit register.
std::vector<std::size_t> cap2_ranks(std::size_t num_qubits);

std::int64_t entangling_cost(const Circuit &c);

/// Leading-order CNOT count 2^Q of isometric decomposition.
std::int64_t isometry_reference_cost(std::size_t num_qubits);

/// Gates wider than this get a size warning from the CLI.
inline constexpr std::size_t kWideGateWarning = 10;

}  // namespace mpsprep
