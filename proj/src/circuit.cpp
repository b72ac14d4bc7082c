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

#include "mpsprep/circuit.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "mpsprep/error.hpp"
#include "mpsprep/qubit_order.hpp"

namespace mpsprep {

namespace {

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
    const std::int64_t q = num / den;
    const std::int64_t r = num % den;
    return (r != 0 && ((r > 0) == (den > 0))) ? q + 1 : q;
}

// Right-canonical residual accepted by the embedding.
constexpr double kCanonicalTolerance = 1e-8;

}  // namespace

std::int64_t CostModel::gate_cost(std::size_t width) const {
    if (width <= 1) {
        return 0;
    }
    if (width == 2) {
        return two_qubit;
    }
    const std::int64_t p2 = std::int64_t{1} << width;
    return ceil_div(c4 * p2 * p2 + c2 * p2 + c0, denominator);
}

std::vector<std::size_t> Circuit::widths() const {
    std::vector<std::size_t> out;
    out.reserve(gates.size());
    for (const GateOp &g : gates) {
        out.push_back(g.width);
    }
    return out;
}

std::map<std::size_t, std::size_t> Circuit::width_histogram() const {
    std::map<std::size_t, std::size_t> hist;
    for (const GateOp &g : gates) {
        ++hist[g.width];
    }
    return hist;
}

std::size_t Circuit::depth_estimate() const {
    std::vector<std::size_t> frontier(num_qubits + 1, 0);
    std::size_t depth = 0;
    for (const GateOp &g : gates) {
        std::size_t layer = 0;
        for (std::size_t q = g.start_qubit; q <= g.last_qubit(); ++q) {
            layer = std::max(layer, frontier[q]);
        }
        ++layer;
        for (std::size_t q = g.start_qubit; q <= g.last_qubit(); ++q) {
            frontier[q] = layer;
        }
        depth = std::max(depth, layer);
    }
    return depth;
}

std::vector<std::size_t> gate_widths(const MpsState &mps) {
    const std::vector<std::size_t> dims = mps.bond_dims();
    std::vector<std::size_t> widths;
    widths.reserve(mps.num_qubits());
    for (std::size_t dim : dims) {
        widths.push_back(1 + static_cast<std::size_t>(std::bit_width(dim - 1)));
    }
    widths.push_back(1);
    return widths;
}

Circuit synthesize(const MpsState &mps, const CostModel &model) {
    const double residual = verify_right_canonical(mps);
    if (!mps.right_canonical() || !(residual < kCanonicalTolerance)) {
        throw Error(ErrorCode::NotCanonical,
                    "MPS is not right-canonical (residual " + std::to_string(residual) + ")");
    }
    const std::size_t q = mps.num_qubits();
    const std::vector<std::size_t> widths = gate_widths(mps);

    Circuit circuit;
    circuit.num_qubits = q;
    circuit.cost_model = model;
    circuit.gates.reserve(q);

    for (std::size_t n = 1; n <= q; ++n) {
        const std::size_t width = widths[n - 1];
        if (n + width - 1 > q) {
            throw Error(ErrorCode::SpanError, "gate " + std::to_string(n) + " would extend past the register");
        }
        if (n > 1 && widths[n - 2] > width + 1) {
            throw Error(ErrorCode::NumericalFailure, "gate width chain d_{n-1} - 1 <= d_n broken at gate " +
                                                         std::to_string(n));
        }
        const MpsCore &core = mps.core(n - 1);
        const auto dim = static_cast<Eigen::Index>(std::size_t{1} << width);

        // Column alpha^{n-1}, row alpha^n * 2 + j_n: qubit n is local bit 0.
        static_assert(local_bit(1, 1) == 0);
        ComplexMatrix partial = ComplexMatrix::Zero(dim, static_cast<Eigen::Index>(core.left));
        for (std::size_t a = 0; a < core.left; ++a) {
            for (std::size_t j = 0; j < 2; ++j) {
                for (std::size_t b = 0; b < core.right; ++b) {
                    partial(static_cast<Eigen::Index>(b * 2 + j), static_cast<Eigen::Index>(a)) = core(a, j, b);
                }
            }
        }
        circuit.gates.push_back(GateOp{n, width, complete_to_unitary(partial)});
    }
    return circuit;
}

std::vector<std::size_t> cap2_ranks(std::size_t num_qubits) {
    return std::vector<std::size_t>(num_qubits > 0 ? num_qubits - 1 : 0, 2);
}

Circuit capped_baseline(const AmplitudeVector &target, const CostModel &model) {
    if (target.num_qubits() < 2) {
        throw Error(ErrorCode::BadInput, "the capped baseline needs at least two qubits");
    }
    const std::vector<std::size_t> caps = cap2_ranks(target.num_qubits());
    return synthesize(decompose(target, caps), model);
}

std::int64_t entangling_cost(const Circuit &c) {
    std::int64_t total = 0;
    for (const GateOp &g : c.gates) {
        total += c.cost_model.gate_cost(g.width);
    }
    return total;
}

std::int64_t isometry_reference_cost(std::size_t num_qubits) {
    if (num_qubits < 1 || num_qubits > 62) {
        throw Error(ErrorCode::BadInput, "qubit count out of range");
    }
    return std::int64_t{1} << num_qubits;
}

}  // namespace mpsprep
