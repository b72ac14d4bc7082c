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

#include "gtest/gtest.h"

#include "mpsprep/error.hpp"
#include "mpsprep/qubit_order.hpp"
#include "test_util.hpp"

using namespace mpsprep;
namespace t = mpsprep::testing;

namespace {

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an mpsprep::Error";
    return ErrorCode::Undefined;
}

ComplexMatrix pauli_x() {
    ComplexMatrix x = ComplexMatrix::Zero(2, 2);
    x(0, 1) = x(1, 0) = 1.0;
    return x;
}

ComplexMatrix hadamard() {
    ComplexMatrix h(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    h << r, r, r, -r;
    return h;
}

// CNOT with the first (start) qubit as control: local bit 0 is the control.
ComplexMatrix cnot_start_controls() {
    ComplexMatrix c = ComplexMatrix::Zero(4, 4);
    c(0, 0) = 1.0;
    c(2, 2) = 1.0;
    c(3, 1) = 1.0;
    c(1, 3) = 1.0;
    return c;
}

ComplexMatrix random_unitary(std::size_t width, std::uint64_t seed) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << width);
    return svd(t::random_matrix(dim, dim, seed)).u;
}

// Kronecker-product oracle: the full 2^Q operator for a gate, built from the
// bit conventions independently of the strided kernel.
ComplexMatrix dense_operator(std::size_t q, const GateOp &g) {
    const std::size_t n = std::size_t{1} << q;
    ComplexMatrix full = ComplexMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t col = 0; col < n; ++col) {
        // Qubit k (1-based) is register bit Q-k; gate qubit start+i is local bit i.
        std::size_t local_in = 0;
        for (std::size_t i = 0; i < g.width; ++i) {
            const std::size_t k = g.start_qubit + i;
            local_in |= ((col >> (q - k)) & 1U) << i;
        }
        for (std::size_t local_out = 0; local_out < (std::size_t{1} << g.width); ++local_out) {
            std::size_t row = col;
            for (std::size_t i = 0; i < g.width; ++i) {
                const std::size_t k = g.start_qubit + i;
                row &= ~(std::size_t{1} << (q - k));
                row |= ((local_out >> i) & 1U) << (q - k);
            }
            full(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
                g.matrix(static_cast<Eigen::Index>(local_out), static_cast<Eigen::Index>(local_in));
        }
    }
    return full;
}

}  // namespace

TEST(qubit_order, conventions) {
    static_assert(register_bit(3, 1) == 2);
    static_assert(register_bit(3, 3) == 0);
    static_assert(local_bit(2, 4) == 2);
    SUCCEED();
}

TEST(apply_gate, x_on_first_qubit_sets_msb) {
    const StateVector s = apply_gate(StateVector::zero(3), GateOp{1, 1, pauli_x()});
    EXPECT_EQ(s.amps[4], Complex(1.0));
    const StateVector s3 = apply_gate(StateVector::zero(3), GateOp{3, 1, pauli_x()});
    EXPECT_EQ(s3.amps[1], Complex(1.0));
}

TEST(apply_gate, identity_leaves_state_unchanged) {
    StateVector s;
    s.num_qubits = 5;
    s.amps = t::random_state(5, 1).amps();
    const StateVector out = apply_gate(s, GateOp{2, 3, ComplexMatrix::Identity(8, 8)});
    EXPECT_EQ(out.amps, s.amps);
}

TEST(apply_gate, bell_from_h_and_cnot) {
    StateVector s = StateVector::zero(2);
    apply_gate_inplace(s, GateOp{1, 1, hadamard()});
    apply_gate_inplace(s, GateOp{1, 2, cnot_start_controls()});
    EXPECT_NEAR(fidelity(s.to_amplitudes(), t::bell()), 1.0, 1e-15);
}

TEST(apply_gate, preserves_norm) {
    StateVector s;
    s.num_qubits = 8;
    s.amps = t::random_state(8, 2).amps();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t w = 1 + seed % 4;
        const std::size_t start = 1 + seed % (8 - w + 1);
        apply_gate_inplace(s, GateOp{start, w, random_unitary(w, seed)});
        EXPECT_NEAR(s.norm(), 1.0, 1e-12);
    }
}

TEST(apply_gate, disjoint_gates_commute) {
    StateVector s;
    s.num_qubits = 6;
    s.amps = t::random_state(6, 3).amps();
    const GateOp a{1, 2, random_unitary(2, 5)};
    const GateOp b{4, 3, random_unitary(3, 6)};
    const StateVector ab = apply_gate(apply_gate(s, a), b);
    const StateVector ba = apply_gate(apply_gate(s, b), a);
    EXPECT_LT(t::distance_squared(ab.amps, ba.amps), 1e-26);
}

TEST(apply_gate, agrees_with_dense_operator) {
    for (std::size_t q : {1u, 3u, 5u}) {
        for (std::size_t w = 1; w <= q; ++w) {
            for (std::size_t start = 1; start + w - 1 <= q; ++start) {
                const GateOp g{start, w, random_unitary(w, 100 * q + 10 * w + start)};
                const auto v = t::random_state(q, q + w + start).amps();
                StateVector s;
                s.num_qubits = q;
                s.amps = v;
                apply_gate_inplace(s, g);
                const Eigen::VectorXcd expected =
                    dense_operator(q, g) * Eigen::Map<const Eigen::VectorXcd>(v.data(), static_cast<Eigen::Index>(v.size()));
                for (std::size_t i = 0; i < v.size(); ++i) {
                    EXPECT_NEAR(std::abs(s.amps[i] - expected[static_cast<Eigen::Index>(i)]), 0.0, 1e-12);
                }
            }
        }
    }
}

TEST(apply_gate, errors) {
    StateVector s = StateVector::zero(3);
    EXPECT_EQ(code_of([&] { apply_gate_inplace(s, GateOp{3, 2, random_unitary(2, 1)}); }), ErrorCode::SpanError);
    EXPECT_EQ(code_of([&] { apply_gate_inplace(s, GateOp{0, 1, pauli_x()}); }), ErrorCode::SpanError);
    EXPECT_EQ(code_of([&] { apply_gate_inplace(s, GateOp{1, 2, pauli_x()}); }), ErrorCode::DimensionMismatch);
    ComplexMatrix bad = pauli_x();
    bad(0, 1) = 2.0;
    EXPECT_EQ(code_of([&] { apply_gate_inplace(s, GateOp{1, 1, bad}); }), ErrorCode::NotUnitary);
}

TEST(run, agrees_with_reconstruction) {
    for (std::size_t q : {4u, 6u, 8u}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const AmplitudeVector v = t::random_state(q, 7000 + 100 * q + seed);
            MpsState m = decompose(v);
            for (int i = 0; i < 3; ++i) {
                if (auto step = next_truncation(m)) {
                    m = apply_truncation(m, *step);
                }
            }
            const AmplitudeVector contracted = reconstruct(m);
            const StateVector simulated = run(synthesize(m));
            EXPECT_NEAR(fidelity(contracted, simulated.to_amplitudes()), 1.0, 1e-10);
            EXPECT_NEAR(fidelity(contracted, v), fidelity(simulated.to_amplitudes(), v), 1e-10);
        }
    }
}

TEST(verify, bell_against_basis_state) {
    Circuit c;
    c.num_qubits = 2;
    c.gates = {GateOp{1, 1, hadamard()}, GateOp{1, 2, cnot_start_controls()}};
    const VerifyResult r = verify(c, t::basis_state(2, 0));
    EXPECT_NEAR(r.fidelity, 0.5, 1e-15);
    ASSERT_EQ(r.probabilities.size(), 4u);
    EXPECT_NEAR(r.probabilities[0], 0.5, 1e-15);
    EXPECT_NEAR(r.probabilities[3], 0.5, 1e-15);
    EXPECT_EQ(code_of([&] { verify(c, t::ghz(3)); }), ErrorCode::DimensionMismatch);
}
