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

#include "mpsprep/json_io.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "mpsprep/error.hpp"
#include "mpsprep/sim.hpp"
#include "test_util.hpp"

using namespace mpsprep;
namespace t = mpsprep::testing;
using nlohmann::json;

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

}  // namespace

TEST(parse_amplitudes, real_and_complex_entries) {
    const ParsedAmplitudes p = parse_amplitudes(json::parse(R"([0.6, [0, 0.8]])"));
    EXPECT_FALSE(p.was_normalized);
    EXPECT_EQ(p.amplitudes[1], Complex(0.0, 0.8));
    const ParsedAmplitudes q = parse_amplitudes(json::parse("[1, 1, 1, 1]"));
    EXPECT_TRUE(q.was_normalized);
    EXPECT_NEAR(q.input_norm, 2.0, 1e-15);
    EXPECT_NEAR(q.amplitudes[3].real(), 0.5, 1e-15);
}

TEST(parse_amplitudes, rejects_bad_input) {
    EXPECT_EQ(code_of([] { parse_amplitudes(json::parse("[1, 0, 0]")); }), ErrorCode::BadInput);
    EXPECT_EQ(code_of([] { parse_amplitudes(json::parse("[0, 0]")); }), ErrorCode::BadInput);
    EXPECT_EQ(code_of([] { parse_amplitudes(json::parse(R"(["a", 1])")); }), ErrorCode::BadInput);
    EXPECT_EQ(code_of([] { parse_amplitudes(json::parse("[[1, 2, 3], 0]")); }), ErrorCode::BadInput);
    EXPECT_EQ(code_of([] { parse_json_text("[1, 0"); }), ErrorCode::BadInput);
    EXPECT_EQ(code_of([] { parse_amplitudes(json::parse(R"({"amplitudes": [1, 0]})")); }), ErrorCode::BadInput);
}

TEST(amplitudes, round_trip) {
    const AmplitudeVector v = t::random_state(4, 3);
    const ParsedAmplitudes back = parse_amplitudes(amplitudes_to_json(v));
    EXPECT_EQ(back.amplitudes.amps(), v.amps());
}

TEST(mps_json, round_trip_is_bit_exact) {
    MpsState m = decompose(t::random_state(6, 5));
    m = apply_truncation(m, *next_truncation(m));
    const json j = mps_to_json(m, 17);
    EXPECT_EQ(j["schema"], kMpsSchema);
    EXPECT_EQ(j["seed"], 17);
    const MpsState back = mps_from_json(parse_json_text(j.dump()));
    EXPECT_EQ(back.bond_dims(), m.bond_dims());
    EXPECT_TRUE(back.right_canonical());
    ASSERT_EQ(back.truncation_log().size(), 1u);
    EXPECT_EQ(back.truncation_log()[0].bond, m.truncation_log()[0].bond);
    for (std::size_t n = 0; n < m.num_qubits(); ++n) {
        EXPECT_EQ((back.core(n).data - m.core(n).data).norm(), 0.0);
    }
}

TEST(mps_json, rejects_corruption) {
    const json good = mps_to_json(decompose(t::random_state(3, 1)));
    json wrong_schema = good;
    wrong_schema["schema"] = "other/1";
    EXPECT_EQ(code_of([&] { mps_from_json(wrong_schema); }), ErrorCode::BadInput);
    json missing = good;
    missing.erase("cores");
    EXPECT_EQ(code_of([&] { mps_from_json(missing); }), ErrorCode::BadInput);
    json bad_shape = good;
    bad_shape["cores"][1]["shape"] = json::array({3, 2, 2});
    const ErrorCode code = code_of([&] { mps_from_json(bad_shape); });
    EXPECT_TRUE(code == ErrorCode::BadInput || code == ErrorCode::CorruptMps);
}

TEST(circuit_json, round_trip_and_metadata) {
    const AmplitudeVector v = t::random_state(5, 2);
    const Circuit c = synthesize(decompose(v));
    const json j = circuit_to_json(c, 9);
    EXPECT_EQ(j["schema"], kCircuitSchema);
    EXPECT_EQ(j["metadata"]["entangling_cost"], entangling_cost(c));
    EXPECT_EQ(j["metadata"]["depth_estimate"], c.depth_estimate());
    EXPECT_EQ(j["metadata"]["cost_model"]["name"], "generic-unitary-leading-order");
    const Circuit back = circuit_from_json(parse_json_text(j.dump()));
    ASSERT_EQ(back.gates.size(), c.gates.size());
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        EXPECT_EQ(back.gates[i].start_qubit, c.gates[i].start_qubit);
        EXPECT_EQ((back.gates[i].matrix - c.gates[i].matrix).norm(), 0.0);
    }
    EXPECT_GE(verify(back, v).fidelity, 1.0 - 1e-10);
}

TEST(format_number, nine_significant_digits) {
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333");
    EXPECT_EQ(format_number(1.0), "1");
}
