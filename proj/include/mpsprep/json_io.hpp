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

#include <cstdint>
#include <string>

#include <json.hpp>

#include "mpsprep/circuit.hpp"
#include "mpsprep/mps.hpp"

namespace mpsprep {

// Complex numbers are written as [re, im] pairs. Tensor data keeps full
// round-trip precision; only human-facing reports are rounded.

inline constexpr const char *kMpsSchema = "mpsprep-mps/1";
inline constexpr const char *kCircuitSchema = "mpsprep-circuit/1";

struct ParsedAmplitudes {
    AmplitudeVector amplitudes;
    bool was_normalized = false;  // true when the input norm differed from 1
    double input_norm = 1.0;
};

/// Accepts a JSON array whose entries are numbers or [re, im] pairs.
/// The result is always normalized. Throws BadInput.
ParsedAmplitudes parse_amplitudes(const nlohmann::json &j);
nlohmann::json amplitudes_to_json(const AmplitudeVector &v);

nlohmann::json mps_to_json(const MpsState &mps, std::uint64_t seed = 0);
MpsState mps_from_json(const nlohmann::json &j);

nlohmann::json circuit_to_json(const Circuit &c, std::uint64_t seed = 0);
Circuit circuit_from_json(const nlohmann::json &j);

/// Parses text, mapping syntax errors to BadInput.
nlohmann::json parse_json_text(const std::string &text);

/// printf-style "%.9g".
std::string format_number(double value);

}  // namespace mpsprep
