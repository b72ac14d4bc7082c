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
#include <cstdio>

#include "mpsprep/error.hpp"

namespace mpsprep {

using nlohmann::json;

namespace {

Complex complex_from_json(const json &v) {
    if (v.is_number()) {
        return {v.get<double>(), 0.0};
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    throw Error(ErrorCode::BadInput, "expected a number or an [re, im] pair, got " + v.dump());
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const ComplexMatrix &m) {
    json flat = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            flat.push_back(complex_to_json(m(r, c)));
        }
    }
    return flat;
}

ComplexMatrix matrix_from_json(const json &flat, std::size_t rows, std::size_t cols) {
    if (!flat.is_array() || flat.size() != rows * cols) {
        throw Error(ErrorCode::BadInput, "matrix data has the wrong number of entries");
    }
    ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows * cols; ++i) {
        m.data()[i] = complex_from_json(flat[i]);
    }
    return m;
}

template <typename T>
T require(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorCode::BadInput, std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw Error(ErrorCode::BadInput, std::string("field '") + key + "': " + e.what());
    }
}

void check_schema(const json &j, const char *expected) {
    const auto schema = require<std::string>(j, "schema");
    if (schema != expected) {
        throw Error(ErrorCode::BadInput, "unsupported schema '" + schema + "', expected '" + expected + "'");
    }
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

json parse_json_text(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::BadInput, std::string("malformed JSON: ") + e.what());
    }
}

ParsedAmplitudes parse_amplitudes(const json &j) {
    if (!j.is_array()) {
        throw Error(ErrorCode::BadInput, "amplitude file must hold a JSON array");
    }
    std::vector<Complex> values;
    values.reserve(j.size());
    for (const json &v : j) {
        values.push_back(complex_from_json(v));
    }
    AmplitudeVector raw(std::move(values));
    const double norm = raw.norm();
    if (norm == 0.0) {
        throw Error(ErrorCode::BadInput, "amplitude vector is zero");
    }
    const bool off = !raw.is_normalized();
    return ParsedAmplitudes{off ? AmplitudeVector::normalized(raw.amps()) : std::move(raw), off, norm};
}

json amplitudes_to_json(const AmplitudeVector &v) {
    json out = json::array();
    for (const Complex &z : v.amps()) {
        out.push_back(complex_to_json(z));
    }
    return out;
}

json mps_to_json(const MpsState &mps, std::uint64_t seed) {
    json cores = json::array();
    for (const MpsCore &c : mps.cores()) {
        cores.push_back({{"shape", {c.left, 2, c.right}}, {"data", matrix_to_json(c.data)}});
    }
    json log = json::array();
    for (const TruncationStep &s : mps.truncation_log()) {
        log.push_back({{"bond", s.bond},
                       {"old_rank", s.old_rank},
                       {"new_rank", s.new_rank},
                       {"dropped_relative_sigma", s.dropped_relative_sigma},
                       {"local_frobenius_error", s.local_frobenius_error}});
    }
    return {{"schema", kMpsSchema},
            {"num_qubits", mps.num_qubits()},
            {"bond_dims", mps.bond_dims()},
            {"right_canonical", mps.right_canonical()},
            {"seed", seed},
            {"cores", cores},
            {"truncation_log", log}};
}

MpsState mps_from_json(const json &j) {
    check_schema(j, kMpsSchema);
    const auto q = require<std::size_t>(j, "num_qubits");
    const json cores_json = require<json>(j, "cores");
    if (!cores_json.is_array() || cores_json.size() != q) {
        throw Error(ErrorCode::BadInput, "cores array length must equal num_qubits");
    }
    std::vector<MpsCore> cores;
    for (const json &c : cores_json) {
        const auto shape = require<std::vector<std::size_t>>(c, "shape");
        if (shape.size() != 3 || shape[1] != 2) {
            throw Error(ErrorCode::BadInput, "core shape must be [left, 2, right]");
        }
        MpsCore core(shape[0], shape[2]);
        core.data = matrix_from_json(require<json>(c, "data"), shape[0], 2 * shape[2]);
        cores.push_back(std::move(core));
    }
    std::vector<TruncationStep> log;
    if (j.contains("truncation_log")) {
        for (const json &s : j.at("truncation_log")) {
            log.push_back(TruncationStep{require<std::size_t>(s, "bond"), require<std::size_t>(s, "old_rank"),
                                         require<std::size_t>(s, "new_rank"),
                                         require<double>(s, "dropped_relative_sigma"),
                                         require<double>(s, "local_frobenius_error")});
        }
    }
    return MpsState(std::move(cores), require<bool>(j, "right_canonical"), std::move(log));
}

json circuit_to_json(const Circuit &c, std::uint64_t seed) {
    json gates = json::array();
    for (const GateOp &g : c.gates) {
        gates.push_back({{"start_qubit", g.start_qubit}, {"width", g.width}, {"matrix", matrix_to_json(g.matrix)}});
    }
    json hist = json::object();
    for (const auto &[width, count] : c.width_histogram()) {
        hist[std::to_string(width)] = count;
    }
    const CostModel &m = c.cost_model;
    json metadata = {{"widths", c.widths()},
                     {"width_histogram", hist},
                     {"sequential_depth", c.sequential_depth()},
                     {"depth_estimate", c.depth_estimate()},
                     {"entangling_cost", entangling_cost(c)},
                     {"cost_model",
                      {{"name", m.name},
                       {"two_qubit", m.two_qubit},
                       {"c4", m.c4},
                       {"c2", m.c2},
                       {"c0", m.c0},
                       {"denominator", m.denominator}}},
                     {"seed", seed}};
    return {{"schema", kCircuitSchema}, {"num_qubits", c.num_qubits}, {"gates", gates}, {"metadata", metadata}};
}

Circuit circuit_from_json(const json &j) {
    check_schema(j, kCircuitSchema);
    Circuit c;
    c.num_qubits = require<std::size_t>(j, "num_qubits");
    if (c.num_qubits < 1) {
        throw Error(ErrorCode::BadInput, "num_qubits must be at least 1");
    }
    for (const json &g : require<json>(j, "gates")) {
        GateOp op;
        op.start_qubit = require<std::size_t>(g, "start_qubit");
        op.width = require<std::size_t>(g, "width");
        if (op.width < 1 || op.width > 20) {
            throw Error(ErrorCode::BadInput, "gate width out of range");
        }
        const std::size_t dim = std::size_t{1} << op.width;
        op.matrix = matrix_from_json(require<json>(g, "matrix"), dim, dim);
        c.gates.push_back(std::move(op));
    }
    if (j.contains("metadata") && j.at("metadata").contains("cost_model")) {
        const json &m = j.at("metadata").at("cost_model");
        c.cost_model = CostModel{require<std::string>(m, "name"), require<std::int64_t>(m, "two_qubit"),
                                 require<std::int64_t>(m, "c4"),   require<std::int64_t>(m, "c2"),
                                 require<std::int64_t>(m, "c0"),   require<std::int64_t>(m, "denominator")};
        if (c.cost_model.denominator == 0) {
            throw Error(ErrorCode::BadInput, "cost model denominator must be nonzero");
        }
    }
    return c;
}

}  // namespace mpsprep
