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

// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mpsprep/mpsprep.h"

namespace {

enum ExitCode { kOk = 0, kBadInput = 2, kNumerical = 3, kIo = 4 };

struct Failure {
    int exit_code;
    std::string message;
};

int exit_code_for(mpsprep_status s) {
    switch (s) {
    case MPSPREP_OK: return kOk;
    case MPSPREP_ERR_IO: return kIo;
    case MPSPREP_ERR_NUMERICAL:
    case MPSPREP_ERR_NOT_CANONICAL:
    case MPSPREP_ERR_NOT_UNITARY:
    case MPSPREP_ERR_NOT_ISOMETRY:
    case MPSPREP_ERR_INTERNAL: return kNumerical;
    default: return kBadInput;
    }
}

void check(mpsprep_status s) {
    if (s != MPSPREP_OK) {
        throw Failure{exit_code_for(s), mpsprep_last_error()};
    }
}

struct AmpDeleter {
    void operator()(mpsprep_amplitudes *p) const { mpsprep_amplitudes_free(p); }
};
struct MpsDeleter {
    void operator()(mpsprep_mps *p) const { mpsprep_mps_free(p); }
};
struct CircuitDeleter {
    void operator()(mpsprep_circuit *p) const { mpsprep_circuit_free(p); }
};
struct StringDeleter {
    void operator()(char *p) const { mpsprep_string_free(p); }
};
using AmpPtr = std::unique_ptr<mpsprep_amplitudes, AmpDeleter>;
using MpsPtr = std::unique_ptr<mpsprep_mps, MpsDeleter>;
using CircuitPtr = std::unique_ptr<mpsprep_circuit, CircuitDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Failure{kIo, "cannot read '" + path + "'"};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw Failure{kIo, "cannot write '" + path + "'"};
    }
}

AmpPtr load_amplitudes(const std::string &path) {
    const std::string text = read_file(path);
    mpsprep_amplitudes *raw = nullptr;
    int was_normalized = 0;
    check(mpsprep_amplitudes_from_json(text.c_str(), &raw, &was_normalized));
    if (was_normalized != 0) {
        std::cerr << "warning: input amplitudes were not normalized; using the normalized vector\n";
    }
    return AmpPtr(raw);
}

std::string join_dims(const std::vector<size_t> &dims) {
    std::string s = "[";
    for (size_t i = 0; i < dims.size(); ++i) {
        s += (i ? ", " : "") + std::to_string(dims[i]);
    }
    return s + "]";
}

mpsprep_format parse_format(const std::string &f) { return f == "json" ? MPSPREP_FORMAT_JSON : MPSPREP_FORMAT_CSV; }

void print_circuit_summary(const mpsprep_circuit *c) {
    const size_t gates = mpsprep_circuit_num_gates(c);
    std::vector<size_t> widths(gates);
    size_t widest = 0;
    for (size_t i = 0; i < gates; ++i) {
        check(mpsprep_circuit_gate(c, i, nullptr, &widths[i]));
        widest = std::max(widest, widths[i]);
    }
    int64_t cost = 0;
    size_t depth = 0;
    check(mpsprep_circuit_entangling_cost(c, &cost));
    check(mpsprep_circuit_depth_estimate(c, &depth));
    std::cout << "gate_widths: " << join_dims(widths) << "\n"
              << "entangling_cost: " << cost << "\n"
              << "depth_estimate: " << depth << "\n";
    if (widest > 10) {
        std::cerr << "warning: circuit contains a " << widest << "-qubit gate\n";
    }
}

struct Options {
    std::string input;
    std::string output;
    std::string target;
    double fidelity = 0.99;
    std::vector<double> thresholds{0.9, 0.95, 0.99};
    size_t qubits = 8;
    std::string corpus = "sparse";
    size_t count = 10;
    uint64_t seed = 0;
    std::string format = "csv";
    size_t jobs = 0;
};

void cmd_decompose(const Options &o) {
    AmpPtr amps = load_amplitudes(o.input);
    mpsprep_mps *raw = nullptr;
    check(mpsprep_decompose(amps.get(), nullptr, 0, &raw));
    MpsPtr mps(raw);

    size_t count = 0;
    check(mpsprep_mps_bond_dims(mps.get(), nullptr, 0, &count));
    std::vector<size_t> dims(count);
    check(mpsprep_mps_bond_dims(mps.get(), dims.data(), dims.size(), &count));

    char *json = nullptr;
    check(mpsprep_mps_to_json(mps.get(), o.seed, &json));
    StringPtr text(json);
    if (!o.output.empty()) {
        write_output(o.output, text.get());
    }
    std::cout << "num_qubits: " << mpsprep_amplitudes_num_qubits(amps.get()) << "\n"
              << "bond_dims: " << join_dims(dims) << "\n";
    if (mpsprep_amplitudes_num_qubits(amps.get()) >= 2) {
        double mean = 0.0;
        check(mpsprep_entropy(amps.get(), nullptr, 0, &mean));
        std::cout << "mean_entropy: " << num(mean) << "\n";
    }
    std::cout << "seed: " << o.seed << "\n";
}

void cmd_synthesize(const Options &o) {
    const std::string text = read_file(o.input);
    mpsprep_mps *raw = nullptr;
    check(mpsprep_mps_from_json(text.c_str(), &raw));
    MpsPtr mps(raw);
    mpsprep_circuit *craw = nullptr;
    check(mpsprep_synthesize(mps.get(), &craw));
    CircuitPtr circuit(craw);
    char *json = nullptr;
    check(mpsprep_circuit_to_json(circuit.get(), o.seed, &json));
    StringPtr out(json);
    if (!o.output.empty()) {
        write_output(o.output, out.get());
    }
    print_circuit_summary(circuit.get());
}

void cmd_simulate(const Options &o) {
    const std::string text = read_file(o.input);
    mpsprep_circuit *craw = nullptr;
    check(mpsprep_circuit_from_json(text.c_str(), &craw));
    CircuitPtr circuit(craw);
    mpsprep_amplitudes *sraw = nullptr;
    check(mpsprep_simulate(circuit.get(), &sraw));
    AmpPtr state(sraw);

    char *csv = nullptr;
    check(mpsprep_amplitudes_probabilities_csv(state.get(), &csv));
    StringPtr probs(csv);
    if (!o.output.empty()) {
        write_output(o.output, probs.get());
    }
    if (!o.target.empty()) {
        AmpPtr target = load_amplitudes(o.target);
        double f = 0.0;
        check(mpsprep_fidelity(state.get(), target.get(), &f));
        std::cout << "fidelity: " << num(f) << "\n";
    } else if (o.output.empty()) {
        std::cout << probs.get();
    }
}

void cmd_sweep(const Options &o) {
    if (!(o.fidelity > 0.0 && o.fidelity <= 1.0)) {
        throw Failure{kBadInput, "--fidelity must lie in (0, 1]"};
    }
    AmpPtr amps = load_amplitudes(o.input);
    mpsprep_circuit *craw = nullptr;
    mpsprep_sweep_summary summary{};
    char *record = nullptr;
    check(mpsprep_sweep(amps.get(), o.fidelity, parse_format(o.format), &craw, &summary, &record));
    CircuitPtr circuit(craw);
    StringPtr rec(record);

    char *json = nullptr;
    check(mpsprep_circuit_to_json(circuit.get(), o.seed, &json));
    StringPtr out(json);
    if (!o.output.empty()) {
        write_output(o.output, out.get());
    }
    std::cout << rec.get();
}

void cmd_bench(const Options &o) {
    for (double t : o.thresholds) {
        if (!(t > 0.0 && t <= 1.0)) {
            throw Failure{kBadInput, "--thresholds must lie in (0, 1]"};
        }
    }
    mpsprep_bench_config cfg{o.qubits,       o.corpus.c_str(), o.count, o.seed, o.thresholds.data(),
                             o.thresholds.size(), o.jobs,      parse_format(o.format)};
    char *text = nullptr;
    check(mpsprep_bench(&cfg, &text));
    StringPtr out(text);
    write_output(o.output, out.get());
}

void cmd_entropy(const Options &o) {
    AmpPtr amps = load_amplitudes(o.input);
    const size_t q = mpsprep_amplitudes_num_qubits(amps.get());
    std::vector<double> cuts(q > 1 ? q - 1 : 0);
    double mean = 0.0;
    check(mpsprep_entropy(amps.get(), cuts.data(), cuts.size(), &mean));
    for (size_t n = 0; n < cuts.size(); ++n) {
        std::cout << "cut " << n + 1 << ": " << num(cuts[n]) << "\n";
    }
    std::cout << "mean_entropy: " << num(mean) << "\n";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"mpsprep: amplitude-encoded state preparation via matrix product states"};
    app.require_subcommand(1);
    Options o;

    auto *decompose = app.add_subcommand("decompose", "amplitude JSON -> right-canonical MPS JSON");
    decompose->add_option("--input", o.input, "amplitude JSON file")->required();
    decompose->add_option("--output", o.output, "MPS JSON file");
    decompose->add_option("--seed", o.seed, "echoed into the output");

    auto *synthesize = app.add_subcommand("synthesize", "MPS JSON -> circuit JSON");
    synthesize->add_option("--input", o.input, "MPS JSON file")->required();
    synthesize->add_option("--output", o.output, "circuit JSON file");
    synthesize->add_option("--seed", o.seed, "echoed into the output");

    auto *simulate = app.add_subcommand("simulate", "run a circuit JSON on |0...0>");
    simulate->add_option("--input", o.input, "circuit JSON file")->required();
    simulate->add_option("--target", o.target, "amplitude JSON to compute the fidelity against");
    simulate->add_option("--output", o.output, "probability CSV file");

    auto *sweep = app.add_subcommand("sweep", "truncate down to a fidelity threshold and synthesize");
    sweep->add_option("--input", o.input, "amplitude JSON file")->required();
    sweep->add_option("--fidelity", o.fidelity, "minimum fidelity in (0, 1]")->required();
    sweep->add_option("--output", o.output, "circuit JSON file");
    sweep->add_option("--format", o.format, "record format")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--seed", o.seed, "echoed into the output");

    auto *bench = app.add_subcommand("bench", "threshold sweep over a seeded corpus");
    bench->add_option("--qubits", o.qubits, "register size")->check(CLI::Range(2, 20));
    bench->add_option("--corpus", o.corpus, "sparse, dense, normal, lognormal, sinusoidal, mixed")
        ->check(CLI::IsMember({"sparse", "dense", "normal", "lognormal", "sinusoidal", "mixed"}));
    bench->add_option("--count", o.count, "number of states")->check(CLI::PositiveNumber);
    bench->add_option("--seed", o.seed, "corpus seed");
    bench->add_option("--thresholds", o.thresholds, "comma-separated fidelity thresholds")->delimiter(',');
    bench->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    bench->add_option("--output", o.output, "output file (default stdout)");
    bench->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");

    auto *entropy = app.add_subcommand("entropy", "mean normalized bipartite entropy of an amplitude JSON");
    entropy->add_option("--input", o.input, "amplitude JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*decompose) cmd_decompose(o);
        else if (*synthesize) cmd_synthesize(o);
        else if (*simulate) cmd_simulate(o);
        else if (*sweep) cmd_sweep(o);
        else if (*bench) cmd_bench(o);
        else if (*entropy) cmd_entropy(o);
    } catch (const Failure &f) {
        std::cerr << "error: " << f.message << "\n";
        return f.exit_code;
    }
    return kOk;
}
