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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpsprep/circuit.hpp"
#include "mpsprep/mps.hpp"

namespace mpsprep {

enum class TargetKind { Normal, LogNormal, Sinusoidal, SparseRandom, DenseRandom, File };

const char *target_kind_name(TargetKind kind);
TargetKind parse_target_kind(const std::string &name);

/// Target-state family plus its parameters. Unset optionals take the
/// documented defaults when resolved against the register size.
struct TargetSpec {
    TargetKind kind = TargetKind::SparseRandom;
    std::size_t num_qubits = 8;
    std::optional<double> mean;   // normal; default: grid midpoint (N-1)/2
    std::optional<double> std;    // normal; default: N/6
    double shape = 0.5;           // lognormal sigma
    std::optional<double> scale;  // lognormal median; default: 2^(Q-2)
    double periods = 2.0;         // sinusoidal
    double sparsity = 0.9;        // sparse_random
    std::uint64_t seed = 0;
    std::string path;  // file

    /// Fills defaults and checks ranges; throws InvalidSpec.
    TargetSpec resolved() const;
    /// "key=value;..." with the resolved kind-specific parameters.
    std::string params_string() const;
};

/// Amplitudes are square roots of the density sampled at grid points
/// x = 0..N-1 (normal, lognormal, sinusoidal), or random non-negative reals
/// (sparse, dense). Always normalized; deterministic per seed.
AmplitudeVector generate(const TargetSpec &spec);

/// Number of nonzeros a sparse_random spec produces: ceil((1 - sparsity) N), at least 1.
std::size_t sparse_nonzero_count(std::size_t num_qubits, double sparsity);

enum class Method { Adaptive, Capped2, IsometryRef };
const char *method_name(Method m);

struct BenchRecord {
    std::size_t state_id = 0;
    TargetSpec spec;
    double entropy = 0.0;
    Method method = Method::Adaptive;
    double threshold = 1.0;
    double achieved_fidelity = 1.0;  // simulated
    std::map<std::size_t, std::size_t> width_histogram;
    std::int64_t entangling_cost = 0;
    std::size_t depth_estimate = 0;
    std::size_t truncation_count = 0;
    bool feasible = true;
};

/// One state along a greedy truncation schedule and its fidelity to the target
/// computed by MPS contraction.
struct PathPoint {
    MpsState mps;
    double fidelity = 1.0;
};

/// Greedy schedule from `start`: apply next_truncation repeatedly, stopping
/// before the first state whose fidelity falls below `floor`.
std::vector<PathPoint> truncation_path(const AmplitudeVector &target, const MpsState &start, double floor);

/// Index of the last admissible point for threshold f_min: the point before
/// the first one below f_min. With start_is_exact the first point is always
/// admissible. Returns nothing when the first point already misses f_min.
std::optional<std::size_t> select_point(std::span<const PathPoint> path, double f_min, bool start_is_exact);

struct SweepResult {
    Circuit circuit;
    MpsState mps;
    BenchRecord record;
};

/// Truncates greedily until one more step would bring the fidelity below
/// f_min, then synthesizes the last admissible state. f_min must lie in (0, 1].
SweepResult sweep_to_threshold(const AmplitudeVector &target, double f_min, const TargetSpec &spec = {});

/// Runs adaptive, capped2, and isometry_ref for every (spec, threshold) and
/// returns the records sorted by entropy. `jobs` = 0 uses every core.
std::vector<BenchRecord> compare(std::span<const TargetSpec> specs, std::span<const double> thresholds,
                                 std::size_t jobs = 1);

enum class CorpusKind { Sparse, Dense, Normal, LogNormal, Sinusoidal, Mixed };
CorpusKind parse_corpus_kind(const std::string &name);

/// Seeded corpus. The sparse corpus sweeps the nonzero count geometrically from
/// 1 up to ceil(0.1 N) so that low and high entropies are both represented.
std::vector<TargetSpec> make_corpus(CorpusKind kind, std::size_t num_qubits, std::size_t count,
                                    std::uint64_t seed);

std::string records_to_csv(std::span<const BenchRecord> records);
std::string records_to_json(std::span<const BenchRecord> records);

inline constexpr const char *kCsvHeader =
    "state_id,kind,num_qubits,seed,params,entropy,method,threshold,fidelity,cost,depth,histogram,truncations,"
    "feasible";

}  // namespace mpsprep
