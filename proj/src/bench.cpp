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

#include "mpsprep/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "mpsprep/error.hpp"
#include "mpsprep/json_io.hpp"
#include "mpsprep/sim.hpp"

namespace mpsprep {

namespace {

/// Simulated fidelity may sit below the contraction fidelity by rounding.
constexpr double kPathAgreement = 1e-9;

double uniform01(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t uniform_index(std::mt19937_64 &rng, std::uint64_t range) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x = rng();
    while (x >= limit) {
        x = rng();
    }
    return x % range;
}

std::vector<Complex> sqrt_density(std::size_t n, auto &&density) {
    std::vector<Complex> amps(n);
    for (std::size_t i = 0; i < n; ++i) {
        amps[i] = std::sqrt(std::max(0.0, density(static_cast<double>(i))));
    }
    return amps;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string histogram_string(const std::map<std::size_t, std::size_t> &hist) {
    std::string out;
    for (const auto &[width, count] : hist) {
        if (!out.empty()) {
            out += ';';
        }
        out += std::to_string(width) + ":" + std::to_string(count);
    }
    return out;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    return quoted + "\"";
}

double rounded(double v) { return std::stod(format_number(v)); }

double entropy_of(const AmplitudeVector &target) {
    return target.num_qubits() < 2 ? 0.0 : mean_normalized_bipartite_entropy(target).mean;
}

/// Circuit metrics for path points, synthesized lazily and cached.
class PathCircuits {
  public:
    PathCircuits(const std::vector<PathPoint> &path, const AmplitudeVector &target)
        : path_(path), target_(target), circuits_(path.size()), fidelity_(path.size(), -1.0) {}

    const Circuit &circuit(std::size_t i) {
        if (!circuits_[i]) {
            circuits_[i] = synthesize(path_[i].mps);
            fidelity_[i] = verify(*circuits_[i], target_).fidelity;
        }
        return *circuits_[i];
    }
    double simulated_fidelity(std::size_t i) {
        circuit(i);
        return fidelity_[i];
    }

  private:
    const std::vector<PathPoint> &path_;
    const AmplitudeVector &target_;
    std::vector<std::optional<Circuit>> circuits_;
    std::vector<double> fidelity_;
};

BenchRecord record_for(std::size_t state_id, const TargetSpec &spec, double entropy, Method method,
                       double threshold, PathCircuits &circuits, const std::vector<PathPoint> &path,
                       std::size_t index, bool admissible) {
    const Circuit &c = circuits.circuit(index);
    BenchRecord r;
    r.state_id = state_id;
    r.spec = spec;
    r.entropy = entropy;
    r.method = method;
    r.threshold = threshold;
    r.achieved_fidelity = circuits.simulated_fidelity(index);
    r.width_histogram = c.width_histogram();
    r.entangling_cost = entangling_cost(c);
    r.depth_estimate = c.depth_estimate();
    r.truncation_count = path[index].mps.truncation_log().size();
    r.feasible = admissible && r.achieved_fidelity >= threshold - kPathAgreement;
    return r;
}

std::vector<BenchRecord> bench_one(std::size_t state_id, const TargetSpec &raw_spec,
                                   std::span<const double> thresholds) {
    const TargetSpec spec = raw_spec.resolved();
    const AmplitudeVector target = generate(spec);
    const double entropy = entropy_of(target);
    const double floor = *std::min_element(thresholds.begin(), thresholds.end());
    std::vector<BenchRecord> out;

    const std::vector<PathPoint> adaptive = truncation_path(target, decompose(target), floor);
    PathCircuits adaptive_circuits(adaptive, target);
    for (double t : thresholds) {
        const std::size_t idx = *select_point(adaptive, t, true);
        out.push_back(record_for(state_id, spec, entropy, Method::Adaptive, t, adaptive_circuits, adaptive, idx, true));
    }

    const std::vector<std::size_t> caps = cap2_ranks(target.num_qubits());
    const std::vector<PathPoint> capped = truncation_path(target, decompose(target, caps), floor);
    PathCircuits capped_circuits(capped, target);
    for (double t : thresholds) {
        const std::optional<std::size_t> idx = select_point(capped, t, false);
        out.push_back(record_for(state_id, spec, entropy, Method::Capped2, t, capped_circuits, capped,
                                 idx.value_or(0), idx.has_value()));
    }

    for (double t : thresholds) {
        BenchRecord r;
        r.state_id = state_id;
        r.spec = spec;
        r.entropy = entropy;
        r.method = Method::IsometryRef;
        r.threshold = t;
        r.achieved_fidelity = 1.0;
        r.entangling_cost = isometry_reference_cost(target.num_qubits());
        r.depth_estimate = 0;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

const char *target_kind_name(TargetKind kind) {
    switch (kind) {
    case TargetKind::Normal: return "normal";
    case TargetKind::LogNormal: return "lognormal";
    case TargetKind::Sinusoidal: return "sinusoidal";
    case TargetKind::SparseRandom: return "sparse_random";
    case TargetKind::DenseRandom: return "dense_random";
    case TargetKind::File: return "file";
    }
    return "unknown";
}

TargetKind parse_target_kind(const std::string &name) {
    for (TargetKind k : {TargetKind::Normal, TargetKind::LogNormal, TargetKind::Sinusoidal, TargetKind::SparseRandom,
                         TargetKind::DenseRandom, TargetKind::File}) {
        if (name == target_kind_name(k)) {
            return k;
        }
    }
    throw Error(ErrorCode::InvalidSpec, "unknown target kind '" + name + "'");
}

const char *method_name(Method m) {
    switch (m) {
    case Method::Adaptive: return "adaptive";
    case Method::Capped2: return "capped2";
    case Method::IsometryRef: return "isometry_ref";
    }
    return "unknown";
}

TargetSpec TargetSpec::resolved() const {
    TargetSpec r = *this;
    if (kind == TargetKind::File) {
        if (path.empty()) {
            throw Error(ErrorCode::InvalidSpec, "file target needs a path");
        }
        return r;
    }
    if (num_qubits < 2 || num_qubits > 20) {
        throw Error(ErrorCode::InvalidSpec, "num_qubits must lie in [2, 20]");
    }
    const double n = std::ldexp(1.0, static_cast<int>(num_qubits));
    if (!r.mean) {
        r.mean = (n - 1.0) / 2.0;
    }
    if (!r.std) {
        r.std = n / 6.0;
    }
    if (!r.scale) {
        r.scale = std::ldexp(1.0, static_cast<int>(num_qubits) - 2);
    }
    if (!std::isfinite(*r.mean) || !(*r.std > 0.0) || !std::isfinite(*r.std)) {
        throw Error(ErrorCode::InvalidSpec, "normal needs a finite mean and std > 0");
    }
    if (!(r.shape > 0.0) || !(*r.scale > 0.0) || !std::isfinite(r.shape) || !std::isfinite(*r.scale)) {
        throw Error(ErrorCode::InvalidSpec, "lognormal needs shape > 0 and scale > 0");
    }
    if (!(r.periods >= 0.0) || !std::isfinite(r.periods)) {
        throw Error(ErrorCode::InvalidSpec, "sinusoidal needs periods >= 0");
    }
    if (!(r.sparsity >= 0.0 && r.sparsity < 1.0)) {
        throw Error(ErrorCode::InvalidSpec, "sparsity must lie in [0, 1)");
    }
    return r;
}

std::string TargetSpec::params_string() const {
    switch (kind) {
    case TargetKind::Normal:
        return "mean=" + format_number(mean.value_or(NAN)) + ";std=" + format_number(std.value_or(NAN));
    case TargetKind::LogNormal:
        return "shape=" + format_number(shape) + ";scale=" + format_number(scale.value_or(NAN));
    case TargetKind::Sinusoidal: return "periods=" + format_number(periods);
    case TargetKind::SparseRandom: return "sparsity=" + format_number(sparsity);
    case TargetKind::DenseRandom: return "";
    case TargetKind::File: return "path=" + path;
    }
    return "";
}

std::size_t sparse_nonzero_count(std::size_t num_qubits, double sparsity) {
    const double n = std::ldexp(1.0, static_cast<int>(num_qubits));
    // The guard keeps exact products such as 0.25 * 32 from rounding up.
    const auto k = static_cast<std::size_t>(std::ceil((1.0 - sparsity) * n - 1e-9));
    return std::clamp<std::size_t>(k, 1, static_cast<std::size_t>(n));
}

AmplitudeVector generate(const TargetSpec &raw) {
    const TargetSpec spec = raw.resolved();
    if (spec.kind == TargetKind::File) {
        return parse_amplitudes(parse_json_text(read_text_file(spec.path))).amplitudes;
    }
    const std::size_t n = std::size_t{1} << spec.num_qubits;
    std::mt19937_64 rng(spec.seed);
    std::vector<Complex> amps;

    switch (spec.kind) {
    case TargetKind::Normal: {
        const double mu = *spec.mean;
        const double sigma = *spec.std;
        amps = sqrt_density(n, [&](double x) { return std::exp(-(x - mu) * (x - mu) / (2.0 * sigma * sigma)); });
        break;
    }
    case TargetKind::LogNormal: {
        const double s = spec.shape;
        const double scale = *spec.scale;
        amps = sqrt_density(n, [&](double x) {
            if (x <= 0.0) {
                return 0.0;
            }
            const double z = std::log(x / scale) / s;
            return std::exp(-0.5 * z * z) / x;
        });
        break;
    }
    case TargetKind::Sinusoidal: {
        const double p = spec.periods;
        const double nn = static_cast<double>(n);
        amps = sqrt_density(n, [&](double x) { return 1.0 + std::sin(2.0 * std::numbers::pi * x * p / nn); });
        break;
    }
    case TargetKind::SparseRandom: {
        const std::size_t k = sparse_nonzero_count(spec.num_qubits, spec.sparsity);
        std::vector<std::size_t> positions(n);
        for (std::size_t i = 0; i < n; ++i) {
            positions[i] = i;
        }
        for (std::size_t i = 0; i < k; ++i) {
            std::swap(positions[i], positions[i + uniform_index(rng, n - i)]);
        }
        amps.assign(n, Complex{});
        for (std::size_t i = 0; i < k; ++i) {
            amps[positions[i]] = 1.0 - uniform01(rng);
        }
        break;
    }
    case TargetKind::DenseRandom: {
        amps.resize(n);
        for (Complex &z : amps) {
            z = 1.0 - uniform01(rng);
        }
        break;
    }
    case TargetKind::File: break;
    }
    double total = 0.0;
    for (const Complex &z : amps) {
        total += std::norm(z);
    }
    if (total == 0.0) {
        throw Error(ErrorCode::InvalidSpec, "density vanishes on every grid point");
    }
    return AmplitudeVector::normalized(std::move(amps));
}

// ---------------------------------------------------------------------------

std::vector<PathPoint> truncation_path(const AmplitudeVector &target, const MpsState &start, double floor) {
    std::vector<PathPoint> path;
    path.push_back(PathPoint{start, fidelity(reconstruct(start), target)});
    if (path.back().fidelity < floor) {
        return path;
    }
    while (true) {
        const std::optional<TruncationStep> step = next_truncation(path.back().mps);
        if (!step) {
            break;
        }
        MpsState next = apply_truncation(path.back().mps, *step);
        const double f = fidelity(reconstruct(next), target);
        if (f < floor) {
            break;
        }
        path.push_back(PathPoint{std::move(next), f});
    }
    return path;
}

std::optional<std::size_t> select_point(std::span<const PathPoint> path, double f_min, bool start_is_exact) {
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i == 0 && start_is_exact) {
            continue;
        }
        if (path[i].fidelity < f_min) {
            if (i == 0) {
                return std::nullopt;
            }
            return i - 1;
        }
    }
    return path.empty() ? std::nullopt : std::optional<std::size_t>(path.size() - 1);
}

SweepResult sweep_to_threshold(const AmplitudeVector &target, double f_min, const TargetSpec &spec) {
    if (!(f_min > 0.0 && f_min <= 1.0)) {
        throw Error(ErrorCode::InvalidSpec, "fidelity threshold must lie in (0, 1]");
    }
    const MpsState exact = decompose(target);
    std::vector<PathPoint> path;
    if (f_min >= 1.0) {
        path.push_back(PathPoint{exact, fidelity(reconstruct(exact), target)});
    } else {
        path = truncation_path(target, exact, f_min);
    }
    const std::size_t idx = *select_point(path, f_min, true);

    PathCircuits circuits(path, target);
    TargetSpec recorded = spec;
    recorded.num_qubits = target.num_qubits();
    BenchRecord record =
        record_for(0, recorded, entropy_of(target), Method::Adaptive, f_min, circuits, path, idx, true);
    return SweepResult{circuits.circuit(idx), path[idx].mps, std::move(record)};
}

std::vector<BenchRecord> compare(std::span<const TargetSpec> specs, std::span<const double> thresholds,
                                 std::size_t jobs) {
    if (specs.empty() || thresholds.empty()) {
        throw Error(ErrorCode::InvalidSpec, "compare needs at least one spec and one threshold");
    }
    for (double t : thresholds) {
        if (!(t > 0.0 && t <= 1.0)) {
            throw Error(ErrorCode::InvalidSpec, "thresholds must lie in (0, 1]");
        }
    }
    if (jobs == 0) {
        jobs = std::max(1u, std::thread::hardware_concurrency());
    }
    jobs = std::min(jobs, specs.size());

    std::vector<std::vector<BenchRecord>> per_spec(specs.size());
    std::vector<std::exception_ptr> errors(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
            try {
                per_spec[i] = bench_one(i, specs[i], thresholds);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < jobs; ++w) {
            pool.emplace_back(worker);
        }
    }
    for (const std::exception_ptr &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    std::vector<BenchRecord> records;
    for (auto &chunk : per_spec) {
        records.insert(records.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
    }
    std::stable_sort(records.begin(), records.end(), [](const BenchRecord &a, const BenchRecord &b) {
        if (a.entropy != b.entropy) {
            return a.entropy < b.entropy;
        }
        return a.state_id < b.state_id;
    });
    return records;
}

CorpusKind parse_corpus_kind(const std::string &name) {
    if (name == "sparse") return CorpusKind::Sparse;
    if (name == "dense") return CorpusKind::Dense;
    if (name == "normal") return CorpusKind::Normal;
    if (name == "lognormal") return CorpusKind::LogNormal;
    if (name == "sinusoidal") return CorpusKind::Sinusoidal;
    if (name == "mixed") return CorpusKind::Mixed;
    throw Error(ErrorCode::InvalidSpec, "unknown corpus '" + name + "'");
}

std::vector<TargetSpec> make_corpus(CorpusKind kind, std::size_t num_qubits, std::size_t count, std::uint64_t seed) {
    if (count == 0) {
        throw Error(ErrorCode::InvalidSpec, "corpus count must be positive");
    }
    const double n = std::ldexp(1.0, static_cast<int>(num_qubits));
    const double max_nonzero = static_cast<double>(sparse_nonzero_count(num_qubits, 0.9));

    std::vector<TargetSpec> specs;
    specs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = count > 1 ? static_cast<double>(i) / static_cast<double>(count - 1) : 1.0;
        CorpusKind k = kind;
        if (kind == CorpusKind::Mixed) {
            static constexpr CorpusKind cycle[] = {CorpusKind::Sparse, CorpusKind::Dense, CorpusKind::Normal,
                                                   CorpusKind::LogNormal, CorpusKind::Sinusoidal};
            k = cycle[i % 5];
        }
        TargetSpec s;
        s.num_qubits = num_qubits;
        s.seed = seed + i;
        switch (k) {
        case CorpusKind::Sparse: {
            s.kind = TargetKind::SparseRandom;
            const double nonzero = std::round(std::pow(max_nonzero, t));
            s.sparsity = 1.0 - nonzero / n;
            break;
        }
        case CorpusKind::Dense: s.kind = TargetKind::DenseRandom; break;
        case CorpusKind::Normal:
            s.kind = TargetKind::Normal;
            s.std = n / (6.0 * static_cast<double>(i + 1));
            break;
        case CorpusKind::LogNormal:
            s.kind = TargetKind::LogNormal;
            s.shape = 0.25 * static_cast<double>(i + 1);
            break;
        case CorpusKind::Sinusoidal:
            s.kind = TargetKind::Sinusoidal;
            s.periods = static_cast<double>(i);
            break;
        case CorpusKind::Mixed: break;
        }
        specs.push_back(s.resolved());
    }
    return specs;
}

std::string records_to_csv(std::span<const BenchRecord> records) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const BenchRecord &r : records) {
        out += std::to_string(r.state_id) + ',' + target_kind_name(r.spec.kind) + ',' +
               std::to_string(r.spec.num_qubits) + ',' + std::to_string(r.spec.seed) + ',' +
               csv_field(r.spec.params_string()) + ',' + format_number(r.entropy) + ',' + method_name(r.method) +
               ',' + format_number(r.threshold) + ',' + format_number(r.achieved_fidelity) + ',' +
               std::to_string(r.entangling_cost) + ',' + std::to_string(r.depth_estimate) + ',' +
               histogram_string(r.width_histogram) + ',' + std::to_string(r.truncation_count) + ',' +
               (r.feasible ? "true" : "false") + '\n';
    }
    return out;
}

std::string records_to_json(std::span<const BenchRecord> records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BenchRecord &r : records) {
        nlohmann::json hist = nlohmann::json::object();
        for (const auto &[width, count] : r.width_histogram) {
            hist[std::to_string(width)] = count;
        }
        arr.push_back({{"state_id", r.state_id},
                       {"kind", target_kind_name(r.spec.kind)},
                       {"num_qubits", r.spec.num_qubits},
                       {"seed", r.spec.seed},
                       {"params", r.spec.params_string()},
                       {"entropy", rounded(r.entropy)},
                       {"method", method_name(r.method)},
                       {"threshold", rounded(r.threshold)},
                       {"fidelity", rounded(r.achieved_fidelity)},
                       {"cost", r.entangling_cost},
                       {"depth", r.depth_estimate},
                       {"histogram", hist},
                       {"truncations", r.truncation_count},
                       {"feasible", r.feasible}});
    }
    return arr.dump(2) + "\n";
}

}  // namespace mpsprep
