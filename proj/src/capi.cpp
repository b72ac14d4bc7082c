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

#include "mpsprep/mpsprep.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "mpsprep/bench.hpp"
#include "mpsprep/circuit.hpp"
#include "mpsprep/error.hpp"
#include "mpsprep/json_io.hpp"
#include "mpsprep/mps.hpp"
#include "mpsprep/sim.hpp"

struct mpsprep_amplitudes {
    mpsprep::AmplitudeVector value;
};

struct mpsprep_mps {
    mpsprep::MpsState value;
};

struct mpsprep_circuit {
    mpsprep::Circuit value;
};

namespace {

thread_local std::string last_error;

mpsprep_status status_for(mpsprep::ErrorCode code) {
    using mpsprep::ErrorCode;
    switch (code) {
    case ErrorCode::InvalidMatrix: return MPSPREP_ERR_BAD_INPUT;
    case ErrorCode::NumericalFailure: return MPSPREP_ERR_NUMERICAL;
    case ErrorCode::InvalidSplit: return MPSPREP_ERR_INVALID_ARGUMENT;
    case ErrorCode::NotIsometry: return MPSPREP_ERR_NOT_ISOMETRY;
    case ErrorCode::InfeasibleRanks: return MPSPREP_ERR_INFEASIBLE_RANKS;
    case ErrorCode::NotNormalized: return MPSPREP_ERR_NOT_NORMALIZED;
    case ErrorCode::CorruptMps: return MPSPREP_ERR_CORRUPT_MPS;
    case ErrorCode::StaleStep: return MPSPREP_ERR_STALE_STEP;
    case ErrorCode::DimensionMismatch: return MPSPREP_ERR_DIMENSION_MISMATCH;
    case ErrorCode::Undefined: return MPSPREP_ERR_UNDEFINED;
    case ErrorCode::NotCanonical: return MPSPREP_ERR_NOT_CANONICAL;
    case ErrorCode::SpanError: return MPSPREP_ERR_SPAN;
    case ErrorCode::NotUnitary: return MPSPREP_ERR_NOT_UNITARY;
    case ErrorCode::InvalidSpec: return MPSPREP_ERR_INVALID_SPEC;
    case ErrorCode::BadInput: return MPSPREP_ERR_BAD_INPUT;
    case ErrorCode::Io: return MPSPREP_ERR_IO;
    }
    return MPSPREP_ERR_INTERNAL;
}

mpsprep_status fail(mpsprep_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

template <typename F>
mpsprep_status guarded(F &&body) noexcept {
    try {
        body();
        return MPSPREP_OK;
    } catch (const mpsprep::Error &e) {
        return fail(status_for(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(MPSPREP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(MPSPREP_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(MPSPREP_ERR_INTERNAL, "unknown failure");
    }
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

#define MPSPREP_REQUIRE(cond)                                                                    \
    do {                                                                                         \
        if (!(cond)) {                                                                           \
            return fail(MPSPREP_ERR_INVALID_ARGUMENT, "invalid argument: " #cond);               \
        }                                                                                        \
    } while (0)

}  // namespace

extern "C" {

const char *mpsprep_version(void) { return "1.0.0"; }

const char *mpsprep_status_name(mpsprep_status status) {
    switch (status) {
    case MPSPREP_OK: return "ok";
    case MPSPREP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MPSPREP_ERR_BAD_INPUT: return "bad input";
    case MPSPREP_ERR_NOT_NORMALIZED: return "not normalized";
    case MPSPREP_ERR_INFEASIBLE_RANKS: return "infeasible ranks";
    case MPSPREP_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case MPSPREP_ERR_CORRUPT_MPS: return "corrupt mps";
    case MPSPREP_ERR_STALE_STEP: return "stale truncation step";
    case MPSPREP_ERR_UNDEFINED: return "undefined";
    case MPSPREP_ERR_NOT_CANONICAL: return "not right-canonical";
    case MPSPREP_ERR_SPAN: return "gate span outside register";
    case MPSPREP_ERR_NOT_UNITARY: return "not unitary";
    case MPSPREP_ERR_NOT_ISOMETRY: return "not an isometry";
    case MPSPREP_ERR_INVALID_SPEC: return "invalid spec";
    case MPSPREP_ERR_NUMERICAL: return "numerical failure";
    case MPSPREP_ERR_IO: return "io failure";
    case MPSPREP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char *mpsprep_last_error(void) { return last_error.c_str(); }

void mpsprep_string_free(char *s) { std::free(s); }

// ---- amplitude vectors ----------------------------------------------------

mpsprep_status mpsprep_amplitudes_from_json(const char *json, mpsprep_amplitudes **out, int *was_normalized) {
    MPSPREP_REQUIRE(json != nullptr && out != nullptr);
    *out = nullptr;
    return guarded([&] {
        mpsprep::ParsedAmplitudes parsed = mpsprep::parse_amplitudes(mpsprep::parse_json_text(json));
        if (was_normalized != nullptr) {
            *was_normalized = parsed.was_normalized ? 1 : 0;
        }
        *out = new mpsprep_amplitudes{std::move(parsed.amplitudes)};
    });
}

mpsprep_status mpsprep_amplitudes_from_values(const double *re, const double *im, size_t n,
                                              mpsprep_amplitudes **out) {
    MPSPREP_REQUIRE(re != nullptr && out != nullptr);
    *out = nullptr;
    return guarded([&] {
        std::vector<mpsprep::Complex> values(n);
        for (size_t i = 0; i < n; ++i) {
            values[i] = {re[i], im != nullptr ? im[i] : 0.0};
        }
        *out = new mpsprep_amplitudes{mpsprep::AmplitudeVector(std::move(values))};
    });
}

mpsprep_status mpsprep_amplitudes_to_json(const mpsprep_amplitudes *a, char **out) {
    MPSPREP_REQUIRE(a != nullptr && out != nullptr);
    return guarded([&] { *out = copy_string(mpsprep::amplitudes_to_json(a->value).dump() + "\n"); });
}

size_t mpsprep_amplitudes_num_qubits(const mpsprep_amplitudes *a) { return a ? a->value.num_qubits() : 0; }

size_t mpsprep_amplitudes_size(const mpsprep_amplitudes *a) { return a ? a->value.size() : 0; }

mpsprep_status mpsprep_amplitudes_get(const mpsprep_amplitudes *a, size_t index, double *re, double *im) {
    MPSPREP_REQUIRE(a != nullptr && index < a->value.size());
    if (re != nullptr) {
        *re = a->value[index].real();
    }
    if (im != nullptr) {
        *im = a->value[index].imag();
    }
    return MPSPREP_OK;
}

mpsprep_status mpsprep_amplitudes_probabilities_csv(const mpsprep_amplitudes *a, char **out) {
    MPSPREP_REQUIRE(a != nullptr && out != nullptr);
    return guarded([&] {
        const std::size_t q = a->value.num_qubits();
        std::string csv = "index,bitstring,probability\n";
        for (std::size_t i = 0; i < a->value.size(); ++i) {
            std::string bits(q, '0');
            for (std::size_t n = 0; n < q; ++n) {
                if ((i >> (q - 1 - n)) & 1U) {
                    bits[n] = '1';
                }
            }
            csv += std::to_string(i) + ',' + bits + ',' + mpsprep::format_number(std::norm(a->value[i])) + '\n';
        }
        *out = copy_string(csv);
    });
}

void mpsprep_amplitudes_free(mpsprep_amplitudes *a) { delete a; }

mpsprep_status mpsprep_fidelity(const mpsprep_amplitudes *a, const mpsprep_amplitudes *b, double *out) {
    MPSPREP_REQUIRE(a != nullptr && b != nullptr && out != nullptr);
    return guarded([&] { *out = mpsprep::fidelity(a->value, b->value); });
}

mpsprep_status mpsprep_entropy(const mpsprep_amplitudes *a, double *per_cut, size_t capacity, double *mean) {
    MPSPREP_REQUIRE(a != nullptr && mean != nullptr);
    return guarded([&] {
        const mpsprep::EntropyReport report = mpsprep::mean_normalized_bipartite_entropy(a->value);
        if (per_cut != nullptr) {
            for (size_t i = 0; i < capacity && i < report.per_cut.size(); ++i) {
                per_cut[i] = report.per_cut[i];
            }
        }
        *mean = report.mean;
    });
}

// ---- matrix product states ------------------------------------------------

mpsprep_status mpsprep_decompose(const mpsprep_amplitudes *target, const size_t *rank_caps, size_t num_caps,
                                 mpsprep_mps **out) {
    MPSPREP_REQUIRE(target != nullptr && out != nullptr);
    MPSPREP_REQUIRE(rank_caps != nullptr || num_caps == 0);
    *out = nullptr;
    return guarded([&] {
        std::span<const std::size_t> caps;
        if (rank_caps != nullptr) {
            if (num_caps + 1 != target->value.num_qubits()) {
                throw mpsprep::Error(mpsprep::ErrorCode::InfeasibleRanks, "need one rank cap per bond");
            }
            caps = std::span<const std::size_t>(rank_caps, num_caps);
        }
        *out = new mpsprep_mps{mpsprep::decompose(target->value, caps)};
    });
}

mpsprep_status mpsprep_mps_from_json(const char *json, mpsprep_mps **out) {
    MPSPREP_REQUIRE(json != nullptr && out != nullptr);
    *out = nullptr;
    return guarded([&] { *out = new mpsprep_mps{mpsprep::mps_from_json(mpsprep::parse_json_text(json))}; });
}

mpsprep_status mpsprep_mps_to_json(const mpsprep_mps *m, uint64_t seed, char **out) {
    MPSPREP_REQUIRE(m != nullptr && out != nullptr);
    return guarded([&] { *out = copy_string(mpsprep::mps_to_json(m->value, seed).dump() + "\n"); });
}

size_t mpsprep_mps_num_qubits(const mpsprep_mps *m) { return m ? m->value.num_qubits() : 0; }

mpsprep_status mpsprep_mps_bond_dims(const mpsprep_mps *m, size_t *dims, size_t capacity, size_t *count) {
    MPSPREP_REQUIRE(m != nullptr);
    const std::vector<std::size_t> bonds = m->value.bond_dims();
    if (count != nullptr) {
        *count = bonds.size();
    }
    for (size_t i = 0; dims != nullptr && i < capacity && i < bonds.size(); ++i) {
        dims[i] = bonds[i];
    }
    return MPSPREP_OK;
}

mpsprep_status mpsprep_mps_canonical_residual(const mpsprep_mps *m, double *out) {
    MPSPREP_REQUIRE(m != nullptr && out != nullptr);
    return guarded([&] { *out = mpsprep::verify_right_canonical(m->value); });
}

mpsprep_status mpsprep_mps_reconstruct(const mpsprep_mps *m, mpsprep_amplitudes **out) {
    MPSPREP_REQUIRE(m != nullptr && out != nullptr);
    *out = nullptr;
    return guarded([&] { *out = new mpsprep_amplitudes{mpsprep::reconstruct(m->value)}; });
}

mpsprep_status mpsprep_mps_truncate_once(const mpsprep_mps *m, mpsprep_mps **out, mpsprep_truncation_step *step) {
    MPSPREP_REQUIRE(m != nullptr && out != nullptr);
    *out = nullptr;
    return guarded([&] {
        const std::optional<mpsprep::TruncationStep> next = mpsprep::next_truncation(m->value);
        if (!next) {
            return;
        }
        if (step != nullptr) {
            *step = mpsprep_truncation_step{next->bond, next->old_rank, next->new_rank,
                                            next->dropped_relative_sigma, next->local_frobenius_error};
        }
        *out = new mpsprep_mps{mpsprep::apply_truncation(m->value, *next)};
    });
}

void mpsprep_mps_free(mpsprep_mps *m) { delete m; }

// ---- circuits ---------------------------------------------------------------

mpsprep_status mpsprep_synthesize(const mpsprep_mps *m, mpsprep_circuit **out) {
    MPSPREP_REQUIRE(m != nullptr && out != nullptr);
    *out = nullptr;
    return guarded([&] { *out = new mpsprep_circuit{mpsprep::synthesize(m->value)}; });
}

mpsprep_status mpsprep_capped_baseline(const mpsprep_amplitudes *target, mpsprep_circuit **out) {
    MPSPREP_REQUIRE(target != nullptr && out != nullptr);
    *out = nullptr;
    return guarded([&] { *out = new mpsprep_circuit{mpsprep::capped_baseline(target->value)}; });
}

mpsprep_status mpsprep_circuit_from_json(const char *json, mpsprep_circuit **out) {
    MPSPREP_REQUIRE(json != nullptr && out != nullptr);
    *out = nullptr;
    return guarded(
        [&] { *out = new mpsprep_circuit{mpsprep::circuit_from_json(mpsprep::parse_json_text(json))}; });
}

mpsprep_status mpsprep_circuit_to_json(const mpsprep_circuit *c, uint64_t seed, char **out) {
    MPSPREP_REQUIRE(c != nullptr && out != nullptr);
    return guarded([&] { *out = copy_string(mpsprep::circuit_to_json(c->value, seed).dump() + "\n"); });
}

size_t mpsprep_circuit_num_qubits(const mpsprep_circuit *c) { return c ? c->value.num_qubits : 0; }

size_t mpsprep_circuit_num_gates(const mpsprep_circuit *c) { return c ? c->value.gates.size() : 0; }

mpsprep_status mpsprep_circuit_gate(const mpsprep_circuit *c, size_t index, size_t *start_qubit, size_t *width) {
    MPSPREP_REQUIRE(c != nullptr && index < c->value.gates.size());
    if (start_qubit != nullptr) {
        *start_qubit = c->value.gates[index].start_qubit;
    }
    if (width != nullptr) {
        *width = c->value.gates[index].width;
    }
    return MPSPREP_OK;
}

mpsprep_status mpsprep_circuit_entangling_cost(const mpsprep_circuit *c, int64_t *out) {
    MPSPREP_REQUIRE(c != nullptr && out != nullptr);
    return guarded([&] { *out = mpsprep::entangling_cost(c->value); });
}

mpsprep_status mpsprep_circuit_depth_estimate(const mpsprep_circuit *c, size_t *out) {
    MPSPREP_REQUIRE(c != nullptr && out != nullptr);
    return guarded([&] { *out = c->value.depth_estimate(); });
}

void mpsprep_circuit_free(mpsprep_circuit *c) { delete c; }

mpsprep_status mpsprep_isometry_reference_cost(size_t num_qubits, int64_t *out) {
    MPSPREP_REQUIRE(out != nullptr);
    return guarded([&] { *out = mpsprep::isometry_reference_cost(num_qubits); });
}

// ---- simulation -------------------------------------------------------------

mpsprep_status mpsprep_simulate(const mpsprep_circuit *c, mpsprep_amplitudes **out) {
    MPSPREP_REQUIRE(c != nullptr && out != nullptr);
    *out = nullptr;
    return guarded([&] { *out = new mpsprep_amplitudes{mpsprep::run(c->value).to_amplitudes()}; });
}

// ---- sweeps and benchmarks -----------------------------------------------

mpsprep_status mpsprep_sweep(const mpsprep_amplitudes *target, double f_min, mpsprep_format format,
                             mpsprep_circuit **out, mpsprep_sweep_summary *summary, char **record) {
    MPSPREP_REQUIRE(target != nullptr && out != nullptr);
    *out = nullptr;
    return guarded([&] {
        mpsprep::TargetSpec spec;
        spec.kind = mpsprep::TargetKind::File;
        mpsprep::SweepResult result = mpsprep::sweep_to_threshold(target->value, f_min, spec);
        if (summary != nullptr) {
            *summary = mpsprep_sweep_summary{result.record.achieved_fidelity, result.record.entropy,
                                             result.record.entangling_cost, result.record.depth_estimate,
                                             result.record.truncation_count};
        }
        if (record != nullptr) {
            const std::span<const mpsprep::BenchRecord> one(&result.record, 1);
            *record = copy_string(format == MPSPREP_FORMAT_JSON ? mpsprep::records_to_json(one)
                                                                : mpsprep::records_to_csv(one));
        }
        *out = new mpsprep_circuit{std::move(result.circuit)};
    });
}

mpsprep_status mpsprep_bench(const mpsprep_bench_config *config, char **out) {
    MPSPREP_REQUIRE(config != nullptr && out != nullptr && config->corpus != nullptr);
    MPSPREP_REQUIRE(config->thresholds != nullptr && config->num_thresholds > 0);
    return guarded([&] {
        const std::vector<mpsprep::TargetSpec> specs = mpsprep::make_corpus(
            mpsprep::parse_corpus_kind(config->corpus), config->num_qubits, config->count, config->seed);
        const std::span<const double> thresholds(config->thresholds, config->num_thresholds);
        const std::vector<mpsprep::BenchRecord> records = mpsprep::compare(specs, thresholds, config->jobs);
        *out = copy_string(config->format == MPSPREP_FORMAT_JSON ? mpsprep::records_to_json(records)
                                                                 : mpsprep::records_to_csv(records));
    });
}

}  // extern "C"
