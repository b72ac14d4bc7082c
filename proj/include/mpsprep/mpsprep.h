/*
 * Copyright 2026 The mpsprep Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libmpsprep: amplitude-encoded state preparation through
 * right-canonical matrix product states.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every call returns an mpsprep_status; on failure
 * mpsprep_last_error() describes the problem (thread-local, valid until the
 * next failing call on the same thread). Strings returned through char**
 * out-parameters are allocated by the library and released with
 * mpsprep_string_free().
 */

#ifndef MPSPREP_MPSPREP_H
#define MPSPREP_MPSPREP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MPSPREP_BUILDING_LIBRARY)
#    define MPSPREP_API __declspec(dllexport)
#  else
#    define MPSPREP_API __declspec(dllimport)
#  endif
#else
#  define MPSPREP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mpsprep_status {
    MPSPREP_OK = 0,
    MPSPREP_ERR_INVALID_ARGUMENT = 1, /* null handle or out-of-range argument */
    MPSPREP_ERR_BAD_INPUT = 2,        /* malformed data, length not a power of two */
    MPSPREP_ERR_NOT_NORMALIZED = 3,
    MPSPREP_ERR_INFEASIBLE_RANKS = 4,
    MPSPREP_ERR_DIMENSION_MISMATCH = 5,
    MPSPREP_ERR_CORRUPT_MPS = 6,
    MPSPREP_ERR_STALE_STEP = 7,
    MPSPREP_ERR_UNDEFINED = 8,
    MPSPREP_ERR_NOT_CANONICAL = 9,
    MPSPREP_ERR_SPAN = 10,
    MPSPREP_ERR_NOT_UNITARY = 11,
    MPSPREP_ERR_NOT_ISOMETRY = 12,
    MPSPREP_ERR_INVALID_SPEC = 13,
    MPSPREP_ERR_NUMERICAL = 14,
    MPSPREP_ERR_IO = 15,
    MPSPREP_ERR_INTERNAL = 16
} mpsprep_status;

typedef enum mpsprep_format {
    MPSPREP_FORMAT_CSV = 0,
    MPSPREP_FORMAT_JSON = 1
} mpsprep_format;

typedef struct mpsprep_amplitudes mpsprep_amplitudes;
typedef struct mpsprep_mps mpsprep_mps;
typedef struct mpsprep_circuit mpsprep_circuit;

typedef struct mpsprep_truncation_step {
    size_t bond; /* 1..Q-1 */
    size_t old_rank;
    size_t new_rank;
    double dropped_relative_sigma;
    double local_frobenius_error;
} mpsprep_truncation_step;

typedef struct mpsprep_sweep_summary {
    double achieved_fidelity; /* simulated */
    double entropy;
    int64_t entangling_cost;
    size_t depth_estimate;
    size_t truncation_count;
} mpsprep_sweep_summary;

typedef struct mpsprep_bench_config {
    size_t num_qubits;
    const char *corpus; /* sparse, dense, normal, lognormal, sinusoidal, mixed */
    size_t count;
    uint64_t seed;
    const double *thresholds;
    size_t num_thresholds;
    size_t jobs; /* 0: one worker per core */
    mpsprep_format format;
} mpsprep_bench_config;

/* ---- diagnostics -------------------------------------------------------- */

MPSPREP_API const char *mpsprep_version(void);
MPSPREP_API const char *mpsprep_status_name(mpsprep_status status);
MPSPREP_API const char *mpsprep_last_error(void);
MPSPREP_API void mpsprep_string_free(char *s);

/* ---- amplitude vectors -------------------------------------------------- */

/* Parses a JSON array of numbers or [re, im] pairs and normalizes it.
 * *was_normalized (optional) is set to 1 when the input norm was not 1. */
MPSPREP_API mpsprep_status mpsprep_amplitudes_from_json(const char *json, mpsprep_amplitudes **out,
                                                        int *was_normalized);
/* Copies n values as given (no normalization). im may be NULL. */
MPSPREP_API mpsprep_status mpsprep_amplitudes_from_values(const double *re, const double *im, size_t n,
                                                          mpsprep_amplitudes **out);
MPSPREP_API mpsprep_status mpsprep_amplitudes_to_json(const mpsprep_amplitudes *a, char **out);
MPSPREP_API size_t mpsprep_amplitudes_num_qubits(const mpsprep_amplitudes *a);
MPSPREP_API size_t mpsprep_amplitudes_size(const mpsprep_amplitudes *a);
MPSPREP_API mpsprep_status mpsprep_amplitudes_get(const mpsprep_amplitudes *a, size_t index, double *re,
                                                  double *im);
/* "index,bitstring,probability" rows, bitstring printed j_1 first. */
MPSPREP_API mpsprep_status mpsprep_amplitudes_probabilities_csv(const mpsprep_amplitudes *a, char **out);
MPSPREP_API void mpsprep_amplitudes_free(mpsprep_amplitudes *a);

MPSPREP_API mpsprep_status mpsprep_fidelity(const mpsprep_amplitudes *a, const mpsprep_amplitudes *b,
                                            double *out);
/* per_cut may be NULL; otherwise it receives min(capacity, Q-1) values. */
MPSPREP_API mpsprep_status mpsprep_entropy(const mpsprep_amplitudes *a, double *per_cut, size_t capacity,
                                           double *mean);

/* ---- matrix product states ---------------------------------------------- */

/* rank_caps may be NULL (exact); otherwise it holds Q-1 per-bond maxima. */
MPSPREP_API mpsprep_status mpsprep_decompose(const mpsprep_amplitudes *target, const size_t *rank_caps,
                                             size_t num_caps, mpsprep_mps **out);
MPSPREP_API mpsprep_status mpsprep_mps_from_json(const char *json, mpsprep_mps **out);
MPSPREP_API mpsprep_status mpsprep_mps_to_json(const mpsprep_mps *m, uint64_t seed, char **out);
MPSPREP_API size_t mpsprep_mps_num_qubits(const mpsprep_mps *m);
/* Writes min(capacity, Q-1) bond dimensions; *count receives Q-1. */
MPSPREP_API mpsprep_status mpsprep_mps_bond_dims(const mpsprep_mps *m, size_t *dims, size_t capacity,
                                                 size_t *count);
MPSPREP_API mpsprep_status mpsprep_mps_canonical_residual(const mpsprep_mps *m, double *out);
MPSPREP_API mpsprep_status mpsprep_mps_reconstruct(const mpsprep_mps *m, mpsprep_amplitudes **out);
/* Applies the next greedy truncation. When every bond is already 1, *out is
 * set to NULL and MPSPREP_OK is returned. step may be NULL. */
MPSPREP_API mpsprep_status mpsprep_mps_truncate_once(const mpsprep_mps *m, mpsprep_mps **out,
                                                     mpsprep_truncation_step *step);
MPSPREP_API void mpsprep_mps_free(mpsprep_mps *m);

/* ---- circuits ----------------------------------------------------------- */

MPSPREP_API mpsprep_status mpsprep_synthesize(const mpsprep_mps *m, mpsprep_circuit **out);
MPSPREP_API mpsprep_status mpsprep_capped_baseline(const mpsprep_amplitudes *target, mpsprep_circuit **out);
MPSPREP_API mpsprep_status mpsprep_circuit_from_json(const char *json, mpsprep_circuit **out);
MPSPREP_API mpsprep_status mpsprep_circuit_to_json(const mpsprep_circuit *c, uint64_t seed, char **out);
MPSPREP_API size_t mpsprep_circuit_num_qubits(const mpsprep_circuit *c);
MPSPREP_API size_t mpsprep_circuit_num_gates(const mpsprep_circuit *c);
MPSPREP_API mpsprep_status mpsprep_circuit_gate(const mpsprep_circuit *c, size_t index, size_t *start_qubit,
                                                size_t *width);
MPSPREP_API mpsprep_status mpsprep_circuit_entangling_cost(const mpsprep_circuit *c, int64_t *out);
MPSPREP_API mpsprep_status mpsprep_circuit_depth_estimate(const mpsprep_circuit *c, size_t *out);
MPSPREP_API void mpsprep_circuit_free(mpsprep_circuit *c);

MPSPREP_API mpsprep_status mpsprep_isometry_reference_cost(size_t num_qubits, int64_t *out);

/* ---- simulation --------------------------------------------------------- */

/* Runs the circuit on |0...0>. */
MPSPREP_API mpsprep_status mpsprep_simulate(const mpsprep_circuit *c, mpsprep_amplitudes **out);

/* ---- threshold sweeps and benchmarks ------------------------------------ */

/* Greedy truncation down to fidelity f_min in (0, 1]. record (optional)
 * receives the benchmark record rendered in `format`. */
MPSPREP_API mpsprep_status mpsprep_sweep(const mpsprep_amplitudes *target, double f_min, mpsprep_format format,
                                         mpsprep_circuit **out, mpsprep_sweep_summary *summary, char **record);

MPSPREP_API mpsprep_status mpsprep_bench(const mpsprep_bench_config *config, char **out);

#ifdef __cplusplus
}
#endif

#endif /* MPSPREP_MPSPREP_H */
