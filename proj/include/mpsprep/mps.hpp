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
#include <optional>
#include <span>
#include <vector>

#include "mpsprep/linalg.hpp"

namespace mpsprep {

/// Expansion coefficients A(j_1,...,j_Q) of a Q-qubit state. Index i carries
/// j_1 as its most significant bit: i = sum_n j_n 2^(Q-n).
class AmplitudeVector {
  public:
    /// Throws BadInput unless the length is a power of two >= 2 and all
    /// entries are finite.
    explicit AmplitudeVector(std::vector<Complex> amps);

    static AmplitudeVector normalized(std::vector<Complex> amps);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t size() const { return amps_.size(); }
    const std::vector<Complex> &amps() const { return amps_; }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }

    double norm() const;
    bool is_normalized(double tolerance = 1e-10) const;

  private:
    std::vector<Complex> amps_;
    std::size_t num_qubits_ = 0;
};

/// One MPS core A^n with shape (left, 2, right), stored as a left x (2*right)
/// matrix whose column index is j*right + b.
struct MpsCore {
    std::size_t left = 1;
    std::size_t right = 1;
    ComplexMatrix data;

    MpsCore() = default;
    MpsCore(std::size_t left_dim, std::size_t right_dim);

    Complex &operator()(std::size_t a, std::size_t j, std::size_t b) {
        return data(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(j * right + b));
    }
    const Complex &operator()(std::size_t a, std::size_t j, std::size_t b) const {
        return data(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(j * right + b));
    }

    /// (left*2) x right view; row index a*2 + j.
    ComplexMatrix as_left_matrix() const;
    static MpsCore from_left_matrix(const ComplexMatrix &m, std::size_t left, std::size_t right);
};

struct TruncationStep {
    std::size_t bond = 0;  // 1..Q-1, between qubits bond and bond+1
    std::size_t old_rank = 0;
    std::size_t new_rank = 0;
    double dropped_relative_sigma = 0.0;  // sigma_dropped / sigma_max at that bond
    double local_frobenius_error = 0.0;   // sigma_dropped of the normalized state
};

class MpsState {
  public:
    /// Validates shapes, boundary dims, rank bounds, and (when right_canonical)
    /// the left <= 2*right inequality at every core. Throws CorruptMps.
    MpsState(std::vector<MpsCore> cores, bool right_canonical, std::vector<TruncationStep> log = {});

    std::size_t num_qubits() const { return cores_.size(); }
    const std::vector<MpsCore> &cores() const { return cores_; }
    const MpsCore &core(std::size_t n) const { return cores_[n]; }

    /// [dim alpha^1, ..., dim alpha^{Q-1}]
    std::vector<std::size_t> bond_dims() const;
    bool right_canonical() const { return right_canonical_; }
    const std::vector<TruncationStep> &truncation_log() const { return log_; }

  private:
    std::vector<MpsCore> cores_;
    bool right_canonical_ = false;
    std::vector<TruncationStep> log_;
};

struct EntropyReport {
    std::vector<double> per_cut;  // S(rho_n) / min(n, Q-n), n = 1..Q-1
    double mean = 0.0;
};

/// Left-to-right TT-SVD followed by a right-canonicalizing sweep. rank_caps,
/// when non-empty, holds Q-1 per-bond maxima applied at each SVD step.
MpsState decompose(const AmplitudeVector &target, std::span<const std::size_t> rank_caps = {});

/// True when the caps (clipped to the unfolding rank bounds) keep
/// dim alpha^{n-1} <= 2 dim alpha^n at every bond.
bool rank_caps_feasible(std::size_t num_qubits, std::span<const std::size_t> rank_caps);

AmplitudeVector reconstruct(const MpsState &mps);

/// Max residual of the right-normalization relations; core 1 is checked
/// against its squared norm being 1.
double verify_right_canonical(const MpsState &mps);

/// Schmidt spectra at every bond of a right-canonical state, computed by a
/// left-to-right sweep of the orthogonality center.
std::vector<RealVector> bond_spectra(const MpsState &mps);

/// True when the bond dims satisfy dim alpha^{n-1} <= 2 dim alpha^n and
/// dim alpha^n <= 2 dim alpha^{n-1} at every bond (with dim alpha^0 = dim alpha^Q = 1).
bool bond_dims_admissible(std::span<const std::size_t> bond_dims);

/// The admissible single-rank drop with the smallest sigma_min/sigma_max, or
/// nothing when every bond already has dimension 1.
std::optional<TruncationStep> next_truncation(const MpsState &mps);

/// Drops the smallest singular value at step.bond, renormalizes, and returns
/// the right-canonical result with the step appended to the log.
MpsState apply_truncation(const MpsState &mps, const TruncationStep &step);

/// |<a|b>|^2
double fidelity(const AmplitudeVector &a, const AmplitudeVector &b);

EntropyReport mean_normalized_bipartite_entropy(const AmplitudeVector &target);

/// Von Neumann entropy in bits of the Schmidt weights s_i^2 / sum s^2.
double schmidt_entropy(const RealVector &singular_values);

}  // namespace mpsprep
