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

#include "mpsprep/mps.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "mpsprep/error.hpp"

namespace mpsprep {

namespace {

std::size_t unfolding_rank_bound(std::size_t num_qubits, std::size_t bond) {
    const std::size_t shorter = std::min(bond, num_qubits - bond);
    return shorter >= 63 ? ~std::size_t{0} : (std::size_t{1} << shorter);
}

ComplexMatrix rows_times_diag(const RealVector &s, const ComplexMatrix &vh, std::size_t k) {
    const auto kk = static_cast<Eigen::Index>(k);
    return s.head(kk).cast<Complex>().asDiagonal() * vh.topRows(kk);
}

std::size_t kept_rank(const SvdResult &f) { return std::max<std::size_t>(1, f.rank()); }

/// Right-to-left gauge sweep: every core but the first becomes a right
/// isometry, exact-zero singular values are dropped, and core 1 is rescaled
/// to unit norm.
std::vector<MpsCore> right_canonicalize(std::vector<MpsCore> cores) {
    for (std::size_t n = cores.size(); n-- > 1;) {
        MpsCore &cur = cores[n];
        const SvdResult f = svd(cur.data);
        const std::size_t r = kept_rank(f);
        const auto rr = static_cast<Eigen::Index>(r);

        MpsCore replaced(r, cur.right);
        replaced.data = f.vh.topRows(rr);

        const ComplexMatrix carry = f.u.leftCols(rr) * f.s.head(rr).cast<Complex>().asDiagonal();
        MpsCore &prev = cores[n - 1];
        const ComplexMatrix prev_left = prev.as_left_matrix() * carry;
        prev = MpsCore::from_left_matrix(prev_left, prev.left, r);
        cur = std::move(replaced);
    }
    MpsCore &first = cores.front();
    const double norm = first.data.norm();
    if (norm == 0.0 || !std::isfinite(norm)) {
        throw Error(ErrorCode::NumericalFailure, "state collapsed to zero norm");
    }
    first.data /= norm;
    return cores;
}

/// Moves the orthogonality center from the left edge to `bond` (1-based),
/// making cores [0, bond) left isometries. Returns the SVD of the center
/// matrix at that bond; `cores` are updated so that cores[bond-1] holds the
/// full center (left*2 x right) before the factorization.
SvdResult sweep_center_to(std::vector<MpsCore> &cores, std::size_t bond) {
    ComplexMatrix center = cores[0].as_left_matrix();
    for (std::size_t n = 0;; ++n) {
        const SvdResult f = svd(center);
        if (n + 1 == bond) {
            cores[n] = MpsCore::from_left_matrix(center, cores[n].left, cores[n].right);
            return f;
        }
        const std::size_t r = static_cast<std::size_t>(f.s.size());
        cores[n] = MpsCore::from_left_matrix(f.u, cores[n].left, r);
        const ComplexMatrix carry = rows_times_diag(f.s, f.vh, r);
        const MpsCore &next = cores[n + 1];
        const ComplexMatrix merged = carry * next.data;  // r x (2*right)
        MpsCore moved(r, next.right);
        moved.data = merged;
        cores[n + 1] = moved;
        center = moved.as_left_matrix();
    }
}

}  // namespace

// ---------------------------------------------------------------------------

AmplitudeVector::AmplitudeVector(std::vector<Complex> amps) : amps_(std::move(amps)) {
    if (amps_.size() < 2 || !std::has_single_bit(amps_.size())) {
        throw Error(ErrorCode::BadInput,
                    "amplitude vector length " + std::to_string(amps_.size()) + " is not a power of two >= 2");
    }
    for (const Complex &z : amps_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorCode::BadInput, "amplitude vector has non-finite entries");
        }
    }
    num_qubits_ = static_cast<std::size_t>(std::countr_zero(amps_.size()));
}

AmplitudeVector AmplitudeVector::normalized(std::vector<Complex> amps) {
    AmplitudeVector v(std::move(amps));
    const double n = v.norm();
    if (n == 0.0) {
        throw Error(ErrorCode::BadInput, "cannot normalize the zero vector");
    }
    for (Complex &z : v.amps_) {
        z /= n;
    }
    return v;
}

double AmplitudeVector::norm() const {
    double sum = 0.0;
    for (const Complex &z : amps_) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

bool AmplitudeVector::is_normalized(double tolerance) const { return std::abs(norm() - 1.0) <= tolerance; }

MpsCore::MpsCore(std::size_t left_dim, std::size_t right_dim)
    : left(left_dim), right(right_dim),
      data(ComplexMatrix::Zero(static_cast<Eigen::Index>(left_dim), static_cast<Eigen::Index>(2 * right_dim))) {}

ComplexMatrix MpsCore::as_left_matrix() const {
    // Row-major (left, 2*right) storage already has flat index (a*2 + j)*right + b.
    return Eigen::Map<const ComplexMatrix>(data.data(), static_cast<Eigen::Index>(left * 2),
                                           static_cast<Eigen::Index>(right));
}

MpsCore MpsCore::from_left_matrix(const ComplexMatrix &m, std::size_t left, std::size_t right) {
    if (static_cast<std::size_t>(m.rows()) != 2 * left || static_cast<std::size_t>(m.cols()) != right) {
        throw Error(ErrorCode::CorruptMps, "core matrix shape mismatch");
    }
    MpsCore core(left, right);
    core.data = Eigen::Map<const ComplexMatrix>(m.data(), static_cast<Eigen::Index>(left),
                                                static_cast<Eigen::Index>(2 * right));
    return core;
}

// ---------------------------------------------------------------------------

MpsState::MpsState(std::vector<MpsCore> cores, bool right_canonical, std::vector<TruncationStep> log)
    : cores_(std::move(cores)), right_canonical_(right_canonical), log_(std::move(log)) {
    const std::size_t q = cores_.size();
    if (q == 0) {
        throw Error(ErrorCode::CorruptMps, "an MPS needs at least one core");
    }
    if (cores_.front().left != 1 || cores_.back().right != 1) {
        throw Error(ErrorCode::CorruptMps, "boundary bond dimensions must be 1");
    }
    for (std::size_t n = 0; n < q; ++n) {
        const MpsCore &c = cores_[n];
        if (c.left == 0 || c.right == 0 || static_cast<std::size_t>(c.data.rows()) != c.left ||
            static_cast<std::size_t>(c.data.cols()) != 2 * c.right) {
            throw Error(ErrorCode::CorruptMps, "core " + std::to_string(n + 1) + " has an inconsistent shape");
        }
        if (!all_finite(c.data)) {
            throw Error(ErrorCode::CorruptMps, "core " + std::to_string(n + 1) + " has non-finite entries");
        }
        if (n + 1 < q && c.right != cores_[n + 1].left) {
            throw Error(ErrorCode::CorruptMps, "bond " + std::to_string(n + 1) + " dimensions disagree");
        }
        if (c.right > 2 * c.left) {
            throw Error(ErrorCode::CorruptMps, "bond " + std::to_string(n + 1) + " exceeds twice its left bond");
        }
        if (n + 1 < q && c.right > unfolding_rank_bound(q, n + 1)) {
            throw Error(ErrorCode::CorruptMps, "bond " + std::to_string(n + 1) + " exceeds its unfolding rank");
        }
        if (right_canonical_ && c.left > 2 * c.right) {
            throw Error(ErrorCode::CorruptMps,
                        "core " + std::to_string(n + 1) + " violates dim(left) <= 2 dim(right)");
        }
    }
}

std::vector<std::size_t> MpsState::bond_dims() const {
    std::vector<std::size_t> dims;
    dims.reserve(cores_.size() - 1);
    for (std::size_t n = 0; n + 1 < cores_.size(); ++n) {
        dims.push_back(cores_[n].right);
    }
    return dims;
}

// ---------------------------------------------------------------------------

bool rank_caps_feasible(std::size_t num_qubits, std::span<const std::size_t> rank_caps) {
    if (rank_caps.size() + 1 != num_qubits) {
        return false;
    }
    std::vector<std::size_t> effective(rank_caps.size());
    for (std::size_t n = 0; n < rank_caps.size(); ++n) {
        if (rank_caps[n] == 0) {
            return false;
        }
        effective[n] = std::min(rank_caps[n], unfolding_rank_bound(num_qubits, n + 1));
    }
    // dim alpha^{n-1} <= 2 dim alpha^n for n = 2..Q-1; the last bond is at most 2 by its rank bound.
    for (std::size_t n = 1; n < effective.size(); ++n) {
        if (effective[n - 1] > 2 * effective[n]) {
            return false;
        }
    }
    return true;
}

MpsState decompose(const AmplitudeVector &target, std::span<const std::size_t> rank_caps) {
    const std::size_t q = target.num_qubits();
    if (!target.is_normalized()) {
        throw Error(ErrorCode::NotNormalized, "target norm is " + std::to_string(target.norm()));
    }
    if (!rank_caps.empty() && !rank_caps_feasible(q, rank_caps)) {
        throw Error(ErrorCode::InfeasibleRanks, "rank caps violate dim(left) <= 2 dim(right)");
    }

    std::vector<MpsCore> cores;
    cores.reserve(q);
    std::size_t left = 1;
    std::size_t cols = target.size() / 2;
    ComplexMatrix b = Eigen::Map<const ComplexMatrix>(target.amps().data(), 2, static_cast<Eigen::Index>(cols));

    for (std::size_t n = 0; n + 1 < q; ++n) {
        const SvdResult f = svd(b);
        std::size_t k = kept_rank(f);
        if (!rank_caps.empty()) {
            k = std::min(k, rank_caps[n]);
        }
        const auto kk = static_cast<Eigen::Index>(k);
        cores.push_back(MpsCore::from_left_matrix(f.u.leftCols(kk), left, k));
        const ComplexMatrix rest = rows_times_diag(f.s, f.vh, k);  // k x cols
        cols /= 2;
        b = Eigen::Map<const ComplexMatrix>(rest.data(), static_cast<Eigen::Index>(2 * k),
                                            static_cast<Eigen::Index>(cols));
        left = k;
    }
    cores.push_back(MpsCore::from_left_matrix(b, left, 1));

    return MpsState(right_canonicalize(std::move(cores)), true);
}

AmplitudeVector reconstruct(const MpsState &mps) {
    // Rows enumerate (j_1..j_n) with j_1 most significant; columns are alpha^n.
    ComplexMatrix acc = ComplexMatrix::Ones(1, 1);
    for (const MpsCore &core : mps.cores()) {
        if (static_cast<std::size_t>(acc.cols()) != core.left) {
            throw Error(ErrorCode::CorruptMps, "adjacent cores disagree on bond dimension");
        }
        const ComplexMatrix next = acc * core.data;  // rows x (2*right)
        acc = Eigen::Map<const ComplexMatrix>(next.data(), next.rows() * 2, static_cast<Eigen::Index>(core.right));
    }
    std::vector<Complex> amps(acc.data(), acc.data() + acc.size());
    return AmplitudeVector(std::move(amps));
}

double verify_right_canonical(const MpsState &mps) {
    const auto &cores = mps.cores();
    double worst = std::abs(cores.front().data.squaredNorm() - 1.0);
    for (std::size_t n = 1; n < cores.size(); ++n) {
        const ComplexMatrix &m = cores[n].data;
        const ComplexMatrix gram = m * m.adjoint();
        const double r = (gram - ComplexMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
        worst = std::max(worst, r);
    }
    return worst;
}

std::vector<RealVector> bond_spectra(const MpsState &mps) {
    std::vector<RealVector> spectra;
    const auto &cores = mps.cores();
    if (cores.size() < 2) {
        return spectra;
    }
    ComplexMatrix center = cores[0].as_left_matrix();
    for (std::size_t n = 0; n + 1 < cores.size(); ++n) {
        const SvdResult f = svd(center);
        spectra.push_back(f.s);
        const ComplexMatrix merged = rows_times_diag(f.s, f.vh, static_cast<std::size_t>(f.s.size())) *
                                     cores[n + 1].data;
        center = Eigen::Map<const ComplexMatrix>(merged.data(), merged.rows() * 2,
                                                 static_cast<Eigen::Index>(cores[n + 1].right));
    }
    return spectra;
}

bool bond_dims_admissible(std::span<const std::size_t> bond_dims) {
    auto dim = [&](std::size_t n) { return n == 0 || n > bond_dims.size() ? std::size_t{1} : bond_dims[n - 1]; };
    for (std::size_t n = 1; n <= bond_dims.size() + 1; ++n) {
        const std::size_t left = dim(n - 1);
        const std::size_t right = dim(n);
        if (left == 0 || right == 0 || left > 2 * right || right > 2 * left) {
            return false;
        }
    }
    return true;
}

std::optional<TruncationStep> next_truncation(const MpsState &mps) {
    const std::vector<std::size_t> dims = mps.bond_dims();
    const std::vector<RealVector> spectra = bond_spectra(mps);

    std::optional<TruncationStep> best;
    for (std::size_t n = 0; n < dims.size(); ++n) {
        if (dims[n] <= 1) {
            continue;
        }
        std::vector<std::size_t> trial = dims;
        trial[n] -= 1;
        if (!bond_dims_admissible(trial)) {
            continue;
        }
        const RealVector &s = spectra[n];
        const double smallest = s[s.size() - 1];
        const double ratio = s[0] > 0.0 ? std::clamp(smallest / s[0], 0.0, 1.0) : 0.0;
        if (!best || ratio < best->dropped_relative_sigma) {
            best = TruncationStep{n + 1, dims[n], dims[n] - 1, ratio, smallest};
        }
    }
    return best;
}

MpsState apply_truncation(const MpsState &mps, const TruncationStep &step) {
    const std::vector<std::size_t> dims = mps.bond_dims();
    if (step.bond < 1 || step.bond > dims.size() || dims[step.bond - 1] != step.old_rank ||
        step.new_rank + 1 != step.old_rank) {
        throw Error(ErrorCode::StaleStep, "truncation step does not match the current bond dimensions");
    }

    std::vector<MpsCore> cores = mps.cores();
    const SvdResult f = sweep_center_to(cores, step.bond);
    const std::size_t k = step.new_rank;
    const auto kk = static_cast<Eigen::Index>(k);

    MpsCore &center = cores[step.bond - 1];
    center = MpsCore::from_left_matrix(f.u.leftCols(kk), center.left, k);
    MpsCore &next = cores[step.bond];
    MpsCore reduced(k, next.right);
    reduced.data = rows_times_diag(f.s, f.vh, k) * next.data;
    next = std::move(reduced);

    std::vector<TruncationStep> log = mps.truncation_log();
    log.push_back(step);
    return MpsState(right_canonicalize(std::move(cores)), true, std::move(log));
}

double fidelity(const AmplitudeVector &a, const AmplitudeVector &b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch, "states have different qubit counts");
    }
    Complex overlap{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        overlap += std::conj(a[i]) * b[i];
    }
    return std::norm(overlap);
}

double schmidt_entropy(const RealVector &singular_values) {
    const double total = singular_values.squaredNorm();
    if (total <= 0.0) {
        return 0.0;
    }
    // Values below the rank tolerance are exact zeros, so separable cuts give 0 exactly.
    const double cutoff = tol::rank_relative * singular_values.maxCoeff();
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < singular_values.size(); ++i) {
        const double p = singular_values[i] * singular_values[i] / total;
        if (singular_values[i] > cutoff && p < 1.0) {
            entropy -= p * std::log2(p);
        }
    }
    return std::max(entropy, 0.0);
}

EntropyReport mean_normalized_bipartite_entropy(const AmplitudeVector &target) {
    const std::size_t q = target.num_qubits();
    if (q < 2) {
        throw Error(ErrorCode::Undefined, "bipartite entropy needs at least two qubits");
    }
    EntropyReport report;
    report.per_cut.reserve(q - 1);
    for (std::size_t n = 1; n < q; ++n) {
        const auto rows = static_cast<Eigen::Index>(std::size_t{1} << n);
        const ComplexMatrix m = Eigen::Map<const ComplexMatrix>(target.amps().data(), rows,
                                                                static_cast<Eigen::Index>(target.size()) / rows);
        const SvdResult f = svd(m);
        report.per_cut.push_back(schmidt_entropy(f.s) / static_cast<double>(std::min(n, q - n)));
    }
    double sum = 0.0;
    for (double v : report.per_cut) {
        sum += v;
    }
    report.mean = sum / static_cast<double>(report.per_cut.size());
    return report;
}

}  // namespace mpsprep
