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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace mpsprep {

using Complex = std::complex<double>;

/// Dense complex matrix. Row-major so that reshapes of contiguous storage follow
/// the same "rightmost index fastest" convention used everywhere else.
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RealVector = Eigen::VectorXd;

namespace tol {
// Singular values below rank_relative * s[0] are treated as exact zeros.
inline constexpr double rank_relative = 1e-12;
inline constexpr double orthonormal = 1e-10;
inline constexpr double isometry_input = 1e-8;
inline constexpr double completion_residual = 1e-8;
}  // namespace tol

struct SvdResult {
    ComplexMatrix u;   // left singular vectors as columns
    RealVector s;      // descending
    ComplexMatrix vh;  // rows are conjugated right singular vectors

    /// Number of singular values above rank_relative * s[0].
    std::size_t rank(double relative_tol = tol::rank_relative) const;

    /// u_k * diag(s_k) * vh_k for the k leading triplets.
    ComplexMatrix reconstruct(std::size_t k) const;
    ComplexMatrix reconstruct() const { return reconstruct(static_cast<std::size_t>(s.size())); }
};

/// Thin SVD with a fixed gauge: each left singular vector is rotated so its
/// largest-magnitude entry is real and positive (the matching row of vh absorbs
/// the conjugate phase). Singular values are stably sorted descending.
SvdResult svd(const ComplexMatrix &m);

/// Shape of a dense tensor with the rightmost axis incrementing first.
class MultiIndexLayout {
  public:
    explicit MultiIndexLayout(std::vector<std::size_t> axis_dims);

    const std::vector<std::size_t> &axis_dims() const { return dims_; }
    std::size_t size() const { return size_; }
    std::size_t rank() const { return dims_.size(); }

    std::size_t flat_index(std::span<const std::size_t> index) const;
    std::vector<std::size_t> multi_index(std::size_t flat) const;

  private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 1;
};

struct DenseTensor {
    MultiIndexLayout layout;
    std::vector<Complex> data;

    explicit DenseTensor(std::vector<std::size_t> dims);
    DenseTensor(std::vector<std::size_t> dims, std::vector<Complex> values);

    Complex &operator()(std::span<const std::size_t> index) { return data[layout.flat_index(index)]; }
    const Complex &operator()(std::span<const std::size_t> index) const {
        return data[layout.flat_index(index)];
    }
};

/// Matrix whose rows range over axes [0, split) and columns over [split, rank).
ComplexMatrix unfold(const DenseTensor &t, std::size_t split);

/// Inverse of unfold for the given axis dims.
DenseTensor refold(const ComplexMatrix &m, std::vector<std::size_t> dims, std::size_t split);

/// Extends k orthonormal columns of dimension D to a DxD unitary. The given
/// columns are copied unchanged; the rest come from modified Gram-Schmidt over
/// the standard basis e_0..e_{D-1}, in that order.
ComplexMatrix complete_to_unitary(const ComplexMatrix &partial);

/// max_ij |(m^H m - I)_ij|
double isometry_residual(const ComplexMatrix &m);

bool all_finite(const ComplexMatrix &m);

}  // namespace mpsprep
