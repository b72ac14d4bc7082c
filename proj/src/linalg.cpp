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

#include "mpsprep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mpsprep/error.hpp"

namespace mpsprep {

const char *error_code_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::InvalidSplit: return "InvalidSplit";
    case ErrorCode::NotIsometry: return "NotIsometry";
    case ErrorCode::InfeasibleRanks: return "InfeasibleRanks";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::CorruptMps: return "CorruptMps";
    case ErrorCode::StaleStep: return "StaleStep";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Undefined: return "Undefined";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::SpanError: return "SpanError";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

bool all_finite(const ComplexMatrix &m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        const Complex z = m.data()[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

std::size_t SvdResult::rank(double relative_tol) const {
    if (s.size() == 0 || s[0] <= 0.0) {
        return 0;
    }
    const double cutoff = relative_tol * s[0];
    std::size_t r = 0;
    while (r < static_cast<std::size_t>(s.size()) && s[static_cast<Eigen::Index>(r)] > cutoff) {
        ++r;
    }
    return r;
}

ComplexMatrix SvdResult::reconstruct(std::size_t k) const {
    const auto kk = static_cast<Eigen::Index>(k);
    return u.leftCols(kk) * s.head(kk).cast<Complex>().asDiagonal() * vh.topRows(kk);
}

SvdResult svd(const ComplexMatrix &m) {
    if (m.rows() < 1 || m.cols() < 1) {
        throw Error(ErrorCode::InvalidMatrix, "empty matrix");
    }
    if (!all_finite(m)) {
        throw Error(ErrorCode::InvalidMatrix, "matrix has non-finite entries");
    }

    const Eigen::MatrixXcd work = m;
    Eigen::BDCSVD<Eigen::MatrixXcd> solver(work, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::NumericalFailure, "SVD did not converge");
    }

    const Eigen::MatrixXcd &u = solver.matrixU();
    const Eigen::MatrixXcd &v = solver.matrixV();
    const Eigen::VectorXd &sigma = solver.singularValues();
    const Eigen::Index k = sigma.size();

    std::vector<Eigen::Index> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return sigma[a] > sigma[b]; });

    SvdResult out;
    out.u.resize(m.rows(), k);
    out.s.resize(k);
    out.vh.resize(k, m.cols());
    for (Eigen::Index i = 0; i < k; ++i) {
        const Eigen::Index src = order[static_cast<std::size_t>(i)];
        out.s[i] = sigma[src];
        out.u.col(i) = u.col(src);
        out.vh.row(i) = v.col(src).adjoint();

        // Gauge: the first entry within rounding of the largest magnitude becomes real positive.
        double max_abs = 0.0;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            max_abs = std::max(max_abs, std::abs(out.u(r, i)));
        }
        if (max_abs == 0.0) {
            continue;
        }
        Eigen::Index pivot = 0;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (std::abs(out.u(r, i)) >= max_abs * (1.0 - 1e-12)) {
                pivot = r;
                break;
            }
        }
        const Complex phase = out.u(pivot, i) / std::abs(out.u(pivot, i));
        out.u.col(i) *= std::conj(phase);
        out.vh.row(i) *= phase;
        out.u(pivot, i) = Complex(out.u(pivot, i).real(), 0.0);
    }
    return out;
}

MultiIndexLayout::MultiIndexLayout(std::vector<std::size_t> axis_dims) : dims_(std::move(axis_dims)) {
    strides_.assign(dims_.size(), 1);
    for (std::size_t i = dims_.size(); i-- > 0;) {
        strides_[i] = size_;
        size_ *= dims_[i];
    }
}

std::size_t MultiIndexLayout::flat_index(std::span<const std::size_t> index) const {
    std::size_t flat = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        flat += index[i] * strides_[i];
    }
    return flat;
}

std::vector<std::size_t> MultiIndexLayout::multi_index(std::size_t flat) const {
    std::vector<std::size_t> index(dims_.size());
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        index[i] = flat / strides_[i];
        flat %= strides_[i];
    }
    return index;
}

DenseTensor::DenseTensor(std::vector<std::size_t> dims) : layout(std::move(dims)) {
    data.assign(layout.size(), Complex{});
}

DenseTensor::DenseTensor(std::vector<std::size_t> dims, std::vector<Complex> values)
    : layout(std::move(dims)), data(std::move(values)) {
    if (data.size() != layout.size()) {
        throw Error(ErrorCode::DimensionMismatch, "tensor data does not match its shape");
    }
}

ComplexMatrix unfold(const DenseTensor &t, std::size_t split) {
    const auto &dims = t.layout.axis_dims();
    if (split < 1 || split >= dims.size()) {
        throw Error(ErrorCode::InvalidSplit, "split must lie in [1, axes-1]");
    }
    const std::size_t rows = std::accumulate(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(split),
                                             std::size_t{1}, std::multiplies<>());
    const std::size_t cols = t.layout.size() / rows;
    // With rightmost-fastest storage the unfolding is a reinterpretation of the buffer.
    ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    std::copy(t.data.begin(), t.data.end(), m.data());
    return m;
}

DenseTensor refold(const ComplexMatrix &m, std::vector<std::size_t> dims, std::size_t split) {
    if (split < 1 || split >= dims.size()) {
        throw Error(ErrorCode::InvalidSplit, "split must lie in [1, axes-1]");
    }
    const std::size_t rows = std::accumulate(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(split),
                                             std::size_t{1}, std::multiplies<>());
    DenseTensor t(std::move(dims));
    if (static_cast<std::size_t>(m.rows()) != rows ||
        static_cast<std::size_t>(m.size()) != t.layout.size()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix shape does not match tensor dims at split");
    }
    std::copy(m.data(), m.data() + m.size(), t.data.begin());
    return t;
}

double isometry_residual(const ComplexMatrix &m) {
    const ComplexMatrix gram = m.adjoint() * m;
    return (gram - ComplexMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

ComplexMatrix complete_to_unitary(const ComplexMatrix &partial) {
    const Eigen::Index dim = partial.rows();
    const Eigen::Index given = partial.cols();
    if (dim < 1 || given > dim) {
        throw Error(ErrorCode::NotIsometry, "need k <= D orthonormal columns");
    }
    if (!all_finite(partial)) {
        throw Error(ErrorCode::InvalidMatrix, "partial isometry has non-finite entries");
    }
    if (given > 0 && isometry_residual(partial) > tol::isometry_input) {
        throw Error(ErrorCode::NotIsometry, "input columns are not orthonormal");
    }

    ComplexMatrix out(dim, dim);
    out.leftCols(given) = partial;
    Eigen::Index filled = given;

    Eigen::VectorXcd v(dim);
    for (Eigen::Index e = 0; e < dim && filled < dim; ++e) {
        v.setZero();
        v[e] = 1.0;
        // Two modified Gram-Schmidt passes; the second restores orthogonality
        // lost when the residual is small.
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index c = 0; c < filled; ++c) {
                const Complex overlap = out.col(c).dot(v);
                v -= overlap * out.col(c);
            }
        }
        const double residual = v.norm();
        if (residual < tol::completion_residual) {
            continue;
        }
        out.col(filled++) = v / residual;
    }
    if (filled != dim) {
        throw Error(ErrorCode::NumericalFailure, "orthonormal completion ran out of basis vectors");
    }
    return out;
}

}  // namespace mpsprep
