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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "mpsprep/linalg.hpp"
#include "mpsprep/mps.hpp"

namespace mpsprep::testing {

inline std::vector<Complex> random_complex(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Complex> v(n);
    for (Complex &z : v) {
        const double re = g(rng);
        z = Complex(re, g(rng));
    }
    return v;
}

/// Haar-like random pure state (normalized complex Gaussian vector).
inline AmplitudeVector random_state(std::size_t num_qubits, std::uint64_t seed) {
    return AmplitudeVector::normalized(random_complex(std::size_t{1} << num_qubits, seed));
}

inline ComplexMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
    const auto v = random_complex(static_cast<std::size_t>(rows * cols), seed);
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        m.data()[i] = v[static_cast<std::size_t>(i)];
    }
    return m;
}

/// Tensor product of random single-qubit states; qubit 1 is the most significant bit.
inline AmplitudeVector random_product_state(std::size_t num_qubits, std::uint64_t seed) {
    std::vector<Complex> amps{1.0};
    for (std::size_t n = 0; n < num_qubits; ++n) {
        const auto q = random_complex(2, seed * 7919 + n);
        const double norm = std::sqrt(std::norm(q[0]) + std::norm(q[1]));
        std::vector<Complex> next(amps.size() * 2);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            next[2 * i] = amps[i] * q[0] / norm;
            next[2 * i + 1] = amps[i] * q[1] / norm;
        }
        amps = std::move(next);
    }
    return AmplitudeVector(std::move(amps));
}

inline AmplitudeVector basis_state(std::size_t num_qubits, std::size_t index) {
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    amps[index] = 1.0;
    return AmplitudeVector(std::move(amps));
}

inline AmplitudeVector ghz(std::size_t num_qubits) {
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    amps.front() = amps.back() = 1.0 / std::sqrt(2.0);
    return AmplitudeVector(std::move(amps));
}

inline AmplitudeVector bell() { return ghz(2); }

/// <a|b> by direct summation.
inline Complex brute_overlap(const AmplitudeVector &a, const AmplitudeVector &b) {
    Complex sum{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

inline double distance_squared(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d += std::norm(a[i] - b[i]);
    }
    return d;
}

/// Entropy oracle: eigenvalues of the reduced density matrix of qubits 1..n,
/// rho = M M^H, with no SVD involved.
inline double reduced_density_entropy(const AmplitudeVector &v, std::size_t n) {
    const auto rows = static_cast<Eigen::Index>(std::size_t{1} << n);
    const auto cols = static_cast<Eigen::Index>(v.size()) / rows;
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(r, c) = v[static_cast<std::size_t>(r * cols + c)];
        }
    }
    const Eigen::MatrixXcd rho = m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho);
    double s = 0.0;
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
        const double p = eig.eigenvalues()[i];
        if (p > 1e-14) {
            s -= p * std::log2(p);
        }
    }
    return s;
}

}  // namespace mpsprep::testing
