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
#include <cmath>
#include <limits>

#include "gtest/gtest.h"

#include "mpsprep/error.hpp"
#include "test_util.hpp"

using namespace mpsprep;
namespace t = mpsprep::testing;

namespace {

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an mpsprep::Error";
    return ErrorCode::Undefined;
}

std::vector<std::size_t> rank_bound(std::size_t q) {
    std::vector<std::size_t> out;
    for (std::size_t n = 1; n < q; ++n) {
        out.push_back(std::size_t{1} << std::min(n, q - n));
    }
    return out;
}

}  // namespace

TEST(amplitude_vector, validation) {
    EXPECT_EQ(code_of([] { AmplitudeVector({1.0}); }), ErrorCode::BadInput);
    EXPECT_EQ(code_of([] { AmplitudeVector(std::vector<Complex>(6, 0.5)); }), ErrorCode::BadInput);
    EXPECT_EQ(code_of([] { AmplitudeVector({1.0, std::numeric_limits<double>::quiet_NaN()}); }),
              ErrorCode::BadInput);
    const AmplitudeVector v = AmplitudeVector::normalized({3.0, 4.0});
    EXPECT_NEAR(v[0].real(), 0.6, 1e-15);
    EXPECT_TRUE(v.is_normalized());
    EXPECT_EQ(v.num_qubits(), 1u);
}

TEST(decompose, basis_state_01) {
    const MpsState m = decompose(t::basis_state(2, 1));
    EXPECT_EQ(m.bond_dims(), std::vector<std::size_t>{1});
    EXPECT_LT(verify_right_canonical(m), 1e-10);
    EXPECT_NEAR(fidelity(reconstruct(m), t::basis_state(2, 1)), 1.0, 1e-12);
}

TEST(decompose, bell) {
    const MpsState m = decompose(t::bell());
    EXPECT_EQ(m.bond_dims(), std::vector<std::size_t>{2});
    EXPECT_LT(verify_right_canonical(m), 1e-10);
}

TEST(decompose, single_qubit) {
    const AmplitudeVector v = AmplitudeVector::normalized({1.0, Complex(0.0, 1.0)});
    const MpsState m = decompose(v);
    EXPECT_TRUE(m.bond_dims().empty());
    EXPECT_LT(t::distance_squared(reconstruct(m).amps(), v.amps()), 1e-24);
}

TEST(decompose, ghz4_capped_to_one) {
    const std::vector<std::size_t> caps{1, 1, 1};
    const MpsState m = decompose(t::ghz(4), caps);
    EXPECT_EQ(m.bond_dims(), caps);
    EXPECT_NEAR(fidelity(reconstruct(m), t::ghz(4)), 0.5, 1e-12);
    EXPECT_LT(verify_right_canonical(m), 1e-10);
}

TEST(decompose, random_round_trip_and_rank_bound) {
    for (std::size_t q = 1; q <= 10; ++q) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const AmplitudeVector v = t::random_state(q, 1000 * q + seed);
            const MpsState m = decompose(v);
            EXPECT_LT(t::distance_squared(reconstruct(m).amps(), v.amps()), 1e-20) << "Q=" << q;
            EXPECT_LT(verify_right_canonical(m), 1e-10);
            EXPECT_EQ(m.bond_dims(), rank_bound(q));
        }
    }
}

TEST(decompose, product_state_has_unit_bonds) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const MpsState m = decompose(t::random_product_state(7, seed));
        EXPECT_EQ(m.bond_dims(), std::vector<std::size_t>(6, 1));
    }
}

TEST(decompose, monotone_rank_schedule) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const MpsState m = decompose(t::random_state(8, seed));
        const auto dims = m.bond_dims();
        for (std::size_t n = 1; n < dims.size(); ++n) {
            EXPECT_LE(dims[n - 1], 2 * dims[n]);
            EXPECT_LE(dims[n], 2 * dims[n - 1]);
        }
    }
}

TEST(decompose, errors) {
    EXPECT_EQ(code_of([] { decompose(AmplitudeVector({1.0, 1.0})); }), ErrorCode::NotNormalized);
    const std::vector<std::size_t> bad{2, 4, 1};
    EXPECT_EQ(code_of([&] { decompose(t::ghz(4), bad); }), ErrorCode::InfeasibleRanks);
}

TEST(rank_caps_feasible, examples) {
    EXPECT_TRUE(rank_caps_feasible(4, std::vector<std::size_t>{1, 1, 1}));
    EXPECT_TRUE(rank_caps_feasible(4, std::vector<std::size_t>{2, 4, 2}));
    EXPECT_TRUE(rank_caps_feasible(4, std::vector<std::size_t>{8, 8, 8}));
    EXPECT_FALSE(rank_caps_feasible(4, std::vector<std::size_t>{2, 4, 1}));
    EXPECT_FALSE(rank_caps_feasible(4, std::vector<std::size_t>{2, 0, 2}));
    EXPECT_FALSE(rank_caps_feasible(4, std::vector<std::size_t>{2, 2}));
}

TEST(verify_right_canonical, detects_scaled_core) {
    const MpsState m = decompose(t::random_state(3, 4));
    std::vector<MpsCore> cores = m.cores();
    cores[1].data *= 2.0;
    const MpsState bad(cores, false);
    EXPECT_NEAR(verify_right_canonical(bad), 3.0, 1e-10);
}

TEST(mps_state, rejects_corrupt_cores) {
    const MpsState m = decompose(t::random_state(4, 4));
    std::vector<MpsCore> cores = m.cores();
    cores[2] = MpsCore(3, cores[2].right);
    EXPECT_EQ(code_of([&] { MpsState(cores, false); }), ErrorCode::CorruptMps);
    cores = m.cores();
    cores[0].data(0, 0) = std::numeric_limits<double>::infinity();
    EXPECT_EQ(code_of([&] { MpsState(cores, true); }), ErrorCode::CorruptMps);
}

TEST(bond_spectra, matches_unfolding) {
    const AmplitudeVector v = t::random_state(6, 11);
    const MpsState m = decompose(v);
    const auto spectra = bond_spectra(m);
    ASSERT_EQ(spectra.size(), 5u);
    for (std::size_t n = 1; n < 6; ++n) {
        const DenseTensor tensor(std::vector<std::size_t>(6, 2), v.amps());
        const SvdResult f = svd(unfold(tensor, n));
        ASSERT_EQ(spectra[n - 1].size(), static_cast<Eigen::Index>(f.rank()));
        for (Eigen::Index i = 0; i < spectra[n - 1].size(); ++i) {
            EXPECT_NEAR(spectra[n - 1][i], f.s[i], 1e-12);
        }
    }
}

TEST(bond_dims_admissible, examples) {
    EXPECT_TRUE(bond_dims_admissible(std::vector<std::size_t>{2, 4, 2}));
    EXPECT_TRUE(bond_dims_admissible(std::vector<std::size_t>{2, 3, 2}));
    EXPECT_TRUE(bond_dims_admissible(std::vector<std::size_t>{2, 1}));
    EXPECT_FALSE(bond_dims_admissible(std::vector<std::size_t>{2, 4, 1}));
    EXPECT_FALSE(bond_dims_admissible(std::vector<std::size_t>{1, 4, 2}));
    EXPECT_TRUE(bond_dims_admissible(std::vector<std::size_t>{}));
}

TEST(next_truncation, bell) {
    const auto step = next_truncation(decompose(t::bell()));
    ASSERT_TRUE(step.has_value());
    EXPECT_EQ(step->bond, 1u);
    EXPECT_EQ(step->old_rank, 2u);
    EXPECT_EQ(step->new_rank, 1u);
    EXPECT_NEAR(step->dropped_relative_sigma, 1.0, 1e-12);
    EXPECT_NEAR(step->local_frobenius_error, std::sqrt(0.5), 1e-12);
}

TEST(next_truncation, product_state_has_nothing_to_drop) {
    EXPECT_FALSE(next_truncation(decompose(t::random_product_state(5, 2))).has_value());
}

TEST(next_truncation, picks_smallest_ratio) {
    // Three-qubit state with bond 2 nearly separable: bond 2 is chosen.
    const auto a = t::random_complex(4, 7);
    const auto noise = t::random_complex(8, 8);
    std::vector<Complex> v(8);
    for (std::size_t i = 0; i < 4; ++i) {
        v[2 * i] = a[i];
    }
    for (std::size_t i = 0; i < 8; ++i) {
        v[i] += 1e-3 * noise[i];
    }
    const MpsState m = decompose(AmplitudeVector::normalized(v));
    ASSERT_EQ(m.bond_dims(), (std::vector<std::size_t>{2, 2}));
    const auto step = next_truncation(m);
    ASSERT_TRUE(step.has_value());
    EXPECT_EQ(step->bond, 2u);
    EXPECT_LT(step->dropped_relative_sigma, 1e-2);
}

TEST(next_truncation, skips_inadmissible_bond) {
    // Along greedy paths the globally smallest ratio sometimes sits on a bond
    // that cannot move, e.g. bond 1 of [2,3,2] (lowering it leaves 3 > 2*1).
    // The chosen step must then be the best admissible one.
    int skipped = 0;
    for (std::size_t q = 4; q <= 6; ++q) {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            std::vector<Complex> amps = t::random_complex(std::size_t{1} << q, 9000 + 100 * q + seed);
            for (std::size_t i = 0; i < amps.size(); ++i) {
                amps[i] *= std::exp(-3.0 * static_cast<double>(i) / static_cast<double>(amps.size()));
            }
            MpsState m = decompose(AmplitudeVector::normalized(std::move(amps)));
            while (true) {
                const auto step = next_truncation(m);
                if (!step) {
                    break;
                }
                const auto dims = m.bond_dims();
                const auto spectra = bond_spectra(m);
                double global = 2.0;
                double admissible = 2.0;
                for (std::size_t n = 0; n < dims.size(); ++n) {
                    if (dims[n] <= 1) {
                        continue;
                    }
                    const double ratio = spectra[n][spectra[n].size() - 1] / spectra[n][0];
                    global = std::min(global, ratio);
                    std::vector<std::size_t> trial = dims;
                    trial[n] -= 1;
                    if (bond_dims_admissible(trial)) {
                        admissible = std::min(admissible, ratio);
                    }
                }
                std::vector<std::size_t> chosen = dims;
                chosen[step->bond - 1] -= 1;
                EXPECT_TRUE(bond_dims_admissible(chosen));
                EXPECT_NEAR(step->dropped_relative_sigma, admissible, 1e-12);
                if (global < admissible) {
                    ++skipped;
                }
                m = apply_truncation(m, *step);
            }
        }
    }
    EXPECT_GT(skipped, 0);
}

TEST(apply_truncation, bell_to_product) {
    const MpsState m = decompose(t::bell());
    const MpsState tr = apply_truncation(m, *next_truncation(m));
    EXPECT_EQ(tr.bond_dims(), std::vector<std::size_t>{1});
    EXPECT_NEAR(fidelity(reconstruct(tr), t::bell()), 0.5, 1e-12);
    EXPECT_LT(verify_right_canonical(tr), 1e-10);
    ASSERT_EQ(tr.truncation_log().size(), 1u);
    EXPECT_EQ(tr.truncation_log()[0].bond, 1u);
}

TEST(apply_truncation, ghz4_middle_bond) {
    const MpsState m = decompose(t::ghz(4));
    ASSERT_EQ(m.bond_dims(), (std::vector<std::size_t>{2, 2, 2}));
    const MpsState tr = apply_truncation(m, TruncationStep{2, 2, 1, 1.0, std::sqrt(0.5)});
    EXPECT_NEAR(fidelity(reconstruct(tr), t::ghz(4)), 0.5, 1e-12);
    EXPECT_LT(verify_right_canonical(tr), 1e-10);
}

TEST(apply_truncation, stale_step) {
    const MpsState m = decompose(t::bell());
    const MpsState tr = apply_truncation(m, *next_truncation(m));
    EXPECT_EQ(code_of([&] { apply_truncation(tr, TruncationStep{1, 2, 1, 1.0, 0.5}); }), ErrorCode::StaleStep);
    EXPECT_EQ(code_of([&] { apply_truncation(m, TruncationStep{2, 2, 1, 1.0, 0.5}); }), ErrorCode::StaleStep);
}

TEST(apply_truncation, greedy_schedule_invariants) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const AmplitudeVector v = t::random_state(7, 500 + seed);
        MpsState m = decompose(v);
        double budget = 0.0;
        double previous = 1.0;
        while (auto step = next_truncation(m)) {
            budget += step->local_frobenius_error * step->local_frobenius_error;
            m = apply_truncation(m, *step);
            EXPECT_LT(verify_right_canonical(m), 1e-10);
            const auto dims = m.bond_dims();
            EXPECT_TRUE(bond_dims_admissible(dims));
            const double f = fidelity(reconstruct(m), v);
            // Distance from the target to the span of the approximation.
            EXPECT_LE(1.0 - f, budget + 1e-9);
            EXPECT_LE(f, 1.0 + 1e-12);
            previous = f;
        }
        EXPECT_EQ(m.bond_dims(), std::vector<std::size_t>(6, 1));
        EXPECT_GT(previous, 0.0);
    }
}

TEST(fidelity, examples) {
    EXPECT_NEAR(fidelity(t::bell(), t::basis_state(2, 0)), 0.5, 1e-15);
    const AmplitudeVector v = t::random_state(5, 1);
    std::vector<Complex> phased = v.amps();
    for (Complex &z : phased) {
        z *= std::polar(1.0, 0.7);
    }
    EXPECT_NEAR(fidelity(v, AmplitudeVector(phased)), 1.0, 1e-12);
    EXPECT_EQ(code_of([&] { fidelity(v, t::bell()); }), ErrorCode::DimensionMismatch);
}

TEST(entropy, closed_forms) {
    EXPECT_EQ(mean_normalized_bipartite_entropy(t::basis_state(5, 9)).mean, 0.0);
    EXPECT_NEAR(mean_normalized_bipartite_entropy(t::bell()).mean, 1.0, 1e-12);
    EXPECT_NEAR(mean_normalized_bipartite_entropy(t::ghz(4)).mean, 5.0 / 6.0, 1e-12);
    const auto report = mean_normalized_bipartite_entropy(t::ghz(4));
    ASSERT_EQ(report.per_cut.size(), 3u);
    EXPECT_NEAR(report.per_cut[1], 0.5, 1e-12);
}

TEST(entropy, product_states_are_zero) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        EXPECT_EQ(mean_normalized_bipartite_entropy(t::random_product_state(6, seed)).mean, 0.0);
    }
}

TEST(entropy, agrees_with_density_matrix_oracle) {
    for (std::size_t q : {3u, 5u, 8u}) {
        const AmplitudeVector v = t::random_state(q, 77 + q);
        const auto report = mean_normalized_bipartite_entropy(v);
        double mean = 0.0;
        for (std::size_t n = 1; n < q; ++n) {
            const double expected = t::reduced_density_entropy(v, n) / static_cast<double>(std::min(n, q - n));
            EXPECT_NEAR(report.per_cut[n - 1], expected, 1e-9);
            mean += expected;
        }
        EXPECT_NEAR(report.mean, mean / static_cast<double>(q - 1), 1e-9);
        EXPECT_GE(report.mean, 0.0);
        EXPECT_LE(report.mean, 1.0 + 1e-12);
    }
}

TEST(entropy, single_qubit_undefined) {
    EXPECT_EQ(code_of([] { mean_normalized_bipartite_entropy(AmplitudeVector({1.0, 0.0})); }),
              ErrorCode::Undefined);
}
