// Copyright 2026 The cnotca Authors
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


#include "cnotca/oracle.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

using namespace cnotca;

TEST(DenseState, RejectsOversizedLattices) {
    EXPECT_THROW(oracle::DenseState(13), std::invalid_argument);
    EXPECT_THROW(oracle::DenseState(0), std::invalid_argument);
    EXPECT_NO_THROW(oracle::DenseState(12));
    EXPECT_THROW(oracle::to_dense(PauliString(9)), std::invalid_argument);
}

TEST(DenseState, BasisDynamicsMatchesBitLabels) {
    for (auto bc : {BoundaryCondition::Open, BoundaryCondition::Periodic}) {
        CircuitSpec spec = build_step(10, bc);
        for (std::size_t j = 0; j < 10; ++j) {
            BitVec label = BitVec::unit(10, j);
            oracle::DenseState dense = oracle::DenseState::basis(label);
            for (int t = 0; t < 20; ++t) {
                label = state_step(std::move(label), spec);
                oracle::step(dense, spec);
                std::size_t expected = 0;
                for (std::size_t s : label.support()) {
                    expected |= std::size_t{1} << s;
                }
                ASSERT_EQ(oracle::basis_index(dense), expected);
            }
        }
    }
}

TEST(DenseState, EvolutionIsNormPreserving) {
    std::mt19937_64 rng(1);
    CircuitSpec spec = build_step(8, BoundaryCondition::Periodic);
    auto st = oracle::evolve(oracle::DenseState::product(8, sample_state(rng)), spec, 11);
    EXPECT_NEAR(st.norm(), 1.0, 1e-13);
    EXPECT_EQ(oracle::basis_index(st), static_cast<std::size_t>(-1));
}

TEST(DenseState, CnotMakesBellPair) {
    // |+>|0> on sites (0, 1), then CNOT 0 -> 1.
    oracle::DenseState st(2);
    st.amplitudes()[0] = std::numbers::sqrt2 / 2;
    st.amplitudes()[1] = std::numbers::sqrt2 / 2;
    oracle::apply_cnot(st, 0, 1);
    PairDensity pair = oracle::reduced_density_pair(st, 0);
    EXPECT_NEAR(pair(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(pair(3, 3).real(), 0.5, 1e-15);
    EXPECT_NEAR(pair(0, 3).real(), 0.5, 1e-15);
    SiteDensity left = oracle::reduced_density(st, 0);
    SiteDensity right = oracle::reduced_density(st, 1);
    EXPECT_NEAR(mutual_information(left, right, pair), 2.0, 1e-12);
    EXPECT_THROW(oracle::apply_cnot(st, 0, 0), std::out_of_range);
}

TEST(DenseState, ExpectationAgreesWithOperatorSandwich) {
    std::mt19937_64 rng(4);
    const std::size_t n = 5;
    auto st = oracle::DenseState::product(n, sample_state(rng));
    PauliString p = PauliString::pair(n, 1, Pauli::Y, Pauli::Z);
    p.set_letter(4, Pauli::X);
    auto op = oracle::to_dense(p);
    complex_t sandwich = 0;
    const auto& a = st.amplitudes();
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a.size(); ++c) {
            sandwich += std::conj(a[r]) * op(r, c) * a[c];
        }
    }
    EXPECT_LT(std::abs(sandwich - oracle::expectation(st, p)), 1e-14);
}

TEST(CompareWithDense, FastPathAgreesOnSmallLattices) {
    std::mt19937_64 rng(123);
    for (auto bc : {BoundaryCondition::Open, BoundaryCondition::Periodic}) {
        for (std::size_t n : {4u, 6u, 8u, 10u}) {
            CircuitSpec spec = build_step(n, bc);
            oracle::Deviation dev = oracle::compare_with_dense(spec, sample_state(rng), 12);
            EXPECT_LT(dev.density, 1e-10) << n << to_string(bc);
            EXPECT_LT(dev.entropy, 1e-8) << n << to_string(bc);
        }
    }
}

TEST(CompareWithDense, TwoSiteLatticeIsExact) {
    std::mt19937_64 rng(9);
    CircuitSpec spec = build_step(2, BoundaryCondition::Open);
    EXPECT_LT(oracle::compare_with_dense(spec, sample_state(rng), 4).max(), 1e-12);
}

TEST(CompareWithDense, MutualInformationSpotValues) {
    // Nearest-neighbour MI from the fast path against a direct dense
    // computation at a few (t, pair) cells of an n = 8 lattice.
    CircuitSpec spec = build_step(8, BoundaryCondition::Open);
    SingleQubitState q = SingleQubitState::from_angles(1.0, 0.0);
    EntropyGrid grid = mutual_information_map(spec, q, 10);
    for (std::size_t t : {1u, 2u, 5u, 10u}) {
        auto st = oracle::evolve(oracle::DenseState::product(8, q), spec, t);
        for (std::size_t i : {0u, 3u, 6u}) {
            double mi = mutual_information(oracle::reduced_density(st, i), oracle::reduced_density(st, i + 1),
                                           oracle::reduced_density_pair(st, i));
            EXPECT_NEAR(grid.at(t, i), mi, 1e-10) << "t=" << t << " i=" << i;
        }
    }
}
