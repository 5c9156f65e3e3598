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


#include "cnotca/density.hpp"

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cstring>
#include <numbers>
#include <random>

using namespace cnotca;

namespace {

constexpr double kPi = std::numbers::pi;

PairDensity random_pair_density(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::Matrix4cd a;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            a(r, c) = complex_t(g(rng), g(rng));
        }
    }
    Eigen::Matrix4cd rho = a * a.adjoint();
    rho /= rho.trace();
    PairDensity out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            out(r, c) = rho(r, c);
        }
    }
    return out;
}

}  // namespace

TEST(Entropy, BinaryEntropyClosedForm) {
    SiteDensity rho;
    rho(0, 0) = 0.8;
    rho(1, 1) = 0.2;
    EXPECT_NEAR(von_neumann_entropy(rho), 0.7219280948873623, 1e-15);
    EXPECT_EQ(von_neumann_entropy(SiteDensity::maximally_mixed()), 1.0);
    EXPECT_EQ(von_neumann_entropy(PairDensity::maximally_mixed()), 2.0);
    SiteDensity pure;
    pure(0, 0) = 1;
    EXPECT_EQ(von_neumann_entropy(pure), 0.0);
}

TEST(Entropy, OffDiagonalSingleSite) {
    // |+><+| mixed with its complement, rotated: eigenvalues 0.9, 0.1.
    SiteDensity rho;
    rho(0, 0) = 0.5;
    rho(1, 1) = 0.5;
    rho(0, 1) = complex_t(0, 0.4);
    rho(1, 0) = complex_t(0, -0.4);
    auto ev = eigenvalues(rho);
    EXPECT_NEAR(ev[0], 0.1, 1e-15);
    EXPECT_NEAR(ev[1], 0.9, 1e-15);
}

TEST(Entropy, JacobiMatchesEigen) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        PairDensity rho = random_pair_density(rng);
        Eigen::Matrix4cd m;
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                m(r, c) = rho(r, c);
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(m);
        auto ev = eigenvalues(rho);
        for (int i = 0; i < 4; ++i) {
            ASSERT_NEAR(ev[i], solver.eigenvalues()(i), 1e-12);
        }
    }
}

TEST(Entropy, PairSpectrumOfKnownStates) {
    // diag(0.4, 0.3, 0.2, 0.1) scrambled by a Hadamard pair: same spectrum.
    PairDensity rho;
    const double d[4] = {0.4, 0.3, 0.2, 0.1};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            complex_t v = 0;
            for (int k = 0; k < 4; ++k) {
                double hr = (std::popcount(static_cast<unsigned>(r & k)) & 1) ? -0.5 : 0.5;
                double hc = (std::popcount(static_cast<unsigned>(c & k)) & 1) ? -0.5 : 0.5;
                v += hr * d[k] * hc;
            }
            rho(r, c) = v;
        }
    }
    auto ev = eigenvalues(rho);
    EXPECT_NEAR(ev[0], 0.1, 1e-14);
    EXPECT_NEAR(ev[1], 0.2, 1e-14);
    EXPECT_NEAR(ev[2], 0.3, 1e-14);
    EXPECT_NEAR(ev[3], 0.4, 1e-14);
}

TEST(MutualInformation, BellPairIsTwoBits) {
    PairDensity bell;
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    EXPECT_NEAR(von_neumann_entropy(bell), 0.0, 1e-12);
    EXPECT_NEAR(mutual_information(SiteDensity::maximally_mixed(), SiteDensity::maximally_mixed(), bell), 2.0,
                1e-12);
}

TEST(Validation, RejectsBrokenMatrices) {
    SiteDensity skew;
    skew(0, 0) = 1;
    skew(0, 1) = 0.2;
    EXPECT_THROW(von_neumann_entropy(skew), NumericContractError);
    SiteDensity heavy;
    heavy(0, 0) = 1.5;
    EXPECT_THROW(von_neumann_entropy(heavy), NumericContractError);
    SiteDensity negative;
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    EXPECT_THROW(von_neumann_entropy(negative), NumericContractError);
}

TEST(ReducedDensity, InitialProductState) {
    SingleQubitState q = SingleQubitState::from_angles(0.9, 0.5);
    CircuitSpec spec = build_step(6, BoundaryCondition::Open);
    SiteDensity one = single_qubit_rho(2, 0, spec, q);
    EXPECT_NEAR(std::abs(one(0, 0) - std::norm(q.a0())), 0, 1e-15);
    EXPECT_NEAR(std::abs(one(1, 0) - q.a1() * std::conj(q.a0())), 0, 1e-15);
    PairDensity two = two_qubit_rho(2, 0, spec, q);
    // Left site is the high bit: entry (1, 2) = <01|rho|10> = ρ01 ρ10.
    EXPECT_NEAR(std::abs(two(1, 2) - one(0, 1) * one(1, 0)), 0, 1e-15);
    EXPECT_NEAR(mutual_information(2, 0, spec, q), 0, 1e-12);
    EXPECT_THROW(single_qubit_rho(6, 0, spec, q), std::out_of_range);
    EXPECT_THROW(two_qubit_rho(5, 0, spec, q), std::out_of_range);
}

TEST(Grid, ShapesAndInitialRow) {
    CircuitSpec spec = build_step(10, BoundaryCondition::Open);
    SingleQubitState q = SingleQubitState::from_angles(0.2, 0);
    EntropyGrid s = entropy_map(spec, q, 5);
    EXPECT_EQ(s.sites, 10u);
    EXPECT_EQ(s.values.size(), 60u);
    EntropyGrid mi = mutual_information_map(spec, q, 0);
    EXPECT_EQ(mi.sites, 9u);
    for (std::size_t i = 0; i < 10; ++i) {
        EXPECT_EQ(s.at(0, i), 0.0);
    }
    for (std::size_t i = 0; i < 9; ++i) {
        EXPECT_NEAR(mi.at(0, i), 0.0, 1e-12);
    }
}

TEST(Grid, IdenticalAcrossWorkerCounts) {
    CircuitSpec spec = build_step(24, BoundaryCondition::Periodic);
    SingleQubitState q = SingleQubitState::from_angles(1.1, 0.3);
    for (auto quantity : {GridQuantity::SiteEntropy, GridQuantity::PairEntropy, GridQuantity::MutualInformation}) {
        EntropyGrid one = compute_grid(quantity, spec, q, 30, 1);
        for (std::size_t workers : {2u, 3u, 8u}) {
            EntropyGrid many = compute_grid(quantity, spec, q, 30, workers);
            ASSERT_EQ(one.values.size(), many.values.size());
            EXPECT_EQ(std::memcmp(one.values.data(), many.values.data(), one.values.size() * sizeof(double)), 0);
        }
    }
}

TEST(Grid, YEigenstateSaturatesImmediately) {
    CircuitSpec spec = build_step(20, BoundaryCondition::Open);
    SingleQubitState y = SingleQubitState::from_angles(kPi / 2, kPi / 2);
    EntropyGrid s = entropy_map(spec, y, 3);
    for (std::size_t t = 1; t <= 3; ++t) {
        for (std::size_t i = 0; i < 20; ++i) {
            EXPECT_NEAR(s.at(t, i), 1.0, 1e-12) << "t=" << t << " site " << i;
        }
    }
}
