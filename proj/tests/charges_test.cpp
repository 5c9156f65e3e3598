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


#include "cnotca/charges.hpp"

#include <gtest/gtest.h>

using namespace cnotca;

namespace {
const CircuitSpec& open50() {
    static const CircuitSpec spec = build_step(50, BoundaryCondition::Open);
    return spec;
}
}  // namespace

TEST(Cyclotomic, ArithmeticIsExact) {
    auto w = CyclotomicCoefficient::monomial(4, 1);
    EXPECT_EQ(w.rotated(3), CyclotomicCoefficient::monomial(4, 0));
    EXPECT_EQ(CyclotomicCoefficient::monomial(4, -1), CyclotomicCoefficient::monomial(4, 3));
    EXPECT_EQ(w.value(), complex_t(0, 1));
    EXPECT_EQ(CyclotomicCoefficient::monomial(4, 2).value(), complex_t(-1, 0));
    auto sum = w;
    sum += CyclotomicCoefficient::monomial(4, 1);
    EXPECT_EQ(sum.counts[1], 2);
    EXPECT_NEAR(std::abs(CyclotomicCoefficient::monomial(3, 1).value() - std::polar(1.0, 2 * std::numbers::pi / 3)),
                0, 1e-15);
}

TEST(FormalPauliSum, CancellingTermsAreDropped) {
    FormalPauliSum s;
    s.order = 2;
    BitVec a = BitVec::unit(4, 1);
    s.add(a, CyclotomicCoefficient::monomial(2, 0));
    EXPECT_EQ(s.terms.size(), 1u);
    auto minus = CyclotomicCoefficient(2);
    minus.counts[0] = -1;
    s.add(a, minus);
    EXPECT_TRUE(s.terms.empty());
}

TEST(Charges, FirstSiteIsConserved) {
    SingleQubitState q = SingleQubitState::from_angles(0.8, 0.2);
    OscillationReport r = verify_oscillation(0, q, open50(), 30);
    EXPECT_EQ(r.period, 1u);
    EXPECT_TRUE(r.ok);
    for (double z : r.z_series) {
        EXPECT_EQ(z, r.z_series[0]);
    }
}

TEST(Charges, SecondSiteAlternates) {
    SingleQubitState q = SingleQubitState::from_angles(0.8, 0.2);
    const double z = bloch(q).z;
    OscillationReport r = verify_oscillation(1, q, open50(), 30);
    EXPECT_EQ(r.period, 2u);
    EXPECT_TRUE(r.ok);
    for (std::size_t t = 0; t < r.z_series.size(); ++t) {
        EXPECT_EQ(r.z_series[t], t % 2 == 0 ? z : z * z) << t;
    }
}

TEST(Charges, ThirdSiteOrbitAndModes) {
    const auto& spec = open50();
    MuOrbit orbit = mu_orbit(2, spec);
    ASSERT_EQ(orbit.period, 4u);
    EXPECT_EQ(orbit.strings[2].z.support(), (std::vector<std::size_t>{0, 2}));
    auto modes = fourier_invariants(2, spec);
    ASSERT_EQ(modes.size(), 4u);
    for (std::size_t j = 0; j < 4; ++j) {
        EXPECT_EQ(apply_mu(modes[j], spec), modes[j].rotated(static_cast<std::int64_t>(j))) << "mode " << j;
    }
    // I(0) is the plain orbit sum, with every coefficient equal to one.
    for (const auto& [label, c] : modes[0].terms) {
        EXPECT_EQ(c, CyclotomicCoefficient::monomial(4, 0));
    }
    SingleQubitState q = SingleQubitState::from_angles(1.2, 0.7);
    OscillationReport r = verify_oscillation(2, q, spec, 24);
    EXPECT_TRUE(r.periodic);
    EXPECT_LT(r.max_mode_drift, kModeDriftTolerance);
}

TEST(Charges, ModesAreEigenvectorsForDeeperSites) {
    const auto& spec = open50();
    for (std::size_t k = 3; k < 8; ++k) {
        auto modes = fourier_invariants(k, spec);
        for (std::size_t j = 0; j < modes.size(); ++j) {
            EXPECT_EQ(apply_mu(modes[j], spec), modes[j].rotated(static_cast<std::int64_t>(j)))
                << "k=" << k << " j=" << j;
        }
    }
}

TEST(Charges, PeriodicBoundaryIsRejected) {
    CircuitSpec periodic = build_step(10, BoundaryCondition::Periodic);
    SingleQubitState q = SingleQubitState::from_angles(1, 0);
    EXPECT_THROW(fourier_invariants(0, periodic), std::invalid_argument);
    EXPECT_THROW(verify_oscillation(0, q, periodic, 4), std::invalid_argument);
    EXPECT_THROW(subalgebra_closure(2, periodic, 4), std::invalid_argument);
}

TEST(Subalgebra, NestedLeftAndRightClosure) {
    const auto& spec = open50();
    for (std::size_t k = 1; k <= 10; ++k) {
        EXPECT_TRUE(subalgebra_closure(k, spec, 64)) << k;
        EXPECT_TRUE(right_subalgebra_closure(k, spec, 64)) << k;
    }
    EXPECT_THROW(subalgebra_closure(0, spec, 4), std::out_of_range);
    EXPECT_THROW(right_subalgebra_closure(51, spec, 4), std::out_of_range);
    // The last X label never moves.
    BitVec x = BitVec::unit(50, 49);
    EXPECT_EQ(x_label_step(x, spec), x);
}
