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


#include "cnotca/pauli.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cnotca/oracle.hpp"

using namespace cnotca;

namespace {

PauliString random_string(std::size_t n, std::mt19937_64& rng) {
    PauliString p(n);
    for (std::size_t j = 0; j < n; ++j) {
        p.x.set(j, rng() & 1u);
        p.z.set(j, rng() & 1u);
    }
    p.phase = static_cast<std::uint8_t>(rng() & 3u);
    return p;
}

// Dense CNOT on `n` sites as a permutation matrix.
oracle::DenseMatrix dense_cnot(std::size_t n, std::size_t control, std::size_t target) {
    const std::size_t d = std::size_t{1} << n;
    oracle::DenseMatrix g(d);
    for (std::size_t s = 0; s < d; ++s) {
        std::size_t image = ((s >> control) & 1u) ? s ^ (std::size_t{1} << target) : s;
        g(image, s) = 1;
    }
    return g;
}

constexpr double kExact = 1e-12;

}  // namespace

TEST(PauliString, LettersAndPhases) {
    PauliString y = PauliString::single(1, 0, Pauli::Y);
    EXPECT_EQ(y.phase, 1);
    EXPECT_TRUE(y.is_hermitian());
    EXPECT_EQ(y.str(), "+Y");
    PauliString xz(BitVec::from_bits({1}), BitVec::from_bits({1}), 0);
    EXPECT_FALSE(xz.is_hermitian());
    EXPECT_EQ(xz.str(), "-iY");
    PauliString s = PauliString::pair(3, 1, Pauli::X, Pauli::Z);
    EXPECT_EQ(s.str(), "+IXZ");
    s.set_letter(1, Pauli::Y);
    s.set_letter(1, Pauli::I);
    EXPECT_EQ(s.phase, 0);
    EXPECT_THROW(s.set_letter(3, Pauli::X), std::out_of_range);
}

TEST(PauliString, ProductMatchesDense) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        PauliString a = random_string(4, rng);
        PauliString b = random_string(4, rng);
        auto want = oracle::multiply(oracle::to_dense(a), oracle::to_dense(b));
        EXPECT_LT(oracle::to_dense(a * b).max_abs_diff(want), kExact);
    }
}

TEST(PauliString, EverySingleGateConjugationMatchesDense) {
    // All 16 letter pairs, all four phases, both gate orientations.
    for (auto [c, t] : {std::pair<std::size_t, std::size_t>{0, 1}, {1, 0}}) {
        auto g = dense_cnot(2, c, t);
        for (int bits = 0; bits < 16; ++bits) {
            for (std::uint8_t k = 0; k < 4; ++k) {
                PauliString p(BitVec::from_bits({bits & 1, (bits >> 1) & 1}),
                              BitVec::from_bits({(bits >> 2) & 1, (bits >> 3) & 1}), k);
                auto want = oracle::multiply(g, oracle::multiply(oracle::to_dense(p), g));
                EXPECT_LT(oracle::to_dense(conjugate_by_gate(p, c, t)).max_abs_diff(want), kExact)
                    << p.str() << " gate " << c << "->" << t;
            }
        }
    }
}

TEST(PauliString, ConjugationExamples) {
    auto yy = conjugate_by_gate(PauliString::pair(2, 0, Pauli::Y, Pauli::Y), 0, 1);
    EXPECT_EQ(yy.str(), "-XZ");
    EXPECT_EQ(conjugate_by_gate(PauliString::pair(2, 0, Pauli::X, Pauli::I), 0, 1).str(), "+XX");
    EXPECT_EQ(conjugate_by_gate(PauliString::pair(2, 0, Pauli::I, Pauli::Z), 0, 1).str(), "+ZZ");
    EXPECT_EQ(conjugate_by_gate(PauliString::pair(2, 0, Pauli::Z, Pauli::X), 0, 1).str(), "+ZX");
    EXPECT_THROW(conjugate_by_gate(PauliString(2), 0, 2), std::out_of_range);
    EXPECT_THROW(conjugate_by_gate(PauliString(2), 1, 1), std::out_of_range);
}

TEST(Heisenberg, PhaseExactAgainstDenseEvolution) {
    std::mt19937_64 rng(99);
    for (auto bc : {BoundaryCondition::Open, BoundaryCondition::Periodic}) {
        for (std::size_t n : {2u, 4u, 6u, 8u}) {
            if (bc == BoundaryCondition::Periodic && n < 4) {
                continue;
            }
            CircuitSpec spec = build_step(n, bc);
            auto u = oracle::step_unitary(spec);
            auto u_dag = oracle::adjoint(u);
            for (int trial = 0; trial < 4; ++trial) {
                PauliString p = random_string(n, rng);
                auto ref = oracle::to_dense(p);
                PauliString fast = p;
                for (std::size_t t = 1; t <= 16; ++t) {
                    ref = oracle::multiply(u_dag, oracle::multiply(ref, u));
                    fast = heisenberg_step(fast, spec);
                    ASSERT_LT(oracle::to_dense(fast).max_abs_diff(ref), kExact)
                        << "n=" << n << " bc=" << to_string(bc) << " t=" << t << " p=" << p.str();
                }
                EXPECT_LT(oracle::heisenberg_reference(p, spec, 16).max_abs_diff(ref), kExact);
            }
        }
    }
}

TEST(Heisenberg, LabelMapsAgreeWithGateConjugation) {
    std::mt19937_64 rng(7);
    for (auto bc : {BoundaryCondition::Open, BoundaryCondition::Periodic}) {
        CircuitSpec spec = build_step(70, bc);
        LabelMaps maps(spec);
        EXPECT_EQ(maps.x_step, inverse(spec.u));
        for (int trial = 0; trial < 5; ++trial) {
            PauliString p = random_string(70, rng);
            for (std::size_t t : {0u, 1u, 3u, 17u}) {
                PauliString slow = heisenberg_evolve(p, spec, t);
                HeisenbergFrame frame(maps, t);
                EXPECT_EQ(frame.evolve(p), slow);
                EXPECT_EQ(frame.time(), t);
            }
            EXPECT_EQ(z_label_step(p.z, spec), mat_vec_mul(maps.z_step, p.z));
            EXPECT_EQ(x_label_step(p.x, spec), mat_vec_mul(maps.x_step, p.x));
        }
        HeisenbergFrame stepped(spec.n);
        for (int t = 0; t < 9; ++t) {
            stepped.advance(maps);
        }
        HeisenbergFrame direct(maps, 9);
        EXPECT_EQ(stepped.z_map(), direct.z_map());
        EXPECT_EQ(stepped.x_map(), direct.x_map());
    }
}

TEST(Heisenberg, EvolutionPreservesHermiticity) {
    std::mt19937_64 rng(31);
    CircuitSpec spec = build_step(40, BoundaryCondition::Periodic);
    for (int trial = 0; trial < 20; ++trial) {
        PauliString p = random_string(40, rng);
        EXPECT_EQ(heisenberg_evolve(p, spec, 13).is_hermitian(), p.is_hermitian());
    }
}

TEST(Heisenberg, LightCones) {
    // Z labels spread toward lower sites, X labels toward higher ones, at most
    // two sites per step and one site the other way.
    const std::size_t n = 200;
    CircuitSpec spec = build_step(n, BoundaryCondition::Open);
    for (std::size_t j : {100u, 101u}) {
        BitVec z = BitVec::unit(n, j);
        BitVec x = z;
        for (std::size_t t = 1; t <= 40; ++t) {
            z = z_label_step(std::move(z), spec);
            x = x_label_step(std::move(x), spec);
            auto ze = z.extent().value();
            auto xe = x.extent().value();
            EXPECT_GE(ze.first + 2 * t + 1, j);
            EXPECT_LE(ze.second, j + 1);
            EXPECT_GE(xe.first + 1, j);
            EXPECT_LE(xe.second, j + 2 * t + 1);
        }
    }
}

TEST(MuOrbit, LeftBoundaryPeriods) {
    CircuitSpec spec = build_step(50, BoundaryCondition::Open);
    EXPECT_EQ(mu_orbit(0, spec).period, 1u);
    EXPECT_EQ(mu_orbit(1, spec).period, 2u);
    MuOrbit third = mu_orbit(2, spec);
    ASSERT_EQ(third.period, 4u);
    EXPECT_EQ(third.strings[2].z, BitVec::unit(50, 0) ^ BitVec::unit(50, 2));
    EXPECT_EQ(third.strings[1].z.support(), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_THROW(mu_orbit(0, build_step(50, BoundaryCondition::Periodic)), std::invalid_argument);
    EXPECT_THROW(mu_orbit(50, spec), std::out_of_range);
    EXPECT_THROW(mu_orbit(2, spec, 3), std::runtime_error);
}
