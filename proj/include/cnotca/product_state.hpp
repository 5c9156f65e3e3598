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

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "cnotca/errors.hpp"
#include "cnotca/pauli.hpp"

namespace cnotca {

using complex_t = std::complex<double>;

struct BlochVector {
    double x = 0;
    double y = 0;
    double z = 0;

    double radius() const { return std::sqrt(x * x + y * y + z * z); }
};

/// a0|0> + a1|1>, replicated on every site of the lattice.
class SingleQubitState {
   public:
    static constexpr double kNormTolerance = 1e-9;

    SingleQubitState(complex_t a0, complex_t a1) : a0_(a0), a1_(a1) {
        double norm = std::norm(a0) + std::norm(a1);
        if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance) {
            throw std::invalid_argument("SingleQubitState: amplitudes are not normalized (|a|^2 = " +
                                        std::to_string(norm) + ")");
        }
    }

    /// (cos(θ/2), e^{iφ} sin(θ/2)).
    static SingleQubitState from_angles(double theta, double phi) {
        if (!std::isfinite(theta) || !std::isfinite(phi)) {
            throw std::invalid_argument("SingleQubitState: angles must be finite");
        }
        return SingleQubitState(complex_t(std::cos(theta / 2), 0.0), std::polar(std::sin(theta / 2), phi));
    }

    /// Rescales arbitrary nonzero amplitudes, e.g. 0.99|0> + 0.1|1>.
    static SingleQubitState normalized(complex_t a0, complex_t a1) {
        double r = std::sqrt(std::norm(a0) + std::norm(a1));
        if (!(r > 0)) {
            throw std::invalid_argument("SingleQubitState: zero amplitudes");
        }
        return SingleQubitState(a0 / r, a1 / r);
    }

    complex_t a0() const { return a0_; }
    complex_t a1() const { return a1_; }

   private:
    complex_t a0_;
    complex_t a1_;
};

/// Uniform on the Bloch sphere. Uses only the raw engine output, so the
/// sequence for a given seed is the same on every platform.
inline SingleQubitState sample_state(std::mt19937_64& rng) {
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    double theta = std::acos(1 - 2 * unit());
    double phi = 2 * std::numbers::pi * unit();
    return SingleQubitState::from_angles(theta, phi);
}

inline constexpr double kBlochSnap = 1e-14;

/// Signed (⟨X⟩, ⟨Y⟩, ⟨Z⟩) of the single-site state. Components below 1e-14
/// are rounding residue of the angle parametrisation (cos(π/2) and the like)
/// and are set to exactly zero, so axis eigenstates behave exactly.
inline BlochVector bloch(const SingleQubitState& s) {
    complex_t cross = std::conj(s.a0()) * s.a1();
    auto snap = [](double v) { return std::abs(v) < kBlochSnap ? 0.0 : v; };
    return {snap(2 * cross.real()), snap(2 * cross.imag()), snap(std::norm(s.a0()) - std::norm(s.a1()))};
}

/// Per-site expectation of X^b Z^c: f(0,0)=1, f(1,0)=x, f(0,1)=z, f(1,1)=⟨XZ⟩=-i·y.
struct SiteFactorTable {
    std::array<complex_t, 4> f;  // index 2*b + c

    explicit SiteFactorTable(const BlochVector& v)
        : f{complex_t(1, 0), complex_t(v.z, 0), complex_t(v.x, 0), complex_t(0, -v.y)} {}

    complex_t operator()(bool b, bool c) const { return f[2 * static_cast<int>(b) + static_cast<int>(c)]; }
};

namespace detail {
inline constexpr std::array<complex_t, 4> kPhasePowers = {complex_t(1, 0), complex_t(0, 1), complex_t(-1, 0),
                                                          complex_t(0, -1)};
}

/// ⟨ψ0^{⊗n}| P |ψ0^{⊗n}⟩ = i^k Π_j f(b_j, c_j).
inline complex_t string_expectation(const PauliString& p, const SingleQubitState& state) {
    SiteFactorTable table(bloch(state));
    const std::size_t both = (p.x & p.z).popcount();
    const std::size_t x_only = p.x.popcount() - both;
    const std::size_t z_only = p.z.popcount() - both;
    complex_t value = detail::kPhasePowers[p.phase];
    auto power = [](complex_t base, std::size_t e) {
        complex_t result(1, 0);
        while (e != 0) {
            if (e & 1u) {
                result *= base;
            }
            e >>= 1;
            if (e != 0) {
                base *= base;
            }
        }
        return result;
    };
    value *= power(table(true, false), x_only);
    value *= power(table(false, true), z_only);
    value *= power(table(true, true), both);
    return value;
}

inline constexpr double kImaginaryTolerance = 1e-9;

/// Expectation of a Hermitian string; a non-negligible imaginary part means
/// the phase bookkeeping is broken.
inline double real_expectation(const PauliString& p, const SingleQubitState& state) {
    complex_t v = string_expectation(p, state);
    if (std::abs(v.imag()) >= kImaginaryTolerance) {
        throw NumericContractError("expectation of " + p.str() + " has imaginary part " + std::to_string(v.imag()));
    }
    return v.real();
}

/// ln|⟨P⟩|, or -inf when the expectation vanishes. Stays finite where the
/// expectation itself underflows (supports of thousands of sites).
inline double log_abs_expectation(const PauliString& p, const SingleQubitState& state) {
    BlochVector v = bloch(state);
    const std::size_t both = (p.x & p.z).popcount();
    const std::size_t x_only = p.x.popcount() - both;
    const std::size_t z_only = p.z.popcount() - both;
    double total = 0;
    auto add = [&](double magnitude, std::size_t e) {
        if (e == 0) {
            return;
        }
        if (magnitude == 0) {
            total = -std::numeric_limits<double>::infinity();
            return;
        }
        total += static_cast<double>(e) * std::log(magnitude);
    };
    add(std::abs(v.x), x_only);
    add(std::abs(v.z), z_only);
    add(std::abs(v.y), both);
    return total;
}

}  // namespace cnotca
