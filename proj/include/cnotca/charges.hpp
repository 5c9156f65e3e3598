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

// Boundary conservation laws under open boundaries.
//
// Z labels near the left edge only ever mix with sites to their left, so the
// one-step map μ on pure-Z labels has finite orbits there. Every orbit of
// period p yields p Fourier modes I(j) = Σ_i ω^{-ij} μ^i(Z_k), ω = e^{2πi/p},
// with μ(I(j)) = ω^j I(j).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnotca/gf2.hpp"
#include "cnotca/lattice.hpp"
#include "cnotca/pauli.hpp"
#include "cnotca/product_state.hpp"

namespace cnotca {

/// Σ_m count[m] ω^m with ω the principal root of unity of the given order.
/// Kept as integer counts so sums can be compared exactly.
struct CyclotomicCoefficient {
    std::vector<std::int64_t> counts;

    CyclotomicCoefficient() = default;
    explicit CyclotomicCoefficient(std::size_t order) : counts(order, 0) {}

    static CyclotomicCoefficient monomial(std::size_t order, std::int64_t exponent) {
        CyclotomicCoefficient c(order);
        c.counts[wrap(exponent, order)] = 1;
        return c;
    }

    std::size_t order() const { return counts.size(); }

    bool is_zero() const {
        return std::all_of(counts.begin(), counts.end(), [](std::int64_t v) { return v == 0; });
    }

    /// Multiplication by ω^shift.
    CyclotomicCoefficient rotated(std::int64_t shift) const {
        CyclotomicCoefficient out(order());
        for (std::size_t m = 0; m < order(); ++m) {
            out.counts[wrap(static_cast<std::int64_t>(m) + shift, order())] = counts[m];
        }
        return out;
    }

    CyclotomicCoefficient& operator+=(const CyclotomicCoefficient& other) {
        for (std::size_t m = 0; m < order(); ++m) {
            counts[m] += other.counts[m];
        }
        return *this;
    }

    complex_t value() const {
        complex_t total(0, 0);
        for (std::size_t m = 0; m < order(); ++m) {
            if (counts[m] != 0) {
                total += static_cast<double>(counts[m]) * root_power(m, order());
            }
        }
        return total;
    }

    bool operator==(const CyclotomicCoefficient&) const = default;

    static std::size_t wrap(std::int64_t e, std::size_t order) {
        const auto p = static_cast<std::int64_t>(order);
        return static_cast<std::size_t>(((e % p) + p) % p);
    }

    /// ω^m, exact for the quarter turns.
    static complex_t root_power(std::size_t m, std::size_t order) {
        m %= order;
        if ((4 * m) % order == 0) {
            static const complex_t kQuarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            return kQuarter[(4 * m) / order];
        }
        return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(order));
    }
};

/// Finite linear combination of pure-Z strings, keyed by Z label.
struct FormalPauliSum {
    std::size_t order = 1;
    std::map<BitVec, CyclotomicCoefficient> terms;

    void add(const BitVec& label, const CyclotomicCoefficient& c) {
        auto [it, inserted] = terms.try_emplace(label, CyclotomicCoefficient(order));
        it->second += c;
        if (it->second.is_zero()) {
            terms.erase(it);
        }
    }

    FormalPauliSum rotated(std::int64_t shift) const {
        FormalPauliSum out;
        out.order = order;
        for (const auto& [label, c] : terms) {
            out.terms.emplace(label, c.rotated(shift));
        }
        return out;
    }

    bool operator==(const FormalPauliSum&) const = default;
};

/// μ applied term by term.
inline FormalPauliSum apply_mu(const FormalPauliSum& sum, const CircuitSpec& spec) {
    FormalPauliSum out;
    out.order = sum.order;
    for (const auto& [label, c] : sum.terms) {
        out.add(z_label_step(label, spec), c);
    }
    return out;
}

namespace detail {
inline void require_open(const CircuitSpec& spec, const char* what) {
    if (spec.bc != BoundaryCondition::Open) {
        throw std::invalid_argument(std::string(what) + ": boundary charges exist for open boundaries only");
    }
}
}  // namespace detail

/// I_k(j) for j = 0..p-1 where p is the μ-period of Z_k.
inline std::vector<FormalPauliSum> fourier_invariants(std::size_t site, const CircuitSpec& spec,
                                                      std::size_t cap = kDefaultOrbitCap) {
    detail::require_open(spec, "fourier_invariants");
    const MuOrbit orbit = mu_orbit(site, spec, cap);
    const std::size_t p = orbit.period;
    std::vector<FormalPauliSum> modes(p);
    for (std::size_t j = 0; j < p; ++j) {
        modes[j].order = p;
        for (std::size_t i = 0; i < p; ++i) {
            const auto exponent = -static_cast<std::int64_t>(i * j);
            modes[j].add(orbit.strings[i].z, CyclotomicCoefficient::monomial(p, exponent));
        }
    }
    return modes;
}

/// ⟨sum⟩ after t steps on the product state.
inline complex_t sum_expectation(const FormalPauliSum& sum, const CircuitSpec& spec, const SingleQubitState& state,
                                 std::size_t t) {
    complex_t total(0, 0);
    for (const auto& [label, c] : sum.terms) {
        BitVec evolved = label;
        for (std::size_t s = 0; s < t; ++s) {
            evolved = z_label_step(std::move(evolved), spec);
        }
        total += c.value() * string_expectation(PauliString::z_label(evolved), state);
    }
    return total;
}

struct OscillationReport {
    std::size_t site = 0;
    std::size_t period = 0;
    std::vector<double> z_series;  // ⟨Z_site⟩(t), t = 0..steps
    bool periodic = false;          // z_series[t + period] == z_series[t] exactly
    double max_mode_drift = 0;      // max_{j,t} |⟨I(j)⟩_t ω^{-jt} - ⟨I(j)⟩_0|
    bool ok = false;
};

inline constexpr double kModeDriftTolerance = 1e-12;

inline OscillationReport verify_oscillation(std::size_t site, const SingleQubitState& state, const CircuitSpec& spec,
                                            std::size_t steps) {
    detail::require_open(spec, "verify_oscillation");
    OscillationReport report;
    report.site = site;
    const auto modes = fourier_invariants(site, spec);
    report.period = modes.size();

    BitVec label = BitVec::unit(spec.n, site);
    for (std::size_t t = 0; t <= steps; ++t) {
        report.z_series.push_back(real_expectation(PauliString::z_label(label), state));
        label = z_label_step(std::move(label), spec);
    }
    report.periodic = true;
    for (std::size_t t = 0; t + report.period <= steps; ++t) {
        if (report.z_series[t + report.period] != report.z_series[t]) {
            report.periodic = false;
        }
    }

    for (std::size_t j = 0; j < modes.size(); ++j) {
        const complex_t initial = sum_expectation(modes[j], spec, state, 0);
        for (std::size_t t = 1; t <= steps; ++t) {
            const complex_t undo =
                CyclotomicCoefficient::root_power((modes.size() - (j * t) % modes.size()) % modes.size(), modes.size());
            const complex_t now = sum_expectation(modes[j], spec, state, t) * undo;
            report.max_mode_drift = std::max(report.max_mode_drift, std::abs(now - initial));
        }
    }
    report.ok = report.periodic && report.max_mode_drift < kModeDriftTolerance;
    return report;
}

/// True when every evolved Z_j, j < k, stays inside sites [0, k) for t <= steps.
inline bool subalgebra_closure(std::size_t k, const CircuitSpec& spec, std::size_t steps) {
    detail::require_open(spec, "subalgebra_closure");
    if (k == 0 || k > spec.n) {
        throw std::out_of_range("subalgebra_closure: k must be in [1, n]");
    }
    for (std::size_t j = 0; j < k; ++j) {
        BitVec label = BitVec::unit(spec.n, j);
        for (std::size_t t = 1; t <= steps; ++t) {
            label = z_label_step(std::move(label), spec);
            if (label.extent()->second >= k) {
                return false;
            }
        }
    }
    return true;
}

/// Mirror image for X labels at the right edge: every evolved X_j with
/// j >= n-k stays inside [n-k, n).
inline bool right_subalgebra_closure(std::size_t k, const CircuitSpec& spec, std::size_t steps) {
    detail::require_open(spec, "right_subalgebra_closure");
    if (k == 0 || k > spec.n) {
        throw std::out_of_range("right_subalgebra_closure: k must be in [1, n]");
    }
    const std::size_t first = spec.n - k;
    for (std::size_t j = first; j < spec.n; ++j) {
        BitVec label = BitVec::unit(spec.n, j);
        for (std::size_t t = 1; t <= steps; ++t) {
            label = x_label_step(std::move(label), spec);
            if (label.extent()->first < first) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace cnotca
