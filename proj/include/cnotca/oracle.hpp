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

// Brute-force state-vector reference for small lattices. Shares no code
// path with the GF(2) machinery beyond the gate lists of CircuitSpec.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cnotca/density.hpp"
#include "cnotca/lattice.hpp"
#include "cnotca/pauli.hpp"
#include "cnotca/product_state.hpp"

namespace cnotca::oracle {

inline constexpr std::size_t kMaxSites = 12;
inline constexpr std::size_t kMaxMatrixSites = 8;

/// Amplitudes over 2^n basis states; site j is bit j of the basis index.
class DenseState {
   public:
    explicit DenseState(std::size_t n) : n_(n) {
        if (n == 0 || n > kMaxSites) {
            throw std::invalid_argument("DenseState: n must be in [1, " + std::to_string(kMaxSites) + "], got " +
                                        std::to_string(n));
        }
        amps_.assign(std::size_t{1} << n, complex_t(0, 0));
        amps_[0] = 1;
    }

    static DenseState basis(const BitVec& label) {
        DenseState s(label.size());
        s.amps_[0] = 0;
        std::size_t index = 0;
        for (std::size_t j : label.support()) {
            index |= std::size_t{1} << j;
        }
        s.amps_[index] = 1;
        return s;
    }

    static DenseState product(std::size_t n, const SingleQubitState& q) {
        DenseState s(n);
        for (std::size_t idx = 0; idx < s.amps_.size(); ++idx) {
            complex_t a(1, 0);
            for (std::size_t j = 0; j < n; ++j) {
                a *= ((idx >> j) & 1u) ? q.a1() : q.a0();
            }
            s.amps_[idx] = a;
        }
        return s;
    }

    std::size_t size() const { return n_; }
    std::vector<complex_t>& amplitudes() { return amps_; }
    const std::vector<complex_t>& amplitudes() const { return amps_; }

    double norm() const {
        double total = 0;
        for (const auto& a : amps_) {
            total += std::norm(a);
        }
        return std::sqrt(total);
    }

   private:
    std::size_t n_;
    std::vector<complex_t> amps_;
};

/// CNOT|c t> = |c, t ⊕ c>, realised as an amplitude permutation.
inline void apply_cnot(DenseState& state, std::size_t control, std::size_t target) {
    if (control >= state.size() || target >= state.size() || control == target) {
        throw std::out_of_range("apply_cnot: invalid gate");
    }
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    auto& amps = state.amplitudes();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        if ((idx & cmask) && !(idx & tmask)) {
            std::swap(amps[idx], amps[idx | tmask]);
        }
    }
}

inline void step(DenseState& state, const CircuitSpec& spec) {
    for (const Gate& g : spec.odd_gates) {
        apply_cnot(state, g.control, g.target);
    }
    for (const Gate& g : spec.even_gates) {
        apply_cnot(state, g.control, g.target);
    }
}

inline DenseState evolve(DenseState state, const CircuitSpec& spec, std::size_t t) {
    if (state.size() != spec.n) {
        throw std::invalid_argument("oracle::evolve: state size does not match lattice");
    }
    for (std::size_t s = 0; s < t; ++s) {
        step(state, spec);
    }
    return state;
}

/// Index of the occupied basis state, or npos when the state is a superposition.
inline std::size_t basis_index(const DenseState& state, double tol = 1e-12) {
    std::size_t found = static_cast<std::size_t>(-1);
    for (std::size_t idx = 0; idx < state.amplitudes().size(); ++idx) {
        double p = std::norm(state.amplitudes()[idx]);
        if (p > tol) {
            if (found != static_cast<std::size_t>(-1)) {
                return static_cast<std::size_t>(-1);
            }
            found = idx;
        }
    }
    return found;
}

inline SiteDensity reduced_density(const DenseState& state, std::size_t site) {
    if (site >= state.size()) {
        throw std::out_of_range("reduced_density: site out of range");
    }
    SiteDensity rho;
    const std::size_t mask = std::size_t{1} << site;
    const auto& amps = state.amplitudes();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        if (idx & mask) {
            continue;
        }
        const complex_t a[2] = {amps[idx], amps[idx | mask]};
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                rho(r, c) += a[r] * std::conj(a[c]);
            }
        }
    }
    return rho;
}

/// Pair (site, site+1); local index 2·s_site + s_(site+1).
inline PairDensity reduced_density_pair(const DenseState& state, std::size_t site) {
    if (site + 1 >= state.size()) {
        throw std::out_of_range("reduced_density_pair: site out of range");
    }
    PairDensity rho;
    const std::size_t left = std::size_t{1} << site;
    const std::size_t right = std::size_t{1} << (site + 1);
    const auto& amps = state.amplitudes();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        if (idx & (left | right)) {
            continue;
        }
        const complex_t a[4] = {amps[idx], amps[idx | right], amps[idx | left], amps[idx | left | right]};
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                rho(r, c) += a[r] * std::conj(a[c]);
            }
        }
    }
    return rho;
}

/// Square complex matrix on the full 2^n space.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<complex_t> m;

    explicit DenseMatrix(std::size_t d) : dim(d), m(d * d, complex_t(0, 0)) {}

    complex_t& operator()(std::size_t r, std::size_t c) { return m[r * dim + c]; }
    const complex_t& operator()(std::size_t r, std::size_t c) const { return m[r * dim + c]; }

    static DenseMatrix identity(std::size_t d) {
        DenseMatrix out(d);
        for (std::size_t i = 0; i < d; ++i) {
            out(i, i) = 1;
        }
        return out;
    }

    double max_abs_diff(const DenseMatrix& other) const {
        double d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            d = std::max(d, std::abs(m[i] - other.m[i]));
        }
        return d;
    }
};

inline DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.dim);
    for (std::size_t r = 0; r < a.dim; ++r) {
        for (std::size_t k = 0; k < a.dim; ++k) {
            complex_t v = a(r, k);
            if (v == complex_t(0, 0)) {
                continue;
            }
            for (std::size_t c = 0; c < a.dim; ++c) {
                out(r, c) += v * b(k, c);
            }
        }
    }
    return out;
}

inline DenseMatrix adjoint(const DenseMatrix& a) {
    DenseMatrix out(a.dim);
    for (std::size_t r = 0; r < a.dim; ++r) {
        for (std::size_t c = 0; c < a.dim; ++c) {
            out(c, r) = std::conj(a(r, c));
        }
    }
    return out;
}

/// Elementwise Kronecker product of per-site 2x2 factors X^b Z^c, times i^k.
inline DenseMatrix to_dense(const PauliString& p) {
    const std::size_t n = p.size();
    if (n > kMaxMatrixSites) {
        throw std::invalid_argument("to_dense: at most " + std::to_string(kMaxMatrixSites) + " sites");
    }
    using M2 = std::array<std::array<complex_t, 2>, 2>;
    const M2 x = {{{0, 1}, {1, 0}}};
    const M2 z = {{{1, 0}, {0, -1}}};
    const M2 id = {{{1, 0}, {0, 1}}};
    std::vector<M2> factors(n);
    for (std::size_t j = 0; j < n; ++j) {
        const M2& a = p.x.get(j) ? x : id;
        const M2& b = p.z.get(j) ? z : id;
        M2 prod{};
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                prod[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        factors[j] = prod;
    }
    static const complex_t kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const std::size_t d = std::size_t{1} << n;
    DenseMatrix out(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            complex_t v = kPhase[p.phase];
            for (std::size_t j = 0; j < n && v != complex_t(0, 0); ++j) {
                v *= factors[j][(r >> j) & 1u][(c >> j) & 1u];
            }
            out(r, c) = v;
        }
    }
    return out;
}

/// Unitary of one circuit step, column s = step applied to basis state s.
inline DenseMatrix step_unitary(const CircuitSpec& spec) {
    if (spec.n > kMaxMatrixSites) {
        throw std::invalid_argument("step_unitary: at most " + std::to_string(kMaxMatrixSites) + " sites");
    }
    const std::size_t d = std::size_t{1} << spec.n;
    DenseMatrix u(d);
    for (std::size_t s = 0; s < d; ++s) {
        DenseState col(spec.n);
        col.amplitudes()[0] = 0;
        col.amplitudes()[s] = 1;
        step(col, spec);
        for (std::size_t r = 0; r < d; ++r) {
            u(r, s) = col.amplitudes()[r];
        }
    }
    return u;
}

/// Explicit (U†)^t P U^t.
inline DenseMatrix heisenberg_reference(const PauliString& p, const CircuitSpec& spec, std::size_t t) {
    if (p.size() != spec.n) {
        throw std::invalid_argument("heisenberg_reference: string size does not match lattice");
    }
    const DenseMatrix u = step_unitary(spec);
    const DenseMatrix u_dag = adjoint(u);
    DenseMatrix op = to_dense(p);
    for (std::size_t s = 0; s < t; ++s) {
        op = multiply(u_dag, multiply(op, u));
    }
    return op;
}

/// ⟨ψ| P |ψ⟩ by applying X^b Z^c to the amplitudes.
inline complex_t expectation(const DenseState& state, const PauliString& p) {
    if (p.size() != state.size()) {
        throw std::invalid_argument("oracle::expectation: size mismatch");
    }
    std::size_t xmask = 0;
    std::size_t zmask = 0;
    for (std::size_t j : p.x.support()) {
        xmask |= std::size_t{1} << j;
    }
    for (std::size_t j : p.z.support()) {
        zmask |= std::size_t{1} << j;
    }
    static const complex_t kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const auto& amps = state.amplitudes();
    complex_t total(0, 0);
    for (std::size_t s = 0; s < amps.size(); ++s) {
        // X^b Z^c |s> = (-1)^{|c & s|} |s ^ b>
        double sign = (std::popcount(s & zmask) & 1) ? -1.0 : 1.0;
        total += std::conj(amps[s ^ xmask]) * sign * amps[s];
    }
    return kPhase[p.phase] * total;
}

}  // namespace cnotca::oracle

namespace cnotca::oracle {

/// Largest disagreement between the GF(2) path and the dense simulator over
/// every site and nearest-neighbour pair for t = 0..steps.
struct Deviation {
    double density = 0;  // max |Δρ_ab| over single-site and pair matrices
    double entropy = 0;  // max |ΔS| over site entropies, pair entropies and MI

    double max() const { return std::max(density, entropy); }
};

inline Deviation compare_with_dense(const CircuitSpec& spec, const SingleQubitState& state, std::size_t steps) {
    Deviation dev;
    DenseState dense = DenseState::product(spec.n, state);
    LabelMaps maps(spec);
    HeisenbergFrame frame(spec.n);
    for (std::size_t t = 0; t <= steps; ++t) {
        if (t > 0) {
            step(dense, spec);
            frame.advance(maps);
        }
        std::vector<double> fast_s(spec.n);
        std::vector<double> dense_s(spec.n);
        for (std::size_t i = 0; i < spec.n; ++i) {
            SiteDensity fast = single_qubit_rho(i, frame, state);
            SiteDensity ref = reduced_density(dense, i);
            dev.density = std::max(dev.density, fast.max_abs_diff(ref));
            fast_s[i] = von_neumann_entropy(fast);
            dense_s[i] = von_neumann_entropy(ref);
            dev.entropy = std::max(dev.entropy, std::abs(fast_s[i] - dense_s[i]));
        }
        for (std::size_t i = 0; i + 1 < spec.n; ++i) {
            PairDensity fast = two_qubit_rho(i, frame, state);
            PairDensity ref = reduced_density_pair(dense, i);
            dev.density = std::max(dev.density, fast.max_abs_diff(ref));
            double fast_pair = von_neumann_entropy(fast);
            double dense_pair = von_neumann_entropy(ref);
            dev.entropy = std::max(dev.entropy, std::abs(fast_pair - dense_pair));
            double fast_mi = fast_s[i] + fast_s[i + 1] - fast_pair;
            double dense_mi = dense_s[i] + dense_s[i + 1] - dense_pair;
            dev.entropy = std::max(dev.entropy, std::abs(fast_mi - dense_mi));
        }
    }
    return dev;
}

}  // namespace cnotca::oracle
