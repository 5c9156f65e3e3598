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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cnotca/gf2.hpp"

namespace cnotca {

// Sites are 0-based everywhere in the library. The CLI reports 1-based sites.

enum class BoundaryCondition { Open, Periodic };

inline std::string_view to_string(BoundaryCondition bc) { return bc == BoundaryCondition::Open ? "open" : "periodic"; }

inline BoundaryCondition parse_boundary(std::string_view s) {
    if (s == "open") {
        return BoundaryCondition::Open;
    }
    if (s == "periodic") {
        return BoundaryCondition::Periodic;
    }
    throw std::invalid_argument("unknown boundary condition '" + std::string(s) + "' (expected open|periodic)");
}

struct Gate {
    std::size_t control;
    std::size_t target;
    bool operator==(const Gate&) const = default;
};

/// One time step of the brickwork: the odd layer (bonds (0,1), (2,3), ...)
/// followed by the even layer (bonds (1,2), (3,4), ..., plus the wrap gate
/// with control n-1 and target 0 under periodic boundaries).
///
/// On computational-basis labels the step acts as u = c2 · c1 (mod 2).
struct CircuitSpec {
    std::size_t n = 0;
    BoundaryCondition bc = BoundaryCondition::Open;
    std::vector<Gate> odd_gates;
    std::vector<Gate> even_gates;
    BitMatrix c1;
    BitMatrix c2;
    BitMatrix u;
};

namespace detail {

inline void require_even_size(std::size_t n, BoundaryCondition bc) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("lattice size must be even and >= 2, got " + std::to_string(n));
    }
    if (bc == BoundaryCondition::Periodic && n < 4) {
        throw std::invalid_argument("periodic lattice needs n >= 4, got " + std::to_string(n));
    }
}

inline BitMatrix layer_matrix(std::size_t n, const std::vector<Gate>& gates) {
    BitMatrix m = BitMatrix::identity(n);
    for (const Gate& g : gates) {
        m.set(g.target, g.control, true);
    }
    return m;
}

}  // namespace detail

inline std::vector<Gate> odd_layer_gates(std::size_t n, BoundaryCondition bc) {
    detail::require_even_size(n, bc);
    std::vector<Gate> gates;
    for (std::size_t j = 0; j + 1 < n; j += 2) {
        gates.push_back({j, j + 1});
    }
    return gates;
}

inline std::vector<Gate> even_layer_gates(std::size_t n, BoundaryCondition bc) {
    detail::require_even_size(n, bc);
    std::vector<Gate> gates;
    for (std::size_t j = 1; j + 1 < n; j += 2) {
        gates.push_back({j, j + 1});
    }
    if (bc == BoundaryCondition::Periodic) {
        gates.push_back({n - 1, 0});
    }
    return gates;
}

inline BitMatrix build_layer_odd(std::size_t n, BoundaryCondition bc) {
    return detail::layer_matrix(n, odd_layer_gates(n, bc));
}

inline BitMatrix build_layer_even(std::size_t n, BoundaryCondition bc) {
    return detail::layer_matrix(n, even_layer_gates(n, bc));
}

inline CircuitSpec build_step(std::size_t n, BoundaryCondition bc) {
    CircuitSpec spec;
    spec.n = n;
    spec.bc = bc;
    spec.odd_gates = odd_layer_gates(n, bc);
    spec.even_gates = even_layer_gates(n, bc);
    spec.c1 = detail::layer_matrix(n, spec.odd_gates);
    spec.c2 = detail::layer_matrix(n, spec.even_gates);
    spec.u = mat_mul(spec.c2, spec.c1);
    if (!mat_mul(spec.c1, spec.c1).is_identity() || !mat_mul(spec.c2, spec.c2).is_identity()) {
        throw std::logic_error("build_step: layer matrices are not involutions");
    }
    if (!is_invertible(spec.u)) {
        throw std::logic_error("build_step: step matrix is singular");
    }
    return spec;
}

/// One step on a computational-basis label: target ^= control for every
/// gate, odd layer first. Equivalent to mat_vec_mul(spec.u, label).
inline BitVec state_step(BitVec label, const CircuitSpec& spec) {
    for (const Gate& g : spec.odd_gates) {
        if (label.get(g.control)) {
            label.flip(g.target);
        }
    }
    for (const Gate& g : spec.even_gates) {
        if (label.get(g.control)) {
            label.flip(g.target);
        }
    }
    return label;
}

/// Staircase ordering of the same gates: one step maps a_i -> a_i + a_{i-1}.
/// Iterating it on e_0 is the rule-60 automaton.
inline BitMatrix build_sheared(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("build_sheared: n must be >= 1");
    }
    BitMatrix m = BitMatrix::identity(n);
    for (std::size_t i = 1; i < n; ++i) {
        m.set(i, i - 1, true);
    }
    return m;
}

/// Sheared-automaton time corresponding to site `site` of the brickwork
/// after `t` steps (open boundaries, seed at site 0). Bit `site` of U^t e_0
/// equals bit `site` of Ũ^(t + site/2) e_0.
constexpr std::size_t sheared_time(std::size_t t, std::size_t site) { return t + site / 2; }

inline constexpr std::size_t kDefaultWindowMargin = 4;

/// Finite lattice emulating the infinite line around one bulk site.
///
/// Label supports spread at most two sites per step, so a window of
/// 4t + 2·margin sites keeps the light cone of `center` clear of both edges
/// for t steps. `center` is kept on the even sublattice.
struct BulkWindow {
    std::size_t size;
    std::size_t center;
};

inline BulkWindow bulk_window(std::size_t t, std::size_t margin = kDefaultWindowMargin) {
    BulkWindow w;
    w.size = 4 * t + 2 * margin;
    if (w.size < 2) {
        w.size = 2;
    }
    w.center = w.size / 2;
    if (w.center % 2 != 0) {
        --w.center;
    }
    return w;
}

}  // namespace cnotca
