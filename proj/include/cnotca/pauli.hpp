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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnotca/gf2.hpp"
#include "cnotca/lattice.hpp"

namespace cnotca {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// The operator i^k · Π_j X_j^{b_j} Z_j^{c_j}.
///
/// On each site the X factor stands to the left of the Z factor, so
/// Y_j = i·X_j·Z_j is stored as b_j = c_j = 1 with one unit of phase.
struct PauliString {
    BitVec x;  // b bits
    BitVec z;  // c bits
    std::uint8_t phase = 0;  // k mod 4

    PauliString() = default;
    explicit PauliString(std::size_t n) : x(n), z(n) {}
    PauliString(BitVec xs, BitVec zs, std::uint8_t k) : x(std::move(xs)), z(std::move(zs)), phase(k & 3u) {
        if (x.size() != z.size()) {
            throw std::invalid_argument("PauliString: x and z parts have different lengths");
        }
    }

    static PauliString identity(std::size_t n) { return PauliString(n); }

    static PauliString z_label(BitVec c) {
        BitVec b(c.size());
        return PauliString(std::move(b), std::move(c), 0);
    }
    static PauliString x_label(BitVec b) {
        BitVec c(b.size());
        return PauliString(std::move(b), std::move(c), 0);
    }

    std::size_t size() const { return x.size(); }

    /// Hermitian Pauli letter on one site; the phase is adjusted so that the
    /// whole string stays equal to the product of its letters.
    void set_letter(std::size_t site, Pauli p) {
        if (site >= size()) {
            throw std::out_of_range("PauliString::set_letter: site out of range");
        }
        if (letter(site) == Pauli::Y) {
            phase = (phase + 3) & 3u;
        }
        x.set(site, p == Pauli::X || p == Pauli::Y);
        z.set(site, p == Pauli::Z || p == Pauli::Y);
        if (p == Pauli::Y) {
            phase = (phase + 1) & 3u;
        }
    }

    Pauli letter(std::size_t site) const {
        bool b = x.get(site);
        bool c = z.get(site);
        if (b && c) {
            return Pauli::Y;
        }
        return b ? Pauli::X : (c ? Pauli::Z : Pauli::I);
    }

    static PauliString single(std::size_t n, std::size_t site, Pauli p) {
        PauliString s(n);
        s.set_letter(site, p);
        return s;
    }

    static PauliString pair(std::size_t n, std::size_t site, Pauli left, Pauli right) {
        PauliString s(n);
        s.set_letter(site, left);
        s.set_letter(site + 1, right);
        return s;
    }

    /// True when the string is Hermitian: i^k must be real after absorbing one
    /// factor of i per Y site.
    bool is_hermitian() const { return ((phase + (x & z).popcount()) % 2) == 0; }

    bool operator==(const PauliString&) const = default;

    /// e.g. "+XIZY" (sign shown only for Hermitian strings, otherwise "i^k").
    std::string str() const {
        std::string out;
        std::uint8_t k = static_cast<std::uint8_t>((phase + 4 - ((x & z).popcount() & 3u)) & 3u);
        static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
        out += kPrefix[k];
        static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
        for (std::size_t j = 0; j < size(); ++j) {
            out += kLetters[static_cast<int>(letter(j))];
        }
        return out;
    }
};

/// (i^k1 X^b1 Z^c1)(i^k2 X^b2 Z^c2) = i^(k1+k2+2|c1&b2|) X^(b1^b2) Z^(c1^c2).
inline PauliString operator*(const PauliString& a, const PauliString& b) {
    std::uint8_t swaps = static_cast<std::uint8_t>((a.z & b.x).popcount() & 1u);
    return PauliString(a.x ^ b.x, a.z ^ b.z, static_cast<std::uint8_t>(a.phase + b.phase + 2 * swaps));
}

/// Conjugation G·P·G by a single CNOT.
///
/// X_c -> X_c X_t, Z_t -> Z_c Z_t, X_t and Z_c fixed. Writing the image of
/// X^b Z^c back in X-before-Z order never moves a Z past an X on the same
/// site, so the phase exponent is unchanged in this representation.
inline PauliString conjugate_by_gate(const PauliString& p, std::size_t control, std::size_t target) {
    if (control >= p.size() || target >= p.size() || control == target) {
        throw std::out_of_range(
            "conjugate_by_gate: invalid gate (" + std::to_string(control) + ", " + std::to_string(target) +
            ") on " + std::to_string(p.size()) + " sites");
    }
    PauliString out = p;
    if (p.x.get(control)) {
        out.x.flip(target);
    }
    if (p.z.get(target)) {
        out.z.flip(control);
    }
    return out;
}

/// One Heisenberg step O -> U† O U with U = C2·C1 as operators: the even
/// layer's gates act first, then the odd layer's.
inline PauliString heisenberg_step(const PauliString& p, const CircuitSpec& spec) {
    if (p.size() != spec.n) {
        throw std::invalid_argument("heisenberg_step: string size does not match lattice");
    }
    PauliString out = p;
    for (const Gate& g : spec.even_gates) {
        out = conjugate_by_gate(out, g.control, g.target);
    }
    for (const Gate& g : spec.odd_gates) {
        out = conjugate_by_gate(out, g.control, g.target);
    }
    return out;
}

inline PauliString heisenberg_evolve(PauliString p, const CircuitSpec& spec, std::size_t t) {
    for (std::size_t s = 0; s < t; ++s) {
        p = heisenberg_step(p, spec);
    }
    return p;
}

/// Per-step GF(2) maps on label columns: Z labels evolve by uᵀ (support
/// moves toward lower sites), X labels by u⁻¹ = c1·c2 (toward higher sites).
struct LabelMaps {
    BitMatrix z_step;
    BitMatrix x_step;

    explicit LabelMaps(const CircuitSpec& spec) : z_step(transpose(spec.u)), x_step(mat_mul(spec.c1, spec.c2)) {}
};

/// c -> uᵀ c, applied gate by gate (c_control ^= c_target, even layer first).
inline BitVec z_label_step(BitVec c, const CircuitSpec& spec) {
    if (c.size() != spec.n) {
        throw std::invalid_argument("z_label_step: label size does not match lattice");
    }
    for (const Gate& g : spec.even_gates) {
        if (c.get(g.target)) {
            c.flip(g.control);
        }
    }
    for (const Gate& g : spec.odd_gates) {
        if (c.get(g.target)) {
            c.flip(g.control);
        }
    }
    return c;
}

/// b -> c1·c2 b, applied gate by gate (b_target ^= b_control, even layer first).
inline BitVec x_label_step(BitVec b, const CircuitSpec& spec) {
    if (b.size() != spec.n) {
        throw std::invalid_argument("x_label_step: label size does not match lattice");
    }
    for (const Gate& g : spec.even_gates) {
        if (b.get(g.control)) {
            b.flip(g.target);
        }
    }
    for (const Gate& g : spec.odd_gates) {
        if (b.get(g.control)) {
            b.flip(g.target);
        }
    }
    return b;
}

/// Label maps raised to a fixed time t. Evolving any string is then two
/// matrix-vector products; the phase exponent carries over unchanged.
class HeisenbergFrame {
   public:
    explicit HeisenbergFrame(std::size_t n) : t_(0), z_map_(BitMatrix::identity(n)), x_map_(BitMatrix::identity(n)) {}

    HeisenbergFrame(const LabelMaps& maps, std::size_t t)
        : t_(t), z_map_(mat_pow(maps.z_step, t)), x_map_(mat_pow(maps.x_step, t)) {}

    std::size_t time() const { return t_; }

    /// Moves the frame one step forward.
    void advance(const LabelMaps& maps) {
        z_map_ = mat_mul(maps.z_step, z_map_);
        x_map_ = mat_mul(maps.x_step, x_map_);
        ++t_;
    }

    PauliString evolve(const PauliString& p) const {
        return PauliString(mat_vec_mul(x_map_, p.x), mat_vec_mul(z_map_, p.z), p.phase);
    }

    const BitMatrix& z_map() const { return z_map_; }
    const BitMatrix& x_map() const { return x_map_; }

   private:
    std::size_t t_;
    BitMatrix z_map_;
    BitMatrix x_map_;
};

/// Orbit of Z_k under the one-step map μ on pure-Z labels (open boundary).
struct MuOrbit {
    std::vector<PauliString> strings;  // Z_k, μ(Z_k), ..., μ^(p-1)(Z_k)
    std::size_t period = 0;
};

inline constexpr std::size_t kDefaultOrbitCap = std::size_t{1} << 20;

inline MuOrbit mu_orbit(std::size_t site, const CircuitSpec& spec, std::size_t cap = kDefaultOrbitCap) {
    if (spec.bc != BoundaryCondition::Open) {
        throw std::invalid_argument("mu_orbit: boundary orbits are defined for open boundaries only");
    }
    if (site >= spec.n) {
        throw std::out_of_range("mu_orbit: site out of range");
    }
    const BitMatrix z_step = transpose(spec.u);
    const BitVec start = BitVec::unit(spec.n, site);
    MuOrbit orbit;
    BitVec label = start;
    while (true) {
        orbit.strings.push_back(PauliString::z_label(label));
        label = mat_vec_mul(z_step, label);
        if (label == start) {
            orbit.period = orbit.strings.size();
            return orbit;
        }
        if (orbit.strings.size() >= cap) {
            throw std::runtime_error("mu_orbit: period exceeds cap " + std::to_string(cap));
        }
    }
}

}  // namespace cnotca
