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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cnotca/errors.hpp"
#include "cnotca/lattice.hpp"
#include "cnotca/pauli.hpp"
#include "cnotca/product_state.hpp"

namespace cnotca {

/// Dense Dim×Dim complex matrix, row-major. Dim is 2 (one site) or 4 (a
/// nearest-neighbour pair, left site as the high index bit).
template <std::size_t Dim>
struct DensityMatrix {
    static_assert(Dim == 2 || Dim == 4, "DensityMatrix supports one or two sites");
    static constexpr std::size_t dim = Dim;

    std::array<complex_t, Dim * Dim> m{};

    complex_t& operator()(std::size_t r, std::size_t c) { return m[r * Dim + c]; }
    const complex_t& operator()(std::size_t r, std::size_t c) const { return m[r * Dim + c]; }

    complex_t trace() const {
        complex_t t = 0;
        for (std::size_t i = 0; i < Dim; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    double max_abs_diff(const DensityMatrix& other) const {
        double d = 0;
        for (std::size_t i = 0; i < Dim * Dim; ++i) {
            d = std::max(d, std::abs(m[i] - other.m[i]));
        }
        return d;
    }

    static DensityMatrix maximally_mixed() {
        DensityMatrix r;
        for (std::size_t i = 0; i < Dim; ++i) {
            r(i, i) = 1.0 / Dim;
        }
        return r;
    }
};

using SiteDensity = DensityMatrix<2>;
using PairDensity = DensityMatrix<4>;

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kEigenvalueTolerance = 1e-9;

template <std::size_t Dim>
void validate(const DensityMatrix<Dim>& rho) {
    for (std::size_t r = 0; r < Dim; ++r) {
        for (std::size_t c = 0; c < Dim; ++c) {
            if (std::abs(rho(r, c) - std::conj(rho(c, r))) > kHermitianTolerance) {
                throw NumericContractError("density matrix is not Hermitian at (" + std::to_string(r) + ", " +
                                           std::to_string(c) + ")");
            }
        }
    }
    if (std::abs(rho.trace() - 1.0) > kTraceTolerance) {
        throw NumericContractError("density matrix trace deviates from 1 by " +
                                   std::to_string(std::abs(rho.trace() - 1.0)));
    }
}

namespace detail {

/// Cyclic Jacobi on a real symmetric matrix; returns the diagonal after
/// the off-diagonal Frobenius norm drops below `tol`.
template <std::size_t M>
std::array<double, M> jacobi_eigenvalues(std::array<double, M * M> a, double tol = 1e-12) {
    auto at = [&a](std::size_t r, std::size_t c) -> double& { return a[r * M + c]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t r = 0; r < M; ++r) {
            for (std::size_t c = 0; c < M; ++c) {
                if (r != c) {
                    off += at(r, c) * at(r, c);
                }
            }
        }
        if (std::sqrt(off) < tol) {
            break;
        }
        for (std::size_t p = 0; p + 1 < M; ++p) {
            for (std::size_t q = p + 1; q < M; ++q) {
                double apq = at(p, q);
                if (std::abs(apq) < 1e-300) {
                    continue;
                }
                double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (std::size_t k = 0; k < M; ++k) {
                    double akp = at(k, p);
                    double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < M; ++k) {
                    double apk = at(p, k);
                    double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::array<double, M> out{};
    for (std::size_t i = 0; i < M; ++i) {
        out[i] = at(i, i);
    }
    return out;
}

}  // namespace detail

/// Eigenvalues in ascending order.
///
/// Dim 2 uses the Bloch-radius closed form. Dim 4 embeds H = A + iB as the
/// real symmetric [[A, -B], [B, A]], whose spectrum is that of H with every
/// eigenvalue doubled, and runs cyclic Jacobi on it.
template <std::size_t Dim>
std::array<double, Dim> eigenvalues(const DensityMatrix<Dim>& rho) {
    std::array<double, Dim> out{};
    if constexpr (Dim == 2) {
        double mean = 0.5 * (rho(0, 0).real() + rho(1, 1).real());
        double half_diff = 0.5 * (rho(0, 0).real() - rho(1, 1).real());
        double radius = std::sqrt(half_diff * half_diff + std::norm(rho(0, 1)));
        out = {mean - radius, mean + radius};
    } else {
        constexpr std::size_t M = 2 * Dim;
        std::array<double, M * M> real{};
        for (std::size_t r = 0; r < Dim; ++r) {
            for (std::size_t c = 0; c < Dim; ++c) {
                // Symmetrize against roundoff before embedding.
                complex_t h = 0.5 * (rho(r, c) + std::conj(rho(c, r)));
                real[r * M + c] = h.real();
                real[(r + Dim) * M + (c + Dim)] = h.real();
                real[r * M + (c + Dim)] = -h.imag();
                real[(r + Dim) * M + c] = h.imag();
            }
        }
        auto doubled = detail::jacobi_eigenvalues<M>(real);
        std::sort(doubled.begin(), doubled.end());
        for (std::size_t i = 0; i < Dim; ++i) {
            out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// -Σ λ log2 λ in bits. Eigenvalues within 1e-9 outside [0, 1] are clamped;
/// anything further out is a contract violation.
template <std::size_t Dim>
double von_neumann_entropy(const DensityMatrix<Dim>& rho) {
    validate(rho);
    double s = 0;
    for (double lambda : eigenvalues(rho)) {
        if (lambda < -kEigenvalueTolerance || lambda > 1 + kEigenvalueTolerance) {
            throw NumericContractError("density matrix eigenvalue " + std::to_string(lambda) + " outside [0, 1]");
        }
        lambda = std::clamp(lambda, 0.0, 1.0);
        if (lambda > 0) {
            s -= lambda * std::log2(lambda);
        }
    }
    return std::max(s, 0.0);
}

namespace detail {

using Mat2 = std::array<complex_t, 4>;

inline const Mat2& pauli_matrix(Pauli p) {
    static const std::array<Mat2, 4> kMats = {{
        {complex_t(1, 0), complex_t(0, 0), complex_t(0, 0), complex_t(1, 0)},
        {complex_t(0, 0), complex_t(1, 0), complex_t(1, 0), complex_t(0, 0)},
        {complex_t(0, 0), complex_t(0, -1), complex_t(0, 1), complex_t(0, 0)},
        {complex_t(1, 0), complex_t(0, 0), complex_t(0, 0), complex_t(-1, 0)},
    }};
    return kMats[static_cast<int>(p)];
}

inline constexpr std::array<Pauli, 4> kAllPaulis = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

inline void require_site(std::size_t site, std::size_t limit, const char* what) {
    if (site >= limit) {
        throw std::out_of_range(std::string(what) + ": site " + std::to_string(site) + " out of range");
    }
}

}  // namespace detail

/// ½(1 + ⟨X_i⟩_t X + ⟨Y_i⟩_t Y + ⟨Z_i⟩_t Z) with each expectation taken on the
/// Heisenberg-evolved string.
inline SiteDensity single_qubit_rho(std::size_t site, const HeisenbergFrame& frame, const SingleQubitState& state) {
    const std::size_t n = frame.z_map().size();
    detail::require_site(site, n, "single_qubit_rho");
    SiteDensity rho;
    for (Pauli p : detail::kAllPaulis) {
        double e = 1;
        if (p != Pauli::I) {
            e = real_expectation(frame.evolve(PauliString::single(n, site, p)), state);
        }
        const auto& mat = detail::pauli_matrix(p);
        for (std::size_t k = 0; k < 4; ++k) {
            rho.m[k] += 0.5 * e * mat[k];
        }
    }
    return rho;
}

inline SiteDensity single_qubit_rho(std::size_t site, std::size_t t, const CircuitSpec& spec,
                                    const SingleQubitState& state) {
    return single_qubit_rho(site, HeisenbergFrame(LabelMaps(spec), t), state);
}

/// ¼ Σ_{P,Q} ⟨P_i Q_{i+1}⟩_t P⊗Q over all sixteen Pauli pairs.
inline PairDensity two_qubit_rho(std::size_t site, const HeisenbergFrame& frame, const SingleQubitState& state) {
    const std::size_t n = frame.z_map().size();
    detail::require_site(site + 1, n, "two_qubit_rho");
    PairDensity rho;
    for (Pauli p : detail::kAllPaulis) {
        for (Pauli q : detail::kAllPaulis) {
            double e = 1;
            if (p != Pauli::I || q != Pauli::I) {
                e = real_expectation(frame.evolve(PauliString::pair(n, site, p, q)), state);
            }
            if (e == 0) {
                continue;
            }
            const auto& a = detail::pauli_matrix(p);
            const auto& b = detail::pauli_matrix(q);
            for (std::size_t r1 = 0; r1 < 2; ++r1) {
                for (std::size_t c1 = 0; c1 < 2; ++c1) {
                    for (std::size_t r2 = 0; r2 < 2; ++r2) {
                        for (std::size_t c2 = 0; c2 < 2; ++c2) {
                            rho(2 * r1 + r2, 2 * c1 + c2) += 0.25 * e * a[2 * r1 + c1] * b[2 * r2 + c2];
                        }
                    }
                }
            }
        }
    }
    return rho;
}

inline PairDensity two_qubit_rho(std::size_t site, std::size_t t, const CircuitSpec& spec,
                                 const SingleQubitState& state) {
    return two_qubit_rho(site, HeisenbergFrame(LabelMaps(spec), t), state);
}

/// M(i) = S(i) + S(i+1) - S(i, i+1) from already-computed densities.
inline double mutual_information(const SiteDensity& left, const SiteDensity& right, const PairDensity& pair) {
    return von_neumann_entropy(left) + von_neumann_entropy(right) - von_neumann_entropy(pair);
}

inline double mutual_information(std::size_t site, const HeisenbergFrame& frame, const SingleQubitState& state) {
    return mutual_information(single_qubit_rho(site, frame, state), single_qubit_rho(site + 1, frame, state),
                              two_qubit_rho(site, frame, state));
}

inline double mutual_information(std::size_t site, std::size_t t, const CircuitSpec& spec,
                                 const SingleQubitState& state) {
    return mutual_information(site, HeisenbergFrame(LabelMaps(spec), t), state);
}

/// Time × site table; row t holds times 0..steps.
struct EntropyGrid {
    std::size_t steps = 0;
    std::size_t sites = 0;
    std::vector<double> values;

    EntropyGrid() = default;
    EntropyGrid(std::size_t steps_, std::size_t sites_)
        : steps(steps_), sites(sites_), values((steps_ + 1) * sites_, 0.0) {}

    double& at(std::size_t t, std::size_t site) { return values[t * sites + site]; }
    double at(std::size_t t, std::size_t site) const { return values[t * sites + site]; }
};

enum class GridQuantity { SiteEntropy, PairEntropy, MutualInformation };

namespace detail {

/// Runs fn(t) for t in [0, count) on up to `workers` threads. Each t is
/// handled by exactly one worker; the interleaving has no effect on output.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
    workers = std::max<std::size_t>(1, std::min(workers, count));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::exception_ptr> failures(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&fn, &failures, w, workers, count] {
                try {
                    for (std::size_t i = w; i < count; i += workers) {
                        fn(i);
                    }
                } catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
}

}  // namespace detail

/// Fills a grid for t = 0..steps. Single-site grids have n columns, pair
/// grids n-1 (column i is the pair (i, i+1)).
inline EntropyGrid compute_grid(GridQuantity quantity, const CircuitSpec& spec, const SingleQubitState& state,
                                std::size_t steps, std::size_t workers = 1) {
    const std::size_t columns = quantity == GridQuantity::SiteEntropy ? spec.n : spec.n - 1;
    EntropyGrid grid(steps, columns);
    LabelMaps maps(spec);
    std::vector<HeisenbergFrame> frames;
    frames.reserve(steps + 1);
    frames.emplace_back(spec.n);
    for (std::size_t t = 1; t <= steps; ++t) {
        frames.push_back(frames.back());
        frames.back().advance(maps);
    }
    detail::parallel_for(steps + 1, workers, [&](std::size_t t) {
        const HeisenbergFrame& frame = frames[t];
        if (quantity == GridQuantity::SiteEntropy) {
            for (std::size_t i = 0; i < columns; ++i) {
                grid.at(t, i) = von_neumann_entropy(single_qubit_rho(i, frame, state));
            }
            return;
        }
        std::vector<SiteDensity> singles;
        if (quantity == GridQuantity::MutualInformation) {
            for (std::size_t i = 0; i < spec.n; ++i) {
                singles.push_back(single_qubit_rho(i, frame, state));
            }
        }
        for (std::size_t i = 0; i < columns; ++i) {
            PairDensity pair = two_qubit_rho(i, frame, state);
            grid.at(t, i) = quantity == GridQuantity::PairEntropy
                                ? von_neumann_entropy(pair)
                                : mutual_information(singles[i], singles[i + 1], pair);
        }
    });
    return grid;
}

inline EntropyGrid entropy_map(const CircuitSpec& spec, const SingleQubitState& state, std::size_t steps,
                               std::size_t workers = 1) {
    return compute_grid(GridQuantity::SiteEntropy, spec, state, steps, workers);
}

inline EntropyGrid mutual_information_map(const CircuitSpec& spec, const SingleQubitState& state, std::size_t steps,
                                          std::size_t workers = 1) {
    return compute_grid(GridQuantity::MutualInformation, spec, state, steps, workers);
}

}  // namespace cnotca
