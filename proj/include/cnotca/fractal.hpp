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
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnotca/gf2.hpp"
#include "cnotca/lattice.hpp"
#include "cnotca/pauli.hpp"
#include "cnotca/product_state.hpp"

namespace cnotca {

inline const double kSierpinskiDimension = std::log2(3.0);

/// Row t of Pascal's triangle mod 2 (length t+1). By Lucas' theorem
/// C(t, i) is odd iff the bits of i are a subset of the bits of t.
inline BitVec rule60_row(std::size_t t) {
    BitVec row(t + 1);
    for (std::size_t i = 0; i <= t; ++i) {
        if ((i & ~t) == 0) {
            row.set(i, true);
        }
    }
    return row;
}

/// Same row from a'_i = a_i ⊕ a_{i-1}, starting at a = e_0.
inline BitVec rule60_row_iterative(std::size_t t) {
    std::vector<std::uint8_t> a(t + 1, 0);
    a[0] = 1;
    for (std::size_t s = 1; s <= t; ++s) {
        for (std::size_t i = s; i >= 1; --i) {
            a[i] ^= a[i - 1];
        }
    }
    BitVec row(t + 1);
    for (std::size_t i = 0; i <= t; ++i) {
        row.set(i, a[i] != 0);
    }
    return row;
}

/// Popcounts of step^t · seed for t = 0..steps.
struct PopcountSeries {
    std::vector<std::size_t> counts;
    std::vector<std::uint64_t> cumulative;  // cumulative[t] = Σ_{s<=t} counts[s]

    std::size_t steps() const { return counts.empty() ? 0 : counts.size() - 1; }

    /// Bits turned on in rows 0..t-1, the "area" of the pattern up to height t.
    std::uint64_t area_before(std::size_t t) const { return t == 0 ? 0 : cumulative[t - 1]; }
};

inline PopcountSeries popcount_series(const BitVec& seed, const BitMatrix& step, std::size_t steps) {
    PopcountSeries series;
    BitVec v = seed;
    std::uint64_t running = 0;
    for (std::size_t t = 0; t <= steps; ++t) {
        if (t > 0) {
            v = mat_vec_mul(step, v);
        }
        series.counts.push_back(v.popcount());
        running += series.counts.back();
        series.cumulative.push_back(running);
    }
    return series;
}

/// Rule-60 pattern seeded at site 0 on a lattice wide enough that nothing
/// reaches the right edge. Equals popcount_series(e_0, build_sheared(steps+1))
/// without materialising the matrix.
inline PopcountSeries sheared_series(std::size_t steps) {
    std::vector<std::uint8_t> a(steps + 1, 0);
    a[0] = 1;
    PopcountSeries series;
    std::uint64_t running = 0;
    for (std::size_t t = 0; t <= steps; ++t) {
        if (t > 0) {
            for (std::size_t i = t; i >= 1; --i) {
                a[i] ^= a[i - 1];
            }
        }
        std::size_t count = 0;
        for (std::size_t i = 0; i <= t; ++i) {
            count += a[i];
        }
        series.counts.push_back(count);
        running += count;
        series.cumulative.push_back(running);
    }
    return series;
}

struct FitResult {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
    double x_min = 0;  // fitted range, in the regression's time variable
    double x_max = 0;
    std::size_t points = 0;
    std::size_t excluded = 0;
};

/// Ordinary least squares y = slope·x + intercept.
inline FitResult linear_fit(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw std::invalid_argument("linear_fit: need at least two (x, y) pairs of equal count");
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0;
    double my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0;
    double sxy = 0;
    double syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0) {
        throw std::invalid_argument("linear_fit: x values are all equal");
    }
    FitResult fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    // A constant series is fitted perfectly by the flat line.
    fit.r_squared = syy == 0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
    fit.x_min = *std::min_element(xs.begin(), xs.end());
    fit.x_max = *std::max_element(xs.begin(), xs.end());
    fit.points = xs.size();
    return fit;
}

/// Slope of log(area up to height t) against log t for t in [t_min, t_max].
inline FitResult hausdorff_fit(const PopcountSeries& series, std::size_t t_min, std::size_t t_max) {
    if (t_min < 1 || t_max <= t_min || t_max > series.steps() + 1) {
        throw std::invalid_argument("hausdorff_fit: window [" + std::to_string(t_min) + ", " +
                                    std::to_string(t_max) + "] outside series");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t t = t_min; t <= t_max; ++t) {
        xs.push_back(std::log(static_cast<double>(t)));
        ys.push_back(std::log(static_cast<double>(series.area_before(t))));
    }
    FitResult fit = linear_fit(xs, ys);
    fit.x_min = static_cast<double>(t_min);
    fit.x_max = static_cast<double>(t_max);
    return fit;
}

/// Same regression restricted to the dyadic heights t = 2^m, m in [m_lo, m_hi].
inline FitResult dyadic_hausdorff_fit(const PopcountSeries& series, unsigned m_lo, unsigned m_hi) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (unsigned m = m_lo; m <= m_hi; ++m) {
        std::size_t t = std::size_t{1} << m;
        if (t > series.steps() + 1) {
            throw std::invalid_argument("dyadic_hausdorff_fit: 2^" + std::to_string(m) + " outside series");
        }
        xs.push_back(std::log(static_cast<double>(t)));
        ys.push_back(std::log(static_cast<double>(series.area_before(t))));
    }
    return linear_fit(xs, ys);
}

/// Powers of two up to t_max (empty for t_max = 0).
inline std::vector<std::size_t> flashback_times(std::size_t t_max) {
    std::vector<std::size_t> out;
    for (std::size_t t = 1; t <= t_max && t != 0; t <<= 1) {
        out.push_back(t);
    }
    return out;
}

inline constexpr std::size_t kDyadicBand = 2;

/// True when t lies within `band` of some power of two.
inline bool near_dyadic(std::size_t t, std::size_t band = kDyadicBand) {
    if (t == 0) {
        return false;
    }
    std::size_t below = std::bit_floor(t);
    std::size_t above = below << 1;
    return t - below <= band || above - t <= band;
}

/// State-picture popcount at t = 2^m for a single bit seeded at the centre of
/// a bulk window.
struct FlashbackCount {
    unsigned m;
    std::size_t t;
    std::size_t count;
    std::size_t expected;  // m + 3

    bool matches() const { return count == expected; }
};

inline std::vector<FlashbackCount> flashback_counts(unsigned m_max, std::size_t margin = kDefaultWindowMargin) {
    const std::size_t t_max = std::size_t{1} << m_max;
    const BulkWindow window = bulk_window(t_max, margin);
    const CircuitSpec spec = build_step(window.size, BoundaryCondition::Open);
    BitVec label = BitVec::unit(window.size, window.center);
    std::vector<FlashbackCount> out;
    unsigned m = 0;
    for (std::size_t t = 1; t <= t_max; ++t) {
        label = state_step(std::move(label), spec);
        if (t == (std::size_t{1} << m)) {
            out.push_back({m, t, label.popcount(), std::size_t{m} + 3});
            ++m;
        }
    }
    return out;
}

/// Bulk single-site Bloch radius r(t) = |(⟨X⟩_t, ⟨Y⟩_t, ⟨Z⟩_t)|, tracked in
/// log space since r underflows long before the fit window ends.
struct DecaySeries {
    std::vector<std::size_t> times;  // 1..steps
    std::vector<double> log_r;
    std::vector<std::size_t> x_support;  // popcount of the evolved X label
    std::vector<std::size_t> z_support;  // popcount of the evolved Z label
    std::vector<bool> excluded;          // near a power of two

    double r(std::size_t i) const { return std::exp(log_r[i]); }
};

namespace detail {
inline double log_sum_exp(std::span<const double> terms) {
    double peak = -std::numeric_limits<double>::infinity();
    for (double v : terms) {
        peak = std::max(peak, v);
    }
    if (!std::isfinite(peak)) {
        return peak;
    }
    double acc = 0;
    for (double v : terms) {
        acc += std::exp(v - peak);
    }
    return peak + std::log(acc);
}
}  // namespace detail

inline DecaySeries decay_series(const SingleQubitState& state, std::size_t steps,
                                std::size_t margin = kDefaultWindowMargin) {
    const BulkWindow window = bulk_window(steps, margin);
    const CircuitSpec spec = build_step(window.size, BoundaryCondition::Open);
    BitVec x_label = BitVec::unit(window.size, window.center);
    BitVec z_label = x_label;
    DecaySeries series;
    for (std::size_t t = 1; t <= steps; ++t) {
        x_label = x_label_step(std::move(x_label), spec);
        z_label = z_label_step(std::move(z_label), spec);
        // Y_c(t) = i·X_c(t)·Z_c(t), already in X-before-Z order.
        const PauliString xs = PauliString::x_label(x_label);
        const PauliString zs = PauliString::z_label(z_label);
        const PauliString ys(x_label, z_label, 1);
        const double logs[3] = {2 * log_abs_expectation(xs, state), 2 * log_abs_expectation(ys, state),
                                2 * log_abs_expectation(zs, state)};
        series.times.push_back(t);
        series.log_r.push_back(0.5 * detail::log_sum_exp(logs));
        series.x_support.push_back(x_label.popcount());
        series.z_support.push_back(z_label.popcount());
        series.excluded.push_back(near_dyadic(t));
    }
    return series;
}

class FitRejected : public std::runtime_error {
   public:
    explicit FitRejected(const std::string& why) : std::runtime_error(why) {}
};

struct DecayFit {
    FitResult bulk;       // ln(-ln r) against ln t, non-dyadic t
    FitResult flashback;  // ln r(2^m) against m
    double rate = 0;      // a in r ~ exp(-a t^slope)
    double gamma = 0;     // r(2^m) ~ gamma^m
};

inline constexpr std::size_t kDefaultDecayFitFrom = 64;

/// Fits both decay laws. Throws FitRejected when r(t) hits 0 or 1 exactly,
/// where neither logarithm exists (Y eigenstates, computational states).
inline DecayFit decay_fit(const DecaySeries& series, std::size_t fit_from = kDefaultDecayFitFrom) {
    DecayFit out;
    std::vector<double> xs;
    std::vector<double> ys;
    std::size_t excluded = 0;
    for (std::size_t i = 0; i < series.times.size(); ++i) {
        const std::size_t t = series.times[i];
        if (t < fit_from) {
            continue;
        }
        if (series.excluded[i]) {
            ++excluded;
            continue;
        }
        const double lr = series.log_r[i];
        if (!std::isfinite(lr)) {
            throw FitRejected("r(t) = 0 exactly at t = " + std::to_string(t) + "; the state equilibrates at once");
        }
        if (!(lr < 0)) {
            throw FitRejected("r(t) = 1 at t = " + std::to_string(t) + "; the state does not decay");
        }
        xs.push_back(std::log(static_cast<double>(t)));
        ys.push_back(std::log(-lr));
    }
    if (xs.size() < 2) {
        throw FitRejected("fewer than two non-dyadic times at or after t = " + std::to_string(fit_from));
    }
    out.bulk = linear_fit(xs, ys);
    out.bulk.excluded = excluded;
    out.bulk.x_min = static_cast<double>(fit_from);
    out.bulk.x_max = static_cast<double>(series.times.back());
    out.rate = std::exp(out.bulk.intercept);

    xs.clear();
    ys.clear();
    for (std::size_t i = 0; i < series.times.size(); ++i) {
        const std::size_t t = series.times[i];
        if (!std::has_single_bit(t)) {
            continue;
        }
        if (!std::isfinite(series.log_r[i])) {
            throw FitRejected("r(2^m) = 0 exactly at t = " + std::to_string(t));
        }
        xs.push_back(static_cast<double>(std::countr_zero(t)));
        ys.push_back(series.log_r[i]);
    }
    if (xs.size() < 2) {
        throw FitRejected("fewer than two flashback times");
    }
    out.flashback = linear_fit(xs, ys);
    out.gamma = std::exp(out.flashback.slope);
    return out;
}

}  // namespace cnotca
