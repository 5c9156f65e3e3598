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
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>

#include "cnotca/density.hpp"

namespace cnotca::io {

/// Fixed "%.12e" rendering used by every CSV column holding a real number.
inline std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

/// `t,site,<value_column>` with 1-based sites, times ascending then sites.
inline void write_grid_csv(std::ostream& out, const EntropyGrid& grid, std::string_view value_column) {
    out << "t,site," << value_column << '\n';
    for (std::size_t t = 0; t <= grid.steps; ++t) {
        for (std::size_t s = 0; s < grid.sites; ++s) {
            out << t << ',' << (s + 1) << ',' << format_real(grid.at(t, s)) << '\n';
        }
    }
}

inline constexpr int kPgmMaxValue = 255;

/// ASCII PGM (P2): one row per time, one column per site, gray level
/// round(255 · value / full_scale) clamped to [0, 255].
inline void write_grid_pgm(std::ostream& out, const EntropyGrid& grid, double full_scale) {
    out << "P2\n" << grid.sites << ' ' << (grid.steps + 1) << '\n' << kPgmMaxValue << '\n';
    for (std::size_t t = 0; t <= grid.steps; ++t) {
        for (std::size_t s = 0; s < grid.sites; ++s) {
            double scaled = std::round(kPgmMaxValue * grid.at(t, s) / full_scale);
            int level = static_cast<int>(std::clamp(scaled, 0.0, static_cast<double>(kPgmMaxValue)));
            out << level << (s + 1 == grid.sites ? '\n' : ' ');
        }
    }
}

}  // namespace cnotca::io
