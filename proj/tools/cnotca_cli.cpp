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

// Command-line front end. Exit codes: 0 success, 1 argument error,
// 2 numeric-contract violation.

#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "cnotca/cnotca.hpp"

namespace {

using namespace cnotca;

constexpr int kExitOk = 0;
constexpr int kExitArgument = 1;
constexpr int kExitNumeric = 2;

struct ExperimentConfig {
    std::size_t n = 50;
    std::string bc = "open";
    double theta = 0.2;
    double phi = 0.0;
    std::size_t steps = 70;
    std::uint64_t seed = 1;
    std::string out;
    std::size_t tmin = 0;
    std::size_t tmax = 0;
    std::size_t margin = kDefaultWindowMargin;
    std::size_t workers = 1;
    std::size_t site = 3;
    std::size_t states = 5;

    SingleQubitState state() const { return SingleQubitState::from_angles(theta, phi); }
    CircuitSpec spec() const { return build_step(n, parse_boundary(bc)); }
};

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::invalid_argument("cannot open '" + path + "' for writing");
    }
    return f;
}

void write_grid_files(const EntropyGrid& grid, const std::string& prefix, const char* column, double full_scale) {
    auto csv = open_output(prefix + ".csv");
    io::write_grid_csv(csv, grid, column);
    auto pgm = open_output(prefix + ".pgm");
    io::write_grid_pgm(pgm, grid, full_scale);
    std::cout << "wrote " << prefix << ".csv and " << prefix << ".pgm (" << (grid.steps + 1) << " x " << grid.sites
              << ")\n";
}

int cmd_entropy_map(const ExperimentConfig& cfg) {
    EntropyGrid grid = entropy_map(cfg.spec(), cfg.state(), cfg.steps, cfg.workers);
    write_grid_files(grid, cfg.out.empty() ? "entropy" : cfg.out, "entropy_bits", 1.0);
    return kExitOk;
}

int cmd_mutual_info(const ExperimentConfig& cfg) {
    EntropyGrid grid = mutual_information_map(cfg.spec(), cfg.state(), cfg.steps, cfg.workers);
    write_grid_files(grid, cfg.out.empty() ? "mutual_info" : cfg.out, "mutual_info_bits", 2.0);
    return kExitOk;
}

void write_fit_row(std::ostream& out, const char* name, const FitResult& fit) {
    out << name << ',' << io::format_real(fit.slope) << ',' << io::format_real(fit.intercept) << ','
        << io::format_real(fit.r_squared) << ',' << io::format_real(fit.x_min) << ',' << io::format_real(fit.x_max)
        << ',' << fit.points << ',' << fit.excluded << '\n';
}

constexpr const char* kFitHeader = "fit,slope,intercept,r_squared,x_min,x_max,points,excluded\n";

int cmd_fractal(const ExperimentConfig& cfg) {
    const std::string prefix = cfg.out.empty() ? "fractal" : cfg.out;
    const PopcountSeries series = sheared_series(cfg.steps);
    {
        auto csv = open_output(prefix + ".csv");
        csv << "t,count,cumulative\n";
        for (std::size_t t = 0; t <= series.steps(); ++t) {
            csv << t << ',' << series.counts[t] << ',' << series.cumulative[t] << '\n';
        }
    }

    std::size_t t_max = cfg.tmax == 0 ? cfg.steps : std::min(cfg.tmax, cfg.steps);
    std::size_t t_min = cfg.tmin == 0 ? 16 : cfg.tmin;
    if (t_min >= t_max) {
        t_min = 1;
    }
    if (t_max < 2) {
        t_max = 2;
    }
    const FitResult fit = hausdorff_fit(series, t_min, t_max);
    {
        auto csv = open_output(prefix + "_fit.csv");
        csv << kFitHeader;
        write_fit_row(csv, "hausdorff", fit);
    }
    std::cout << "hausdorff_slope=" << io::format_real(fit.slope) << " r_squared=" << io::format_real(fit.r_squared)
              << " target=" << io::format_real(kSierpinskiDimension) << '\n';

    const unsigned m_max = cfg.steps == 0 ? 0 : static_cast<unsigned>(std::bit_width(cfg.steps) - 1);
    const auto counts = flashback_counts(m_max, cfg.margin);
    std::size_t mismatches = 0;
    {
        auto csv = open_output(prefix + "_flashback.csv");
        csv << "m,t,count,expected\n";
        for (const auto& c : counts) {
            csv << c.m << ',' << c.t << ',' << c.count << ',' << c.expected << '\n';
            if (!c.matches()) {
                ++mismatches;
                std::cout << "discrepancy: flashback count at t=" << c.t << " is " << c.count << ", expected "
                          << c.expected << '\n';
            }
        }
    }
    std::cout << "flashback_times=" << counts.size() << " mismatches=" << mismatches << '\n';
    std::cout << "wrote " << prefix << ".csv, " << prefix << "_fit.csv and " << prefix << "_flashback.csv\n";
    return kExitOk;
}

int cmd_fit_decay(const ExperimentConfig& cfg) {
    const std::string prefix = cfg.out.empty() ? "decay" : cfg.out;
    const DecaySeries series = decay_series(cfg.state(), cfg.steps, cfg.margin);
    {
        auto csv = open_output(prefix + ".csv");
        csv << "t,r,ln_r,x_support,z_support,excluded\n";
        for (std::size_t i = 0; i < series.times.size(); ++i) {
            csv << series.times[i] << ',' << io::format_real(series.r(i)) << ','
                << io::format_real(series.log_r[i]) << ',' << series.x_support[i] << ',' << series.z_support[i]
                << ',' << (series.excluded[i] ? 1 : 0) << '\n';
        }
    }
    const std::size_t fit_from = cfg.tmin == 0 ? kDefaultDecayFitFrom : cfg.tmin;
    try {
        const DecayFit fit = decay_fit(series, fit_from);
        auto csv = open_output(prefix + "_fit.csv");
        csv << kFitHeader;
        write_fit_row(csv, "bulk_stretched_exponential", fit.bulk);
        write_fit_row(csv, "flashback_power_law", fit.flashback);
        std::cout << "bulk_slope=" << io::format_real(fit.bulk.slope)
                  << " bulk_r_squared=" << io::format_real(fit.bulk.r_squared)
                  << " rate=" << io::format_real(fit.rate)
                  << " target=" << io::format_real(kSierpinskiDimension - 1) << '\n';
        std::cout << "flashback_slope=" << io::format_real(fit.flashback.slope)
                  << " flashback_r_squared=" << io::format_real(fit.flashback.r_squared)
                  << " gamma=" << io::format_real(fit.gamma) << '\n';
    } catch (const FitRejected& e) {
        std::cout << "fit rejected: " << e.what() << '\n';
    }
    std::cout << "wrote " << prefix << ".csv\n";
    return kExitOk;
}

std::string sites_1based(const BitVec& label) {
    std::string s;
    for (std::size_t j : label.support()) {
        if (!s.empty()) {
            s += ' ';
        }
        s += std::to_string(j + 1);
    }
    return s;
}

int cmd_charges(const ExperimentConfig& cfg) {
    const CircuitSpec spec = cfg.spec();
    if (cfg.site == 0 || cfg.site > spec.n) {
        throw std::invalid_argument("--k must be a 1-based site in [1, n]");
    }
    const std::size_t k = cfg.site - 1;
    std::ostringstream out;
    const MuOrbit orbit = mu_orbit(k, spec);
    out << "# orbit\nstep,sites\n";
    for (std::size_t i = 0; i < orbit.strings.size(); ++i) {
        out << i << ",\"" << sites_1based(orbit.strings[i].z) << "\"\n";
    }
    const auto modes = fourier_invariants(k, spec);
    out << "# modes\nmode,sites,coefficient_re,coefficient_im,mu_eigenvalue_check\n";
    for (std::size_t j = 0; j < modes.size(); ++j) {
        const bool eigen = apply_mu(modes[j], spec) == modes[j].rotated(static_cast<std::int64_t>(j));
        for (const auto& [label, c] : modes[j].terms) {
            const complex_t v = c.value();
            out << j << ",\"" << sites_1based(label) << "\"," << io::format_real(v.real()) << ','
                << io::format_real(v.imag()) << ',' << (eigen ? "ok" : "FAIL") << '\n';
        }
    }
    const OscillationReport report = verify_oscillation(k, cfg.state(), spec, cfg.steps);
    out << "# oscillation\nt,z_expectation\n";
    for (std::size_t t = 0; t < report.z_series.size(); ++t) {
        out << t << ',' << io::format_real(report.z_series[t]) << '\n';
    }
    const bool closed = subalgebra_closure(cfg.site, spec, cfg.steps);
    out << "# summary\nsite,period,periodic,max_mode_drift,subalgebra_closed\n";
    out << cfg.site << ',' << report.period << ',' << (report.periodic ? 1 : 0) << ','
        << io::format_real(report.max_mode_drift) << ',' << (closed ? 1 : 0) << '\n';
    if (cfg.out.empty()) {
        std::cout << out.str();
    } else {
        auto f = open_output(cfg.out + ".csv");
        f << out.str();
        std::cout << "wrote " << cfg.out << ".csv\n";
    }
    if (!report.ok || !closed) {
        std::cerr << "charge verification failed\n";
        return kExitNumeric;
    }
    return kExitOk;
}

constexpr double kOracleCheckTolerance = 1e-8;

int cmd_oracle_check(const ExperimentConfig& cfg) {
    if (cfg.n > oracle::kMaxSites) {
        throw std::invalid_argument("oracle-check supports n <= " + std::to_string(oracle::kMaxSites));
    }
    const CircuitSpec spec = cfg.spec();
    std::mt19937_64 rng(cfg.seed);
    double worst = 0;
    for (std::size_t s = 0; s < cfg.states; ++s) {
        worst = std::max(worst, oracle::compare_with_dense(spec, sample_state(rng), cfg.steps).max());
    }
    std::cout << "max_abs_dev=" << io::format_real(worst) << '\n';
    return worst < kOracleCheckTolerance ? kExitOk : kExitNumeric;
}

void add_lattice_options(CLI::App* cmd, ExperimentConfig& cfg) {
    cmd->add_option("--n", cfg.n, "number of sites (even)")->capture_default_str();
    cmd->add_option("--bc", cfg.bc, "boundary condition")
        ->check(CLI::IsMember({"open", "periodic"}))
        ->capture_default_str();
}

void add_state_options(CLI::App* cmd, ExperimentConfig& cfg) {
    cmd->add_option("--theta", cfg.theta, "polar angle of the initial single-qubit state (radians)")
        ->capture_default_str();
    cmd->add_option("--phi", cfg.phi, "azimuthal angle of the initial single-qubit state (radians)")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CNOT brickwork cellular automaton: entropies, fractals and boundary charges"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    int exit_code = kExitOk;

    auto* entropy = app.add_subcommand("entropy-map", "single-site entropy grid (CSV + PGM)");
    add_lattice_options(entropy, cfg);
    add_state_options(entropy, cfg);
    entropy->add_option("--steps", cfg.steps, "last time step")->capture_default_str();
    entropy->add_option("--out", cfg.out, "output path prefix");
    entropy->add_option("--workers", cfg.workers, "worker threads")->capture_default_str();

    auto* mutual = app.add_subcommand("mutual-info", "nearest-neighbour mutual information grid (CSV + PGM)");
    add_lattice_options(mutual, cfg);
    add_state_options(mutual, cfg);
    mutual->add_option("--steps", cfg.steps, "last time step")->capture_default_str();
    mutual->add_option("--out", cfg.out, "output path prefix");
    mutual->add_option("--workers", cfg.workers, "worker threads")->capture_default_str();

    auto* fractal = app.add_subcommand("fractal", "rule-60 popcounts, dimension fit and flashback counts");
    fractal->add_option("--steps", cfg.steps, "last time step");
    fractal->add_option("--tmin", cfg.tmin, "first height of the dimension fit (default 16)");
    fractal->add_option("--tmax", cfg.tmax, "last height of the dimension fit (default --steps)");
    fractal->add_option("--margin", cfg.margin, "bulk window margin for flashback counts")->capture_default_str();
    fractal->add_option("--out", cfg.out, "output path prefix");

    auto* decay = app.add_subcommand("fit-decay", "bulk Bloch-radius decay and its two fits");
    add_state_options(decay, cfg);
    decay->add_option("--steps", cfg.steps, "last time step");
    decay->add_option("--tmin", cfg.tmin, "first time of the bulk fit (default 64)");
    decay->add_option("--margin", cfg.margin, "bulk window margin")->capture_default_str();
    decay->add_option("--out", cfg.out, "output path prefix");

    auto* charges = app.add_subcommand("charges", "boundary orbits, Fourier-mode charges and their checks");
    add_lattice_options(charges, cfg);
    add_state_options(charges, cfg);
    charges->add_option("--k", cfg.site, "1-based site whose Z orbit is analysed")->capture_default_str();
    charges->add_option("--steps", cfg.steps, "last time step checked");
    charges->add_option("--out", cfg.out, "output path prefix (default: stdout)");

    auto* check = app.add_subcommand("oracle-check", "compare the fast path with the dense simulator");
    add_lattice_options(check, cfg);
    check->add_option("--steps", cfg.steps, "last time step");
    check->add_option("--seed", cfg.seed, "seed for the random product states")->capture_default_str();
    check->add_option("--states", cfg.states, "number of random states")->capture_default_str();

    // Subcommand-specific defaults, applied before parsing reads the flags.
    fractal->preparse_callback([&](std::size_t) { cfg.steps = 4096; });
    decay->preparse_callback([&](std::size_t) { cfg.steps = 1024; });
    charges->preparse_callback([&](std::size_t) { cfg.steps = 16; });
    check->preparse_callback([&](std::size_t) {
        cfg.n = 8;
        cfg.steps = 32;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitArgument;
    }

    try {
        if (entropy->parsed()) {
            exit_code = cmd_entropy_map(cfg);
        } else if (mutual->parsed()) {
            exit_code = cmd_mutual_info(cfg);
        } else if (fractal->parsed()) {
            exit_code = cmd_fractal(cfg);
        } else if (decay->parsed()) {
            exit_code = cmd_fit_decay(cfg);
        } else if (charges->parsed()) {
            exit_code = cmd_charges(cfg);
        } else if (check->parsed()) {
            exit_code = cmd_oracle_check(cfg);
        }
    } catch (const NumericContractError& e) {
        std::cerr << "numeric contract violation: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitArgument;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitArgument;
    }
    return exit_code;
}
