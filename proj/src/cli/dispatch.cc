// Copyright 2026 The gkprep Authors
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

#include "gkprep/cli/dispatch.h"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkprep/cli/table.h"
#include "gkprep/errors.h"
#include "gkprep/gkp.h"
#include "gkprep/grid.h"
#include "gkprep/monte_carlo.h"
#include "gkprep/optimize.h"
#include "gkprep/repetition.h"
#include "gkprep/version.h"
#include "gkprep/wigner.h"

namespace gkprep::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct OutputOptions {
    std::string format = "csv";
    std::string path;
};

struct NoiseOptions {
    std::optional<double> sigma;
    std::optional<double> db;

    double resolve() const {
        if (db) return sigma_from_db(*db);
        if (sigma) return *sigma;
        throw UsageError("one of --sigma or --db is required");
    }
};

struct SearchFlags {
    double r_cap = kMaxAspectRatio;
    double r_step = 0.01;

    BiasSearchOptions options() const { return {.r_cap = r_cap, .grid_step = r_step}; }
};

struct LengthFlags {
    std::vector<std::int64_t> lengths;
    std::int64_t max_n = kMaxCodeLength;
    int log_points = 60;

    std::vector<std::int64_t> resolve() const {
        return lengths.empty() ? default_code_lengths(max_n, log_points) : lengths;
    }
};

void add_output_options(CLI::App *sub, OutputOptions &o) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.path, "Write results to this file; a <file>.manifest.json records the run");
}

void add_noise_options(CLI::App *sub, NoiseOptions &o) {
    auto *sigma = sub->add_option("--sigma", o.sigma, "Displacement standard deviation");
    auto *db = sub->add_option("--db", o.db, "GKP squeezing in dB (alternative to --sigma)");
    sigma->excludes(db);
}

void add_search_options(CLI::App *sub, SearchFlags &o) {
    sub->add_option("--r-cap", o.r_cap, "Largest aspect ratio scanned, in [1, 15]");
    sub->add_option("--r-step", o.r_step, "Coarse scan spacing in r");
}

void add_length_options(CLI::App *sub, LengthFlags &o) {
    sub->add_option("--n", o.lengths, "Comma-separated odd code lengths (default: odd n <= 101 plus a log grid)")
        ->delimiter(',');
    sub->add_option("--n-max", o.max_n, "Largest code length of the default grid");
    sub->add_option("--log-points", o.log_points, "Number of log-spaced points of the default grid");
}

void add_jobs_option(CLI::App *sub, unsigned &jobs) {
    sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
}

Table sweep_table(const std::string &command, const SweepResult &result) {
    Table t{command, {"sigma", "n", "r_opt", "error_rate", "single_mode_error", "beats_single"}, {}};
    for (const auto &row : result.rows) {
        t.rows.push_back({row.sigma, row.n, row.r_opt, row.error_rate, row.single_mode_error, row.beats_single});
    }
    return t;
}

Cell optional_cell(const std::optional<double> &v) { return v ? Cell{*v} : Cell{}; }

std::string render(const Table &table, const std::string &format) {
    if (format == "json") return dump_json(to_json(table));
    std::ostringstream s;
    write_csv(table, s);
    return s.str();
}

json collect_parameters(const CLI::App *sub) {
    json params = json::object();
    for (const CLI::Option *opt : sub->get_options()) {
        const std::string name = opt->get_single_name();
        if (name.empty() || name == "help") continue;
        if (opt->count() > 0) {
            const auto &res = opt->results();
            std::string joined;
            for (std::size_t i = 0; i < res.size(); ++i) joined += (i ? "," : "") + res[i];
            params[name] = joined;
        } else if (!opt->get_default_str().empty()) {
            params[name] = opt->get_default_str();
        }
    }
    return params;
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw IoError("failed writing '" + path + "'");
}

std::vector<std::string> read_manifest_argv(const std::string &path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open manifest '" + path + "'");
    json manifest;
    try {
        manifest = json::parse(f);
    } catch (const json::exception &e) {
        throw UsageError("malformed manifest '" + path + "': " + e.what());
    }
    if (!manifest.contains("argv") || !manifest["argv"].is_array()) {
        throw UsageError("manifest '" + path + "' has no argv array");
    }
    auto argv = manifest["argv"].get<std::vector<std::string>>();
    if (argv.empty() || argv.front() == "rerun") throw UsageError("manifest '" + path + "' does not name a command");
    return argv;
}

std::vector<std::string> with_output_path(std::vector<std::string> argv, const std::string &path) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < argv.size(); ++i) {
        if (argv[i] == "--out" && i + 1 < argv.size()) {
            ++i;
            continue;
        }
        if (argv[i].rfind("--out=", 0) == 0) continue;
        out.push_back(argv[i]);
    }
    out.push_back("--out");
    out.push_back(path);
    return out;
}

}  // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Biased GKP repetition code analysis under the Gaussian displacement channel", "gkprep"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    OutputOptions output;
    NoiseOptions noise;
    SearchFlags search;
    LengthFlags lengths;
    double r = 1.0;
    std::int64_t n = 1;
    unsigned jobs = 1;

    auto *quadrature = app.add_subcommand("quadrature", "Per-quadrature correction outcomes of one mode");
    quadrature->add_option("--r", r, "Lattice aspect ratio (>= 1)");
    add_noise_options(quadrature, noise);
    add_output_options(quadrature, output);

    auto *channel = app.add_subcommand("channel", "Pauli channel of one corrected GKP mode");
    channel->add_option("--r", r, "Lattice aspect ratio (>= 1)");
    add_noise_options(channel, noise);
    add_output_options(channel, output);

    auto *rep = app.add_subcommand("rep", "Logical channel of the concatenated repetition code");
    rep->add_option("--n", n, "Odd code length")->required();
    rep->add_option("--r", r, "Lattice aspect ratio (>= 1)");
    add_noise_options(rep, noise);
    add_output_options(rep, output);

    auto *optimize = app.add_subcommand("optimize", "Optimal lattice aspect ratio for (n, sigma)");
    optimize->add_option("--n", n, "Odd code length")->required();
    add_noise_options(optimize, noise);
    add_search_options(optimize, search);
    add_output_options(optimize, output);

    auto *crossover = app.add_subcommand("crossover", "Noise level where an n-mode code stops beating one mode");
    crossover->add_option("--n", n, "Odd code length >= 3")->required();
    add_search_options(crossover, search);
    add_output_options(crossover, output);

    std::string sigma_grid = "0.2:0.62:0.02";
    auto *sweep_cmd = app.add_subcommand("sweep", "Optimised error rates over a (sigma, n) grid");
    sweep_cmd->add_option("--sigma", sigma_grid, "Noise grid start:stop:step (inclusive)");
    add_length_options(sweep_cmd, lengths);
    add_search_options(sweep_cmd, search);
    add_jobs_option(sweep_cmd, jobs);
    add_output_options(sweep_cmd, output);

    std::string threshold_grid = "0.58:0.62:0.001";
    auto *threshold = app.add_subcommand("threshold", "Largest grid noise level where some code beats one mode");
    threshold->add_option("--sigma", threshold_grid, "Noise grid start:stop:step (inclusive)");
    add_length_options(threshold, lengths);
    add_search_options(threshold, search);
    add_jobs_option(threshold, jobs);
    add_output_options(threshold, output);

    auto *scaling = app.add_subcommand("scaling", "Optimised bias and error rate versus code length");
    add_noise_options(scaling, noise);
    add_length_options(scaling, lengths);
    add_search_options(scaling, search);
    add_jobs_option(scaling, jobs);
    add_output_options(scaling, output);

    McConfig mc_config;
    mc_config.trials = 1000000;
    auto *mc = app.add_subcommand("mc", "Monte Carlo estimate of the logical channel");
    mc->add_option("--n", mc_config.n, "Odd code length");
    mc->add_option("--r", mc_config.r, "Lattice aspect ratio (>= 1)");
    add_noise_options(mc, noise);
    mc->add_option("--trials", mc_config.trials, "Number of sampled code blocks");
    mc->add_option("--seed", mc_config.seed, "Random seed");
    add_jobs_option(mc, jobs);
    add_output_options(mc, output);

    std::string mode = "blurred";
    std::string q_grid = "-3:3:0.05";
    std::string p_grid = "-3:3:0.05";
    auto *wigner = app.add_subcommand("wigner", "Wigner function of the noisy |0> state on a grid");
    wigner->add_option("--r", r, "Lattice aspect ratio");
    add_noise_options(wigner, noise);
    wigner->add_option("--mode", mode, "blurred: isotropic noise on the rectangular lattice; "
                                       "biased: anisotropic noise on the square lattice; peaks: ideal peak list")
        ->check(CLI::IsMember({"blurred", "biased", "peaks"}));
    wigner->add_option("--q-grid", q_grid, "Position axis start:stop:step");
    wigner->add_option("--p-grid", p_grid, "Momentum axis start:stop:step");
    add_output_options(wigner, output);

    auto *db_cmd = app.add_subcommand("db", "Convert between sigma and GKP squeezing in dB");
    add_noise_options(db_cmd, noise);
    add_output_options(db_cmd, output);

    std::string manifest_path;
    std::string rerun_out;
    auto *rerun = app.add_subcommand("rerun", "Repeat the run recorded in a manifest");
    rerun->add_option("manifest", manifest_path, "Path to a .manifest.json file")->required();
    rerun->add_option("--out", rerun_out, "Write to this file instead of the recorded one");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        if (rerun->parsed()) {
            auto argv = read_manifest_argv(manifest_path);
            if (!rerun_out.empty()) argv = with_output_path(std::move(argv), rerun_out);
            return dispatch(argv, out, err);
        }

        CLI::App *active = app.get_subcommands().front();
        Table table;
        std::optional<std::uint64_t> seed;

        if (active == quadrature) {
            const GkpLattice lattice(r);
            const NoiseChannel ch(noise.resolve());
            const auto o = quadrature_outcomes(lattice, ch);
            table = {"quadrature",
                     {"r", "sigma", "period_q", "period_p", "p_ok_q", "p_err_q", "p_ok_p", "p_err_p", "p_err_p_erfc_bound"},
                     {{r, ch.sigma(), lattice.position_period(), lattice.momentum_period(), o.q.p_ok(), o.q.p_err(),
                       o.p.p_ok(), o.p.p_err(), pz_erfc_approx(lattice, ch)}}};
        } else if (active == channel) {
            const NoiseChannel ch(noise.resolve());
            const auto c = gkp_channel(GkpLattice(r), ch);
            table = {"channel",
                     {"r", "sigma", "p_i", "p_x", "p_y", "p_z", "p_x_marginal", "p_z_marginal"},
                     {{r, ch.sigma(), c.p_i(), c.p_x(), c.p_y(), c.p_z(), c.bit_flip(), c.phase_flip()}}};
        } else if (active == rep) {
            const NoiseChannel ch(noise.resolve());
            const auto c = logical_channel(RepetitionCode(n), gkp_channel(GkpLattice(r), ch));
            table = {"rep",
                     {"n", "r", "sigma", "p_i", "p_x", "p_y", "p_z", "error_rate"},
                     {{n, r, ch.sigma(), c.p_i(), c.p_x(), c.p_y(), c.p_z(), c.error_rate()}}};
        } else if (active == optimize) {
            const auto res = optimize_bias(n, noise.resolve(), search.options());
            if (res.multiple_minima) err << "warning: several local minima on the coarse r grid\n";
            table = {"optimize",
                     {"n", "sigma", "r_opt", "error_rate", "r_cap", "multiple_minima"},
                     {{res.n, res.sigma, res.r_opt, res.error_rate, res.r_cap, res.multiple_minima}}};
        } else if (active == crossover) {
            const auto s = crossover_sigma(n, search.options());
            if (!s) err << "note: no crossover in sigma in [0.2, 0.7]\n";
            table = {"crossover", {"n", "r_cap", "crossover_sigma"}, {{n, search.r_cap, optional_cell(s)}}};
        } else if (active == sweep_cmd) {
            const auto sigmas = GridSpec::parse(sigma_grid).values();
            const auto ns = lengths.resolve();
            table = sweep_table("sweep", sweep(sigmas, ns, search.options(), jobs));
        } else if (active == threshold) {
            const auto grid = GridSpec::parse(threshold_grid);
            const auto sigmas = grid.values();
            const auto ns = lengths.resolve();
            const auto est = estimate_threshold(sigmas, ns, search.options(), jobs);
            table = {"threshold",
                     {"threshold_sigma", "sigma_grid", "n_count", "n_max", "r_cap"},
                     {{optional_cell(est.sigma), grid.to_string(), static_cast<std::int64_t>(ns.size()),
                       *std::max_element(ns.begin(), ns.end()), search.r_cap}}};
        } else if (active == scaling) {
            const auto ns = lengths.resolve();
            table = sweep_table("scaling", scaling_curve(noise.resolve(), ns, search.options(), jobs));
        } else if (active == mc) {
            mc_config.sigma = noise.resolve();
            const auto est = simulate_rep_code(mc_config, jobs);
            const auto analytic = logical_channel(RepetitionCode(mc_config.n),
                                                  gkp_channel(GkpLattice(mc_config.r), NoiseChannel(mc_config.sigma)));
            const double expected[] = {analytic.p_i(), analytic.p_x(), analytic.p_y(), analytic.p_z()};
            table = {"mc", {"outcome", "count", "probability", "standard_error", "analytic"}, {}};
            for (int i = 0; i < 4; ++i) {
                const Pauli p = static_cast<Pauli>(i);
                table.rows.push_back({std::string(1, pauli_name(p)), est.counts[static_cast<std::size_t>(i)],
                                      est.probability(p), est.standard_error(p), expected[i]});
            }
            seed = mc_config.seed;
        } else if (active == wigner) {
            const double sigma = noise.resolve();
            const auto q_axis = GridSpec::parse(q_grid).values();
            const auto p_axis = GridSpec::parse(p_grid).values();
            if (mode == "peaks") {
                const PhaseSpaceWindow window{q_axis.front(), q_axis.back(), p_axis.front(), p_axis.back()};
                table = {"wigner", {"n", "m", "q", "p", "weight"}, {}};
                for (const auto &pk : ideal_peaks(r, window)) {
                    table.rows.push_back({static_cast<std::int64_t>(pk.n), static_cast<std::int64_t>(pk.m), pk.q,
                                          pk.p, pk.weight});
                }
            } else {
                const auto grid = mode == "biased" ? biased_blur_square_grid(r, sigma, q_axis, p_axis)
                                                   : blurred_grid(r, sigma, q_axis, p_axis);
                table.command = "wigner";
                table.columns.push_back("p\\q");
                for (double q : q_axis) table.columns.push_back(format_double(q));
                for (std::size_t ip = 0; ip < p_axis.size(); ++ip) {
                    std::vector<Cell> row{p_axis[ip]};
                    for (std::size_t iq = 0; iq < q_axis.size(); ++iq) row.emplace_back(grid.at(iq, ip));
                    table.rows.push_back(std::move(row));
                }
            }
        } else if (active == db_cmd) {
            const double sigma = noise.resolve();
            table = {"db", {"db", "sigma"}, {{db_from_sigma(sigma), sigma}}};
        }

        const std::string text = render(table, output.format);
        if (output.path.empty()) {
            out << text;
            return static_cast<int>(ExitCode::ok);
        }
        write_file(output.path, text);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        json manifest = {{"argv", args},
                         {"artifact_version", kVersion},
                         {"command", table.command},
                         {"format", output.format},
                         {"output", output.path},
                         {"parameters", collect_parameters(active)},
                         {"wall_clock_seconds", seconds}};
        if (seed) manifest["seed"] = *seed;
        write_file(output.path + ".manifest.json", dump_json(manifest));
        return static_cast<int>(ExitCode::ok);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    } catch (const EvenCodeLength &e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::even_code_length);
    } catch (const InvalidParameter &e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::invalid_parameter);
    } catch (const RangeViolation &e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::out_of_range);
    } catch (const SeriesTruncationError &e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::numerical);
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::io);
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::internal);
    }
}

}  // namespace gkprep::cli
