// Copyright 2026 The jjvar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jjvar/config.hpp"
#include "jjvar/ensemble.hpp"
#include "jjvar/field_statistics.hpp"
#include "jjvar/io.hpp"
#include "jjvar/josephson.hpp"
#include "jjvar/random_field.hpp"
#include "jjvar/stats.hpp"
#include "jjvar/version.hpp"

namespace {

// exit codes: 0 success, 2 validation, 3 computation, 4 I/O
constexpr int exit_validation = 2;
constexpr int exit_computation = 3;
constexpr int exit_io = 4;

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<long> samples;
    int workers = 0;
};

void add_common(CLI::App* sub, CommonArgs& args) {
    sub->add_option("--config", args.config_path, "run configuration (JSON)")->required();
    sub->add_option("--out", args.out_dir, "output directory")->required();
    sub->add_option("--seed", args.seed, "override the master seed from the config");
    sub->add_option("--samples", args.samples, "override ensemble.n_samples from the config");
    sub->add_option("--workers", args.workers,
                    "worker threads (default: available parallelism; results do not "
                    "depend on this)");
}

jjvar::RunConfig load_config(const CommonArgs& args) {
    jjvar::RunConfig cfg = jjvar::RunConfig::load(args.config_path);
    if (args.seed) cfg.master_seed = *args.seed;
    if (args.samples) {
        cfg.n_samples = *args.samples;
        if (cfg.n_samples < 1) {
            throw jjvar::ValidationError({"--samples must be >= 1"});
        }
    }
    return cfg;
}

std::filesystem::path prepare_out_dir(const CommonArgs& args) {
    std::filesystem::path dir(args.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw jjvar::IoError("cannot create output directory " + dir.string());
    return dir;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_field(const CommonArgs& args) {
    const auto t0 = std::chrono::steady_clock::now();
    const jjvar::RunConfig cfg = load_config(args);
    const std::uint64_t seed = args.seed ? *args.seed : cfg.master_seed;
    const auto dir = prepare_out_dir(args);

    jjvar::FieldSynthesizer synth(cfg.grid(), cfg.rough);
    if (synth.wraparound_warning()) {
        std::cerr << "warning: xi > L/4; periodic wrap-around distorts the field statistics\n";
    }
    const jjvar::HeightField field = synth.sample(seed);
    const jjvar::FieldStatistics stats = jjvar::estimate_statistics(field);

    jjvar::io::OutputSet outputs(dir);
    try {
        outputs.emit("field_" + std::to_string(seed) + ".csv",
                     jjvar::io::render_field_csv(field, cfg.rough));
        outputs.emit("field_" + std::to_string(seed) + "_stats.json",
                     jjvar::io::render_field_stats_json(stats, seed));
        outputs.finalize("field", jjvar::io::config_hash(cfg.to_json()), seed,
                         seconds_since(t0));
    } catch (...) {
        outputs.rollback();
        throw;
    }
    return 0;
}

int cmd_validate_ab(const CommonArgs& args, double d_min, double d_max, int n_points) {
    const auto t0 = std::chrono::steady_clock::now();
    const jjvar::RunConfig cfg = load_config(args);
    if (!(d_min > 0.0) || !(d_min < d_max)) {
        throw jjvar::ValidationError({"validate-ab requires 0 < d_min < d_max, got d_min = " +
                                      std::to_string(d_min) + ", d_max = " +
                                      std::to_string(d_max)});
    }
    if (n_points < 1) {
        throw jjvar::ValidationError({"validate-ab requires at least one point"});
    }
    const auto dir = prepare_out_dir(args);

    std::vector<jjvar::io::AbSweepRow> rows;
    rows.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double d =
            (n_points == 1) ? d_min : d_min + (d_max - d_min) * i / (n_points - 1);
        rows.push_back({d, jjvar::ej_uniform(d, cfg.junction),
                        jjvar::ej_short_junction_uniform(d, cfg.junction)});
    }

    jjvar::io::OutputSet outputs(dir);
    try {
        outputs.emit("ab_sweep.csv", jjvar::io::render_ab_csv(rows, cfg.to_json()));
        outputs.finalize("validate-ab", jjvar::io::config_hash(cfg.to_json()), cfg.master_seed,
                         seconds_since(t0));
    } catch (...) {
        outputs.rollback();
        throw;
    }
    return 0;
}

int cmd_ensemble(const CommonArgs& args) {
    const auto t0 = std::chrono::steady_clock::now();
    const jjvar::RunConfig cfg = load_config(args);
    const auto dir = prepare_out_dir(args);

    const jjvar::EnsembleResult result = jjvar::run_ensemble(cfg.ensemble_config(), args.workers);
    if (result.wraparound_warning) {
        std::cerr << "warning: xi > L/4; periodic wrap-around distorts the field statistics\n";
    }

    std::vector<double> ej(result.samples.size());
    for (std::size_t i = 0; i < result.samples.size(); ++i) ej[i] = result.samples[i].ej_ghz;

    // the log-normal fit needs at least 10 samples; smaller runs still emit
    // their samples and manifest
    std::optional<jjvar::LogNormalFit> fit;
    std::optional<jjvar::TransmonEstimate> transmon;
    if (ej.size() >= 10) {
        fit = jjvar::fit_lognormal(ej);
        if (cfg.e_c_ghz) {
            transmon = jjvar::transmon_frequency(fit->mean_ej_ghz, fit->std_ej_ghz, *cfg.e_c_ghz);
        }
    } else {
        std::cerr << "note: n_samples < 10, skipping the log-normal fit and histogram\n";
    }

    const auto config_json = cfg.to_json();
    const std::string cfg_hash = jjvar::io::config_hash(config_json);

    jjvar::io::OutputSet outputs(dir);
    try {
        outputs.emit("samples.csv", jjvar::io::render_samples_csv(result, config_json));
        if (fit) {
            outputs.emit("fit.json", jjvar::io::render_fit_json(*fit, cfg_hash, transmon));
            outputs.emit("histogram.csv",
                         jjvar::io::render_histogram_csv(jjvar::histogram(ej, cfg.n_bins), *fit,
                                                         cfg_hash));
        }
        outputs.finalize("ensemble", cfg_hash, cfg.master_seed, seconds_since(t0));
    } catch (...) {
        outputs.rollback();
        throw;
    }

    if (fit) {
        std::cout << "ensemble: n = " << fit->n << ", E_J/h = " << fit->mean_ej_ghz << " +- "
                  << fit->std_ej_ghz << " GHz (fitted)";
        if (transmon) {
            std::cout << ", f01 = " << transmon->f01_mean_ghz << " +- " << transmon->f01_std_ghz
                      << " GHz";
        }
        std::cout << "\n";
    } else {
        std::cout << "ensemble: n = " << ej.size() << " sample(s) written\n";
    }
    return 0;
}

int cmd_sweep(const CommonArgs& args, const std::vector<double>& sigmas,
              const std::vector<double>& xis) {
    const auto t0 = std::chrono::steady_clock::now();
    const jjvar::RunConfig cfg = load_config(args);
    if (sigmas.empty() || xis.empty()) {
        throw jjvar::ValidationError({"sweep requires non-empty --sigmas and --xis lists"});
    }
    const auto dir = prepare_out_dir(args);

    const auto cells = jjvar::run_sweep(cfg.ensemble_config(), sigmas, xis, args.workers);

    jjvar::io::OutputSet outputs(dir);
    try {
        outputs.emit("sweep.csv",
                     jjvar::io::render_sweep_csv(cells, cfg.to_json(), cfg.master_seed));
        outputs.finalize("sweep", jjvar::io::config_hash(cfg.to_json()), cfg.master_seed,
                         seconds_since(t0));
    } catch (...) {
        outputs.rollback();
        throw;
    }

    for (const auto& c : cells) {
        std::cout << "sigma = " << c.sigma_nm << " nm, xi = " << c.xi_nm
                  << " nm: E_J/h = " << c.fit.mean_ej_ghz << " +- " << c.fit.std_ej_ghz
                  << " GHz (n = " << c.n << ")\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"jjvar: Josephson-energy variability of rough-interface tunnel junctions"};
    app.set_version_flag("--version", std::string("jjvar ") + jjvar::version);
    app.require_subcommand(1);

    CommonArgs field_args, ab_args, ens_args, sweep_args;

    CLI::App* field = app.add_subcommand(
        "field", "synthesize one interface roughness realization and export it");
    add_common(field, field_args);

    CLI::App* ab = app.add_subcommand(
        "validate-ab",
        "uniform-barrier sweep comparing the AB relation with the short-junction formula");
    add_common(ab, ab_args);
    double d_min = 0.5, d_max = 1.5;
    int n_points = 21;
    ab->add_option("--d-min", d_min, "smallest barrier width (nm)");
    ab->add_option("--d-max", d_max, "largest barrier width (nm)");
    ab->add_option("--points", n_points, "number of widths");

    CLI::App* ens = app.add_subcommand(
        "ensemble", "Monte Carlo ensemble: samples, log-normal fit, histogram");
    add_common(ens, ens_args);

    CLI::App* sweep = app.add_subcommand("sweep", "ensembles over a (sigma, xi) grid");
    add_common(sweep, sweep_args);
    std::vector<double> sigmas, xis;
    sweep->add_option("--sigmas", sigmas, "RMS roughness values (nm)")
        ->required()
        ->delimiter(',');
    sweep->add_option("--xis", xis, "correlation lengths (nm)")->required()->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (field->parsed()) return cmd_field(field_args);
        if (ab->parsed()) return cmd_validate_ab(ab_args, d_min, d_max, n_points);
        if (ens->parsed()) return cmd_ensemble(ens_args);
        if (sweep->parsed()) return cmd_sweep(sweep_args, sigmas, xis);
    } catch (const jjvar::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return exit_validation;
    } catch (const jjvar::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return exit_io;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return exit_io;
    } catch (const jjvar::ComputationError& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return exit_computation;
    }
    return 0;
}
