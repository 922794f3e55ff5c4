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

#ifndef JJVAR_ENSEMBLE_HPP
#define JJVAR_ENSEMBLE_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "jjvar/conductance_table.hpp"
#include "jjvar/josephson.hpp"
#include "jjvar/params.hpp"
#include "jjvar/random_field.hpp"
#include "jjvar/rng.hpp"
#include "jjvar/stats.hpp"

namespace jjvar {

inline constexpr double default_thickness_floor_nm = 0.2;

struct EnsembleConfig {
    JunctionParams junction{};
    RoughnessParams rough{};
    GridSpec grid{};
    long n_samples = 0;
    std::uint64_t master_seed = 0;
    double thickness_floor_nm = default_thickness_floor_nm;
};

struct SampleRecord {
    long index = 0;
    std::uint64_t seed_top = 0;
    std::uint64_t seed_bottom = 0;
    double ej_ghz = 0.0;
};

struct EnsembleResult {
    EnsembleConfig config{};
    std::vector<SampleRecord> samples;
    double elapsed_s = 0.0;
    bool wraparound_warning = false;
};

// stream indices for counter-based seed derivation
inline constexpr std::uint64_t seed_stream_top = 0;
inline constexpr std::uint64_t seed_stream_bottom = 1;
inline constexpr std::uint64_t seed_stream_sweep_cell = 0xA5;

inline std::uint64_t sweep_cell_seed(std::uint64_t master, std::uint64_t cell_index) {
    return derive_seed(master, cell_index, seed_stream_sweep_cell);
}

/// Runs a deterministic Monte Carlo ensemble: per sample, two sub-seeds are
/// derived from (master_seed, index), the two interface fields synthesized,
/// the thickness map built and E_J computed through the shared conductance
/// table. samples[i] is a pure function of the config, so the result is
/// bit-identical for any worker count or scheduling order. The first failing
/// sample aborts the whole run.
inline EnsembleResult run_ensemble(const EnsembleConfig& config, int n_workers = 0) {
    const auto t0 = std::chrono::steady_clock::now();

    validate(config.junction, config.rough, config.grid);
    if (config.n_samples < 1) {
        throw ValidationError({"n_samples must be >= 1, got " +
                               std::to_string(config.n_samples)});
    }
    if (!(config.thickness_floor_nm > 0.0)) {
        throw ValidationError({"thickness_floor_nm must be > 0"});
    }

    bool wraparound = false;
    {
        // fail fast on synthesis preconditions before paying for the table
        FieldSynthesizer probe(config.grid, config.rough);
        wraparound = probe.wraparound_warning();
    }

    const ConductanceTable table =
        ConductanceTable::build(config.junction, config.rough, config.thickness_floor_nm);

    if (n_workers <= 0) {
        n_workers = static_cast<int>(std::thread::hardware_concurrency());
        if (n_workers <= 0) n_workers = 1;
    }
    n_workers = static_cast<int>(
        std::min<long>(n_workers, config.n_samples));

    EnsembleResult result;
    result.config = config;
    result.samples.resize(static_cast<std::size_t>(config.n_samples));

    std::atomic<long> next_index{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        try {
            FieldSynthesizer synth(config.grid, config.rough);
            for (;;) {
                const long i = next_index.fetch_add(1);
                if (i >= config.n_samples || failed.load()) break;
                try {
                    const std::uint64_t seed_top =
                        derive_seed(config.master_seed, static_cast<std::uint64_t>(i),
                                    seed_stream_top);
                    const std::uint64_t seed_bottom =
                        derive_seed(config.master_seed, static_cast<std::uint64_t>(i),
                                    seed_stream_bottom);
                    const HeightField top = synth.sample(seed_top);
                    const HeightField bottom = synth.sample(seed_bottom);
                    const ThicknessMap map =
                        thickness_map(config.junction.nominal_thickness_nm, top, bottom,
                                      config.thickness_floor_nm);
                    const double ej = ej_rough(map, table, config.junction);
                    if (!(ej > 0.0)) {
                        throw ComputationError("computed E_J is not positive");
                    }
                    result.samples[static_cast<std::size_t>(i)] =
                        SampleRecord{i, seed_top, seed_bottom, ej};
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) {
                        first_error = std::make_exception_ptr(EnsembleError(i, e.what()));
                    }
                    failed.store(true);
                    break;
                }
            }
        } catch (const std::exception& e) { // synthesizer construction
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) {
                first_error = std::make_exception_ptr(ComputationError(e.what()));
            }
            failed.store(true);
        }
    };

    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    if (first_error) std::rethrow_exception(first_error);

    result.wraparound_warning = wraparound;
    result.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

struct SweepCell {
    double sigma_nm = 0.0;
    double xi_nm = 0.0;
    std::uint64_t master_seed = 0;
    long n = 0;
    LogNormalFit fit{};
};

/// One ensemble per (sigma, xi) pair, Table-I layout (xi as the slow index).
/// Each cell gets its own derived master seed so cells are independent and
/// the whole sweep is reproducible from the base seed alone.
inline std::vector<SweepCell> run_sweep(const EnsembleConfig& base,
                                        const std::vector<double>& sigmas,
                                        const std::vector<double>& xis, int n_workers = 0) {
    if (sigmas.empty() || xis.empty()) {
        throw ValidationError({"sweep requires non-empty sigma and xi lists"});
    }
    std::vector<SweepCell> cells;
    cells.reserve(sigmas.size() * xis.size());
    std::uint64_t cell_index = 0;
    for (double xi : xis) {
        for (double sigma : sigmas) {
            EnsembleConfig cfg = base;
            cfg.rough = RoughnessParams{sigma, xi};
            cfg.master_seed = sweep_cell_seed(base.master_seed, cell_index);
            const EnsembleResult r = run_ensemble(cfg, n_workers);
            std::vector<double> ej(r.samples.size());
            for (std::size_t i = 0; i < r.samples.size(); ++i) ej[i] = r.samples[i].ej_ghz;
            cells.push_back(SweepCell{sigma, xi, cfg.master_seed, cfg.n_samples,
                                      fit_lognormal(ej)});
            ++cell_index;
        }
    }
    return cells;
}

} // namespace jjvar

#endif // JJVAR_ENSEMBLE_HPP
