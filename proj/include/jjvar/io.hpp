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

#ifndef JJVAR_IO_HPP
#define JJVAR_IO_HPP

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "jjvar/ensemble.hpp"
#include "jjvar/errors.hpp"
#include "jjvar/field_statistics.hpp"
#include "jjvar/random_field.hpp"
#include "jjvar/sha256.hpp"
#include "jjvar/stats.hpp"
#include "jjvar/version.hpp"

namespace jjvar::io {

/// Locale-independent shortest round-trip formatting ('.' decimal separator
/// regardless of environment).
inline std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

inline std::string config_hash(const nlohmann::json& config) {
    return Sha256::hash_hex(config.dump());
}

// ---------------------------------------------------------------------------
// renderers: every export is built as a string so checksums and byte-level
// determinism checks operate on exactly what lands on disk

inline std::string render_field_csv(const HeightField& field, const RoughnessParams& rough) {
    std::string out;
    out.reserve(field.values.size() * 20);
    out += "# jjvar field\n";
    out += "# nx=" + std::to_string(field.grid.nx) + ",ny=" + std::to_string(field.grid.ny) +
           ",dx_nm=" + format_double(field.grid.dx_nm) +
           ",dy_nm=" + format_double(field.grid.dy_nm) +
           ",sigma_nm=" + format_double(rough.sigma_nm) +
           ",xi_nm=" + format_double(rough.xi_nm) + ",seed=" + std::to_string(field.seed) + "\n";
    for (int iy = 0; iy < field.grid.ny; ++iy) {
        for (int ix = 0; ix < field.grid.nx; ++ix) {
            if (ix) out += ',';
            out += format_double(field.at(ix, iy));
        }
        out += '\n';
    }
    return out;
}

inline std::string render_field_stats_json(const FieldStatistics& stats, std::uint64_t seed) {
    nlohmann::json j;
    j["seed"] = seed;
    j["rms_nm"] = stats.rms_nm;
    nlohmann::json radial = nlohmann::json::array();
    for (std::size_t i = 0; i < stats.radial.r_nm.size(); ++i) {
        radial.push_back({stats.radial.r_nm[i], stats.radial.c_nm2[i]});
    }
    j["radial_autocovariance_r_nm_c_nm2"] = radial;
    return j.dump(2) + "\n";
}

inline std::string render_samples_csv(const EnsembleResult& result,
                                      const nlohmann::json& config) {
    std::string out;
    out.reserve(result.samples.size() * 48 + 512);
    out += "# jjvar samples\n";
    out += "# version=" + std::string(version) + "\n";
    out += "# config=" + config.dump() + "\n";
    out += "# config_hash=" + config_hash(config) + "\n";
    out += "# master_seed=" + std::to_string(result.config.master_seed) + "\n";
    out += "sample_index,seed_top,seed_bottom,ej_over_h_ghz\n";
    for (const auto& s : result.samples) {
        out += std::to_string(s.index) + ',' + std::to_string(s.seed_top) + ',' +
               std::to_string(s.seed_bottom) + ',' + format_double(s.ej_ghz) + '\n';
    }
    return out;
}

inline std::string render_fit_json(const LogNormalFit& fit, const std::string& cfg_hash,
                                   const std::optional<TransmonEstimate>& transmon) {
    nlohmann::json j;
    j["n"] = fit.n;
    j["mu_j"] = fit.mu_j;
    j["sigma_j"] = fit.sigma_j;
    j["mean_ej_ghz"] = fit.mean_ej_ghz;
    j["std_ej_ghz"] = fit.std_ej_ghz;
    j["raw_mean_ghz"] = fit.raw_mean_ghz;
    j["raw_std_ghz"] = fit.raw_std_ghz;
    j["ks_statistic"] = fit.ks_statistic;
    j["config_hash"] = cfg_hash;
    if (transmon) {
        j["transmon"] = {{"e_c_ghz", transmon->e_c_ghz},
                         {"f01_mean_ghz", transmon->f01_mean_ghz},
                         {"f01_std_ghz", transmon->f01_std_ghz}};
    }
    return j.dump(2) + "\n";
}

inline std::string render_histogram_csv(const Histogram& hist, const LogNormalFit& fit,
                                        const std::string& cfg_hash) {
    std::string out;
    out += "# jjvar histogram\n";
    out += "# config_hash=" + cfg_hash + "\n";
    out += "# mu_j=" + format_double(fit.mu_j) + ",sigma_j=" + format_double(fit.sigma_j) + "\n";
    out += "bin_center_ghz,density_per_ghz,lognormal_fit_density_per_ghz\n";
    for (std::size_t b = 0; b < hist.bin_centers.size(); ++b) {
        out += format_double(hist.bin_centers[b]) + ',' + format_double(hist.densities[b]) + ',' +
               format_double(lognormal_pdf(hist.bin_centers[b], fit.mu_j, fit.sigma_j)) + '\n';
    }
    return out;
}

struct AbSweepRow {
    double d_nm;
    double ej_ab_ghz;
    double ej_short_junction_ghz;
};

inline std::string render_ab_csv(const std::vector<AbSweepRow>& rows,
                                 const nlohmann::json& config) {
    std::string out;
    out += "# jjvar ab validation sweep\n";
    out += "# version=" + std::string(version) + "\n";
    out += "# config=" + config.dump() + "\n";
    out += "d_nm,ej_ab_ghz,ej_short_junction_ghz,ratio\n";
    for (const auto& r : rows) {
        out += format_double(r.d_nm) + ',' + format_double(r.ej_ab_ghz) + ',' +
               format_double(r.ej_short_junction_ghz) + ',' +
               format_double(r.ej_short_junction_ghz / r.ej_ab_ghz) + '\n';
    }
    return out;
}

inline std::string render_sweep_csv(const std::vector<SweepCell>& cells,
                                    const nlohmann::json& config, std::uint64_t master_seed) {
    std::string out;
    out += "# jjvar sweep (Table-I layout: xi outer, sigma inner)\n";
    out += "# version=" + std::string(version) + "\n";
    out += "# config=" + config.dump() + "\n";
    out += "# config_hash=" + config_hash(config) + "\n";
    out += "# master_seed=" + std::to_string(master_seed) + "\n";
    out += "sigma_nm,xi_nm,n,cell_seed,mean_ej_ghz,std_ej_ghz,raw_mean_ghz,raw_std_ghz,"
           "mu_j,sigma_j\n";
    for (const auto& c : cells) {
        out += format_double(c.sigma_nm) + ',' + format_double(c.xi_nm) + ',' +
               std::to_string(c.n) + ',' + std::to_string(c.master_seed) + ',' +
               format_double(c.fit.mean_ej_ghz) + ',' + format_double(c.fit.std_ej_ghz) + ',' +
               format_double(c.fit.raw_mean_ghz) + ',' + format_double(c.fit.raw_std_ghz) + ',' +
               format_double(c.fit.mu_j) + ',' + format_double(c.fit.sigma_j) + '\n';
    }
    return out;
}

struct ManifestEntry {
    std::string path; // relative to the output directory
    std::string sha256;
};

inline std::string render_manifest(const std::string& command, const std::string& cfg_hash,
                                   std::uint64_t master_seed, double wall_time_s,
                                   const std::vector<ManifestEntry>& outputs) {
    nlohmann::json j;
    j["tool"] = "jjvar";
    j["version"] = version;
    j["command"] = command;
    j["config_hash"] = cfg_hash;
    j["master_seed"] = master_seed;
    j["wall_time_s"] = wall_time_s;
    nlohmann::json outs = nlohmann::json::array();
    for (const auto& o : outputs) outs.push_back({{"path", o.path}, {"sha256", o.sha256}});
    j["outputs"] = outs;
    return j.dump(2) + "\n";
}

/// Collects written files so a failing run can remove its partial outputs.
class OutputSet {
  public:
    explicit OutputSet(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// Writes content, records it in the manifest list, returns its checksum.
    void emit(const std::string& name, const std::string& content) {
        const auto path = dir_ / name;
        write_text_file(path, content);
        written_.push_back(path);
        entries_.push_back(ManifestEntry{name, Sha256::hash_hex(content)});
    }

    void finalize(const std::string& command, const std::string& cfg_hash,
                  std::uint64_t master_seed, double wall_time_s) {
        write_text_file(dir_ / "manifest.json",
                        render_manifest(command, cfg_hash, master_seed, wall_time_s, entries_));
        written_.clear();
    }

    /// Removes everything written so far (failure path).
    void rollback() {
        for (const auto& p : written_) {
            std::error_code ec;
            std::filesystem::remove(p, ec);
        }
        written_.clear();
        entries_.clear();
    }

    const std::vector<ManifestEntry>& entries() const { return entries_; }

  private:
    std::filesystem::path dir_;
    std::vector<std::filesystem::path> written_;
    std::vector<ManifestEntry> entries_;
};

} // namespace jjvar::io

#endif // JJVAR_IO_HPP
