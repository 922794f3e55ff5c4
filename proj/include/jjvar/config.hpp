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

#ifndef JJVAR_CONFIG_HPP
#define JJVAR_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "jjvar/ensemble.hpp"
#include "jjvar/errors.hpp"
#include "jjvar/params.hpp"

namespace jjvar {

/// The run configuration file: strict JSON, unknown keys rejected, all
/// required keys present. Grid pitch is derived from the junction size so
/// nx*dx = L_x holds by construction.
struct RunConfig {
    JunctionParams junction{};
    RoughnessParams rough{};
    int nx = 0;
    int ny = 0;
    long n_samples = 0;
    std::uint64_t master_seed = 0;
    std::optional<double> e_c_ghz;
    int n_bins = 50;

    GridSpec grid() const { return GridSpec::for_junction(junction, nx, ny); }

    EnsembleConfig ensemble_config() const {
        return EnsembleConfig{junction, rough, grid(), n_samples, master_seed,
                              default_thickness_floor_nm};
    }

    /// Canonical echo of the effective configuration (after any CLI
    /// overrides); this is what gets hashed and embedded in output headers.
    nlohmann::json to_json() const {
        nlohmann::json j;
        j["junction"] = {{"fermi_energy_eV", junction.fermi_energy_ev},
                         {"barrier_height_eV", junction.barrier_height_ev},
                         {"nominal_thickness_nm", junction.nominal_thickness_nm},
                         {"gap_meV", junction.gap_mev},
                         {"width_x_nm", junction.width_x_nm},
                         {"width_y_nm", junction.width_y_nm}};
        j["roughness"] = {{"sigma_nm", rough.sigma_nm}, {"xi_nm", rough.xi_nm}};
        j["grid"] = {{"nx", nx}, {"ny", ny}};
        j["ensemble"] = {{"n_samples", n_samples}, {"master_seed", master_seed}};
        nlohmann::json analysis;
        if (e_c_ghz) analysis["e_c_ghz"] = *e_c_ghz;
        analysis["n_bins"] = n_bins;
        j["analysis"] = analysis;
        return j;
    }

    static RunConfig from_json(const nlohmann::json& j);
    static RunConfig load(const std::filesystem::path& path);
};

namespace detail {

inline void check_keys(const nlohmann::json& j, const std::string& section,
                       const std::set<std::string>& required,
                       const std::set<std::string>& optional,
                       std::vector<std::string>& violations) {
    if (!j.is_object()) {
        violations.push_back("config section '" + section + "' must be a JSON object");
        return;
    }
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!required.count(key) && !optional.count(key)) {
            violations.push_back("unknown key '" + key + "' in section '" + section + "'");
        }
    }
    for (const auto& key : required) {
        if (!j.contains(key)) {
            violations.push_back("missing required key '" + key + "' in section '" + section +
                                 "'");
        }
    }
}

inline double get_number(const nlohmann::json& j, const std::string& section,
                         const std::string& key, std::vector<std::string>& violations) {
    if (!j.contains(key)) return 0.0; // already reported as missing
    if (!j.at(key).is_number()) {
        violations.push_back("key '" + key + "' in section '" + section + "' must be a number");
        return 0.0;
    }
    return j.at(key).get<double>();
}

} // namespace detail

inline RunConfig RunConfig::from_json(const nlohmann::json& j) {
    std::vector<std::string> v;
    detail::check_keys(j, "(root)", {"junction", "roughness", "grid", "ensemble"}, {"analysis"},
                       v);

    RunConfig cfg;
    if (j.contains("junction")) {
        const auto& s = j.at("junction");
        detail::check_keys(s, "junction",
                           {"fermi_energy_eV", "barrier_height_eV", "nominal_thickness_nm",
                            "gap_meV", "width_x_nm", "width_y_nm"},
                           {}, v);
        cfg.junction.fermi_energy_ev = detail::get_number(s, "junction", "fermi_energy_eV", v);
        cfg.junction.barrier_height_ev =
            detail::get_number(s, "junction", "barrier_height_eV", v);
        cfg.junction.nominal_thickness_nm =
            detail::get_number(s, "junction", "nominal_thickness_nm", v);
        cfg.junction.gap_mev = detail::get_number(s, "junction", "gap_meV", v);
        cfg.junction.width_x_nm = detail::get_number(s, "junction", "width_x_nm", v);
        cfg.junction.width_y_nm = detail::get_number(s, "junction", "width_y_nm", v);
    }
    if (j.contains("roughness")) {
        const auto& s = j.at("roughness");
        detail::check_keys(s, "roughness", {"sigma_nm", "xi_nm"}, {}, v);
        cfg.rough.sigma_nm = detail::get_number(s, "roughness", "sigma_nm", v);
        cfg.rough.xi_nm = detail::get_number(s, "roughness", "xi_nm", v);
    }
    if (j.contains("grid")) {
        const auto& s = j.at("grid");
        detail::check_keys(s, "grid", {"nx", "ny"}, {}, v);
        cfg.nx = static_cast<int>(detail::get_number(s, "grid", "nx", v));
        cfg.ny = static_cast<int>(detail::get_number(s, "grid", "ny", v));
    }
    if (j.contains("ensemble")) {
        const auto& s = j.at("ensemble");
        detail::check_keys(s, "ensemble", {"n_samples", "master_seed"}, {}, v);
        cfg.n_samples = static_cast<long>(detail::get_number(s, "ensemble", "n_samples", v));
        if (s.contains("master_seed")) {
            const auto& seed = s.at("master_seed");
            if (seed.is_number_unsigned()) {
                cfg.master_seed = seed.get<std::uint64_t>();
            } else if (seed.is_number_integer() && seed.get<std::int64_t>() >= 0) {
                cfg.master_seed = static_cast<std::uint64_t>(seed.get<std::int64_t>());
            } else {
                v.push_back(
                    "key 'master_seed' in section 'ensemble' must be a non-negative integer");
            }
        }
    }
    if (j.contains("analysis")) {
        const auto& s = j.at("analysis");
        detail::check_keys(s, "analysis", {}, {"e_c_ghz", "n_bins"}, v);
        if (s.contains("e_c_ghz")) cfg.e_c_ghz = detail::get_number(s, "analysis", "e_c_ghz", v);
        if (s.contains("n_bins")) {
            cfg.n_bins = static_cast<int>(detail::get_number(s, "analysis", "n_bins", v));
        }
    }

    if (!v.empty()) throw ValidationError(std::move(v));

    // domain validation on top of schema validation
    validate(cfg.junction, cfg.rough, cfg.grid());
    if (cfg.n_samples < 1) {
        throw ValidationError({"ensemble.n_samples must be >= 1"});
    }
    if (cfg.n_bins < 2) {
        throw ValidationError({"analysis.n_bins must be >= 2"});
    }
    if (cfg.e_c_ghz && !(*cfg.e_c_ghz > 0.0)) {
        throw ValidationError({"analysis.e_c_ghz must be > 0"});
    }
    return cfg;
}

inline RunConfig RunConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError({"config file " + path.string() + " is not valid JSON: " +
                               e.what()});
    }
    return from_json(j);
}

} // namespace jjvar

#endif // JJVAR_CONFIG_HPP
