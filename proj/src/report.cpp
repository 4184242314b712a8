// SPDX-License-Identifier: Apache-2.0
#include "holobeam/report.hpp"

#include <fstream>
#include <json.hpp>

#include "holobeam/io.hpp"

namespace holobeam {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kToolVersion = "0.1.0";

std::ofstream open_file(const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);  // '\n' endings on all platforms
    if (!out) throw IoError("cannot open for writing: " + file.string());
    return out;
}

std::string digest_hex(std::uint64_t digest) {
    char buffer[19];
    std::snprintf(buffer, sizeof(buffer), "0x%016llx", static_cast<unsigned long long>(digest));
    return buffer;
}

Json scenario_json(const ScenarioParams& p) {
    Json j;
    j["frequency_ghz"] = p.frequency_ghz;
    j["n_bs"] = p.n_bs;
    j["m_irs"] = p.m_irs;
    j["bs_center_m"] = {p.bs_center_x, p.bs_center_y};
    j["bs_axis_clockwise_from_y_deg"] = p.bs_axis_clockwise_from_y_deg;
    j["irs_center_m"] = {p.irs_center_x, p.irs_center_y};
    j["irs_normal_from_x_deg"] = p.irs_normal_from_x_deg;
    j["user_m"] = {p.user_x, p.user_y};
    j["bs_spacing_wavelengths"] = p.bs_spacing_wavelengths;
    j["irs_spacing_wavelengths"] = p.irs_spacing_wavelengths;
    j["amplitude_model"] = p.amplitude_model;
    return j;
}

Json meta_common(const ScenarioParams& scenario_params, const RunOptions& options,
                 std::uint64_t digest) {
    Json meta;
    meta["tool"] = "holobeam";
    meta["version"] = kToolVersion;
    meta["master_seed"] = options.master_seed;
    meta["trials"] = options.trials;
    meta["iterations"] = options.iterations;
    meta["normalization"] = "received power |y|^2 divided by N_BS";
    meta["scenario"] = scenario_json(scenario_params);
    meta["scenario_digest"] = digest_hex(digest);
    // Canonical near-field scale of the base setup (the BS-side value; the
    // fixed-Rayleigh sweep holds this constant).
    const double lambda0 = kSpeedOfLight / (scenario_params.frequency_ghz * 1e9);
    const double aperture_bs =
        (scenario_params.n_bs - 1) * lambda0 * scenario_params.bs_spacing_wavelengths;
    meta["rayleigh_distance_bs_m"] = rayleigh_distance(aperture_bs, lambda0);
    return meta;
}

void write_json(const std::filesystem::path& file, const Json& j) {
    auto out = open_file(file);
    out << j.dump(2) << '\n';
}

}  // namespace

void write_sweep_outputs(const std::filesystem::path& dir, const std::string& experiment,
                         const SweepResult& sweep, const ScenarioParams& scenario_params) {
    ensure_directory(dir);

    auto data = open_file(dir / "data.csv");
    data << "variable,scheme,value\n";
    for (std::size_t i = 0; i < sweep.variable_values.size(); ++i) {
        const auto values = sweep.points[i].as_array();
        for (std::size_t s = 0; s < kSchemeLabels.size(); ++s)
            data << format_double(sweep.variable_values[i]) << ',' << kSchemeLabels[s] << ','
                 << format_double(values[s]) << '\n';
    }

    Json meta = meta_common(scenario_params, sweep.options, sweep.scenario_digest);
    meta["experiment"] = experiment;
    meta["variable_name"] = sweep.variable_name;
    meta["variable_values"] = sweep.variable_values;
    meta["schemes"] = kSchemeLabels;
    meta["n_bs_per_point"] = sweep.n_bs_per_point;
    meta["m_irs_per_point"] = sweep.m_irs_per_point;
    write_json(dir / "meta.json", meta);
}

void write_convergence_outputs(const std::filesystem::path& dir,
                               const std::vector<LabeledTrace>& traces,
                               const ScenarioParams& scenario_params, const RunOptions& options,
                               std::uint64_t scenario_digest) {
    ensure_directory(dir / "traces");

    auto data = open_file(dir / "data.csv");
    data << "variable,scheme,value\n";
    for (const LabeledTrace& lt : traces)
        for (std::size_t it = 0; it < lt.trace.powers.size(); ++it)
            data << it << ',' << lt.label << ',' << format_double(lt.trace.powers[it]) << '\n';

    std::vector<std::string> labels;
    for (const LabeledTrace& lt : traces) {
        labels.push_back(lt.label);
        auto csv = open_file(dir / "traces" / (lt.label + ".csv"));
        csv << "iteration,power\n";
        for (std::size_t it = 0; it < lt.trace.powers.size(); ++it)
            csv << it << ',' << format_double(lt.trace.powers[it]) << '\n';

        Json sidecar;
        sidecar["init_kind"] = std::string(to_string(lt.trace.init_kind));
        if (lt.trace.seed)
            sidecar["seed"] = *lt.trace.seed;
        else
            sidecar["seed"] = nullptr;
        sidecar["scenario_digest"] = digest_hex(scenario_digest);
        sidecar["iterations_run"] = lt.trace.iterations_run;
        sidecar["converged"] = lt.trace.converged;
        write_json(dir / "traces" / (lt.label + ".json"), sidecar);
    }

    Json meta = meta_common(scenario_params, options, scenario_digest);
    meta["experiment"] = "convergence";
    meta["variable_name"] = "iteration";
    meta["traces"] = labels;
    write_json(dir / "meta.json", meta);
}

void write_phases_csv(const std::filesystem::path& file, const Eigen::VectorXd& phases) {
    auto out = open_file(file);
    out << "index,phase_radians\n";
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        out << i << ',' << format_double(phases(i)) << '\n';
}

}  // namespace holobeam
