// SPDX-License-Identifier: Apache-2.0
//
// Experiment runner. Each subcommand reproduces one experiment family and
// writes data.csv + meta.json (and per-trace CSVs for convergence runs) under
// the output directory. Exit code 0 on success; nonzero per error class.

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "holobeam/errors.hpp"
#include "holobeam/io.hpp"
#include "holobeam/report.hpp"
#include "holobeam/sweeps.hpp"

namespace {

using holobeam::ConfigError;

struct ExperimentParams {
    double freq_min_ghz = 10.0;
    double freq_max_ghz = 80.0;
    double freq_step_ghz = 10.0;
    double angle_min_deg = -15.0;
    double angle_max_deg = 15.0;
    double angle_step_deg = 3.0;
    double scale_min = 0.8;
    double scale_max = 3.0;
    double scale_step = 0.2;
};

struct Config {
    holobeam::ScenarioParams scenario;
    ExperimentParams experiment;
    holobeam::RunOptions run;
};

std::vector<double> value_range(double lo, double hi, double step) {
    if (!(step > 0.0)) throw ConfigError("sweep step must be positive");
    const int count = static_cast<int>(std::lround((hi - lo) / step)) + 1;
    if (count < 1) throw ConfigError("sweep range is empty");
    std::vector<double> values(count);
    for (int i = 0; i < count; ++i) values[i] = lo + i * step;
    return values;
}

class SectionReader {
public:
    SectionReader(const holobeam::IniData& data, const std::string& section) {
        const auto it = data.find(section);
        if (it != data.end()) entries_ = it->second;
        section_ = section;
    }

    void read(const std::string& key, double& out) {
        if (const std::string* raw = take(key)) out = parse_double(key, *raw);
    }
    void read(const std::string& key, int& out) {
        if (const std::string* raw = take(key)) out = static_cast<int>(parse_ll(key, *raw));
    }
    void read(const std::string& key, std::uint64_t& out) {
        if (const std::string* raw = take(key)) out = parse_u64(key, *raw);
    }
    void read(const std::string& key, std::string& out) {
        if (const std::string* raw = take(key)) out = *raw;
    }

    void finish() const {
        for (const auto& [key, value] : entries_)
            if (!consumed_.count(key))
                throw ConfigError("unknown key '" + key + "' in section [" + section_ + "]");
    }

private:
    const std::string* take(const std::string& key) {
        const auto it = entries_.find(key);
        if (it == entries_.end()) return nullptr;
        consumed_.insert(key);
        return &it->second;
    }
    double parse_double(const std::string& key, const std::string& raw) const {
        try {
            std::size_t pos = 0;
            const double v = std::stod(raw, &pos);
            if (pos != raw.size()) throw std::invalid_argument(raw);
            return v;
        } catch (const std::exception&) {
            throw ConfigError("key '" + key + "' in [" + section_ + "] is not a number: " + raw);
        }
    }
    long long parse_ll(const std::string& key, const std::string& raw) const {
        try {
            std::size_t pos = 0;
            const long long v = std::stoll(raw, &pos);
            if (pos != raw.size()) throw std::invalid_argument(raw);
            return v;
        } catch (const std::exception&) {
            throw ConfigError("key '" + key + "' in [" + section_ + "] is not an integer: " + raw);
        }
    }
    std::uint64_t parse_u64(const std::string& key, const std::string& raw) const {
        try {
            std::size_t pos = 0;
            const unsigned long long v = std::stoull(raw, &pos);
            if (pos != raw.size()) throw std::invalid_argument(raw);
            return v;
        } catch (const std::exception&) {
            throw ConfigError("key '" + key + "' in [" + section_ + "] is not an integer: " + raw);
        }
    }

    std::string section_;
    std::map<std::string, std::string> entries_;
    std::set<std::string> consumed_;
};

Config load_config(const std::string& path) {
    Config config;
    if (path.empty()) return config;
    const holobeam::IniData data = holobeam::parse_ini(path);

    for (const auto& [section, entries] : data) {
        (void)entries;
        if (section != "scenario" && section != "experiment" && section != "rng")
            throw ConfigError("unknown section [" + section + "] in " + path);
    }

    SectionReader scenario(data, "scenario");
    scenario.read("frequency_ghz", config.scenario.frequency_ghz);
    scenario.read("n_bs", config.scenario.n_bs);
    scenario.read("m_irs", config.scenario.m_irs);
    scenario.read("bs_center_x", config.scenario.bs_center_x);
    scenario.read("bs_center_y", config.scenario.bs_center_y);
    scenario.read("bs_axis_clockwise_from_y_deg", config.scenario.bs_axis_clockwise_from_y_deg);
    scenario.read("irs_center_x", config.scenario.irs_center_x);
    scenario.read("irs_center_y", config.scenario.irs_center_y);
    scenario.read("irs_normal_from_x_deg", config.scenario.irs_normal_from_x_deg);
    scenario.read("user_x", config.scenario.user_x);
    scenario.read("user_y", config.scenario.user_y);
    scenario.read("bs_spacing_wavelengths", config.scenario.bs_spacing_wavelengths);
    scenario.read("irs_spacing_wavelengths", config.scenario.irs_spacing_wavelengths);
    scenario.read("amplitude_model", config.scenario.amplitude_model);
    scenario.finish();

    SectionReader experiment(data, "experiment");
    experiment.read("trials", config.run.trials);
    experiment.read("iterations", config.run.iterations);
    experiment.read("freq_min_ghz", config.experiment.freq_min_ghz);
    experiment.read("freq_max_ghz", config.experiment.freq_max_ghz);
    experiment.read("freq_step_ghz", config.experiment.freq_step_ghz);
    experiment.read("angle_min_deg", config.experiment.angle_min_deg);
    experiment.read("angle_max_deg", config.experiment.angle_max_deg);
    experiment.read("angle_step_deg", config.experiment.angle_step_deg);
    experiment.read("scale_min", config.experiment.scale_min);
    experiment.read("scale_max", config.experiment.scale_max);
    experiment.read("scale_step", config.experiment.scale_step);
    experiment.finish();

    SectionReader rng(data, "rng");
    rng.read("master_seed", config.run.master_seed);
    rng.finish();

    return config;
}

int exit_code_for(const std::string& kind) {
    if (kind == "invalid-argument") return 2;
    if (kind == "geometric-degeneracy") return 3;
    if (kind == "invalid-scenario") return 4;
    if (kind == "degenerate-channel") return 5;
    if (kind == "coverage") return 6;
    if (kind == "invalid-sweep") return 7;
    if (kind == "config") return 8;
    if (kind == "io") return 9;
    return 1;
}

void run_one(const std::string& name, const Config& config, const std::filesystem::path& out_dir) {
    const holobeam::Scenario scenario = holobeam::build_scenario(config.scenario);
    const ExperimentParams& exp = config.experiment;
    const std::filesystem::path dir = out_dir / name;

    const auto ghz_to_hz = [](std::vector<double> ghz) {
        for (double& f : ghz) f *= 1e9;
        return ghz;
    };

    if (name == "convergence") {
        const auto traces = holobeam::run_convergence(scenario, holobeam::kConvergenceInits,
                                                      config.run.iterations, config.run.master_seed);
        holobeam::write_convergence_outputs(dir, traces, config.scenario, config.run,
                                            holobeam::scenario_digest(scenario));
        std::cout << "wrote " << (dir / "data.csv").string() << " (" << traces.size() << " traces)\n";
        return;
    }

    holobeam::SweepResult sweep;
    if (name == "freq_aperture") {
        sweep = holobeam::run_freq_sweep_fixed_aperture(
            scenario, ghz_to_hz(value_range(exp.freq_min_ghz, exp.freq_max_ghz, exp.freq_step_ghz)),
            config.run);
    } else if (name == "bs_angle") {
        sweep = holobeam::run_bs_angle_sweep(
            scenario, value_range(exp.angle_min_deg, exp.angle_max_deg, exp.angle_step_deg),
            config.run);
    } else if (name == "irs_angle") {
        sweep = holobeam::run_irs_angle_sweep(
            scenario, value_range(exp.angle_min_deg, exp.angle_max_deg, exp.angle_step_deg),
            config.run);
    } else if (name == "freq_rayleigh") {
        sweep = holobeam::run_freq_sweep_fixed_rayleigh(
            scenario, ghz_to_hz(value_range(exp.freq_min_ghz, exp.freq_max_ghz, exp.freq_step_ghz)),
            config.run);
    } else if (name == "scale") {
        sweep = holobeam::run_scale_sweep(
            scenario, value_range(exp.scale_min, exp.scale_max, exp.scale_step), config.run);
    } else {
        throw ConfigError("unknown experiment: " + name);
    }
    holobeam::write_sweep_outputs(dir, name, sweep, config.scenario);
    std::cout << "wrote " << (dir / "data.csv").string() << " (" << sweep.variable_values.size()
              << " sweep points)\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Near-field IRS beamforming experiment runner"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "results";
    std::uint64_t seed = 0;
    int trials = 0;
    int iterations = 0;
    int threads = 0;

    app.add_option("--config", config_path, "INI config with [scenario], [experiment], [rng]");
    app.add_option("--out", out_dir, "output directory (default: results)");
    auto* seed_opt = app.add_option("--seed", seed, "master seed (overrides config)");
    auto* trials_opt = app.add_option("--trials", trials, "random-AO trials (default: 100)");
    auto* iter_opt = app.add_option("--iterations", iterations, "AO iterations (default: 10)");
    app.add_option("--threads", threads, "worker threads, 0 = hardware concurrency (default: 1)");

    const std::vector<std::pair<std::string, std::string>> subcommands = {
        {"convergence", "AO convergence traces for every initialization strategy"},
        {"freq-aperture", "frequency sweep at fixed physical apertures"},
        {"bs-angle", "BS rotation-offset sweep"},
        {"irs-angle", "IRS rotation-offset sweep"},
        {"freq-rayleigh", "frequency sweep at fixed Rayleigh distance"},
        {"scale", "scenario scaling-factor sweep"},
        {"all", "run every experiment"},
    };
    for (const auto& [name, description] : subcommands)
        app.add_subcommand(name, description)->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        Config config = load_config(config_path);
        if (seed_opt->count() > 0) config.run.master_seed = seed;
        if (trials_opt->count() > 0) config.run.trials = trials;
        if (iter_opt->count() > 0) config.run.iterations = iterations;
        config.run.threads = threads;

        std::vector<std::string> selected;
        for (const auto& [name, description] : subcommands) {
            (void)description;
            if (name != "all" && app.got_subcommand(name)) {
                std::string dir_name = name;
                for (char& c : dir_name)
                    if (c == '-') c = '_';
                selected.push_back(dir_name);
            }
        }
        if (app.got_subcommand("all"))
            selected = {"convergence", "freq_aperture", "bs_angle", "irs_angle", "freq_rayleigh",
                        "scale"};

        for (const std::string& name : selected) run_one(name, config, out_dir);
        return 0;
    } catch (const holobeam::Error& e) {
        std::cerr << "error[" << e.kind() << "]: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
