// SPDX-License-Identifier: Apache-2.0
#include "holobeam/scenario.hpp"

#include <cmath>
#include <cstdio>

#include "holobeam/io.hpp"

namespace holobeam {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

AmplitudeModel amplitude_model_from_string(const std::string& name) {
    if (name == "unit") return AmplitudeModel::unit;
    if (name == "inverse_distance") return AmplitudeModel::inverse_distance;
    throw ConfigError("unknown amplitude_model '" + name + "' (expected unit or inverse_distance)");
}

}  // namespace

Scenario build_scenario(const ScenarioParams& p) {
    if (p.frequency_ghz <= 0.0) throw ConfigError("frequency_ghz must be positive");
    if (p.n_bs < 1 || p.m_irs < 1) throw ConfigError("element counts must be positive");
    if (p.bs_spacing_wavelengths <= 0.0 || p.irs_spacing_wavelengths <= 0.0)
        throw ConfigError("element spacings must be positive");

    const double frequency_hz = p.frequency_ghz * 1e9;
    const double lambda = wavelength_from_frequency(frequency_hz);

    // BS axis: +y rotated clockwise by the given angle.
    const double bs_angle = p.bs_axis_clockwise_from_y_deg * kDegToRad;
    const Vec2 bs_axis{std::sin(bs_angle), std::cos(bs_angle)};

    // IRS axis: perpendicular to the normal (cos psi, sin psi).
    const double irs_normal = p.irs_normal_from_x_deg * kDegToRad;
    const Vec2 irs_axis{-std::sin(irs_normal), std::cos(irs_normal)};

    return Scenario{
        ArrayGeometry({p.bs_center_x, p.bs_center_y}, bs_axis, p.n_bs,
                      lambda * p.bs_spacing_wavelengths),
        ArrayGeometry({p.irs_center_x, p.irs_center_y}, irs_axis, p.m_irs,
                      lambda * p.irs_spacing_wavelengths),
        {p.user_x, p.user_y},
        frequency_hz,
        amplitude_model_from_string(p.amplitude_model),
    };
}

Scenario baseline_scenario() { return build_scenario(ScenarioParams{}); }

ScenarioParams reduced_params(int n_bs, int m_irs) {
    ScenarioParams p;
    p.n_bs = n_bs;
    p.m_irs = m_irs;
    return p;
}

ChannelSet make_channels(const Scenario& scenario) {
    const double k = scenario.wavenumber();
    return ChannelSet{
        los_channel_matrix(scenario.bs, scenario.irs, k, scenario.amplitude_model),
        los_channel_vector(scenario.irs, scenario.user, k, scenario.amplitude_model),
        k,
        scenario.amplitude_model,
    };
}

std::uint64_t scenario_digest(const Scenario& scenario) {
    std::string blob;
    const auto add = [&blob](double v) {
        blob += format_double(v);
        blob += '|';
    };
    add(scenario.bs.center.x);
    add(scenario.bs.center.y);
    add(scenario.bs.axis.x);
    add(scenario.bs.axis.y);
    add(scenario.bs.num_elements);
    add(scenario.bs.spacing);
    add(scenario.irs.center.x);
    add(scenario.irs.center.y);
    add(scenario.irs.axis.x);
    add(scenario.irs.axis.y);
    add(scenario.irs.num_elements);
    add(scenario.irs.spacing);
    add(scenario.user.x);
    add(scenario.user.y);
    add(scenario.frequency_hz);
    blob += scenario.amplitude_model == AmplitudeModel::unit ? "unit" : "inverse_distance";

    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : blob) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

}  // namespace holobeam
