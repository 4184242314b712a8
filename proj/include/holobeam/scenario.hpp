// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "holobeam/channel.hpp"
#include "holobeam/geometry.hpp"
#include "holobeam/vps.hpp"

namespace holobeam {

/// One complete single-user link: BS array, IRS array, user terminal,
/// carrier. Source of every channel in the harness.
struct Scenario {
    ArrayGeometry bs;
    ArrayGeometry irs;
    Point2D user;
    double frequency_hz = 0.0;
    AmplitudeModel amplitude_model = AmplitudeModel::unit;

    double wavelength() const { return wavelength_from_frequency(frequency_hz); }
    double wavenumber() const { return kTwoPi / wavelength(); }
};

/// Scenario knobs as they appear in config files. Defaults are the standard
/// evaluation setup: BS at the origin (400 elements, lambda/2, axis 30deg
/// clockwise from +y), IRS at (50 m, 0) (2000 elements, lambda/4, normal
/// 60deg from +x), user at (37.5, -12.5) m, 30 GHz carrier.
struct ScenarioParams {
    double frequency_ghz = 30.0;
    int n_bs = 400;
    int m_irs = 2000;
    double bs_center_x = 0.0;
    double bs_center_y = 0.0;
    double bs_axis_clockwise_from_y_deg = 30.0;
    double irs_center_x = 50.0;
    double irs_center_y = 0.0;
    double irs_normal_from_x_deg = 60.0;
    double user_x = 37.5;
    double user_y = -12.5;
    double bs_spacing_wavelengths = 0.5;
    double irs_spacing_wavelengths = 0.25;
    std::string amplitude_model = "unit";
};

Scenario build_scenario(const ScenarioParams& params);
Scenario baseline_scenario();

/// Reduced-size variant of the baseline (same geometry, fewer elements).
ScenarioParams reduced_params(int n_bs = 100, int m_irs = 500);

ChannelSet make_channels(const Scenario& scenario);

inline BeamformerState vps_beamformer(const Scenario& scenario) {
    return vps_beamformer(scenario.bs, scenario.irs, scenario.user, scenario.wavenumber());
}

/// FNV-1a content hash over the scenario's defining fields; recorded in
/// output metadata so result files can be traced to their inputs.
std::uint64_t scenario_digest(const Scenario& scenario);

}  // namespace holobeam
