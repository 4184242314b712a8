// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <vector>

#include "holobeam/sweeps.hpp"

namespace holobeam {

/// Experiment output layout: one directory per experiment holding data.csv
/// (long format "variable,scheme,value"), meta.json (config echo, seeds,
/// digests, version) and, for convergence runs, traces/<label>.csv with a
/// JSON sidecar per trace. Everything written here is byte-reproducible for
/// a fixed config and master seed.

void write_sweep_outputs(const std::filesystem::path& dir, const std::string& experiment,
                         const SweepResult& sweep, const ScenarioParams& scenario_params);

void write_convergence_outputs(const std::filesystem::path& dir,
                               const std::vector<LabeledTrace>& traces,
                               const ScenarioParams& scenario_params, const RunOptions& options,
                               std::uint64_t scenario_digest);

/// "index,phase_radians" dump of one phase profile (e.g. a beamformer's IRS
/// phases, or the arguments of its BS weights).
void write_phases_csv(const std::filesystem::path& file, const Eigen::VectorXd& phases);

}  // namespace holobeam
