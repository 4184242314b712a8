// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "holobeam/scenario.hpp"
#include "holobeam/vps.hpp"

namespace holobeam {

enum class InitKind { far_field, zero_phase, uniform_random, gaussian_random, vps, custom };

std::string_view to_string(InitKind kind);
std::optional<InitKind> init_kind_from_string(std::string_view name);

/// Convergence record of one alternating-optimization run. powers[0] is the
/// initializer's power; one entry follows per full iteration. Monotone
/// non-decreasing by construction (each half-step is block-optimal).
struct AoTrace {
    std::vector<double> powers;
    int iterations_run = 0;
    bool converged = false;
    InitKind init_kind = InitKind::custom;
    std::optional<std::uint64_t> seed;
};

/// |h_r^H Theta H_t omega_t|^2 / N_BS.
double received_power(const ChannelSet& channels, const BeamformerState& state);

/// Maximal-ratio transmission against the effective channel
/// g^H = h_r^H Theta H_t: returns g / |g|_2, the unit-norm power optimum for
/// the given IRS phases.
Eigen::VectorXcd mrt_update(const ChannelSet& channels, const Eigen::VectorXd& theta);

/// Per-element phase alignment: theta_m = -arg([h_r^H]_m [H_t omega_t]_m),
/// the closed-form optimum over unit-modulus diagonals for fixed omega_t.
/// Zero summands get theta_m = 0.
Eigen::VectorXd irs_update(const ChannelSet& channels, const Eigen::VectorXcd& omega_t);

/// Alternating optimization on the IRS link: each iteration runs irs_update
/// then mrt_update and records the power. Stops early once the relative power
/// gain drops below rel_tol (rel_tol = 0 disables the early stop and runs all
/// max_iter iterations).
AoTrace ao_solve(const ChannelSet& channels, const BeamformerState& init, int max_iter = 50,
                 double rel_tol = 1e-6);

/// Point-to-point alternation: omega_r = H omega_t / |.|, then
/// omega_t = H^H omega_r / |.|. Trace powers are |H omega_t|^2 (the objective
/// with the receive side at its block optimum); converges to the square of
/// the largest singular value of H.
AoTrace ao_solve_p2p(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& init_omega_t,
                     int max_iter = 50, double rel_tol = 1e-6);

/// Initialization strategies for the IRS problem. Random kinds require a
/// seed; identical (scenario, kind, seed) triples produce bit-identical
/// states. Draw order: BS phases first, then IRS phases.
BeamformerState make_initializer(InitKind kind, const Scenario& scenario,
                                 std::optional<std::uint64_t> seed);

}  // namespace holobeam
