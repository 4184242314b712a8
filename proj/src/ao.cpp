// SPDX-License-Identifier: Apache-2.0
#include "holobeam/ao.hpp"

#include <cmath>
#include <complex>

#include "holobeam/rng.hpp"

namespace holobeam {

namespace {

using Cplx = std::complex<double>;

void check_dimensions(const ChannelSet& ch, Eigen::Index n_omega, Eigen::Index m_theta) {
    if (ch.h_r.size() != ch.H_t.rows())
        throw InvalidArgumentError("channel dimensions disagree: h_r length vs H_t rows");
    if (n_omega >= 0 && n_omega != ch.H_t.cols())
        throw InvalidArgumentError("omega_t length does not match H_t columns");
    if (m_theta >= 0 && m_theta != ch.H_t.rows())
        throw InvalidArgumentError("theta length does not match H_t rows");
}

// Effective receive weights Theta^H h_r, i.e. exp(-j theta_m) h_r[m].
Eigen::VectorXcd combined_receive(const ChannelSet& ch, const Eigen::VectorXd& theta) {
    Eigen::VectorXcd u(theta.size());
    for (Eigen::Index m = 0; m < theta.size(); ++m) u(m) = std::polar(1.0, -theta(m)) * ch.h_r(m);
    return u;
}

Eigen::VectorXcd unit_norm_from_phases(const Eigen::VectorXd& phases) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(phases.size()));
    Eigen::VectorXcd v(phases.size());
    for (Eigen::Index n = 0; n < phases.size(); ++n) v(n) = std::polar(scale, phases(n));
    return v;
}

}  // namespace

std::string_view to_string(InitKind kind) {
    switch (kind) {
        case InitKind::far_field: return "far_field";
        case InitKind::zero_phase: return "zero_phase";
        case InitKind::uniform_random: return "uniform_random";
        case InitKind::gaussian_random: return "gaussian_random";
        case InitKind::vps: return "vps";
        case InitKind::custom: return "custom";
    }
    return "custom";
}

std::optional<InitKind> init_kind_from_string(std::string_view name) {
    for (InitKind kind : {InitKind::far_field, InitKind::zero_phase, InitKind::uniform_random,
                          InitKind::gaussian_random, InitKind::vps, InitKind::custom})
        if (to_string(kind) == name) return kind;
    return std::nullopt;
}

double received_power(const ChannelSet& channels, const BeamformerState& state) {
    check_dimensions(channels, state.omega_t.size(), state.theta.size());
    const Eigen::VectorXcd v = channels.H_t * state.omega_t;
    Cplx y = 0.0;
    for (Eigen::Index m = 0; m < v.size(); ++m)
        y += std::conj(channels.h_r(m)) * std::polar(1.0, state.theta(m)) * v(m);
    return std::norm(y) / static_cast<double>(channels.n_bs());
}

Eigen::VectorXcd mrt_update(const ChannelSet& channels, const Eigen::VectorXd& theta) {
    check_dimensions(channels, -1, theta.size());
    const Eigen::VectorXcd g = channels.H_t.adjoint() * combined_receive(channels, theta);
    const double norm = g.norm();
    if (norm == 0.0) throw DegenerateChannelError("effective channel h_r^H Theta H_t is zero");
    return g / norm;
}

Eigen::VectorXd irs_update(const ChannelSet& channels, const Eigen::VectorXcd& omega_t) {
    check_dimensions(channels, omega_t.size(), -1);
    const Eigen::VectorXcd v = channels.H_t * omega_t;
    Eigen::VectorXd theta(v.size());
    for (Eigen::Index m = 0; m < v.size(); ++m) {
        const Cplx summand = std::conj(channels.h_r(m)) * v(m);
        theta(m) = summand == Cplx(0.0, 0.0) ? 0.0 : wrap_two_pi(-std::arg(summand));
    }
    return theta;
}

AoTrace ao_solve(const ChannelSet& channels, const BeamformerState& init, int max_iter,
                 double rel_tol) {
    if (max_iter < 0) throw InvalidArgumentError("max_iter must be nonnegative");
    check_dimensions(channels, init.omega_t.size(), init.theta.size());

    AoTrace trace;
    trace.powers.reserve(static_cast<std::size_t>(max_iter) + 1);
    trace.powers.push_back(received_power(channels, init));

    const double n_bs = static_cast<double>(channels.n_bs());
    Eigen::VectorXcd omega = init.omega_t;
    for (int it = 1; it <= max_iter; ++it) {
        const Eigen::VectorXd theta = irs_update(channels, omega);
        const Eigen::VectorXcd g = channels.H_t.adjoint() * combined_receive(channels, theta);
        const double g_norm2 = g.squaredNorm();
        if (g_norm2 == 0.0) throw DegenerateChannelError("effective channel h_r^H Theta H_t is zero");
        omega = g / std::sqrt(g_norm2);

        // After MRT the power is |g|^2 / N_BS exactly.
        const double power = g_norm2 / n_bs;
        const double previous = trace.powers.back();
        trace.powers.push_back(power);
        trace.iterations_run = it;
        if (rel_tol > 0.0 && power - previous < rel_tol * previous) {
            trace.converged = true;
            break;
        }
    }
    return trace;
}

AoTrace ao_solve_p2p(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& init_omega_t, int max_iter,
                     double rel_tol) {
    if (max_iter < 0) throw InvalidArgumentError("max_iter must be nonnegative");
    if (init_omega_t.size() != h.cols())
        throw InvalidArgumentError("init omega_t length does not match H columns");
    if (h.norm() == 0.0) throw DegenerateChannelError("channel matrix is zero");
    const double init_norm = init_omega_t.norm();
    if (init_norm == 0.0) throw DegenerateChannelError("initial beamformer is zero");

    AoTrace trace;
    Eigen::VectorXcd omega_t = init_omega_t / init_norm;
    Eigen::VectorXcd incident = h * omega_t;
    trace.powers.push_back(incident.squaredNorm());

    for (int it = 1; it <= max_iter; ++it) {
        const double incident_norm = incident.norm();
        if (incident_norm == 0.0)
            throw DegenerateChannelError("initial beamformer lies in the channel null space");
        const Eigen::VectorXcd omega_r = incident / incident_norm;
        const Eigen::VectorXcd reciprocal = h.adjoint() * omega_r;
        omega_t = reciprocal / reciprocal.norm();
        incident = h * omega_t;

        const double power = incident.squaredNorm();
        const double previous = trace.powers.back();
        trace.powers.push_back(power);
        trace.iterations_run = it;
        if (rel_tol > 0.0 && power - previous < rel_tol * previous) {
            trace.converged = true;
            break;
        }
    }
    return trace;
}

BeamformerState make_initializer(InitKind kind, const Scenario& scenario,
                                 std::optional<std::uint64_t> seed) {
    const int n = scenario.bs.num_elements;
    const int m = scenario.irs.num_elements;
    const double k = scenario.wavenumber();

    BeamformerState state;
    switch (kind) {
        case InitKind::zero_phase: {
            state.omega_t = unit_norm_from_phases(Eigen::VectorXd::Zero(n));
            state.theta = Eigen::VectorXd::Zero(m);
            return state;
        }
        case InitKind::far_field: {
            // Planar-wave version of the point-source design: the BS steers
            // toward the IRS center's direction sine, the IRS compensates the
            // planar arrival from the BS center and the planar departure
            // toward the user.
            if (distance(scenario.irs.center, scenario.bs.center) == 0.0 ||
                distance(scenario.user, scenario.irs.center) == 0.0)
                throw InvalidScenarioError(
                    "far-field initializer needs distinct BS, IRS, and user positions");
            const Vec2 to_irs = (scenario.irs.center - scenario.bs.center).normalized();
            const double beta_t = to_irs.dot(scenario.bs.axis);
            const Eigen::VectorXcd steered = steering_far(n, scenario.bs.spacing, k, beta_t);
            state.omega_t = steered / std::sqrt(static_cast<double>(n));

            const Vec2 to_bs = (scenario.bs.center - scenario.irs.center).normalized();
            const Vec2 to_user = (scenario.user - scenario.irs.center).normalized();
            const double beta_sum = to_bs.dot(scenario.irs.axis) + to_user.dot(scenario.irs.axis);
            state.theta.resize(m);
            for (int i = 0; i < m; ++i) {
                const double offset = (static_cast<double>(i) - 0.5 * (m - 1)) * scenario.irs.spacing;
                state.theta(i) = wrap_two_pi(-k * offset * beta_sum);
            }
            return state;
        }
        case InitKind::uniform_random:
        case InitKind::gaussian_random: {
            if (!seed)
                throw InvalidArgumentError("random initialization requires a seed");
            RngStream rng(*seed);
            const bool gaussian = kind == InitKind::gaussian_random;
            const double sigma = std::numbers::pi / 4.0;
            Eigen::VectorXd bs_phases(n);
            for (int i = 0; i < n; ++i)
                bs_phases(i) = gaussian ? rng.gaussian(0.0, sigma) : rng.uniform(0.0, kTwoPi);
            state.omega_t = unit_norm_from_phases(bs_phases);
            state.theta.resize(m);
            for (int i = 0; i < m; ++i)
                state.theta(i) =
                    wrap_two_pi(gaussian ? rng.gaussian(0.0, sigma) : rng.uniform(0.0, kTwoPi));
            return state;
        }
        case InitKind::vps:
            return vps_beamformer(scenario);
        case InitKind::custom:
            break;
    }
    throw InvalidArgumentError("cannot synthesize a 'custom' initializer");
}

}  // namespace holobeam
