// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>

#include "holobeam/ao.hpp"
#include "holobeam/rng.hpp"
#include "test_helpers.hpp"

using namespace holobeam;
using Cplx = std::complex<double>;

namespace {

ChannelSet all_ones_channels(int m, int n) {
    ChannelSet ch;
    ch.H_t = Eigen::MatrixXcd::Ones(m, n);
    ch.h_r = Eigen::VectorXcd::Ones(m);
    ch.wavenumber = kTwoPi / 0.01;
    return ch;
}

BeamformerState zero_state(int n, int m) {
    BeamformerState st;
    st.omega_t = Eigen::VectorXcd::Constant(n, Cplx(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
    st.theta = Eigen::VectorXd::Zero(m);
    return st;
}

// Largest singular value via an independent eigensolve of H^H H.
double sigma_max_oracle(const Eigen::MatrixXcd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.adjoint() * h);
    return std::sqrt(solver.eigenvalues().maxCoeff());
}

double sigma_second_oracle(const Eigen::MatrixXcd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.adjoint() * h);
    const auto& ev = solver.eigenvalues();
    return std::sqrt(ev(ev.size() - 2));
}

}  // namespace

TEST_SUITE_BEGIN("ao");

TEST_CASE("received power: scalar identity chain and coherent bound") {
    CHECK(received_power(all_ones_channels(1, 1), zero_state(1, 1)) == doctest::Approx(1.0));

    // Perfectly aligned system: M^2 after the 1/N normalization.
    const int m = 7, n = 5;
    CHECK(received_power(all_ones_channels(m, n), zero_state(n, m)) ==
          doctest::Approx(static_cast<double>(m) * m).epsilon(1e-12));
}

TEST_CASE("received power matches the triple-loop oracle on a random system") {
    RngStream rng(5);
    const ChannelSet ch = testing::random_toy_channels(rng, 5, 3);
    const BeamformerState st = testing::random_state(rng, 3, 5);
    CHECK(received_power(ch, st) == doctest::Approx(testing::received_power_oracle(ch, st)).epsilon(1e-12));
}

TEST_CASE("received power rejects mismatched dimensions") {
    RngStream rng(6);
    const ChannelSet ch = testing::random_toy_channels(rng, 4, 3);
    CHECK_THROWS_AS(received_power(ch, testing::random_state(rng, 2, 4)), InvalidArgumentError);
    CHECK_THROWS_AS(received_power(ch, testing::random_state(rng, 3, 5)), InvalidArgumentError);
}

TEST_CASE("mrt_update: scalar normalization and idempotent power") {
    RngStream rng(7);
    const ChannelSet single = testing::random_toy_channels(rng, 3, 1);
    const Eigen::VectorXd theta = Eigen::VectorXd::Zero(3);
    const Eigen::VectorXcd omega = mrt_update(single, theta);
    CHECK(std::abs(omega.norm() - 1.0) < 1e-12);

    const ChannelSet ch = testing::random_toy_channels(rng, 6, 4);
    const Eigen::VectorXd th = testing::random_state(rng, 4, 6).theta;
    const Eigen::VectorXcd w1 = mrt_update(ch, th);
    const Eigen::VectorXcd w2 = mrt_update(ch, th);
    CHECK((w1 - w2).norm() == 0.0);

    BeamformerState st{w1, th};
    const double p1 = received_power(ch, st);
    st.omega_t = w2;
    CHECK(received_power(ch, st) == doctest::Approx(p1));
}

TEST_CASE("mrt_update is optimal against 1000 random unit-norm perturbations") {
    RngStream rng(8);
    const ChannelSet ch = testing::random_toy_channels(rng, 6, 4);
    const Eigen::VectorXd theta = testing::random_state(rng, 4, 6).theta;
    const Eigen::VectorXcd best = mrt_update(ch, theta);
    const double p_best = received_power(ch, {best, theta});

    for (int i = 0; i < 1000; ++i) {
        Eigen::VectorXcd candidate(4);
        for (int j = 0; j < 4; ++j)
            candidate(j) = Cplx(rng.gaussian(0.0, 1.0), rng.gaussian(0.0, 1.0));
        candidate.normalize();
        CHECK(received_power(ch, {candidate, theta}) <= p_best * (1.0 + 1e-12));
    }

    // Exact block-optimal value: |g|^2 / N with g the effective channel.
    Eigen::VectorXcd u(6);
    for (int m = 0; m < 6; ++m) u(m) = std::polar(1.0, -theta(m)) * ch.h_r(m);
    const Eigen::VectorXcd g = ch.H_t.adjoint() * u;
    CHECK(p_best == doctest::Approx(g.squaredNorm() / 4.0).epsilon(1e-12));
}

TEST_CASE("mrt_update rejects an all-zero effective channel") {
    ChannelSet ch;
    ch.H_t = Eigen::MatrixXcd::Zero(3, 2);
    ch.h_r = Eigen::VectorXcd::Ones(3);
    CHECK_THROWS_AS(mrt_update(ch, Eigen::VectorXd::Zero(3)), DegenerateChannelError);
}

TEST_CASE("irs_update: single summand rotated onto the positive real axis") {
    RngStream rng(9);
    const ChannelSet ch = testing::random_toy_channels(rng, 1, 2);
    const BeamformerState st = testing::random_state(rng, 2, 1);
    const Eigen::VectorXd theta = irs_update(ch, st.omega_t);
    const Cplx summand = std::conj(ch.h_r(0)) * std::polar(1.0, theta(0)) *
                         (ch.H_t * st.omega_t)(0);
    CHECK(summand.imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(summand.real() >= 0.0);
}

TEST_CASE("irs_update: aligned system is a fixed point, zero summands get zero phase") {
    const ChannelSet ones = all_ones_channels(4, 3);
    const BeamformerState st = zero_state(3, 4);
    const Eigen::VectorXd theta = irs_update(ones, st.omega_t);
    for (int m = 0; m < 4; ++m) CHECK(theta(m) == doctest::Approx(0.0));

    ChannelSet ch = all_ones_channels(3, 2);
    ch.h_r(1) = 0.0;
    const Eigen::VectorXd with_zero = irs_update(ch, zero_state(2, 3).omega_t);
    CHECK(with_zero(1) == 0.0);
}

TEST_CASE("irs_update beats 1e5 random phase draws") {
    RngStream rng(10);
    const ChannelSet ch = testing::random_toy_channels(rng, 6, 4);
    const Eigen::VectorXcd omega = testing::random_state(rng, 4, 6).omega_t;
    const Eigen::VectorXd best_theta = irs_update(ch, omega);
    const double p_best = received_power(ch, {omega, best_theta});

    BeamformerState candidate{omega, Eigen::VectorXd(6)};
    for (int i = 0; i < 100000; ++i) {
        for (int m = 0; m < 6; ++m) candidate.theta(m) = rng.uniform(0.0, kTwoPi);
        CHECK(received_power(ch, candidate) <= p_best * (1.0 + 1e-12));
    }
}

TEST_CASE("ao_solve: zero iterations record only the initial power") {
    RngStream rng(12);
    const ChannelSet ch = testing::random_toy_channels(rng, 4, 3);
    const BeamformerState init = testing::random_state(rng, 3, 4);
    const AoTrace trace = ao_solve(ch, init, 0, 1e-6);
    CHECK(trace.powers.size() == 1);
    CHECK(trace.iterations_run == 0);
    CHECK_FALSE(trace.converged);
    CHECK(trace.powers[0] == doctest::Approx(received_power(ch, init)));
}

TEST_CASE("ao_solve traces are monotone and length-consistent") {
    RngStream rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const ChannelSet ch = testing::random_toy_channels(rng, 8, 5);
        const BeamformerState init = testing::random_state(rng, 5, 8);
        const AoTrace trace = ao_solve(ch, init, 12, 0.0);
        CHECK(trace.powers.size() == static_cast<std::size_t>(trace.iterations_run) + 1);
        for (std::size_t i = 1; i < trace.powers.size(); ++i)
            CHECK(trace.powers[i] >= trace.powers[i - 1] * (1.0 - 1e-9));
    }
}

TEST_CASE("ao_solve: vps init never ends below zero-phase init on random facing links") {
    RngStream rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        const Scenario sc = testing::random_facing_scenario(rng, 8, 16);
        const ChannelSet ch = make_channels(sc);
        const double final_vps =
            ao_solve(ch, make_initializer(InitKind::vps, sc, {}), 10, 0.0).powers.back();
        const double final_zero =
            ao_solve(ch, make_initializer(InitKind::zero_phase, sc, {}), 10, 0.0).powers.back();
        CHECK(final_vps >= final_zero * (1.0 - 1e-9));
    }
}

TEST_CASE("ao_solve_p2p: identity channel converges immediately") {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(2, 2);
    Eigen::VectorXcd e1(2);
    e1 << 1.0, 0.0;
    const AoTrace trace = ao_solve_p2p(h, e1, 5, 1e-9);
    CHECK(trace.powers.back() == doctest::Approx(1.0));
    CHECK(trace.converged);
}

TEST_CASE("ao_solve_p2p: rank-1 channel converges in one iteration") {
    RngStream rng(15);
    Eigen::VectorXcd u(5), v(3);
    for (int i = 0; i < 5; ++i) u(i) = Cplx(rng.gaussian(0, 1), rng.gaussian(0, 1));
    for (int i = 0; i < 3; ++i) v(i) = Cplx(rng.gaussian(0, 1), rng.gaussian(0, 1));
    u.normalize();
    v.normalize();
    const Eigen::MatrixXcd h = u * v.adjoint();

    Eigen::VectorXcd init(3);
    init << 1.0, 0.0, 0.0;  // non-orthogonal to v almost surely
    const AoTrace trace = ao_solve_p2p(h, init, 8, 0.0);
    CHECK(trace.powers[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ao_solve_p2p converges to the squared top singular value") {
    RngStream rng(16);
    int done = 0;
    while (done < 50) {
        Eigen::MatrixXcd h(8, 6);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 6; ++j) h(i, j) = Cplx(rng.gaussian(0, 1), rng.gaussian(0, 1));
        const double s1 = sigma_max_oracle(h);
        const double s2 = sigma_second_oracle(h);
        if (s1 / s2 <= 1.05) continue;  // needs a spectral gap for fast convergence
        ++done;

        Eigen::VectorXcd init(6);
        for (int j = 0; j < 6; ++j) init(j) = Cplx(rng.gaussian(0, 1), rng.gaussian(0, 1));
        const AoTrace trace = ao_solve_p2p(h, init, 600, 0.0);
        CHECK(trace.powers.back() == doctest::Approx(s1 * s1).epsilon(1e-6));
    }

    CHECK_THROWS_AS(ao_solve_p2p(Eigen::MatrixXcd::Zero(3, 2), Eigen::VectorXcd::Ones(2), 5, 0.0),
                    DegenerateChannelError);
}

TEST_CASE("make_initializer: zero phase is the uniform unit-norm vector") {
    ScenarioParams p;
    p.n_bs = 4;
    p.m_irs = 6;
    const Scenario sc = build_scenario(p);
    const BeamformerState st = make_initializer(InitKind::zero_phase, sc, {});
    for (int n = 0; n < 4; ++n) CHECK(std::abs(st.omega_t(n) - Cplx(0.5, 0.0)) < 1e-12);
    CHECK(st.theta.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("make_initializer: seeded kinds are reproducible and seed-sensitive") {
    ScenarioParams p;
    p.n_bs = 8;
    p.m_irs = 16;
    const Scenario sc = build_scenario(p);

    for (InitKind kind : {InitKind::uniform_random, InitKind::gaussian_random}) {
        const BeamformerState a = make_initializer(kind, sc, 1234);
        const BeamformerState b = make_initializer(kind, sc, 1234);
        CHECK((a.omega_t - b.omega_t).norm() == 0.0);
        CHECK((a.theta - b.theta).norm() == 0.0);

        const BeamformerState c = make_initializer(kind, sc, 1235);
        CHECK((a.omega_t - c.omega_t).norm() > 0.0);

        CHECK(std::abs(a.omega_t.norm() - 1.0) < 1e-12);
        for (int m = 0; m < 16; ++m) {
            CHECK(a.theta(m) >= 0.0);
            CHECK(a.theta(m) < kTwoPi);
        }
        CHECK_THROWS_AS(make_initializer(kind, sc, std::nullopt), InvalidArgumentError);
    }

    const BeamformerState ff = make_initializer(InitKind::far_field, sc, {});
    CHECK(std::abs(ff.omega_t.norm() - 1.0) < 1e-12);
}

TEST_CASE("gaussian initializer phases have the advertised spread") {
    RngStream rng(777);
    const int samples = 100000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double x = rng.gaussian(0.0, std::numbers::pi / 4.0);
        sum += x;
        sum_sq += x * x;
    }
    const double mean = sum / samples;
    const double stddev = std::sqrt(sum_sq / samples - mean * mean);
    CHECK(stddev == doctest::Approx(std::numbers::pi / 4.0).epsilon(0.02));
    CHECK(std::abs(mean) < 0.01);
}

TEST_SUITE_END();
