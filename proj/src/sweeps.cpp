// SPDX-License-Identifier: Apache-2.0
#include "holobeam/sweeps.hpp"

#include <cmath>
#include <sstream>

#include "holobeam/parallel.hpp"
#include "holobeam/rng.hpp"

namespace holobeam {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRangeTol = 1e-9;

struct TrialOutcome {
    double p1, p2, p3, p10;
};

// Shared trial loop: uniform-random init AO, powers at iterations 1, 2, 3
// and 10. Trials run concurrently; each owns its RNG stream and slot.
std::vector<TrialOutcome> run_random_trials(const ChannelSet& channels, const Scenario& scenario,
                                            int trials, int iterations, std::uint64_t master_seed,
                                            int threads) {
    if (trials < 1) throw InvalidArgumentError("need at least one trial");
    if (iterations < 10)
        throw InvalidArgumentError("random-AO statistics need at least 10 iterations");

    std::vector<TrialOutcome> outcomes(trials);
    parallel_for(trials, threads, [&](int t) {
        const std::uint64_t seed = derive_seed(master_seed, static_cast<std::uint64_t>(t));
        const BeamformerState init = make_initializer(InitKind::uniform_random, scenario, seed);
        const AoTrace trace = ao_solve(channels, init, iterations, 0.0);
        outcomes[t] = {trace.powers[1], trace.powers[2], trace.powers[3], trace.powers[10]};
    });
    return outcomes;
}

int recomputed_count(double aperture, double spacing, const char* which) {
    const int count = static_cast<int>(std::lround(aperture / spacing)) + 1;
    if (count < 2) {
        std::ostringstream msg;
        msg << which << " element count " << count << " falls below 2 at this sweep point";
        throw InvalidSweepError(msg.str());
    }
    return count;
}

void check_range(const std::vector<double>& values, double lo, double hi, const char* what) {
    if (values.empty()) throw InvalidSweepError(std::string(what) + " sweep has no points");
    for (double v : values)
        if (!(v >= lo - kRangeTol) || !(v <= hi + kRangeTol)) {
            std::ostringstream msg;
            msg << what << " value " << v << " outside supported range [" << lo << ", " << hi << "]";
            throw InvalidSweepError(msg.str());
        }
}

SweepResult make_result(std::string variable_name, const Scenario& base, const RunOptions& options) {
    SweepResult result;
    result.variable_name = std::move(variable_name);
    result.options = options;
    result.scenario_digest = scenario_digest(base);
    return result;
}

void append_point(SweepResult& result, double variable_value, const Scenario& scenario,
                  const RunOptions& options) {
    result.variable_values.push_back(variable_value);
    result.points.push_back(evaluate_schemes(scenario, options));
    result.n_bs_per_point.push_back(scenario.bs.num_elements);
    result.m_irs_per_point.push_back(scenario.irs.num_elements);
}

}  // namespace

SchemePowers evaluate_schemes(const Scenario& scenario, const RunOptions& options) {
    const ChannelSet channels = make_channels(scenario);

    SchemePowers powers;
    const BeamformerState vps_state = make_initializer(InitKind::vps, scenario, std::nullopt);
    powers.vps = received_power(channels, vps_state);
    // The VPS+AO scheme is the *converged* solver from the VPS start; the
    // iteration budget only pins the random-trial statistics.
    powers.vps_plus_ao =
        ao_solve(channels, vps_state, std::max(100, options.iterations), 1e-6).powers.back();

    const auto outcomes = run_random_trials(channels, scenario, options.trials, options.iterations,
                                            options.master_seed, options.threads);
    double sum1 = 0.0, sum2 = 0.0, sum3 = 0.0, best10 = 0.0;
    for (const TrialOutcome& outcome : outcomes) {
        sum1 += outcome.p1;
        sum2 += outcome.p2;
        sum3 += outcome.p3;
        best10 = std::max(best10, outcome.p10);
    }
    const double n = static_cast<double>(outcomes.size());
    powers.random_avg_iter1 = sum1 / n;
    powers.random_avg_iter2 = sum2 / n;
    powers.random_avg_iter3 = sum3 / n;
    powers.random_best10 = best10;
    return powers;
}

RandomAoStats run_random_ao_stats(const Scenario& scenario, int trials, int iterations,
                                  std::uint64_t master_seed, int threads) {
    const ChannelSet channels = make_channels(scenario);
    const auto outcomes = run_random_trials(channels, scenario, trials, iterations, master_seed, threads);
    RandomAoStats stats{{0.0, 0.0, 0.0}, 0.0};
    for (const TrialOutcome& outcome : outcomes) {
        stats.avg_after_iter[0] += outcome.p1;
        stats.avg_after_iter[1] += outcome.p2;
        stats.avg_after_iter[2] += outcome.p3;
        stats.best_after_10 = std::max(stats.best_after_10, outcome.p10);
    }
    for (double& avg : stats.avg_after_iter) avg /= static_cast<double>(outcomes.size());
    return stats;
}

std::vector<LabeledTrace> run_convergence(const Scenario& scenario,
                                          const std::vector<InitKind>& inits, int iterations,
                                          std::uint64_t master_seed) {
    if (iterations < 1) throw InvalidArgumentError("convergence runs need at least one iteration");
    const ChannelSet channels = make_channels(scenario);

    std::vector<LabeledTrace> traces;
    std::uint64_t stream_index = 0;
    for (InitKind kind : inits) {
        const bool random = kind == InitKind::uniform_random || kind == InitKind::gaussian_random;
        const int repeats = random ? 2 : 1;
        for (int r = 0; r < repeats; ++r) {
            std::optional<std::uint64_t> seed;
            std::string label{to_string(kind)};
            if (random) {
                seed = derive_seed(master_seed, stream_index++);
                label += "_" + std::to_string(r + 1);
            }
            AoTrace trace = ao_solve(channels, make_initializer(kind, scenario, seed), iterations, 0.0);
            trace.init_kind = kind;
            trace.seed = seed;
            traces.push_back({std::move(label), std::move(trace)});
        }
    }
    return traces;
}

SweepResult run_freq_sweep_fixed_aperture(const Scenario& base, const std::vector<double>& freqs_hz,
                                          const RunOptions& options) {
    check_range(freqs_hz, 1e9, 300e9, "frequency");
    const double aperture_bs = base.bs.aperture();
    const double aperture_irs = base.irs.aperture();

    SweepResult result = make_result("frequency_ghz", base, options);
    for (double f : freqs_hz) {
        const double lambda = wavelength_from_frequency(f);
        const double spacing_bs = lambda / 2.0;
        const double spacing_irs = lambda / 4.0;
        const Scenario point{
            ArrayGeometry(base.bs.center, base.bs.axis,
                          recomputed_count(aperture_bs, spacing_bs, "BS"), spacing_bs),
            ArrayGeometry(base.irs.center, base.irs.axis,
                          recomputed_count(aperture_irs, spacing_irs, "IRS"), spacing_irs),
            base.user, f, base.amplitude_model};
        append_point(result, f / 1e9, point, options);
    }
    return result;
}

SweepResult run_bs_angle_sweep(const Scenario& base, const std::vector<double>& offsets_deg,
                               const RunOptions& options) {
    check_range(offsets_deg, -15.0, 15.0, "BS angle offset");
    SweepResult result = make_result("bs_angle_offset_deg", base, options);
    for (double offset : offsets_deg) {
        const Scenario point{base.bs.rotated(offset * kDegToRad), base.irs, base.user,
                             base.frequency_hz, base.amplitude_model};
        append_point(result, offset, point, options);
    }
    return result;
}

SweepResult run_irs_angle_sweep(const Scenario& base, const std::vector<double>& offsets_deg,
                                const RunOptions& options) {
    check_range(offsets_deg, -15.0, 15.0, "IRS angle offset");
    SweepResult result = make_result("irs_angle_offset_deg", base, options);
    for (double offset : offsets_deg) {
        const Scenario point{base.bs, base.irs.rotated(offset * kDegToRad), base.user,
                             base.frequency_hz, base.amplitude_model};
        append_point(result, offset, point, options);
    }
    return result;
}

SweepResult run_freq_sweep_fixed_rayleigh(const Scenario& base, const std::vector<double>& freqs_hz,
                                          const RunOptions& options) {
    check_range(freqs_hz, 1e9, 300e9, "frequency");
    const double lambda0 = base.wavelength();
    const double aperture_bs = base.bs.aperture();
    const double aperture_irs = base.irs.aperture();

    SweepResult result = make_result("frequency_ghz", base, options);
    for (double f : freqs_hz) {
        const double lambda = wavelength_from_frequency(f);
        // D' = D0 sqrt(lambda/lambda0) keeps 2 D'^2 / lambda at the base value.
        const double scale = std::sqrt(lambda / lambda0);
        const double spacing_bs = lambda / 2.0;
        const double spacing_irs = lambda / 4.0;
        const Scenario point{
            ArrayGeometry(base.bs.center, base.bs.axis,
                          recomputed_count(aperture_bs * scale, spacing_bs, "BS"), spacing_bs),
            ArrayGeometry(base.irs.center, base.irs.axis,
                          recomputed_count(aperture_irs * scale, spacing_irs, "IRS"), spacing_irs),
            base.user, f, base.amplitude_model};
        append_point(result, f / 1e9, point, options);
    }
    return result;
}

SweepResult run_scale_sweep(const Scenario& base, const std::vector<double>& factors,
                            const RunOptions& options) {
    check_range(factors, 0.8, 3.0, "scale factor");
    SweepResult result = make_result("scale_factor", base, options);
    for (double factor : factors) {
        const Scenario point{base.bs,
                             ArrayGeometry(base.irs.center * factor, base.irs.axis,
                                           base.irs.num_elements, base.irs.spacing),
                             base.user * factor, base.frequency_hz, base.amplitude_model};
        append_point(result, factor, point, options);
    }
    return result;
}

}  // namespace holobeam
