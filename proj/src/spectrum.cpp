// SPDX-License-Identifier: Apache-2.0
#include "holobeam/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "holobeam/geometry.hpp"

namespace holobeam {

namespace {

using Cplx = std::complex<double>;

void check_grid(const std::vector<double>& grid) {
    if (grid.size() < 2) throw InvalidArgumentError("beta grid needs at least two points");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw InvalidArgumentError("beta grid must be strictly increasing");
    if (grid.front() > -1.0 || grid.back() < 1.0)
        throw InvalidArgumentError("beta grid must cover the visible region [-1, 1]");
}

// Linear interpolation of base values at beta; zero outside the closed
// visible region [-1, 1].
Cplx sample_visible(const AngularSpectrum& base, double beta) {
    if (beta < -1.0 || beta > 1.0) return {0.0, 0.0};
    const auto& grid = base.beta_grid;
    const auto upper = std::upper_bound(grid.begin(), grid.end(), beta);
    if (upper == grid.begin()) return base.values.front();
    if (upper == grid.end()) return base.values.back();
    const std::size_t hi = static_cast<std::size_t>(upper - grid.begin());
    const std::size_t lo = hi - 1;
    const double t = (beta - grid[lo]) / (grid[hi] - grid[lo]);
    return base.values[lo] * (1.0 - t) + base.values[hi] * t;
}

}  // namespace

std::vector<double> uniform_grid(double lo, double hi, int count) {
    if (count < 2) throw InvalidArgumentError("grid needs at least two points");
    if (!(hi > lo)) throw InvalidArgumentError("grid bounds must satisfy hi > lo");
    std::vector<double> grid(count);
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) grid[i] = lo + i * step;
    return grid;
}

std::vector<double> default_beta_grid() { return uniform_grid(-2.0, 2.0, 2001); }

AngularSpectrum angular_spectrum(std::span<const Cplx> sequence, double spacing, double wavelength,
                                 std::vector<double> beta_grid, SpectrumNormalization normalization) {
    if (sequence.empty()) throw InvalidArgumentError("sequence must be nonempty");
    if (!(spacing > 0.0)) throw InvalidArgumentError("spacing must be positive");
    if (!(wavelength > 0.0)) throw InvalidArgumentError("wavelength must be positive");
    check_grid(beta_grid);

    const double k = kTwoPi / wavelength;
    const double n_elements = static_cast<double>(sequence.size());
    const double scale = normalization == SpectrumNormalization::power ? 1.0 / std::sqrt(n_elements) : 1.0;

    AngularSpectrum spectrum;
    spectrum.wavelength = wavelength;
    spectrum.spacing = spacing;
    spectrum.values.resize(beta_grid.size());
    for (std::size_t i = 0; i < beta_grid.size(); ++i) {
        Cplx acc = 0.0;
        for (std::size_t n = 0; n < sequence.size(); ++n) {
            const double offset = (static_cast<double>(n) - 0.5 * (n_elements - 1.0)) * spacing;
            acc += sequence[n] * std::polar(1.0, -k * beta_grid[i] * offset);
        }
        spectrum.values[i] = scale * acc;
    }
    spectrum.beta_grid = std::move(beta_grid);
    return spectrum;
}

AngularSpectrum aliased_spectrum(const AngularSpectrum& base, double spacing) {
    if (!(spacing > 0.0)) throw InvalidArgumentError("spacing must be positive");
    if (!(base.wavelength > 0.0)) throw InvalidArgumentError("base spectrum has no wavelength");
    if (base.beta_grid.size() != base.values.size() || base.beta_grid.size() < 2)
        throw InvalidArgumentError("base spectrum is malformed");
    if (base.beta_grid.front() > -1.0 || base.beta_grid.back() < 1.0) {
        std::ostringstream msg;
        msg << "base grid [" << base.beta_grid.front() << ", " << base.beta_grid.back()
            << "] does not cover the required extent [-1, 1]";
        throw CoverageError(msg.str());
    }

    const double period = base.wavelength / spacing;
    const double reach = std::max(std::abs(base.beta_grid.front()), std::abs(base.beta_grid.back()));
    const int max_shift = static_cast<int>(std::ceil((reach + 1.0) / period)) + 1;

    AngularSpectrum aliased;
    aliased.beta_grid = base.beta_grid;
    aliased.wavelength = base.wavelength;
    aliased.spacing = spacing;
    aliased.values.resize(base.values.size());
    for (std::size_t i = 0; i < aliased.beta_grid.size(); ++i) {
        Cplx acc = 0.0;
        for (int l = -max_shift; l <= max_shift; ++l)
            acc += sample_visible(base, aliased.beta_grid[i] - l * period);
        aliased.values[i] = acc / spacing;
    }
    return aliased;
}

double diffraction_sinc(double aperture_d, double wavelength, double beta) {
    if (aperture_d < 0.0) throw InvalidArgumentError("aperture must be nonnegative");
    if (!(wavelength > 0.0)) throw InvalidArgumentError("wavelength must be positive");
    const double z = std::numbers::pi * aperture_d * beta / wavelength;
    if (std::abs(z) < 1e-8) return aperture_d * (1.0 - z * z / 6.0);
    return aperture_d * std::sin(z) / z;
}

double halfpower_width(double aperture_d, double wavelength) {
    if (!(aperture_d > 0.0)) throw InvalidArgumentError("aperture must be positive");
    if (!(wavelength > 0.0)) throw InvalidArgumentError("wavelength must be positive");
    const double peak = aperture_d * aperture_d;

    // |D sinc(D beta / lambda)|^2 is monotone on the half main lobe, so the
    // half-power crossing brackets between 0 and the first null.
    double lo = 0.0;
    double hi = wavelength / aperture_d;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        const double value = diffraction_sinc(aperture_d, wavelength, mid);
        if (value * value > 0.5 * peak)
            lo = mid;
        else
            hi = mid;
    }
    return 2.0 * 0.5 * (lo + hi);
}

double occupied_width(const AngularSpectrum& spectrum, double energy_fraction) {
    if (!(energy_fraction > 0.0) || !(energy_fraction < 1.0))
        throw InvalidArgumentError("energy fraction must lie strictly between 0 and 1");
    if (spectrum.values.empty() || spectrum.values.size() != spectrum.beta_grid.size())
        throw InvalidArgumentError("spectrum is malformed");

    std::vector<double> energy(spectrum.values.size());
    double total = 0.0;
    for (std::size_t i = 0; i < spectrum.values.size(); ++i) {
        energy[i] = std::norm(spectrum.values[i]);
        total += energy[i];
    }
    if (total == 0.0) throw InvalidArgumentError("spectrum is identically zero");

    const std::size_t peak = static_cast<std::size_t>(
        std::max_element(energy.begin(), energy.end()) - energy.begin());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(energy.size());
    double captured = energy[peak];
    std::ptrdiff_t halfwidth = 0;
    while (captured < energy_fraction * total) {
        ++halfwidth;
        const std::ptrdiff_t lo = static_cast<std::ptrdiff_t>(peak) - halfwidth;
        const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(peak) + halfwidth;
        if (lo < 0 && hi >= n) break;
        if (lo >= 0) captured += energy[static_cast<std::size_t>(lo)];
        if (hi < n) captured += energy[static_cast<std::size_t>(hi)];
    }
    const std::size_t lo_idx =
        static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(peak) - halfwidth));
    const std::size_t hi_idx = static_cast<std::size_t>(
        std::min<std::ptrdiff_t>(n - 1, static_cast<std::ptrdiff_t>(peak) + halfwidth));
    return spectrum.beta_grid[hi_idx] - spectrum.beta_grid[lo_idx];
}

}  // namespace holobeam
