// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <span>
#include <vector>

#include "holobeam/errors.hpp"

namespace holobeam {

/// Sampled angular spectrum over a direction-sine grid. The grid is strictly
/// increasing and covers at least the visible region [-1, 1].
struct AngularSpectrum {
    std::vector<double> beta_grid;
    std::vector<std::complex<double>> values;
    double wavelength = 0.0;
    double spacing = 0.0;
};

enum class SpectrumNormalization {
    power,  // 1/sqrt(N) scaling
    none    // raw interference-spectrum sum
};

std::vector<double> uniform_grid(double lo, double hi, int count);

/// 2001 points over [-2, 2]: one full alias period around the visible region
/// is representable at half-wavelength spacing.
std::vector<double> default_beta_grid();

/// Spatial DTFT of the sequence at each grid point:
/// value(beta) = scale * sum_n g[n] exp(-j k beta x_n), with x_n the
/// element offset centered on the array ((n - (N-1)/2) * spacing) so real
/// sequences get conjugate-symmetric spectra.
AngularSpectrum angular_spectrum(std::span<const std::complex<double>> sequence, double spacing,
                                 double wavelength, std::vector<double> beta_grid,
                                 SpectrumNormalization normalization = SpectrumNormalization::power);

/// Periodic summation of the base spectrum with period lambda/spacing:
/// value(beta) = (1/spacing) * sum_l base(beta - l lambda/spacing).
/// The base is treated as one unaliased period, supported exactly on the
/// closed visible region [-1, 1] and zero outside; replica samples are
/// evaluated by linear interpolation on the base grid.
AngularSpectrum aliased_spectrum(const AngularSpectrum& base, double spacing);

/// Diffraction pattern of a uniform aperture of physical size D:
/// D * sinc(D beta / lambda), with sinc(z) = sin(pi z) / (pi z).
double diffraction_sinc(double aperture_d, double wavelength, double beta);

/// Full width of the |diffraction_sinc|^2 main lobe at half its peak, found
/// by bisection to 1e-10 absolute in beta. Scales as lambda/D, which is the
/// operational form of diffraction degradation: the lobe collapses toward a
/// delta as D/lambda grows.
double halfpower_width(double aperture_d, double wavelength);

/// Width of the smallest symmetric-about-peak grid interval containing the
/// given fraction of the |spectrum|^2 energy.
double occupied_width(const AngularSpectrum& spectrum, double energy_fraction);

}  // namespace holobeam
