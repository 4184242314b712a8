// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>

#include "holobeam/geometry.hpp"

namespace holobeam {

enum class AmplitudeModel {
    unit,             // every entry has modulus 1
    inverse_distance  // modulus 1/d, for sensitivity studies
};

/// Line-of-sight spherical-wave channels of one BS -> IRS -> user link.
///
/// Phase conventions (fixed; the whole pipeline depends on them):
///   [H_t]_{m,n} = A(d) * exp(-j k d),  d = |p_n - q_m|   (propagation delay)
///   [h_r]_m     = A(d) * exp(+j k d),  d = |q_m - r|
/// h_r is stored conjugated so that h_r^H, the form in which every receiver
/// expression consumes it, carries the physical delay exp(-j k d).
struct ChannelSet {
    Eigen::MatrixXcd H_t;  // M_IRS x N_BS
    Eigen::VectorXcd h_r;  // M_IRS
    double wavenumber = 0.0;
    AmplitudeModel amplitude_model = AmplitudeModel::unit;

    Eigen::Index n_bs() const { return H_t.cols(); }
    Eigen::Index m_irs() const { return H_t.rows(); }
};

/// Entry (m, n) = A(d_mn) * exp(-j k d_mn) with d_mn = |p_n - q_m|, p from tx
/// and q from rx. Arrays closer than lambda/100 anywhere are rejected.
Eigen::MatrixXcd los_channel_matrix(const ArrayGeometry& tx, const ArrayGeometry& rx, double k,
                                    AmplitudeModel amplitude_model);

/// Entry m = A(d_m) * exp(+j k d_m) with d_m = |q_m - user| (conjugated
/// convention, see ChannelSet).
Eigen::VectorXcd los_channel_vector(const ArrayGeometry& irs, Point2D user, double k,
                                    AmplitudeModel amplitude_model);

/// Near-field steering vector for a point source: entry n =
/// exp(-j k (|p_n - source| - r)) with r the source distance to the array
/// center (the phase reference).
Eigen::VectorXcd steering_near(const ArrayGeometry& array, Point2D source, double k);

/// Far-field steering vector: entry n = exp(-j k n spacing beta) for the
/// direction sine beta, 0-indexed linear phase progression.
Eigen::VectorXcd steering_far(int num_elements, double spacing, double k, double beta);

/// Text dump "m,n,re,im" (header row included) for cross-implementation
/// diffing.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& matrix);

}  // namespace holobeam
