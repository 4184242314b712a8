// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "holobeam/geometry.hpp"

namespace holobeam {

/// Joint transmit-side design: BS beamforming vector (unit Euclidean norm)
/// and IRS phase profile (the diagonal reflection matrix is exp(j theta_m),
/// unit modulus per element).
struct BeamformerState {
    Eigen::VectorXcd omega_t;  // N_BS, |omega_t|_2 = 1
    Eigen::VectorXd theta;     // M_IRS, radians in [0, 2pi)
};

/// Visible-region geometry at a candidate point source s: the angles
/// subtended by the transmit and receive apertures and their overlap.
struct CouplingReport {
    double alpha_t;   // transmit cone angle through s, radians
    double alpha_r;   // receive cone angle at s, radians
    double alpha_vr;  // overlap of the two direction intervals
    double eta_g;     // alpha_vr^2 / (alpha_t * alpha_r), in [0, 1]
};

/// phi_BS(n) = k |p_n - s|, reduced to [0, 2pi): a wave converging at s.
Eigen::VectorXd bs_phases(const std::vector<Point2D>& bs_positions, Point2D s, double k);

/// phi_IRS(m) = k (|s - q_m| + |q_m - user|), reduced to [0, 2pi):
/// compensates the inbound leg from s and refocuses onto the user.
Eigen::VectorXd irs_phases(const std::vector<Point2D>& irs_positions, Point2D s, Point2D user,
                           double k);

/// Non-iterative virtual-point-source beamformer: places the source at the
/// opposing-triangles vertex, then applies bs_phases / irs_phases. Fully
/// deterministic, no iteration.
BeamformerState vps_beamformer(const ArrayGeometry& bs, const ArrayGeometry& irs, Point2D user,
                               double k);

/// Geometric coupling factor at s. The transmit visible region is measured on
/// the forward continuations of the rays element -> s, so both regions live
/// in the same direction space and can intersect.
CouplingReport geometric_coupling_factor(Point2D s, const ArrayGeometry& tx, const ArrayGeometry& rx);

/// Rectangular search grid, nx x ny points with inclusive bounds.
struct GridSpec {
    double x_min = 0.0, x_max = 0.0;
    int nx = 1;
    double y_min = 0.0, y_max = 0.0;
    int ny = 1;

    double x_step() const { return nx > 1 ? (x_max - x_min) / (nx - 1) : 0.0; }
    double y_step() const { return ny > 1 ? (y_max - y_min) / (ny - 1) : 0.0; }

    /// Bounding box of both arrays' endpoints, padded 10% per side (at least
    /// 1 m), covering the region between the arrays.
    static GridSpec covering(const ArrayGeometry& tx, const ArrayGeometry& rx, int nx, int ny);
};

struct GridSearchResult {
    Point2D point;
    double eta_g;
};

/// Exhaustive eta_G maximization over the grid; diagnostic cross-check of the
/// closed-form vertex. Points where the coupling factor is degenerate count
/// as eta_G = 0. Ties break toward the grid centroid, then lexicographically.
GridSearchResult optimize_vps_grid(const ArrayGeometry& tx, const ArrayGeometry& rx,
                                   const GridSpec& grid);

}  // namespace holobeam
