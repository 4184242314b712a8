// SPDX-License-Identifier: Apache-2.0
#include "holobeam/vps.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace holobeam {

namespace {

constexpr double kDegenerateAngle = 1e-9;  // rad

double checked_distance(Point2D a, Point2D b, const char* what) {
    const double d = distance(a, b);
    if (d == 0.0) throw InvalidArgumentError(std::string(what) + " coincides with an array element");
    return d;
}

// Angle between two nonzero directions, in [0, pi].
double angle_between(Vec2 u, Vec2 v) { return std::atan2(std::abs(u.cross(v)), u.dot(v)); }

// Overlap of two circular arcs given by center direction and half-width
// (each arc spans < pi).
double arc_overlap(Vec2 bisector_a, double half_a, Vec2 bisector_b, double half_b) {
    const double gap = angle_between(bisector_a, bisector_b);
    const double overlap = std::min({half_a + half_b - gap, 2.0 * half_a, 2.0 * half_b});
    return std::max(0.0, overlap);
}

}  // namespace

Eigen::VectorXd bs_phases(const std::vector<Point2D>& bs_positions, Point2D s, double k) {
    if (!(k > 0.0)) throw InvalidArgumentError("wavenumber must be positive");
    Eigen::VectorXd phases(static_cast<Eigen::Index>(bs_positions.size()));
    for (std::size_t n = 0; n < bs_positions.size(); ++n)
        phases(static_cast<Eigen::Index>(n)) =
            wrap_two_pi(k * checked_distance(bs_positions[n], s, "virtual point source"));
    return phases;
}

Eigen::VectorXd irs_phases(const std::vector<Point2D>& irs_positions, Point2D s, Point2D user,
                           double k) {
    if (!(k > 0.0)) throw InvalidArgumentError("wavenumber must be positive");
    Eigen::VectorXd phases(static_cast<Eigen::Index>(irs_positions.size()));
    for (std::size_t m = 0; m < irs_positions.size(); ++m) {
        const double inbound = checked_distance(s, irs_positions[m], "virtual point source");
        const double outbound = checked_distance(irs_positions[m], user, "user");
        phases(static_cast<Eigen::Index>(m)) = wrap_two_pi(k * (inbound + outbound));
    }
    return phases;
}

BeamformerState vps_beamformer(const ArrayGeometry& bs, const ArrayGeometry& irs, Point2D user,
                               double k) {
    const Point2D vertex = opposing_triangles_vertex(bs, irs);
    const Eigen::VectorXd phi_bs = bs_phases(bs.element_positions(), vertex, k);
    const Eigen::VectorXd phi_irs = irs_phases(irs.element_positions(), vertex, user, k);

    BeamformerState state;
    const double scale = 1.0 / std::sqrt(static_cast<double>(bs.num_elements));
    state.omega_t.resize(phi_bs.size());
    for (Eigen::Index n = 0; n < phi_bs.size(); ++n) state.omega_t(n) = std::polar(scale, phi_bs(n));
    state.theta = phi_irs;
    return state;
}

CouplingReport geometric_coupling_factor(Point2D s, const ArrayGeometry& tx, const ArrayGeometry& rx) {
    if (tx.num_elements < 2 || rx.num_elements < 2)
        throw InvalidArgumentError("coupling factor needs arrays with nonzero aperture (N >= 2)");

    // Transmit cone: forward continuations of the rays endpoint -> s.
    const Vec2 u1 = s - tx.first_endpoint();
    const Vec2 u2 = s - tx.last_endpoint();
    // Receive cone: directions s -> endpoint.
    const Vec2 v1 = rx.first_endpoint() - s;
    const Vec2 v2 = rx.last_endpoint() - s;
    if (u1.norm() == 0.0 || u2.norm() == 0.0 || v1.norm() == 0.0 || v2.norm() == 0.0)
        throw InvalidArgumentError("candidate point coincides with an array endpoint");

    const double alpha_t = angle_between(u1, u2);
    const double alpha_r = angle_between(v1, v2);
    if (alpha_t < kDegenerateAngle || alpha_t > std::numbers::pi - kDegenerateAngle)
        throw InvalidArgumentError("transmit aperture subtends a degenerate angle at the candidate point");
    if (alpha_r < kDegenerateAngle || alpha_r > std::numbers::pi - kDegenerateAngle)
        throw InvalidArgumentError("receive aperture subtends a degenerate angle at the candidate point");

    const Vec2 bis_t = (u1.normalized() + u2.normalized()).normalized();
    const Vec2 bis_r = (v1.normalized() + v2.normalized()).normalized();
    const double alpha_vr = arc_overlap(bis_t, 0.5 * alpha_t, bis_r, 0.5 * alpha_r);

    CouplingReport report;
    report.alpha_t = alpha_t;
    report.alpha_r = alpha_r;
    report.alpha_vr = std::min(alpha_vr, std::min(alpha_t, alpha_r));
    report.eta_g = report.alpha_vr * report.alpha_vr / (alpha_t * alpha_r);
    return report;
}

GridSpec GridSpec::covering(const ArrayGeometry& tx, const ArrayGeometry& rx, int nx, int ny) {
    const Point2D pts[4] = {tx.first_endpoint(), tx.last_endpoint(), rx.first_endpoint(),
                            rx.last_endpoint()};
    GridSpec grid;
    grid.x_min = grid.x_max = pts[0].x;
    grid.y_min = grid.y_max = pts[0].y;
    for (const Point2D& p : pts) {
        grid.x_min = std::min(grid.x_min, p.x);
        grid.x_max = std::max(grid.x_max, p.x);
        grid.y_min = std::min(grid.y_min, p.y);
        grid.y_max = std::max(grid.y_max, p.y);
    }
    const double pad_x = std::max(0.1 * (grid.x_max - grid.x_min), 1.0);
    const double pad_y = std::max(0.1 * (grid.y_max - grid.y_min), 1.0);
    grid.x_min -= pad_x;
    grid.x_max += pad_x;
    grid.y_min -= pad_y;
    grid.y_max += pad_y;
    grid.nx = nx;
    grid.ny = ny;
    return grid;
}

GridSearchResult optimize_vps_grid(const ArrayGeometry& tx, const ArrayGeometry& rx,
                                   const GridSpec& grid) {
    if (grid.nx < 1 || grid.ny < 1) throw InvalidArgumentError("grid must contain at least one point");
    if (!(grid.x_max >= grid.x_min) || !(grid.y_max >= grid.y_min))
        throw InvalidArgumentError("grid bounds are empty or not finite");

    const Point2D centroid{0.5 * (grid.x_min + grid.x_max), 0.5 * (grid.y_min + grid.y_max)};
    bool found = false;
    GridSearchResult best{{0.0, 0.0}, -1.0};
    double best_centroid_dist = 0.0;

    for (int iy = 0; iy < grid.ny; ++iy) {
        const double y = grid.ny > 1 ? grid.y_min + iy * grid.y_step() : grid.y_min;
        for (int ix = 0; ix < grid.nx; ++ix) {
            const double x = grid.nx > 1 ? grid.x_min + ix * grid.x_step() : grid.x_min;
            const Point2D p{x, y};
            double eta = 0.0;
            try {
                eta = geometric_coupling_factor(p, tx, rx).eta_g;
            } catch (const InvalidArgumentError&) {
                eta = 0.0;  // degenerate candidates contribute no coupling
            }
            const double centroid_dist = distance(p, centroid);
            bool better = !found || eta > best.eta_g;
            if (!better && eta == best.eta_g) {
                if (centroid_dist < best_centroid_dist)
                    better = true;
                else if (centroid_dist == best_centroid_dist &&
                         (p.x < best.point.x || (p.x == best.point.x && p.y < best.point.y)))
                    better = true;
            }
            if (better) {
                best = {p, eta};
                best_centroid_dist = centroid_dist;
                found = true;
            }
        }
    }
    return best;
}

}  // namespace holobeam
