// SPDX-License-Identifier: Apache-2.0
#include "holobeam/geometry.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace holobeam {

namespace {

constexpr double kParallelCrossTol = 1e-12;  // on normalized line directions

bool finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

struct LineIntersection {
    Point2D point;
    double t_first;   // parameter on segment p1 -> q1
    double t_second;  // parameter on segment p2 -> q2
};

// Intersection of the (infinite) lines p1-q1 and p2-q2, with the segment
// parameters of the hit. Empty when the directions are parallel within
// kParallelCrossTol.
std::optional<LineIntersection> intersect_lines(Point2D p1, Point2D q1, Point2D p2, Point2D q2) {
    const Vec2 d1 = q1 - p1;
    const Vec2 d2 = q2 - p2;
    const double n1 = d1.norm();
    const double n2 = d2.norm();
    if (n1 == 0.0 || n2 == 0.0) return std::nullopt;
    const double denom = d1.cross(d2);
    if (std::abs(denom / (n1 * n2)) < kParallelCrossTol) return std::nullopt;
    const Vec2 w = p2 - p1;
    const double t = w.cross(d2) / denom;
    const double u = w.cross(d1) / denom;
    return LineIntersection{p1 + t * d1, t, u};
}

bool strictly_interior(double t) { return t > 0.0 && t < 1.0; }

}  // namespace

Vec2 Vec2::normalized() const {
    const double n = norm();
    if (n == 0.0) throw InvalidArgumentError("cannot normalize a zero vector");
    return {x / n, y / n};
}

Vec2 rotate(Vec2 v, double angle_rad) {
    const double c = std::cos(angle_rad);
    const double s = std::sin(angle_rad);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

ArrayGeometry::ArrayGeometry(Point2D center_, Vec2 axis_, int num_elements_, double spacing_)
    : center(center_), axis(axis_), num_elements(num_elements_), spacing(spacing_) {
    if (!finite(center)) throw InvalidArgumentError("array center must be finite");
    if (!finite(axis)) throw InvalidArgumentError("array axis must be finite");
    if (num_elements < 1) throw InvalidArgumentError("array needs at least one element");
    if (!(spacing > 0.0)) throw InvalidArgumentError("element spacing must be positive");
    if (std::abs(axis.norm() - 1.0) > 1e-12)
        throw InvalidArgumentError("array axis must be a unit vector (within 1e-12)");
}

std::vector<Point2D> ArrayGeometry::element_positions() const {
    std::vector<Point2D> positions;
    positions.reserve(num_elements);
    for (int n = 0; n < num_elements; ++n) positions.push_back(element(n));
    return positions;
}

ArrayGeometry ArrayGeometry::rotated(double angle_rad) const {
    return ArrayGeometry(center, rotate(axis, angle_rad), num_elements, spacing);
}

double rayleigh_distance(double aperture_d, double wavelength) {
    if (!(wavelength > 0.0)) throw InvalidArgumentError("wavelength must be positive");
    if (aperture_d < 0.0) throw InvalidArgumentError("aperture must be nonnegative");
    return 2.0 * aperture_d * aperture_d / wavelength;
}

NearFieldSignificance nearfield_significance(double range_r, double aperture_d, double wavelength) {
    if (!(range_r > 0.0)) throw InvalidArgumentError("range must be positive");
    if (!(wavelength > 0.0)) throw InvalidArgumentError("wavelength must be positive");
    if (aperture_d < 0.0) throw InvalidArgumentError("aperture must be nonnegative");
    const double half = 0.5 * aperture_d;
    const double slant = std::sqrt(range_r * range_r + half * half);
    // slant - r evaluated cancellation-free
    const double excess = half * half / (slant + range_r);
    const double k = kTwoPi / wavelength;
    return {k * excess, excess / slant};
}

Point2D opposing_triangles_vertex(const ArrayGeometry& tx, const ArrayGeometry& rx) {
    if (tx.num_elements < 2 || rx.num_elements < 2)
        throw GeometricDegeneracyError("opposing triangles need two arrays with nonzero aperture (N >= 2)");

    const Point2D a1 = tx.first_endpoint();
    const Point2D a2 = tx.last_endpoint();
    const Point2D b1 = rx.first_endpoint();
    const Point2D b2 = rx.last_endpoint();

    // Two endpoint pairings; which one is "crossed" depends on the arbitrary
    // element ordering, so both are tried and the on-segment hit wins.
    const struct {
        Point2D p1, q1, p2, q2;
    } pairings[2] = {{a1, b2, a2, b1}, {a1, b1, a2, b2}};

    bool saw_parallel = false;
    for (const auto& pairing : pairings) {
        const auto hit = intersect_lines(pairing.p1, pairing.q1, pairing.p2, pairing.q2);
        if (!hit) {
            saw_parallel = true;
            continue;
        }
        if (strictly_interior(hit->t_first) && strictly_interior(hit->t_second)) return hit->point;
    }
    if (saw_parallel)
        throw GeometricDegeneracyError(
            "opposing endpoint lines are parallel (arrays collinear or mirror-parallel)");
    throw GeometricDegeneracyError(
        "no endpoint pairing intersects strictly between the arrays (arrays do not face each other)");
}

}  // namespace holobeam
