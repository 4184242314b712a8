// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "holobeam/errors.hpp"

namespace holobeam {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double wavelength_from_frequency(double frequency_hz) {
    if (!(frequency_hz > 0.0)) throw InvalidArgumentError("frequency must be positive");
    return kSpeedOfLight / frequency_hz;
}

/// Reduce an angle to [0, 2*pi).
inline double wrap_two_pi(double angle_rad) {
    double a = std::fmod(angle_rad, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

/// 2D vector / point, coordinates in meters unless noted otherwise.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(Vec2 r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    friend constexpr Vec2 operator*(double s, Vec2 v) { return {v.x * s, v.y * s}; }
    Vec2& operator+=(Vec2 r) { x += r.x; y += r.y; return *this; }
    Vec2& operator-=(Vec2 r) { x -= r.x; y -= r.y; return *this; }
    Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

    constexpr double dot(Vec2 r) const { return x * r.x + y * r.y; }
    constexpr double cross(Vec2 r) const { return x * r.y - y * r.x; }
    double norm() const { return std::sqrt(x * x + y * y); }
    Vec2 normalized() const;
};

using Point2D = Vec2;

inline double distance(Point2D a, Point2D b) { return (a - b).norm(); }

/// Counterclockwise rotation.
Vec2 rotate(Vec2 v, double angle_rad);

/// Unit vector (cos a, sin a).
inline Vec2 unit_from_angle(double angle_rad) { return {std::cos(angle_rad), std::sin(angle_rad)}; }

/// Uniform linear array in the plane. Element n (0-based) sits at
/// center + (n - (N-1)/2) * spacing * axis, so the centroid equals the
/// center for both odd and even element counts.
struct ArrayGeometry {
    Point2D center;
    Vec2 axis;  // unit vector along the array line, |axis| = 1 within 1e-12
    int num_elements = 1;
    double spacing = 0.0;  // meters, > 0

    ArrayGeometry(Point2D center_, Vec2 axis_, int num_elements_, double spacing_);

    double aperture() const { return (num_elements - 1) * spacing; }
    Point2D element(int index) const {
        return center + (static_cast<double>(index) - 0.5 * (num_elements - 1)) * spacing * axis;
    }
    std::vector<Point2D> element_positions() const;
    Point2D first_endpoint() const { return element(0); }
    Point2D last_endpoint() const { return element(num_elements - 1); }

    /// Same array with the axis rotated counterclockwise about the center.
    ArrayGeometry rotated(double angle_rad) const;
};

/// d_R = 2 D^2 / lambda, the boundary between near- and far-field regions.
double rayleigh_distance(double aperture_d, double wavelength);

/// How much a spherical wavefront launched from range r deviates from the
/// planar-wave assumption across an aperture of size D.
struct NearFieldSignificance {
    double max_phase_deviation_rad;    // k * (sqrt(r^2 + (D/2)^2) - r)
    double amplitude_variation_ratio;  // 1 - r / sqrt(r^2 + (D/2)^2)
};
NearFieldSignificance nearfield_significance(double range_r, double aperture_d, double wavelength);

/// Vertex of the crossed lines joining opposite endpoints of the two arrays:
/// with tx endpoints (a1, a2) and rx endpoints (b1, b2), the candidate line
/// pairs are {a1-b2, a2-b1} and {a1-b1, a2-b2}; the accepted intersection is
/// the one lying strictly between the arrays (on both connecting segments).
/// Throws GeometricDegeneracyError when no pairing qualifies.
Point2D opposing_triangles_vertex(const ArrayGeometry& tx, const ArrayGeometry& rx);

}  // namespace holobeam
