#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace hypercore {

// Geometry of the Poincare disk boundary. Angles are radians in [0, 2pi);
// the angular (spherical) distance between boundary points is the usual
// value in [0, pi].

inline double wrap_angle(double theta) {
    const double two_pi = 2.0 * std::numbers::pi;
    double t = std::fmod(theta, two_pi);
    if (t < 0) t += two_pi;
    return t;
}

inline double angular_distance(double a, double b) {
    double d = std::fabs(wrap_angle(a) - wrap_angle(b));
    return std::min(d, 2.0 * std::numbers::pi - d);
}

// Angle subtended at the boundary by a geodesic passing at distance R
// from the origin: sin(theta/2) = 1/cosh(R). Strictly decreasing, with
// theta(0) = pi.
inline double theta_of_R(double R) {
    if (R < 0) throw std::invalid_argument("R must be >= 0");
    return 2.0 * std::asin(1.0 / std::cosh(R));
}

// Inverse of theta_of_R: R = arccosh(1/sin(theta/2)) for theta in (0, pi].
inline double R_of_theta(double theta) {
    if (!(theta > 0.0) || theta > std::numbers::pi + 1e-15)
        throw std::invalid_argument("theta must lie in (0, pi]");
    return std::acosh(1.0 / std::sin(std::min(theta, std::numbers::pi) / 2.0));
}

// Hyperbolic distance from the origin to the bi-infinite geodesic between
// the boundary points at angles u and v, computed from the orthogonal
// circle through them (center c solves c.p = 1 for both endpoints). This
// is an independent route to the same quantity as R_of_theta(|u - v|).
inline double geodesic_distance_from_origin(double u_angle, double v_angle) {
    const double sep = angular_distance(u_angle, v_angle);
    if (sep < 1e-14) throw std::invalid_argument("coincident boundary angles");
    if (std::fabs(sep - std::numbers::pi) < 1e-14) return 0.0; // diameter

    const double ux = std::cos(u_angle), uy = std::sin(u_angle);
    const double vx = std::cos(v_angle), vy = std::sin(v_angle);
    const double det = ux * vy - uy * vx;
    // c = intersection of the tangency conditions c.u = 1, c.v = 1
    const double cx = (vy - uy) / det;
    const double cy = (ux - vx) / det;
    const double c_norm = std::hypot(cx, cy);
    const double radius = std::sqrt(c_norm * c_norm - 1.0);
    const double closest = c_norm - radius; // euclidean distance of nearest arc point
    return 2.0 * std::atanh(closest);
}

// Open boundary arc; empty when length == 0.
struct Arc {
    double start = 0.0;  // angle of the arc's start, ccw
    double length = 0.0; // in (0, 2pi], 0 for the empty arc

    bool empty() const { return length <= 0.0; }

    bool contains(double theta) const {
        if (empty()) return false;
        double off = wrap_angle(theta - start);
        return off > 0.0 && off < length;
    }
};

// Cap opposite u: boundary points at angular distance greater than
// theta_of_R(R) from u. Empty for R = 0; approaches the full circle minus
// a vanishing neighbourhood of u as R grows.
inline Arc cap_opposite(double u_angle, double R) {
    const double threshold = theta_of_R(R);
    const double len = 2.0 * std::numbers::pi - 2.0 * threshold;
    if (len <= 0.0) return Arc{};
    return Arc{wrap_angle(u_angle + threshold), len};
}

// Disk automorphism moving the interior point i*t to the origin while
// fixing +-i. Its boundary action pushes mass toward angle 3pi/2 as
// t -> 1; the pushforward of a boundary measure under this map has
// density (1 - t^2) / (1 + t^2 + 2 t sin(theta)) against the original.
inline std::complex<double> mobius_disk_map(double t, std::complex<double> z) {
    if (t < 0.0 || t >= 1.0) throw std::invalid_argument("t must lie in [0, 1)");
    const std::complex<double> it(0.0, t);
    return (z - it) / (1.0 + it * z);
}

inline double mobius_boundary_map(double t, double theta) {
    const auto w = mobius_disk_map(t, std::polar(1.0, theta));
    return wrap_angle(std::arg(w));
}

inline double mobius_boundary_map_inverse(double t, double theta) {
    if (t < 0.0 || t >= 1.0) throw std::invalid_argument("t must lie in [0, 1)");
    const std::complex<double> it(0.0, t);
    const auto w = std::polar(1.0, theta);
    return wrap_angle(std::arg((w + it) / (1.0 - it * w)));
}

// Radon-Nikodym density of the pushed-forward boundary measure at angle
// theta. Minimum at theta = pi/2, maximum at theta = 3pi/2; integrates to
// one against the uniform probability measure.
inline double mobius_density(double t, double theta) {
    if (t < 0.0 || t >= 1.0) throw std::invalid_argument("t must lie in [0, 1)");
    return (1.0 - t * t) / (1.0 + t * t + 2.0 * t * std::sin(theta));
}

} // namespace hypercore
