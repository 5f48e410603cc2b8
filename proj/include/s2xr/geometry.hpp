#pragma once

#include <numbers>

#include "s2xr/linalg.hpp"

namespace s2xr {

inline constexpr double kPi = std::numbers::pi;

/// A point of S2xR: geographic coordinates on the unit sphere plus the
/// fiber coordinate t along the line factor (arc-length units).
struct FiberedPoint {
    double phi = 0.0;    ///< longitude, radians, normalized range (-pi, pi]
    double theta = 0.0;  ///< latitude, radians, normalized range [-pi/2, pi/2]
    double t = 0.0;      ///< fiber coordinate
};

/// The same point in the affine model: the Cartesian chart in which the
/// sphere factor sits at Euclidean radius e^t, so r = ||(x,y,z)|| = e^t.
struct ModelPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Parameters of the unit-speed geodesic started at the model point (1,0,0),
/// i.e. at (phi=0, theta=0, t=0): launch direction (u, v) in geographic form
/// and arc length tau.
struct GeodesicParams {
    double u = 0.0;    ///< longitude of the launch direction, radians
    double v = 0.0;    ///< altitude of the launch direction, radians in [-pi/2, pi/2]
    double tau = 0.0;  ///< arc length, >= 0
};

/// Controls for the two-unknown Newton solve in distanceByShooting.
struct ShootingConfig {
    double tol = 1e-12;  ///< residual tolerance, relative to the target radius scale
    int maxIter = 64;
};

/// Wraps phi to (-pi, pi] and reflects theta into [-pi/2, pi/2], adjusting
/// phi when the latitude crosses a pole; the sphere point and t are unchanged.
/// At the exact poles phi is normalized to 0. Throws std::domain_error on
/// non-finite input.
FiberedPoint normalizePoint(FiberedPoint p);

/// Unit vector of the spherical part of p.
Vec3 sphereVector(const FiberedPoint& p);

/// Embeds into the affine model: e^t (cos phi cos theta, sin phi cos theta, sin theta).
ModelPoint toModel(const FiberedPoint& p);

/// Inverse of toModel; the fiber coordinate is recovered as t = ln ||(x,y,z)||.
/// Throws std::domain_error for the zero vector (it has no fiber coordinate).
FiberedPoint fromModel(const ModelPoint& m);

/// Point reached by the geodesic from (1,0,0) with parameters g:
///   x = e^{tau sin v} cos(tau cos v)
///   y = e^{tau sin v} sin(tau cos v) cos u
///   z = e^{tau sin v} sin(tau cos v) sin u
/// The fiber displacement is tau sin v and the spherical arc is tau cos v.
ModelPoint geodesicPoint(const GeodesicParams& g);

/// Arc length between the spherical parts, in [0, pi]. Uses the two-argument
/// arctangent of cross and dot products, which stays accurate near 0 and pi.
double sphericalAngle(const FiberedPoint& a, const FiberedPoint& b);

/// Geodesic distance of the product metric: sqrt(sigma^2 + dt^2) with sigma
/// the spherical arc and dt the fiber difference.
double distance(const FiberedPoint& a, const FiberedPoint& b);

/// Independent distance evaluation: carries a to the reference frame of the
/// origin, then solves the geodesic equations for (v, tau) hitting b by a
/// damped Newton iteration in model coordinates, and returns tau. Agrees
/// with distance() to 1e-9; used as a cross-validation oracle.
/// Throws std::runtime_error with diagnostics if the iteration fails.
double distanceByShooting(const FiberedPoint& a, const FiberedPoint& b,
                          const ShootingConfig& cfg = {});

}  // namespace s2xr
