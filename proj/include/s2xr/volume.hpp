#pragma once

#include "s2xr/quadrature.hpp"

namespace s2xr {

/// Geodesic ball radius. Balls of S2xR are embedded only for rho < pi, so
/// every volume routine enforces 0 <= rho < pi.
struct BallSpec {
    double rho = 0.0;
};

/// Volume of the geodesic ball of radius rho, by the nested integral in
/// geodesic polar coordinates:
///   Vol = 2 pi Int_0^rho Int_{-pi/2}^{pi/2} tau sin(tau cos v) dv dtau.
/// The integrand is nonnegative for rho <= pi, so no absolute value is needed.
/// Throws std::domain_error outside [0, pi).
double ballVolume(const BallSpec& ball, const QuadratureConfig& cfg = {});

/// Independent route to the same volume: the ball is {sigma^2 + t^2 <= rho^2},
/// and the slice at fiber offset t is a spherical cap of angular radius
/// sqrt(rho^2 - t^2), giving
///   Vol = Int_{-rho}^{rho} 2 pi (1 - cos sqrt(rho^2 - t^2)) dt.
/// Agrees with ballVolume to 1e-8 relative; kept as a mandatory cross-check.
double ballVolumeSlab(const BallSpec& ball, const QuadratureConfig& cfg = {});

/// Area of a unit-sphere triangle by angular excess: alpha + beta + gamma - pi.
/// Each angle must lie in (0, pi) and the excess must be positive.
double sphericalTriangleArea(double alpha, double beta, double gamma);

/// Area of a unit-sphere digon with angle alpha in (0, pi]: 2 alpha.
double sphericalDigonArea(double alpha);

/// Volume of a prism-like solid over a spherical base: base area times fiber
/// height. Both inputs must be positive.
double prismVolume(double baseArea, double height);

}  // namespace s2xr
