#include "s2xr/volume.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "s2xr/geometry.hpp"

namespace s2xr {
namespace {

void checkRadius(double rho) {
    if (!(rho >= 0.0))
        throw std::domain_error("ball radius must be >= 0");
    if (rho >= kPi)
        throw std::domain_error(
            "geodesic balls of S2xR are embedded only for radius < pi");
}

}  // namespace

double ballVolume(const BallSpec& ball, const QuadratureConfig& cfg) {
    checkRadius(ball.rho);
    if (ball.rho == 0.0) return 0.0;

    // The inner integral runs a few digits tighter than the outer request so
    // its error stays negligible inside the outer panels.
    QuadratureConfig inner = cfg;
    inner.absTol = std::max(cfg.absTol * 1e-3, 1e-15);
    inner.relTol = std::max(cfg.relTol * 1e-3, 1e-14);

    const auto shell = [&](double tau) {
        const auto arc = [tau](double v) { return std::sin(tau * std::cos(v)); };
        return 2.0 * kPi * tau * integrate(arc, -kPi / 2, kPi / 2, inner).value;
    };
    return integrate(shell, 0.0, ball.rho, cfg).value;
}

double ballVolumeSlab(const BallSpec& ball, const QuadratureConfig& cfg) {
    checkRadius(ball.rho);
    if (ball.rho == 0.0) return 0.0;

    const double rho = ball.rho;
    const auto cap = [rho](double t) {
        const double arg = std::max(rho * rho - t * t, 0.0);
        return 2.0 * kPi * (1.0 - std::cos(std::sqrt(arg)));
    };
    return integrate(cap, -rho, rho, cfg).value;
}

double sphericalTriangleArea(double alpha, double beta, double gamma) {
    for (double angle : {alpha, beta, gamma})
        if (!(angle > 0.0 && angle < kPi))
            throw std::domain_error("sphericalTriangleArea: angles must lie in (0, pi)");
    const double excess = alpha + beta + gamma - kPi;
    if (!(excess > 0.0))
        throw std::domain_error("sphericalTriangleArea: angle sum must exceed pi");
    return excess;
}

double sphericalDigonArea(double alpha) {
    if (!(alpha > 0.0 && alpha <= kPi))
        throw std::domain_error("sphericalDigonArea: angle must lie in (0, pi]");
    return 2.0 * alpha;
}

double prismVolume(double baseArea, double height) {
    if (!(baseArea > 0.0) || !(height > 0.0))
        throw std::domain_error("prismVolume: base area and height must be positive");
    return baseArea * height;
}

}  // namespace s2xr
