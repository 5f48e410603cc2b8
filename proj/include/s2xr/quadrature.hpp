#pragma once

#include <functional>

namespace s2xr {

/// Tolerances for adaptive quadrature. The defaults leave several digits of
/// margin over the 8-significant-digit regression targets.
struct QuadratureConfig {
    double absTol = 1e-12;
    double relTol = 1e-10;
    int maxDepth = 40;  ///< bisection depth limit per panel
};

struct QuadratureResult {
    double value = 0.0;
    double errorEstimate = 0.0;
    long evaluations = 0;
};

/// Integrates f over [a, b] with adaptive Gauss-Kronrod (7, 15) panels and
/// recursive bisection. Deterministic for a fixed config. Throws
/// std::runtime_error if the tolerance cannot be met within maxDepth.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg = {});

}  // namespace s2xr
