#include "s2xr/geometry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace s2xr {

FiberedPoint normalizePoint(FiberedPoint p) {
    if (!std::isfinite(p.phi) || !std::isfinite(p.theta) || !std::isfinite(p.t))
        throw std::domain_error("normalizePoint: non-finite coordinate");

    // remainder() wraps exactly into [-pi, pi]; the pole reflections below
    // then place theta in [-pi/2, pi/2] while keeping the same sphere point.
    double theta = std::remainder(p.theta, 2.0 * kPi);
    double phi = p.phi;
    if (theta > kPi / 2) {
        theta = kPi - theta;
        phi += kPi;
    } else if (theta < -kPi / 2) {
        theta = -kPi - theta;
        phi += kPi;
    }
    phi = std::remainder(phi, 2.0 * kPi);
    if (phi <= -kPi) phi = kPi;  // range convention is (-pi, pi]
    if (theta == kPi / 2 || theta == -kPi / 2) phi = 0.0;  // poles carry no longitude
    return {phi, theta, p.t};
}

Vec3 sphereVector(const FiberedPoint& p) {
    const double c = std::cos(p.theta);
    return {std::cos(p.phi) * c, std::sin(p.phi) * c, std::sin(p.theta)};
}

ModelPoint toModel(const FiberedPoint& p) {
    const double r = std::exp(p.t);
    const Vec3 s = sphereVector(p);
    return {r * s.x, r * s.y, r * s.z};
}

FiberedPoint fromModel(const ModelPoint& m) {
    if (!std::isfinite(m.x) || !std::isfinite(m.y) || !std::isfinite(m.z))
        throw std::domain_error("fromModel: non-finite coordinate");
    const double r = std::hypot(m.x, m.y, m.z);
    if (r == 0.0) throw std::domain_error("fromModel: zero vector has no fiber coordinate");
    const double rho = std::hypot(m.x, m.y);
    const double theta = std::atan2(m.z, rho);
    double phi = (rho == 0.0) ? 0.0 : std::atan2(m.y, m.x);
    if (phi == -kPi) phi = kPi;
    return {phi, theta, std::log(r)};
}

ModelPoint geodesicPoint(const GeodesicParams& g) {
    if (!std::isfinite(g.u) || !std::isfinite(g.v) || !std::isfinite(g.tau) || g.tau < 0.0)
        throw std::domain_error("geodesicPoint: parameters must be finite with tau >= 0");
    const double fiber = g.tau * std::sin(g.v);
    const double arc = g.tau * std::cos(g.v);
    const double r = std::exp(fiber);
    return {r * std::cos(arc), r * std::sin(arc) * std::cos(g.u),
            r * std::sin(arc) * std::sin(g.u)};
}

double sphericalAngle(const FiberedPoint& a, const FiberedPoint& b) {
    const Vec3 u = sphereVector(a);
    const Vec3 v = sphereVector(b);
    return std::atan2(u.cross(v).norm(), u.dot(v));
}

double distance(const FiberedPoint& a, const FiberedPoint& b) {
    return std::hypot(sphericalAngle(a, b), a.t - b.t);
}

double distanceByShooting(const FiberedPoint& pa, const FiberedPoint& pb,
                          const ShootingConfig& cfg) {
    const FiberedPoint a = normalizePoint(pa);
    const FiberedPoint b = normalizePoint(pb);

    // Carry a to the origin: rotate its sphere vector onto (1,0,0) and shift
    // the fiber to 0. The same isometry takes b to the target below.
    const Mat3 carry = rotationY(a.theta) * rotationZ(-a.phi);
    const Vec3 w = carry * sphereVector(b);
    const double dt = b.t - a.t;

    const double r = std::exp(dt);
    const double planar = std::hypot(w.y, w.z);
    const double xTarget = r * w.x;
    const double rhoTarget = r * planar;

    const double sigma = std::atan2(planar, w.x);
    if (sigma < 1e-13) return std::abs(dt);  // same sphere point: pure fiber geodesic

    // Unknowns (v, tau); u = atan2(w.z, w.y) decouples because the residuals
    // only involve the x coordinate and the distance from the x axis.
    double v = std::atan2(dt, sigma);
    double tau = std::hypot(dt, sigma);
    const double scale = std::max(1.0, r);

    double f1 = 0.0, f2 = 0.0, res = 0.0;
    for (int it = 0; it < cfg.maxIter; ++it) {
        const double amp = std::exp(tau * std::sin(v));
        const double arc = tau * std::cos(v);
        const double c = std::cos(arc), s = std::sin(arc);
        f1 = amp * c - xTarget;
        f2 = amp * s - rhoTarget;
        res = std::hypot(f1, f2);
        if (res <= cfg.tol * scale) return tau;

        const double cv = std::cos(v), sv = std::sin(v);
        const double j11 = amp * tau * (cv * c + sv * s);   // dF1/dv
        const double j12 = amp * (sv * c - cv * s);         // dF1/dtau
        const double j21 = amp * tau * (cv * s - sv * c);   // dF2/dv
        const double j22 = amp * (sv * s + cv * c);         // dF2/dtau
        const double det = j11 * j22 - j12 * j21;           // equals amp^2 tau
        if (det == 0.0) break;

        double dv = (-f1 * j22 + f2 * j12) / det;
        double dTau = (-f2 * j11 + f1 * j21) / det;

        // Damped update: halve the step until the residual improves.
        double step = 1.0;
        for (int half = 0; half < 40; ++half) {
            const double vn = v + step * dv;
            const double tn = std::max(tau + step * dTau, 1e-18);
            const double ampN = std::exp(tn * std::sin(vn));
            const double arcN = tn * std::cos(vn);
            const double r1 = ampN * std::cos(arcN) - xTarget;
            const double r2 = ampN * std::sin(arcN) - rhoTarget;
            if (std::hypot(r1, r2) < res) {
                v = vn;
                tau = tn;
                break;
            }
            step *= 0.5;
            if (half == 39) {
                v += step * dv;
                tau = std::max(tau + step * dTau, 1e-18);
            }
        }
    }

    // The loop tests convergence before stepping, so give the final iterate
    // one more chance before reporting failure.
    {
        const double amp = std::exp(tau * std::sin(v));
        const double arc = tau * std::cos(v);
        res = std::hypot(amp * std::cos(arc) - xTarget, amp * std::sin(arc) - rhoTarget);
        if (res <= cfg.tol * scale) return tau;
    }

    std::ostringstream msg;
    msg.precision(17);
    msg << "distanceByShooting: no convergence after " << cfg.maxIter
        << " iterations; a=(" << a.phi << ", " << a.theta << ", " << a.t << ") b=(" << b.phi
        << ", " << b.theta << ", " << b.t << ") sigma=" << sigma << " dt=" << dt
        << " residual=" << res;
    throw std::runtime_error(msg.str());
}

}  // namespace s2xr
