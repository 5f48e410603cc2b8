#include "s2xr/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace s2xr {
namespace {

// Gauss-Kronrod (7, 15) nodes and weights on [-1, 1]. The 7-point Gauss rule
// reuses the odd-indexed Kronrod abscissae.
constexpr std::array<double, 8> kKronrodNodes = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr std::array<double, 8> kKronrodWeights = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr std::array<double, 4> kGaussWeights = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct Panel {
    double kronrod = 0.0;
    double error = 0.0;
};

Panel evaluatePanel(const std::function<double(double)>& f, double a, double b, long& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(mid);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    evals += 1;

    for (int i = 0; i < 7; ++i) {
        const double off = half * kKronrodNodes[i];
        const double sum = f(mid - off) + f(mid + off);
        evals += 2;
        kronrod += kKronrodWeights[i] * sum;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

void refine(const std::function<double(double)>& f, double a, double b, const Panel& panel,
            double absTol, double relTol, int depth, double& total, double& errorTotal,
            long& evals) {
    const double tol = std::max(absTol, relTol * std::abs(panel.kronrod));
    if (panel.error <= tol || b - a <= 1e-15 * std::abs(a + b)) {
        total += panel.kronrod;
        errorTotal += panel.error;
        return;
    }
    if (depth <= 0) throw std::runtime_error("integrate: tolerance not met within maxDepth");

    const double mid = 0.5 * (a + b);
    const Panel left = evaluatePanel(f, a, mid, evals);
    const Panel right = evaluatePanel(f, mid, b, evals);
    refine(f, a, mid, left, 0.5 * absTol, relTol, depth - 1, total, errorTotal, evals);
    refine(f, mid, b, right, 0.5 * absTol, relTol, depth - 1, total, errorTotal, evals);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg) {
    if (!(cfg.absTol > 0.0) || !(cfg.relTol > 0.0) || cfg.maxDepth < 1)
        throw std::domain_error("integrate: tolerances must be positive, maxDepth >= 1");
    if (a == b) return {0.0, 0.0, 0};

    QuadratureResult out;
    const Panel whole = evaluatePanel(f, a, b, out.evaluations);
    refine(f, a, b, whole, cfg.absTol, cfg.relTol, cfg.maxDepth, out.value, out.errorEstimate,
           out.evaluations);
    return out;
}

}  // namespace s2xr
