#pragma once

#include <functional>
#include <string>
#include <vector>

#include "s2xr/symmetry.hpp"
#include "s2xr/volume.hpp"

namespace s2xr {

/// A ball packing generated by the glide-family group: kernel point K at
/// fiber coordinate 0 (homogeneity lets every packing be slid there) and
/// glide half-period tau, so the fiber lattice has period 2 tau.
struct PackingConfig {
    int q = 2;
    FiberedPoint K;
    double tau = 0.0;
};

struct PackingResult {
    FiberedPoint K;
    double tau = 0.0;
    double R = 0.0;             ///< ball radius, half the minimal orbit distance
    int stabilizerOrder = 0;
    double density = 0.0;
    int touchingNumber = 0;
    std::vector<std::string> bindingConstraints;  ///< orbit words at distance 2R
    std::string stratum;        ///< which search stratum produced the result
};

struct MaxRadiusResult {
    double R = 0.0;
    std::vector<std::string> bindingConstraints;
};

/// Largest radius packing the orbit of K: half the minimum distance from K
/// to its other orbit points, scanned over the fiber window 2l + 2pi, which
/// is wide enough that no nearest image can be missed. Stabilizer images
/// coincide with K and are excluded. Throws std::domain_error for tau <= 0.
MaxRadiusResult maxRadius(const PackingConfig& c);

/// Full packing record at the configuration's maximal radius. The density is
///   Vol(B(R)) / (stabilizerOrder * triangleArea(pi/q, pi/2, pi/2) * 2 tau),
/// the ball volume over the orbit point's share of the fundamental prism.
/// Throws std::domain_error when R reaches the embeddability bound pi.
PackingResult density(const PackingConfig& c, const QuadratureConfig& quad = {});

/// Number of orbit balls tangent to the kernel ball: orbit points at
/// distance 2R within 1e-7.
int touchingNumber(const PackingConfig& c);

/// The two spherical minima that determine the orbit-distance profile of K.
/// Every orbit distance is one of
///   sigmaMirror              (shift-free images, lattice-translation free),
///   sqrt(sigmaGlide^2 + tau^2)  (glide images, half-period fiber offset),
///   2 tau                    (fiber lattice),
/// or dominated by one of these, so R(tau) = min(...)/2 costs O(1) per tau.
struct DistanceProfile {
    double sigmaMirror = 0.0;  ///< +infinity when every shift-free element fixes K
    double sigmaGlide = 0.0;
    std::string mirrorWord;
    std::string glideWord;

    double radius(double tau) const;
};

DistanceProfile distanceProfile(const PointGroup& pg, const FiberedPoint& K);

/// Cubic-Hermite table of ballVolume over [0, pi] with exact node slopes
/// (the geodesic sphere areas). Interpolation error is far below the
/// optimizer tolerances; final results are re-evaluated by quadrature.
class BallVolumeTable {
  public:
    explicit BallVolumeTable(int intervals = 4096);
    double value(double rho) const;

  private:
    std::vector<double> volume_;
    std::vector<double> area_;
    double step_ = 0.0;
};

/// Outcome of the one-dimensional density maximization over tau at fixed K.
/// The optimizer returns the best attained local maximum. On kernel points
/// whose profile has no shift-free bound (the poles), the density also rises
/// again as R approaches the embeddability bound pi; that branch attains no
/// maximum (the bound itself is excluded), so it is reported separately via
/// boundaryRise instead of being returned as an optimum.
struct TauOptimum {
    double tau = 0.0;
    PackingResult packing;
    bool boundaryRise = false;
    double boundaryTau = 0.0;      ///< tau at which R would reach pi
    double boundaryDensity = 0.0;  ///< supremum the rising branch approaches
};

/// Maximizes density over tau > 0 for fixed kernel K: evaluates every
/// breakpoint where the binding constraint family changes, plus the interior
/// maximum of each smooth branch (scan plus golden-section refinement).
TauOptimum optimizeTau(int q, const FiberedPoint& K, const QuadratureConfig& quad = {});

/// Densest packing with trivial stabilizer: kernel points interior to the
/// fundamental triangle (the equator side included, since the glide leaves
/// it stabilizer-free), maximized over position and tau. Coarse 64x64 grid,
/// Nelder-Mead refinement with restarts, nested tau search, and a final
/// quadrature re-evaluation.
PackingResult optimizeSimplyTransitive(int q, const QuadratureConfig& quad = {});

struct MultiplyTransitiveResult {
    std::vector<PackingResult> strata;
    int bestIndex = 0;
};

/// Densest packings with nontrivial stabilizer, one per stratum: the two
/// meridian edges of the fundamental triangle (endpoints on the equator
/// included, the pole excluded) and the three vertices.
MultiplyTransitiveResult optimizeMultiplyTransitive(int q, const QuadratureConfig& quad = {});

}  // namespace s2xr
