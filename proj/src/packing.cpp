#include "s2xr/packing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace s2xr {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double vecAngle(const Vec3& a, const Vec3& b) {
    return std::atan2(a.cross(b).norm(), a.dot(b));
}

/// Fundamental-prism share of one orbit point, per unit tau:
/// stabilizer * triangleArea(pi/q, pi/2, pi/2) * 2.
double cellPerTau(int q, int stabilizer) {
    return stabilizer * sphericalTriangleArea(kPi / q, kPi / 2, kPi / 2) * 2.0;
}

using VolumeFn = std::function<double(double)>;

double goldenMax(const std::function<double(double)>& f, double a, double b) {
    constexpr double gr = 0.6180339887498949;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > 1e-13 * std::max(1.0, std::abs(a) + std::abs(b))) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

struct TauSearchResult {
    double tau = 0.0;
    double density = -1.0;
    bool boundaryRise = false;
    double boundaryTau = 0.0;
    double boundaryDensity = 0.0;
};

/// Maximizes vol(R(tau)) / (cellFactor tau) over tau > 0 for a fixed profile.
/// Candidates are the breakpoints of R(tau) (evaluated exactly, so optima
/// sitting on a kink are returned to machine precision) plus the interior
/// maximum of each smooth branch. A branch that increases monotonically into
/// the embeddability bound R -> pi attains no maximum there; it is excluded
/// from the candidates and reported through the boundary fields instead.
TauSearchResult searchTau(const DistanceProfile& prof, double cellFactor, const VolumeFn& vol) {
    const double s0 = prof.sigmaMirror;
    const double s1 = prof.sigmaGlide;

    const auto densityAt = [&](double tau) {
        const double R = prof.radius(tau);
        if (!(R > 0.0) || R >= kPi) return -1.0;
        return vol(R) / (cellFactor * tau);
    };

    std::vector<double> bps;
    double tauHi = 0.0;
    double tauEmbed = 0.0;
    if (std::isfinite(s0)) {
        // R <= s0/2 < pi for every tau; past the last breakpoint the density
        // decays like 1/tau, so a finite horizon suffices.
        if (s0 > s1) bps.push_back(std::sqrt(s0 * s0 - s1 * s1));
        bps.push_back(0.5 * s0);
        tauHi = 2.0 * s0 + 2.0;
    } else {
        // No shift-free bound (pole kernels): R(tau) reaches pi at tauEmbed.
        tauEmbed = std::sqrt(4.0 * kPi * kPi - s1 * s1);
        tauHi = tauEmbed * (1.0 - 1e-9);
    }
    if (s1 > 1e-12) bps.push_back(s1 / std::sqrt(3.0));

    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end(),
                          [](double a, double b) { return b - a <= 1e-12 * std::max(1.0, b); }),
              bps.end());
    while (!bps.empty() && bps.back() >= tauHi) bps.pop_back();

    TauSearchResult out;
    const auto consider = [&](double tau) {
        const double val = densityAt(tau);
        if (val > out.density) {
            out.density = val;
            out.tau = tau;
        }
    };
    for (double b : bps) consider(b);

    std::vector<double> edges = {0.0};
    edges.insert(edges.end(), bps.begin(), bps.end());
    edges.push_back(tauHi);

    const int samples = 192;
    for (size_t seg = 0; seg + 1 < edges.size(); ++seg) {
        const double lo = edges[seg], hi = edges[seg + 1];
        if (hi - lo <= 1e-12 * std::max(1.0, hi)) continue;
        const double h = (hi - lo) / samples;

        int bestJ = -1;
        double bestVal = -kInf, prevVal = -kInf, lastVal = -kInf;
        for (int j = 0; j < samples; ++j) {
            const double tau = lo + (j + 0.5) * h;
            const double val = densityAt(tau);
            if (val > bestVal) {
                bestVal = val;
                bestJ = j;
            }
            prevVal = lastVal;
            lastVal = val;
        }
        if (bestJ < 0) continue;

        const bool atEmbedEdge = !std::isfinite(s0) && seg + 2 == edges.size();
        if (atEmbedEdge && bestJ == samples - 1 && lastVal > prevVal) {
            // Rising into the open embeddability boundary: no maximum exists
            // on this branch; report the supremum it approaches.
            out.boundaryRise = true;
            out.boundaryTau = tauEmbed;
            out.boundaryDensity = vol(kPi - 1e-9) / (cellFactor * tauEmbed);
            continue;
        }
        const double bl = std::max(lo, lo + (bestJ - 0.5) * h);
        const double bh = std::min(hi, lo + (bestJ + 1.5) * h);
        consider(goldenMax(densityAt, bl, bh));
    }

    if (!(out.density > 0.0))
        throw std::runtime_error("searchTau: no feasible tau with positive density");
    return out;
}

}  // namespace

double DistanceProfile::radius(double tau) const {
    return 0.5 * std::min({sigmaMirror, std::hypot(sigmaGlide, tau), 2.0 * tau});
}

DistanceProfile distanceProfile(const PointGroup& pg, const FiberedPoint& Kraw) {
    const FiberedPoint K = normalizePoint(Kraw);
    const Vec3 v = sphereVector(K);

    DistanceProfile prof;
    prof.sigmaMirror = kInf;
    prof.sigmaGlide = kInf;
    for (const GroupElement& e : pg.elements) {
        const bool glide = std::count(e.letters.begin(), e.letters.end(), 2) % 2 != 0;
        const double sigma = vecAngle(v, e.S.applyRow(v));
        if (!glide) {
            if (sigma < 1e-12) continue;  // stabilizer element, no constraint
            if (sigma < prof.sigmaMirror) {
                prof.sigmaMirror = sigma;
                prof.mirrorWord = e.word;
            }
        } else if (sigma < prof.sigmaGlide) {
            prof.sigmaGlide = sigma;
            prof.glideWord = e.word;
        }
    }
    return prof;
}

BallVolumeTable::BallVolumeTable(int intervals) {
    if (intervals < 8) throw std::domain_error("BallVolumeTable: too few intervals");
    step_ = kPi / intervals;

    QuadratureConfig inner;
    inner.absTol = 1e-13;
    inner.relTol = 1e-12;
    const auto sphereArea = [&](double rho) {
        if (rho == 0.0) return 0.0;
        const auto f = [rho](double v) { return std::sin(rho * std::cos(v)); };
        return 2.0 * kPi * rho * integrate(f, -kPi / 2, kPi / 2, inner).value;
    };

    area_.resize(intervals + 1);
    volume_.resize(intervals + 1);
    for (int i = 0; i <= intervals; ++i) area_[i] = sphereArea(i * step_);

    volume_[0] = 0.0;
    QuadratureConfig panel;
    panel.absTol = 1e-13;
    panel.relTol = 1e-12;
    panel.maxDepth = 8;
    for (int i = 0; i < intervals; ++i)
        volume_[i + 1] =
            volume_[i] + integrate(sphereArea, i * step_, (i + 1) * step_, panel).value;
}

double BallVolumeTable::value(double rho) const {
    if (!(rho > 0.0)) return 0.0;
    const int n = static_cast<int>(volume_.size()) - 1;
    if (rho > kPi) rho = kPi;
    int i = std::min(static_cast<int>(rho / step_), n - 1);
    const double t = (rho - i * step_) / step_;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * volume_[i] + (t3 - 2 * t2 + t) * step_ * area_[i] +
           (-2 * t3 + 3 * t2) * volume_[i + 1] + (t3 - t2) * step_ * area_[i + 1];
}

namespace {

struct OrbitScan {
    double R = 0.0;
    int stabilizer = 0;
    int touching = 0;
    std::vector<std::string> binding;
};

OrbitScan scanOrbit(const PackingConfig& c) {
    if (c.q < 2) throw std::domain_error("packing: q must be >= 2");
    if (!(c.tau > 0.0)) throw std::domain_error("packing: tau must be > 0");
    const FiberedPoint K = normalizePoint(c.K);
    const SpaceGroup G = makeGlideGroup(c.q, c.tau);

    const double window = std::abs(K.t) + 2.0 * G.fiberPeriod + 2.0 * kPi;
    const std::vector<OrbitPoint> pts = orbit(G, K, window);

    OrbitScan scan;
    scan.stabilizer = stabilizerOrder(G, K);

    double dMin = kInf;
    std::vector<double> dist(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        dist[i] = distance(K, pts[i].point);
        if (dist[i] > 1e-12 && dist[i] < dMin) dMin = dist[i];
    }
    if (!std::isfinite(dMin)) throw std::runtime_error("packing: orbit scan found no neighbor");

    scan.R = 0.5 * dMin;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (dist[i] <= 1e-12) continue;
        if (dist[i] - dMin <= 1e-9) scan.binding.push_back(pts[i].word);
        if (std::abs(dist[i] - dMin) <= 1e-7) ++scan.touching;
    }
    return scan;
}

}  // namespace

MaxRadiusResult maxRadius(const PackingConfig& c) {
    const OrbitScan scan = scanOrbit(c);
    return {scan.R, scan.binding};
}

PackingResult density(const PackingConfig& c, const QuadratureConfig& quad) {
    const OrbitScan scan = scanOrbit(c);
    if (scan.R >= kPi)
        throw std::domain_error("density: ball radius reaches the embeddability bound pi");

    const double vol = ballVolume({scan.R}, quad);
    const double cell =
        scan.stabilizer *
        prismVolume(sphericalTriangleArea(kPi / c.q, kPi / 2, kPi / 2), 2.0 * c.tau);

    PackingResult r;
    r.K = normalizePoint(c.K);
    r.tau = c.tau;
    r.R = scan.R;
    r.stabilizerOrder = scan.stabilizer;
    r.density = vol / cell;
    r.touchingNumber = scan.touching;
    r.bindingConstraints = scan.binding;
    if (r.density > 1.0 + 1e-9)
        throw std::runtime_error("density: packing density exceeded 1, invariant violated");
    return r;
}

int touchingNumber(const PackingConfig& c) { return scanOrbit(c).touching; }

TauOptimum optimizeTau(int q, const FiberedPoint& Kraw, const QuadratureConfig& quad) {
    const FiberedPoint K = normalizePoint(Kraw);
    const PointGroup pg = buildPointGroup(q);
    const DistanceProfile prof = distanceProfile(pg, K);
    const int stab = stabilizerOrder(makeGlideGroup(q, 1.0), K);

    const VolumeFn vol = [&](double rho) { return ballVolume({rho}, quad); };
    const TauSearchResult s = searchTau(prof, cellPerTau(q, stab), vol);

    TauOptimum out;
    out.tau = s.tau;
    out.boundaryRise = s.boundaryRise;
    out.boundaryTau = s.boundaryTau;
    out.boundaryDensity = s.boundaryDensity;
    out.packing = density({q, K, s.tau}, quad);
    return out;
}

namespace {

/// Nelder-Mead ascent on f with a fresh right simplex of the given scale.
std::array<double, 2> nelderMead(const std::function<double(double, double)>& f,
                                 std::array<double, 2> start, double scale, int maxIter) {
    std::array<std::array<double, 2>, 3> x = {
        start, {start[0] + scale, start[1]}, {start[0], start[1] + scale}};
    std::array<double, 3> fx;
    for (int i = 0; i < 3; ++i) fx[i] = f(x[i][0], x[i][1]);

    for (int it = 0; it < maxIter; ++it) {
        // order: 0 best (largest), 2 worst
        std::array<int, 3> idx = {0, 1, 2};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fx[a] > fx[b]; });
        const std::array<std::array<double, 2>, 3> xs = {x[idx[0]], x[idx[1]], x[idx[2]]};
        const std::array<double, 3> fs = {fx[idx[0]], fx[idx[1]], fx[idx[2]]};
        x = xs;
        fx = fs;

        const double diam = std::max(std::hypot(x[1][0] - x[0][0], x[1][1] - x[0][1]),
                                     std::hypot(x[2][0] - x[0][0], x[2][1] - x[0][1]));
        if (diam < 1e-12) break;

        const std::array<double, 2> c = {0.5 * (x[0][0] + x[1][0]), 0.5 * (x[0][1] + x[1][1])};
        const auto tryPoint = [&](double alpha) -> std::array<double, 2> {
            return {c[0] + alpha * (c[0] - x[2][0]), c[1] + alpha * (c[1] - x[2][1])};
        };

        const std::array<double, 2> xr = tryPoint(1.0);
        const double fr = f(xr[0], xr[1]);
        if (fr > fx[0]) {
            const std::array<double, 2> xe = tryPoint(2.0);
            const double fe = f(xe[0], xe[1]);
            if (fe > fr) {
                x[2] = xe;
                fx[2] = fe;
            } else {
                x[2] = xr;
                fx[2] = fr;
            }
        } else if (fr > fx[1]) {
            x[2] = xr;
            fx[2] = fr;
        } else {
            const std::array<double, 2> xc = tryPoint(-0.5);
            const double fc = f(xc[0], xc[1]);
            if (fc > fx[2]) {
                x[2] = xc;
                fx[2] = fc;
            } else {
                for (int i = 1; i < 3; ++i) {
                    x[i] = {0.5 * (x[i][0] + x[0][0]), 0.5 * (x[i][1] + x[0][1])};
                    fx[i] = f(x[i][0], x[i][1]);
                }
            }
        }
    }

    int best = 0;
    for (int i = 1; i < 3; ++i)
        if (fx[i] > fx[best]) best = i;
    return x[best];
}

/// Compass/diagonal pattern descent with shrinking steps; robust on the
/// gradient kinks where several binding constraints meet.
std::array<double, 2> patternPolish(const std::function<double(double, double)>& f,
                                    std::array<double, 2> x, double step) {
    double fx = f(x[0], x[1]);
    const std::array<std::array<double, 2>, 8> dirs = {
        {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    while (step > 1e-11) {
        bool moved = false;
        for (const auto& d : dirs) {
            const std::array<double, 2> y = {x[0] + step * d[0], x[1] + step * d[1]};
            const double fy = f(y[0], y[1]);
            if (fy > fx) {
                x = y;
                fx = fy;
                moved = true;
                break;
            }
        }
        if (!moved) step *= 0.5;
    }
    return x;
}

}  // namespace

PackingResult optimizeSimplyTransitive(int q, const QuadratureConfig& quad) {
    const PointGroup pg = buildPointGroup(q);
    const BallVolumeTable table;
    const VolumeFn tableVol = [&](double rho) { return table.value(rho); };
    const double cellFactor = cellPerTau(q, 1);

    // The profile is invariant under the point-group reflections, so the
    // objective extends smoothly across the fundamental-cell walls and the
    // search needs no domain clamping; the result is folded back at the end.
    const auto objective = [&](double phi, double theta) {
        const DistanceProfile prof = distanceProfile(pg, {phi, theta, 0.0});
        if (!std::isfinite(prof.sigmaMirror)) return -1.0;  // pole, different stratum
        return searchTau(prof, cellFactor, tableVol).density;
    };

    const double phiSpan = kPi / q;
    const int grid = 64;
    std::array<double, 2> best = {phiSpan / 2, 0.0};
    double bestVal = -kInf;
    for (int i = 0; i < grid; ++i) {
        const double phi = (i + 0.5) * phiSpan / grid;
        for (int j = 0; j < grid; ++j) {
            const double theta = j * (kPi / 2) / grid;  // equator row included
            const double val = objective(phi, theta);
            if (val > bestVal) {
                bestVal = val;
                best = {phi, theta};
            }
        }
    }

    double scale = phiSpan / grid;
    for (int round = 0; round < 5; ++round) {
        best = nelderMead(objective, best, scale, 400);
        scale *= 0.02;
    }
    best = patternPolish(objective, best, 1e-4);

    // Fold into the fundamental triangle: phi modulo the dihedral reflections,
    // theta into the upper hemisphere.
    double phiStar = std::abs(std::remainder(best[0], 2.0 * kPi / q));
    double thetaStar = std::abs(best[1]);

    const DistanceProfile prof = distanceProfile(pg, {phiStar, thetaStar, 0.0});
    const VolumeFn exactVol = [&](double rho) { return ballVolume({rho}, quad); };
    const TauSearchResult s = searchTau(prof, cellFactor, exactVol);

    PackingResult out = density({q, {phiStar, thetaStar, 0.0}, s.tau}, quad);
    out.stratum = "interior";
    return out;
}

MultiplyTransitiveResult optimizeMultiplyTransitive(int q, const QuadratureConfig& quad) {
    const PointGroup pg = buildPointGroup(q);
    const BallVolumeTable table;
    const VolumeFn tableVol = [&](double rho) { return table.value(rho); };

    MultiplyTransitiveResult out;

    const auto searchEdge = [&](double phiFixed, const std::string& label) {
        const int stab = stabilizerOrder(makeGlideGroup(q, 1.0), {phiFixed, 0.3, 0.0});
        const double cellFactor = cellPerTau(q, stab);
        const auto g = [&](double theta) {
            return searchTau(distanceProfile(pg, {phiFixed, theta, 0.0}), cellFactor, tableVol)
                .density;
        };

        // Scan [0, pi/2): endpoints on the equator belong to the stratum (the
        // stabilizer stays the single meridian mirror), the pole does not.
        const int n = 384;
        const double hiTheta = (kPi / 2) * (1.0 - 1e-9);
        double bestTheta = 0.0, bestVal = -kInf;
        for (int j = 0; j < n; ++j) {
            const double theta = j * hiTheta / n;
            const double val = g(theta);
            if (val > bestVal) {
                bestVal = val;
                bestTheta = theta;
            }
        }
        const double h = hiTheta / n;
        const double refined = goldenMax(g, std::max(0.0, bestTheta - h), bestTheta + h);
        // Prefer the exact endpoint when the refinement cannot beat it.
        double thetaStar = bestTheta;
        double valStar = bestVal;
        if (g(refined) > valStar) {
            thetaStar = refined;
            valStar = g(refined);
        }

        const DistanceProfile prof = distanceProfile(pg, {phiFixed, thetaStar, 0.0});
        const VolumeFn exactVol = [&](double rho) { return ballVolume({rho}, quad); };
        const TauSearchResult s = searchTau(prof, cellPerTau(q, stab), exactVol);
        PackingResult r = density({q, {phiFixed, thetaStar, 0.0}, s.tau}, quad);
        r.stratum = label;
        return r;
    };

    out.strata.push_back(searchEdge(0.0, "meridian edge phi=0"));
    out.strata.push_back(searchEdge(kPi / q, "meridian edge phi=pi/q"));

    const auto vertex = [&](const FiberedPoint& K, const std::string& label) {
        TauOptimum t = optimizeTau(q, K, quad);
        t.packing.stratum = label;
        return t.packing;
    };
    out.strata.push_back(vertex({0.0, 0.0, 0.0}, "equator vertex phi=0"));
    out.strata.push_back(vertex({kPi / q, 0.0, 0.0}, "equator vertex phi=pi/q"));
    out.strata.push_back(vertex({0.0, kPi / 2, 0.0}, "pole vertex"));

    for (size_t i = 1; i < out.strata.size(); ++i)
        if (out.strata[i].density > out.strata[out.bestIndex].density)
            out.bestIndex = static_cast<int>(i);
    return out;
}

}  // namespace s2xr
