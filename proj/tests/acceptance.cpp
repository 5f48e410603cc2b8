// Acceptance gate: one check per shipped guarantee, each printed as a single
// PASS/FAIL line with its runtime. Exit code is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "s2xr/packing.hpp"

using namespace s2xr;

namespace {

int failures = 0;
int criterion = 0;

void report(const std::string& what, bool ok, double seconds) {
    ++criterion;
    std::printf("%s  %d  %s  (%.2f s)\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                seconds);
    if (!ok) ++failures;
}

void runCriterion(const std::string& what, double budgetSeconds,
                  const std::function<bool()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::printf("      exception: %s\n", e.what());
        ok = false;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > budgetSeconds) {
        std::printf("      over time budget: %.2f s > %.0f s\n", seconds, budgetSeconds);
        ok = false;
    }
    report(what, ok, seconds);
}

std::mt19937& rng() {
    static std::mt19937 gen(424242u);
    return gen;
}

FiberedPoint randomPoint(double tSpan) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    return normalizePoint({kPi * unit(rng()), std::asin(unit(rng())), tSpan * unit(rng())});
}

bool closeAbs(double got, double want, double tol, const char* label) {
    const bool ok = std::abs(got - want) <= tol;
    if (!ok)
        std::printf("      %s: got %.12f, wanted %.12f (tol %.1e)\n", label, got, want, tol);
    return ok;
}

// shared across criteria
PackingResult gSimply;
MultiplyTransitiveResult gMulti;

}  // namespace

int main() {
    const double kTau4 = kPi / std::sqrt(3.0);
    const FiberedPoint kPole{0.0, kPi / 2, 0.0};

    runCriterion("ball volumes at the four reference radii", 4.0, [&] {
        bool ok = true;
        for (const auto& [rho, want] :
             std::vector<std::pair<double, double>>{{kPi / 4, 1.94735865},
                                                    {0.64360446, 1.08624788},
                                                    {kPi / 2, 13.74539472},
                                                    {1.81379936, 20.00238509}}) {
            const auto t0 = std::chrono::steady_clock::now();
            const double v = ballVolume({rho});
            const double dt =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            ok = closeAbs(v, want, 1e-6, "volume") && ok;
            if (dt >= 1.0) {
                std::printf("      single volume took %.2f s (budget 1 s)\n", dt);
                ok = false;
            }
        }
        return ok;
    });

    runCriterion("shell and slab volume routes agree to 1e-8 relative", 5.0, [&] {
        bool ok = true;
        for (int i = 1; i <= 30; ++i) {
            const double rho = 0.1 * i;
            const double a = ballVolume({rho});
            const double b = ballVolumeSlab({rho});
            if (std::abs(a - b) / a > 1e-8) {
                std::printf("      rho %.1f: relative gap %.2e\n", rho, std::abs(a - b) / a);
                ok = false;
            }
        }
        return ok;
    });

    runCriterion("closed-form distance matches geodesic shooting on 100 pairs", 5.0, [&] {
        bool ok = true;
        int tested = 0;
        while (tested < 100) {
            const FiberedPoint a = randomPoint(1.0), b = randomPoint(1.0);
            const double d = distance(a, b);
            if (d >= kPi || d < 1e-6) continue;
            ++tested;
            const double shot = distanceByShooting(a, b);
            if (std::abs(shot - d) > 1e-9) {
                std::printf("      pair %d: |%.12f - %.12f| > 1e-9\n", tested, shot, d);
                ok = false;
            }
        }
        return ok;
    });

    runCriterion("simply transitive optimum and the equatorial comparison", 60.0, [&] {
        gSimply = optimizeSimplyTransitive(2);
        bool ok = closeAbs(gSimply.K.phi, kPi / 4, 1e-6, "phi");
        ok = closeAbs(gSimply.K.theta, 0.55737781, 1e-6, "theta") && ok;
        ok = closeAbs(gSimply.R, 0.64360446, 1e-6, "R") && ok;
        ok = closeAbs(gSimply.density, 0.53722971, 1e-6, "density") && ok;
        const PackingResult mid = density({2, {kPi / 4, 0.0, 0.0}, kPi / 2});
        ok = closeAbs(mid.density, 0.39461737, 1e-6, "equatorial density") && ok;
        if (!(mid.density < gSimply.density)) {
            std::printf("      equatorial configuration is not smaller\n");
            ok = false;
        }
        return ok;
    });

    runCriterion("multiply transitive strata: edge endpoint and pole vertex", 60.0, [&] {
        gMulti = optimizeMultiplyTransitive(2);
        const PackingResult* edge = nullptr;
        const PackingResult* pole = nullptr;
        for (const auto& s : gMulti.strata) {
            if (s.stratum == "meridian edge phi=pi/q") edge = &s;
            if (s.stratum == "pole vertex") pole = &s;
        }
        if (edge == nullptr || pole == nullptr) {
            std::printf("      expected strata missing\n");
            return false;
        }
        bool ok = closeAbs(edge->R, kPi / 2, 1e-6, "edge R");
        ok = closeAbs(edge->density, 0.69634983, 1e-6, "edge density") && ok;
        ok = closeAbs(pole->R, 1.81379936, 1e-8, "pole R") && ok;
        ok = closeAbs(pole->density, 0.87757183, 1e-6, "pole density") && ok;
        if (gMulti.strata[gMulti.bestIndex].stratum != "pole vertex") {
            std::printf("      best stratum is %s\n",
                        gMulti.strata[gMulti.bestIndex].stratum.c_str());
            ok = false;
        }
        return ok;
    });

    runCriterion("touching number of the pole optimum is 4", 10.0, [&] {
        const int n = touchingNumber({2, kPole, kTau4});
        if (n != 4) std::printf("      touching number %d\n", n);
        return n == 4;
    });

    runCriterion("translation-part classes: 6 for q=3, 4 for q=2, glide flagged", 1.0, [&] {
        const auto q3 = frobeniusSolve(3);
        const auto q2 = frobeniusSolve(2);
        bool ok = q3.size() == 6 && q2.size() == 4;
        if (!ok) std::printf("      class counts %zu / %zu\n", q3.size(), q2.size());
        bool glide = false;
        for (const auto& c : q3)
            if (c.glideFamily && c.representative[2].str() == "1/2" &&
                c.representative[0].str() == "0")
                glide = true;
        if (!glide) std::printf("      glide class missing\n");
        return ok && glide;
    });

    runCriterion("property suites: metric, invariance, group order, feasibility", 60.0, [&] {
        bool ok = true;
        for (int i = 0; i < 1000; ++i) {
            const FiberedPoint a = randomPoint(2.0), b = randomPoint(2.0), c = randomPoint(2.0);
            if (distance(a, b) != distance(b, a) || distance(a, a) != 0.0 ||
                distance(a, c) > distance(a, b) + distance(b, c) + 1e-12) {
                std::printf("      metric axiom violated at triple %d\n", i);
                ok = false;
                break;
            }
        }

        const SpaceGroup G = makeGlideGroup(2, 0.8);
        std::uniform_int_distribution<int> pick(0, 7);
        for (int i = 0; i < 100; ++i) {
            const Isometry g = G.elementIsometry(pick(rng()));
            const FiberedPoint p = randomPoint(2.0), r = randomPoint(2.0);
            if (std::abs(distance(applyIsometry(g, p), applyIsometry(g, r)) - distance(p, r)) >
                1e-10) {
                std::printf("      isometry invariance violated at %d\n", i);
                ok = false;
                break;
            }
        }

        for (int q = 2; q <= 5; ++q)
            if (buildPointGroup(q).elements.size() != static_cast<size_t>(4 * q)) {
                std::printf("      group order wrong for q=%d\n", q);
                ok = false;
            }

        // every returned packing is feasible
        std::vector<PackingResult> all = gMulti.strata;
        all.push_back(gSimply);
        for (const auto& r : all) {
            const SpaceGroup H = makeGlideGroup(2, r.tau);
            for (const auto& p : orbit(H, r.K, 2 * H.fiberPeriod + 2 * kPi)) {
                const double d = distance(r.K, p.point);
                if (d > 1e-12 && d < 2 * r.R - 1e-9) {
                    std::printf("      orbit point at %.12f < 2R in stratum %s\n", d,
                                r.stratum.c_str());
                    ok = false;
                }
            }
        }

        // density ordering of the four reference configurations
        const double d1 = gSimply.density;
        const double d2 = density({2, {kPi / 4, 0.0, 0.0}, kPi / 2}).density;
        const double d3 = density({2, {kPi / 2, 0.0, 0.0}, kPi}).density;
        const double d4 = density({2, kPole, kTau4}).density;
        if (!(d4 > d3 && d3 > d1 && d1 > d2)) {
            std::printf("      ordering broken: %.8f %.8f %.8f %.8f\n", d4, d3, d1, d2);
            ok = false;
        }
        return ok;
    });

    runCriterion("200x200x100 grid finds nothing above the refined optimum", 180.0, [&] {
        const PointGroup pg = buildPointGroup(2);
        const BallVolumeTable table;
        const double cellPerTau = sphericalTriangleArea(kPi / 2, kPi / 2, kPi / 2) * 2.0;

        double bestGrid = 0.0, bestPhi = 0, bestTheta = 0, bestTau = 0;
        for (int i = 0; i < 200; ++i) {
            const double phi = (i + 0.5) * (kPi / 2) / 200;
            for (int j = 0; j < 200; ++j) {
                const double theta = j * (kPi / 2) / 200;
                const DistanceProfile prof = distanceProfile(pg, {phi, theta, 0.0});
                for (int k = 0; k < 100; ++k) {
                    const double tau = (k + 0.5) * kPi / 100;
                    const double R = prof.radius(tau);
                    if (R <= 0.0 || R >= kPi) continue;
                    const double delta = table.value(R) / (cellPerTau * tau);
                    if (delta > bestGrid) {
                        bestGrid = delta;
                        bestPhi = phi;
                        bestTheta = theta;
                        bestTau = tau;
                    }
                }
            }
        }
        std::printf("      grid best %.9f at (%.4f, %.4f, tau %.4f); refined %.9f\n", bestGrid,
                    bestPhi, bestTheta, bestTau, gSimply.density);
        return bestGrid <= gSimply.density + 1e-6;
    });

    std::printf("%d of %d criteria failed\n", failures, criterion);
    return failures;
}
