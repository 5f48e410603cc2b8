#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "s2xr/geometry.hpp"

using namespace s2xr;

namespace {

std::mt19937& rng() {
    static std::mt19937 gen(20240811u);
    return gen;
}

FiberedPoint randomPoint(double tSpan = 2.0) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    // theta from a uniform sphere direction, phi uniform
    const double theta = std::asin(unit(rng()));
    const double phi = kPi * unit(rng());
    return normalizePoint({phi, theta, tSpan * unit(rng())});
}

}  // namespace

TEST_CASE("normalizePoint wraps and reflects into the canonical ranges") {
    const FiberedPoint a = normalizePoint({0.0, 0.0, 0.0});
    CHECK(a.phi == 0.0);
    CHECK(a.theta == 0.0);

    const FiberedPoint b = normalizePoint({2 * kPi, 0.0, 1.0});
    CHECK(std::abs(b.phi) < 1e-15);
    CHECK(b.t == 1.0);

    // latitude past the pole comes back down the far meridian
    const FiberedPoint c = normalizePoint({0.0, 3 * kPi / 4, 0.0});
    CHECK(c.phi == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(c.theta == doctest::Approx(kPi / 4).epsilon(1e-15));

    CHECK_THROWS_AS(normalizePoint({std::nan(""), 0, 0}), std::domain_error);
    CHECK_THROWS_AS(normalizePoint({0, 1.0 / 0.0, 0}), std::domain_error);
}

TEST_CASE("normalizePoint preserves the sphere point and the fiber") {
    for (int i = 0; i < 200; ++i) {
        std::uniform_real_distribution<double> wide(-10.0, 10.0);
        const FiberedPoint raw{wide(rng()), wide(rng()), wide(rng())};
        // build the reference 3-vector directly from the raw angles
        const Vec3 ref{std::cos(raw.phi) * std::cos(raw.theta),
                       std::sin(raw.phi) * std::cos(raw.theta), std::sin(raw.theta)};
        const FiberedPoint n = normalizePoint(raw);
        CHECK(n.phi <= kPi);
        CHECK(n.phi > -kPi);
        CHECK(std::abs(n.theta) <= kPi / 2);
        CHECK((sphereVector(n) - ref).norm() < 1e-12);
        CHECK(n.t == raw.t);
    }
}

TEST_CASE("toModel evaluates the radial embedding") {
    const ModelPoint a = toModel({0, 0, 0});
    CHECK(a.x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(a.y == 0.0);
    CHECK(a.z == 0.0);

    const ModelPoint b = toModel({kPi / 2, 0, 0});
    CHECK(std::abs(b.x) < 1e-15);
    CHECK(b.y == doctest::Approx(1.0).epsilon(1e-15));

    const ModelPoint c = toModel({0, 0, 1});
    CHECK(c.x == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
}

TEST_CASE("fromModel inverts the embedding") {
    const FiberedPoint a = fromModel({1, 0, 0});
    CHECK(a.phi == 0.0);
    CHECK(a.theta == 0.0);
    CHECK(a.t == 0.0);

    const FiberedPoint b = fromModel({0, std::exp(1.0), 0});
    CHECK(b.phi == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(b.t == doctest::Approx(1.0).epsilon(1e-15));

    // pole: longitude pinned to 0 by convention
    const FiberedPoint c = fromModel({0, 0, 1});
    CHECK(c.phi == 0.0);
    CHECK(c.theta == doctest::Approx(kPi / 2).epsilon(1e-15));

    CHECK_THROWS_AS(fromModel({0, 0, 0}), std::domain_error);
}

TEST_CASE("model round trip is the identity") {
    for (int i = 0; i < 500; ++i) {
        const FiberedPoint p = randomPoint();
        const FiberedPoint back = fromModel(toModel(p));
        CHECK((sphereVector(back) - sphereVector(p)).norm() < 1e-12);
        CHECK(back.t == doctest::Approx(p.t).epsilon(1e-12));
    }
}

TEST_CASE("geodesicPoint special directions") {
    // pure fiber motion: the spherical factor stays put
    const ModelPoint up = geodesicPoint({0.7, kPi / 2, 1.0});
    CHECK(up.x == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(std::abs(up.y) < 1e-15);
    CHECK(std::abs(up.z) < 1e-15);

    // equatorial quarter arc
    const ModelPoint quarter = geodesicPoint({0.0, 0.0, kPi / 2});
    CHECK(std::abs(quarter.x) < 1e-15);
    CHECK(quarter.y == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(geodesicPoint({0, 0, -1.0}), std::domain_error);
}

TEST_CASE("geodesic decomposition: fiber tau sin v, arc tau cos v") {
    const FiberedPoint origin{0, 0, 0};
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double u = kPi * unit(rng());
        const double v = kPi / 2 * unit(rng());
        std::uniform_real_distribution<double> len(0.0, kPi / std::max(1e-9, std::cos(v)));
        const double tau = std::min(len(rng()), 6.0);  // keep the arc below pi
        if (tau * std::cos(v) > kPi) continue;

        const FiberedPoint reached = fromModel(geodesicPoint({u, v, tau}));
        CHECK(std::abs(reached.t - tau * std::sin(v)) < 1e-12);
        CHECK(std::abs(sphericalAngle(origin, reached) - tau * std::cos(v)) < 1e-12);
    }
}

TEST_CASE("sphericalAngle endpoints and the mirrored-optimum arc") {
    const FiberedPoint p = randomPoint();
    CHECK(sphericalAngle(p, p) == 0.0);

    const FiberedPoint north{0, kPi / 2, 0}, south{0, -kPi / 2, 0};
    CHECK(sphericalAngle(north, south) == doctest::Approx(kPi).epsilon(1e-15));

    // two kernel points mirrored across phi = pi/2; arc equals arccos(sin^2 theta)
    const double theta = 0.55737781;
    const FiberedPoint a{kPi / 4, theta, 0}, b{3 * kPi / 4, theta, 0};
    const double arc = sphericalAngle(a, b);
    CHECK(std::abs(arc - 1.28720892) < 1e-7);
    CHECK(std::abs(arc - std::acos(std::sin(theta) * std::sin(theta))) < 1e-12);
}

TEST_CASE("distance closed form") {
    const FiberedPoint p = randomPoint();
    CHECK(distance(p, p) == 0.0);

    const FiberedPoint a{0.3, -0.2, 0.0}, b{0.3, -0.2, 1.7};
    CHECK(distance(a, b) == doctest::Approx(1.7).epsilon(1e-15));

    // antipodal sphere points one glide apart
    const double tau = kPi / std::sqrt(3.0);
    const FiberedPoint north{0, kPi / 2, 0}, southUp{0, -kPi / 2, tau};
    CHECK(distance(north, southUp) == doctest::Approx(2 * kPi / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(std::abs(distance(north, southUp) - 3.62759873) < 1e-7);
}

TEST_CASE("metric axioms hold on random triples") {
    for (int i = 0; i < 1000; ++i) {
        const FiberedPoint a = randomPoint(), b = randomPoint(), c = randomPoint();
        const double ab = distance(a, b), ba = distance(b, a);
        CHECK(ab == ba);
        CHECK(ab >= 0.0);
        CHECK(distance(a, a) == 0.0);
        if (ab > 0) {
            // distinct points stay distinct
            const bool same = (sphereVector(a) - sphereVector(b)).norm() < 1e-15 &&
                              std::abs(a.t - b.t) < 1e-15;
            CHECK_FALSE(same);
        }
        CHECK(distance(a, c) <= ab + distance(b, c) + 1e-12);
    }
}

TEST_CASE("shooting solver reproduces the closed-form distance") {
    CHECK(distanceByShooting({0.1, 0.2, 0.3}, {0.1, 0.2, 0.3}) == doctest::Approx(0.0));
    CHECK(distanceByShooting({0, 0, 0}, {0, 0, 2}) == doctest::Approx(2.0).epsilon(1e-12));

    int tested = 0;
    while (tested < 100) {
        const FiberedPoint a = randomPoint(1.0), b = randomPoint(1.0);
        const double d = distance(a, b);
        if (d >= kPi || d < 1e-6) continue;
        ++tested;
        CHECK(std::abs(distanceByShooting(a, b) - d) <= 1e-9);
    }
}
