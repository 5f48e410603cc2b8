#pragma once

#include <array>
#include <string>
#include <vector>

#include "s2xr/geometry.hpp"
#include "s2xr/linalg.hpp"

namespace s2xr {

/// Isometry of S2xR: an orthogonal sphere part S, a fiber direction flag
/// eps (+1 identity, -1 point reflection of the line), and a fiber
/// translation r. Composition follows the product rule
///   (S_a, eps_a, r_a) (S_b, eps_b, r_b) = (S_a S_b, eps_a eps_b, r_a eps_b + r_b),
/// and the action on points is the right action fixed by applyIsometry.
struct Isometry {
    Mat3 S;
    int eps = 1;
    double r = 0.0;
};

Isometry identityIsometry();
Isometry composeIsometry(const Isometry& a, const Isometry& b);
Isometry inverseIsometry(const Isometry& g);

/// Right action on points: the sphere part acts as v -> S^T v so that
/// applyIsometry(composeIsometry(a, b), p) = applyIsometry(b, applyIsometry(a, p)),
/// matching exponent notation for orbits; the fiber maps as t -> eps t + r.
FiberedPoint applyIsometry(const Isometry& g, const FiberedPoint& p);

/// Exact rational, used for translation parts in units of the fiber period.
/// Values are kept reduced with den > 0.
struct Rational {
    long num = 0;
    long den = 1;

    Rational() = default;
    Rational(long n, long d);

    Rational operator+(const Rational& o) const;
    bool operator==(const Rational& o) const = default;

    /// Reduction into [0, 1): translation parts live modulo the lattice.
    Rational mod1() const;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;  // "0", "1/2", ...
};

/// One element of the finite point group, with a shortest generator word.
struct GroupElement {
    Mat3 S;
    std::string word;           // "e", "g1", "g3 g1", ...
    std::vector<int> letters;   // generator indices (0-based) spelling the word
};

/// Spherical triangle group with angles (pi/q, pi/2, pi/2), order 4q.
/// Mirrors: g1 is the meridian plane through A2 = (phi=pi/q, theta=0) and the
/// pole, g2 the meridian plane through A1 = (phi=0, theta=0) and the pole,
/// g3 the equator plane (fixing the side A1 A2).
struct PointGroup {
    int q = 2;
    std::array<Mat3, 3> mirrors;
    std::vector<GroupElement> elements;  // element 0 is the identity
    std::string label;                   // orbifold-style signature
};

/// Enumerates all 4q elements by breadth-first word closure over the three
/// mirrors (matrix dedup tolerance 1e-10). Throws std::domain_error for q < 2.
PointGroup buildPointGroup(int q);

/// Fibered space group over a PointGroup: one rational translation part per
/// generator (modulo the lattice) and the metric fiber period of the lattice
/// generator. elementShift caches the accumulated translation part of every
/// point-group element, which is well defined exactly when the parts satisfy
/// the Frobenius congruences of the presentation.
struct SpaceGroup {
    PointGroup pointGroup;
    std::array<Rational, 3> translationParts;
    double fiberPeriod = 0.0;
    std::vector<Rational> elementShift;

    /// Full isometry of element i (sphere part plus glide translation).
    Isometry elementIsometry(int i) const;
};

/// Builds a SpaceGroup, walking the Cayley graph to accumulate per-element
/// translation parts. Throws std::domain_error if the parts are inconsistent
/// with the group relations (Frobenius failure) or fiberPeriod <= 0.
SpaceGroup makeSpaceGroup(const PointGroup& pg, const std::array<Rational, 3>& parts,
                          double fiberPeriod);

/// The glide family: translation parts (0, 0, 1/2) over the (2,2,q) point
/// group with fiber period 2 tau, so the equatorial mirror becomes a glide
/// reflection by tau.
SpaceGroup makeGlideGroup(int q, double tau);

/// Equivalence class of translation-part solutions. Involutivity of the
/// generators forces each part into {0, 1/2}; the rotation relation
/// (g1 g2)^q additionally demands q (t1 + t2) = 0 (mod 1), which fails for
/// the mixed classes when q is odd. Classes with rotationCongruenceHolds set
/// lift to space groups for the given q; the others are still reported (they
/// lift exactly when q is even) so the classical list of six classes stays
/// visible for every q >= 3.
struct FrobeniusClass {
    std::array<Rational, 3> representative;
    std::vector<std::array<Rational, 3>> members;
    bool rotationCongruenceHolds = true;
    bool glideFamily = false;  // representative (0, 0, 1/2)
};

/// Enumerates translation-part classes for the (2,2,q) presentation, grouped
/// under the generator automorphism g1 <-> g2 (all mirror permutations for
/// q = 2, where the relations are fully symmetric).
std::vector<FrobeniusClass> frobeniusSolve(int q);

struct OrbitPoint {
    FiberedPoint point;
    std::string word;  // element word with lattice offset, e.g. "g3 + 2L"
    int elementIndex = 0;
    long latticeIndex = 0;
};

/// All distinct orbit points of K with fiber coordinate in [-window, window]:
/// every point-group element with its glide shift, combined with all lattice
/// translations reaching the window. Points closer than 1e-10 are merged.
std::vector<OrbitPoint> orbit(const SpaceGroup& G, const FiberedPoint& K, double fiberWindow);

/// Order of the stabilizer of K in G (lattice shifts included; only finitely
/// many elements can fix a point). The result divides 4q.
int stabilizerOrder(const SpaceGroup& G, const FiberedPoint& K);

}  // namespace s2xr
