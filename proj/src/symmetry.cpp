#include "s2xr/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace s2xr {

Isometry identityIsometry() { return {}; }

Isometry composeIsometry(const Isometry& a, const Isometry& b) {
    return {a.S * b.S, a.eps * b.eps, a.r * b.eps + b.r};
}

Isometry inverseIsometry(const Isometry& g) {
    return {g.S.transposed(), g.eps, -g.r * g.eps};
}

FiberedPoint applyIsometry(const Isometry& g, const FiberedPoint& p) {
    const Vec3 v = g.S.applyRow(sphereVector(p));
    const FiberedPoint sphere = fromModel({v.x, v.y, v.z});
    return {sphere.phi, sphere.theta, g.eps * p.t + g.r};
}

Rational::Rational(long n, long d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long g = std::gcd(std::abs(num), den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::mod1() const {
    long n = num % den;
    if (n < 0) n += den;
    return Rational(n, den);
}

std::string Rational::str() const {
    if (num == 0) return "0";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

const char* const kGeneratorNames[3] = {"g1", "g2", "g3"};

bool sameMatrix(const Mat3& a, const Mat3& b) { return a.frobeniusDistance(b) < 1e-10; }

std::string appendLetter(const std::string& word, int letter) {
    if (word == "e") return kGeneratorNames[letter];
    return word + " " + kGeneratorNames[letter];
}

}  // namespace

PointGroup buildPointGroup(int q) {
    if (q < 2) throw std::domain_error("buildPointGroup: q must be >= 2");

    PointGroup pg;
    pg.q = q;
    const double a = kPi / q;
    pg.mirrors[0] = mirrorAcross({-std::sin(a), std::cos(a), 0.0});  // meridian through A2
    pg.mirrors[1] = mirrorAcross({0.0, 1.0, 0.0});                   // meridian through A1
    pg.mirrors[2] = mirrorAcross({0.0, 0.0, 1.0});                   // equator
    pg.label = "(+, 0, [] {(2, 2, " + std::to_string(q) + ")})";

    pg.elements.push_back({Mat3::identity(), "e", {}});
    std::deque<int> queue = {0};
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        for (int letter = 0; letter < 3; ++letter) {
            const Mat3 next = pg.elements[cur].S * pg.mirrors[letter];
            const bool known = std::any_of(pg.elements.begin(), pg.elements.end(),
                                           [&](const GroupElement& e) { return sameMatrix(e.S, next); });
            if (known) continue;
            GroupElement e;
            e.S = next;
            e.word = appendLetter(pg.elements[cur].word, letter);
            e.letters = pg.elements[cur].letters;
            e.letters.push_back(letter);
            pg.elements.push_back(std::move(e));
            queue.push_back(static_cast<int>(pg.elements.size()) - 1);
            if (pg.elements.size() > static_cast<size_t>(8 * q))
                throw std::runtime_error("buildPointGroup: closure exceeded expected order");
        }
    }
    if (pg.elements.size() != static_cast<size_t>(4 * q))
        throw std::runtime_error("buildPointGroup: closure order is not 4q");
    return pg;
}

Isometry SpaceGroup::elementIsometry(int i) const {
    return {pointGroup.elements[i].S, 1, elementShift[i].value() * fiberPeriod};
}

SpaceGroup makeSpaceGroup(const PointGroup& pg, const std::array<Rational, 3>& parts,
                          double fiberPeriod) {
    if (!(fiberPeriod > 0.0)) throw std::domain_error("makeSpaceGroup: fiberPeriod must be > 0");

    SpaceGroup G;
    G.pointGroup = pg;
    G.translationParts = parts;
    G.fiberPeriod = fiberPeriod;
    G.elementShift.assign(pg.elements.size(), Rational());

    // Walk the Cayley graph. Every element's accumulated translation part is
    // well defined exactly when the parts pass the Frobenius congruences, so
    // any mismatch on a revisited element is a genuine inconsistency.
    std::vector<char> visited(pg.elements.size(), 0);
    visited[0] = 1;
    std::deque<int> queue = {0};
    const auto indexOf = [&](const Mat3& m) {
        for (size_t i = 0; i < pg.elements.size(); ++i)
            if (sameMatrix(pg.elements[i].S, m)) return static_cast<int>(i);
        throw std::runtime_error("makeSpaceGroup: product left the enumerated group");
    };
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        for (int letter = 0; letter < 3; ++letter) {
            const int next = indexOf(pg.elements[cur].S * pg.mirrors[letter]);
            const Rational shift = (G.elementShift[cur] + parts[letter]).mod1();
            if (!visited[next]) {
                visited[next] = 1;
                G.elementShift[next] = shift;
                queue.push_back(next);
            } else if (!(G.elementShift[next] == shift)) {
                throw std::domain_error(
                    "makeSpaceGroup: translation parts violate the Frobenius congruences");
            }
        }
    }
    return G;
}

SpaceGroup makeGlideGroup(int q, double tau) {
    if (!(tau > 0.0)) throw std::domain_error("makeGlideGroup: tau must be > 0");
    return makeSpaceGroup(buildPointGroup(q), {Rational(0, 1), Rational(0, 1), Rational(1, 2)},
                          2.0 * tau);
}

std::vector<FrobeniusClass> frobeniusSolve(int q) {
    if (q < 2) throw std::domain_error("frobeniusSolve: q must be >= 2");

    const Rational zero(0, 1), half(1, 2);
    using Triple = std::array<Rational, 3>;

    // Candidates forced by involutivity; the published ordering of the six
    // classes, used for representative choice and output order.
    const std::vector<Triple> preference = {
        {zero, zero, zero}, {zero, zero, half}, {half, half, half},
        {half, half, zero}, {zero, half, zero}, {zero, half, half},
        {half, zero, zero}, {half, zero, half}};

    const auto rank = [&](const Triple& t) {
        for (size_t i = 0; i < preference.size(); ++i)
            if (preference[i] == t) return i;
        return preference.size();
    };

    std::vector<Triple> all;
    for (int i = 0; i < 8; ++i)
        all.push_back({i & 1 ? half : zero, i & 2 ? half : zero, i & 4 ? half : zero});

    // Orbit of a candidate under the generator automorphisms: g1 <-> g2
    // always; all permutations when q = 2, where the relations treat the
    // three mirrors symmetrically.
    const auto classMembers = [&](const Triple& t) {
        std::vector<Triple> members = {t, {t[1], t[0], t[2]}};
        if (q == 2) {
            members = {{t[0], t[1], t[2]}, {t[0], t[2], t[1]}, {t[1], t[0], t[2]},
                       {t[1], t[2], t[0]}, {t[2], t[0], t[1]}, {t[2], t[1], t[0]}};
        }
        std::sort(members.begin(), members.end(),
                  [&](const Triple& x, const Triple& y) { return rank(x) < rank(y); });
        members.erase(std::unique(members.begin(), members.end()), members.end());
        return members;
    };

    std::vector<FrobeniusClass> classes;
    std::vector<Triple> seen;
    for (const Triple& t : all) {
        if (std::find(seen.begin(), seen.end(), t) != seen.end()) continue;
        FrobeniusClass c;
        c.members = classMembers(t);
        c.representative = c.members.front();
        // q (t1 + t2) = 0 (mod 1), checked exactly in half units.
        const long halves = c.representative[0].num * (2 / c.representative[0].den) +
                            c.representative[1].num * (2 / c.representative[1].den);
        c.rotationCongruenceHolds = (q * halves) % 2 == 0;
        c.glideFamily = c.representative == Triple{zero, zero, half};
        for (const Triple& m : c.members) seen.push_back(m);
        classes.push_back(std::move(c));
    }
    std::sort(classes.begin(), classes.end(), [&](const FrobeniusClass& a, const FrobeniusClass& b) {
        return rank(a.representative) < rank(b.representative);
    });
    return classes;
}

std::vector<OrbitPoint> orbit(const SpaceGroup& G, const FiberedPoint& Kraw, double fiberWindow) {
    if (!(fiberWindow > 0.0)) throw std::domain_error("orbit: fiberWindow must be > 0");
    const FiberedPoint K = normalizePoint(Kraw);
    const double period = G.fiberPeriod;

    std::vector<OrbitPoint> points;
    std::vector<Vec3> vectors;
    const auto tryAdd = [&](const FiberedPoint& p, const std::string& word, int elem, long k) {
        const Vec3 v = sphereVector(p);
        for (size_t i = 0; i < points.size(); ++i) {
            if (std::abs(points[i].point.t - p.t) < 1e-10 && (vectors[i] - v).norm() < 1e-10)
                return;
        }
        points.push_back({p, word, elem, k});
        vectors.push_back(v);
    };

    for (size_t e = 0; e < G.pointGroup.elements.size(); ++e) {
        const Isometry iso = G.elementIsometry(static_cast<int>(e));
        const FiberedPoint base = applyIsometry(iso, K);
        const long kLo = static_cast<long>(std::ceil((-fiberWindow - base.t) / period - 1e-12));
        const long kHi = static_cast<long>(std::floor((fiberWindow - base.t) / period + 1e-12));
        for (long k = kLo; k <= kHi; ++k) {
            FiberedPoint p = base;
            p.t += static_cast<double>(k) * period;
            std::string word = G.pointGroup.elements[e].word;
            if (k > 0) word += " + " + (k == 1 ? std::string("L") : std::to_string(k) + "L");
            if (k < 0) word += " - " + (k == -1 ? std::string("L") : std::to_string(-k) + "L");
            tryAdd(p, word, static_cast<int>(e), k);
        }
    }
    return points;
}

int stabilizerOrder(const SpaceGroup& G, const FiberedPoint& Kraw) {
    const FiberedPoint K = normalizePoint(Kraw);
    const Vec3 v = sphereVector(K);
    int count = 0;
    for (size_t e = 0; e < G.pointGroup.elements.size(); ++e) {
        const Isometry iso = G.elementIsometry(static_cast<int>(e));
        if ((iso.S.applyRow(v) - v).norm() >= 1e-10) continue;
        // Fiber fix needs eps t + r + k l = t for some integer k.
        const double need = K.t - iso.eps * K.t - iso.r;
        const double k = std::round(need / G.fiberPeriod);
        if (std::abs(need - k * G.fiberPeriod) < 1e-10) ++count;
    }
    return count;
}

}  // namespace s2xr
