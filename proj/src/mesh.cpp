#include "s2xr/mesh.hpp"

#include <cmath>
#include <iomanip>
#include <stdexcept>

namespace s2xr {

TriangleMesh geodesicSphereMesh(const FiberedPoint& centerRaw, double rho, int segmentsU,
                                int segmentsV) {
    if (!(rho >= 0.0) || rho >= kPi)
        throw std::domain_error("geodesicSphereMesh: radius must lie in [0, pi)");
    if (segmentsU < 3 || segmentsV < 3)
        throw std::domain_error("geodesicSphereMesh: need at least 3 segments per direction");

    const FiberedPoint center = normalizePoint(centerRaw);
    const Mat3 carry = rotationZ(center.phi) * rotationY(-center.theta);
    const double lift = std::exp(center.t);
    const auto place = [&](const GeodesicParams& g) {
        const ModelPoint m = geodesicPoint(g);
        const Vec3 v = carry * Vec3{m.x, m.y, m.z};
        return ModelPoint{lift * v.x, lift * v.y, lift * v.z};
    };

    TriangleMesh mesh;
    const int nu = segmentsU, nv = segmentsV;

    // interior rows j = 1..nv-1 at v = -pi/2 + j pi/nv, nu columns each
    for (int j = 1; j < nv; ++j) {
        const double v = -kPi / 2 + j * kPi / nv;
        for (int i = 0; i < nu; ++i) {
            const double u = -kPi + 2 * kPi * i / nu;
            mesh.vertices.push_back(place({u, v, rho}));
        }
    }
    const int south = static_cast<int>(mesh.vertices.size());
    mesh.vertices.push_back(place({0.0, -kPi / 2, rho}));
    const int north = south + 1;
    mesh.vertices.push_back(place({0.0, kPi / 2, rho}));

    const auto ring = [nu](int j, int i) { return (j - 1) * nu + (i % nu); };
    for (int i = 0; i < nu; ++i) {
        mesh.faces.push_back({south, ring(1, i + 1), ring(1, i)});
        mesh.faces.push_back({north, ring(nv - 1, i), ring(nv - 1, i + 1)});
    }
    for (int j = 1; j + 1 < nv; ++j)
        for (int i = 0; i < nu; ++i) {
            const int a = ring(j, i), b = ring(j, i + 1);
            const int c = ring(j + 1, i), d = ring(j + 1, i + 1);
            mesh.faces.push_back({a, b, d});
            mesh.faces.push_back({a, d, c});
        }
    return mesh;
}

void writeObj(std::ostream& out, const std::vector<std::pair<std::string, TriangleMesh>>& objects) {
    out << std::setprecision(17);
    int offset = 1;  // OBJ indices are 1-based and global across objects
    for (const auto& [name, mesh] : objects) {
        out << "o " << name << '\n';
        for (const ModelPoint& p : mesh.vertices)
            out << "v " << p.x << ' ' << p.y << ' ' << p.z << '\n';
        for (const auto& f : mesh.faces)
            out << "f " << offset + f[0] << ' ' << offset + f[1] << ' ' << offset + f[2] << '\n';
        offset += static_cast<int>(mesh.vertices.size());
    }
}

}  // namespace s2xr
