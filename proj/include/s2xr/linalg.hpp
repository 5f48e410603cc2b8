#pragma once

#include <array>
#include <cmath>

namespace s2xr {

/// Fixed-size 3-vector used for unit sphere directions and model coordinates.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        const double n = norm();
        return {x / n, y / n, z / n};
    }
};

/// Row-major 3x3 matrix; only orthogonal matrices appear in this project.
struct Mat3 {
    std::array<double, 9> a{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Mat3 identity() { return {}; }

    double operator()(int r, int c) const { return a[3 * r + c]; }
    double& operator()(int r, int c) { return a[3 * r + c]; }

    /// Column action M v.
    Vec3 operator*(const Vec3& v) const {
        return {a[0] * v.x + a[1] * v.y + a[2] * v.z,
                a[3] * v.x + a[4] * v.y + a[5] * v.z,
                a[6] * v.x + a[7] * v.y + a[8] * v.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
                r(i, j) = s;
            }
        return r;
    }

    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
        return r;
    }

    /// Row action v^T M, i.e. M^T v as a column; right group actions use this.
    Vec3 applyRow(const Vec3& v) const {
        return {a[0] * v.x + a[3] * v.y + a[6] * v.z,
                a[1] * v.x + a[4] * v.y + a[7] * v.z,
                a[2] * v.x + a[5] * v.y + a[8] * v.z};
    }

    double frobeniusDistance(const Mat3& o) const {
        double s = 0.0;
        for (int i = 0; i < 9; ++i) {
            const double d = a[i] - o.a[i];
            s += d * d;
        }
        return std::sqrt(s);
    }
};

inline Mat3 rotationZ(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 m;
    m.a = {c, -s, 0, s, c, 0, 0, 0, 1};
    return m;
}

inline Mat3 rotationY(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 m;
    m.a = {c, 0, s, 0, 1, 0, -s, 0, c};
    return m;
}

/// Reflection across the plane with unit normal n: I - 2 n n^T.
inline Mat3 mirrorAcross(const Vec3& n) {
    Mat3 m;
    m.a = {1 - 2 * n.x * n.x, -2 * n.x * n.y, -2 * n.x * n.z,
           -2 * n.y * n.x, 1 - 2 * n.y * n.y, -2 * n.y * n.z,
           -2 * n.z * n.x, -2 * n.z * n.y, 1 - 2 * n.z * n.z};
    return m;
}

}  // namespace s2xr
