#pragma once

#include <array>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "s2xr/geometry.hpp"

namespace s2xr {

/// Indexed triangle soup in affine model coordinates.
struct TriangleMesh {
    std::vector<ModelPoint> vertices;
    std::vector<std::array<int, 3>> faces;  ///< 0-based vertex indices
};

/// Triangulates the geodesic sphere of radius rho about the given center:
/// the (u, v) launch-direction grid of the origin-based geodesics, carried to
/// the center by the sphere rotation plus fiber translation that moves the
/// origin there. The two grid poles (v = +-pi/2, the fiber directions)
/// collapse to single vertices closing the mesh with triangle fans.
/// Requires 0 <= rho < pi (embeddedness) and at least 3 segments per
/// direction; throws std::domain_error otherwise.
TriangleMesh geodesicSphereMesh(const FiberedPoint& center, double rho, int segmentsU,
                                int segmentsV);

/// Writes named meshes as Wavefront OBJ text (o/v/f records, faces 1-based
/// across the concatenated vertex list).
void writeObj(std::ostream& out, const std::vector<std::pair<std::string, TriangleMesh>>& objects);

}  // namespace s2xr
