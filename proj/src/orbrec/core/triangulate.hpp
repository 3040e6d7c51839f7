#pragma once

#include <optional>
#include <vector>

#include "orbrec/core/camera.hpp"

namespace orbrec {

struct Observation {
    Pose pose;
    CameraIntrinsics intrinsics;
    Vec2 pixel;
};

// Smallest pairwise angle (degrees) between the viewing rays of the
// observations at the given point.
double min_triangulation_angle_deg(const std::vector<Observation>& obs, const Vec3& point);

constexpr double kDegenerateTriangulationAngleDeg = 0.1;

// Linear DLT estimate followed by one Gauss-Newton step on the summed squared
// reprojection error. Returns nullopt when the configuration is degenerate
// (smallest triangulation angle below kDegenerateTriangulationAngleDeg).
// Throws std::invalid_argument with fewer than 2 observations.
std::optional<Vec3> triangulate(const std::vector<Observation>& obs);

// Summed squared reprojection error of a candidate point (infinite when the
// point is behind any camera).
double reprojection_cost(const std::vector<Observation>& obs, const Vec3& point);

}  // namespace orbrec
