#pragma once

#include <optional>
#include <stdexcept>

#include "orbrec/core/pose.hpp"
#include "orbrec/core/types.hpp"

namespace orbrec {

// Simple pinhole model: one focal length for both axes, no distortion.
struct CameraIntrinsics {
    double focal_px = 0.0;
    Vec2 principal_point = Vec2::Zero();
    int width = 0;
    int height = 0;

    CameraIntrinsics() = default;
    CameraIntrinsics(double f, const Vec2& pp, int w, int h);

    Mat3 matrix() const;

    bool in_bounds(const Vec2& px) const {
        return px.x() >= 0.0 && px.y() >= 0.0 && px.x() <= width - 1.0 && px.y() <= height - 1.0;
    }

    // pixel -> normalized image coordinates ((x - cx)/f, (y - cy)/f)
    Vec2 normalize(const Vec2& px) const { return (px - principal_point) / focal_px; }
    Vec2 denormalize(const Vec2& xn) const { return xn * focal_px + principal_point; }
};

struct Ray {
    Vec3 origin = Vec3::Zero();
    Vec3 direction = Vec3::UnitZ();  // unit length

    Vec3 at(double t) const { return origin + t * direction; }
};

constexpr double kMinProjectionDepth = 1e-9;

// Pinhole projection of a world point. Returns nullopt when the point is at
// or behind the camera plane (depth <= kMinProjectionDepth).
// Throws std::invalid_argument on non-finite input.
std::optional<Vec2> project(const Vec3& point, const Pose& pose, const CameraIntrinsics& K);

// Camera-frame depth of a world point (signed).
double point_depth(const Vec3& point, const Pose& pose);

// Viewing ray through a pixel, expressed in world coordinates.
// Throws std::out_of_range for pixels outside the image bounds.
Ray unproject(const Vec2& pixel, const Pose& pose, const CameraIntrinsics& K);

// Same but without the bounds check (used by renderers that supersample or
// walk slightly outside the image).
Ray unproject_unchecked(const Vec2& pixel, const Pose& pose, const CameraIntrinsics& K);

}  // namespace orbrec
