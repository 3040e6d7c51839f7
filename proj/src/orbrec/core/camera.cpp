#include "orbrec/core/camera.hpp"

#include <cmath>

namespace orbrec {

CameraIntrinsics::CameraIntrinsics(double f, const Vec2& pp, int w, int h)
    : focal_px(f), principal_point(pp), width(w), height(h) {
    if (f <= 0.0) throw std::invalid_argument("focal length must be positive");
    if (w <= 0 || h <= 0) throw std::invalid_argument("image dimensions must be positive");
    if (pp.x() < 0.0 || pp.y() < 0.0 || pp.x() > w || pp.y() > h)
        throw std::invalid_argument("principal point outside image bounds");
}

Mat3 CameraIntrinsics::matrix() const {
    Mat3 k = Mat3::Identity();
    k(0, 0) = k(1, 1) = focal_px;
    k(0, 2) = principal_point.x();
    k(1, 2) = principal_point.y();
    return k;
}

std::optional<Vec2> project(const Vec3& point, const Pose& pose, const CameraIntrinsics& K) {
    if (!point.allFinite()) throw std::invalid_argument("project: non-finite point");
    const Vec3 pc = pose.apply(point);
    if (pc.z() <= kMinProjectionDepth) return std::nullopt;
    return Vec2(K.focal_px * pc.x() / pc.z() + K.principal_point.x(),
                K.focal_px * pc.y() / pc.z() + K.principal_point.y());
}

double point_depth(const Vec3& point, const Pose& pose) { return pose.apply(point).z(); }

Ray unproject_unchecked(const Vec2& pixel, const Pose& pose, const CameraIntrinsics& K) {
    const Vec3 dir_cam((pixel.x() - K.principal_point.x()) / K.focal_px,
                       (pixel.y() - K.principal_point.y()) / K.focal_px, 1.0);
    const Quat r_inv = pose.rotation.conjugate();
    Ray ray;
    ray.origin = pose.center();
    ray.direction = (r_inv * dir_cam).normalized();
    return ray;
}

Ray unproject(const Vec2& pixel, const Pose& pose, const CameraIntrinsics& K) {
    if (!K.in_bounds(pixel)) throw std::out_of_range("unproject: pixel outside image bounds");
    return unproject_unchecked(pixel, pose, K);
}

}  // namespace orbrec
