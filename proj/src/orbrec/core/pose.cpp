#include "orbrec/core/pose.hpp"

#include <algorithm>
#include <cmath>

namespace orbrec {

Pose Pose::look_at(const Vec3& eye, const Vec3& target, const Vec3& up) {
    Vec3 fwd = (target - eye).normalized();
    Vec3 right = fwd.cross(up);
    if (right.norm() < 1e-12) {
        // Looking along `up`; pick any perpendicular axis.
        right = fwd.cross(Vec3(1, 0, 0));
        if (right.norm() < 1e-12) right = fwd.cross(Vec3(0, 1, 0));
    }
    right.normalize();
    const Vec3 down = fwd.cross(right);  // +y points down in image coordinates

    Mat3 r_wc;
    r_wc.row(0) = right.transpose();
    r_wc.row(1) = down.transpose();
    r_wc.row(2) = fwd.transpose();
    return Pose(Quat(r_wc), -(r_wc * eye));
}

double rotation_angle_deg(const Quat& a, const Quat& b) {
    const double d = std::min(1.0, std::abs(a.normalized().dot(b.normalized())));
    return rad2deg(2.0 * std::acos(d));
}

}  // namespace orbrec
