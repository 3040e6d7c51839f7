#pragma once

#include "orbrec/core/types.hpp"

namespace orbrec {

// Rigid world-to-camera transform: x_cam = R * x_world + t.
// The quaternion is kept normalized; this is the single pose convention
// used across the whole pipeline.
struct Pose {
    Quat rotation = Quat::Identity();
    Vec3 translation = Vec3::Zero();

    Pose() = default;
    Pose(const Quat& q, const Vec3& t) : rotation(q.normalized()), translation(t) {}

    Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
    Mat3 rotation_matrix() const { return rotation.toRotationMatrix(); }

    // Camera center in world coordinates: c = -R^T t.
    Vec3 center() const { return rotation.conjugate() * (-translation); }

    Pose inverse() const {
        const Quat qi = rotation.conjugate();
        return Pose(qi, qi * (-translation));
    }

    // this ∘ other: (this * other).apply(p) == this.apply(other.apply(p))
    Pose compose(const Pose& other) const {
        return Pose(rotation * other.rotation, rotation * other.translation + translation);
    }

    static Pose identity() { return Pose(); }

    // Pose looking from `eye` toward `target`, with `up` as the vertical hint.
    static Pose look_at(const Vec3& eye, const Vec3& target, const Vec3& up = Vec3(0, 0, 1));
};

// Angle of the relative rotation between two poses, in degrees.
double rotation_angle_deg(const Quat& a, const Quat& b);

}  // namespace orbrec
