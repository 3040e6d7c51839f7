#include "orbrec/core/triangulate.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace orbrec {

double min_triangulation_angle_deg(const std::vector<Observation>& obs, const Vec3& point) {
    double min_angle = 180.0;
    for (size_t i = 0; i < obs.size(); ++i) {
        const Vec3 di = (point - obs[i].pose.center()).normalized();
        for (size_t j = i + 1; j < obs.size(); ++j) {
            const Vec3 dj = (point - obs[j].pose.center()).normalized();
            const double c = std::clamp(di.dot(dj), -1.0, 1.0);
            min_angle = std::min(min_angle, rad2deg(std::acos(c)));
        }
    }
    return min_angle;
}

double reprojection_cost(const std::vector<Observation>& obs, const Vec3& point) {
    double cost = 0.0;
    for (const auto& o : obs) {
        const auto px = project(point, o.pose, o.intrinsics);
        if (!px) return std::numeric_limits<double>::infinity();
        cost += (*px - o.pixel).squaredNorm();
    }
    return cost;
}

namespace {

Vec3 triangulate_dlt(const std::vector<Observation>& obs) {
    Eigen::MatrixXd a(2 * obs.size(), 4);
    for (size_t i = 0; i < obs.size(); ++i) {
        const auto& o = obs[i];
        Eigen::Matrix<double, 3, 4> p;
        p.leftCols<3>() = o.pose.rotation_matrix();
        p.col(3) = o.pose.translation;
        const Vec2 xn = o.intrinsics.normalize(o.pixel);
        a.row(2 * i) = xn.x() * p.row(2) - p.row(0);
        a.row(2 * i + 1) = xn.y() * p.row(2) - p.row(1);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    const Vec4 h = svd.matrixV().col(3);
    if (std::abs(h.w()) < 1e-15) return Vec3::Constant(std::numeric_limits<double>::quiet_NaN());
    return h.head<3>() / h.w();
}

// One Gauss-Newton step on sum of squared pixel residuals.
Vec3 refine_gauss_newton(const std::vector<Observation>& obs, const Vec3& x0) {
    Mat3 jtj = Mat3::Zero();
    Vec3 jtr = Vec3::Zero();
    for (const auto& o : obs) {
        const Vec3 pc = o.pose.apply(x0);
        if (pc.z() <= kMinProjectionDepth) return x0;
        const double f = o.intrinsics.focal_px;
        const double iz = 1.0 / pc.z();
        Eigen::Matrix<double, 2, 3> dpix_dpc;
        dpix_dpc << f * iz, 0.0, -f * pc.x() * iz * iz, 0.0, f * iz, -f * pc.y() * iz * iz;
        const Eigen::Matrix<double, 2, 3> j = dpix_dpc * o.pose.rotation_matrix();
        const Vec2 res(f * pc.x() * iz + o.intrinsics.principal_point.x() - o.pixel.x(),
                       f * pc.y() * iz + o.intrinsics.principal_point.y() - o.pixel.y());
        jtj += j.transpose() * j;
        jtr += j.transpose() * res;
    }
    const Vec3 delta = jtj.ldlt().solve(-jtr);
    if (!delta.allFinite()) return x0;
    const Vec3 x1 = x0 + delta;
    return reprojection_cost(obs, x1) <= reprojection_cost(obs, x0) ? x1 : x0;
}

}  // namespace

std::optional<Vec3> triangulate(const std::vector<Observation>& obs) {
    if (obs.size() < 2) throw std::invalid_argument("triangulate: needs at least 2 observations");
    const Vec3 x = triangulate_dlt(obs);
    if (!x.allFinite()) return std::nullopt;
    if (min_triangulation_angle_deg(obs, x) < kDegenerateTriangulationAngleDeg)
        return std::nullopt;
    return refine_gauss_newton(obs, x);
}

}  // namespace orbrec
