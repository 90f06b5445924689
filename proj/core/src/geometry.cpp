#include "cablewrench/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace cablewrench {

Eigen::Matrix3d rotation_from_euler_zyx(const EulerZyx& e) {
    return (Eigen::AngleAxisd(e.theta, Eigen::Vector3d::UnitZ()) *
            Eigen::AngleAxisd(e.psi, Eigen::Vector3d::UnitY()) *
            Eigen::AngleAxisd(e.chi, Eigen::Vector3d::UnitX()))
        .toRotationMatrix();
}

double rotation_angle(const Eigen::Matrix3d& R) {
    const double c = std::clamp((R.trace() - 1.0) / 2.0, -1.0, 1.0);
    return std::acos(c);
}

bool is_rotation(const Eigen::Matrix3d& R, double tol) {
    const Eigen::Matrix3d gram = R.transpose() * R - Eigen::Matrix3d::Identity();
    if (gram.cwiseAbs().maxCoeff() > tol) return false;
    return std::abs(R.determinant() - 1.0) <= tol;
}

} // namespace cablewrench
