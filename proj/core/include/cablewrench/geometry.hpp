#pragma once

#include <Eigen/Dense>

namespace cablewrench {

inline constexpr double pi = 3.141592653589793;

/// Intrinsic Z-Y-X Euler angles, radians. theta rotates about the body z axis
/// first, then psi about the new y, then chi about the newest x:
///   R = Rz(theta) * Ry(psi) * Rx(chi)
struct EulerZyx {
    double theta = 0.0;
    double psi = 0.0;
    double chi = 0.0;
};

Eigen::Matrix3d rotation_from_euler_zyx(const EulerZyx& e);

/// Rotation angle of R about its own axis, in [0, pi]. The trace argument is
/// clamped into [-1, 1] before acos so values a few ulp outside the range
/// (from accumulated rounding) do not produce NaN.
double rotation_angle(const Eigen::Matrix3d& R);

/// True when R is orthonormal with determinant +1 to within tol
/// (max-norm of R^T R - I, and |det - 1|).
bool is_rotation(const Eigen::Matrix3d& R, double tol = 1e-9);

/// Rigid pose of the top plate: position of the plate frame origin in the
/// base frame, plus the plate-to-base rotation.
struct Pose {
    Eigen::Vector3d position = Eigen::Vector3d::Zero();
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
};

inline Pose make_pose(const Eigen::Vector3d& p, const EulerZyx& e) {
    return Pose{p, rotation_from_euler_zyx(e)};
}

} // namespace cablewrench
