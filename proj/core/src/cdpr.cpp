#include "cablewrench/cdpr.hpp"

#include <string>

#include "cablewrench/errors.hpp"

namespace cablewrench {

namespace {
constexpr double degenerate_length = 1e-9; // m
}

void validate_geometry(const RobotGeometry& geom) {
    if (geom.exit_points.size() != 8)
        throw ValidationError("frame.exit_points: expected 8 points, got " +
                              std::to_string(geom.exit_points.size()));
    if (geom.anchor_points.size() != 15)
        throw ValidationError("platform.anchors: expected 15 points, got " +
                              std::to_string(geom.anchor_points.size()));
    if (!(geom.platform_mass >= 0.0)) throw ValidationError("platform.mass must be non-negative");
    if (!(geom.gravity > 0.0)) throw ValidationError("gravity must be positive");
}

CableState cable_state(const RobotGeometry& geom, const CableArrangement& arr, const Pose& pose,
                       int cable) {
    if (cable < 0 || cable >= 8) throw ValidationError("cable index out of range");
    const auto k = static_cast<std::size_t>(cable);
    const int e = arr.exit_of_cable[k];
    const int an = arr.anchor_of_cable[k];
    if (e < 0 || e >= static_cast<int>(geom.exit_points.size()))
        throw ValidationError("cable " + std::to_string(cable + 1) + ": exit index out of range");
    if (an < 0 || an >= static_cast<int>(geom.anchor_points.size()))
        throw ValidationError("cable " + std::to_string(cable + 1) +
                              ": anchor index out of range");
    const Eigen::Vector3d& a = geom.exit_points[static_cast<std::size_t>(e)];
    const Eigen::Vector3d& b = geom.anchor_points[static_cast<std::size_t>(an)];
    const Eigen::Vector3d attachment = pose.position + pose.rotation * b;
    const Eigen::Vector3d l = a - attachment;
    const double len = l.norm();
    if (len < degenerate_length) throw DegenerateCableError(cable);
    return CableState{len, l / len};
}

std::array<CableState, 8> cable_states(const RobotGeometry& geom, const CableArrangement& arr,
                                       const Pose& pose) {
    std::array<CableState, 8> out;
    for (int k = 0; k < 8; ++k) out[static_cast<std::size_t>(k)] = cable_state(geom, arr, pose, k);
    return out;
}

Eigen::Matrix<double, 6, 8> wrench_matrix_tp(const RobotGeometry& geom,
                                             const CableArrangement& arr, const Pose& pose) {
    Eigen::Matrix<double, 6, 8> W;
    for (int k = 0; k < 8; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        const CableState s = cable_state(geom, arr, pose, k);
        const Eigen::Vector3d b_world =
            pose.rotation * geom.anchor_points[static_cast<std::size_t>(arr.anchor_of_cable[ku])];
        W.block<3, 1>(0, k) = s.direction;
        W.block<3, 1>(3, k) = b_world.cross(s.direction);
    }
    return W;
}

Vector6d gravity_wrench_tp(const RobotGeometry& geom, const Pose& pose) {
    const Eigen::Vector3d f(0.0, 0.0, -geom.platform_mass * geom.gravity);
    Vector6d w;
    w.head<3>() = f;
    w.tail<3>() = (pose.rotation * geom.com).cross(f);
    return w;
}

} // namespace cablewrench
