#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "cablewrench/arrangement.hpp"
#include "cablewrench/geometry.hpp"
#include "cablewrench/wrist.hpp"

namespace cablewrench {

using Vector6d = Eigen::Matrix<double, 6, 1>;

/// Fixed geometry of the machine: cable exit points on the frame (base frame),
/// candidate anchor points on the top plate (plate frame), suspended mass and
/// its centre of mass, and the wrist parameters.
struct RobotGeometry {
    std::vector<Eigen::Vector3d> exit_points;   ///< 8 points, base frame
    std::vector<Eigen::Vector3d> anchor_points; ///< 15 points, plate frame
    double platform_mass = 0.0;                 ///< everything the cables carry, kg
    Eigen::Vector3d com = Eigen::Vector3d::Zero(); ///< centre of mass, plate frame
    WristParams wrist;
    double gravity = 9.81; ///< m/s^2
};

/// Throws ValidationError unless there are exactly 8 exits and 15 anchors,
/// mass is non-negative and gravity is positive.
void validate_geometry(const RobotGeometry& geom);

/// Straight-line cable between its exit and its (pose-transformed) anchor.
/// direction is the unit vector from the plate attachment towards the exit,
/// i.e. the direction in which a taut cable pulls on the plate.
struct CableState {
    double length = 0.0;
    Eigen::Vector3d direction = Eigen::Vector3d::Zero();
};

/// State of cable k (0-based) at the given plate pose. Throws
/// DegenerateCableError when exit and attachment coincide to within 1e-9 m.
CableState cable_state(const RobotGeometry& geom, const CableArrangement& arr, const Pose& pose,
                       int cable);

/// All eight cables at once.
std::array<CableState, 8> cable_states(const RobotGeometry& geom, const CableArrangement& arr,
                                       const Pose& pose);

/// 6 x 8 map from cable tensions to the wrench (force, moment about the plate
/// origin, base-frame axes) the cables exert on the plate. Column k is
/// [u_k; (R b_k) x u_k] with u_k the pull direction and b_k the anchor.
Eigen::Matrix<double, 6, 8> wrench_matrix_tp(const RobotGeometry& geom,
                                             const CableArrangement& arr, const Pose& pose);

/// Gravity wrench on the plate about the plate origin, base axes:
/// force (0, 0, -m g) applied at the pose-rotated centre of mass.
Vector6d gravity_wrench_tp(const RobotGeometry& geom, const Pose& pose);

} // namespace cablewrench
