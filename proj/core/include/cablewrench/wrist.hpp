#pragma once

#include <array>

#include <Eigen/Dense>

#include "cablewrench/geometry.hpp"

namespace cablewrench {

/// Geometry of the cable-loop-driven spherical wrist. Three omni-wheels touch
/// the sphere from below; each wheel is spun by a cable loop wound on a drum.
struct WristParams {
    /// Contact elevation from the downward pole, rad. The default is
    /// atan(1/sqrt(2)) ~ 35.26 deg, the elevation at which the wheel layout is
    /// isotropic (see wrist_jacobians).
    double alpha = 0.6154797086703873;
    /// Roller skew away from the azimuthal tangent, rad.
    double beta = 0.0;
    /// Contact azimuths, rad; default is an even 120 deg spread.
    std::array<double, 3> gamma = {0.0, 2.0 * pi / 3.0, 4.0 * pi / 3.0};
    double sphere_radius = 0.11; ///< r_s, m
    double wheel_radius = 0.05;  ///< r_o, m
    double drum_radius = 0.05;   ///< r_d, m
};

/// One wheel/sphere contact, expressed in the top-plate frame.
struct WristContact {
    Eigen::Vector3d point;   ///< contact point relative to the sphere centre
    Eigen::Vector3d normal;  ///< unit outward normal (centre -> contact)
    Eigen::Vector3d tangent; ///< unit drive direction of the wheel at the contact
};

/// omega-to-wheel-rate maps. Rolling without slip gives A * omega = B * phidot
/// with row i of A equal to r_s * (n_i x v_i)^T and B = r_o * I, so
/// omega = J * phidot with J = A^{-1} B.
struct WristJacobians {
    Eigen::Matrix3d A;
    Eigen::Matrix3d B;
    Eigen::Matrix3d J;
};

/// Which pair of cables forms each of the three loops. Entries are 0-based
/// cable indices; the first cable of a pair winds the drum in the positive
/// wheel direction, the second in the negative one.
using LoopPairing = std::array<std::array<int, 2>, 3>;

/// Contact points, normals and drive tangents for the three wheels.
/// Valid for any alpha in [0, pi/2); alpha = 0 gives a well-defined geometry
/// whose A matrix is singular (the wheels can only spin the sphere about z).
/// Throws ValidationError on non-positive radii or alpha outside [0, pi/2).
std::array<WristContact, 3> contact_geometry(const WristParams& params);

/// A, B and J = A^{-1} B. Throws SingularWristError when |det A| falls below
/// 1e-12 * r_s^3 (the natural scale of det A).
WristJacobians wrist_jacobians(const WristParams& params);

/// Wheel rates phidot realizing a desired sphere angular velocity omega,
/// phidot = B^{-1} A omega. Defined even at singular configurations.
Eigen::Vector3d omni_wheel_rates(const WristParams& params, const Eigen::Vector3d& omega);

/// 3 x n_cables map from strand tensions to wheel torques. Loop k contributes
/// tau_k = r_d * (t_i - t_j) for its strand pair (i, j); columns of cables that
/// are not part of a loop are zero. Throws InvalidPairingError on duplicate or
/// out-of-range strand indices.
Eigen::Matrix<double, 3, Eigen::Dynamic> cable_loop_matrix(const WristParams& params,
                                                           const LoopPairing& pairing,
                                                           int n_cables = 8);

/// 3 x n_cables map from strand tensions to the moment the wrist exerts on the
/// sphere, W_sw = J^{-T} * W_c = A^T * W_c / r_o. Throws SingularWristError
/// under the same condition as wrist_jacobians.
Eigen::Matrix<double, 3, Eigen::Dynamic> wrist_wrench_matrix(const WristParams& params,
                                                             const LoopPairing& pairing,
                                                             int n_cables = 8);

} // namespace cablewrench
