#pragma once

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "cablewrench/config.hpp"

namespace test_support {

// Reference configuration shipped in configs/, parsed once per process.
inline const cablewrench::RobotConfig& reference_config() {
    static const cablewrench::RobotConfig cfg =
        cablewrench::load_config(CABLEWRENCH_REFERENCE_CONFIG);
    return cfg;
}

// Rotation about a unit axis built from the cross-product expansion
// R = I + sin(t) K + (1 - cos(t)) K^2. Deliberately a different code path
// from the Eigen AngleAxis route the library uses.
inline Eigen::Matrix3d rodrigues(const Eigen::Vector3d& axis, double angle) {
    Eigen::Matrix3d k;
    k << 0.0, -axis.z(), axis.y(), axis.z(), 0.0, -axis.x(), -axis.y(), axis.x(), 0.0;
    return Eigen::Matrix3d::Identity() + std::sin(angle) * k + (1.0 - std::cos(angle)) * k * k;
}

inline Eigen::Vector3d random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::Vector3d v;
    do {
        v = Eigen::Vector3d(n(rng), n(rng), n(rng));
    } while (v.norm() < 1e-3);
    return v.normalized();
}

inline Eigen::Matrix3d random_rotation(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> a(-cablewrench::pi, cablewrench::pi);
    return rodrigues(random_unit(rng), a(rng));
}

inline double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace test_support
