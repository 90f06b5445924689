#include "cablewrench/wrist.hpp"

#include <cmath>
#include <set>
#include <string>

#include "cablewrench/errors.hpp"

namespace cablewrench {

namespace {

void check_params(const WristParams& p) {
    if (!(p.sphere_radius > 0.0)) throw ValidationError("wrist sphere_radius must be positive");
    if (!(p.wheel_radius > 0.0)) throw ValidationError("wrist wheel_radius must be positive");
    if (!(p.drum_radius > 0.0)) throw ValidationError("wrist drum_radius must be positive");
    if (!(p.alpha >= 0.0 && p.alpha < pi / 2.0))
        throw ValidationError("wrist alpha must lie in [0, pi/2)");
}

// Rows r_s * (n_i x v_i)^T of the rolling-contact map.
Eigen::Matrix3d contact_matrix(const WristParams& p, const std::array<WristContact, 3>& contacts) {
    Eigen::Matrix3d A;
    for (int i = 0; i < 3; ++i)
        A.row(i) = p.sphere_radius * contacts[i].normal.cross(contacts[i].tangent).transpose();
    return A;
}

void check_pairing(const LoopPairing& pairing, int n_cables) {
    std::set<int> seen;
    for (const auto& pair : pairing) {
        for (int idx : pair) {
            if (idx < 0 || idx >= n_cables)
                throw InvalidPairingError("loop strand index " + std::to_string(idx + 1) +
                                          " outside 1.." + std::to_string(n_cables));
            if (!seen.insert(idx).second)
                throw InvalidPairingError("cable " + std::to_string(idx + 1) +
                                          " appears in more than one loop strand");
        }
    }
}

} // namespace

std::array<WristContact, 3> contact_geometry(const WristParams& p) {
    check_params(p);
    const double sa = std::sin(p.alpha);
    const double ca = std::cos(p.alpha);

    std::array<WristContact, 3> out;
    for (int i = 0; i < 3; ++i) {
        const double cg = std::cos(p.gamma[i]);
        const double sg = std::sin(p.gamma[i]);
        const Eigen::Vector3d normal(sa * cg, sa * sg, -ca);
        // Horizontal tangent (the azimuthal direction); stays well defined as
        // the contact approaches the pole, unlike normalize(z x n).
        const Eigen::Vector3d azimuthal(-sg, cg, 0.0);
        const Eigen::Vector3d tangent =
            std::cos(p.beta) * azimuthal + std::sin(p.beta) * normal.cross(azimuthal);
        out[i] = WristContact{p.sphere_radius * normal, normal, tangent};
    }
    return out;
}

WristJacobians wrist_jacobians(const WristParams& p) {
    const auto contacts = contact_geometry(p);
    WristJacobians jac;
    jac.A = contact_matrix(p, contacts);
    jac.B = p.wheel_radius * Eigen::Matrix3d::Identity();

    const double r3 = std::pow(p.sphere_radius, 3);
    if (std::abs(jac.A.determinant()) < 1e-12 * r3)
        throw SingularWristError("wrist contact matrix is singular: wheel tangents do not span "
                                 "all sphere rotations");
    jac.J = jac.A.partialPivLu().solve(jac.B);
    return jac;
}

Eigen::Vector3d omni_wheel_rates(const WristParams& p, const Eigen::Vector3d& omega) {
    const auto contacts = contact_geometry(p);
    // phidot = B^{-1} A omega; B is a scalar multiple of I, so no solve needed.
    return contact_matrix(p, contacts) * omega / p.wheel_radius;
}

Eigen::Matrix<double, 3, Eigen::Dynamic> cable_loop_matrix(const WristParams& p,
                                                           const LoopPairing& pairing,
                                                           int n_cables) {
    check_params(p);
    if (n_cables < 6) throw ValidationError("cable_loop_matrix needs at least 6 cables");
    check_pairing(pairing, n_cables);

    Eigen::Matrix<double, 3, Eigen::Dynamic> Wc =
        Eigen::Matrix<double, 3, Eigen::Dynamic>::Zero(3, n_cables);
    for (int k = 0; k < 3; ++k) {
        Wc(k, pairing[k][0]) = p.drum_radius;
        Wc(k, pairing[k][1]) = -p.drum_radius;
    }
    return Wc;
}

Eigen::Matrix<double, 3, Eigen::Dynamic> wrist_wrench_matrix(const WristParams& p,
                                                             const LoopPairing& pairing,
                                                             int n_cables) {
    const auto jac = wrist_jacobians(p); // also validates params and rank
    const auto Wc = cable_loop_matrix(p, pairing, n_cables);
    // J^{-T} Wc with J = A^{-1} B and B = r_o I collapses to A^T Wc / r_o.
    return jac.A.transpose() * Wc / p.wheel_radius;
}

} // namespace cablewrench
