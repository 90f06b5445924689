#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cablewrench/statics.hpp"

namespace cablewrench {

/// Axis-aligned scan box with a fixed number of intervals per axis. A grid
/// with intervals {nx, ny, nz} has (nx+1)(ny+1)(nz+1) nodes, including both
/// faces of the box on every axis.
struct GridSpec {
    Eigen::Vector3d lower = Eigen::Vector3d::Zero();
    Eigen::Vector3d upper = Eigen::Vector3d::Zero();
    std::array<int, 3> intervals = {1, 1, 1};

    std::int64_t node_count() const;
    /// Node coordinates; endpoints land exactly on the box faces.
    Eigen::Vector3d node(int ix, int iy, int iz) const;
    /// Flat storage order: x fastest, then y, then z.
    std::int64_t flat_index(int ix, int iy, int iz) const;
    void validate() const;
};

struct WorkspaceOptions {
    /// Plate orientation held throughout the scan.
    Eigen::Matrix3d orientation = Eigen::Matrix3d::Identity();
    int threads = 0; ///< 0 = hardware concurrency
    FeasibilityOptions feasibility;
};

/// Feasibility flags over a grid, x fastest. error_nodes counts grid nodes
/// skipped because the per-node computation failed (degenerate cable or a
/// solver breakdown); they are recorded as infeasible.
struct WorkspaceGrid {
    GridSpec grid;
    std::vector<std::uint8_t> feasible;
    std::int64_t n_feasible = 0;
    std::int64_t error_nodes = 0;
};

/// Scans the grid and marks every node where some in-box tension vector
/// balances the full system (plate wrench and wrist moment rows).
///
/// "All orientations" of the wrist sphere collapses to a single check per
/// node: the wheel contacts ride with the plate, so the sphere moment rows
/// do not depend on the sphere's own orientation, and with no external sphere
/// moment the balance is the same for every orientation.
///
/// Results are byte-identical for any thread count: the grid is partitioned
/// statically and each node's verdict is a pure function of its coordinates.
WorkspaceGrid static_workspace_ao(const RobotGeometry& geom, const CableArrangement& arr,
                                  const TensionBox& box, const GridSpec& grid,
                                  const WorkspaceOptions& opts = {});

/// Feasible-node fraction, n_feasible / node_count.
double workspace_ratio(const WorkspaceGrid& ws);

/// Size of the largest 6-connected component of feasible nodes. A workspace
/// whose feasible set is one solid blob is usable; the same ratio scattered
/// into islands is not, so report this next to the ratio.
std::int64_t largest_feasible_component(const WorkspaceGrid& ws);

} // namespace cablewrench
