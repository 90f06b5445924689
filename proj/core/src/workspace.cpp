#include "cablewrench/workspace.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include "cablewrench/errors.hpp"
#include "cablewrench/log.hpp"
#include "cablewrench/parallel.hpp"
#include "cablewrench/wrist.hpp"

namespace cablewrench {

std::int64_t GridSpec::node_count() const {
    return static_cast<std::int64_t>(intervals[0] + 1) * (intervals[1] + 1) * (intervals[2] + 1);
}

Eigen::Vector3d GridSpec::node(int ix, int iy, int iz) const {
    const std::array<int, 3> idx = {ix, iy, iz};
    Eigen::Vector3d p;
    for (int k = 0; k < 3; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        // The last index must hit the face exactly; lower + span would be off
        // by an ulp for some bounds.
        if (idx[ku] == intervals[ku]) {
            p[k] = upper[k];
        } else {
            p[k] = lower[k] + (upper[k] - lower[k]) * (static_cast<double>(idx[ku]) /
                                                       static_cast<double>(intervals[ku]));
        }
    }
    return p;
}

std::int64_t GridSpec::flat_index(int ix, int iy, int iz) const {
    return ix + static_cast<std::int64_t>(intervals[0] + 1) *
                    (iy + static_cast<std::int64_t>(intervals[1] + 1) * iz);
}

void GridSpec::validate() const {
    for (int k = 0; k < 3; ++k) {
        if (intervals[static_cast<std::size_t>(k)] < 1)
            throw ValidationError("grid: intervals must be at least 1 per axis");
        if (!(lower[k] <= upper[k]))
            throw ValidationError("grid: lower bound exceeds upper bound on axis " +
                                  std::to_string(k));
    }
    if (node_count() > (std::int64_t{1} << 31))
        throw ValidationError("grid: too many nodes");
}

WorkspaceGrid static_workspace_ao(const RobotGeometry& geom, const CableArrangement& arr,
                                  const TensionBox& box, const GridSpec& grid,
                                  const WorkspaceOptions& opts) {
    validate_geometry(geom);
    grid.validate();
    box.validate();

    WorkspaceGrid out;
    out.grid = grid;
    out.feasible.assign(static_cast<std::size_t>(grid.node_count()), 0);

    // The wrist rows are pose-independent; build them once. A singular wrist
    // is a property of the machine, not of a node, so it propagates.
    const Eigen::MatrixXd w_sw = wrist_wrench_matrix(geom.wrist, arr.loops, 8);

    const int nx = grid.intervals[0] + 1;
    const int ny = grid.intervals[1] + 1;
    std::atomic<std::int64_t> errors{0};

    parallel_for(static_cast<std::size_t>(grid.node_count()), opts.threads, [&](std::size_t f) {
        const auto fi = static_cast<std::int64_t>(f);
        const int ix = static_cast<int>(fi % nx);
        const int iy = static_cast<int>((fi / nx) % ny);
        const int iz = static_cast<int>(fi / (static_cast<std::int64_t>(nx) * ny));
        const Pose pose{grid.node(ix, iy, iz), opts.orientation};
        try {
            WrenchSystem sys;
            sys.W.resize(9, 8);
            sys.W.topRows<6>() = wrench_matrix_tp(geom, arr, pose);
            sys.W.bottomRows<3>() = w_sw;
            sys.w_e.resize(9);
            sys.w_e.head<6>() = gravity_wrench_tp(geom, pose);
            sys.w_e.tail<3>().setZero();
            const FeasibilityResult r = tension_feasible(sys, box, opts.feasibility);
            out.feasible[f] = r.feasible ? 1 : 0;
        } catch (const NumericalError&) {
            errors.fetch_add(1, std::memory_order_relaxed);
        }
    });

    out.error_nodes = errors.load();
    for (const auto flag : out.feasible) out.n_feasible += flag;
    if (out.error_nodes > 0)
        log_info("workspace scan skipped " + std::to_string(out.error_nodes) +
                 " nodes due to per-node errors");
    return out;
}

double workspace_ratio(const WorkspaceGrid& ws) {
    return static_cast<double>(ws.n_feasible) / static_cast<double>(ws.grid.node_count());
}

std::int64_t largest_feasible_component(const WorkspaceGrid& ws) {
    const int nx = ws.grid.intervals[0] + 1;
    const int ny = ws.grid.intervals[1] + 1;
    const int nz = ws.grid.intervals[2] + 1;
    std::vector<std::uint8_t> seen(ws.feasible.size(), 0);
    std::vector<std::int64_t> stack;
    std::int64_t best = 0;

    for (std::size_t start = 0; start < ws.feasible.size(); ++start) {
        if (!ws.feasible[start] || seen[start]) continue;
        std::int64_t size = 0;
        stack.push_back(static_cast<std::int64_t>(start));
        seen[start] = 1;
        while (!stack.empty()) {
            const std::int64_t f = stack.back();
            stack.pop_back();
            ++size;
            const int ix = static_cast<int>(f % nx);
            const int iy = static_cast<int>((f / nx) % ny);
            const int iz = static_cast<int>(f / (static_cast<std::int64_t>(nx) * ny));
            const std::array<std::array<int, 3>, 6> nbrs = {{{ix - 1, iy, iz},
                                                             {ix + 1, iy, iz},
                                                             {ix, iy - 1, iz},
                                                             {ix, iy + 1, iz},
                                                             {ix, iy, iz - 1},
                                                             {ix, iy, iz + 1}}};
            for (const auto& nb : nbrs) {
                if (nb[0] < 0 || nb[0] >= nx || nb[1] < 0 || nb[1] >= ny || nb[2] < 0 ||
                    nb[2] >= nz)
                    continue;
                const auto g = static_cast<std::size_t>(ws.grid.flat_index(nb[0], nb[1], nb[2]));
                if (ws.feasible[g] && !seen[g]) {
                    seen[g] = 1;
                    stack.push_back(static_cast<std::int64_t>(g));
                }
            }
        }
        best = std::max(best, size);
    }
    return best;
}

} // namespace cablewrench
