#pragma once

#include <cstdint>
#include <vector>

#include "cablewrench/arrangement.hpp"
#include "cablewrench/workspace.hpp"

namespace cablewrench {

struct SearchOptions {
    /// Stage-1 grid resolution over the same scan box as the final grid.
    std::array<int, 3> coarse_intervals = {4, 4, 4};
    /// A candidate survives stage 1 when its coarse ratio is within this
    /// slack of the best coarse ratio seen across all candidates.
    double prune_slack = 0.05;
    int top_k = 10;
    /// Workers for the candidate loop. Per-candidate workspace scans run
    /// single-threaded to keep the parallelism in one place.
    int threads = 0;
    WorkspaceOptions workspace;
};

struct RankedArrangement {
    CableArrangement arrangement;
    double coarse_ratio = 0.0;
    double ratio = 0.0;          ///< full-grid ratio
    std::int64_t n_feasible = 0; ///< full-grid feasible node count
};

struct SearchResult {
    RankedArrangement best;
    /// Finalists ordered by n_feasible descending, ties broken by
    /// arrangement_less ascending; truncated to top_k. Pruned candidates do
    /// not appear (they were never evaluated on the full grid).
    std::vector<RankedArrangement> ranking;
    std::uint64_t candidates = 0;
    std::uint64_t finalists = 0;
    /// Candidates whose evaluation threw; they score ratio 0 and never win.
    std::uint64_t error_candidates = 0;
};

/// Two-stage exhaustive search for the arrangement with the largest static
/// workspace. Stage 1 scores every candidate on the coarse grid; stage 2
/// rescores the survivors on the full grid. Both stages store per-candidate
/// results by index and all reductions are order-fixed, so the outcome is
/// identical for any thread count. The coarse filter is a heuristic: a
/// candidate whose coarse ratio underestimates its full ratio by more than
/// prune_slack relative to the leader can be pruned wrongly, which is the
/// price of the 100x cheaper first pass.
SearchResult best_arrangement(const RobotGeometry& geom, const TensionBox& box,
                              const GridSpec& grid,
                              const std::vector<CableArrangement>& candidates,
                              const SearchOptions& opts = {});

/// Convenience overload: enumerate the candidates from anchor classes first.
SearchResult best_arrangement(const RobotGeometry& geom, const TensionBox& box,
                              const GridSpec& grid, const AnchorClasses& classes,
                              const SearchOptions& opts = {});

} // namespace cablewrench
