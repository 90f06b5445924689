#include "cablewrench/search.hpp"

#include <algorithm>
#include <string>

#include "cablewrench/errors.hpp"
#include "cablewrench/log.hpp"
#include "cablewrench/parallel.hpp"

namespace cablewrench {

namespace {

bool ranked_before(const RankedArrangement& a, const RankedArrangement& b) {
    if (a.n_feasible != b.n_feasible) return a.n_feasible > b.n_feasible;
    return arrangement_less(a.arrangement, b.arrangement);
}

} // namespace

SearchResult best_arrangement(const RobotGeometry& geom, const TensionBox& box,
                              const GridSpec& grid,
                              const std::vector<CableArrangement>& candidates,
                              const SearchOptions& opts) {
    if (candidates.empty()) throw ValidationError("arrangement search: no candidates");
    validate_geometry(geom);
    grid.validate();
    box.validate();
    if (!(opts.prune_slack >= 0.0))
        throw ValidationError("arrangement search: prune_slack must be non-negative");

    GridSpec coarse = grid;
    coarse.intervals = opts.coarse_intervals;
    coarse.validate();

    WorkspaceOptions ws = opts.workspace;
    ws.threads = 1; // candidate loop owns the parallelism

    const std::size_t n = candidates.size();
    std::vector<double> coarse_ratio(n, 0.0);
    std::vector<std::uint8_t> errored(n, 0);

    parallel_for(n, opts.threads, [&](std::size_t i) {
        try {
            coarse_ratio[i] = workspace_ratio(
                static_workspace_ao(geom, candidates[i], box, coarse, ws));
        } catch (const Error&) {
            errored[i] = 1;
            coarse_ratio[i] = 0.0;
        }
    });

    double best_coarse = 0.0;
    for (double r : coarse_ratio) best_coarse = std::max(best_coarse, r);
    const double keep_at = best_coarse - opts.prune_slack;

    std::vector<std::size_t> finalists;
    for (std::size_t i = 0; i < n; ++i)
        if (coarse_ratio[i] >= keep_at) finalists.push_back(i);
    log_info("arrangement search: " + std::to_string(finalists.size()) + " of " +
             std::to_string(n) + " candidates kept after the coarse pass");

    std::vector<RankedArrangement> ranked(finalists.size());
    parallel_for(finalists.size(), opts.threads, [&](std::size_t k) {
        const std::size_t i = finalists[k];
        RankedArrangement r;
        r.arrangement = candidates[i];
        r.coarse_ratio = coarse_ratio[i];
        try {
            const WorkspaceGrid full = static_workspace_ao(geom, candidates[i], box, grid, ws);
            r.n_feasible = full.n_feasible;
            r.ratio = workspace_ratio(full);
        } catch (const Error&) {
            errored[i] = 1;
            r.n_feasible = 0;
            r.ratio = 0.0;
        }
        ranked[k] = r;
    });

    std::sort(ranked.begin(), ranked.end(), ranked_before);

    SearchResult out;
    out.candidates = n;
    out.finalists = finalists.size();
    for (const auto flag : errored) out.error_candidates += flag;
    out.best = ranked.front();
    if (opts.top_k > 0 && ranked.size() > static_cast<std::size_t>(opts.top_k))
        ranked.resize(static_cast<std::size_t>(opts.top_k));
    out.ranking = std::move(ranked);
    return out;
}

SearchResult best_arrangement(const RobotGeometry& geom, const TensionBox& box,
                              const GridSpec& grid, const AnchorClasses& classes,
                              const SearchOptions& opts) {
    return best_arrangement(geom, box, grid, enumerate_arrangements(geom, classes), opts);
}

} // namespace cablewrench
