#pragma once

#include <iosfwd>
#include <string>

#include "cablewrench/cdpr.hpp"
#include "cablewrench/search.hpp"
#include "cablewrench/trajectory.hpp"
#include "cablewrench/workspace.hpp"

namespace cablewrench {

/// Shared numeric formatting for all text exports: %.9g, C locale, so the
/// same run produces the same bytes on every platform and thread count.
std::string format_number(double v);

/// Compact one-line identity of an arrangement, 1-based, e.g.
/// "1:3-2:4-3:8-4:9-5:13-6:14-7:1-8:6" (exit:anchor per cable).
std::string arrangement_string(const CableArrangement& arr);

/// Header "x,y,z,feasible", one row per grid node in storage order.
void write_workspace_csv(std::ostream& os, const WorkspaceGrid& ws);

/// {"n_feasible": ..., "total": ..., "ratio": ...} plus diagnostics.
void write_workspace_summary_json(std::ostream& os, const WorkspaceGrid& ws);

/// Header "cable,length", one row per cable, 1-based.
void write_cable_lengths_csv(std::ostream& os, const std::array<CableState, 8>& cables);

/// Header "index,arrangement", one row per enumerated candidate.
void write_arrangements_csv(std::ostream& os, const std::vector<CableArrangement>& arrs);

/// Ranked search results: "rank,arrangement,n_feasible,ratio,coarse_ratio".
void write_ranking_csv(std::ostream& os, const SearchResult& result);
void write_ranking_json(std::ostream& os, const SearchResult& result);

/// Per-sample trajectory log:
/// t,px,py,pz,theta_e,wx,wy,wz,phidot1..3,l1..l8,feasible
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

} // namespace cablewrench
