#include "cablewrench/export.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace cablewrench {

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string arrangement_string(const CableArrangement& arr) {
    std::string s;
    for (int k = 0; k < 8; ++k) {
        if (k > 0) s += '-';
        s += std::to_string(arr.exit_of_cable[static_cast<std::size_t>(k)] + 1);
        s += ':';
        s += std::to_string(arr.anchor_of_cable[static_cast<std::size_t>(k)] + 1);
    }
    return s;
}

void write_workspace_csv(std::ostream& os, const WorkspaceGrid& ws) {
    os << "x,y,z,feasible\n";
    const int nx = ws.grid.intervals[0] + 1;
    const int ny = ws.grid.intervals[1] + 1;
    const int nz = ws.grid.intervals[2] + 1;
    for (int iz = 0; iz < nz; ++iz)
        for (int iy = 0; iy < ny; ++iy)
            for (int ix = 0; ix < nx; ++ix) {
                const Eigen::Vector3d p = ws.grid.node(ix, iy, iz);
                const auto f = static_cast<std::size_t>(ws.grid.flat_index(ix, iy, iz));
                os << format_number(p.x()) << ',' << format_number(p.y()) << ','
                   << format_number(p.z()) << ',' << int(ws.feasible[f]) << '\n';
            }
}

void write_workspace_summary_json(std::ostream& os, const WorkspaceGrid& ws) {
    nlohmann::ordered_json j;
    j["n_feasible"] = ws.n_feasible;
    j["total"] = ws.grid.node_count();
    j["ratio"] = workspace_ratio(ws);
    j["error_nodes"] = ws.error_nodes;
    j["largest_component"] = largest_feasible_component(ws);
    os << j.dump(2) << '\n';
}

void write_cable_lengths_csv(std::ostream& os, const std::array<CableState, 8>& cables) {
    os << "cable,length\n";
    for (int k = 0; k < 8; ++k)
        os << (k + 1) << ',' << format_number(cables[static_cast<std::size_t>(k)].length)
           << '\n';
}

void write_arrangements_csv(std::ostream& os, const std::vector<CableArrangement>& arrs) {
    os << "index,arrangement\n";
    for (std::size_t i = 0; i < arrs.size(); ++i)
        os << i << ',' << arrangement_string(arrs[i]) << '\n';
}

void write_ranking_csv(std::ostream& os, const SearchResult& result) {
    os << "rank,arrangement,n_feasible,ratio,coarse_ratio\n";
    for (std::size_t i = 0; i < result.ranking.size(); ++i) {
        const auto& r = result.ranking[i];
        os << (i + 1) << ',' << arrangement_string(r.arrangement) << ',' << r.n_feasible << ','
           << format_number(r.ratio) << ',' << format_number(r.coarse_ratio) << '\n';
    }
}

void write_ranking_json(std::ostream& os, const SearchResult& result) {
    nlohmann::ordered_json j;
    j["candidates"] = result.candidates;
    j["finalists"] = result.finalists;
    j["error_candidates"] = result.error_candidates;
    const auto entry = [](const RankedArrangement& r) {
        nlohmann::ordered_json e;
        e["arrangement"] = arrangement_string(r.arrangement);
        e["n_feasible"] = r.n_feasible;
        e["ratio"] = r.ratio;
        e["coarse_ratio"] = r.coarse_ratio;
        return e;
    };
    j["best"] = entry(result.best);
    j["ranking"] = nlohmann::ordered_json::array();
    for (const auto& r : result.ranking) j["ranking"].push_back(entry(r));
    os << j.dump(2) << '\n';
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "t,px,py,pz,theta_e,wx,wy,wz,phidot1,phidot2,phidot3,"
          "l1,l2,l3,l4,l5,l6,l7,l8,feasible\n";
    for (const auto& s : traj.samples) {
        os << format_number(s.t) << ',' << format_number(s.pose.position.x()) << ','
           << format_number(s.pose.position.y()) << ',' << format_number(s.pose.position.z())
           << ',' << format_number(s.theta_e);
        for (int k = 0; k < 3; ++k) os << ',' << format_number(s.omega[k]);
        for (int k = 0; k < 3; ++k) os << ',' << format_number(s.wheel_rates[k]);
        for (int k = 0; k < 8; ++k)
            os << ',' << format_number(s.cable_lengths[static_cast<std::size_t>(k)]);
        os << ',' << (s.feasible ? 1 : 0) << '\n';
    }
}

} // namespace cablewrench
