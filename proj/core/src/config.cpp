#include "cablewrench/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cablewrench/errors.hpp"

namespace cablewrench {

namespace {

using json = nlohmann::ordered_json;

constexpr double deg = pi / 180.0;

const json& member(const json& j, const std::string& parent, const char* key) {
    const auto it = j.find(key);
    if (it == j.end())
        throw MissingFieldError(parent.empty() ? key : parent + "." + key);
    return *it;
}

bool has(const json& j, const char* key) { return j.find(key) != j.end(); }

double number_at(const json& j, const std::string& path) {
    if (!j.is_number()) throw ValidationError(path + ": expected a number");
    return j.get<double>();
}

int int_at(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ValidationError(path + ": expected an integer");
    return j.get<int>();
}

bool bool_at(const json& j, const std::string& path) {
    if (!j.is_boolean()) throw ValidationError(path + ": expected true or false");
    return j.get<bool>();
}

std::string string_at(const json& j, const std::string& path) {
    if (!j.is_string()) throw ValidationError(path + ": expected a string");
    return j.get<std::string>();
}

Eigen::Vector3d vec3_at(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 3)
        throw ValidationError(path + ": expected an array of 3 numbers");
    Eigen::Vector3d v;
    for (int k = 0; k < 3; ++k) v[k] = number_at(j[static_cast<std::size_t>(k)], path);
    return v;
}

std::vector<Eigen::Vector3d> points_at(const json& j, const std::string& path) {
    if (!j.is_array()) throw ValidationError(path + ": expected an array of points");
    std::vector<Eigen::Vector3d> out;
    out.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k)
        out.push_back(vec3_at(j[k], path + "[" + std::to_string(k) + "]"));
    return out;
}

Axis axis_at(const json& j, const std::string& path) {
    const std::string s = string_at(j, path);
    if (s == "x") return Axis::x;
    if (s == "y") return Axis::y;
    if (s == "z") return Axis::z;
    throw ValidationError(path + ": expected \"x\", \"y\" or \"z\"");
}

// Scalar means "same bound for every cable"; an array gives per-cable bounds.
Eigen::VectorXd tension_bound_at(const json& j, const std::string& path, int n) {
    if (j.is_number()) return Eigen::VectorXd::Constant(n, j.get<double>());
    if (j.is_array()) {
        if (static_cast<int>(j.size()) != n)
            throw ValidationError(path + ": expected " + std::to_string(n) + " entries");
        Eigen::VectorXd v(n);
        for (int k = 0; k < n; ++k)
            v[k] = number_at(j[static_cast<std::size_t>(k)],
                             path + "[" + std::to_string(k) + "]");
        return v;
    }
    throw ValidationError(path + ": expected a number or an array of numbers");
}

// File indices are 1-based to match the R1..R15 labels; memory is 0-based.
int index_at(const json& j, const std::string& path, int count) {
    const int v = int_at(j, path);
    if (v < 1 || v > count)
        throw ValidationError(path + ": index " + std::to_string(v) + " outside 1.." +
                              std::to_string(count));
    return v - 1;
}

std::string axis_name(Axis a) {
    switch (a) {
    case Axis::x: return "x";
    case Axis::y: return "y";
    default: return "z";
    }
}

json point_list(const std::vector<Eigen::Vector3d>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back({p.x(), p.y(), p.z()});
    return arr;
}

} // namespace

RobotGeometry RobotConfig::geometry() const {
    RobotGeometry g;
    g.exit_points = exit_points;
    g.anchor_points = anchors;
    g.platform_mass = mass;
    g.com = com;
    g.gravity = gravity;
    g.wrist.alpha = wrist.alpha_deg * deg;
    g.wrist.beta = wrist.beta_deg * deg;
    for (int i = 0; i < 3; ++i)
        g.wrist.gamma[static_cast<std::size_t>(i)] =
            wrist.gamma_deg[static_cast<std::size_t>(i)] * deg;
    g.wrist.sphere_radius = wrist.sphere_radius;
    g.wrist.wheel_radius = wrist.wheel_radius;
    g.wrist.drum_radius = wrist.drum_radius;
    return g;
}

TensionBox RobotConfig::tension_box() const { return TensionBox{tensions.t_min, tensions.t_max}; }

FeasibilityOptions RobotConfig::feasibility() const {
    FeasibilityOptions opts;
    opts.eps_abs = tensions.equilibrium_tolerance;
    return opts;
}

RobotConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("configuration is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("configuration root must be a JSON object");

    RobotConfig cfg;
    cfg.schema_version = int_at(member(j, "", "schema_version"), "schema_version");
    if (cfg.schema_version != 1)
        throw ValidationError("schema_version: unsupported version " +
                              std::to_string(cfg.schema_version));
    if (has(j, "name")) cfg.name = string_at(j["name"], "name");
    if (has(j, "fabricated")) cfg.fabricated = bool_at(j["fabricated"], "fabricated");
    if (has(j, "gravity")) cfg.gravity = number_at(j["gravity"], "gravity");

    const json& frame = member(j, "", "frame");
    cfg.exit_points = points_at(member(frame, "frame", "exit_points"), "frame.exit_points");

    const json& platform = member(j, "", "platform");
    cfg.anchors = points_at(member(platform, "platform", "anchors"), "platform.anchors");
    cfg.mass = number_at(member(platform, "platform", "mass"), "platform.mass");
    if (has(platform, "com")) cfg.com = vec3_at(platform["com"], "platform.com");

    const json& wr = member(j, "", "wrist");
    cfg.wrist.alpha_deg = number_at(member(wr, "wrist", "alpha_deg"), "wrist.alpha_deg");
    cfg.wrist.beta_deg = number_at(member(wr, "wrist", "beta_deg"), "wrist.beta_deg");
    {
        const json& g = member(wr, "wrist", "gamma_deg");
        if (!g.is_array() || g.size() != 3)
            throw ValidationError("wrist.gamma_deg: expected an array of 3 numbers");
        for (int k = 0; k < 3; ++k)
            cfg.wrist.gamma_deg[static_cast<std::size_t>(k)] =
                number_at(g[static_cast<std::size_t>(k)], "wrist.gamma_deg");
    }
    cfg.wrist.sphere_radius =
        number_at(member(wr, "wrist", "sphere_radius"), "wrist.sphere_radius");
    cfg.wrist.wheel_radius = number_at(member(wr, "wrist", "wheel_radius"), "wrist.wheel_radius");
    cfg.wrist.drum_radius = number_at(member(wr, "wrist", "drum_radius"), "wrist.drum_radius");

    const json& tens = member(j, "", "tensions");
    cfg.tensions.t_min = tension_bound_at(member(tens, "tensions", "t_min"), "tensions.t_min", 8);
    cfg.tensions.t_max = tension_bound_at(member(tens, "tensions", "t_max"), "tensions.t_max", 8);
    if (has(tens, "equilibrium_tolerance")) {
        const double tol =
            number_at(tens["equilibrium_tolerance"], "tensions.equilibrium_tolerance");
        if (!(tol > 0.0))
            throw ValidationError("tensions.equilibrium_tolerance: must be positive");
        cfg.tensions.equilibrium_tolerance = tol;
    }

    const json& grid = member(j, "", "grid");
    cfg.grid.lower = vec3_at(member(grid, "grid", "lower"), "grid.lower");
    cfg.grid.upper = vec3_at(member(grid, "grid", "upper"), "grid.upper");
    {
        const json& iv = member(grid, "grid", "intervals");
        if (!iv.is_array() || iv.size() != 3)
            throw ValidationError("grid.intervals: expected an array of 3 integers");
        for (int k = 0; k < 3; ++k)
            cfg.grid.intervals[static_cast<std::size_t>(k)] =
                int_at(iv[static_cast<std::size_t>(k)], "grid.intervals");
    }

    const int n_anchors = static_cast<int>(cfg.anchors.size());
    const int n_exits = static_cast<int>(cfg.exit_points.size());

    if (has(j, "classes")) {
        const json& cl = j["classes"];
        const json& pairs = member(cl, "classes", "loop_anchor_pairs");
        if (!pairs.is_array() || pairs.size() != 3)
            throw ValidationError("classes.loop_anchor_pairs: expected 3 anchor pairs");
        for (int k = 0; k < 3; ++k) {
            const json& p = pairs[static_cast<std::size_t>(k)];
            const std::string path = "classes.loop_anchor_pairs[" + std::to_string(k) + "]";
            if (!p.is_array() || p.size() != 2)
                throw ValidationError(path + ": expected a pair of anchor indices");
            for (int s = 0; s < 2; ++s)
                cfg.classes.loop_anchor_pairs[static_cast<std::size_t>(k)]
                                             [static_cast<std::size_t>(s)] =
                    index_at(p[static_cast<std::size_t>(s)], path, n_anchors);
        }
        const json& cands = member(cl, "classes", "simple_anchor_candidates");
        if (!cands.is_array())
            throw ValidationError("classes.simple_anchor_candidates: expected an array");
        cfg.classes.simple_anchor_candidates.clear();
        for (std::size_t k = 0; k < cands.size(); ++k)
            cfg.classes.simple_anchor_candidates.push_back(
                index_at(cands[k], "classes.simple_anchor_candidates", n_anchors));
        cfg.classes.simple_cable_count = 2;
    } else {
        cfg.classes = restricted_anchor_classes();
    }

    const json& arr = member(j, "", "arrangement");
    {
        const json& exits = member(arr, "arrangement", "exits");
        const json& anchors = member(arr, "arrangement", "anchors");
        if (!exits.is_array() || exits.size() != 8)
            throw ValidationError("arrangement.exits: expected 8 exit indices");
        if (!anchors.is_array() || anchors.size() != 8)
            throw ValidationError("arrangement.anchors: expected 8 anchor indices");
        for (int k = 0; k < 8; ++k) {
            cfg.arrangement.exit_of_cable[static_cast<std::size_t>(k)] =
                index_at(exits[static_cast<std::size_t>(k)], "arrangement.exits", n_exits);
            cfg.arrangement.anchor_of_cable[static_cast<std::size_t>(k)] =
                index_at(anchors[static_cast<std::size_t>(k)], "arrangement.anchors", n_anchors);
        }
        const json& loops = member(arr, "arrangement", "loops");
        if (!loops.is_array() || loops.size() != 3)
            throw ValidationError("arrangement.loops: expected 3 cable pairs");
        for (int k = 0; k < 3; ++k) {
            const json& p = loops[static_cast<std::size_t>(k)];
            const std::string path = "arrangement.loops[" + std::to_string(k) + "]";
            if (!p.is_array() || p.size() != 2)
                throw ValidationError(path + ": expected a pair of cable indices");
            for (int s = 0; s < 2; ++s)
                cfg.arrangement.loops[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] =
                    index_at(p[static_cast<std::size_t>(s)], path, 8);
        }
        const json& simple = member(arr, "arrangement", "simple");
        if (!simple.is_array() || simple.size() != 2)
            throw ValidationError("arrangement.simple: expected 2 cable indices");
        for (int s = 0; s < 2; ++s)
            cfg.arrangement.simple_cables[static_cast<std::size_t>(s)] =
                index_at(simple[static_cast<std::size_t>(s)], "arrangement.simple", 8);
    }

    if (has(j, "search")) {
        const json& se = j["search"];
        if (has(se, "coarse_intervals")) {
            const json& iv = se["coarse_intervals"];
            if (!iv.is_array() || iv.size() != 3)
                throw ValidationError("search.coarse_intervals: expected an array of 3 integers");
            for (int k = 0; k < 3; ++k)
                cfg.search.coarse_intervals[static_cast<std::size_t>(k)] =
                    int_at(iv[static_cast<std::size_t>(k)], "search.coarse_intervals");
        }
        if (has(se, "prune_slack"))
            cfg.search.prune_slack = number_at(se["prune_slack"], "search.prune_slack");
        if (has(se, "top_k")) cfg.search.top_k = int_at(se["top_k"], "search.top_k");
    }

    if (has(j, "trajectories")) {
        const json& tr = j["trajectories"];
        if (has(tr, "dt")) cfg.trajectories.dt = number_at(tr["dt"], "trajectories.dt");
        if (has(tr, "rotation")) {
            const json& t1 = tr["rotation"];
            auto& s = cfg.trajectories.rotation;
            s.position = vec3_at(member(t1, "trajectories.rotation", "position"),
                                 "trajectories.rotation.position");
            s.axis = axis_at(member(t1, "trajectories.rotation", "axis"),
                             "trajectories.rotation.axis");
            s.amplitude_deg = number_at(member(t1, "trajectories.rotation", "amplitude_deg"),
                                        "trajectories.rotation.amplitude_deg");
            s.duration = number_at(member(t1, "trajectories.rotation", "duration"),
                                   "trajectories.rotation.duration");
        }
        if (has(tr, "translation")) {
            const json& t2 = tr["translation"];
            auto& s = cfg.trajectories.translation;
            s.waypoints = points_at(member(t2, "trajectories.translation", "waypoints"),
                                    "trajectories.translation.waypoints");
            s.segment_duration =
                number_at(member(t2, "trajectories.translation", "segment_duration"),
                          "trajectories.translation.segment_duration");
        }
        if (has(tr, "combined")) {
            const json& t3 = tr["combined"];
            auto& s = cfg.trajectories.combined;
            s.start = vec3_at(member(t3, "trajectories.combined", "start"),
                              "trajectories.combined.start");
            s.z_target = number_at(member(t3, "trajectories.combined", "z_target"),
                                   "trajectories.combined.z_target");
            s.axis = axis_at(member(t3, "trajectories.combined", "axis"),
                             "trajectories.combined.axis");
            s.amplitude_deg = number_at(member(t3, "trajectories.combined", "amplitude_deg"),
                                        "trajectories.combined.amplitude_deg");
            s.duration = number_at(member(t3, "trajectories.combined", "duration"),
                                   "trajectories.combined.duration");
        }
    }

    // Cross-field checks reuse the structural validators so the CLI and the
    // library reject exactly the same inputs.
    validate_geometry(cfg.geometry());
    cfg.tension_box().validate();
    cfg.grid.validate();
    validate_arrangement(cfg.arrangement, cfg.classes, n_anchors, n_exits);
    contact_geometry(cfg.geometry().wrist);
    return cfg;
}

RobotConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read configuration file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const RobotConfig& cfg) {
    json j;
    j["schema_version"] = cfg.schema_version;
    j["name"] = cfg.name;
    j["fabricated"] = cfg.fabricated;
    j["gravity"] = cfg.gravity;
    j["frame"]["exit_points"] = point_list(cfg.exit_points);
    j["platform"]["anchors"] = point_list(cfg.anchors);
    j["platform"]["mass"] = cfg.mass;
    j["platform"]["com"] = {cfg.com.x(), cfg.com.y(), cfg.com.z()};

    json& wr = j["wrist"];
    wr["alpha_deg"] = cfg.wrist.alpha_deg;
    wr["beta_deg"] = cfg.wrist.beta_deg;
    wr["gamma_deg"] = cfg.wrist.gamma_deg;
    wr["sphere_radius"] = cfg.wrist.sphere_radius;
    wr["wheel_radius"] = cfg.wrist.wheel_radius;
    wr["drum_radius"] = cfg.wrist.drum_radius;

    json& tens = j["tensions"];
    tens["t_min"] = std::vector<double>(cfg.tensions.t_min.data(),
                                        cfg.tensions.t_min.data() + cfg.tensions.t_min.size());
    tens["t_max"] = std::vector<double>(cfg.tensions.t_max.data(),
                                        cfg.tensions.t_max.data() + cfg.tensions.t_max.size());
    if (cfg.tensions.equilibrium_tolerance)
        tens["equilibrium_tolerance"] = *cfg.tensions.equilibrium_tolerance;

    json& grid = j["grid"];
    grid["lower"] = {cfg.grid.lower.x(), cfg.grid.lower.y(), cfg.grid.lower.z()};
    grid["upper"] = {cfg.grid.upper.x(), cfg.grid.upper.y(), cfg.grid.upper.z()};
    grid["intervals"] = cfg.grid.intervals;

    json& cl = j["classes"];
    cl["loop_anchor_pairs"] = json::array();
    for (const auto& p : cfg.classes.loop_anchor_pairs)
        cl["loop_anchor_pairs"].push_back({p[0] + 1, p[1] + 1});
    cl["simple_anchor_candidates"] = json::array();
    for (int a : cfg.classes.simple_anchor_candidates)
        cl["simple_anchor_candidates"].push_back(a + 1);

    json& arr = j["arrangement"];
    arr["exits"] = json::array();
    arr["anchors"] = json::array();
    for (int k = 0; k < 8; ++k) {
        arr["exits"].push_back(cfg.arrangement.exit_of_cable[static_cast<std::size_t>(k)] + 1);
        arr["anchors"].push_back(cfg.arrangement.anchor_of_cable[static_cast<std::size_t>(k)] +
                                 1);
    }
    arr["loops"] = json::array();
    for (const auto& p : cfg.arrangement.loops) arr["loops"].push_back({p[0] + 1, p[1] + 1});
    arr["simple"] = {cfg.arrangement.simple_cables[0] + 1, cfg.arrangement.simple_cables[1] + 1};

    json& se = j["search"];
    se["coarse_intervals"] = cfg.search.coarse_intervals;
    se["prune_slack"] = cfg.search.prune_slack;
    se["top_k"] = cfg.search.top_k;

    json& tr = j["trajectories"];
    tr["dt"] = cfg.trajectories.dt;
    {
        json& t1 = tr["rotation"];
        const auto& s = cfg.trajectories.rotation;
        t1["position"] = {s.position.x(), s.position.y(), s.position.z()};
        t1["axis"] = axis_name(s.axis);
        t1["amplitude_deg"] = s.amplitude_deg;
        t1["duration"] = s.duration;
    }
    {
        json& t2 = tr["translation"];
        const auto& s = cfg.trajectories.translation;
        t2["waypoints"] = point_list(s.waypoints);
        t2["segment_duration"] = s.segment_duration;
    }
    {
        json& t3 = tr["combined"];
        const auto& s = cfg.trajectories.combined;
        t3["start"] = {s.start.x(), s.start.y(), s.start.z()};
        t3["z_target"] = s.z_target;
        t3["axis"] = axis_name(s.axis);
        t3["amplitude_deg"] = s.amplitude_deg;
        t3["duration"] = s.duration;
    }

    return j.dump(2) + "\n";
}

} // namespace cablewrench
