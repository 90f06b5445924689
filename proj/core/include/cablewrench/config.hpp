#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cablewrench/arrangement.hpp"
#include "cablewrench/cdpr.hpp"
#include "cablewrench/statics.hpp"
#include "cablewrench/trajectory.hpp"
#include "cablewrench/workspace.hpp"

namespace cablewrench {

/// Wrist block as it appears in the file: angles in degrees. Conversion to
/// radians happens in RobotConfig::geometry() so that a load/serialize cycle
/// touches no value and round-trips bit-exactly.
struct WristSettings {
    double alpha_deg = 35.264389682754654; ///< atan(1/sqrt(2)) in degrees
    double beta_deg = 0.0;
    std::array<double, 3> gamma_deg = {0.0, 120.0, 240.0};
    double sphere_radius = 0.11;
    double wheel_radius = 0.05;
    double drum_radius = 0.05;
};

struct TensionSettings {
    Eigen::VectorXd t_min;
    Eigen::VectorXd t_max;
    /// Absolute equilibrium tolerance in newtons (and newton-metres for the
    /// moment rows). When absent, the relative default of FeasibilityOptions
    /// applies. See the README for why the shipped reference configuration
    /// sets this to a loose value.
    std::optional<double> equilibrium_tolerance;
};

struct SearchSettings {
    std::array<int, 3> coarse_intervals = {4, 4, 4};
    double prune_slack = 0.05;
    int top_k = 10;
};

struct RotationTrajectorySettings {
    Eigen::Vector3d position = Eigen::Vector3d::Zero();
    Axis axis = Axis::z;
    double amplitude_deg = 360.0;
    double duration = 10.0;
};

struct TranslationTrajectorySettings {
    std::vector<Eigen::Vector3d> waypoints;
    double segment_duration = 5.0;
};

struct CombinedTrajectorySettings {
    Eigen::Vector3d start = Eigen::Vector3d::Zero();
    double z_target = 0.0;
    Axis axis = Axis::z;
    double amplitude_deg = 360.0;
    double duration = 8.0;
};

struct TrajectorySettings {
    double dt = 0.01;
    RotationTrajectorySettings rotation;
    TranslationTrajectorySettings translation;
    CombinedTrajectorySettings combined;
};

/// Everything a batch run needs, mirroring the JSON schema. Indices are
/// 0-based in memory and 1-based in the file (matching the R1..R15 anchor
/// labels); angle fields keep the file's degrees.
struct RobotConfig {
    int schema_version = 1;
    std::string name;
    /// Marks geometry/limits that are stand-ins rather than measured values.
    bool fabricated = false;
    double gravity = 9.81;

    std::vector<Eigen::Vector3d> exit_points;
    std::vector<Eigen::Vector3d> anchors;
    double mass = 0.0;
    Eigen::Vector3d com = Eigen::Vector3d::Zero();
    WristSettings wrist;
    TensionSettings tensions;
    GridSpec grid;
    CableArrangement arrangement;
    AnchorClasses classes;
    SearchSettings search;
    TrajectorySettings trajectories;

    RobotGeometry geometry() const;
    TensionBox tension_box() const;
    /// Feasibility options with the configured equilibrium tolerance applied.
    FeasibilityOptions feasibility() const;
};

/// Parses and validates a configuration document. Throws ParseError on
/// malformed JSON, MissingFieldError for absent required fields, and
/// ValidationError (naming the offending field) for type or range problems.
RobotConfig parse_config(const std::string& json_text);

/// parse_config over the contents of a file. Throws ParseError when the file
/// cannot be read.
RobotConfig load_config(const std::string& path);

/// JSON text that parses back to an identical configuration.
std::string serialize_config(const RobotConfig& cfg);

} // namespace cablewrench
