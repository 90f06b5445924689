#pragma once

#include <optional>

#include <Eigen/Dense>

#include "cablewrench/cdpr.hpp"

namespace cablewrench {

/// Per-cable tension limits [t_min, t_max], one pair per cable. Dynamic size
/// so toy systems with fewer cables can reuse the same machinery.
struct TensionBox {
    Eigen::VectorXd t_min;
    Eigen::VectorXd t_max;

    static TensionBox uniform(int n, double lo, double hi);
    int size() const { return static_cast<int>(t_min.size()); }
    /// Throws EmptyBoxError when t_min > t_max in any component,
    /// ValidationError on size mismatch or non-finite bounds.
    void validate() const;
};

/// Linear statics of the full machine at one pose: W t + w_e = 0 is the
/// equilibrium condition for tensions t. Rows 0-5 are the plate force/moment
/// balance (base axes, moments about the plate origin); rows 6-8 are the
/// sphere moment balance through the wheels, which is pose-independent and
/// homogeneous because the sphere is driven about its own centre.
struct WrenchSystem {
    Eigen::MatrixXd W;   ///< rows x n_cables
    Eigen::VectorXd w_e; ///< external wrench the cables must cancel
};

WrenchSystem assemble_wrench_system(const RobotGeometry& geom, const CableArrangement& arr,
                                    const Pose& pose);

struct FeasibilityOptions {
    /// Verdict threshold as a fraction of max(1, |w_e|_inf). Forces in newtons
    /// and moments in newton-metres share one threshold, which is the reason
    /// row_weights exists.
    double eps_rel = 1e-6;
    /// When set, overrides the relative rule with an absolute threshold.
    std::optional<double> eps_abs;
    /// Optional per-row scaling of the residual (empty = all ones). The
    /// verdict applies to the weighted residual.
    Eigen::VectorXd row_weights;
    int max_lp_iterations = 0;
};

struct FeasibilityResult {
    bool feasible = false;
    Eigen::VectorXd tension; ///< residual-minimizing tensions inside the box
    double residual = 0.0;   ///< achieved weighted max-residual of W t + w_e
    double tolerance = 0.0;  ///< threshold the verdict compared against
};

/// The threshold tension_feasible will use for this system and options.
double equilibrium_tolerance(const WrenchSystem& sys, const FeasibilityOptions& opts);

/// Decides whether some tension vector inside the box balances the system,
/// by minimizing the (weighted) max-norm residual of W t + w_e over the box
/// as a linear program and comparing the optimum against the tolerance.
/// The residual reported is recomputed from the returned tensions, not taken
/// from the LP objective. Throws EmptyBoxError / ValidationError on bad
/// inputs and NumericalError if the LP fails to converge.
FeasibilityResult tension_feasible(const WrenchSystem& sys, const TensionBox& box,
                                   const FeasibilityOptions& opts = {});

struct OracleResult {
    FeasibilityResult result;
    double quantization_bound = 0.0; ///< worst-case residual error of the grid
    bool resolution_coarse = false;  ///< some axis stepped coarser than span/4
};

/// Brute-force cross-check of tension_feasible: evaluates the residual on a
/// regular grid of `resolution` points per cable axis (axes with zero span
/// contribute a single point) and keeps the minimizer. The verdict allows the
/// tolerance plus a rigorous quantization bound, max_i sum_j w_i |W_ij| h_j/2,
/// so a grid miss of a feasible point cannot produce a false negative.
/// Guarded to small systems: total grid points must stay below 2e7.
OracleResult feasibility_oracle(const WrenchSystem& sys, const TensionBox& box, int resolution,
                                const FeasibilityOptions& opts = {});

} // namespace cablewrench
