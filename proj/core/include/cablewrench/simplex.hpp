#pragma once

#include <Eigen/Dense>

namespace cablewrench {

/// Minimize c^T x subject to a x = b and lower <= x <= upper.
/// Lower bounds must be finite; upper bounds may be +infinity. Components with
/// lower == upper are treated as fixed.
struct LinearProgram {
    Eigen::MatrixXd a;
    Eigen::VectorXd b;
    Eigen::VectorXd c;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;
};

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

struct LpSolution {
    LpStatus status = LpStatus::iteration_limit;
    Eigen::VectorXd x;       ///< primal point (meaningful for optimal)
    double objective = 0.0;  ///< c^T x recomputed from x
    int iterations = 0;      ///< simplex pivots across both phases
};

/// Dense two-phase primal simplex on the bounded-variable form above.
///
/// Pivot selection uses Bland's rule throughout (smallest eligible index to
/// enter; among minimum-ratio rows, smallest basic variable index to leave),
/// which rules out cycling and, more importantly here, makes the path and
/// therefore the exact floating-point result a pure function of the input.
/// The basis is refactored every iteration; problem sizes in this codebase
/// are tens of rows, where refactoring costs less than bookkeeping tricks.
///
/// max_iterations <= 0 picks a generous default based on problem size.
/// Throws ValidationError on inconsistent dimensions or lower > upper.
LpSolution solve_bounded_lp(const LinearProgram& lp, int max_iterations = 0);

} // namespace cablewrench
