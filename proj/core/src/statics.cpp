#include "cablewrench/statics.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "cablewrench/errors.hpp"
#include "cablewrench/simplex.hpp"

namespace cablewrench {

TensionBox TensionBox::uniform(int n, double lo, double hi) {
    TensionBox box;
    box.t_min = Eigen::VectorXd::Constant(n, lo);
    box.t_max = Eigen::VectorXd::Constant(n, hi);
    return box;
}

void TensionBox::validate() const {
    if (t_min.size() != t_max.size())
        throw ValidationError("tensions: t_min and t_max sizes differ");
    if (t_min.size() == 0) throw ValidationError("tensions: empty box");
    for (int i = 0; i < t_min.size(); ++i) {
        if (!std::isfinite(t_min[i]) || !std::isfinite(t_max[i]))
            throw ValidationError("tensions: bounds must be finite");
        if (t_min[i] > t_max[i])
            throw EmptyBoxError("tensions: t_min > t_max for cable " + std::to_string(i + 1));
    }
}

WrenchSystem assemble_wrench_system(const RobotGeometry& geom, const CableArrangement& arr,
                                    const Pose& pose) {
    WrenchSystem sys;
    sys.W.resize(9, 8);
    sys.W.topRows<6>() = wrench_matrix_tp(geom, arr, pose);
    sys.W.bottomRows<3>() = wrist_wrench_matrix(geom.wrist, arr.loops, 8);
    sys.w_e.resize(9);
    sys.w_e.head<6>() = gravity_wrench_tp(geom, pose);
    sys.w_e.tail<3>().setZero();
    return sys;
}

namespace {

Eigen::VectorXd effective_weights(const WrenchSystem& sys, const FeasibilityOptions& opts) {
    const int m = static_cast<int>(sys.W.rows());
    if (opts.row_weights.size() == 0) return Eigen::VectorXd::Ones(m);
    if (opts.row_weights.size() != m)
        throw ValidationError("row_weights size does not match wrench system rows");
    for (int i = 0; i < m; ++i)
        if (!(opts.row_weights[i] > 0.0))
            throw ValidationError("row_weights must be positive");
    return opts.row_weights;
}

double weighted_residual(const WrenchSystem& sys, const Eigen::VectorXd& weights,
                         const Eigen::VectorXd& t) {
    return (weights.asDiagonal() * (sys.W * t + sys.w_e)).cwiseAbs().maxCoeff();
}

void check_system(const WrenchSystem& sys, const TensionBox& box) {
    box.validate();
    if (sys.W.cols() != box.size())
        throw ValidationError("tension box size does not match wrench system columns");
    if (sys.w_e.size() != sys.W.rows())
        throw ValidationError("external wrench size does not match wrench system rows");
}

} // namespace

double equilibrium_tolerance(const WrenchSystem& sys, const FeasibilityOptions& opts) {
    if (opts.eps_abs) return *opts.eps_abs;
    const double scale = sys.w_e.size() > 0 ? sys.w_e.cwiseAbs().maxCoeff() : 0.0;
    return opts.eps_rel * std::max(1.0, scale);
}

FeasibilityResult tension_feasible(const WrenchSystem& sys, const TensionBox& box,
                                   const FeasibilityOptions& opts) {
    check_system(sys, box);
    const int m = static_cast<int>(sys.W.rows());
    const int n = static_cast<int>(sys.W.cols());
    const Eigen::VectorXd weights = effective_weights(sys, opts);

    // min s  s.t.  w_i (W t + w_e)_i - s + p_i = 0
    //              w_i (W t + w_e)_i + s - q_i = 0
    //              t in box, s >= 0, p >= 0, q >= 0
    // Variable layout: [t (n) | s | p (m) | q (m)].
    const int nv = n + 1 + 2 * m;
    LinearProgram lp;
    lp.a = Eigen::MatrixXd::Zero(2 * m, nv);
    lp.b = Eigen::VectorXd::Zero(2 * m);
    lp.c = Eigen::VectorXd::Zero(nv);
    lp.lower = Eigen::VectorXd::Zero(nv);
    lp.upper = Eigen::VectorXd::Constant(nv, std::numeric_limits<double>::infinity());

    const Eigen::MatrixXd Ww = weights.asDiagonal() * sys.W;
    const Eigen::VectorXd we_w = weights.asDiagonal() * sys.w_e;
    for (int i = 0; i < m; ++i) {
        lp.a.block(i, 0, 1, n) = Ww.row(i);
        lp.a(i, n) = -1.0;
        lp.a(i, n + 1 + i) = 1.0;
        lp.b[i] = -we_w[i];

        lp.a.block(m + i, 0, 1, n) = Ww.row(i);
        lp.a(m + i, n) = 1.0;
        lp.a(m + i, n + 1 + m + i) = -1.0;
        lp.b[m + i] = -we_w[i];
    }
    lp.c[n] = 1.0;
    lp.lower.head(n) = box.t_min;
    lp.upper.head(n) = box.t_max;

    const LpSolution sol = solve_bounded_lp(lp, opts.max_lp_iterations);
    if (sol.status != LpStatus::optimal)
        throw NumericalError("tension feasibility LP did not converge");

    FeasibilityResult out;
    out.tension = sol.x.head(n);
    out.residual = weighted_residual(sys, weights, out.tension);
    out.tolerance = equilibrium_tolerance(sys, opts);
    out.feasible = out.residual <= out.tolerance;
    return out;
}

OracleResult feasibility_oracle(const WrenchSystem& sys, const TensionBox& box, int resolution,
                                const FeasibilityOptions& opts) {
    check_system(sys, box);
    if (resolution < 2) throw ValidationError("oracle resolution must be at least 2");
    const int m = static_cast<int>(sys.W.rows());
    const int n = static_cast<int>(sys.W.cols());
    const Eigen::VectorXd weights = effective_weights(sys, opts);

    std::vector<int> points(static_cast<std::size_t>(n));
    std::vector<double> spacing(static_cast<std::size_t>(n), 0.0);
    double total = 1.0;
    bool coarse = false;
    for (int j = 0; j < n; ++j) {
        const double span = box.t_max[j] - box.t_min[j];
        const auto ju = static_cast<std::size_t>(j);
        if (span > 0.0) {
            points[ju] = resolution;
            spacing[ju] = span / static_cast<double>(resolution - 1);
            if (spacing[ju] > span / 4.0) coarse = true;
        } else {
            points[ju] = 1;
        }
        total *= points[ju];
        if (total > 2e7)
            throw ValidationError("oracle grid too large; lower the resolution or cable count");
    }

    // Worst-case residual increase from snapping a box point to the grid.
    double qbound = 0.0;
    for (int i = 0; i < m; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j)
            row += std::abs(sys.W(i, j)) * spacing[static_cast<std::size_t>(j)] / 2.0;
        qbound = std::max(qbound, weights[i] * row);
    }

    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    Eigen::VectorXd t(n);
    Eigen::VectorXd best_t(n);
    double best = std::numeric_limits<double>::infinity();
    bool done = false;
    while (!done) {
        for (int j = 0; j < n; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            t[j] = box.t_min[j] + spacing[ju] * static_cast<double>(idx[ju]);
        }
        const double r = weighted_residual(sys, weights, t);
        if (r < best) {
            best = r;
            best_t = t;
        }
        // Odometer, last axis fastest: first improvement wins ties, so the
        // reported minimizer is the lexicographically first one.
        done = true;
        for (int j = n - 1; j >= 0; --j) {
            const auto ju = static_cast<std::size_t>(j);
            if (++idx[ju] < points[ju]) {
                done = false;
                break;
            }
            idx[ju] = 0;
        }
    }

    OracleResult out;
    out.quantization_bound = qbound;
    out.resolution_coarse = coarse;
    out.result.tension = best_t;
    out.result.residual = best;
    out.result.tolerance = equilibrium_tolerance(sys, opts) + qbound;
    out.result.feasible = best <= out.result.tolerance;
    return out;
}

} // namespace cablewrench
