#include "cablewrench/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "cablewrench/errors.hpp"

namespace cablewrench {

namespace {

constexpr double pivot_tol = 1e-11;
constexpr double inf = std::numeric_limits<double>::infinity();

// state[j] >= 0 means basic in that row; otherwise one of these.
constexpr int at_lower = -1;
constexpr int at_upper = -2;

// maxCoeff() is undefined on empty vectors; problems with no rows (pure
// bound selection) and no columns are still legal inputs.
double max_abs_or_zero(const Eigen::VectorXd& v) {
    return v.size() > 0 ? v.cwiseAbs().maxCoeff() : 0.0;
}

struct Workspace {
    Eigen::MatrixXd A; // m x (n + m), structural then artificial columns
    Eigen::VectorXd b;
    Eigen::VectorXd lo, up;
    std::vector<int> state;
    std::vector<int> basis; // variable index per row
    int m = 0, total = 0;
};

// One simplex phase: pivots until optimal for cost `c` or a limit is hit.
// On return the state/basis describe the final vertex. `used` accumulates
// pivot count. Returns the status for this phase.
LpStatus run_phase(Workspace& w, const Eigen::VectorXd& c, int max_iterations, int& used) {
    const double d_tol = 1e-9 * (1.0 + max_abs_or_zero(c));
    Eigen::VectorXd x(w.total);

    while (true) {
        // Fresh factorization of the current basis.
        Eigen::MatrixXd B(w.m, w.m);
        for (int i = 0; i < w.m; ++i) B.col(i) = w.A.col(w.basis[static_cast<std::size_t>(i)]);
        const auto lu = B.partialPivLu();
        const auto lu_t = Eigen::MatrixXd(B.transpose()).partialPivLu();

        // Primal point: nonbasics at their bound, basics solve the equalities.
        Eigen::VectorXd rhs = w.b;
        for (int j = 0; j < w.total; ++j) {
            if (w.state[static_cast<std::size_t>(j)] >= 0) continue;
            x[j] = (w.state[static_cast<std::size_t>(j)] == at_lower) ? w.lo[j] : w.up[j];
            if (x[j] != 0.0) rhs -= w.A.col(j) * x[j];
        }
        const Eigen::VectorXd xb = lu.solve(rhs);
        for (int i = 0; i < w.m; ++i) x[w.basis[static_cast<std::size_t>(i)]] = xb[i];

        // Duals and Bland pricing: smallest improving index enters.
        Eigen::VectorXd cb(w.m);
        for (int i = 0; i < w.m; ++i) cb[i] = c[w.basis[static_cast<std::size_t>(i)]];
        const Eigen::VectorXd y = lu_t.solve(cb);

        int enter = -1;
        int dir = 0;
        for (int j = 0; j < w.total; ++j) {
            const int st = w.state[static_cast<std::size_t>(j)];
            if (st >= 0) continue;
            if (w.lo[j] == w.up[j]) continue;
            const double d = c[j] - y.dot(w.A.col(j));
            if (st == at_lower && d < -d_tol) {
                enter = j;
                dir = +1;
                break;
            }
            if (st == at_upper && d > d_tol) {
                enter = j;
                dir = -1;
                break;
            }
        }
        if (enter < 0) return LpStatus::optimal;

        if (used >= max_iterations) return LpStatus::iteration_limit;
        ++used;

        const Eigen::VectorXd wcol = lu.solve(w.A.col(enter));

        // Ratio test: how far can the entering variable move before a basic
        // variable hits one of its bounds, or it reaches its own other bound.
        const double own_span = w.up[enter] - w.lo[enter];
        double best_t = inf;
        for (int i = 0; i < w.m; ++i) {
            const double g = dir * wcol[i];
            const int bi = w.basis[static_cast<std::size_t>(i)];
            double t = inf;
            if (g > pivot_tol) {
                t = (x[bi] - w.lo[bi]) / g;
            } else if (g < -pivot_tol) {
                if (w.up[bi] == inf) continue;
                t = (w.up[bi] - x[bi]) / (-g);
            } else {
                continue;
            }
            if (t < 0.0) t = 0.0; // basic already at (or a hair past) its bound
            best_t = std::min(best_t, t);
        }

        if (own_span < best_t) {
            // Bound flip, no basis change.
            w.state[static_cast<std::size_t>(enter)] =
                (w.state[static_cast<std::size_t>(enter)] == at_lower) ? at_upper : at_lower;
            continue;
        }
        if (best_t == inf) return LpStatus::unbounded;

        // Bland leaving rule: among rows achieving the minimum ratio, the one
        // whose basic variable has the smallest index.
        int leave = -1;
        int leave_var = std::numeric_limits<int>::max();
        for (int i = 0; i < w.m; ++i) {
            const double g = dir * wcol[i];
            const int bi = w.basis[static_cast<std::size_t>(i)];
            double t = inf;
            if (g > pivot_tol) {
                t = (x[bi] - w.lo[bi]) / g;
            } else if (g < -pivot_tol) {
                if (w.up[bi] == inf) continue;
                t = (w.up[bi] - x[bi]) / (-g);
            } else {
                continue;
            }
            if (t < 0.0) t = 0.0;
            if (t == best_t && bi < leave_var) {
                leave = i;
                leave_var = bi;
            }
        }

        const int out_var = w.basis[static_cast<std::size_t>(leave)];
        const double g_leave = dir * wcol[leave];
        w.state[static_cast<std::size_t>(out_var)] = (g_leave > 0.0) ? at_lower : at_upper;
        w.state[static_cast<std::size_t>(enter)] = leave;
        w.basis[static_cast<std::size_t>(leave)] = enter;
    }
}

// Primal point implied by the final state/basis, recomputed once more so the
// returned x satisfies the equalities to factorization accuracy.
Eigen::VectorXd extract_point(const Workspace& w) {
    Eigen::MatrixXd B(w.m, w.m);
    for (int i = 0; i < w.m; ++i) B.col(i) = w.A.col(w.basis[static_cast<std::size_t>(i)]);
    Eigen::VectorXd x(w.total);
    Eigen::VectorXd rhs = w.b;
    for (int j = 0; j < w.total; ++j) {
        if (w.state[static_cast<std::size_t>(j)] >= 0) continue;
        x[j] = (w.state[static_cast<std::size_t>(j)] == at_lower) ? w.lo[j] : w.up[j];
        if (x[j] != 0.0) rhs -= w.A.col(j) * x[j];
    }
    const Eigen::VectorXd xb = B.partialPivLu().solve(rhs);
    for (int i = 0; i < w.m; ++i) x[w.basis[static_cast<std::size_t>(i)]] = xb[i];
    return x;
}

} // namespace

LpSolution solve_bounded_lp(const LinearProgram& lp, int max_iterations) {
    const int m = static_cast<int>(lp.a.rows());
    const int n = static_cast<int>(lp.a.cols());
    if (lp.b.size() != m || lp.c.size() != n || lp.lower.size() != n || lp.upper.size() != n)
        throw ValidationError("linear program: inconsistent dimensions");
    for (int j = 0; j < n; ++j) {
        if (!std::isfinite(lp.lower[j]))
            throw ValidationError("linear program: lower bounds must be finite");
        if (lp.lower[j] > lp.upper[j])
            throw ValidationError("linear program: lower bound exceeds upper bound");
    }
    if (max_iterations <= 0) max_iterations = 10000 + 200 * (m + n);

    Workspace w;
    w.m = m;
    w.total = n + m;
    w.A.resize(m, w.total);
    w.A.leftCols(n) = lp.a;
    w.A.rightCols(m).setZero();
    w.b = lp.b;
    w.lo.resize(w.total);
    w.up.resize(w.total);
    w.lo.head(n) = lp.lower;
    w.up.head(n) = lp.upper;
    w.state.assign(static_cast<std::size_t>(w.total), at_lower);
    w.basis.resize(static_cast<std::size_t>(m));

    // Start with every structural variable at its lower bound and one
    // artificial per row, signed so its starting value is non-negative.
    Eigen::VectorXd x0 = lp.lower;
    const Eigen::VectorXd r = lp.b - lp.a * x0;
    for (int i = 0; i < m; ++i) {
        w.A(i, n + i) = (r[i] >= 0.0) ? 1.0 : -1.0;
        w.lo[n + i] = 0.0;
        w.up[n + i] = inf;
        w.basis[static_cast<std::size_t>(i)] = n + i;
        w.state[static_cast<std::size_t>(n + i)] = i;
    }

    LpSolution sol;
    sol.iterations = 0;

    // Phase 1: drive the artificials to zero.
    Eigen::VectorXd c1 = Eigen::VectorXd::Zero(w.total);
    c1.tail(m).setOnes();
    LpStatus st = run_phase(w, c1, max_iterations, sol.iterations);
    if (st == LpStatus::iteration_limit) {
        sol.status = st;
        return sol;
    }
    {
        const Eigen::VectorXd x = extract_point(w);
        const double infeas = x.tail(m).sum();
        const double feas_tol = 1e-9 * (1.0 + max_abs_or_zero(lp.b));
        if (st == LpStatus::unbounded || infeas > feas_tol) {
            sol.status = LpStatus::infeasible;
            sol.x = x.head(n);
            sol.objective = lp.c.dot(sol.x);
            return sol;
        }
    }

    // Phase 2: pin the artificials at zero and optimize the real cost.
    // A pinned artificial still basic sits at level ~0 and can only leave.
    w.up.tail(m).setZero();
    Eigen::VectorXd c2 = Eigen::VectorXd::Zero(w.total);
    c2.head(n) = lp.c;
    st = run_phase(w, c2, max_iterations, sol.iterations);

    sol.status = st;
    const Eigen::VectorXd x = extract_point(w);
    sol.x = x.head(n);
    sol.objective = lp.c.dot(sol.x);
    return sol;
}

} // namespace cablewrench
