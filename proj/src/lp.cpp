#include "gdft/lp.hpp"

#include <cmath>
#include <limits>

namespace gdft {

namespace {

// Simplex over an explicit tableau.  `basis` holds the basic variable of each
// row.  Returns false when the problem is unbounded below.
bool run_simplex(RMatrix& tab, std::vector<int>& basis, int ncols, double tol) {
    const int m = static_cast<int>(tab.rows()) - 1;  // last row = objective
    for (int iter = 0; iter < 20000; ++iter) {
        // Bland: entering variable = smallest index with negative reduced cost.
        int enter = -1;
        for (int j = 0; j < ncols; ++j) {
            if (tab(m, j) < -tol) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return true;  // optimal
        // Ratio test, Bland tie-break on basis index.
        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            if (tab(i, enter) > tol) {
                double ratio = tab(i, ncols) / tab(i, enter);
                if (ratio < best_ratio - 1e-12 ||
                    (ratio < best_ratio + 1e-12 &&
                     (leave < 0 || basis[i] < basis[leave]))) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        if (leave < 0) return false;  // unbounded
        // Pivot.
        double piv = tab(leave, enter);
        tab.row(leave) /= piv;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            double f = tab(i, enter);
            if (f != 0.0) tab.row(i) -= f * tab.row(leave);
        }
        basis[leave] = enter;
    }
    return true;  // iteration cap: treat as converged (desk scale never hits it)
}

}  // namespace

LpResult solve_lp(const RMatrix& a_in, const RVector& b_in, const RVector& c,
                  double tol) {
    const int m = static_cast<int>(a_in.rows());
    const int n = static_cast<int>(a_in.cols());
    RMatrix a = a_in;
    RVector b = b_in;
    for (int i = 0; i < m; ++i) {
        if (b(i) < 0) {
            a.row(i) *= -1.0;
            b(i) *= -1.0;
        }
    }

    // Phase 1: artificials n..n+m-1.
    const int ntot = n + m;
    RMatrix tab = RMatrix::Zero(m + 1, ntot + 1);
    tab.block(0, 0, m, n) = a;
    tab.block(0, n, m, m) = RMatrix::Identity(m, m);
    tab.block(0, ntot, m, 1) = b;
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;
    // Phase-1 objective: sum of artificials, expressed in nonbasic terms.
    for (int j = 0; j <= ntot; ++j) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += tab(i, j);
        tab(m, j) = (j >= n && j < ntot) ? 1.0 - s : -s;
    }
    run_simplex(tab, basis, ntot, tol);
    double phase1 = -tab(m, ntot);
    double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
    LpResult res;
    if (phase1 > tol * scale) {
        res.status = LpResult::Status::Infeasible;
        return res;
    }
    // Drive any artificial still in the basis out (or drop its redundant row).
    for (int i = 0; i < m; ++i) {
        if (basis[i] >= n) {
            int enter = -1;
            for (int j = 0; j < n; ++j) {
                if (std::abs(tab(i, j)) > tol) {
                    enter = j;
                    break;
                }
            }
            if (enter >= 0) {
                double piv = tab(i, enter);
                tab.row(i) /= piv;
                for (int k = 0; k < static_cast<int>(tab.rows()); ++k) {
                    if (k == i) continue;
                    double f = tab(k, enter);
                    if (f != 0.0) tab.row(k) -= f * tab.row(i);
                }
                basis[i] = enter;
            }
            // else: redundant row, leave the artificial at value ~0.
        }
    }

    // Phase 2: rebuild objective row for c over original columns only.
    RMatrix tab2 = RMatrix::Zero(m + 1, n + 1);
    tab2.block(0, 0, m, n) = tab.block(0, 0, m, n);
    tab2.block(0, n, m, 1) = tab.block(0, ntot, m, 1);
    for (int j = 0; j < n; ++j) tab2(m, j) = c(j);
    tab2(m, n) = 0.0;
    for (int i = 0; i < m; ++i) {
        if (basis[i] < n) {
            double f = tab2(m, basis[i]);
            if (f != 0.0) tab2.row(m) -= f * tab2.row(i);
        }
    }
    bool bounded = run_simplex(tab2, basis, n, tol);
    if (!bounded) {
        res.status = LpResult::Status::Unbounded;
        return res;
    }
    res.status = LpResult::Status::Optimal;
    res.x = RVector::Zero(n);
    for (int i = 0; i < m; ++i) {
        if (basis[i] < n) res.x(basis[i]) = tab2(i, n);
    }
    res.value = c.dot(res.x);
    return res;
}

bool in_convex_hull(const RMatrix& points, const RVector& rho, double tol) {
    const int d = static_cast<int>(points.rows());
    const int n = static_cast<int>(points.cols());
    if (n == 0) return false;
    RMatrix a(d + 1, n);
    a.topRows(d) = points;
    a.row(d).setOnes();
    RVector b(d + 1);
    b.head(d) = rho;
    b(d) = 1.0;
    LpResult r = solve_lp(a, b, RVector::Zero(n), tol);
    return r.status == LpResult::Status::Optimal;
}

RVector max_min_point(const RMatrix& constraints, const RVector& rhs,
                      double* max_min) {
    const int m = static_cast<int>(constraints.rows());
    const int n = static_cast<int>(constraints.cols());
    // y = t * 1 + s with s >= 0, t >= 0; maximize t.
    RMatrix a(m, n + 1);
    a.leftCols(n) = constraints;
    a.col(n) = constraints * RVector::Ones(n);
    RVector c = RVector::Zero(n + 1);
    c(n) = -1.0;
    LpResult r = solve_lp(a, rhs, c);
    if (r.status != LpResult::Status::Optimal) {
        throw GdftError(ErrorKind::NotRepresentable,
                        "no nonnegative solution to the fiber constraints");
    }
    double t = r.x(n);
    if (max_min) *max_min = t;
    RVector y = r.x.head(n).array() + t;
    return y;
}

}  // namespace gdft
