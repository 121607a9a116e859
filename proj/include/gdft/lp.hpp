#ifndef GDFT_LP_HPP
#define GDFT_LP_HPP

#include <vector>

#include "gdft/linalg.hpp"

namespace gdft {

// Dense two-phase simplex for the standard form
//     min c^T x   s.t.   A x = b,  x >= 0.
// Desk-scale problem sizes only (tens of variables); Bland's rule is used
// throughout, trading speed for guaranteed termination.
struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    RVector x;
    double value = 0.0;
};

LpResult solve_lp(const RMatrix& a, const RVector& b, const RVector& c,
                  double tol = 1e-9);

// Feasibility of  sum_i y_i p_i = rho, sum_i y_i = 1, y >= 0  for the given
// point list (columns of `points`).
bool in_convex_hull(const RMatrix& points, const RVector& rho, double tol = 1e-9);

// Maximizes min_i y_i over { y >= 0 : constraints * y = rhs }.  Returns the
// maximizing y; max_min receives the optimum (0 when the feasible set has no
// strictly positive point).  Throws NotRepresentable when infeasible.
RVector max_min_point(const RMatrix& constraints, const RVector& rhs,
                      double* max_min = nullptr);

}  // namespace gdft

#endif  // GDFT_LP_HPP
