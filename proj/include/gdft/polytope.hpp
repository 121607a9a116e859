#ifndef GDFT_POLYTOPE_HPP
#define GDFT_POLYTOPE_HPP

#include <vector>

#include "gdft/exactlin.hpp"
#include "gdft/linalg.hpp"

namespace gdft {

// One facet-defining inequality <normal, x> <= offset, tight on `support`
// (indices into the generating point list).  When the generating points are
// integral, the normal is the primitive integer vector tangent to the affine
// hull and the identity of the facet is exact.
struct Facet {
    RVector normal;
    double offset = 0.0;
    std::vector<int> support;
    bool exact = false;
    IVector int_normal;
    std::int64_t int_offset = 0;
};

// Convex hull of a finite point set, stored with its affine-hull data and the
// full facet list.  Points are deduplicated; `vertices` indexes the extreme
// ones among the deduplicated `points` columns.
struct Polytope {
    RMatrix points;   // columns, deduplicated
    int ambient_dim = 0;
    int dim = 0;      // affine dimension
    RVector centroid;
    RMatrix tangent;  // ambient x dim, orthonormal columns
    std::vector<Facet> facets;
    std::vector<int> vertices;
    bool integral = false;
};

// Facet enumeration is brute force over point subsets of size dim; the number
// of subsets is capped (throws Unsupported beyond ~2e6) because every setting
// this toolkit targets is desk scale.
Polytope build_polytope(const RMatrix& points, double tol = 1e-9);

bool polytope_contains(const Polytope& poly, const RVector& x,
                       double tol = 1e-9);

// Inside the polytope and strictly off every facet hyperplane (membership in
// the affine hull is still required).
bool in_relative_interior(const Polytope& poly, const RVector& x,
                          double tol = 1e-9);

// Indices of facets whose hyperplane passes through x.
std::vector<int> active_facets(const Polytope& poly, const RVector& x,
                               double tol = 1e-9);

// Vertices of { x : a x <= b } for a bounded full-dimensional intersection,
// by enumerating square subsystems.  Columns of the result are the vertices.
RMatrix halfspace_vertices(const RMatrix& a, const RVector& b,
                           double tol = 1e-9);

// n choose k with saturation at cap (no overflow).
std::int64_t binomial_capped(int n, int k, std::int64_t cap);

}  // namespace gdft

#endif  // GDFT_POLYTOPE_HPP
