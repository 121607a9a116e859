#ifndef GDFT_ABELIAN_HPP
#define GDFT_ABELIAN_HPP

#include <vector>

#include "gdft/polytope.hpp"
#include "gdft/theory.hpp"

namespace gdft {

// Simultaneous eigendata of a commuting potential basis: distinct weights,
// an orthonormal weight-adapted basis (columns E_i), the weight index of each
// column, and per-weight projectors.
struct WeightDecomposition {
    std::vector<DensityVector> weights;
    CMatrix basis;
    std::vector<int> weight_of_column;
    std::vector<CMatrix> projectors;

    int hilbert_dim() const { return static_cast<int>(basis.rows()); }
    int potential_dim() const {
        return weights.empty() ? 0 : static_cast<int>(weights[0].size());
    }
    // potential_dim x hilbert_dim matrix whose column i is the weight of E_i.
    RMatrix column_weights() const;
};

// Facet inequality D(rho) = <rho, S> - nu >= 0, valid on the representable
// set and tight on the facet.  `normalized`: S tangent to the affine hull
// with unit norm.  Exact facets additionally carry the lattice-primitive
// integer form (int_S, int_nu) whose D takes coprime integer values on
// lattice points: D(rho) = (<rho, int_S> - int_nu) / int_denom.
struct FacetInequality {
    RVector S;
    double nu = 0.0;
    bool normalized = true;
    bool exact = false;
    IVector int_S;
    std::int64_t int_nu = 0;
    std::int64_t int_denom = 1;
};

// Checks that the potential images commute pairwise (NotAbelian otherwise)
// and block-diagonalizes them sequentially; weights deduplicated at 1e-8.
WeightDecomposition weight_decomposition(const FunctionalTheoryModel& theory,
                                         double tol = 1e-9);

// conv(Omega) of the distinct weights.
Polytope representable_polytope(const WeightDecomposition& wd);

// Normalized inequality of a facet of `poly` (S tangent, unit norm); for
// integral polytopes the lattice-primitive integer form is attached.
FacetInequality facet_inequality(const Polytope& poly, int facet_index);

// Restriction of the theory to H_F = span of the weight columns on the facet:
// compressed potentials Pi_F iota(v) Pi_F^dagger and interaction
// Pi_F W Pi_F^dagger.  Note the compressed potential images may be linearly
// dependent; the restricted model skips the independence check.
// Also reports which distinct weights lie on the facet (`on_facet`) and the
// basis columns spanning H_F (`columns`).
struct FacetTheory {
    FunctionalTheoryModel model;
    std::vector<int> on_facet;   // distinct-weight indices on the hyperplane
    std::vector<int> columns;    // basis column indices spanning H_F
    FacetInequality inequality;
};
FacetTheory facet_theory(const FunctionalTheoryModel& theory,
                         const WeightDecomposition& wd,
                         const FacetInequality& facet, double tol = 1e-9);

// True iff rho lies in the convex hull of at most dim conv(Omega) weights.
// Brute force over weight subsets with LP membership; throws Unsupported
// beyond 1e6 subsets, NotRepresentable when rho is outside conv(Omega).
bool is_critical_value(const WeightDecomposition& wd, const DensityVector& rho,
                       double tol = 1e-9);

// Probability vector over weight-adapted basis columns.
struct ClassicalState {
    RVector y;
};

// A point of the classical fiber { y >= 0, sum y = 1, A(y) = rho }, with all
// entries strictly positive whenever rho lies in the relative interior (the
// LP maximizes the minimum entry).
ClassicalState classical_fiber_point(const WeightDecomposition& wd,
                                     const DensityVector& rho);

// Density of a classical state: A(y) = sum_i y_i omega(i).
DensityVector classical_density(const WeightDecomposition& wd,
                                const ClassicalState& y);

}  // namespace gdft

#endif  // GDFT_ABELIAN_HPP
