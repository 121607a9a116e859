#ifndef GDFT_BOUNDARY_HPP
#define GDFT_BOUNDARY_HPP

#include <vector>

#include "gdft/abelian.hpp"
#include "gdft/liegroup.hpp"
#include "gdft/search.hpp"
#include "gdft/theory.hpp"

namespace gdft {

// A boundary approach rho(eps) = rho_star + eps * eta into the domain from a
// facet point; the facet data is rescaled so <eta, S> = 1.
struct BoundaryForceQuery {
    FacetInequality facet;
    DensityVector rho_star;
    DensityVector eta;
    DensityVector gamma;  // any point with <gamma, S> = nu; defaults to rho_star
    bool has_gamma = false;
};

// Repulsion strength G with F(rho_star + eps*eta) ~ F(rho_star) - G*sqrt(eps).
struct BoundaryForceResult {
    double G = 0.0;
    std::vector<std::pair<DensityVector, double>> contributions;  // (omega, term)
    QuantumState minimizer_used;
    bool regularity_warning = false;  // rho_star critical for the facet map
};

// Exact abelian prefactor
//   G = 2 * sqrt( sum_{omega not on facet} ||Pi_omega W phi||^2
//                 / (<omega,S> - <gamma,S>) )
// with phi a constrained-search minimizer of the facet theory at rho_star.
// When several minimizers are supplied the smallest G is reported.
BoundaryForceResult abelian_boundary_force(
    const FunctionalTheoryModel& theory, const WeightDecomposition& wd,
    const BoundaryForceQuery& query, const std::vector<QuantumState>& phis);

// Convenience overload: computes a facet-theory minimizer itself.
BoundaryForceResult abelian_boundary_force(const FunctionalTheoryModel& theory,
                                           const WeightDecomposition& wd,
                                           const BoundaryForceQuery& query,
                                           const SearchOptions& opts = {});

// Conjectured nonabelian prefactor on a nice facet:
//   G = 2 * min_{v in i g^nonparallel}
//         sqrt( sum_{omega not on facet} ||Pi_omega (tau(v) + W) phi||^2
//               / (<omega,S> - c) ).
// tau(v) is linear in v, so the inner problem is a weighted least squares
// solved by SVD over the real {X_alpha, Y_alpha} coordinates.
BoundaryForceResult nonabelian_boundary_force(
    const LieAlgebraData& alg, const FunctionalTheoryModel& theory,
    const NonabelianFacetTheory& facet_data, const DensityVector& rho_star,
    const DensityVector& eta, const std::vector<QuantumState>& phis);

// Least-squares fit of F_p(rho_star + eps*eta) against a - G*sqrt(eps),
// weighted toward small eps where the law is asymptotic.
struct ForceFit {
    double G_fit = 0.0;
    double intercept = 0.0;
    double rms = 0.0;
    std::vector<double> values;  // F_p at each eps
};
ForceFit finite_difference_force(const FunctionalTheoryModel& theory,
                                 const BoundaryForceQuery& query,
                                 const std::vector<double>& eps_list,
                                 const SearchOptions& opts = {});

// Default eps grid {1e-4, 3e-4, 1e-3, 3e-3, 1e-2}.
std::vector<double> default_eps_grid();

}  // namespace gdft

#endif  // GDFT_BOUNDARY_HPP
