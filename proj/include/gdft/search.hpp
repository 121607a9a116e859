#ifndef GDFT_SEARCH_HPP
#define GDFT_SEARCH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gdft/abelian.hpp"
#include "gdft/theory.hpp"

namespace gdft {

struct SearchOptions {
    int multistarts = 32;
    int max_iters = 400;
    double constraint_tol = 1e-8;
    double value_tol = 1e-9;
    double penalty_growth = 10.0;
    std::uint64_t seed = 12345;
    // Optional warm starts (e.g. facet-minimizer ansatz states near a facet);
    // each is run as an extra start before the random ones.
    std::vector<CVector> seed_states;
};

struct SearchResult {
    double value = 0.0;
    QuantumState state;
    double constraint_residual = 0.0;
    int starts_converged = 0;
    int best_start_index = -1;
    // Converged minimizers clustered at the best value (deduplicated up to
    // global phase, capped); used when a consumer needs every near-optimal
    // state, e.g. boundary-force prefactors with degenerate minimizers.
    std::vector<QuantumState> near_optimal;
};

// Constrained search min <Psi|W|Psi> over unit vectors with density rho.
// Abelian theories use the classical-fiber parametrization (amplitude blocks
// by projected gradient, phase blocks by coordinate updates); other theories
// fall back to a quadratic-penalty method on the unit sphere.  Both are
// multistarted; the reported value is the minimum over all starts.
SearchResult pure_functional(const FunctionalTheoryModel& theory,
                             const DensityVector& rho,
                             const SearchOptions& opts = {});

// Ensemble functional as the pure functional of the k-convexification,
// k = min(hilbert_dim, rank_bound) (rank_bound <= 0 means no user bound).
SearchResult ensemble_functional(const FunctionalTheoryModel& theory,
                                 const DensityVector& rho,
                                 const SearchOptions& opts = {},
                                 int rank_bound = 0);

// Ground-state density/interaction-energy samples at potential v; several
// branches when the ground state is degenerate.
struct HkSample {
    std::vector<std::pair<DensityVector, double>> branches;
    bool degenerate = false;
};
HkSample hk_functional_sample(const FunctionalTheoryModel& theory,
                              const RVector& v, double degeneracy_tol = -1.0);

// Residual diagnostic at an interior minimizer: for every weight-basis column
// E_i with negligible overlap |<E_i|Phi>| <= 1e-8, reports |<E_i|W|Phi>|
// (all should vanish at a true minimizer).
std::vector<std::pair<int, double>> no_mixing_residuals(
    const FunctionalTheoryModel& theory, const WeightDecomposition& wd,
    const SearchResult& result, double tol = 1e-9);

// min over phases xi of sum_{ij} conj(xi_i) xi_j a_i a_j w_ij for fixed
// nonnegative amplitudes a, by multistarted coordinate phase sweeps.  Returns
// the value; `phases` (optional) receives the minimizing unit phases.
double minimize_phases(const CMatrix& w, const RVector& amplitudes,
                       std::mt19937_64& rng, int restarts = 8,
                       CVector* phases = nullptr);

// Projects p onto { x >= 0 : A x = b } (alternating affine correction and
// clipping; exact at desk scale).  Used to restore search feasibility.
RVector restore_feasible(const RMatrix& a, const RVector& b, RVector p,
                         int max_rounds = 200);

}  // namespace gdft

#endif  // GDFT_SEARCH_HPP
