#ifndef GDFT_LIEGROUP_HPP
#define GDFT_LIEGROUP_HPP

#include <string>
#include <vector>

#include "gdft/abelian.hpp"
#include "gdft/polytope.hpp"
#include "gdft/theory.hpp"

namespace gdft {

// All Lie data is kept in real coordinates: the Cartan generators are stored
// as Hermitian operators T_a, weights/roots are real vectors of their
// simultaneous eigenvalues, and densities are rho_a = <psi|T_a|psi>.
struct RootData {
    RVector alpha;    // root in Cartan coordinates (integral for built-ins)
    CMatrix raising;  // represented L+ with [T_a, L+] = alpha_a L+
    CMatrix lowering;
    CMatrix x_gen;    // Hermitian X = L+ + L-
    CMatrix y_gen;    // Hermitian Y = -i (L+ - L-)
};

struct LieAlgebraData {
    std::vector<CMatrix> cartan;  // Hermitian, pairwise commuting
    std::vector<RootData> positive_roots;
    RMatrix chamber;  // rows e with the positive chamber { x : <x,e> >= 0 }
    int hilbert_dim = 0;
    std::string name;
};

// Product of su(2) factors acting on a tensor product of irreps of the given
// dimensions (dimension n = spin (n-1)/2, Cartan generator 2Jz per factor).
LieAlgebraData su2_product_algebra(const std::vector<int>& irrep_dims);

// su(3) in its adjoint representation on C^8 (orthonormal root-vector basis),
// Cartan coordinates (lambda(Z), lambda(Z')) with Z = diag(1,-1,0),
// Z' = diag(0,1,-1).
LieAlgebraData su3_adjoint_algebra();

// Weight decomposition of the Cartan generators.
WeightDecomposition rep_weights(const LieAlgebraData& alg);

// One screened inequality <x, s> >= c (s, c integral and primitive).
struct KirwanCandidate {
    IVector s;
    std::int64_t c = 0;
    int dim_n_minus = -1;   // negative root spaces with <-alpha, s> < 0
    int dim_h_below = -1;   // weight columns with <omega, s> < c
    int witness_rank = -1;  // generic rank of v -> P_< tau(v) psi
    bool accepted = false;
    std::string reason;
};

struct KirwanResult {
    Polytope polytope;  // Lambda = accepted half-spaces intersect chamber
    std::vector<KirwanCandidate> accepted;  // after the reporting filter
    std::vector<KirwanCandidate> rejected;
};

// Kirwan polytope via hyperplane screening: candidate hyperplanes are affine
// hulls of weight subsets (both orientations); an orientation is accepted
// when dim n_-(s<0) = dim H(s<c) and the map A -> P_{<} tau(A) psi is an
// isomorphism for generic psi in H(s=c) (random witnesses, re-sampled with
// doubled count on rank disagreement).  Reported inequalities are those whose
// hyperplane touches Lambda in a facet, or carries a facet of conv(Omega)
// while still touching Lambda.
KirwanResult kirwan_polytope(const LieAlgebraData& alg,
                             std::uint64_t seed = 2024);

enum class FacetClass { Trivial, Nice, Other };

struct ClassifiedFacet {
    RVector s;  // facet of Lambda as <x,s> >= c, tight on the facet
    double c = 0.0;
    FacetClass cls = FacetClass::Other;
};

// trivial: facet lies in a chamber wall; nice: nontrivial and contained in a
// facet of conv(Omega); other: remaining nontrivial facets.
std::vector<ClassifiedFacet> classify_facets(const LieAlgebraData& alg,
                                             const KirwanResult& kirwan,
                                             const WeightDecomposition& wd);

// Restriction to the weight spaces on a nice facet's hyperplane, plus the
// split of the root generators into g_parallel (<alpha,s> = 0) and
// g_nonparallel (<alpha,s> != 0), kept as full-space Hermitian operators.
struct NonabelianFacetTheory {
    FunctionalTheoryModel model;
    CMatrix isometry;           // hilbert_dim x dim H_F, columns orthonormal
    std::vector<int> columns;   // weight-basis columns spanning H_F
    std::vector<CMatrix> g_parallel;
    std::vector<CMatrix> g_nonparallel;
    RVector s;
    double c = 0.0;
};

NonabelianFacetTheory facet_theory_nonabelian(const LieAlgebraData& alg,
                                              const FunctionalTheoryModel& theory,
                                              const RVector& s, double c,
                                              double tol = 1e-8);

struct SelectionRuleReport {
    double residual = 0.0;
    bool pass = false;
};

// Checks i tau(S) psi = c psi, i.e. (sum_a s_a T_a - c) psi = 0 in real
// coordinates, for a state whose density lies on the facet.
SelectionRuleReport selection_rule_check(const LieAlgebraData& alg,
                                         const FunctionalTheoryModel& theory,
                                         const RVector& s, double c,
                                         const QuantumState& psi,
                                         double tol = 1e-8);

// Built-in momentum-map theories.
// Two-site Bose-Hubbard dimer on Sym^N C^2: potential T = 2Jz, interaction
// diag((N-k)^2 + k^2) conjugated by the rotation exp(-i theta Y / 2).
FunctionalTheoryModel dimer_theory(int n_bosons, double theta);
LieAlgebraData dimer_algebra(int n_bosons);

// C^2 (x) C^3 with potentials Z (x) 1 and 1 (x) diag(2,0,-2) and the worked
// five-parameter interaction (u1, u2, u3 couple the two Z-levels; k1, k3 and
// the fixed unit hops act within the upper level).
FunctionalTheoryModel two_three_theory(double u1, double u2, double u3,
                                       double k1, double k3);

// Extended theory whose potential basis is {T_a} followed by {X_alpha,
// Y_alpha} for every positive root.  Constraining its density to
// (rho, 0, ..., 0) pins the full momentum map, which is the constrained
// search that the momentum-map functional performs.
FunctionalTheoryModel momentum_theory(const LieAlgebraData& alg,
                                      const FunctionalTheoryModel& theory);
DensityVector momentum_density(const LieAlgebraData& alg,
                               const DensityVector& rho);

}  // namespace gdft

#endif  // GDFT_LIEGROUP_HPP
