#ifndef GDFT_BOSONIC_HPP
#define GDFT_BOSONIC_HPP

#include <vector>

#include "gdft/abelian.hpp"
#include "gdft/polytope.hpp"
#include "gdft/theory.hpp"

namespace gdft {

// Occupation numbers per momentum mode; a basis permanent of the sector.
struct OccupationVector {
    std::vector<int> m;

    int total() const;
    int momentum(int d) const;  // sum k*m_k mod d
};

// All m with sum m_k = N and total momentum P mod d, lexicographic.
std::vector<OccupationVector> enumerate_permanents(int d, int n_bosons, int p);

// Translation-invariant two-body contact interaction
// W = (1/d) sum_{k1+k2 = k3+k4 mod d} b+_{k1} b+_{k2} b_{k3} b_{k4}
// in the permanent basis of the (d, N, P) sector.  Ladder radicands are
// accumulated exactly as integers and rooted once.
CMatrix hubbard_interaction(int d, int n_bosons, int p);

// General two-body interaction sum w[k1][k2][k3][k4] b+ b+ b b restricted to
// the sector; the resulting matrix must come out Hermitian (validated).
// `w` is indexed as w[((k1*d + k2)*d + k3)*d + k4].
CMatrix interaction_from_tensor(int d, int n_bosons, int p,
                                const std::vector<Complex>& w);

// Potential basis = momentum number operators n_0..n_{d-1} on the sector;
// interaction defaults to the contact (Hubbard) one.
FunctionalTheoryModel build_bosonic_theory(int d, int n_bosons, int p,
                                           const CMatrix* interaction = nullptr);

// The exact-functional data: T[j][alpha] = D^(j)(m^(alpha)) over the facet
// functionals in lattice-primitive normalization, its Moore-Penrose inverse,
// and a kernel basis.
struct FunctionalFormModel {
    RMatrix T;
    RMatrix T_plus;
    RMatrix kernel_basis;  // columns
    std::vector<FacetInequality> constraints;
};

FunctionalFormModel functional_form(const Polytope& domain,
                                    const std::vector<OccupationVector>& perms);

// Closed-form pure functional in the simplex setting (#weights = #vertices =
// dim H): amplitudes fixed by |c_beta|^2 = D^(beta)(rho)/L_beta, phases
// minimized numerically.  Throws NotSimplexSetting otherwise.
double simplex_functional(const FunctionalTheoryModel& theory,
                          const Polytope& domain, const DensityVector& rho,
                          std::uint64_t seed = 12345);

}  // namespace gdft

#endif  // GDFT_BOSONIC_HPP
