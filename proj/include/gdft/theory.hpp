#ifndef GDFT_THEORY_HPP
#define GDFT_THEORY_HPP

#include <string>
#include <vector>

#include "gdft/linalg.hpp"

namespace gdft {

// Hermitian operator on a finite-dimensional Hilbert space (dimensionless
// energy units).
struct HermitianOperator {
    CMatrix entries;

    int dim() const { return static_cast<int>(entries.rows()); }
};

// Validates Hermiticity (symmetrizing away round-off up to `tol`).
HermitianOperator make_hermitian(const CMatrix& entries, double tol = 1e-12);

// A generalized functional theory: images of a potential basis, a fixed
// interaction, and the Hilbert dimension they act on.
struct FunctionalTheoryModel {
    std::vector<HermitianOperator> potential_basis;
    HermitianOperator interaction;
    int hilbert_dim = 0;
    std::vector<std::string> labels;

    int potential_dim() const { return static_cast<int>(potential_basis.size()); }
};

// Validated constructor: all operators share the dimension and the basis is
// linearly independent as a set of matrices.
FunctionalTheoryModel make_theory(const std::vector<CMatrix>& potential_basis,
                                  const CMatrix& interaction,
                                  std::vector<std::string> labels = {});

// Pure state (unit amplitude vector) or ensemble state (PSD, unit trace).
struct QuantumState {
    enum class Kind { Pure, Ensemble };
    Kind kind = Kind::Pure;
    CVector amplitudes;  // pure only
    CMatrix matrix;      // ensemble only

    int dim() const;
    CMatrix density_matrix() const;

    static QuantumState pure(const CVector& amplitudes, double tol = 1e-10);
    static QuantumState ensemble(const CMatrix& gamma, double tol = 1e-10);
};

// Real vector of expectation values, indexed like the potential basis.
using DensityVector = RVector;

// Sum_a v_a iota(B_a).
CMatrix apply_potential(const FunctionalTheoryModel& theory, const RVector& v);

// rho_a = Tr(Gamma iota(B_a)); throws NonRealExpectation if an imaginary part
// above 1e-10 survives (broken Hermiticity upstream).
DensityVector density_of_state(const FunctionalTheoryModel& theory,
                               const QuantumState& state);

// Smallest eigenvalue of iota(v) + W.
double ground_energy(const FunctionalTheoryModel& theory, const RVector& v);

// Orthonormal basis of the near-degenerate bottom eigenspace.  A negative
// degeneracy_tol selects the default 1e-8 * spectral range.
std::vector<QuantumState> ground_states(const FunctionalTheoryModel& theory,
                                        const RVector& v,
                                        double degeneracy_tol = -1.0);

// k-convexification: potentials iota(v) (x) 1_k, interaction W (x) 1_k on a
// Hilbert space of dimension hilbert_dim * k.
FunctionalTheoryModel convexify(const FunctionalTheoryModel& theory, int k);

// Dimension of iota^{-1}(span{1}); with a linearly independent basis this is
// 1 when the identity lies in the span of the potential images, else 0.
int identity_preimage_dim(const FunctionalTheoryModel& theory,
                          double residual_cutoff = 1e-10);

// Built-in: the one-qubit theory iota(v) = v Z with interaction W = lambda X.
FunctionalTheoryModel qubit_theory(double lambda);

// Built-in: N qubits with potentials Z_1..Z_N.  The interaction defaults to
// the transverse coupling sum_i X_i X_{i+1} when none is supplied.
FunctionalTheoryModel spin_chain_theory(int n_sites,
                                        const CMatrix* interaction = nullptr);

}  // namespace gdft

#endif  // GDFT_THEORY_HPP
