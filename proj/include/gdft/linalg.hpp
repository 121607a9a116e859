#ifndef GDFT_LINALG_HPP
#define GDFT_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "gdft/errors.hpp"

namespace gdft {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// Kronecker product a (x) b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Maximal elementwise deviation from Hermitian symmetry.
double hermiticity_defect(const CMatrix& a);

// Returns (a + a^dagger)/2 if the defect is at most `tol`, otherwise throws
// NonHermitianInput.  Serialization round-off is tolerated, modeling errors
// are not.
CMatrix symmetrize_hermitian(const CMatrix& a, double tol = 1e-12);

// Ascending eigenvalues and eigenvectors of a Hermitian matrix.
struct EigSystem {
    RVector values;
    CMatrix vectors;  // columns
};
EigSystem hermitian_eig(const CMatrix& a);

// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const CMatrix& a);

// max |lambda_i| - min |lambda_i| style scale: spectral spread used to make
// degeneracy tolerances relative.
double spectral_range(const RVector& eigenvalues);

// Deterministic random streams.  All randomized components in the toolkit
// derive their generators through this helper so that (seed, stream index)
// fully determines the draw.
std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0);

// Haar-ish random unit vector in C^n.
CVector random_unit_vector(int n, std::mt19937_64& rng);

// Random Hermitian matrix with independent Gaussian entries.
CMatrix random_hermitian(int n, std::mt19937_64& rng);

// Orthonormal basis (columns) of the span of the given vectors, discarding
// directions with singular value below `tol` times the largest.
RMatrix orthonormal_span(const std::vector<RVector>& vecs, double tol = 1e-10);

// Orthonormal basis (columns) of the null space of a real matrix.
RMatrix real_nullspace(const RMatrix& a, double tol = 1e-10);

// Least-squares solve min ||a x - b|| via SVD with relative cutoff.
RVector svd_solve(const RMatrix& a, const RVector& b, double rel_cutoff = 1e-12);

// Moore-Penrose pseudoinverse via SVD with relative singular-value cutoff.
RMatrix pseudo_inverse(const RMatrix& a, double rel_cutoff = 1e-10);

// Numerical rank via SVD with relative cutoff.
int numerical_rank(const RMatrix& a, double rel_cutoff = 1e-9);
int numerical_rank(const CMatrix& a, double rel_cutoff = 1e-9);

}  // namespace gdft

#endif  // GDFT_LINALG_HPP
