#include "gdft/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace gdft {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

double hermiticity_defect(const CMatrix& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

CMatrix symmetrize_hermitian(const CMatrix& a, double tol) {
    if (a.rows() != a.cols()) {
        throw GdftError(ErrorKind::DimensionMismatch, "matrix is not square");
    }
    double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    if (hermiticity_defect(a) > tol * scale) {
        throw GdftError(ErrorKind::NonHermitianInput,
                        "matrix deviates from Hermitian symmetry beyond tolerance");
    }
    return 0.5 * (a + a.adjoint().eval());
}

EigSystem hermitian_eig(const CMatrix& a) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(a);
    if (solver.info() != Eigen::Success) {
        throw GdftError(ErrorKind::EigensolverFailure,
                        "self-adjoint eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const CMatrix& a) {
    return hermitian_eig(a).values.minCoeff();
}

double spectral_range(const RVector& eigenvalues) {
    if (eigenvalues.size() == 0) return 0.0;
    return eigenvalues.maxCoeff() - eigenvalues.minCoeff();
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
    // splitmix-style mixing so that nearby (seed, stream) pairs decorrelate.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return std::mt19937_64(z);
}

CVector random_unit_vector(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector v(n);
    for (int i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    double nrm = v.norm();
    if (nrm == 0.0) {
        v.setZero();
        v(0) = 1.0;
        return v;
    }
    return v / nrm;
}

CMatrix random_hermitian(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
    return 0.5 * (a + a.adjoint().eval());
}

RMatrix orthonormal_span(const std::vector<RVector>& vecs, double tol) {
    if (vecs.empty()) return RMatrix(0, 0);
    int n = static_cast<int>(vecs[0].size());
    RMatrix a(n, static_cast<int>(vecs.size()));
    for (size_t j = 0; j < vecs.size(); ++j) a.col(static_cast<int>(j)) = vecs[j];
    Eigen::JacobiSVD<RMatrix> svd(a, Eigen::ComputeThinU);
    double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > tol * std::max(smax, 1.0)) ++r;
    }
    return svd.matrixU().leftCols(r);
}

RMatrix real_nullspace(const RMatrix& a, double tol) {
    if (a.rows() == 0) return RMatrix::Identity(a.cols(), a.cols());
    Eigen::JacobiSVD<RMatrix> svd(a, Eigen::ComputeFullV);
    double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > tol * std::max(smax, 1.0)) ++r;
    }
    return svd.matrixV().rightCols(a.cols() - r);
}

RVector svd_solve(const RMatrix& a, const RVector& b, double rel_cutoff) {
    Eigen::JacobiSVD<RMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(rel_cutoff);
    return svd.solve(b);
}

RMatrix pseudo_inverse(const RMatrix& a, double rel_cutoff) {
    Eigen::JacobiSVD<RMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RVector& s = svd.singularValues();
    double smax = s.size() ? s(0) : 0.0;
    RMatrix sinv = RMatrix::Zero(s.size(), s.size());
    for (int i = 0; i < s.size(); ++i) {
        if (s(i) > rel_cutoff * std::max(smax, 1e-300)) sinv(i, i) = 1.0 / s(i);
    }
    return svd.matrixV() * sinv * svd.matrixU().transpose();
}

int numerical_rank(const RMatrix& a, double rel_cutoff) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    Eigen::JacobiSVD<RMatrix> svd(a);
    double smax = svd.singularValues()(0);
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > rel_cutoff * std::max(smax, 1e-300)) ++r;
    }
    return r;
}

int numerical_rank(const CMatrix& a, double rel_cutoff) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    Eigen::JacobiSVD<CMatrix> svd(a);
    double smax = svd.singularValues()(0);
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > rel_cutoff * std::max(smax, 1e-300)) ++r;
    }
    return r;
}

}  // namespace gdft
