#include "gdft/theory.hpp"

#include <cmath>

namespace gdft {

HermitianOperator make_hermitian(const CMatrix& entries, double tol) {
    return HermitianOperator{symmetrize_hermitian(entries, tol)};
}

FunctionalTheoryModel make_theory(const std::vector<CMatrix>& potential_basis,
                                  const CMatrix& interaction,
                                  std::vector<std::string> labels) {
    FunctionalTheoryModel theory;
    theory.interaction = make_hermitian(interaction);
    theory.hilbert_dim = theory.interaction.dim();
    for (const CMatrix& b : potential_basis) {
        HermitianOperator op = make_hermitian(b);
        if (op.dim() != theory.hilbert_dim) {
            throw GdftError(ErrorKind::DimensionMismatch,
                            "potential basis operator dimension differs from "
                            "interaction dimension");
        }
        theory.potential_basis.push_back(std::move(op));
    }
    // Linear independence of the basis as matrices: flatten real/imag parts.
    const int n = theory.hilbert_dim;
    const int k = theory.potential_dim();
    if (k > 0) {
        RMatrix flat(2 * n * n, k);
        for (int a = 0; a < k; ++a) {
            const CMatrix& m = theory.potential_basis[a].entries;
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    flat(i * n + j, a) = m(i, j).real();
                    flat(n * n + i * n + j, a) = m(i, j).imag();
                }
            }
        }
        if (numerical_rank(flat) < k) {
            throw GdftError(ErrorKind::LinearlyDependentBasis,
                            "potential basis images are linearly dependent");
        }
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != k) {
        throw GdftError(ErrorKind::DimensionMismatch,
                        "label count differs from potential basis size");
    }
    if (labels.empty()) {
        for (int a = 0; a < k; ++a) labels.push_back("v" + std::to_string(a));
    }
    theory.labels = std::move(labels);
    return theory;
}

int QuantumState::dim() const {
    return kind == Kind::Pure ? static_cast<int>(amplitudes.size())
                              : static_cast<int>(matrix.rows());
}

CMatrix QuantumState::density_matrix() const {
    if (kind == Kind::Pure) return amplitudes * amplitudes.adjoint();
    return matrix;
}

QuantumState QuantumState::pure(const CVector& amplitudes, double tol) {
    double nrm = amplitudes.norm();
    if (std::abs(nrm - 1.0) > tol) {
        throw GdftError(ErrorKind::NotRepresentable,
                        "pure state amplitudes are not unit norm");
    }
    QuantumState s;
    s.kind = Kind::Pure;
    s.amplitudes = amplitudes / nrm;
    return s;
}

QuantumState QuantumState::ensemble(const CMatrix& gamma, double tol) {
    CMatrix g = symmetrize_hermitian(gamma, tol);
    double tr = g.trace().real();
    if (std::abs(tr - 1.0) > tol) {
        throw GdftError(ErrorKind::NotRepresentable,
                        "ensemble state does not have unit trace");
    }
    EigSystem eig = hermitian_eig(g);
    if (eig.values.minCoeff() < -tol * std::max(1.0, eig.values.maxCoeff())) {
        throw GdftError(ErrorKind::NotRepresentable,
                        "ensemble state is not positive semidefinite");
    }
    QuantumState s;
    s.kind = Kind::Ensemble;
    s.matrix = std::move(g);
    return s;
}

CMatrix apply_potential(const FunctionalTheoryModel& theory, const RVector& v) {
    if (v.size() != theory.potential_dim()) {
        throw GdftError(ErrorKind::DimensionMismatch,
                        "potential coefficient count differs from basis size");
    }
    CMatrix h = CMatrix::Zero(theory.hilbert_dim, theory.hilbert_dim);
    for (int a = 0; a < theory.potential_dim(); ++a) {
        h += v(a) * theory.potential_basis[a].entries;
    }
    return h;
}

DensityVector density_of_state(const FunctionalTheoryModel& theory,
                               const QuantumState& state) {
    if (state.dim() != theory.hilbert_dim) {
        throw GdftError(ErrorKind::DimensionMismatch,
                        "state dimension differs from theory dimension");
    }
    DensityVector rho(theory.potential_dim());
    for (int a = 0; a < theory.potential_dim(); ++a) {
        const CMatrix& b = theory.potential_basis[a].entries;
        Complex val;
        if (state.kind == QuantumState::Kind::Pure) {
            val = state.amplitudes.dot(b * state.amplitudes);
        } else {
            val = (state.matrix * b).trace();
        }
        if (std::abs(val.imag()) > 1e-10 * std::max(1.0, std::abs(val.real()))) {
            throw GdftError(ErrorKind::NonRealExpectation,
                            "expectation value has a non-negligible imaginary "
                            "part");
        }
        rho(a) = val.real();
    }
    return rho;
}

double ground_energy(const FunctionalTheoryModel& theory, const RVector& v) {
    return min_eigenvalue(apply_potential(theory, v) +
                          theory.interaction.entries);
}

std::vector<QuantumState> ground_states(const FunctionalTheoryModel& theory,
                                        const RVector& v,
                                        double degeneracy_tol) {
    EigSystem eig = hermitian_eig(apply_potential(theory, v) +
                                  theory.interaction.entries);
    if (degeneracy_tol < 0) {
        degeneracy_tol = 1e-8 * std::max(1.0, spectral_range(eig.values));
    }
    std::vector<QuantumState> states;
    double e0 = eig.values(0);
    for (int i = 0; i < eig.values.size(); ++i) {
        if (eig.values(i) - e0 > degeneracy_tol) break;
        states.push_back(QuantumState::pure(eig.vectors.col(i)));
    }
    return states;
}

FunctionalTheoryModel convexify(const FunctionalTheoryModel& theory, int k) {
    if (k < 1) {
        throw GdftError(ErrorKind::DimensionMismatch,
                        "convexification multiplicity must be positive");
    }
    CMatrix id = CMatrix::Identity(k, k);
    std::vector<CMatrix> basis;
    basis.reserve(theory.potential_basis.size());
    for (const HermitianOperator& b : theory.potential_basis) {
        basis.push_back(kron(b.entries, id));
    }
    CMatrix w = kron(theory.interaction.entries, id);
    return make_theory(basis, w, theory.labels);
}

int identity_preimage_dim(const FunctionalTheoryModel& theory,
                          double residual_cutoff) {
    const int n = theory.hilbert_dim;
    const int k = theory.potential_dim();
    if (k == 0) return 0;
    RMatrix flat(2 * n * n, k);
    RVector unit(2 * n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int a = 0; a < k; ++a) {
                const CMatrix& m = theory.potential_basis[a].entries;
                flat(i * n + j, a) = m(i, j).real();
                flat(n * n + i * n + j, a) = m(i, j).imag();
            }
            unit(i * n + j) = (i == j) ? 1.0 : 0.0;
            unit(n * n + i * n + j) = 0.0;
        }
    }
    RVector x = svd_solve(flat, unit);
    double res = (flat * x - unit).norm();
    return res <= residual_cutoff * std::sqrt(static_cast<double>(n)) ? 1 : 0;
}

FunctionalTheoryModel qubit_theory(double lambda) {
    CMatrix z(2, 2), x(2, 2);
    z << 1, 0, 0, -1;
    x << 0, 1, 1, 0;
    return make_theory({z}, lambda * x, {"z"});
}

FunctionalTheoryModel spin_chain_theory(int n_sites,
                                        const CMatrix* interaction) {
    if (n_sites < 1 || n_sites > 12) {
        throw GdftError(ErrorKind::Unsupported,
                        "spin chain size must be between 1 and 12");
    }
    const int dim = 1 << n_sites;
    CMatrix z1(2, 2), x1(2, 2), id2 = CMatrix::Identity(2, 2);
    z1 << 1, 0, 0, -1;
    x1 << 0, 1, 1, 0;
    auto site_op = [&](const CMatrix& op, int site) {
        CMatrix out = CMatrix::Identity(1, 1);
        for (int s = 0; s < n_sites; ++s) {
            out = kron(out, s == site ? op : id2);
        }
        return out;
    };
    std::vector<CMatrix> basis;
    std::vector<std::string> labels;
    for (int s = 0; s < n_sites; ++s) {
        basis.push_back(site_op(z1, s));
        labels.push_back("z" + std::to_string(s));
    }
    CMatrix w;
    if (interaction) {
        w = *interaction;
    } else {
        w = CMatrix::Zero(dim, dim);
        for (int s = 0; s + 1 < n_sites; ++s) {
            w += (site_op(x1, s) * site_op(x1, s + 1)).eval();
        }
    }
    return make_theory(basis, w, std::move(labels));
}

}  // namespace gdft
