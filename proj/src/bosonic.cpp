#include "gdft/bosonic.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gdft/search.hpp"

namespace gdft {

int OccupationVector::total() const {
    int s = 0;
    for (int x : m) s += x;
    return s;
}

int OccupationVector::momentum(int d) const {
    int s = 0;
    for (size_t k = 0; k < m.size(); ++k)
        s = (s + static_cast<int>(k) * m[k]) % d;
    return s;
}

namespace {

void enumerate_rec(int d, int mode, int left, std::vector<int>& m,
                   std::vector<OccupationVector>& out) {
    if (mode == d - 1) {
        m[mode] = left;
        out.push_back(OccupationVector{m});
        return;
    }
    // Descending occupation of the current mode gives the worked examples'
    // column order (m^(1) = (N,0,...) first).
    for (int occ = left; occ >= 0; --occ) {
        m[mode] = occ;
        enumerate_rec(d, mode + 1, left - occ, m, out);
    }
}

std::map<std::vector<int>, int> index_map(
    const std::vector<OccupationVector>& perms) {
    std::map<std::vector<int>, int> idx;
    for (size_t i = 0; i < perms.size(); ++i)
        idx[perms[i].m] = static_cast<int>(i);
    return idx;
}

// Adds coeff * b+_{k1} b+_{k2} b_{k3} b_{k4} |m_beta> to column beta of w.
void apply_pair_term(CMatrix& w, const std::vector<OccupationVector>& perms,
                     const std::map<std::vector<int>, int>& idx, int beta,
                     int k1, int k2, int k3, int k4, Complex coeff) {
    std::vector<int> m = perms[beta].m;
    std::int64_t radicand = 1;
    if (m[k4] == 0) return;
    radicand *= m[k4];
    --m[k4];
    if (m[k3] == 0) return;
    radicand *= m[k3];
    --m[k3];
    ++m[k2];
    radicand *= m[k2];
    ++m[k1];
    radicand *= m[k1];
    auto it = idx.find(m);
    if (it == idx.end()) return;  // leaves the momentum sector (cannot happen
                                  // for momentum-conserving terms)
    w(it->second, beta) += coeff * std::sqrt(static_cast<double>(radicand));
}

}  // namespace

std::vector<OccupationVector> enumerate_permanents(int d, int n_bosons, int p) {
    if (d < 1 || n_bosons < 0 || p < 0 || p >= d) {
        throw GdftError(ErrorKind::DimensionMismatch,
                        "invalid bosonic sector parameters");
    }
    std::vector<OccupationVector> all;
    std::vector<int> m(d, 0);
    enumerate_rec(d, 0, n_bosons, m, all);
    std::vector<OccupationVector> sector;
    for (OccupationVector& occ : all) {
        if (occ.momentum(d) == p) sector.push_back(std::move(occ));
    }
    return sector;
}

CMatrix hubbard_interaction(int d, int n_bosons, int p) {
    std::vector<OccupationVector> perms = enumerate_permanents(d, n_bosons, p);
    auto idx = index_map(perms);
    const int dim = static_cast<int>(perms.size());
    CMatrix w = CMatrix::Zero(dim, dim);
    for (int beta = 0; beta < dim; ++beta) {
        for (int k1 = 0; k1 < d; ++k1)
            for (int k2 = 0; k2 < d; ++k2)
                for (int k3 = 0; k3 < d; ++k3)
                    for (int k4 = 0; k4 < d; ++k4) {
                        if ((k1 + k2) % d != (k3 + k4) % d) continue;
                        apply_pair_term(w, perms, idx, beta, k1, k2, k3, k4,
                                        Complex(1.0 / d, 0.0));
                    }
    }
    return symmetrize_hermitian(w, 1e-9);
}

CMatrix interaction_from_tensor(int d, int n_bosons, int p,
                                const std::vector<Complex>& w_tensor) {
    if (static_cast<int>(w_tensor.size()) != d * d * d * d) {
        throw GdftError(ErrorKind::DimensionMismatch,
                        "interaction tensor must have d^4 entries");
    }
    std::vector<OccupationVector> perms = enumerate_permanents(d, n_bosons, p);
    auto idx = index_map(perms);
    const int dim = static_cast<int>(perms.size());
    CMatrix w = CMatrix::Zero(dim, dim);
    for (int beta = 0; beta < dim; ++beta) {
        for (int k1 = 0; k1 < d; ++k1)
            for (int k2 = 0; k2 < d; ++k2)
                for (int k3 = 0; k3 < d; ++k3)
                    for (int k4 = 0; k4 < d; ++k4) {
                        Complex c = w_tensor[((k1 * d + k2) * d + k3) * d + k4];
                        if (c == Complex(0.0, 0.0)) continue;
                        apply_pair_term(w, perms, idx, beta, k1, k2, k3, k4, c);
                    }
    }
    return symmetrize_hermitian(w, 1e-9);  // rejects non-Hermitian tensors
}

FunctionalTheoryModel build_bosonic_theory(int d, int n_bosons, int p,
                                           const CMatrix* interaction) {
    std::vector<OccupationVector> perms = enumerate_permanents(d, n_bosons, p);
    const int dim = static_cast<int>(perms.size());
    if (dim == 0) {
        throw GdftError(ErrorKind::DimensionMismatch,
                        "empty momentum sector");
    }
    std::vector<CMatrix> basis;
    std::vector<std::string> labels;
    for (int k = 0; k < d; ++k) {
        CMatrix nk = CMatrix::Zero(dim, dim);
        for (int i = 0; i < dim; ++i) nk(i, i) = perms[i].m[k];
        basis.push_back(std::move(nk));
        labels.push_back("n" + std::to_string(k));
    }
    CMatrix w = interaction ? *interaction : hubbard_interaction(d, n_bosons, p);
    return make_theory(basis, w, std::move(labels));
}

FunctionalFormModel functional_form(
    const Polytope& domain, const std::vector<OccupationVector>& perms) {
    FunctionalFormModel model;
    for (size_t j = 0; j < domain.facets.size(); ++j)
        model.constraints.push_back(facet_inequality(domain,
                                                     static_cast<int>(j)));
    // Deterministic row order matching the worked examples: descending
    // lexicographic in the inward normal.
    std::sort(model.constraints.begin(), model.constraints.end(),
              [](const FacetInequality& a, const FacetInequality& b) {
                  for (int i = 0; i < a.S.size(); ++i) {
                      if (std::abs(a.S(i) - b.S(i)) > 1e-12)
                          return a.S(i) > b.S(i);
                  }
                  return a.nu > b.nu;
              });
    const int nj = static_cast<int>(model.constraints.size());
    const int na = static_cast<int>(perms.size());
    model.T.resize(nj, na);
    for (int j = 0; j < nj; ++j) {
        const FacetInequality& f = model.constraints[j];
        for (int a = 0; a < na; ++a) {
            const std::vector<int>& m = perms[a].m;
            if (f.exact) {
                std::int64_t num = -f.int_nu;
                for (size_t i = 0; i < f.int_S.size(); ++i)
                    num += f.int_S[i] * m[i];
                model.T(j, a) =
                    static_cast<double>(num) / static_cast<double>(f.int_denom);
            } else {
                double v = -f.nu;
                for (int i = 0; i < f.S.size(); ++i) v += f.S(i) * m[i];
                model.T(j, a) = v;
            }
        }
    }
    model.T_plus = pseudo_inverse(model.T, 1e-10);
    model.kernel_basis = real_nullspace(model.T);
    return model;
}

double simplex_functional(const FunctionalTheoryModel& theory,
                          const Polytope& domain, const DensityVector& rho,
                          std::uint64_t seed) {
    const int nv = static_cast<int>(domain.vertices.size());
    const int np = static_cast<int>(domain.points.cols());
    if (nv != theory.hilbert_dim || np != nv || domain.dim != nv - 1) {
        throw GdftError(ErrorKind::NotSimplexSetting,
                        "domain is not a simplex with one weight per vertex "
                        "and per Hilbert dimension");
    }
    if (!polytope_contains(domain, rho, 1e-8)) {
        throw GdftError(ErrorKind::NotRepresentable,
                        "density lies outside the simplex domain");
    }
    WeightDecomposition wd = weight_decomposition(theory);
    if (static_cast<int>(wd.weights.size()) != nv) {
        throw GdftError(ErrorKind::NotSimplexSetting,
                        "weight multiplicities exceed one");
    }
    // Each facet of a simplex is opposite exactly one vertex; |c_beta|^2 =
    // D^(beta)(rho) / L_beta with L_beta = D^(beta)(m^(beta)).
    RVector amps = RVector::Zero(wd.hilbert_dim());
    for (int beta = 0; beta < np; ++beta) {
        int opposite = -1;
        for (size_t j = 0; j < domain.facets.size(); ++j) {
            const std::vector<int>& sup = domain.facets[j].support;
            if (std::find(sup.begin(), sup.end(), beta) == sup.end()) {
                opposite = static_cast<int>(j);
                break;
            }
        }
        if (opposite < 0) {
            throw GdftError(ErrorKind::NotSimplexSetting,
                            "no opposite facet found for a vertex");
        }
        FacetInequality f = facet_inequality(domain, opposite);
        double d_rho = f.S.dot(rho) - f.nu;
        double l_beta = f.S.dot(domain.points.col(beta)) - f.nu;
        if (l_beta <= 1e-12) {
            throw GdftError(ErrorKind::ZeroDenominator,
                            "degenerate opposite-facet height");
        }
        // Map the domain vertex to its weight-decomposition column.
        int col = -1;
        for (int i = 0; i < wd.hilbert_dim(); ++i) {
            if ((wd.weights[wd.weight_of_column[i]] - domain.points.col(beta))
                    .cwiseAbs()
                    .maxCoeff() <= 1e-8) {
                col = i;
                break;
            }
        }
        if (col < 0) {
            throw GdftError(ErrorKind::NotSimplexSetting,
                            "domain vertex is not a weight of the theory");
        }
        amps(col) = std::sqrt(std::max(d_rho / l_beta, 0.0));
    }
    CMatrix w_eff = symmetrize_hermitian(
        wd.basis.adjoint() * theory.interaction.entries * wd.basis, 1e-9);
    std::mt19937_64 rng = make_rng(seed, 7);
    return minimize_phases(w_eff, amps, rng, 16);
}

}  // namespace gdft
