#include "gdft/liegroup.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gdft/lp.hpp"

namespace gdft {

namespace {

CMatrix spin_jz(int n) {
    double j = (n - 1) / 2.0;
    CMatrix jz = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) jz(i, i) = j - i;
    return jz;
}

CMatrix spin_jplus(int n) {
    // Basis |i> with m = j - i; J+|i> = sqrt(i (n - i)) |i-1>.
    CMatrix jp = CMatrix::Zero(n, n);
    for (int i = 1; i < n; ++i)
        jp(i - 1, i) = std::sqrt(static_cast<double>(i) * (n - i));
    return jp;
}

CMatrix embed(const std::vector<int>& dims, int factor, const CMatrix& op) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (size_t f = 0; f < dims.size(); ++f) {
        out = kron(out, static_cast<int>(f) == factor
                            ? op
                            : CMatrix(CMatrix::Identity(dims[f], dims[f])));
    }
    return out;
}

// exp(-i t H) for Hermitian H.
CMatrix unitary_exp(const CMatrix& h, double t) {
    EigSystem eig = hermitian_eig(h);
    CVector phase(eig.values.size());
    for (int i = 0; i < eig.values.size(); ++i) {
        phase(i) = std::polar(1.0, -t * eig.values(i));
    }
    return eig.vectors * phase.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace

LieAlgebraData su2_product_algebra(const std::vector<int>& irrep_dims) {
    if (irrep_dims.empty()) {
        throw GdftError(ErrorKind::UnsupportedAlgebra,
                        "su(2) product needs at least one factor");
    }
    for (int n : irrep_dims) {
        if (n < 2) {
            throw GdftError(ErrorKind::UnsupportedAlgebra,
                            "su(2) irrep dimension must be at least 2");
        }
    }
    LieAlgebraData alg;
    const int nf = static_cast<int>(irrep_dims.size());
    alg.name = "su2_product";
    alg.hilbert_dim = 1;
    for (int n : irrep_dims) alg.hilbert_dim *= n;
    alg.chamber = RMatrix::Identity(nf, nf);
    for (int f = 0; f < nf; ++f) {
        int n = irrep_dims[f];
        alg.cartan.push_back(embed(irrep_dims, f, 2.0 * spin_jz(n)));
        RootData root;
        root.alpha = RVector::Zero(nf);
        root.alpha(f) = 2.0;
        root.raising = embed(irrep_dims, f, spin_jplus(n));
        root.lowering = root.raising.adjoint();
        root.x_gen = root.raising + root.lowering;
        root.y_gen = Complex(0, -1) * (root.raising - root.lowering);
        alg.positive_roots.push_back(std::move(root));
    }
    return alg;
}

LieAlgebraData su3_adjoint_algebra() {
    // Orthonormal basis of sl(3): the six elementary root vectors E_ij and
    // two normalized diagonal elements.
    std::vector<CMatrix> basis;
    auto eij = [](int i, int j) {
        CMatrix m = CMatrix::Zero(3, 3);
        m(i, j) = 1.0;
        return m;
    };
    basis.push_back(eij(0, 1));  // E12
    basis.push_back(eij(0, 2));  // E13
    basis.push_back(eij(1, 2));  // E23
    basis.push_back(eij(1, 0));  // E21
    basis.push_back(eij(2, 0));  // E31
    basis.push_back(eij(2, 1));  // E32
    CMatrix h1 = CMatrix::Zero(3, 3), h2 = CMatrix::Zero(3, 3);
    h1(0, 0) = 1.0 / std::sqrt(2.0);
    h1(1, 1) = -1.0 / std::sqrt(2.0);
    h2(0, 0) = 1.0 / std::sqrt(6.0);
    h2(1, 1) = 1.0 / std::sqrt(6.0);
    h2(2, 2) = -2.0 / std::sqrt(6.0);
    basis.push_back(h1);
    basis.push_back(h2);

    auto ad = [&](const CMatrix& m) {
        CMatrix rep(8, 8);
        for (int j = 0; j < 8; ++j) {
            CMatrix img = m * basis[j] - basis[j] * m;
            for (int i = 0; i < 8; ++i)
                rep(i, j) = (basis[i].adjoint() * img).trace();
        }
        return rep;
    };

    CMatrix z = CMatrix::Zero(3, 3), zp = CMatrix::Zero(3, 3);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    zp(1, 1) = 1.0;
    zp(2, 2) = -1.0;

    LieAlgebraData alg;
    alg.name = "su3_adjoint";
    alg.hilbert_dim = 8;
    alg.cartan.push_back(symmetrize_hermitian(ad(z), 1e-9));
    alg.cartan.push_back(symmetrize_hermitian(ad(zp), 1e-9));
    alg.chamber = RMatrix::Identity(2, 2);

    auto add_root = [&](double a1, double a2, const CMatrix& e_plus,
                        const CMatrix& e_minus) {
        RootData root;
        root.alpha = RVector(2);
        root.alpha << a1, a2;
        root.raising = ad(e_plus);
        root.lowering = ad(e_minus);
        root.x_gen = symmetrize_hermitian(root.raising + root.lowering, 1e-9);
        root.y_gen = symmetrize_hermitian(
            Complex(0, -1) * (root.raising - root.lowering), 1e-9);
        alg.positive_roots.push_back(std::move(root));
    };
    add_root(2, -1, eij(0, 1), eij(1, 0));
    add_root(-1, 2, eij(1, 2), eij(2, 1));
    add_root(1, 1, eij(0, 2), eij(2, 0));
    return alg;
}

WeightDecomposition rep_weights(const LieAlgebraData& alg) {
    try {
        std::vector<CMatrix> pots;
        for (const CMatrix& t : alg.cartan) pots.push_back(t);
        FunctionalTheoryModel tmp = make_theory(
            pots, CMatrix::Zero(alg.hilbert_dim, alg.hilbert_dim));
        return weight_decomposition(tmp);
    } catch (const GdftError& e) {
        if (e.kind() == ErrorKind::NotAbelian) {
            throw GdftError(ErrorKind::NotSimultaneouslyDiagonalizable,
                            "Cartan generators do not commute");
        }
        throw;
    }
}

namespace {

struct IntWeights {
    std::vector<IVector> distinct;  // integer distinct weights
    std::vector<IVector> per_column;
};

IntWeights integral_weights(const WeightDecomposition& wd) {
    IntWeights iw;
    for (const DensityVector& w : wd.weights) {
        IVector v(w.size());
        for (int i = 0; i < w.size(); ++i) {
            v[i] = std::llround(w(i));
            if (std::abs(w(i) - static_cast<double>(v[i])) > 1e-6) {
                throw GdftError(ErrorKind::Unsupported,
                                "Kirwan screening requires integral weights");
            }
        }
        iw.distinct.push_back(std::move(v));
    }
    for (int i = 0; i < wd.hilbert_dim(); ++i)
        iw.per_column.push_back(iw.distinct[wd.weight_of_column[i]]);
    return iw;
}

IVector integral_root(const RVector& alpha) {
    IVector v(alpha.size());
    for (int i = 0; i < alpha.size(); ++i) {
        v[i] = std::llround(alpha(i));
        if (std::abs(alpha(i) - static_cast<double>(v[i])) > 1e-6) {
            throw GdftError(ErrorKind::Unsupported,
                            "Kirwan screening requires integral roots");
        }
    }
    return v;
}

// Columns of H(s = c) and H(s < c) under the exact pairing.
struct SplitColumns {
    std::vector<int> equal;
    std::vector<int> below;
};

SplitColumns split_columns(const IntWeights& iw, const IVector& s,
                           std::int64_t c) {
    SplitColumns sc;
    for (size_t i = 0; i < iw.per_column.size(); ++i) {
        std::int64_t v = int_dot(iw.per_column[i], s);
        if (v == c) sc.equal.push_back(static_cast<int>(i));
        if (v < c) sc.below.push_back(static_cast<int>(i));
    }
    return sc;
}

// Generic rank of v -> P_{below} tau(v) psi over the selected lowering
// operators, at one random witness psi in H(s = c).
int witness_rank(const LieAlgebraData& alg, const WeightDecomposition& wd,
                 const SplitColumns& sc, const std::vector<int>& ops,
                 std::mt19937_64& rng) {
    CVector coeff = random_unit_vector(static_cast<int>(sc.equal.size()), rng);
    CVector psi = CVector::Zero(wd.hilbert_dim());
    for (size_t t = 0; t < sc.equal.size(); ++t)
        psi += coeff(static_cast<int>(t)) * wd.basis.col(sc.equal[t]);
    CMatrix m(static_cast<int>(sc.below.size()), static_cast<int>(ops.size()));
    for (size_t j = 0; j < ops.size(); ++j) {
        CVector img = alg.positive_roots[ops[j]].lowering * psi;
        CVector comps = wd.basis.adjoint() * img;
        for (size_t i = 0; i < sc.below.size(); ++i)
            m(static_cast<int>(i), static_cast<int>(j)) = comps(sc.below[i]);
    }
    return numerical_rank(m, 1e-9);
}

bool same_hyperplane(const RVector& n1, double c1, const RVector& n2,
                     double c2) {
    RVector u1 = n1 / n1.norm();
    double d1 = c1 / n1.norm();
    RVector u2 = n2 / n2.norm();
    double d2 = c2 / n2.norm();
    return ((u1 - u2).cwiseAbs().maxCoeff() <= 1e-9 &&
            std::abs(d1 - d2) <= 1e-9) ||
           ((u1 + u2).cwiseAbs().maxCoeff() <= 1e-9 &&
            std::abs(d1 + d2) <= 1e-9);
}

}  // namespace

KirwanResult kirwan_polytope(const LieAlgebraData& alg, std::uint64_t seed) {
    WeightDecomposition wd = rep_weights(alg);
    IntWeights iw = integral_weights(wd);
    const int k = static_cast<int>(alg.cartan.size());
    const int nw = static_cast<int>(iw.distinct.size());

    // Full-dimensionality of Lambda: weights plus momentum images of random
    // superpositions must affinely span t*.
    {
        std::mt19937_64 rng = make_rng(seed, 999);
        std::vector<RVector> pts;
        for (const DensityVector& w : wd.weights) pts.push_back(w);
        for (int t = 0; t < 60; ++t) {
            CVector psi = random_unit_vector(alg.hilbert_dim, rng);
            RVector rho(k);
            for (int a = 0; a < k; ++a)
                rho(a) = psi.dot(alg.cartan[a] * psi).real();
            pts.push_back(std::move(rho));
        }
        RMatrix dirs(static_cast<int>(pts.size()) - 1, k);
        for (size_t i = 1; i < pts.size(); ++i)
            dirs.row(static_cast<int>(i) - 1) = (pts[i] - pts[0]).transpose();
        if (numerical_rank(dirs) < k) {
            throw GdftError(ErrorKind::NotFullDimensional,
                            "momentum image is not full-dimensional");
        }
    }

    // Candidate hyperplanes: affine hulls of weight subsets of size dim t*.
    std::set<std::pair<IVector, std::int64_t>> hyperplanes;
    if (binomial_capped(nw, k, 2'000'000) >= 2'000'000) {
        throw GdftError(ErrorKind::Unsupported,
                        "candidate enumeration exceeds the subset budget");
    }
    std::vector<int> sub(k);
    for (int i = 0; i < k; ++i) sub[i] = i;
    while (true) {
        IMatrix dirs;
        for (int t = 1; t < k; ++t) {
            IVector d(k);
            for (int c = 0; c < k; ++c)
                d[c] = iw.distinct[sub[t]][c] - iw.distinct[sub[0]][c];
            dirs.push_back(std::move(d));
        }
        IMatrix ns = int_nullspace(dirs, k);
        if (ns.size() == 1) {
            IVector n = ns[0];  // primitive, first nonzero positive
            hyperplanes.emplace(n, int_dot(n, iw.distinct[sub[0]]));
        }
        int i = k - 1;
        while (i >= 0 && sub[i] == nw - k + i) --i;
        if (i < 0) break;
        ++sub[i];
        for (int j = i + 1; j < k; ++j) sub[j] = sub[j - 1] + 1;
    }

    std::vector<IVector> iroots;
    for (const RootData& r : alg.positive_roots)
        iroots.push_back(integral_root(r.alpha));

    KirwanResult result;
    std::vector<KirwanCandidate> screened;
    for (const auto& [n, c0] : hyperplanes) {
        for (int orient = 0; orient < 2; ++orient) {
            KirwanCandidate cand;
            cand.s = n;
            cand.c = c0;
            if (orient == 1) {
                for (auto& x : cand.s) x = -x;
                cand.c = -cand.c;
            }
            SplitColumns sc = split_columns(iw, cand.s, cand.c);
            cand.dim_h_below = static_cast<int>(sc.below.size());
            std::vector<int> ops;
            for (size_t r = 0; r < iroots.size(); ++r) {
                if (int_dot(iroots[r], cand.s) > 0)
                    ops.push_back(static_cast<int>(r));
            }
            cand.dim_n_minus = static_cast<int>(ops.size());
            if (cand.dim_n_minus != cand.dim_h_below) {
                cand.reason = "dimension mismatch";
                result.rejected.push_back(std::move(cand));
                continue;
            }
            if (cand.dim_n_minus == 0) {
                cand.witness_rank = 0;
                cand.accepted = true;
            } else {
                int n_witnesses = 8;
                for (int round = 0; round < 3; ++round) {
                    std::mt19937_64 rng = make_rng(
                        seed, 17 + 1000 * round +
                                  std::hash<std::string>{}(alg.name) % 101);
                    std::vector<int> ranks;
                    for (int w = 0; w < n_witnesses; ++w)
                        ranks.push_back(witness_rank(alg, wd, sc, ops, rng));
                    if (std::all_of(ranks.begin(), ranks.end(),
                                    [&](int r) { return r == ranks[0]; })) {
                        cand.witness_rank = ranks[0];
                        break;
                    }
                    // Zariski-openness: the generic rank is the maximum seen.
                    cand.witness_rank =
                        *std::max_element(ranks.begin(), ranks.end());
                    n_witnesses *= 2;
                }
                cand.accepted = cand.witness_rank == cand.dim_n_minus;
                if (!cand.accepted) cand.reason = "witness map not onto";
            }
            if (cand.accepted) {
                screened.push_back(std::move(cand));
            } else {
                result.rejected.push_back(std::move(cand));
            }
        }
    }
    if (screened.empty()) {
        throw GdftError(ErrorKind::NoCandidates,
                        "no candidate hyperplane passed the screening");
    }

    // Intersect accepted half-spaces <x,s> >= c with the chamber.
    const int nh = static_cast<int>(screened.size());
    const int ncw = static_cast<int>(alg.chamber.rows());
    RMatrix a(nh + ncw, k);
    RVector b(nh + ncw);
    for (int i = 0; i < nh; ++i) {
        for (int j = 0; j < k; ++j)
            a(i, j) = -static_cast<double>(screened[i].s[j]);
        b(i) = -static_cast<double>(screened[i].c);
    }
    a.bottomRows(ncw) = -alg.chamber;
    b.tail(ncw).setZero();
    RMatrix verts = halfspace_vertices(a, b);
    if (verts.cols() == 0) {
        throw GdftError(ErrorKind::NoCandidates,
                        "accepted half-spaces have empty intersection");
    }
    result.polytope = build_polytope(verts);

    // Redundancy pass: walk the screened inequalities from the simplest
    // normal upward and drop any that is already implied by the chamber plus
    // the previously kept ones (an inequality <x,s> >= c is implied when the
    // LP minimum of <s,x> over that polyhedron is >= c).
    std::sort(screened.begin(), screened.end(),
              [](const KirwanCandidate& x, const KirwanCandidate& y) {
                  auto norm2 = [](const IVector& v) {
                      std::int64_t n = 0;
                      for (auto e : v) n += e * e;
                      return n;
                  };
                  std::int64_t nx = norm2(x.s), ny = norm2(y.s);
                  if (nx != ny) return nx < ny;
                  if (x.s != y.s) return x.s < y.s;
                  return x.c < y.c;
              });
    std::vector<std::pair<RVector, double>> kept;  // rows <r,x> >= d
    for (int e = 0; e < ncw; ++e)
        kept.emplace_back(alg.chamber.row(e).transpose(), 0.0);
    for (KirwanCandidate& cand : screened) {
        RVector s(k);
        for (int j = 0; j < k; ++j) s(j) = static_cast<double>(cand.s[j]);
        double c = static_cast<double>(cand.c);
        // min <s,x> s.t. kept rows; x free (x = u - w), slacks t >= 0
        const int m = static_cast<int>(kept.size());
        RMatrix lp_a(m, 2 * k + m);
        RVector lp_b(m), lp_c = RVector::Zero(2 * k + m);
        lp_a.setZero();
        for (int i = 0; i < m; ++i) {
            lp_a.block(i, 0, 1, k) = kept[i].first.transpose();
            lp_a.block(i, k, 1, k) = -kept[i].first.transpose();
            lp_a(i, 2 * k + i) = -1.0;
            lp_b(i) = kept[i].second;
        }
        lp_c.head(k) = s;
        lp_c.segment(k, k) = -s;
        LpResult lr = solve_lp(lp_a, lp_b, lp_c);
        bool implied =
            lr.status == LpResult::Status::Optimal && lr.value >= c - 1e-9;
        if (implied) {
            cand.reason = "implied by the chamber and prior inequalities";
            cand.accepted = false;
            result.rejected.push_back(std::move(cand));
        } else {
            kept.emplace_back(s, c);
            result.accepted.push_back(std::move(cand));
        }
    }
    std::sort(result.accepted.begin(), result.accepted.end(),
              [](const KirwanCandidate& x, const KirwanCandidate& y) {
                  if (x.s != y.s) return x.s < y.s;
                  return x.c < y.c;
              });
    if (result.accepted.empty()) {
        throw GdftError(ErrorKind::NoCandidates,
                        "screening left no reportable inequality");
    }
    return result;
}

std::vector<ClassifiedFacet> classify_facets(const LieAlgebraData& alg,
                                             const KirwanResult& kirwan,
                                             const WeightDecomposition& wd) {
    Polytope hull = representable_polytope(wd);
    std::vector<ClassifiedFacet> out;
    for (const Facet& f : kirwan.polytope.facets) {
        ClassifiedFacet cf;
        cf.s = -f.normal;
        cf.c = -f.offset;
        double nrm = cf.s.norm();
        cf.s /= nrm;
        cf.c /= nrm;
        bool trivial = false;
        for (int r = 0; r < alg.chamber.rows(); ++r) {
            RVector e = alg.chamber.row(r).transpose();
            if (same_hyperplane(cf.s, cf.c, e, 0.0)) {
                trivial = true;
                break;
            }
        }
        if (trivial) {
            cf.cls = FacetClass::Trivial;
        } else {
            bool nice = false;
            for (const Facet& hf : hull.facets) {
                if (same_hyperplane(cf.s, cf.c, hf.normal, hf.offset)) {
                    nice = true;
                    break;
                }
            }
            cf.cls = nice ? FacetClass::Nice : FacetClass::Other;
        }
        out.push_back(std::move(cf));
    }
    return out;
}

NonabelianFacetTheory facet_theory_nonabelian(
    const LieAlgebraData& alg, const FunctionalTheoryModel& theory,
    const RVector& s, double c, double tol) {
    WeightDecomposition wd = rep_weights(alg);
    NonabelianFacetTheory out;
    out.s = s;
    out.c = c;
    for (int i = 0; i < wd.hilbert_dim(); ++i) {
        if (std::abs(s.dot(wd.weights[wd.weight_of_column[i]]) - c) <= tol)
            out.columns.push_back(i);
    }
    if (out.columns.empty()) {
        throw GdftError(ErrorKind::NotNiceFacet,
                        "no weight space lies on the facet hyperplane");
    }
    out.isometry.resize(wd.hilbert_dim(),
                        static_cast<int>(out.columns.size()));
    for (size_t t = 0; t < out.columns.size(); ++t)
        out.isometry.col(static_cast<int>(t)) = wd.basis.col(out.columns[t]);

    out.model.hilbert_dim = static_cast<int>(out.columns.size());
    for (const HermitianOperator& b : theory.potential_basis) {
        out.model.potential_basis.push_back(HermitianOperator{
            symmetrize_hermitian(out.isometry.adjoint() * b.entries *
                                     out.isometry, 1e-9)});
    }
    out.model.interaction = HermitianOperator{symmetrize_hermitian(
        out.isometry.adjoint() * theory.interaction.entries * out.isometry,
        1e-9)};
    out.model.labels = theory.labels;

    for (const RootData& r : alg.positive_roots) {
        if (std::abs(r.alpha.dot(s)) > tol) {
            out.g_nonparallel.push_back(r.x_gen);
            out.g_nonparallel.push_back(r.y_gen);
        } else {
            out.g_parallel.push_back(r.x_gen);
            out.g_parallel.push_back(r.y_gen);
        }
    }
    return out;
}

SelectionRuleReport selection_rule_check(const LieAlgebraData& alg,
                                         const FunctionalTheoryModel& theory,
                                         const RVector& s, double c,
                                         const QuantumState& psi,
                                         double tol) {
    DensityVector rho(static_cast<int>(alg.cartan.size()));
    CVector amps = psi.kind == QuantumState::Kind::Pure
                       ? psi.amplitudes
                       : CVector();
    if (psi.kind != QuantumState::Kind::Pure) {
        throw GdftError(ErrorKind::NotRepresentable,
                        "selection rule check requires a pure state");
    }
    for (size_t a = 0; a < alg.cartan.size(); ++a)
        rho(static_cast<int>(a)) = amps.dot(alg.cartan[a] * amps).real();
    if (std::abs(s.dot(rho) - c) > tol) {
        throw GdftError(ErrorKind::NotOnFacet,
                        "state density does not lie on the facet");
    }
    CMatrix t_s = CMatrix::Zero(alg.hilbert_dim, alg.hilbert_dim);
    for (size_t a = 0; a < alg.cartan.size(); ++a) t_s += s(a) * alg.cartan[a];
    SelectionRuleReport report;
    report.residual = ((t_s - c * CMatrix::Identity(alg.hilbert_dim,
                                                    alg.hilbert_dim)) *
                       amps)
                          .norm();
    report.pass = report.residual <= 1e-7;
    (void)theory;
    return report;
}

FunctionalTheoryModel dimer_theory(int n_bosons, double theta) {
    if (n_bosons < 1) {
        throw GdftError(ErrorKind::DimensionMismatch,
                        "dimer needs at least one boson");
    }
    const int n = n_bosons + 1;
    CMatrix t = 2.0 * spin_jz(n);
    CMatrix jp = spin_jplus(n);
    CMatrix y = Complex(0, -1) * (jp - jp.adjoint().eval());
    // Site-occupation interaction diag((N-k)^2 + k^2) in the weight basis
    // (index i holds k = i bosons on the second site), rotated by theta.
    CMatrix d = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        double k = i;
        d(i, i) = (n_bosons - k) * (n_bosons - k) + k * k;
    }
    CMatrix u = unitary_exp(y, theta / 2.0);
    CMatrix w = symmetrize_hermitian(u * d * u.adjoint(), 1e-9);
    return make_theory({t}, w, {"z"});
}

LieAlgebraData dimer_algebra(int n_bosons) {
    return su2_product_algebra({n_bosons + 1});
}

FunctionalTheoryModel two_three_theory(double u1, double u2, double u3,
                                       double k1, double k3) {
    // Index 3a + b: a = 0,1 for z = +1,-1; b = 0,1,2 for z' = 2,0,-2.
    CMatrix t1 = CMatrix::Zero(6, 6), t2 = CMatrix::Zero(6, 6);
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 3; ++b) {
            t1(3 * a + b, 3 * a + b) = a == 0 ? 1.0 : -1.0;
            t2(3 * a + b, 3 * a + b) = 2.0 - 2.0 * b;
        }
    }
    CMatrix w = CMatrix::Zero(6, 6);
    w(0, 3) = u1;  // <1,2|W|-1,2>
    w(1, 4) = u2;  // <1,0|W|-1,0>
    w(2, 5) = u3;  // <1,-2|W|-1,-2>
    w(0, 0) = k1;
    w(2, 2) = k3;
    w(0, 1) = 1.0;  // <1,2|W|1,0>
    w(1, 2) = 1.0;  // <1,0|W|1,-2>
    w = (w + w.adjoint().eval()) -
        CMatrix(w.diagonal().asDiagonal());  // Hermitian completion
    return make_theory({t1, t2}, w, {"z1", "z2"});
}

FunctionalTheoryModel momentum_theory(const LieAlgebraData& alg,
                                      const FunctionalTheoryModel& theory) {
    std::vector<CMatrix> pots;
    std::vector<std::string> labels;
    for (size_t a = 0; a < alg.cartan.size(); ++a) {
        pots.push_back(alg.cartan[a]);
        labels.push_back("T" + std::to_string(a + 1));
    }
    for (size_t r = 0; r < alg.positive_roots.size(); ++r) {
        pots.push_back(alg.positive_roots[r].x_gen);
        labels.push_back("X" + std::to_string(r + 1));
        pots.push_back(alg.positive_roots[r].y_gen);
        labels.push_back("Y" + std::to_string(r + 1));
    }
    return make_theory(pots, theory.interaction.entries, labels);
}

DensityVector momentum_density(const LieAlgebraData& alg,
                               const DensityVector& rho) {
    DensityVector out = DensityVector::Zero(
        static_cast<Eigen::Index>(alg.cartan.size()) +
        2 * static_cast<Eigen::Index>(alg.positive_roots.size()));
    out.head(rho.size()) = rho;
    return out;
}

}  // namespace gdft
