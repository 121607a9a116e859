#include "gdft/abelian.hpp"

#include <algorithm>
#include <cmath>

#include "gdft/lp.hpp"

namespace gdft {

RMatrix WeightDecomposition::column_weights() const {
    RMatrix w(potential_dim(), hilbert_dim());
    for (int i = 0; i < hilbert_dim(); ++i)
        w.col(i) = weights[weight_of_column[i]];
    return w;
}

WeightDecomposition weight_decomposition(const FunctionalTheoryModel& theory,
                                         double tol) {
    const int n = theory.hilbert_dim;
    const int k = theory.potential_dim();
    double scale = 1.0;
    for (const HermitianOperator& op : theory.potential_basis) {
        if (op.dim() > 0)
            scale = std::max(scale, op.entries.cwiseAbs().maxCoeff());
    }
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            const CMatrix& x = theory.potential_basis[a].entries;
            const CMatrix& y = theory.potential_basis[b].entries;
            if ((x * y - y * x).cwiseAbs().maxCoeff() > tol * scale * scale) {
                throw GdftError(ErrorKind::NotAbelian,
                                "potential images do not commute");
            }
        }
    }

    // Sequential block diagonalization: refine common eigenblocks one
    // potential at a time.
    CMatrix u = CMatrix::Identity(n, n);
    std::vector<std::pair<int, int>> blocks = {{0, n}};  // [begin, end)
    for (int a = 0; a < k; ++a) {
        std::vector<std::pair<int, int>> refined;
        for (auto [lo, hi] : blocks) {
            int w = hi - lo;
            CMatrix ub = u.middleCols(lo, w);
            CMatrix compressed = ub.adjoint() *
                                 theory.potential_basis[a].entries * ub;
            EigSystem eig = hermitian_eig(symmetrize_hermitian(compressed,
                                                               1e-9));
            u.middleCols(lo, w) = ub * eig.vectors;
            int start = lo;
            for (int i = 1; i < w; ++i) {
                if (eig.values(i) - eig.values(i - 1) > 1e-8 * scale) {
                    refined.emplace_back(start, lo + i);
                    start = lo + i;
                }
            }
            refined.emplace_back(start, hi);
        }
        blocks = std::move(refined);
    }

    WeightDecomposition wd;
    wd.basis = u;
    // Weight of each column: diagonal expectation values.
    std::vector<RVector> col_weights(n);
    for (int i = 0; i < n; ++i) {
        RVector w(k);
        for (int a = 0; a < k; ++a) {
            w(a) = (u.col(i).adjoint() * theory.potential_basis[a].entries *
                    u.col(i))(0).real();
        }
        col_weights[i] = std::move(w);
    }
    // Deduplicate across all columns.
    wd.weight_of_column.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (size_t j = 0; j < wd.weights.size(); ++j) {
            RVector diff = col_weights[i] - wd.weights[j];
            if (k == 0 || diff.cwiseAbs().maxCoeff() <= 1e-8 * scale) {
                wd.weight_of_column[i] = static_cast<int>(j);
                break;
            }
        }
        if (wd.weight_of_column[i] < 0) {
            wd.weight_of_column[i] = static_cast<int>(wd.weights.size());
            wd.weights.push_back(col_weights[i]);
        }
    }
    for (size_t j = 0; j < wd.weights.size(); ++j) {
        CMatrix p = CMatrix::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            if (wd.weight_of_column[i] == static_cast<int>(j))
                p += u.col(i) * u.col(i).adjoint();
        }
        wd.projectors.push_back(std::move(p));
    }
    return wd;
}

Polytope representable_polytope(const WeightDecomposition& wd) {
    if (wd.weights.empty()) {
        throw GdftError(ErrorKind::DegeneratePolytope,
                        "weight decomposition carries no weights");
    }
    const int k = wd.potential_dim();
    RMatrix pts(k, static_cast<int>(wd.weights.size()));
    for (size_t j = 0; j < wd.weights.size(); ++j)
        pts.col(static_cast<int>(j)) = wd.weights[j];
    return build_polytope(pts);
}

FacetInequality facet_inequality(const Polytope& poly, int facet_index) {
    if (facet_index < 0 ||
        facet_index >= static_cast<int>(poly.facets.size())) {
        throw GdftError(ErrorKind::EmptyFacet, "facet index out of range");
    }
    const Facet& f = poly.facets[facet_index];
    FacetInequality out;
    // Inward direction: the polytope stores <n, x> <= c, so S points along -n
    // after projection onto the affine hull's tangent space.
    RVector s = -f.normal;
    if (poly.tangent.cols() > 0)
        s = poly.tangent * (poly.tangent.transpose() * s).eval();
    double nrm = s.norm();
    if (nrm <= 1e-12) {
        throw GdftError(ErrorKind::EmptyFacet,
                        "facet normal vanishes after tangent projection");
    }
    out.S = s / nrm;
    // Offset from any supporting point.
    out.nu = out.S.dot(poly.points.col(f.support.front()));
    out.normalized = true;

    if (f.exact) {
        out.exact = true;
        // Lattice-primitive integer form: divide the primitive inward normal
        // by the gcd of its pairings with a basis of the saturated tangent
        // lattice, so D is integer-valued with unit content on lattice points.
        IVector s_int(f.int_normal.size());
        for (size_t i = 0; i < f.int_normal.size(); ++i)
            s_int[i] = -f.int_normal[i];
        std::int64_t nu_int = -f.int_offset;
        const int d = static_cast<int>(s_int.size());
        const int npts = static_cast<int>(poly.points.cols());
        IMatrix dirs;
        for (int j = 1; j < npts; ++j) {
            IVector dir(d);
            for (int i = 0; i < d; ++i)
                dir[i] = std::llround(poly.points(i, j) - poly.points(i, 0));
            dirs.push_back(std::move(dir));
        }
        IMatrix kernel = int_nullspace(dirs, d);
        IMatrix tangent_basis = int_nullspace(kernel, d);
        // Divide by the content of the pairings with the saturated tangent
        // lattice so D takes coprime integer values on lattice hull points
        // (the divided functional need not be an integer covector, hence the
        // explicit denominator).
        std::int64_t g = 0;
        for (const IVector& t : tangent_basis)
            g = int_gcd(g, int_dot(s_int, t));
        out.int_S = std::move(s_int);
        out.int_nu = nu_int;
        out.int_denom = std::max<std::int64_t>(g, 1);
    }
    return out;
}

FacetTheory facet_theory(const FunctionalTheoryModel& theory,
                         const WeightDecomposition& wd,
                         const FacetInequality& facet, double tol) {
    FacetTheory out;
    out.inequality = facet;
    double scale = 1.0;
    for (const DensityVector& w : wd.weights)
        if (w.size()) scale = std::max(scale, w.cwiseAbs().maxCoeff());
    for (size_t j = 0; j < wd.weights.size(); ++j) {
        if (std::abs(facet.S.dot(wd.weights[j]) - facet.nu) <= tol * scale)
            out.on_facet.push_back(static_cast<int>(j));
    }
    if (out.on_facet.empty()) {
        throw GdftError(ErrorKind::EmptyFacet,
                        "no weights lie on the facet hyperplane");
    }
    for (int i = 0; i < wd.hilbert_dim(); ++i) {
        if (std::find(out.on_facet.begin(), out.on_facet.end(),
                      wd.weight_of_column[i]) != out.on_facet.end())
            out.columns.push_back(i);
    }
    CMatrix v(wd.hilbert_dim(), static_cast<int>(out.columns.size()));
    for (size_t c = 0; c < out.columns.size(); ++c)
        v.col(static_cast<int>(c)) = wd.basis.col(out.columns[c]);

    // Compressed potentials may become linearly dependent on the facet, so
    // the restricted model is assembled directly.
    out.model.hilbert_dim = static_cast<int>(out.columns.size());
    for (const HermitianOperator& b : theory.potential_basis) {
        out.model.potential_basis.push_back(
            HermitianOperator{symmetrize_hermitian(
                v.adjoint() * b.entries * v, 1e-9)});
    }
    out.model.interaction = HermitianOperator{symmetrize_hermitian(
        v.adjoint() * theory.interaction.entries * v, 1e-9)};
    out.model.labels = theory.labels;
    return out;
}

bool is_critical_value(const WeightDecomposition& wd, const DensityVector& rho,
                       double tol) {
    const int nw = static_cast<int>(wd.weights.size());
    RMatrix pts(wd.potential_dim(), nw);
    for (int j = 0; j < nw; ++j) pts.col(j) = wd.weights[j];
    if (!in_convex_hull(pts, rho, tol)) {
        throw GdftError(ErrorKind::NotRepresentable,
                        "density lies outside the convex hull of weights");
    }
    // Affine dimension of conv(Omega).
    RMatrix dirs(std::max(nw - 1, 0), wd.potential_dim());
    for (int j = 1; j < nw; ++j)
        dirs.row(j - 1) = (pts.col(j) - pts.col(0)).transpose();
    int d = numerical_rank(dirs);
    int r = std::min(d, nw);
    if (r == nw) return true;  // rho is in the hull of all (= at most d) weights
    if (binomial_capped(nw, r, 1'000'000) >= 1'000'000) {
        throw GdftError(ErrorKind::Unsupported,
                        "critical-value subset enumeration exceeds budget");
    }
    std::vector<int> sub(r);
    for (int i = 0; i < r; ++i) sub[i] = i;
    while (true) {
        RMatrix subset(wd.potential_dim(), r);
        for (int i = 0; i < r; ++i) subset.col(i) = pts.col(sub[i]);
        if (in_convex_hull(subset, rho, tol)) return true;
        // next r-subset
        int i = r - 1;
        while (i >= 0 && sub[i] == nw - r + i) --i;
        if (i < 0) break;
        ++sub[i];
        for (int j = i + 1; j < r; ++j) sub[j] = sub[j - 1] + 1;
    }
    return false;
}

ClassicalState classical_fiber_point(const WeightDecomposition& wd,
                                     const DensityVector& rho) {
    const int n = wd.hilbert_dim();
    const int k = wd.potential_dim();
    RMatrix constraints(k + 1, n);
    constraints.topRows(k) = wd.column_weights();
    constraints.row(k).setOnes();
    RVector rhs(k + 1);
    rhs.head(k) = rho;
    rhs(k) = 1.0;
    ClassicalState state;
    state.y = max_min_point(constraints, rhs);
    return state;
}

DensityVector classical_density(const WeightDecomposition& wd,
                                const ClassicalState& y) {
    return wd.column_weights() * y.y;
}

}  // namespace gdft
