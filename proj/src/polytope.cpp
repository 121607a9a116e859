#include "gdft/polytope.hpp"

#include <algorithm>
#include <cmath>

#include "gdft/lp.hpp"

namespace gdft {

namespace {

constexpr std::int64_t kSubsetCap = 2'000'000;

bool is_integral_matrix(const RMatrix& points, double tol) {
    for (int j = 0; j < points.cols(); ++j) {
        for (int i = 0; i < points.rows(); ++i) {
            double v = points(i, j);
            if (std::abs(v) > 1e15) return false;
            if (std::abs(v - std::llround(v)) > tol) return false;
        }
    }
    return true;
}

// Advances `idx` to the next k-subset of {0..n-1}; false when exhausted.
bool next_subset(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

struct ExactContext {
    std::vector<IVector> ipoints;
    IMatrix kernel;  // integer basis of the orthogonal complement of the hull
};

// Integer facet candidate through the points indexed by `sub`: the primitive
// normal tangent to the affine hull and orthogonal to the in-facet directions.
bool exact_candidate(const ExactContext& ctx, const std::vector<int>& sub,
                     IVector* normal, std::int64_t* offset) {
    const int d = static_cast<int>(ctx.ipoints[0].size());
    IMatrix rows = ctx.kernel;
    for (size_t t = 1; t < sub.size(); ++t) {
        IVector dir(d);
        for (int c = 0; c < d; ++c)
            dir[c] = ctx.ipoints[sub[t]][c] - ctx.ipoints[sub[0]][c];
        rows.push_back(std::move(dir));
    }
    IMatrix ns = int_nullspace(rows, d);
    if (ns.size() != 1) return false;
    *normal = ns[0];
    *offset = int_dot(*normal, ctx.ipoints[sub[0]]);
    return true;
}

int exact_affine_rank(const std::vector<IVector>& pts,
                      const std::vector<int>& idx) {
    if (idx.size() <= 1) return 0;
    const int d = static_cast<int>(pts[0].size());
    IMatrix dirs;
    for (size_t t = 1; t < idx.size(); ++t) {
        IVector dir(d);
        for (int c = 0; c < d; ++c) dir[c] = pts[idx[t]][c] - pts[idx[0]][c];
        dirs.push_back(std::move(dir));
    }
    return int_rank(dirs);
}

int float_affine_rank(const RMatrix& points, const std::vector<int>& idx) {
    if (idx.size() <= 1) return 0;
    RMatrix dirs(static_cast<int>(idx.size()) - 1, points.rows());
    for (size_t t = 1; t < idx.size(); ++t)
        dirs.row(static_cast<int>(t) - 1) =
            (points.col(idx[t]) - points.col(idx[0])).transpose();
    return numerical_rank(dirs);
}

}  // namespace

std::int64_t binomial_capped(int n, int k, std::int64_t cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r >= cap) return cap;
    }
    return r;
}

Polytope build_polytope(const RMatrix& points_in, double tol) {
    if (points_in.cols() == 0) {
        throw GdftError(ErrorKind::DegeneratePolytope,
                        "cannot build a polytope from an empty point set");
    }
    Polytope poly;
    poly.ambient_dim = static_cast<int>(points_in.rows());

    // Deduplicate.
    std::vector<int> keep;
    for (int j = 0; j < points_in.cols(); ++j) {
        bool dup = false;
        for (int i : keep) {
            if ((points_in.col(j) - points_in.col(i)).cwiseAbs().maxCoeff() <=
                tol) {
                dup = true;
                break;
            }
        }
        if (!dup) keep.push_back(j);
    }
    poly.points.resize(poly.ambient_dim, static_cast<int>(keep.size()));
    for (size_t j = 0; j < keep.size(); ++j)
        poly.points.col(static_cast<int>(j)) = points_in.col(keep[j]);
    const int npts = static_cast<int>(poly.points.cols());

    poly.integral = is_integral_matrix(poly.points, tol);
    poly.centroid = poly.points.rowwise().mean();
    std::vector<RVector> dirs;
    for (int j = 0; j < npts; ++j)
        dirs.push_back(poly.points.col(j) - poly.centroid);
    poly.tangent = orthonormal_span(dirs);
    poly.dim = static_cast<int>(poly.tangent.cols());

    // Vertices: a point is extreme iff it is outside the hull of the others.
    for (int j = 0; j < npts; ++j) {
        if (npts == 1) {
            poly.vertices.push_back(j);
            continue;
        }
        RMatrix others(poly.ambient_dim, npts - 1);
        int c = 0;
        for (int i = 0; i < npts; ++i)
            if (i != j) others.col(c++) = poly.points.col(i);
        if (!in_convex_hull(others, poly.points.col(j), tol))
            poly.vertices.push_back(j);
    }

    if (poly.dim == 0) return poly;  // a point has no facets

    const int r = poly.dim;
    if (binomial_capped(npts, r, kSubsetCap) >= kSubsetCap) {
        throw GdftError(ErrorKind::Unsupported,
                        "facet enumeration exceeds the subset budget");
    }

    ExactContext ctx;
    RMatrix float_kernel;  // columns
    if (poly.integral) {
        for (int j = 0; j < npts; ++j) {
            IVector p(poly.ambient_dim);
            for (int i = 0; i < poly.ambient_dim; ++i)
                p[i] = std::llround(poly.points(i, j));
            ctx.ipoints.push_back(std::move(p));
        }
        IMatrix all_dirs;
        for (int j = 1; j < npts; ++j) {
            IVector dir(poly.ambient_dim);
            for (int i = 0; i < poly.ambient_dim; ++i)
                dir[i] = ctx.ipoints[j][i] - ctx.ipoints[0][i];
            all_dirs.push_back(std::move(dir));
        }
        ctx.kernel = int_nullspace(all_dirs, poly.ambient_dim);
    } else {
        RMatrix dmat(npts - 1, poly.ambient_dim);
        for (int j = 1; j < npts; ++j)
            dmat.row(j - 1) =
                (poly.points.col(j) - poly.points.col(0)).transpose();
        float_kernel = real_nullspace(dmat);
    }

    double scale = std::max(1.0, poly.points.cwiseAbs().maxCoeff());
    std::vector<int> sub(r);
    for (int i = 0; i < r; ++i) sub[i] = i;
    do {
        RVector normal;
        double offset = 0.0;
        IVector inormal;
        std::int64_t ioffset = 0;
        if (poly.integral) {
            if (!exact_candidate(ctx, sub, &inormal, &ioffset)) continue;
            normal.resize(poly.ambient_dim);
            for (int i = 0; i < poly.ambient_dim; ++i)
                normal(i) = static_cast<double>(inormal[i]);
            offset = static_cast<double>(ioffset);
        } else {
            RMatrix rows(r - 1 + static_cast<int>(float_kernel.cols()),
                         poly.ambient_dim);
            for (int t = 1; t < r; ++t)
                rows.row(t - 1) =
                    (poly.points.col(sub[t]) - poly.points.col(sub[0]))
                        .transpose();
            rows.bottomRows(float_kernel.cols()) = float_kernel.transpose();
            RMatrix ns = real_nullspace(rows);
            if (ns.cols() != 1) continue;
            normal = ns.col(0);
            offset = normal.dot(poly.points.col(sub[0]));
        }

        // Side test, flipping orientation so the inequality reads <=.
        bool all_le = true, all_ge = true;
        for (int j = 0; j < npts; ++j) {
            double s = normal.dot(poly.points.col(j)) - offset;
            if (s > tol * scale) all_le = false;
            if (s < -tol * scale) all_ge = false;
        }
        if (!all_le && !all_ge) continue;
        if (!all_le) {
            normal = -normal;
            offset = -offset;
            for (auto& x : inormal) x = -x;
            ioffset = -ioffset;
        }

        std::vector<int> support;
        for (int j = 0; j < npts; ++j) {
            if (poly.integral) {
                if (int_dot(inormal, ctx.ipoints[j]) == ioffset)
                    support.push_back(j);
            } else if (std::abs(normal.dot(poly.points.col(j)) - offset) <=
                       tol * scale) {
                support.push_back(j);
            }
        }
        int srank = poly.integral ? exact_affine_rank(ctx.ipoints, support)
                                  : float_affine_rank(poly.points, support);
        if (srank != r - 1) continue;  // touches only a lower-dimensional face

        bool seen = false;
        for (const Facet& f : poly.facets) {
            if (poly.integral) {
                if (f.int_normal == inormal && f.int_offset == ioffset) {
                    seen = true;
                    break;
                }
            } else if ((f.normal - normal / normal.norm()).cwiseAbs()
                               .maxCoeff() <= 1e-7 &&
                       std::abs(f.offset - offset / normal.norm()) <=
                           1e-7 * scale) {
                seen = true;
                break;
            }
        }
        if (seen) continue;

        Facet f;
        if (poly.integral) {
            f.exact = true;
            f.int_normal = inormal;
            f.int_offset = ioffset;
            f.normal = normal;
            f.offset = offset;
        } else {
            double nrm = normal.norm();
            f.normal = normal / nrm;
            f.offset = offset / nrm;
        }
        f.support = std::move(support);
        poly.facets.push_back(std::move(f));
    } while (next_subset(sub, npts));

    if (poly.facets.empty()) {
        throw GdftError(ErrorKind::DegeneratePolytope,
                        "facet enumeration produced no facets");
    }
    return poly;
}

bool polytope_contains(const Polytope& poly, const RVector& x, double tol) {
    if (x.size() != poly.ambient_dim) {
        throw GdftError(ErrorKind::DimensionMismatch,
                        "point dimension differs from polytope ambient "
                        "dimension");
    }
    double scale = std::max(1.0, poly.points.cwiseAbs().maxCoeff());
    // Affine-hull membership first.
    RVector delta = x - poly.centroid;
    RVector proj = poly.tangent.cols()
                       ? RVector(poly.tangent * (poly.tangent.transpose() * delta))
                       : RVector(RVector::Zero(poly.ambient_dim));
    if ((delta - proj).norm() > tol * scale) return false;
    for (const Facet& f : poly.facets) {
        double fscale = std::max(1.0, std::abs(f.offset));
        if (f.normal.dot(x) - f.offset > tol * fscale * f.normal.norm())
            return false;
    }
    return true;
}

bool in_relative_interior(const Polytope& poly, const RVector& x, double tol) {
    if (!polytope_contains(poly, x, tol)) return false;
    return active_facets(poly, x, tol).empty();
}

std::vector<int> active_facets(const Polytope& poly, const RVector& x,
                               double tol) {
    std::vector<int> active;
    for (size_t i = 0; i < poly.facets.size(); ++i) {
        const Facet& f = poly.facets[i];
        double fscale = std::max(1.0, std::abs(f.offset)) * f.normal.norm();
        if (std::abs(f.normal.dot(x) - f.offset) <= tol * fscale)
            active.push_back(static_cast<int>(i));
    }
    return active;
}

RMatrix halfspace_vertices(const RMatrix& a, const RVector& b, double tol) {
    const int m = static_cast<int>(a.rows());
    const int d = static_cast<int>(a.cols());
    if (m < d) {
        throw GdftError(ErrorKind::NotFullDimensional,
                        "too few halfspaces to bound a vertex");
    }
    if (binomial_capped(m, d, kSubsetCap) >= kSubsetCap) {
        throw GdftError(ErrorKind::Unsupported,
                        "vertex enumeration exceeds the subset budget");
    }
    std::vector<RVector> verts;
    std::vector<int> sub(d);
    for (int i = 0; i < d; ++i) sub[i] = i;
    double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
    do {
        RMatrix sq(d, d);
        RVector rhs(d);
        for (int i = 0; i < d; ++i) {
            sq.row(i) = a.row(sub[i]);
            rhs(i) = b(sub[i]);
        }
        Eigen::FullPivLU<RMatrix> lu(sq);
        lu.setThreshold(1e-9);
        if (!lu.isInvertible()) continue;
        RVector x = lu.solve(rhs);
        if (((a * x - b).array() > tol * scale).any()) continue;
        bool dup = false;
        for (const RVector& v : verts) {
            if ((v - x).cwiseAbs().maxCoeff() <= 1e-7 * scale) {
                dup = true;
                break;
            }
        }
        if (!dup) verts.push_back(std::move(x));
    } while (next_subset(sub, m));
    RMatrix out(d, static_cast<int>(verts.size()));
    for (size_t j = 0; j < verts.size(); ++j)
        out.col(static_cast<int>(j)) = verts[j];
    return out;
}

}  // namespace gdft
