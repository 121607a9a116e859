#include "gdft/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gdft/lp.hpp"

namespace gdft {

namespace {

double quad_value(const CMatrix& w, const CVector& c) {
    return (c.adjoint() * w * c)(0).real();
}

// Coordinate descent over the phases of the nonzero entries of c.
double phase_sweep(const CMatrix& w, CVector& c, int max_sweeps = 300) {
    const int n = static_cast<int>(c.size());
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double moved = 0.0;
        for (int i = 0; i < n; ++i) {
            double a = std::abs(c(i));
            if (a <= 1e-300) continue;
            Complex phi = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j != i) phi += w(i, j) * c(j);
            }
            double ap = std::abs(phi);
            if (ap <= 1e-300) continue;
            Complex nc = -a * phi / ap;  // makes the cross term -2 a |phi|
            moved += std::abs(nc - c(i));
            c(i) = nc;
        }
        if (moved < 1e-13) break;
    }
    return quad_value(w, c);
}

RVector restore_with(const RMatrix& a, const RMatrix& pinv_a, const RVector& b,
                     RVector p, int max_rounds) {
    for (int round = 0; round < max_rounds; ++round) {
        p += pinv_a * (b - a * p);
        if (p.minCoeff() > -1e-13) break;
        p = p.cwiseMax(0.0);
    }
    p = p.cwiseMax(0.0);
    // Active-set polish: near the boundary of the fiber polytope the
    // alternating projection stalls, so freeze near-zero entries at zero and
    // correct on the support only, dropping entries the correction drives
    // negative.
    const int n = static_cast<int>(p.size());
    for (int pass = 0; pass < n; ++pass) {
        std::vector<int> sup;
        for (int i = 0; i < n; ++i)
            if (p(i) > 1e-12) sup.push_back(i);
        if (sup.empty()) break;
        RMatrix as(a.rows(), static_cast<int>(sup.size()));
        for (size_t j = 0; j < sup.size(); ++j)
            as.col(static_cast<int>(j)) = a.col(sup[j]);
        RVector corr = pseudo_inverse(as) * (b - a * p);
        bool went_negative = false;
        for (size_t j = 0; j < sup.size(); ++j) {
            p(sup[j]) += corr(static_cast<int>(j));
            if (p(sup[j]) < 0.0) went_negative = true;
        }
        if (!went_negative) break;
        p = p.cwiseMax(0.0);
    }
    return p;
}

struct StartOutcome {
    double value = 0.0;
    CVector state;
    double residual = 0.0;
};

// Collects converged states within a value band of the optimum, deduplicated
// up to a global phase.
void cluster_near_optimal(SearchResult& best,
                          std::vector<std::pair<double, CVector>>& converged,
                          double value_tol) {
    const double band = std::max(value_tol, 1e-7);
    std::sort(converged.begin(), converged.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [val, psi] : converged) {
        if (val > best.value + band) break;
        bool dup = false;
        for (const QuantumState& kept : best.near_optimal) {
            if (std::abs(kept.amplitudes.dot(psi)) > 1.0 - 1e-9) {
                dup = true;
                break;
            }
        }
        if (!dup) best.near_optimal.push_back(QuantumState::pure(psi, 1e-8));
        if (best.near_optimal.size() >= 12) break;
    }
}

// One start of the abelian fiber search: alternating phase sweeps and
// feasibility-restored projected gradient steps on the amplitudes.
StartOutcome abelian_start(const CMatrix& w_eff, const RMatrix& a,
                           const RMatrix& pinv_a, const RVector& b,
                           CVector c, int max_iters, double value_tol) {
    const int n = static_cast<int>(c.size());
    const int m = static_cast<int>(a.rows());
    double value = phase_sweep(w_eff, c);
    int stale = 0;
    for (int iter = 0; iter < max_iters && stale < 3; ++iter) {
        double round_start = value;
        // Amplitude block: one projected-gradient step with backtracking.
        CVector g = 2.0 * (w_eff * c);
        // Constraint gradients, real-flattened (the factor 2 cancels in the
        // projection).
        RMatrix cons(m, 2 * n);
        for (int r = 0; r < m; ++r) {
            for (int i = 0; i < n; ++i) {
                cons(r, i) = a(r, i) * c(i).real();
                cons(r, n + i) = a(r, i) * c(i).imag();
            }
        }
        RVector gr(2 * n);
        for (int i = 0; i < n; ++i) {
            gr(i) = g(i).real();
            gr(n + i) = g(i).imag();
        }
        RVector lambda = svd_solve(cons.transpose(), gr);
        RVector gt = gr - cons.transpose() * lambda;
        double gn = gt.norm();
        if (gn > 1e-12) {
            double alpha = 0.5 / std::max(1.0, gn);
            bool accepted = false;
            for (int bt = 0; bt < 30 && !accepted; ++bt) {
                CVector trial(n);
                for (int i = 0; i < n; ++i) {
                    trial(i) = c(i) - alpha * Complex(gt(i), gt(n + i));
                }
                RVector p(n);
                for (int i = 0; i < n; ++i) p(i) = std::norm(trial(i));
                p = restore_with(a, pinv_a, b, p, 100);
                CVector cand(n);
                for (int i = 0; i < n; ++i) {
                    double amp = std::sqrt(std::max(p(i), 0.0));
                    double old = std::abs(trial(i));
                    cand(i) = old > 1e-150 ? trial(i) / old * amp
                                           : Complex(amp, 0.0);
                }
                double cv = quad_value(w_eff, cand);
                if (cv < value - 1e-15) {
                    c = std::move(cand);
                    value = cv;
                    accepted = true;
                }
                alpha *= 0.3;
            }
        }
        value = phase_sweep(w_eff, c);
        stale = (round_start - value < value_tol) ? stale + 1 : 0;
    }
    StartOutcome out;
    out.value = value;
    out.state = std::move(c);
    RVector p(n);
    for (int i = 0; i < n; ++i) p(i) = std::norm(out.state(i));
    out.residual = (a * p - b).norm();
    return out;
}

SearchResult abelian_search(const FunctionalTheoryModel& theory,
                            const WeightDecomposition& wd,
                            const DensityVector& rho,
                            const SearchOptions& opts) {
    const int n = wd.hilbert_dim();
    const int k = wd.potential_dim();
    RMatrix a(k + 1, n);
    a.topRows(k) = wd.column_weights();
    a.row(k).setOnes();
    RVector b(k + 1);
    b.head(k) = rho;
    b(k) = 1.0;
    RVector y0 = max_min_point(a, b);  // throws NotRepresentable
    RMatrix pinv_a = pseudo_inverse(a);
    CMatrix w_eff = symmetrize_hermitian(
        wd.basis.adjoint() * theory.interaction.entries * wd.basis, 1e-9);

    SearchResult best;
    best.value = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, CVector>> converged;
    int n_seeds = static_cast<int>(opts.seed_states.size());
    int total = std::max(1, opts.multistarts) + n_seeds;
    for (int start = 0; start < total; ++start) {
        CVector c(n);
        if (start < n_seeds) {
            c = opts.seed_states[start];
            RVector p(n);
            for (int i = 0; i < n; ++i) p(i) = std::norm(c(i));
            p = restore_with(a, pinv_a, b, p, 200);
            for (int i = 0; i < n; ++i) {
                double amp = std::sqrt(std::max(p(i), 0.0));
                double old = std::abs(c(i));
                c(i) = old > 1e-150 ? c(i) / old * amp : Complex(amp, 0.0);
            }
        } else {
            std::mt19937_64 rng = make_rng(opts.seed, start - n_seeds);
            RVector y = y0;
            if (start > n_seeds) {
                std::normal_distribution<double> gauss(0.0, 1.0);
                double sigma = 0.05 * std::pow(3.0, (start - n_seeds) % 4);
                for (int i = 0; i < n; ++i)
                    y(i) = std::max(y0(i) + sigma * gauss(rng), 0.0);
                y = restore_with(a, pinv_a, b, y, 200);
            }
            std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
            for (int i = 0; i < n; ++i) {
                double th = (start == n_seeds) ? 0.0 : ang(rng);
                c(i) = std::sqrt(std::max(y(i), 0.0)) *
                       Complex(std::cos(th), std::sin(th));
            }
        }
        StartOutcome so = abelian_start(w_eff, a, pinv_a, b, std::move(c),
                                        opts.max_iters, opts.value_tol);
        if (so.residual <= opts.constraint_tol) {
            ++best.starts_converged;
            converged.emplace_back(so.value,
                                   CVector(wd.basis * so.state.normalized()));
        }
        if (so.residual <= opts.constraint_tol && so.value < best.value) {
            best.value = so.value;
            best.constraint_residual = so.residual;
            best.best_start_index = start;
            best.state = QuantumState::pure(wd.basis * so.state, 1e-8);
        }
    }
    if (best.best_start_index < 0) {
        throw GdftError(ErrorKind::DidNotConverge,
                        "no start satisfied the density constraints");
    }
    cluster_near_optimal(best, converged, opts.value_tol);
    return best;
}

// Newton restoration onto the constraint manifold { ||psi||=1, rho(psi)=rho }
// by least-norm corrections; leaves psi unchanged if it fails to contract.
bool newton_restore(const FunctionalTheoryModel& theory,
                    const DensityVector& rho, CVector& psi) {
    const int n = theory.hilbert_dim;
    const int k = theory.potential_dim();
    CVector cur = psi;
    for (int iter = 0; iter < 40; ++iter) {
        RVector resid(k + 1);
        RMatrix jac(k + 1, 2 * n);
        for (int a = 0; a < k; ++a) {
            CVector bp = theory.potential_basis[a].entries * cur;
            resid(a) = rho(a) - cur.dot(bp).real();
            for (int i = 0; i < n; ++i) {
                jac(a, i) = 2.0 * bp(i).real();
                jac(a, n + i) = 2.0 * bp(i).imag();
            }
        }
        resid(k) = 1.0 - cur.squaredNorm();
        for (int i = 0; i < n; ++i) {
            jac(k, i) = 2.0 * cur(i).real();
            jac(k, n + i) = 2.0 * cur(i).imag();
        }
        if (resid.norm() < 1e-13) {
            psi = cur;
            return true;
        }
        // Least-norm solution of jac * delta = resid.
        RVector delta = pseudo_inverse(jac) * resid;
        if (delta.norm() > 0.5) return false;  // too far off the manifold
        for (int i = 0; i < n; ++i) cur(i) += Complex(delta(i), delta(n + i));
    }
    return false;
}

double density_residual(const FunctionalTheoryModel& theory,
                        const DensityVector& rho, const CVector& psi) {
    double s2 = 0.0;
    for (int a = 0; a < theory.potential_dim(); ++a) {
        double h = psi.dot(theory.potential_basis[a].entries * psi).real();
        s2 += (h - rho(a)) * (h - rho(a));
    }
    double nn = psi.squaredNorm() - 1.0;
    return std::sqrt(s2 + nn * nn);
}

SearchResult penalty_search(const FunctionalTheoryModel& theory,
                            const DensityVector& rho,
                            const SearchOptions& opts) {
    const int n = theory.hilbert_dim;
    const int k = theory.potential_dim();
    const CMatrix& w = theory.interaction.entries;
    double wscale = std::max(1.0, w.cwiseAbs().maxCoeff());

    SearchResult best;
    best.value = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, CVector>> converged;
    int n_seeds = static_cast<int>(opts.seed_states.size());
    int total = std::max(1, opts.multistarts) + n_seeds;
    for (int start = 0; start < total; ++start) {
        CVector psi;
        if (start < n_seeds) {
            psi = opts.seed_states[start].normalized();
        } else {
            std::mt19937_64 rng = make_rng(opts.seed, start - n_seeds);
            psi = random_unit_vector(n, rng);
        }
        double mu = 10.0 * wscale;
        for (int round = 0; round < 6; ++round) {
            // Projected gradient on the unit sphere.
            for (int iter = 0; iter < opts.max_iters; ++iter) {
                CVector grad = 2.0 * (w * psi);
                double jval = psi.dot(w * psi).real();
                for (int a = 0; a < k; ++a) {
                    CVector bp = theory.potential_basis[a].entries * psi;
                    double h = psi.dot(bp).real() - rho(a);
                    jval += mu * h * h;
                    grad += (4.0 * mu * h) * bp;
                }
                grad -= psi.dot(grad).real() * psi;  // sphere tangent
                double gn = grad.norm();
                if (gn < 1e-11 * std::max(1.0, mu)) break;
                double alpha = 1.0 / std::max(1.0, 4.0 * mu);
                bool ok = false;
                for (int bt = 0; bt < 40 && !ok; ++bt) {
                    CVector trial = (psi - alpha * grad).normalized();
                    double tv = trial.dot(w * trial).real();
                    for (int a = 0; a < k; ++a) {
                        double h = trial.dot(theory.potential_basis[a].entries *
                                             trial).real() - rho(a);
                        tv += mu * h * h;
                    }
                    if (tv < jval - 1e-15) {
                        psi = std::move(trial);
                        ok = true;
                    }
                    alpha *= 0.4;
                }
                if (!ok) break;
            }
            mu *= opts.penalty_growth;
        }
        CVector polished = psi;
        bool restored = newton_restore(theory, rho, polished);
        if (restored) psi = polished;
        double resid = density_residual(theory, rho, psi);
        double value = psi.dot(w * psi).real() / psi.squaredNorm();
        if (resid <= opts.constraint_tol) {
            ++best.starts_converged;
            converged.emplace_back(value, CVector(psi.normalized()));
        }
        if (resid <= opts.constraint_tol && value < best.value) {
            best.value = value;
            best.constraint_residual = resid;
            best.best_start_index = start;
            best.state = QuantumState::pure(psi.normalized());
        }
    }
    if (best.best_start_index < 0) {
        throw GdftError(ErrorKind::DidNotConverge,
                        "no penalty start reached the density constraints");
    }
    cluster_near_optimal(best, converged, opts.value_tol);
    return best;
}

}  // namespace

RVector restore_feasible(const RMatrix& a, const RVector& b, RVector p,
                         int max_rounds) {
    return restore_with(a, pseudo_inverse(a), b, std::move(p), max_rounds);
}

double minimize_phases(const CMatrix& w, const RVector& amplitudes,
                       std::mt19937_64& rng, int restarts, CVector* phases) {
    const int n = static_cast<int>(amplitudes.size());
    double best = std::numeric_limits<double>::infinity();
    CVector best_c;
    std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
    for (int r = 0; r < std::max(1, restarts); ++r) {
        CVector c(n);
        for (int i = 0; i < n; ++i) {
            double th = (r == 0) ? 0.0 : ang(rng);
            c(i) = amplitudes(i) * Complex(std::cos(th), std::sin(th));
        }
        double v = phase_sweep(w, c);
        if (v < best) {
            best = v;
            best_c = std::move(c);
        }
    }
    if (phases) {
        phases->resize(n);
        for (int i = 0; i < n; ++i) {
            double a = std::abs(best_c(i));
            (*phases)(i) = a > 1e-150 ? best_c(i) / a : Complex(1.0, 0.0);
        }
    }
    return best;
}

SearchResult pure_functional(const FunctionalTheoryModel& theory,
                             const DensityVector& rho,
                             const SearchOptions& opts) {
    if (rho.size() != theory.potential_dim()) {
        throw GdftError(ErrorKind::DimensionMismatch,
                        "density dimension differs from potential basis size");
    }
    try {
        WeightDecomposition wd = weight_decomposition(theory);
        return abelian_search(theory, wd, rho, opts);
    } catch (const GdftError& e) {
        if (e.kind() != ErrorKind::NotAbelian) throw;
    }
    return penalty_search(theory, rho, opts);
}

SearchResult ensemble_functional(const FunctionalTheoryModel& theory,
                                 const DensityVector& rho,
                                 const SearchOptions& opts, int rank_bound) {
    int k = theory.hilbert_dim;
    if (rank_bound > 0) k = std::min(k, rank_bound);
    return pure_functional(convexify(theory, k), rho, opts);
}

HkSample hk_functional_sample(const FunctionalTheoryModel& theory,
                              const RVector& v, double degeneracy_tol) {
    std::vector<QuantumState> gs = ground_states(theory, v, degeneracy_tol);
    HkSample sample;
    sample.degenerate = gs.size() > 1;
    for (const QuantumState& s : gs) {
        double val = s.amplitudes.dot(theory.interaction.entries *
                                      s.amplitudes).real();
        sample.branches.emplace_back(density_of_state(theory, s), val);
    }
    return sample;
}

std::vector<std::pair<int, double>> no_mixing_residuals(
    const FunctionalTheoryModel& theory, const WeightDecomposition& wd,
    const SearchResult& result, double tol) {
    if (result.state.kind != QuantumState::Kind::Pure) {
        throw GdftError(ErrorKind::NotRepresentable,
                        "no-mixing diagnostic requires a pure minimizer");
    }
    DensityVector rho = density_of_state(theory, result.state);
    Polytope poly = representable_polytope(wd);
    if (!in_relative_interior(poly, rho, 1e-8)) {
        throw GdftError(ErrorKind::NotInRelativeInterior,
                        "minimizer density is not an interior point");
    }
    CVector overlaps = wd.basis.adjoint() * result.state.amplitudes;
    CVector w_phi = theory.interaction.entries * result.state.amplitudes;
    CVector w_overlaps = wd.basis.adjoint() * w_phi;
    std::vector<std::pair<int, double>> residuals;
    for (int i = 0; i < wd.hilbert_dim(); ++i) {
        if (std::abs(overlaps(i)) <= 1e-8) {
            residuals.emplace_back(i, std::abs(w_overlaps(i)));
        }
    }
    (void)tol;
    return residuals;
}

}  // namespace gdft
