#include "gdft/boundary.hpp"

#include <algorithm>
#include <cmath>

namespace gdft {

namespace {

// Rescaled facet data with <eta, S> = 1.
struct ScaledFacet {
    RVector s;
    double c = 0.0;
};

ScaledFacet rescale(const BoundaryForceQuery& query) {
    double r = query.eta.dot(query.facet.S);
    if (r <= 1e-12) {
        throw GdftError(ErrorKind::ZeroDenominator,
                        "approach direction does not point into the domain");
    }
    const DensityVector& gamma =
        query.has_gamma ? query.gamma : query.rho_star;
    ScaledFacet sf;
    sf.s = query.facet.S / r;
    sf.c = gamma.dot(query.facet.S) / r;
    if (std::abs(gamma.dot(query.facet.S) - query.facet.nu) > 1e-7) {
        throw GdftError(ErrorKind::NotOnFacet,
                        "reference point is off the facet hyperplane");
    }
    return sf;
}

BoundaryForceResult force_from_minimizers(
    const WeightDecomposition& wd, const CMatrix& w, const ScaledFacet& sf,
    const std::vector<QuantumState>& phis) {
    if (phis.empty()) {
        throw GdftError(ErrorKind::CriticalFacetPoint,
                        "no facet minimizer available");
    }
    BoundaryForceResult best;
    best.G = std::numeric_limits<double>::infinity();
    for (const QuantumState& phi : phis) {
        if (phi.kind != QuantumState::Kind::Pure) {
            throw GdftError(ErrorKind::Unsupported,
                            "boundary force expects pure facet minimizers");
        }
        CVector wphi = w * phi.amplitudes;
        double sum = 0.0;
        std::vector<std::pair<DensityVector, double>> contrib;
        for (size_t wi = 0; wi < wd.weights.size(); ++wi) {
            double denom = wd.weights[wi].dot(sf.s) - sf.c;
            if (std::abs(denom) <= 1e-8) continue;  // weight on the facet
            double num = (wd.projectors[wi] * wphi).squaredNorm();
            double term = num / denom;
            sum += term;
            contrib.emplace_back(wd.weights[wi], term);
        }
        double g = 2.0 * std::sqrt(std::max(sum, 0.0));
        if (g < best.G) {
            best.G = g;
            best.contributions = std::move(contrib);
            best.minimizer_used = phi;
        }
    }
    return best;
}

}  // namespace

BoundaryForceResult abelian_boundary_force(
    const FunctionalTheoryModel& theory, const WeightDecomposition& wd,
    const BoundaryForceQuery& query, const std::vector<QuantumState>& phis) {
    ScaledFacet sf = rescale(query);
    BoundaryForceResult result =
        force_from_minimizers(wd, theory.interaction.entries, sf, phis);
    // A minimizer whose facet density is a critical value of the facet theory
    // can break the asymptotic law; flag it rather than fail.
    try {
        FacetTheory ft = facet_theory(theory, wd, query.facet);
        WeightDecomposition fwd = weight_decomposition(ft.model);
        result.regularity_warning = is_critical_value(fwd, query.rho_star);
    } catch (const GdftError&) {
        result.regularity_warning = false;
    }
    return result;
}

BoundaryForceResult abelian_boundary_force(const FunctionalTheoryModel& theory,
                                           const WeightDecomposition& wd,
                                           const BoundaryForceQuery& query,
                                           const SearchOptions& opts) {
    FacetTheory ft = facet_theory(theory, wd, query.facet);
    SearchResult sr;
    try {
        sr = pure_functional(ft.model, query.rho_star, opts);
    } catch (const GdftError& e) {
        if (e.kind() == ErrorKind::NotRepresentable) {
            throw GdftError(ErrorKind::CriticalFacetPoint,
                            "facet fiber is empty at the boundary point");
        }
        throw;
    }
    // Lift every near-optimal facet minimizer back to the full space; the
    // force is minimized over the cluster (minimizers may be degenerate).
    std::vector<QuantumState> lifted;
    std::vector<CVector> raw;
    for (const QuantumState& st : sr.near_optimal) raw.push_back(st.amplitudes);
    if (raw.empty()) raw.push_back(sr.state.amplitudes);
    for (const CVector& amps : raw) {
        CVector full = CVector::Zero(wd.hilbert_dim());
        for (size_t t = 0; t < ft.columns.size(); ++t)
            full += amps(static_cast<int>(t)) * wd.basis.col(ft.columns[t]);
        lifted.push_back(QuantumState::pure(full));
    }
    return abelian_boundary_force(theory, wd, query, lifted);
}

BoundaryForceResult nonabelian_boundary_force(
    const LieAlgebraData& alg, const FunctionalTheoryModel& theory,
    const NonabelianFacetTheory& facet_data, const DensityVector& rho_star,
    const DensityVector& eta, const std::vector<QuantumState>& phis) {
    (void)rho_star;
    WeightDecomposition wd = rep_weights(alg);
    double r = eta.dot(facet_data.s);
    if (r <= 1e-12) {
        throw GdftError(ErrorKind::ZeroDenominator,
                        "approach direction does not point into the domain");
    }
    RVector s = facet_data.s / r;
    double c = facet_data.c / r;
    if (phis.empty()) {
        throw GdftError(ErrorKind::CriticalFacetPoint,
                        "no facet minimizer available");
    }
    const int nv = static_cast<int>(facet_data.g_nonparallel.size());
    BoundaryForceResult best;
    best.G = std::numeric_limits<double>::infinity();
    for (const QuantumState& phi : phis) {
        if (phi.kind != QuantumState::Kind::Pure) {
            throw GdftError(ErrorKind::Unsupported,
                            "boundary force expects pure facet minimizers");
        }
        // Rows of the least-squares system: real and imaginary parts of
        // Pi_omega G_j phi / sqrt(denom), one block per off-facet weight.
        std::vector<int> off;
        std::vector<double> denom;
        int nrows = 0;
        for (size_t wi = 0; wi < wd.weights.size(); ++wi) {
            double d = wd.weights[wi].dot(s) - c;
            if (std::abs(d) <= 1e-8) continue;
            off.push_back(static_cast<int>(wi));
            denom.push_back(d);
            nrows += 2 * static_cast<int>(wd.projectors[wi].rows());
        }
        RMatrix m(nrows, nv);
        RVector b(nrows);
        int row = 0;
        for (size_t t = 0; t < off.size(); ++t) {
            const CMatrix& proj = wd.projectors[off[t]];
            double scale = 1.0 / std::sqrt(denom[t]);
            CVector pb = scale * (proj * (theory.interaction.entries *
                                          phi.amplitudes));
            int n = static_cast<int>(pb.size());
            b.segment(row, n) = pb.real();
            b.segment(row + n, n) = pb.imag();
            for (int j = 0; j < nv; ++j) {
                CVector col = scale * (proj * (facet_data.g_nonparallel[j] *
                                               phi.amplitudes));
                m.block(row, j, n, 1) = col.real();
                m.block(row + n, j, n, 1) = col.imag();
            }
            row += 2 * n;
        }
        RVector t_opt = nv > 0 ? svd_solve(m, RVector(-b))
                               : RVector::Zero(0);
        RVector resid = nv > 0 ? RVector(m * t_opt + b) : b;
        double g = 2.0 * resid.norm();
        if (g < best.G) {
            best.G = g;
            best.minimizer_used = phi;
            best.contributions.clear();
            int pos = 0;
            for (size_t t = 0; t < off.size(); ++t) {
                int n = static_cast<int>(wd.projectors[off[t]].rows());
                double term = resid.segment(pos, 2 * n).squaredNorm();
                best.contributions.emplace_back(wd.weights[off[t]], term);
                pos += 2 * n;
            }
        }
    }
    return best;
}

ForceFit finite_difference_force(const FunctionalTheoryModel& theory,
                                 const BoundaryForceQuery& query,
                                 const std::vector<double>& eps_list,
                                 const SearchOptions& opts) {
    if (eps_list.empty()) {
        throw GdftError(ErrorKind::DimensionMismatch, "empty eps grid");
    }
    ScaledFacet sf = rescale(query);
    (void)sf;  // validates the query
    // Solve from the largest eps inward, warm-starting each solve with the
    // previous minimizer (the near-facet landscape is stiff).
    std::vector<int> order(eps_list.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return eps_list[a] > eps_list[b];
    });
    ForceFit fit;
    fit.values.assign(eps_list.size(), 0.0);
    SearchOptions local = opts;
    for (int i : order) {
        DensityVector rho = query.rho_star + eps_list[i] * query.eta;
        SearchResult sr = pure_functional(theory, rho, local);
        fit.values[i] = sr.value;
        if (sr.state.kind == QuantumState::Kind::Pure) {
            local.seed_states.clear();
            local.seed_states.push_back(sr.state.amplitudes);
        }
    }
    // Weighted fit F(eps) = a - G sqrt(eps).  The sqrt law only holds
    // asymptotically and the leading correction is O(eps), so the weights
    // 1/eps push the fit onto the small-eps points where that term is small.
    const int n = static_cast<int>(eps_list.size());
    RMatrix design(n, 2);
    RVector rhs(n);
    for (int i = 0; i < n; ++i) {
        double w = 1.0 / eps_list[i];
        design(i, 0) = w;
        design(i, 1) = -w * std::sqrt(eps_list[i]);
        rhs(i) = w * fit.values[i];
    }
    RVector coef = svd_solve(design, rhs);
    fit.intercept = coef(0);
    fit.G_fit = coef(1);
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
        double pred = fit.intercept - fit.G_fit * std::sqrt(eps_list[i]);
        ss += (pred - fit.values[i]) * (pred - fit.values[i]);
    }
    fit.rms = std::sqrt(ss / n);
    return fit;
}

std::vector<double> default_eps_grid() {
    return {1e-4, 3e-4, 1e-3, 3e-3, 1e-2};
}

}  // namespace gdft
