#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gdft/bosonic.hpp"
#include "gdft/boundary.hpp"

using namespace gdft;

namespace {

// The facet rho <= 1 of the qubit domain as a boundary query at rho* = 1.
BoundaryForceQuery qubit_edge_query() {
    BoundaryForceQuery q;
    q.facet.S = RVector(1);
    q.facet.S << -1;
    q.facet.nu = -1.0;
    q.rho_star = RVector(1);
    q.rho_star << 1.0;
    q.eta = RVector(1);
    q.eta << -1.0;
    return q;
}

BoundaryForceQuery hubbard_bottom_query(int n) {
    BoundaryForceQuery q;
    q.facet.S = RVector(3);
    q.facet.S << 2.0 / std::sqrt(6.0), -1.0 / std::sqrt(6.0),
        -1.0 / std::sqrt(6.0);
    q.facet.nu = -n / std::sqrt(6.0);
    q.rho_star = RVector(3);
    q.rho_star << 0.0, n / 2.0, n / 2.0;
    q.eta = q.facet.S;  // unit tangent normal: <eta, S> = 1
    return q;
}

}  // namespace

TEST_CASE("qubit edge force equals sqrt(2)") {
    FunctionalTheoryModel th = qubit_theory(1.0);
    WeightDecomposition wd = weight_decomposition(th);
    BoundaryForceResult r =
        abelian_boundary_force(th, wd, qubit_edge_query(), SearchOptions{});
    CHECK(r.G == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    REQUIRE(r.contributions.size() == 1);
    CHECK(r.G ==
          doctest::Approx(2.0 * std::sqrt(r.contributions[0].second)));
}

TEST_CASE("zero interaction gives zero force") {
    CMatrix z(2, 2);
    z << 1, 0, 0, -1;
    FunctionalTheoryModel th = make_theory({z}, CMatrix::Zero(2, 2));
    WeightDecomposition wd = weight_decomposition(th);
    BoundaryForceResult r =
        abelian_boundary_force(th, wd, qubit_edge_query(), SearchOptions{});
    CHECK(r.G == doctest::Approx(0.0));
}

TEST_CASE("Hubbard (3,6,0) bottom-facet force matches the closed form") {
    int n = 6;
    FunctionalTheoryModel th = build_bosonic_theory(3, n, 0);
    WeightDecomposition wd = weight_decomposition(th);
    BoundaryForceQuery q = hubbard_bottom_query(n);
    BoundaryForceResult r = abelian_boundary_force(th, wd, q, SearchOptions{});
    double expect = 4.0 * std::pow(2.0, 0.25) * std::pow(3.0, 0.75) / 9.0 *
                    std::sqrt(static_cast<double>(n * (n - 1)));
    CHECK(r.G == doctest::Approx(expect).epsilon(1e-9));
    // gauge invariance in the reference point gamma on the facet hyperplane
    BoundaryForceQuery q2 = q;
    q2.gamma = RVector(3);
    q2.gamma << 0.0, static_cast<double>(n), 0.0;
    q2.has_gamma = true;
    BoundaryForceResult r2 = abelian_boundary_force(
        th, wd, q2, std::vector<QuantumState>{r.minimizer_used});
    CHECK(std::abs(r2.G - r.G) < 1e-10);
}

TEST_CASE("finite-difference fit recovers the qubit force") {
    FunctionalTheoryModel th = qubit_theory(1.0);
    SearchOptions opts;
    opts.multistarts = 8;
    ForceFit fit = finite_difference_force(th, qubit_edge_query(),
                                           default_eps_grid(), opts);
    CHECK(std::abs(fit.G_fit - std::sqrt(2.0)) / std::sqrt(2.0) < 0.05);
    CHECK(fit.intercept == doctest::Approx(0.0).epsilon(0.02));
    // values are the closed form -sqrt(2 eps - eps^2)
    std::vector<double> grid = default_eps_grid();
    for (size_t i = 0; i < grid.size(); ++i) {
        double eps = grid[i];
        CHECK(fit.values[i] ==
              doctest::Approx(-std::sqrt(2 * eps - eps * eps)).epsilon(1e-6));
    }
}

TEST_CASE("nonabelian force on the dimer closed form") {
    for (int n : {2, 5}) {
        for (double theta : {M_PI / 6, M_PI / 2}) {
            LieAlgebraData alg = dimer_algebra(n);
            FunctionalTheoryModel th = dimer_theory(n, theta);
            RVector s(1);
            s << -1;
            NonabelianFacetTheory ft =
                facet_theory_nonabelian(alg, th, s, -static_cast<double>(n));
            CVector top = CVector::Zero(n + 1);
            top(0) = 1.0;
            RVector rho_star(1), eta(1);
            rho_star << static_cast<double>(n);
            eta << -1.0;
            BoundaryForceResult r = nonabelian_boundary_force(
                alg, th, ft, rho_star, eta, {QuantumState::pure(top)});
            double expect = std::sqrt(static_cast<double>(n * (n - 1))) *
                            std::sin(theta) * std::sin(theta) /
                            std::sqrt(2.0);
            CHECK(r.G == doctest::Approx(expect).epsilon(1e-9));
        }
    }
}

TEST_CASE("nonabelian force on C^2 (x) C^3") {
    double u1 = 1.0, u2 = 0.3, u3 = -0.5, k1 = 0.2, k3 = -0.1;
    LieAlgebraData alg = su2_product_algebra({2, 3});
    FunctionalTheoryModel th = two_three_theory(u1, u2, u3, k1, k3);
    RVector s(2);
    s << -1, 0;
    NonabelianFacetTheory ft = facet_theory_nonabelian(alg, th, s, -1.0);
    CHECK(ft.columns.size() == 3);
    RVector rho_star(2), eta(2);
    rho_star << 1, 1;
    eta << -1, 0;
    double expect = std::sqrt(6.0) / 4.0 * std::abs(u1 - u3);
    // phase freedom of the minimizer must not change G
    for (double phase : {0.0, 0.7, 2.1}) {
        CVector phi = CVector::Zero(6);
        phi(0) = std::sqrt(3.0) / 2.0;
        phi(2) = 0.5 * Complex(std::cos(phase), std::sin(phase));
        BoundaryForceResult r = nonabelian_boundary_force(
            alg, th, ft, rho_star, eta, {QuantumState::pure(phi)});
        CHECK(r.G == doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("query validation") {
    FunctionalTheoryModel th = qubit_theory(1.0);
    WeightDecomposition wd = weight_decomposition(th);
    BoundaryForceQuery q = qubit_edge_query();
    q.eta(0) = 1.0;  // points outside
    CHECK_THROWS_AS(abelian_boundary_force(th, wd, q, SearchOptions{}),
                    GdftError);
    BoundaryForceQuery q2 = qubit_edge_query();
    q2.gamma = RVector(1);
    q2.gamma << 0.0;  // not on the facet hyperplane
    q2.has_gamma = true;
    CHECK_THROWS_AS(abelian_boundary_force(th, wd, q2, SearchOptions{}),
                    GdftError);
}
