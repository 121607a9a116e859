#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "gdft/abelian.hpp"
#include "gdft/bosonic.hpp"

using namespace gdft;

TEST_CASE("weight_decomposition splits degenerate commuting diagonals") {
    CMatrix a = CMatrix::Zero(3, 3), b = CMatrix::Zero(3, 3);
    a.diagonal() << 1, 1, 0;
    b.diagonal() << 0, 1, 1;
    CMatrix w = CMatrix::Zero(3, 3);
    w(0, 2) = 1;
    w(2, 0) = 1;
    WeightDecomposition wd = weight_decomposition(make_theory({a, b}, w));
    CHECK(wd.weights.size() == 3);  // (1,0), (1,1), (0,1) all distinct
    CHECK(wd.hilbert_dim() == 3);
    // basis columns are simultaneous eigenvectors
    for (int i = 0; i < 3; ++i) {
        const DensityVector& omega = wd.weights[wd.weight_of_column[i]];
        CHECK((a * wd.basis.col(i) - omega(0) * wd.basis.col(i)).norm() <
              1e-10);
        CHECK((b * wd.basis.col(i) - omega(1) * wd.basis.col(i)).norm() <
              1e-10);
    }
    // projectors resolve the identity
    CMatrix sum = CMatrix::Zero(3, 3);
    for (const CMatrix& p : wd.projectors) sum += p;
    CHECK((sum - CMatrix::Identity(3, 3)).norm() < 1e-10);
}

TEST_CASE("weight multiplicity is tracked") {
    CMatrix a = CMatrix::Zero(3, 3);
    a.diagonal() << 1, 1, -1;
    WeightDecomposition wd =
        weight_decomposition(make_theory({a}, CMatrix::Zero(3, 3)));
    CHECK(wd.weights.size() == 2);
    int mult = 0;
    for (int i = 0; i < 3; ++i) {
        if (std::abs(wd.weights[wd.weight_of_column[i]](0) - 1.0) < 1e-9)
            ++mult;
    }
    CHECK(mult == 2);
}

TEST_CASE("non-commuting potentials are rejected") {
    CMatrix z(2, 2), x(2, 2);
    z << 1, 0, 0, -1;
    x << 0, 1, 1, 0;
    CHECK_THROWS_AS(weight_decomposition(make_theory({z, x}, z)), GdftError);
}

TEST_CASE("bosonic (2,4,0) representable set and lattice facet functionals") {
    FunctionalTheoryModel th = build_bosonic_theory(2, 4, 0);
    WeightDecomposition wd = weight_decomposition(th);
    REQUIRE(wd.weights.size() == 3);
    Polytope poly = representable_polytope(wd);
    CHECK(poly.dim == 1);
    REQUIRE(poly.facets.size() == 2);
    for (size_t j = 0; j < poly.facets.size(); ++j) {
        FacetInequality f = facet_inequality(poly, static_cast<int>(j));
        CHECK(f.exact);
        CHECK(f.S.norm() == doctest::Approx(1.0));
        // lattice-normalized values over the weights are exactly {0, 2, 4}
        std::vector<double> vals;
        for (const DensityVector& omega : wd.weights) {
            double num = -static_cast<double>(f.int_nu);
            for (int i = 0; i < omega.size(); ++i)
                num += static_cast<double>(f.int_S[i]) * omega(i);
            vals.push_back(num / static_cast<double>(f.int_denom));
        }
        std::sort(vals.begin(), vals.end());
        CHECK(vals[0] == doctest::Approx(0.0));
        CHECK(vals[1] == doctest::Approx(2.0));
        CHECK(vals[2] == doctest::Approx(4.0));
        // normalized and lattice forms are proportional on the weights
        for (const DensityVector& omega : wd.weights) {
            double d_norm = f.S.dot(omega) - f.nu;
            CHECK(d_norm >= -1e-12);
        }
    }
}

TEST_CASE("facet theory of the Hubbard (3,6,0) bottom facet") {
    FunctionalTheoryModel th = build_bosonic_theory(3, 6, 0);
    WeightDecomposition wd = weight_decomposition(th);
    Polytope poly = representable_polytope(wd);
    // locate the facet whose hyperplane contains (0,6,0) and (0,0,6)
    DensityVector a(3), b(3);
    a << 0, 6, 0;
    b << 0, 0, 6;
    int found = -1;
    for (size_t j = 0; j < poly.facets.size(); ++j) {
        FacetInequality f = facet_inequality(poly, static_cast<int>(j));
        if (std::abs(f.S.dot(a) - f.nu) < 1e-9 &&
            std::abs(f.S.dot(b) - f.nu) < 1e-9) {
            found = static_cast<int>(j);
            FacetTheory ft = facet_theory(th, wd, f);
            // facet states are (0, m1, m2) with m2 a multiple of 3
            CHECK(ft.model.hilbert_dim == 3);
            CHECK(ft.on_facet.size() == 3);
            // compressed interaction is diagonal (no coupling on the facet)
            CMatrix wf = ft.model.interaction.entries;
            for (int r = 0; r < wf.rows(); ++r)
                for (int c = 0; c < wf.cols(); ++c)
                    if (r != c) CHECK(std::abs(wf(r, c)) < 1e-9);
        }
    }
    CHECK(found >= 0);
}

TEST_CASE("facet theory rejects hyperplanes missing the spectrum") {
    FunctionalTheoryModel th = build_bosonic_theory(2, 4, 0);
    WeightDecomposition wd = weight_decomposition(th);
    FacetInequality off;
    off.S = RVector(2);
    off.S << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
    off.nu = 100.0;  // no weight satisfies <omega,S> = nu
    CHECK_THROWS_AS(facet_theory(th, wd, off), GdftError);
}

TEST_CASE("critical values on a one-dimensional domain are the weights") {
    FunctionalTheoryModel th = build_bosonic_theory(2, 4, 0);
    WeightDecomposition wd = weight_decomposition(th);
    DensityVector at_weight(2), generic(2), outside(2);
    at_weight << 2, 2;
    generic << 3, 1;
    outside << 5, -1;
    CHECK(is_critical_value(wd, at_weight));
    CHECK_FALSE(is_critical_value(wd, generic));
    CHECK_THROWS_AS(is_critical_value(wd, outside), GdftError);
}

TEST_CASE("classical fiber point is feasible and strictly positive") {
    FunctionalTheoryModel th = build_bosonic_theory(2, 4, 0);
    WeightDecomposition wd = weight_decomposition(th);
    DensityVector rho(2);
    rho << 2.5, 1.5;
    ClassicalState y = classical_fiber_point(wd, rho);
    CHECK(y.y.minCoeff() > 0.0);
    CHECK(y.y.sum() == doctest::Approx(1.0));
    CHECK((classical_density(wd, y) - rho).norm() < 1e-8);
}
