#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "gdft/liegroup.hpp"

using namespace gdft;

namespace {

std::set<std::pair<std::vector<std::int64_t>, std::int64_t>> accepted_set(
    const KirwanResult& kr) {
    std::set<std::pair<std::vector<std::int64_t>, std::int64_t>> out;
    for (const KirwanCandidate& c : kr.accepted) out.emplace(c.s, c.c);
    return out;
}

}  // namespace

TEST_CASE("su(2) factor commutation relations") {
    LieAlgebraData alg = su2_product_algebra({4});  // spin 3/2
    REQUIRE(alg.cartan.size() == 1);
    REQUIRE(alg.positive_roots.size() == 1);
    const CMatrix& t = alg.cartan[0];
    const CMatrix& lp = alg.positive_roots[0].raising;
    // [T, L+] = 2 L+
    CHECK((t * lp - lp * t - 2.0 * lp).norm() < 1e-12);
    CHECK(hermiticity_defect(alg.positive_roots[0].x_gen) < 1e-14);
    CHECK(hermiticity_defect(alg.positive_roots[0].y_gen) < 1e-14);
    // weights of the irrep: 3, 1, -1, -3
    WeightDecomposition wd = rep_weights(alg);
    std::set<int> got;
    for (const DensityVector& w : wd.weights)
        got.insert(static_cast<int>(std::lround(w(0))));
    CHECK(got == std::set<int>{3, 1, -1, -3});
}

TEST_CASE("tensor product of su(2) factors") {
    LieAlgebraData alg = su2_product_algebra({2, 3});
    CHECK(alg.hilbert_dim == 6);
    CHECK(alg.cartan.size() == 2);
    // Cartan generators commute
    CHECK((alg.cartan[0] * alg.cartan[1] - alg.cartan[1] * alg.cartan[0])
              .norm() < 1e-12);
    WeightDecomposition wd = rep_weights(alg);
    CHECK(wd.weights.size() == 6);
}

TEST_CASE("su(3) adjoint representation") {
    LieAlgebraData alg = su3_adjoint_algebra();
    CHECK(alg.hilbert_dim == 8);
    REQUIRE(alg.positive_roots.size() == 3);
    CHECK((alg.cartan[0] * alg.cartan[1] - alg.cartan[1] * alg.cartan[0])
              .norm() < 1e-10);
    // root relations [T_a, E_alpha] = alpha_a E_alpha
    for (const RootData& r : alg.positive_roots) {
        for (size_t a = 0; a < alg.cartan.size(); ++a) {
            CMatrix comm = alg.cartan[a] * r.raising - r.raising * alg.cartan[a];
            CHECK((comm - r.alpha(a) * r.raising).norm() < 1e-10);
        }
    }
    // weights: the six roots plus zero twice
    WeightDecomposition wd = rep_weights(alg);
    CHECK(wd.weights.size() == 7);
    int zero_mult = 0;
    for (int i = 0; i < wd.hilbert_dim(); ++i) {
        if (wd.weights[wd.weight_of_column[i]].norm() < 1e-9) ++zero_mult;
    }
    CHECK(zero_mult == 2);
}

TEST_CASE("Kirwan polytope of the dimer is [0, N]") {
    for (int n : {2, 5}) {
        LieAlgebraData alg = dimer_algebra(n);
        KirwanResult kr = kirwan_polytope(alg);
        auto acc = accepted_set(kr);
        REQUIRE(acc.size() == 1);
        CHECK(acc.count({{-1}, -n}) == 1);
        CHECK(kr.polytope.points.minCoeff() == doctest::Approx(0.0));
        CHECK(kr.polytope.points.maxCoeff() == doctest::Approx(n));
        // facet classification: wall at 0 trivial, weight facet at N nice
        WeightDecomposition wd = rep_weights(alg);
        auto cls = classify_facets(alg, kr, wd);
        REQUIRE(cls.size() == 2);
        int trivial = 0, nice = 0;
        for (const ClassifiedFacet& f : cls) {
            if (f.cls == FacetClass::Trivial) ++trivial;
            if (f.cls == FacetClass::Nice) ++nice;
        }
        CHECK(trivial == 1);
        CHECK(nice == 1);
    }
}

TEST_CASE("Kirwan polytope of C^2 (x) C^3") {
    LieAlgebraData alg = su2_product_algebra({2, 3});
    KirwanResult kr = kirwan_polytope(alg);
    auto acc = accepted_set(kr);
    REQUIRE(acc.size() == 3);
    CHECK(acc.count({{0, -1}, -2}) == 1);   // x2 <= 2
    CHECK(acc.count({{-1, 0}, -1}) == 1);   // x1 <= 1
    CHECK(acc.count({{1, -1}, -1}) == 1);   // x2 - x1 <= 1
    // vertices (0,0), (1,0), (0,1), (1,2)
    CHECK(kr.polytope.points.cols() == 4);
    RVector tip(2);
    tip << 1, 2;
    CHECK(polytope_contains(kr.polytope, tip));

    WeightDecomposition wd = rep_weights(alg);
    auto cls = classify_facets(alg, kr, wd);
    int nice = 0, other = 0, trivial = 0;
    for (const ClassifiedFacet& f : cls) {
        if (f.cls == FacetClass::Nice) ++nice;
        if (f.cls == FacetClass::Other) ++other;
        if (f.cls == FacetClass::Trivial) ++trivial;
    }
    CHECK(trivial == 2);  // chamber walls x1 >= 0, x2 >= 0
    CHECK(nice == 1);     // x1 = 1 carries a facet of conv(Omega)
    CHECK(other == 1);    // x2 - x1 = 1 does not
}

TEST_CASE("Kirwan polytope of the su(3) adjoint is the unit square") {
    LieAlgebraData alg = su3_adjoint_algebra();
    KirwanResult kr = kirwan_polytope(alg);
    auto acc = accepted_set(kr);
    REQUIRE(acc.size() == 2);
    CHECK(acc.count({{-1, 0}, -1}) == 1);  // x1 <= 1
    CHECK(acc.count({{0, -1}, -1}) == 1);  // x2 <= 1
    CHECK(kr.polytope.points.cols() == 4);
    CHECK(kr.polytope.points.minCoeff() == doctest::Approx(0.0));
    CHECK(kr.polytope.points.maxCoeff() == doctest::Approx(1.0));
}

TEST_CASE("nonabelian facet restriction for the dimer") {
    int n = 4;
    LieAlgebraData alg = dimer_algebra(n);
    FunctionalTheoryModel th = dimer_theory(n, M_PI / 3);
    RVector s(1);
    s << -1;
    NonabelianFacetTheory ft = facet_theory_nonabelian(alg, th, s, -n);
    CHECK(ft.columns.size() == 1);  // only the top weight
    CHECK(ft.model.hilbert_dim == 1);
    CHECK(ft.g_nonparallel.size() == 2);  // X and Y of the single root
    CHECK(ft.g_parallel.empty());
    RVector s_off(1);
    s_off << -1;
    CHECK_THROWS_AS(facet_theory_nonabelian(alg, th, s_off, -n - 7.0),
                    GdftError);
}

TEST_CASE("selection rule holds on the dimer top weight") {
    int n = 5;
    LieAlgebraData alg = dimer_algebra(n);
    FunctionalTheoryModel th = dimer_theory(n, M_PI / 6);
    CVector top = CVector::Zero(n + 1);
    top(0) = 1.0;
    RVector s(1);
    s << -1;
    SelectionRuleReport rep =
        selection_rule_check(alg, th, s, -n, QuantumState::pure(top));
    CHECK(rep.pass);
    CHECK(rep.residual < 1e-12);
    // a state whose density is off the facet is rejected
    CVector mixed = CVector::Zero(n + 1);
    mixed(0) = std::sqrt(0.5);
    mixed(1) = std::sqrt(0.5);
    CHECK_THROWS_AS(
        selection_rule_check(alg, th, s, -n, QuantumState::pure(mixed)),
        GdftError);
}

TEST_CASE("two_three_theory matches its defining matrix elements") {
    double u1 = 1.0, u2 = 0.3, u3 = -0.5, k1 = 0.2, k3 = -0.1;
    FunctionalTheoryModel th = two_three_theory(u1, u2, u3, k1, k3);
    const CMatrix& w = th.interaction.entries;
    CHECK(w(0, 3) == Complex(u1, 0));
    CHECK(w(1, 4) == Complex(u2, 0));
    CHECK(w(2, 5) == Complex(u3, 0));
    CHECK(w(0, 0) == Complex(k1, 0));
    CHECK(w(2, 2) == Complex(k3, 0));
    CHECK(w(0, 1) == Complex(1, 0));
    CHECK(w(1, 2) == Complex(1, 0));
    CHECK(w(0, 2) == Complex(0, 0));
    CHECK(hermiticity_defect(w) < 1e-14);
    // the reference facet state has density (1, 1) and energy 3k1/4 + k3/4
    CVector phi = CVector::Zero(6);
    phi(0) = std::sqrt(3.0) / 2.0;
    phi(2) = 0.5;
    QuantumState st = QuantumState::pure(phi);
    DensityVector rho = density_of_state(th, st);
    CHECK(rho(0) == doctest::Approx(1.0));
    CHECK(rho(1) == doctest::Approx(1.0));
    CHECK(phi.dot(w * phi).real() ==
          doctest::Approx(0.75 * k1 + 0.25 * k3));
}

TEST_CASE("dimer theory interaction is the rotated site occupation") {
    int n = 3;
    FunctionalTheoryModel flat = dimer_theory(n, 0.0);
    // theta = 0: diagonal with entries (N-k)^2 + k^2
    for (int i = 0; i <= n; ++i) {
        double k = i;
        CHECK(flat.interaction.entries(i, i).real() ==
              doctest::Approx((n - k) * (n - k) + k * k));
        for (int j = 0; j <= n; ++j)
            if (i != j)
                CHECK(std::abs(flat.interaction.entries(i, j)) < 1e-12);
    }
    // rotation preserves the spectrum
    FunctionalTheoryModel rot = dimer_theory(n, 1.1);
    EigSystem e1 = hermitian_eig(flat.interaction.entries);
    EigSystem e2 = hermitian_eig(rot.interaction.entries);
    CHECK((e1.values - e2.values).norm() < 1e-10);
}
