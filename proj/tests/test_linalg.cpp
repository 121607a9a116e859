#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gdft/exactlin.hpp"
#include "gdft/linalg.hpp"

using namespace gdft;

TEST_CASE("kron dimensions and entries") {
    CMatrix a(2, 2), b(2, 2);
    a << 1, 2, 3, 4;
    b << 0, 1, 1, 0;
    CMatrix k = kron(a, b);
    REQUIRE(k.rows() == 4);
    CHECK(k(0, 1) == Complex(1, 0));
    CHECK(k(0, 0) == Complex(0, 0));
    CHECK(k(2, 1) == Complex(3, 0));
    CHECK(k(3, 2) == Complex(4, 0));
}

TEST_CASE("symmetrize_hermitian accepts round-off, rejects modeling errors") {
    CMatrix h(2, 2);
    h << 1.0, Complex(0, 1), Complex(0, -1), 2.0;
    CHECK(hermiticity_defect(h) == doctest::Approx(0.0));
    CMatrix almost = h;
    almost(0, 1) += Complex(1e-14, 0);
    CHECK_NOTHROW(symmetrize_hermitian(almost));
    CMatrix bad = h;
    bad(0, 1) += Complex(1e-3, 0);
    CHECK_THROWS_AS(symmetrize_hermitian(bad), GdftError);
}

TEST_CASE("hermitian_eig on a known 2x2") {
    CMatrix h(2, 2);
    h << 1.0, 2.0, 2.0, 1.0;
    EigSystem es = hermitian_eig(h);
    CHECK(es.values(0) == doctest::Approx(-1.0));
    CHECK(es.values(1) == doctest::Approx(3.0));
    CHECK(min_eigenvalue(h) == doctest::Approx(-1.0));
    // residual of the eigenpair
    CHECK((h * es.vectors.col(0) - es.values(0) * es.vectors.col(0)).norm() <
          1e-12);
}

TEST_CASE("make_rng streams are deterministic and distinct") {
    std::mt19937_64 a = make_rng(42, 0);
    std::mt19937_64 b = make_rng(42, 0);
    std::mt19937_64 c = make_rng(42, 1);
    CHECK(a() == b());
    CHECK(a() != c());
}

TEST_CASE("random_unit_vector has unit norm") {
    std::mt19937_64 rng = make_rng(7);
    for (int i = 0; i < 5; ++i) {
        CHECK(random_unit_vector(6, rng).norm() == doctest::Approx(1.0));
    }
}

TEST_CASE("random_hermitian is Hermitian") {
    std::mt19937_64 rng = make_rng(9);
    CHECK(hermiticity_defect(random_hermitian(5, rng)) < 1e-14);
}

TEST_CASE("real_nullspace and numerical_rank") {
    RMatrix a(2, 3);
    a << 1, 1, 1, 1, 2, 3;
    CHECK(numerical_rank(a) == 2);
    RMatrix ns = real_nullspace(a);
    REQUIRE(ns.cols() == 1);
    CHECK((a * ns).norm() < 1e-12);
    // kernel of [1 1 1; 1 2 3] is spanned by (1, -2, 1)
    RVector v = ns.col(0);
    CHECK(std::abs(v(0) / v(2) - 1.0) < 1e-10);
    CHECK(std::abs(v(1) / v(2) + 2.0) < 1e-10);
}

TEST_CASE("pseudo_inverse and svd_solve agree on least squares") {
    RMatrix a(3, 2);
    a << 1, 0, 0, 1, 1, 1;
    RVector b(3);
    b << 1, 2, 2;
    RVector x1 = svd_solve(a, b);
    RVector x2 = pseudo_inverse(a) * b;
    CHECK((x1 - x2).norm() < 1e-12);
    // Moore-Penrose identities
    RMatrix p = pseudo_inverse(a);
    CHECK((a * p * a - a).norm() < 1e-12);
    CHECK((p * a * p - p).norm() < 1e-12);
}

TEST_CASE("orthonormal_span drops dependent directions") {
    std::vector<RVector> vecs;
    RVector v1(3), v2(3), v3(3);
    v1 << 1, 0, 0;
    v2 << 0, 1, 0;
    v3 << 1, 1, 0;
    vecs = {v1, v2, v3};
    RMatrix q = orthonormal_span(vecs);
    CHECK(q.cols() == 2);
    CHECK((q.transpose() * q - RMatrix::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("exact integer kernels") {
    // rows (1,1,1) and (1,2,3): primitive kernel (1,-2,1)
    IMatrix a = {{1, 1, 1}, {1, 2, 3}};
    CHECK(int_rank(a) == 2);
    IMatrix ns = int_nullspace(a, 3);
    REQUIRE(ns.size() == 1);
    IVector k = ns[0];
    CHECK(int_dot(a[0], k) == 0);
    CHECK(int_dot(a[1], k) == 0);
    CHECK(int_gcd(int_gcd(k[0], k[1]), k[2]) == 1);
    CHECK(primitive({-2, 4, -6}) == IVector{1, -2, 3});
}
