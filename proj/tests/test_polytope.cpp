#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gdft/polytope.hpp"

using namespace gdft;

TEST_CASE("unit square hull") {
    RMatrix pts(2, 5);
    pts << 0, 1, 0, 1, 0.5,  // includes an interior point
        0, 0, 1, 1, 0.5;
    Polytope poly = build_polytope(pts);
    CHECK(poly.dim == 2);
    CHECK(poly.integral == false);  // 0.5 entries break integrality
    CHECK(poly.facets.size() == 4);
    CHECK(poly.vertices.size() == 4);
    RVector in(2), out(2);
    in << 0.3, 0.9;
    out << 1.2, 0.5;
    CHECK(polytope_contains(poly, in));
    CHECK_FALSE(polytope_contains(poly, out));
    CHECK(in_relative_interior(poly, in));
    RVector edge(2);
    edge << 1.0, 0.5;
    CHECK(polytope_contains(poly, edge));
    CHECK_FALSE(in_relative_interior(poly, edge));
    CHECK(active_facets(poly, edge).size() == 1);
}

TEST_CASE("integral triangle carries exact facet data") {
    RMatrix pts(2, 3);
    pts << 0, 4, 0, 0, 0, 4;
    Polytope poly = build_polytope(pts);
    CHECK(poly.integral);
    REQUIRE(poly.facets.size() == 3);
    for (const Facet& f : poly.facets) {
        CHECK(f.exact);
        REQUIRE(f.int_normal.size() == 2);
        // primitive integer normal: gcd 1
        CHECK(int_gcd(std::abs(f.int_normal[0]), std::abs(f.int_normal[1])) ==
              1);
        // inequality holds on every generating point
        for (int c = 0; c < pts.cols(); ++c) {
            double slack = f.offset - f.normal.dot(pts.col(c));
            CHECK(slack > -1e-12);
        }
        CHECK(f.support.size() == 2);
    }
}

TEST_CASE("degenerate segment embedded in the plane") {
    RMatrix pts(2, 3);
    pts << 0, 2, 4, 0, 2, 4;  // collinear along the diagonal
    Polytope poly = build_polytope(pts);
    CHECK(poly.dim == 1);
    CHECK(poly.facets.size() == 2);
    CHECK(poly.vertices.size() == 2);
    RVector mid(2), off(2);
    mid << 1, 1;
    off << 1, 1.5;
    CHECK(polytope_contains(poly, mid));
    CHECK_FALSE(polytope_contains(poly, off));  // outside the affine hull
    CHECK(in_relative_interior(poly, mid));
}

TEST_CASE("single point polytope") {
    RMatrix pts(2, 1);
    pts << 3, 1;
    Polytope poly = build_polytope(pts);
    CHECK(poly.dim == 0);
    RVector same(2);
    same << 3, 1;
    CHECK(polytope_contains(poly, same));
}

TEST_CASE("halfspace_vertices recovers the unit square") {
    RMatrix a(4, 2);
    a << 1, 0, -1, 0, 0, 1, 0, -1;
    RVector b(4);
    b << 1, 0, 1, 0;
    RMatrix v = halfspace_vertices(a, b);
    REQUIRE(v.cols() == 4);
    Polytope poly = build_polytope(v);
    CHECK(poly.dim == 2);
    CHECK(poly.facets.size() == 4);
}

TEST_CASE("binomial_capped") {
    CHECK(binomial_capped(5, 2, 1000) == 10);
    CHECK(binomial_capped(100, 50, 1000) == 1000);  // saturates
    CHECK(binomial_capped(4, 0, 1000) == 1);
    CHECK(binomial_capped(3, 5, 1000) == 0);
}
