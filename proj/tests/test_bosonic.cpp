#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <vector>

#include "gdft/bosonic.hpp"
#include "gdft/search.hpp"

using namespace gdft;

namespace {

// Independent second-quantization oracle: acts on the full N-boson basis
// (every occupation with sum N, own ascending enumeration) and applies the
// ladder operators step by step with floating-point square roots.
struct FockOracle {
    int d;
    std::vector<std::vector<int>> basis;
    std::map<std::vector<int>, int> index;
    CMatrix w;

    FockOracle(int d_, int n) : d(d_) {
        std::vector<int> m(d, 0);
        enumerate(0, n, m);
        for (size_t i = 0; i < basis.size(); ++i)
            index[basis[i]] = static_cast<int>(i);
        const int dim = static_cast<int>(basis.size());
        w = CMatrix::Zero(dim, dim);
        for (int col = 0; col < dim; ++col) {
            for (int k1 = 0; k1 < d; ++k1)
                for (int k2 = 0; k2 < d; ++k2)
                    for (int k3 = 0; k3 < d; ++k3)
                        for (int k4 = 0; k4 < d; ++k4) {
                            if ((k1 + k2) % d != (k3 + k4) % d) continue;
                            std::vector<int> t = basis[col];
                            double amp = 1.0;
                            if (t[k4] == 0) continue;
                            amp *= std::sqrt(static_cast<double>(t[k4]--));
                            if (t[k3] == 0) continue;
                            amp *= std::sqrt(static_cast<double>(t[k3]--));
                            amp *= std::sqrt(static_cast<double>(++t[k2]));
                            amp *= std::sqrt(static_cast<double>(++t[k1]));
                            w(index.at(t), col) += amp / d;
                        }
        }
    }

    void enumerate(int mode, int left, std::vector<int>& m) {
        if (mode == d - 1) {
            m[mode] = left;
            basis.push_back(m);
            return;
        }
        for (int occ = 0; occ <= left; ++occ) {
            m[mode] = occ;
            enumerate(mode + 1, left - occ, m);
        }
    }

    int momentum(const std::vector<int>& m) const {
        int p = 0;
        for (int k = 0; k < d; ++k) p = (p + k * m[k]) % d;
        return p;
    }
};

}  // namespace

TEST_CASE("permanent enumeration order and sector completeness") {
    auto p240 = enumerate_permanents(2, 4, 0);
    REQUIRE(p240.size() == 3);
    CHECK(p240[0].m == std::vector<int>{4, 0});
    CHECK(p240[1].m == std::vector<int>{2, 2});
    CHECK(p240[2].m == std::vector<int>{0, 4});
    auto p241 = enumerate_permanents(2, 4, 1);
    REQUIRE(p241.size() == 2);
    CHECK(p241[0].m == std::vector<int>{3, 1});
    CHECK(p241[1].m == std::vector<int>{1, 3});
    auto p331 = enumerate_permanents(3, 3, 1);
    REQUIRE(p331.size() == 3);
    CHECK(p331[0].m == std::vector<int>{2, 1, 0});
    CHECK(p331[1].m == std::vector<int>{1, 0, 2});
    CHECK(p331[2].m == std::vector<int>{0, 2, 1});
    // sum over momentum sectors recovers the full space dimension
    for (auto [d, n] : {std::pair{3, 4}, std::pair{4, 3}}) {
        size_t total = 0;
        for (int p = 0; p < d; ++p)
            total += enumerate_permanents(d, n, p).size();
        // C(n + d - 1, d - 1)
        size_t full = 1;
        for (int i = 1; i <= d - 1; ++i)
            full = full * (n + i) / i;
        CHECK(total == full);
    }
}

TEST_CASE("hubbard interaction frozen small cases") {
    CMatrix w220 = hubbard_interaction(2, 2, 0);
    REQUIRE(w220.rows() == 2);
    CHECK(std::abs(w220(0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(w220(0, 1) - 1.0) < 1e-12);
    CHECK(std::abs(w220(1, 0) - 1.0) < 1e-12);
    CHECK(std::abs(w220(1, 1) - 1.0) < 1e-12);

    // (3,6,0): diagonal at |0,6,0> is N(N-1)/3 = 10, and the only coupling of
    // |0,6,0> is to |1,4,1> with (2/3)sqrt(30)
    auto perms = enumerate_permanents(3, 6, 0);
    CMatrix w = hubbard_interaction(3, 6, 0);
    int i060 = -1, i141 = -1;
    for (size_t i = 0; i < perms.size(); ++i) {
        if (perms[i].m == std::vector<int>{0, 6, 0})
            i060 = static_cast<int>(i);
        if (perms[i].m == std::vector<int>{1, 4, 1})
            i141 = static_cast<int>(i);
    }
    REQUIRE(i060 >= 0);
    REQUIRE(i141 >= 0);
    CHECK(std::abs(w(i060, i060) - 10.0) < 1e-10);
    CHECK(std::abs(w(i141, i060) - (2.0 / 3.0) * std::sqrt(30.0)) < 1e-10);
}

TEST_CASE("hubbard matches the full Fock oracle blockwise") {
    FockOracle oracle(3, 4);
    for (int p = 0; p < 3; ++p) {
        auto perms = enumerate_permanents(3, 4, p);
        CMatrix w = hubbard_interaction(3, 4, p);
        for (size_t a = 0; a < perms.size(); ++a) {
            for (size_t b = 0; b < perms.size(); ++b) {
                int ia = oracle.index.at(perms[a].m);
                int ib = oracle.index.at(perms[b].m);
                CHECK(std::abs(w(static_cast<int>(a), static_cast<int>(b)) -
                               oracle.w(ia, ib)) < 1e-10);
            }
        }
    }
    // momentum grading: no matrix elements between different sectors
    for (size_t a = 0; a < oracle.basis.size(); ++a) {
        for (size_t b = 0; b < oracle.basis.size(); ++b) {
            if (oracle.momentum(oracle.basis[a]) !=
                oracle.momentum(oracle.basis[b])) {
                CHECK(std::abs(oracle.w(static_cast<int>(a),
                                        static_cast<int>(b))) == 0.0);
            }
        }
    }
}

TEST_CASE("interaction_from_tensor reproduces the contact interaction") {
    int d = 3;
    std::vector<Complex> tensor(d * d * d * d, Complex(0, 0));
    for (int k1 = 0; k1 < d; ++k1)
        for (int k2 = 0; k2 < d; ++k2)
            for (int k3 = 0; k3 < d; ++k3)
                for (int k4 = 0; k4 < d; ++k4)
                    if ((k1 + k2) % d == (k3 + k4) % d)
                        tensor[((k1 * d + k2) * d + k3) * d + k4] =
                            Complex(1.0 / d, 0.0);
    CMatrix a = interaction_from_tensor(3, 3, 1, tensor);
    CMatrix b = hubbard_interaction(3, 3, 1);
    CHECK((a - b).norm() < 1e-12);
}

TEST_CASE("functional form matrices for (2,4,0)") {
    FunctionalTheoryModel th = build_bosonic_theory(2, 4, 0);
    WeightDecomposition wd = weight_decomposition(th);
    Polytope domain = representable_polytope(wd);
    auto perms = enumerate_permanents(2, 4, 0);
    FunctionalFormModel ff = functional_form(domain, perms);
    REQUIRE(ff.T.rows() == 2);
    REQUIRE(ff.T.cols() == 3);
    RMatrix t_expect(2, 3);
    t_expect << 4, 2, 0, 0, 2, 4;
    CHECK((ff.T - t_expect).cwiseAbs().maxCoeff() < 1e-12);
    RMatrix tp_expect(3, 2);
    tp_expect << 5, -1, 2, 2, -1, 5;
    tp_expect /= 24.0;
    CHECK((ff.T_plus - tp_expect).cwiseAbs().maxCoeff() < 1e-12);
    REQUIRE(ff.kernel_basis.cols() == 1);
    RVector k = ff.kernel_basis.col(0);
    // proportional to (-1, 2, -1)
    CHECK(std::abs(k(0) - k(2)) < 1e-12);
    CHECK(std::abs(k(1) + 2.0 * k(0)) < 1e-12);
    CHECK((ff.T * k).norm() < 1e-12);
}

TEST_CASE("simplex functional on (3,3,1) Hubbard") {
    FunctionalTheoryModel th = build_bosonic_theory(3, 3, 1);
    WeightDecomposition wd = weight_decomposition(th);
    Polytope domain = representable_polytope(wd);
    CMatrix w = th.interaction.entries;
    double u0 = w(0, 0).real();
    double u1 = w(0, 1).real();
    // the Hubbard form: constant diagonal, constant off-diagonal
    for (int i = 0; i < 3; ++i) CHECK(std::abs(w(i, i).real() - u0) < 1e-12);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(std::abs(w(i, j) - Complex(u1, 0)) < 1e-12);

    // barycenter: triangle inequality satisfied -> U0 - U1
    DensityVector rho(3);
    rho << 1, 1, 1;
    CHECK(simplex_functional(th, domain, rho) ==
          doctest::Approx(u0 - u1).epsilon(1e-9));

    // vertex -> diagonal element
    DensityVector vtx(3);
    vtx << 2, 1, 0;
    CHECK(simplex_functional(th, domain, vtx) ==
          doctest::Approx(u0).epsilon(1e-9));

    // outside the triangle region: one sqrt(D) dominates
    RMatrix verts(3, 3);
    verts.col(0) << 2, 1, 0;
    verts.col(1) << 1, 0, 2;
    verts.col(2) << 0, 2, 1;
    RVector y(3);
    y << 0.81, 0.04, 0.15;
    DensityVector rho2 = verts * y;
    RVector d_val = 3.0 * y;  // D at rho2, using L = 3
    int cmax = 0;
    for (int i = 1; i < 3; ++i)
        if (d_val(i) > d_val(cmax)) cmax = i;
    int a = (cmax + 1) % 3, b = (cmax + 2) % 3;
    double expect =
        u0 + (2.0 / 3.0) * u1 *
                 (std::sqrt(d_val(a) * d_val(b)) -
                  std::sqrt(d_val(b) * d_val(cmax)) -
                  std::sqrt(d_val(cmax) * d_val(a)));
    CHECK(simplex_functional(th, domain, rho2) ==
          doctest::Approx(expect).epsilon(1e-7));

    // agreement with the generic constrained search
    SearchOptions opts;
    opts.multistarts = 16;
    CHECK(simplex_functional(th, domain, rho) ==
          doctest::Approx(pure_functional(th, rho, opts).value).epsilon(1e-6));
}

TEST_CASE("simplex functional rejects non-simplex settings") {
    FunctionalTheoryModel th = build_bosonic_theory(2, 4, 0);
    WeightDecomposition wd = weight_decomposition(th);
    Polytope domain = representable_polytope(wd);
    DensityVector rho(2);
    rho << 2, 2;
    CHECK_THROWS_AS(simplex_functional(th, domain, rho), GdftError);
}

TEST_CASE("bosonic theory potentials are the momentum occupations") {
    FunctionalTheoryModel th = build_bosonic_theory(2, 4, 1);
    CHECK(th.hilbert_dim == 2);
    CHECK(th.labels == std::vector<std::string>{"n0", "n1"});
    auto perms = enumerate_permanents(2, 4, 1);
    for (int k = 0; k < 2; ++k)
        for (size_t i = 0; i < perms.size(); ++i)
            CHECK(th.potential_basis[k]
                      .entries(static_cast<int>(i), static_cast<int>(i))
                      .real() == doctest::Approx(perms[i].m[k]));
}
