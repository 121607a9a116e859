#ifndef GDFT_EXACTLIN_HPP
#define GDFT_EXACTLIN_HPP

#include <cstdint>
#include <vector>

namespace gdft {

// Small exact rational arithmetic used for the combinatorial decisions in
// polytope construction when all input points are integral (facet identity
// must be exact because it drives boundary-force denominators).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool is_zero() const { return num == 0; }
    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
    double to_double() const { return static_cast<double>(num) / den; }

  private:
    void normalize();
};

using IVector = std::vector<std::int64_t>;
using IMatrix = std::vector<IVector>;  // row-major

// Rank of an integer matrix, exactly.
int int_rank(const IMatrix& a);

// Integer basis (as rows) of { x : a x = 0 }, each basis vector primitive
// (componentwise gcd 1).
IMatrix int_nullspace(const IMatrix& a, int ncols);

// Exact dot product.
std::int64_t int_dot(const IVector& a, const IVector& b);

// Divides the vector by the gcd of its entries (no-op on the zero vector)
// and flips sign so the first nonzero entry is positive.
IVector primitive(IVector v);

std::int64_t int_gcd(std::int64_t a, std::int64_t b);

}  // namespace gdft

#endif  // GDFT_EXACTLIN_HPP
