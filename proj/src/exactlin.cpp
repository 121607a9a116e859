#include "gdft/exactlin.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace gdft {

std::int64_t int_gcd(std::int64_t a, std::int64_t b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational::Rational(std::int64_t n) : num(n), den(1) {}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    normalize();
}

void Rational::normalize() {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = int_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}
Rational Rational::operator/(const Rational& o) const {
    return Rational(num * o.den, den * o.num);
}

namespace {

// Gauss-Jordan over Q.  Returns pivot column per pivot row; `a` is reduced in
// place to reduced row echelon form.
std::vector<int> rref(std::vector<std::vector<Rational>>& a, int ncols) {
    std::vector<int> pivots;
    int row = 0;
    int nrows = static_cast<int>(a.size());
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int piv = -1;
        for (int i = row; i < nrows; ++i) {
            if (!a[i][col].is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(a[row], a[piv]);
        Rational inv = Rational(1) / a[row][col];
        for (int j = 0; j < ncols; ++j) a[row][j] = a[row][j] * inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (int j = 0; j < ncols; ++j)
                a[i][j] = a[i][j] - f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int int_rank(const IMatrix& a) {
    if (a.empty()) return 0;
    int ncols = static_cast<int>(a[0].size());
    std::vector<std::vector<Rational>> q(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        q[i].assign(a[i].begin(), a[i].end());
    }
    return static_cast<int>(rref(q, ncols).size());
}

IMatrix int_nullspace(const IMatrix& a, int ncols) {
    std::vector<std::vector<Rational>> q(a.size());
    for (size_t i = 0; i < a.size(); ++i) q[i].assign(a[i].begin(), a[i].end());
    std::vector<int> pivots = rref(q, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;

    IMatrix basis;
    for (int free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        // Solution with x_free = 1, other free vars 0.
        std::vector<Rational> x(ncols, Rational(0));
        x[free_col] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r) {
            x[pivots[r]] = Rational(0) - q[r][free_col];
        }
        // Clear denominators.
        std::int64_t lcm = 1;
        for (const auto& xi : x) lcm = lcm / int_gcd(lcm, xi.den) * xi.den;
        IVector v(ncols);
        for (int j = 0; j < ncols; ++j) v[j] = x[j].num * (lcm / x[j].den);
        basis.push_back(primitive(std::move(v)));
    }
    return basis;
}

std::int64_t int_dot(const IVector& a, const IVector& b) {
    std::int64_t s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IVector primitive(IVector v) {
    std::int64_t g = 0;
    for (std::int64_t x : v) g = int_gcd(g, x);
    if (g > 1) {
        for (std::int64_t& x : v) x /= g;
    }
    for (std::int64_t x : v) {
        if (x != 0) {
            if (x < 0) {
                for (std::int64_t& y : v) y = -y;
            }
            break;
        }
    }
    return v;
}

}  // namespace gdft
