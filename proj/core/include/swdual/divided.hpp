#pragma once

// Integer-exact generators of the Kostant Z-form acting on the integral
// tensor space: the derivation action e_ij (a sum over tensor slots), its
// divided powers e_ij^m / m! (entrywise divisibility by m! is asserted
// before the exact division — a built-in self-check that must never fire),
// the diagonal binomial operators binom(e_ii, m), their reductions into any
// coefficient field through the prime subfield, and the one-parameter
// operators E_ij(t) with the two interpolation identities
//
//   (a)  E_ij(t)^{(x)r} = sum_{m=0}^{r} t^m (e_ij^m / m!)      (i != j)
//   (b)  E_ii(t)^{(x)r} = sum_{m=0}^{r} t^m binom(e_ii, m)
//
// plus the Vandermonde solve that recovers the coefficient operators from
// r+1 evaluations — the mechanism that turns finitely many group elements
// into the full divided-power family.

#include "swdual/bigint.hpp"
#include "swdual/config.hpp"
#include "swdual/errors.hpp"
#include "swdual/linalg.hpp"
#include "swdual/tensor.hpp"

#include <string>
#include <vector>

namespace swdual {

// Dense matrix of arbitrary-precision integers.
struct ZMat {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> a;

    ZMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, BigInt(0)) {
        if (r < 0 || c < 0) throw UsageError("negative matrix dimension");
    }

    static ZMat identity(int n) {
        ZMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    BigInt& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const BigInt& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    bool operator==(const ZMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    bool is_zero() const {
        for (const BigInt& v : a)
            if (v != 0) return false;
        return true;
    }

    ZMat mul(const ZMat& o) const {
        if (cols != o.rows) throw UsageError("matrix shape mismatch in product");
        ZMat r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int t = 0; t < cols; ++t) {
                const BigInt& f = at(i, t);
                if (f == 0) continue;
                for (int j = 0; j < o.cols; ++j) {
                    if (o.at(t, j) == 0) continue;
                    mpz_addmul(r.at(i, j).get_mpz_t(), f.get_mpz_t(), o.at(t, j).get_mpz_t());
                }
            }
        return r;
    }

    ZMat pow(unsigned long e) const {
        if (rows != cols) throw UsageError("matrix power requires a square matrix");
        ZMat result = identity(rows);
        ZMat base = *this;
        while (e > 0) {
            if (e & 1ul) result = result.mul(base);
            base = base.mul(base);
            e >>= 1;
        }
        return result;
    }

    // Exact division of every entry; remainder => internal-consistency error.
    ZMat div_exact(const BigInt& d, const std::string& what) const {
        ZMat r(rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!mpz_divisible_p(a[i].get_mpz_t(), d.get_mpz_t()))
                throw InternalError("integrality failure in " + what + ": entry " +
                                    a[i].get_str() + " is not divisible by " + d.get_str());
            mpz_divexact(r.a[i].get_mpz_t(), a[i].get_mpz_t(), d.get_mpz_t());
        }
        return r;
    }

    BigInt max_abs() const {
        BigInt m(0);
        for (const BigInt& v : a) {
            BigInt x = abs(v);
            if (x > m) m = x;
        }
        return m;
    }
};

// The derivation action of the matrix unit e_ij on the integral tensor
// space: sum over slots of 1 (x) ... (x) e_ij (x) ... (x) 1.  For i = j it
// is diagonal with entry weight(j)_i.
inline ZMat e_matrix(int i, int j, int n, int r, const Caps& caps) {
    if (i < 1 || i > n || j < 1 || j > n) throw UsageError("matrix-unit index out of range");
    const long long D = tensor_dim(n, r, caps);
    ZMat m(static_cast<int>(D), static_cast<int>(D));
    for (long long jj = 0; jj < D; ++jj) {
        MultiIndex mj = unrank_index(jj, n, r);
        for (int a = 0; a < r; ++a) {
            if (mj.entries[static_cast<std::size_t>(a)] != j) continue;
            MultiIndex target = mj;
            target.entries[static_cast<std::size_t>(a)] = i;
            m.at(static_cast<int>(rank_index(target)), static_cast<int>(jj)) += 1;
        }
    }
    return m;
}

// e_ij^m / m! for i != j, computed over the integers and divided exactly.
// The operator is nilpotent on the r-fold tensor space, so the result is
// the zero matrix whenever m > r (this is a theorem the tests confirm, not
// a shortcut taken here).
inline ZMat divided_power(int i, int j, int m, int n, int r, const Caps& caps) {
    if (i == j) throw UsageError("divided powers require i != j (use binomial_diag on the diagonal)");
    if (m < 0) throw UsageError("negative divided-power exponent");
    ZMat power = e_matrix(i, j, n, r, caps).pow(static_cast<unsigned long>(m));
    return power.div_exact(big_factorial(static_cast<unsigned long>(m)),
                           "divided power e_" + std::to_string(i) + std::to_string(j) + "^" +
                               std::to_string(m) + "/" + std::to_string(m) + "!");
}

// binom(e_ii, m): diagonal with entry binom(weight(j)_i, m) — zero as soon
// as m exceeds every weight, in particular for m > r.
inline ZMat binomial_diag(int i, int m, int n, int r, const Caps& caps) {
    if (i < 1 || i > n) throw UsageError("matrix-unit index out of range");
    if (m < 0) throw UsageError("negative binomial order");
    const long long D = tensor_dim(n, r, caps);
    ZMat out(static_cast<int>(D), static_cast<int>(D));
    for (long long jj = 0; jj < D; ++jj) {
        MultiIndex mj = unrank_index(jj, n, r);
        const int w = weight(mj)[static_cast<std::size_t>(i - 1)];
        out.at(static_cast<int>(jj), static_cast<int>(jj)) =
            big_binomial(static_cast<unsigned long>(w), static_cast<unsigned long>(m));
    }
    return out;
}

// Entrywise image of an integral operator in the field (through the prime
// subfield in positive characteristic; the identity embedding into Q).
template <class K>
Mat<K> reduce_mod(const K& k, const ZMat& z) {
    Mat<K> m(k, z.rows, z.cols);
    for (std::size_t i = 0; i < z.a.size(); ++i)
        if (z.a[i] != 0) m.a[i] = k.from_bigint(z.a[i]);
    return m;
}

// The r-th tensor power of I + t * (matrix unit)_ij; for i = j the base
// matrix must stay invertible, i.e. t != -1.
template <class K>
Mat<K> E_operator(const K& k, int i, int j, const typename K::Elem& t, int n, int r,
                  const Caps& caps) {
    if (i < 1 || i > n || j < 1 || j > n) throw UsageError("matrix-unit index out of range");
    Mat<K> base = Mat<K>::identity(k, n);
    base.at(i - 1, j - 1) = k.add(base.at(i - 1, j - 1), t);
    if (i == j && k.is_zero(base.at(i - 1, j - 1)))
        throw UsageError("singular operator: E_ii(t) with 1 + t = 0");
    return tensor_power_operator(k, base, r, caps);
}

// (a): E_ij(t)^{(x)r} = sum_{m<=r} t^m (e_ij^m/m!), exact equality.
template <class K>
bool verify_formula_a(const K& k, int i, int j, const typename K::Elem& t, int n, int r,
                      const Caps& caps) {
    if (i == j) throw UsageError("formula (a) requires i != j");
    const Mat<K> lhs = E_operator(k, i, j, t, n, r, caps);
    const long long D = tensor_dim(n, r, caps);
    Mat<K> rhs(k, static_cast<int>(D), static_cast<int>(D));
    auto tm = k.one();
    for (int m = 0; m <= r; ++m) {
        rhs = rhs.add(reduce_mod(k, divided_power(i, j, m, n, r, caps)).scaled(tm));
        tm = k.mul(tm, t);
    }
    return lhs == rhs;
}

// (b): E_ii(t)^{(x)r} = sum_{m<=r} t^m binom(e_ii, m), t != -1.
template <class K>
bool verify_formula_b(const K& k, int i, const typename K::Elem& t, int n, int r,
                      const Caps& caps) {
    if (k.is_zero(k.add(k.one(), t)))
        throw UsageError("formula (b) requires t != -1");
    const Mat<K> lhs = E_operator(k, i, i, t, n, r, caps);
    const long long D = tensor_dim(n, r, caps);
    Mat<K> rhs(k, static_cast<int>(D), static_cast<int>(D));
    auto tm = k.one();
    for (int m = 0; m <= r; ++m) {
        rhs = rhs.add(reduce_mod(k, binomial_diag(i, m, n, r, caps)).scaled(tm));
        tm = k.mul(tm, t);
    }
    return lhs == rhs;
}

// Solves values_l = sum_m points_l^m c_m for the coefficient operators c_m.
// The coefficient matrix is Vandermonde, hence invertible for distinct
// points; applied to values phi(E_ij(t_l)) this recovers every divided
// power from finitely many group elements.
template <class K>
std::vector<Mat<K>> vandermonde_solve(const K& k, const std::vector<typename K::Elem>& points,
                                      const std::vector<Mat<K>>& values) {
    const int s = static_cast<int>(points.size());
    if (s == 0) throw UsageError("interpolation needs at least one point");
    if (values.size() != points.size())
        throw UsageError("interpolation needs as many values as points");
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b)
            if (points[static_cast<std::size_t>(a)] == points[static_cast<std::size_t>(b)])
                throw UsageError("singular interpolation system: repeated points");
    if (k.field().is_finite() && k.field().cardinality < s)
        throw UsageError("too few field elements: interpolation at " + std::to_string(s) +
                         " points needs a field with at least " + std::to_string(s) +
                         " elements");

    // invert the Vandermonde matrix via rref([V | I])
    Mat<K> aug(k, s, 2 * s);
    for (int l = 0; l < s; ++l) {
        auto pm = k.one();
        for (int m = 0; m < s; ++m) {
            aug.at(l, m) = pm;
            pm = k.mul(pm, points[static_cast<std::size_t>(l)]);
        }
        aug.at(l, s + l) = k.one();
    }
    RrefResult<K> R = rref(std::move(aug));
    if (static_cast<int>(R.pivots.size()) != s ||
        !std::all_of(R.pivots.begin(), R.pivots.end(), [s](int p) { return p < s; }))
        throw InternalError("Vandermonde matrix with distinct points failed to invert");

    std::vector<Mat<K>> out;
    out.reserve(static_cast<std::size_t>(s));
    const int vr = values[0].rows, vc = values[0].cols;
    for (int m = 0; m < s; ++m) {
        Mat<K> c(k, vr, vc);
        for (int l = 0; l < s; ++l) {
            const auto& w = R.m.at(m, s + l);
            if (!k.is_zero(w)) c = c.add(values[static_cast<std::size_t>(l)].scaled(w));
        }
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace swdual
