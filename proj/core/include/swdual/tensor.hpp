#pragma once

// The tensor space V^{(x)r} for V = k^n: its basis is indexed by
// multi-indices (r-tuples with entries in [1, n]), ranked in mixed radix
// with the leftmost tensor slot most significant.  Provides the
// place-permutation operators of the symmetric group, r-fold Kronecker
// powers of n x n matrices, and weights of simple tensors.
//
// Place permutation is a left action: sigma sends the basis vector indexed
// by j to the one indexed by sigma.j where (sigma.j)_a = j_{sigma^{-1}(a)},
// so P(sigma tau) = P(sigma) P(tau).

#include "swdual/bigint.hpp"
#include "swdual/config.hpp"
#include "swdual/errors.hpp"
#include "swdual/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace swdual {

// r-tuple with 1-based entries in [1, n].
struct MultiIndex {
    int n = 1;
    int r = 0;
    std::vector<int> entries;
};

// n^r as long long, guarded by the tensor-dimension cap.
inline long long tensor_dim(int n, int r, const Caps& caps) {
    if (n < 1 || r < 0) throw UsageError("tensor space requires n >= 1, r >= 0");
    long long d = 1;
    for (int i = 0; i < r; ++i) {
        d *= n;
        if (d > caps.max_tensor_dim)
            throw ResourceLimitError("tensor dimension cap exceeded: n^r > max_tensor_dim = " +
                                     std::to_string(caps.max_tensor_dim));
    }
    return d;
}

inline void check_multi_index(const MultiIndex& i) {
    if (i.n < 1 || i.r < 0 || static_cast<int>(i.entries.size()) != i.r)
        throw UsageError("malformed multi-index");
    for (int e : i.entries)
        if (e < 1 || e > i.n) throw UsageError("multi-index entry out of range");
}

// Mixed-radix rank: leftmost slot most significant, digit = entry - 1.
inline long long rank_index(const MultiIndex& i) {
    check_multi_index(i);
    long long k = 0;
    for (int a = 0; a < i.r; ++a) k = k * i.n + (i.entries[a] - 1);
    return k;
}

inline MultiIndex unrank_index(long long k, int n, int r) {
    if (n < 1 || r < 0) throw UsageError("tensor space requires n >= 1, r >= 0");
    long long d = 1;
    for (int i = 0; i < r; ++i) d *= n;
    if (k < 0 || k >= d) throw UsageError("rank out of range: " + std::to_string(k));
    MultiIndex i;
    i.n = n;
    i.r = r;
    i.entries.assign(static_cast<std::size_t>(r), 1);
    for (int a = r - 1; a >= 0; --a) {
        i.entries[static_cast<std::size_t>(a)] = static_cast<int>(k % n) + 1;
        k /= n;
    }
    return i;
}

// weight(i)_c = #{a : entries[a] = c}; the parts sum to r.
inline std::vector<int> weight(const MultiIndex& i) {
    check_multi_index(i);
    std::vector<int> w(static_cast<std::size_t>(i.n), 0);
    for (int e : i.entries) ++w[static_cast<std::size_t>(e - 1)];
    return w;
}

// ---------------------------------------------------------------------------
// permutations (0-based images: sigma[a] is where a goes)
// ---------------------------------------------------------------------------

using Perm = std::vector<int>;

inline Perm perm_identity(int r) {
    Perm p(static_cast<std::size_t>(r));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline Perm perm_inverse(const Perm& s) {
    Perm inv(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) inv[static_cast<std::size_t>(s[a])] = static_cast<int>(a);
    return inv;
}

// (s o t)(a) = s(t(a)) — t applies first.
inline Perm perm_compose(const Perm& s, const Perm& t) {
    if (s.size() != t.size()) throw UsageError("permutation size mismatch");
    Perm r(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) r[a] = s[static_cast<std::size_t>(t[a])];
    return r;
}

// All r! permutations in lexicographic order, cap-guarded.
inline std::vector<Perm> symmetric_group_elements(int r, const Caps& caps) {
    if (r < 0) throw UsageError("negative permutation degree");
    BigInt fac = big_factorial(static_cast<unsigned long>(r));
    if (fac > big_of(caps.max_factorial))
        throw ResourceLimitError("factorial cap exceeded: r! = " + fac.get_str() +
                                 " > max_factorial = " + std::to_string(caps.max_factorial));
    std::vector<Perm> out;
    Perm p = perm_identity(r);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// The transpositions (a, a+1) for a = 0 .. r-2; they generate S_r.
inline std::vector<Perm> adjacent_transpositions(int r) {
    std::vector<Perm> out;
    for (int a = 0; a + 1 < r; ++a) {
        Perm p = perm_identity(r);
        std::swap(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(a) + 1]);
        out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------------------
// operators on V^{(x)r}
// ---------------------------------------------------------------------------

// 0/1 matrix sending coordinate rank(j) to rank(sigma.j).
template <class K>
Mat<K> place_permutation_operator(const K& k, const Perm& sigma, int n, int r, const Caps& caps) {
    if (static_cast<int>(sigma.size()) != r) throw UsageError("permutation degree must equal r");
    const long long D = tensor_dim(n, r, caps);
    const Perm inv = perm_inverse(sigma);
    Mat<K> P(k, static_cast<int>(D), static_cast<int>(D));
    std::vector<int> digits(static_cast<std::size_t>(r), 0); // 0-based digits of jj
    for (long long jj = 0; jj < D; ++jj) {
        long long rest = jj;
        for (int a = r - 1; a >= 0; --a) {
            digits[static_cast<std::size_t>(a)] = static_cast<int>(rest % n);
            rest /= n;
        }
        long long target = 0;
        for (int a = 0; a < r; ++a)
            target = target * n + digits[static_cast<std::size_t>(inv[static_cast<std::size_t>(a)])];
        P.at(static_cast<int>(target), static_cast<int>(jj)) = k.one();
    }
    return P;
}

// g^{(x)r}, the r-fold Kronecker power, consistent with rank_index ordering
// (leftmost factor most significant).
template <class K>
Mat<K> tensor_power_operator(const K& k, const Mat<K>& g, int r, const Caps& caps) {
    if (!g.is_square()) throw UsageError("tensor power requires a square matrix");
    tensor_dim(g.rows, r, caps); // cap check
    Mat<K> result = Mat<K>::identity(k, 1);
    for (int s = 0; s < r; ++s) result = kron(result, g);
    return result;
}

} // namespace swdual
