#pragma once

// The Schur algebra S_k(n, r) through its orbit basis: basis elements are
// indexed by S_r-orbits of pairs of multi-indices (i, j), i.e. by multisets
// of r column pairs.  Each basis element acts on V^{(x)r} by the 0/1 matrix
// whose (i, j) entry is 1 exactly when the pair (i, j) lies in the orbit.
// The representation on V^{(x)r} is faithful (the action matrices have
// pairwise disjoint supports), so products and commutants are read off from
// matrices; no abstract structure constants are implemented.

#include "swdual/bigint.hpp"
#include "swdual/config.hpp"
#include "swdual/errors.hpp"
#include "swdual/linalg.hpp"
#include "swdual/tensor.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace swdual {

// Canonical orbit representative: the multiset of per-slot pairs
// (i_a, j_a), stored sorted lexicographically.
struct OrbitIndex {
    int n = 1;
    int r = 0;
    std::vector<std::pair<int, int>> pairs; // sorted, entries 1-based

    bool operator==(const OrbitIndex&) const = default;
};

inline OrbitIndex canonical_orbit(const MultiIndex& i, const MultiIndex& j) {
    check_multi_index(i);
    check_multi_index(j);
    if (i.n != j.n || i.r != j.r)
        throw UsageError("orbit of mismatched multi-indices");
    OrbitIndex w;
    w.n = i.n;
    w.r = i.r;
    w.pairs.reserve(static_cast<std::size_t>(i.r));
    for (int a = 0; a < i.r; ++a)
        w.pairs.emplace_back(i.entries[static_cast<std::size_t>(a)],
                             j.entries[static_cast<std::size_t>(a)]);
    std::sort(w.pairs.begin(), w.pairs.end());
    return w;
}

inline long long schur_dim(int n, int r) {
    if (n < 1 || r < 0) throw UsageError("schur_dim requires n >= 1, r >= 0");
    return to_long(big_binomial(static_cast<unsigned long>(n) * n + r - 1,
                                static_cast<unsigned long>(r)),
                   "schur algebra dimension");
}

// All canonical representatives in lexicographic order: nondecreasing
// r-tuples over the n^2 symbols (i, j), ordered by (i, j).
inline std::vector<OrbitIndex> orbit_basis(int n, int r, const Caps& caps) {
    const long long count = schur_dim(n, r);
    if (count > caps.max_elim_dim)
        throw ResourceLimitError("orbit basis cap exceeded: " + std::to_string(count) +
                                 " > max_elim_dim = " + std::to_string(caps.max_elim_dim));
    std::vector<OrbitIndex> out;
    out.reserve(static_cast<std::size_t>(count));
    const int symbols = n * n;
    std::vector<int> codes(static_cast<std::size_t>(r), 0); // nondecreasing pair codes
    while (true) {
        OrbitIndex w;
        w.n = n;
        w.r = r;
        w.pairs.reserve(static_cast<std::size_t>(r));
        for (int c : codes) w.pairs.emplace_back(c / n + 1, c % n + 1);
        out.push_back(std::move(w));
        // next nondecreasing tuple
        int a = r - 1;
        while (a >= 0 && codes[static_cast<std::size_t>(a)] == symbols - 1) --a;
        if (a < 0) break;
        const int v = codes[static_cast<std::size_t>(a)] + 1;
        for (int b = a; b < r; ++b) codes[static_cast<std::size_t>(b)] = v;
    }
    if (static_cast<long long>(out.size()) != count)
        throw InternalError("orbit basis count disagrees with the binomial formula");
    return out;
}

namespace detail {
inline std::vector<std::pair<int, int>> sorted_pairs_of(const MultiIndex& i, const MultiIndex& j) {
    std::vector<std::pair<int, int>> p;
    p.reserve(static_cast<std::size_t>(i.r));
    for (int a = 0; a < i.r; ++a)
        p.emplace_back(i.entries[static_cast<std::size_t>(a)],
                       j.entries[static_cast<std::size_t>(a)]);
    std::sort(p.begin(), p.end());
    return p;
}
} // namespace detail

// Action matrix of one orbit-basis element.
template <class K>
Mat<K> xi_action_matrix(const K& k, const OrbitIndex& w, const Caps& caps) {
    const long long D = tensor_dim(w.n, w.r, caps);
    detail::check_elim_cap(D * D, caps);
    Mat<K> m(k, static_cast<int>(D), static_cast<int>(D));
    for (long long ii = 0; ii < D; ++ii) {
        const MultiIndex mi = unrank_index(ii, w.n, w.r);
        for (long long jj = 0; jj < D; ++jj) {
            const MultiIndex mj = unrank_index(jj, w.n, w.r);
            if (detail::sorted_pairs_of(mi, mj) == w.pairs)
                m.at(static_cast<int>(ii), static_cast<int>(jj)) = k.one();
        }
    }
    return m;
}

// All action matrices, aligned with orbit_basis order, via one sweep over
// the D^2 index pairs.
template <class K>
std::vector<Mat<K>> all_xi_matrices(const K& k, int n, int r, const Caps& caps) {
    const long long D = tensor_dim(n, r, caps);
    detail::check_elim_cap(D * D, caps);
    const std::vector<OrbitIndex> basis = orbit_basis(n, r, caps);
    std::map<std::vector<std::pair<int, int>>, std::size_t> where;
    for (std::size_t idx = 0; idx < basis.size(); ++idx) where[basis[idx].pairs] = idx;
    std::vector<Mat<K>> mats(basis.size(), Mat<K>(k, static_cast<int>(D), static_cast<int>(D)));
    std::vector<MultiIndex> cache;
    cache.reserve(static_cast<std::size_t>(D));
    for (long long x = 0; x < D; ++x) cache.push_back(unrank_index(x, n, r));
    for (long long ii = 0; ii < D; ++ii)
        for (long long jj = 0; jj < D; ++jj) {
            const auto key = detail::sorted_pairs_of(cache[static_cast<std::size_t>(ii)],
                                                     cache[static_cast<std::size_t>(jj)]);
            mats[where.at(key)].at(static_cast<int>(ii), static_cast<int>(jj)) = k.one();
        }
    return mats;
}

struct SchurIsoResult {
    bool verdict = false;
    long long commutant_dim = 0;
    long long span_dim = 0;
    long long schur = 0;
};

// Checks S_k(n,r) = End_{S_r}(V^{(x)r}): the commutant C of the
// place-permutation action (adjacent transpositions generate S_r), the span
// X of all orbit action matrices, dim C = dim X = schur_dim, and X inside C
// as subspaces.
template <class K>
SchurIsoResult verify_schur_iso(const K& k, int n, int r, const Caps& caps) {
    const long long D = tensor_dim(n, r, caps);
    std::vector<Mat<K>> gens;
    for (const Perm& s : adjacent_transpositions(r))
        gens.push_back(place_permutation_operator(k, s, n, r, caps));
    SpanBasis<K> C = commutant(k, gens, caps, static_cast<int>(D));
    SpanBasis<K> X = span_of_operators(k, all_xi_matrices(k, n, r, caps), caps);
    SchurIsoResult res;
    res.commutant_dim = C.dim();
    res.span_dim = X.dim();
    res.schur = schur_dim(n, r);
    res.verdict = res.commutant_dim == res.schur && res.span_dim == res.schur &&
                  C.contains_span(X);
    return res;
}

} // namespace swdual
