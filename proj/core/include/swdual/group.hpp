#pragma once

// Generating sets and brute-force enumerations of GL(n, q) and SL(n, q).
//
// SL(n, q), n >= 2, is generated by the transvections I + t e_ij (i != j)
// with t running over the F_p power basis {1, x, ..., x^{e-1}} of F_q: the
// additivity E_ij(s) E_ij(t) = E_ij(s+t) recovers every scalar from basis
// scalars, and transvections over all scalars generate SL.  GL adds the
// diagonal diag(alpha, 1, ..., 1) with alpha a primitive element.

#include "swdual/bigint.hpp"
#include "swdual/config.hpp"
#include "swdual/errors.hpp"
#include "swdual/field.hpp"
#include "swdual/linalg.hpp"
#include "swdual/matrix.hpp"

#include <string>
#include <vector>

namespace swdual {

enum class GroupKind { GL, SL };

inline std::string group_kind_str(GroupKind k) { return k == GroupKind::GL ? "GL" : "SL"; }

struct GroupSpec {
    GroupKind kind = GroupKind::GL;
    int n = 1;
    Field field;
};

// |GL(n,q)| = prod_{i=0}^{n-1} (q^n - q^i); |SL| = |GL| / (q - 1).
BigInt group_order(const GroupSpec& spec);

// Deterministic generator list; all_scalars swaps the power-basis scalars
// for every nonzero t (a larger generating set used for cross-checks).
template <class K>
std::vector<Mat<K>> group_generators(const K& k, const GroupSpec& spec, bool all_scalars = false) {
    if (!spec.field.is_finite())
        throw UnsupportedError("group generators require a finite field");
    if (spec.n < 1) throw UsageError("group degree must be at least 1");
    const Field& f = spec.field;
    std::vector<Mat<K>> gens;

    if (spec.n == 1) {
        Mat<K> m(k, 1, 1);
        m.at(0, 0) = spec.kind == GroupKind::GL
                         ? k.from_scalar(primitive_element(f))
                         : k.one();
        gens.push_back(std::move(m));
        return gens;
    }

    std::vector<typename K::Elem> scalars;
    if (all_scalars) {
        for (long long idx = 1; idx < f.cardinality; ++idx)
            scalars.push_back(k.from_scalar(scalar_from_index(f, idx)));
    } else {
        for (int m = 0; m < f.degree; ++m) {
            Scalar s = scalar_zero(f);
            s.coeffs[static_cast<std::size_t>(m)] = 1; // x^m
            scalars.push_back(k.from_scalar(s));
        }
    }

    for (int i = 1; i <= spec.n; ++i)
        for (int j = 1; j <= spec.n; ++j) {
            if (i == j) continue;
            for (const auto& t : scalars) {
                Mat<K> m = Mat<K>::identity(k, spec.n);
                m.at(i - 1, j - 1) = t;
                gens.push_back(std::move(m));
            }
        }

    if (spec.kind == GroupKind::GL) {
        Mat<K> d = Mat<K>::identity(k, spec.n);
        d.at(0, 0) = k.from_scalar(primitive_element(f));
        gens.push_back(std::move(d));
    }
    return gens;
}

// Every group element exactly once, by rejection over all n x n matrices in
// deterministic (entry-lexicographic) order.  Guarded by the group-order cap.
template <class K>
std::vector<Mat<K>> group_elements(const K& k, const GroupSpec& spec, const Caps& caps) {
    if (!spec.field.is_finite())
        throw UnsupportedError("group enumeration requires a finite field");
    BigInt order = group_order(spec);
    if (order > big_of(caps.max_group_order))
        throw ResourceLimitError(
            "group order cap exceeded: |" + group_kind_str(spec.kind) + "(" +
            std::to_string(spec.n) + "," + std::to_string(spec.field.cardinality) + ")| = " +
            order.get_str() + " > max_group_order = " + std::to_string(caps.max_group_order) +
            "; use generator-based methods instead");

    const long long q = spec.field.cardinality;
    const int cells = spec.n * spec.n;
    BigInt total = big_pow(big_of(q), static_cast<unsigned long>(cells));
    long long candidates = to_long(total, "matrix-space enumeration");

    std::vector<Mat<K>> out;
    out.reserve(static_cast<std::size_t>(to_long(order, "group order")));
    const auto one = k.one();
    for (long long idx = 0; idx < candidates; ++idx) {
        Mat<K> m(k, spec.n, spec.n);
        long long rest = idx;
        for (int c = cells - 1; c >= 0; --c) {
            m.a[static_cast<std::size_t>(c)] = k.from_scalar(scalar_from_index(spec.field, rest % q));
            rest /= q;
        }
        const auto d = det(m);
        const bool keep = spec.kind == GroupKind::GL ? !k.is_zero(d) : d == one;
        if (keep) out.push_back(std::move(m));
    }
    if (BigInt(static_cast<long>(out.size())) != order)
        throw InternalError("group enumeration count disagrees with the order formula");
    return out;
}

} // namespace swdual
