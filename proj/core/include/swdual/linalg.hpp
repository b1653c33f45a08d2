#pragma once

// Exact linear algebra over a field kernel K: reduced row echelon form,
// rank, nullspace, determinant, incremental RREF span bases, commutants
// (centralizer algebras), and multiplicative closure of generated
// subalgebras.
//
// Flattening convention: a D x D operator X becomes the D^2-vector with
// coordinate u*D + v holding X[u][v] (row-then-column order).  Every span
// of operators lives in that flattened space.
//
// The commutant routine processes generators one at a time and keeps only a
// basis of the space cut out so far, so memory stays near (current basis
// size) x D^2.  Diagonal generators are handled first: a diagonal g
// constrains coordinates independently ((g_uu - g_vv) X_uv = 0), which
// refines a coordinate mask with no elimination at all; the first
// non-diagonal generator then costs a single nullspace over the surviving
// coordinates, and each later generator a nullspace in combination space.

#include "swdual/config.hpp"
#include "swdual/errors.hpp"
#include "swdual/matrix.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace swdual {

// ---------------------------------------------------------------------------
// dense elimination
// ---------------------------------------------------------------------------

template <class K>
struct RrefResult {
    Mat<K> m;
    std::vector<int> pivots; // pivot column of each nonzero row, increasing
};

// Unique reduced row echelon form, first-nonzero pivoting (arithmetic is
// exact, so no pivot-magnitude heuristics are needed or wanted).
template <class K>
RrefResult<K> rref(Mat<K> m) {
    const K k = m.k;
    std::vector<int> pivots;
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int sel = -1;
        for (int i = rank; i < m.rows; ++i) {
            if (!k.is_zero(m.at(i, c))) { sel = i; break; }
        }
        if (sel < 0) continue;
        if (sel != rank)
            std::swap_ranges(m.row(sel), m.row(sel) + m.cols, m.row(rank));
        // every row >= rank is zero left of column c, so updates can start at c
        std::size_t tail = static_cast<std::size_t>(m.cols - c);
        k.scale_row(m.row(rank) + c, tail, k.inv(m.at(rank, c)));
        for (int i = 0; i < m.rows; ++i) {
            if (i == rank) continue;
            const auto f = m.at(i, c);
            if (k.is_zero(f)) continue;
            k.axpy(m.row(i) + c, m.row(rank) + c, tail, k.neg(f));
        }
        pivots.push_back(c);
        ++rank;
    }
    return {std::move(m), std::move(pivots)};
}

template <class K>
int rank(const Mat<K>& m) {
    return static_cast<int>(rref(m).pivots.size());
}

// Basis of {v : m v = 0}, one vector per free column.
template <class K>
std::vector<std::vector<typename K::Elem>> nullspace(const Mat<K>& m) {
    const K& k = m.k;
    RrefResult<K> R = rref(m);
    std::vector<char> is_pivot(static_cast<std::size_t>(m.cols), 0);
    for (int p : R.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
    std::vector<std::vector<typename K::Elem>> out;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<typename K::Elem> v(static_cast<std::size_t>(m.cols), k.zero());
        v[static_cast<std::size_t>(f)] = k.one();
        for (std::size_t i = 0; i < R.pivots.size(); ++i) {
            const auto& coeff = R.m.at(static_cast<int>(i), f);
            if (!k.is_zero(coeff)) v[static_cast<std::size_t>(R.pivots[i])] = k.neg(coeff);
        }
        out.push_back(std::move(v));
    }
    return out;
}

template <class K>
typename K::Elem det(Mat<K> m) {
    if (!m.is_square()) throw UsageError("determinant requires a square matrix");
    const K k = m.k;
    auto result = k.one();
    bool negate = false;
    for (int c = 0; c < m.cols; ++c) {
        int sel = -1;
        for (int i = c; i < m.rows; ++i) {
            if (!k.is_zero(m.at(i, c))) { sel = i; break; }
        }
        if (sel < 0) return k.zero();
        if (sel != c) {
            std::swap_ranges(m.row(sel), m.row(sel) + m.cols, m.row(c));
            negate = !negate;
        }
        const auto piv = m.at(c, c);
        result = k.mul(result, piv);
        const auto piv_inv = k.inv(piv);
        std::size_t tail = static_cast<std::size_t>(m.cols - c);
        for (int i = c + 1; i < m.rows; ++i) {
            const auto f = m.at(i, c);
            if (k.is_zero(f)) continue;
            k.axpy(m.row(i) + c, m.row(c) + c, tail, k.neg(k.mul(f, piv_inv)));
        }
    }
    return negate ? k.neg(result) : result;
}

// ---------------------------------------------------------------------------
// sparse vectors
// ---------------------------------------------------------------------------

// Sorted (coordinate, value) pairs, no explicit zeros.
template <class K>
struct SparseVec {
    std::vector<std::pair<int, typename K::Elem>> t;

    bool empty() const { return t.empty(); }
    int pivot() const { return t.front().first; }
    std::size_t nnz() const { return t.size(); }
};

template <class K>
SparseVec<K> sv_from_dense(const K& k, const typename K::Elem* p, long long len) {
    SparseVec<K> v;
    for (long long i = 0; i < len; ++i)
        if (!k.is_zero(p[i])) v.t.emplace_back(static_cast<int>(i), p[i]);
    return v;
}

// a + c*b, merged
template <class K>
SparseVec<K> sv_axpy(const K& k, const SparseVec<K>& a, const SparseVec<K>& b,
                     const typename K::Elem& c) {
    SparseVec<K> r;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j == b.t.size() || (i < a.t.size() && a.t[i].first < b.t[j].first)) {
            r.t.push_back(a.t[i++]);
        } else if (i == a.t.size() || b.t[j].first < a.t[i].first) {
            auto val = k.mul(c, b.t[j].second);
            if (!k.is_zero(val)) r.t.emplace_back(b.t[j].first, std::move(val));
            ++j;
        } else {
            auto val = k.add(a.t[i].second, k.mul(c, b.t[j].second));
            if (!k.is_zero(val)) r.t.emplace_back(a.t[i].first, std::move(val));
            ++i;
            ++j;
        }
    }
    return r;
}

template <class K>
SparseVec<K> sv_scale(const K& k, SparseVec<K> v, const typename K::Elem& c) {
    for (auto& [coord, val] : v.t) val = k.mul(val, c);
    return v;
}

// ---------------------------------------------------------------------------
// SpanBasis: incremental RREF basis of a subspace
// ---------------------------------------------------------------------------

template <class K>
class SpanBasis {
public:
    SpanBasis(const K& k, long long ambient) : k_(k), ambient_(ambient) {
        if (ambient < 0) throw UsageError("negative ambient dimension");
    }

    long long ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseVec<K>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Fully reduces v against the basis (result has zeros at every pivot).
    SparseVec<K> reduce(SparseVec<K> v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (v.empty()) break;
            if (v.pivot() > pivots_[i]) continue;
            const auto c = coeff_at(v, pivots_[i]);
            if (!k_.is_zero(c)) v = sv_axpy(k_, v, rows_[i], k_.neg(c));
        }
        return v;
    }

    bool contains(const SparseVec<K>& v) const { return reduce(v).empty(); }

    // Inserts v if it is outside the span; keeps the basis in reduced row
    // echelon form with pivots strictly increasing.  Returns whether the
    // span grew.
    bool insert(SparseVec<K> v) {
        check_coords(v);
        v = reduce(std::move(v));
        if (v.empty()) return false;
        v = sv_scale(k_, std::move(v), k_.inv(v.t.front().second));
        const int piv = v.pivot();
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto c = coeff_at(rows_[i], piv);
            if (!k_.is_zero(c)) rows_[i] = sv_axpy(k_, rows_[i], v, k_.neg(c));
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
        auto idx = static_cast<std::size_t>(pos - pivots_.begin());
        pivots_.insert(pos, piv);
        rows_.insert(rows_.begin() + static_cast<long>(idx), std::move(v));
        return true;
    }

    // Subspace equality by mutual reduction (not dimension comparison alone).
    bool equals_span(const SpanBasis& o) const {
        if (ambient_ != o.ambient_ || dim() != o.dim()) return false;
        for (const auto& r : rows_)
            if (!o.contains(r)) return false;
        for (const auto& r : o.rows_)
            if (!contains(r)) return false;
        return true;
    }

    bool contains_span(const SpanBasis& o) const {
        for (const auto& r : o.rows_)
            if (!contains(r)) return false;
        return true;
    }

private:
    static typename K::Elem coeff_at_impl(const SparseVec<K>& v, int coord,
                                          const K& k) {
        auto it = std::lower_bound(
            v.t.begin(), v.t.end(), coord,
            [](const auto& entry, int c) { return entry.first < c; });
        if (it != v.t.end() && it->first == coord) return it->second;
        return k.zero();
    }
    typename K::Elem coeff_at(const SparseVec<K>& v, int coord) const {
        return coeff_at_impl(v, coord, k_);
    }
    void check_coords(const SparseVec<K>& v) const {
        if (!v.t.empty() &&
            (v.t.front().first < 0 || v.t.back().first >= ambient_))
            throw UsageError("span insert: coordinate outside ambient dimension");
    }

    K k_;
    long long ambient_;
    std::vector<SparseVec<K>> rows_;  // sorted by pivot
    std::vector<int> pivots_;
};

// ---------------------------------------------------------------------------
// sparse nullspace (used for rational commutants)
// ---------------------------------------------------------------------------

// Basis of {c in k^ncols : row . c = 0 for every row}, returned sparse.
template <class K>
std::vector<SparseVec<K>> sparse_nullspace(const K& k,
                                           const std::vector<SparseVec<K>>& rows,
                                           int ncols) {
    SpanBasis<K> span(k, ncols);
    for (const auto& r : rows) span.insert(r);
    std::vector<char> is_pivot(static_cast<std::size_t>(ncols), 0);
    for (int p : span.pivots()) is_pivot[static_cast<std::size_t>(p)] = 1;
    std::vector<SparseVec<K>> out;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        SparseVec<K> c;
        c.t.emplace_back(f, k.one());
        for (std::size_t i = 0; i < span.rows().size(); ++i) {
            for (const auto& [coord, val] : span.rows()[i].t) {
                if (coord == f) {
                    c.t.emplace_back(span.pivots()[i], k.neg(val));
                    break;
                }
                if (coord > f) break;
            }
        }
        std::sort(c.t.begin(), c.t.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// spans of operators
// ---------------------------------------------------------------------------

namespace detail {
inline void check_elim_cap(long long ambient, const Caps& caps) {
    if (ambient > caps.max_elim_dim)
        throw ResourceLimitError(
            "elimination cap exceeded: flattened dimension " + std::to_string(ambient) +
            " > max_elim_dim = " + std::to_string(caps.max_elim_dim));
}
} // namespace detail

// Span of the flattened operators.
template <class K>
SpanBasis<K> span_of_operators(const K& k, const std::vector<Mat<K>>& mats, const Caps& caps) {
    if (mats.empty()) throw UsageError("span of an empty operator list needs an ambient dimension");
    long long ambient = static_cast<long long>(mats[0].rows) * mats[0].cols;
    detail::check_elim_cap(ambient, caps);
    SpanBasis<K> span(k, ambient);
    for (const auto& m : mats) {
        if (static_cast<long long>(m.rows) * m.cols != ambient)
            throw UsageError("span of operators with mixed shapes");
        span.insert(sv_from_dense(k, m.a.data(), ambient));
    }
    return span;
}

// ---------------------------------------------------------------------------
// commutant
// ---------------------------------------------------------------------------

namespace detail {

// Residual X g - g X for a coordinate matrix X = e_{uv}: row u picks up row v
// of g, column v loses column u of g.
template <class K>
void fill_unit_residual_column(Mat<K>& T, const Mat<K>& g, int D, int coord, int col) {
    const K& k = T.k;
    const int u = coord / D, v = coord % D;
    for (int t = 0; t < D; ++t) {
        const auto& x = g.at(v, t);
        if (!k.is_zero(x)) {
            auto& cell = T.at(u * D + t, col);
            cell = k.add(cell, x);
        }
        const auto& y = g.at(t, u);
        if (!k.is_zero(y)) {
            auto& cell = T.at(t * D + v, col);
            cell = k.sub(cell, y);
        }
    }
}

template <class K>
Mat<K> densify(const K& k, const SparseVec<K>& v, int D) {
    Mat<K> m(k, D, D);
    for (const auto& [coord, val] : v.t) m.a[static_cast<std::size_t>(coord)] = val;
    return m;
}

} // namespace detail

// Basis of {X : X g = g X for every generator g}.  For an empty generator
// list the ambient side length D must be supplied via dim_hint.
template <class K>
SpanBasis<K> commutant(const K& k, const std::vector<Mat<K>>& gens, const Caps& caps,
                       int dim_hint = -1) {
    int D = dim_hint;
    for (const auto& g : gens) {
        if (!g.is_square()) throw UsageError("commutant generators must be square");
        if (D < 0) D = g.rows;
        if (g.rows != D) throw UsageError("commutant generators must share one size");
    }
    if (D < 0) throw UsageError("commutant of an empty generator set needs an explicit dimension");
    const long long ambient = static_cast<long long>(D) * D;
    detail::check_elim_cap(ambient, caps);

    // Phase 1: diagonal generators refine a coordinate mask.
    std::vector<char> alive(static_cast<std::size_t>(ambient), 1);
    std::vector<const Mat<K>*> nondiag;
    for (const auto& g : gens) {
        if (g.is_diagonal()) {
            for (int u = 0; u < D; ++u)
                for (int v = 0; v < D; ++v)
                    if (alive[static_cast<std::size_t>(u) * D + v] && !(g.at(u, u) == g.at(v, v)))
                        alive[static_cast<std::size_t>(u) * D + v] = 0;
        } else {
            nondiag.push_back(&g);
        }
    }
    std::vector<int> unit_coords;
    for (long long w = 0; w < ambient; ++w)
        if (alive[static_cast<std::size_t>(w)]) unit_coords.push_back(static_cast<int>(w));

    // Phase 2: each remaining generator cuts the space down via a nullspace
    // in combination space.
    std::vector<SparseVec<K>> basis; // meaningful once `first` is false
    bool first = true;
    for (const Mat<K>* gp : nondiag) {
        const Mat<K>& g = *gp;
        const int m = first ? static_cast<int>(unit_coords.size())
                            : static_cast<int>(basis.size());
        if (m == 0) { first = false; basis.clear(); break; }

        std::vector<SparseVec<K>> combos;
        if constexpr (K::kDenseElim) {
            Mat<K> T(k, static_cast<int>(ambient), m);
            for (int b = 0; b < m; ++b) {
                if (first) {
                    detail::fill_unit_residual_column(T, g, D, unit_coords[b], b);
                } else {
                    Mat<K> X = detail::densify(k, basis[b], D);
                    Mat<K> R = X.mul(g).sub(g.mul(X));
                    for (long long w = 0; w < ambient; ++w)
                        if (!k.is_zero(R.a[static_cast<std::size_t>(w)]))
                            T.at(static_cast<int>(w), b) = R.a[static_cast<std::size_t>(w)];
                }
            }
            for (auto& v : nullspace(T))
                combos.push_back(sv_from_dense(k, v.data(), m));
        } else {
            // sparse rows of the same system, indexed by flattened coordinate
            std::vector<SparseVec<K>> trows(static_cast<std::size_t>(ambient));
            std::vector<typename K::Elem> scratch(static_cast<std::size_t>(ambient), k.zero());
            for (int b = 0; b < m; ++b) {
                std::vector<int> touched;
                auto bump = [&](int w, const typename K::Elem& val, bool negate) {
                    auto& cell = scratch[static_cast<std::size_t>(w)];
                    if (k.is_zero(cell)) touched.push_back(w);
                    cell = negate ? k.sub(cell, val) : k.add(cell, val);
                };
                if (first) {
                    const int u = unit_coords[b] / D, v = unit_coords[b] % D;
                    for (int t = 0; t < D; ++t) {
                        if (!k.is_zero(g.at(v, t))) bump(u * D + t, g.at(v, t), false);
                        if (!k.is_zero(g.at(t, u))) bump(t * D + v, g.at(t, u), true);
                    }
                } else {
                    for (const auto& [coord, c] : basis[b].t) {
                        const int u = coord / D, v = coord % D;
                        for (int t = 0; t < D; ++t) {
                            if (!k.is_zero(g.at(v, t))) bump(u * D + t, k.mul(c, g.at(v, t)), false);
                            if (!k.is_zero(g.at(t, u))) bump(t * D + v, k.mul(c, g.at(t, u)), true);
                        }
                    }
                }
                for (int w : touched) {
                    auto& cell = scratch[static_cast<std::size_t>(w)];
                    if (!k.is_zero(cell)) trows[static_cast<std::size_t>(w)].t.emplace_back(b, cell);
                    cell = k.zero();
                }
            }
            std::vector<SparseVec<K>> rows_compact;
            for (auto& rw : trows)
                if (!rw.empty()) rows_compact.push_back(std::move(rw));
            combos = sparse_nullspace(k, rows_compact, m);
        }

        // apply combos to the old basis
        std::vector<SparseVec<K>> next;
        next.reserve(combos.size());
        if (first) {
            for (auto& c : combos) {
                SparseVec<K> x;
                x.t.reserve(c.t.size());
                for (auto& [b, val] : c.t) x.t.emplace_back(unit_coords[static_cast<std::size_t>(b)], val);
                // unit_coords increasing, so coordinates stay sorted
                next.push_back(std::move(x));
            }
        } else {
            std::vector<typename K::Elem> acc(static_cast<std::size_t>(ambient), k.zero());
            for (auto& c : combos) {
                std::fill(acc.begin(), acc.end(), k.zero());
                for (auto& [b, val] : c.t)
                    for (const auto& [coord, x] : basis[static_cast<std::size_t>(b)].t)
                        acc[static_cast<std::size_t>(coord)] =
                            k.add(acc[static_cast<std::size_t>(coord)], k.mul(val, x));
                next.push_back(sv_from_dense(k, acc.data(), ambient));
            }
        }
        basis = std::move(next);
        first = false;
        if (basis.empty()) break;
    }

    SpanBasis<K> span(k, ambient);
    if (first) {
        for (int w : unit_coords) {
            SparseVec<K> u;
            u.t.emplace_back(w, k.one());
            span.insert(std::move(u));
        }
    } else {
        for (auto& v : basis) span.insert(std::move(v));
    }
    return span;
}

// ---------------------------------------------------------------------------
// generated subalgebra
// ---------------------------------------------------------------------------

// Smallest subspace containing the generators (and the identity when
// flagged) that is closed under matrix multiplication.  Worklist closure:
// every element that grows the span is multiplied by every generator; the
// span of processed elements absorbs all words by induction on word length.
template <class K>
SpanBasis<K> subalgebra_closure(const K& k, const std::vector<Mat<K>>& gens,
                                bool include_identity, const Caps& caps, int dim_hint = -1) {
    int D = dim_hint;
    for (const auto& g : gens) {
        if (!g.is_square()) throw UsageError("closure generators must be square");
        if (D < 0) D = g.rows;
        if (g.rows != D) throw UsageError("closure generators must share one size");
    }
    if (D < 0) throw UsageError("closure of an empty generator set needs an explicit dimension");
    const long long ambient = static_cast<long long>(D) * D;
    detail::check_elim_cap(ambient, caps);

    SpanBasis<K> span(k, ambient);
    std::vector<Mat<K>> work;
    auto try_insert = [&](Mat<K> M) {
        if (span.insert(sv_from_dense(k, M.a.data(), ambient))) work.push_back(std::move(M));
    };
    if (include_identity) try_insert(Mat<K>::identity(k, D));
    for (const auto& g : gens) try_insert(g);
    for (std::size_t head = 0; head < work.size(); ++head) {
        for (const auto& g : gens) {
            Mat<K> prod = g.mul(work[head]);
            try_insert(std::move(prod));
        }
    }
    return span;
}

} // namespace swdual
