#pragma once

// The four algebras acting on V^{(x)r} and their comparisons:
//
//   rho_span      span of the place-permutation operators (image of the
//                 symmetric-group algebra),
//   endo_G_span   commutant of the group action (End_G),
//   phi_span      span of the tensor-power operators of group elements
//                 (image of the group algebra), by closure or enumeration,
//   endo_Sr_span  commutant of the place-permutation action (End_{S_r}),
//   psi_span      algebra generated by the reduced divided-power and
//                 binomial operators (image of the hyperalgebra),
//   endo_schur_span  commutant of the Schur-algebra action,
//
// plus the cell-level checks built from them.  Over the rationals the group
// cannot be enumerated, so End_G is computed as the commutant of the
// one-parameter operators E_ab(t), t = 1..r (diagonal included for GL,
// excluded for SL): interpolation at the r+1 points {0, 1, .., r} recovers
// every divided-power operator from these, the hyperalgebra image equals
// the full commutant of the symmetric group for any coefficient ring, and
// that image contains every tensor-power operator — so commuting with the
// finite family already forces commuting with the whole group.

#include "swdual/bigint.hpp"
#include "swdual/config.hpp"
#include "swdual/divided.hpp"
#include "swdual/errors.hpp"
#include "swdual/group.hpp"
#include "swdual/linalg.hpp"
#include "swdual/schur.hpp"
#include "swdual/tensor.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace swdual {

// ---------------------------------------------------------------------------
// report types
// ---------------------------------------------------------------------------

struct Verdict {
    enum class State { True, False, Skipped };
    State state = State::Skipped;
    std::string reason;

    static Verdict of(bool b) { return {b ? State::True : State::False, ""}; }
    static Verdict skipped(std::string why) { return {State::Skipped, std::move(why)}; }

    bool is_true() const { return state == State::True; }
    bool is_false() const { return state == State::False; }
    bool is_skipped() const { return state == State::Skipped; }

    std::string str() const {
        switch (state) {
            case State::True: return "true";
            case State::False: return "false";
            default: return reason.empty() ? "skipped" : "skipped: " + reason;
        }
    }
};

struct DualityReport {
    std::string command;  // main1 | thrall | dims | formulas | tl
    int n = 0;
    int r = 0;
    std::string field;    // canonical descriptor
    long long field_q = 0; // cardinality, 0 = infinite
    std::string group;    // "GL", "SL", or "" when not applicable
    std::map<std::string, long long> dims;
    std::map<std::string, Verdict> verdicts;
    std::map<std::string, std::vector<std::vector<std::string>>> witnesses;
    std::map<std::string, double> timings_ms;
};

// ---------------------------------------------------------------------------
// spans
// ---------------------------------------------------------------------------

namespace detail {

// Sparse flattened place-permutation operator (one entry per column).
template <class K>
SparseVec<K> place_permutation_flat(const K& k, const Perm& sigma, int n, int r, long long D) {
    const Perm inv = perm_inverse(sigma);
    std::vector<std::pair<int, typename K::Elem>> entries;
    entries.reserve(static_cast<std::size_t>(D));
    std::vector<int> digits(static_cast<std::size_t>(r), 0);
    for (long long jj = 0; jj < D; ++jj) {
        long long rest = jj;
        for (int a = r - 1; a >= 0; --a) {
            digits[static_cast<std::size_t>(a)] = static_cast<int>(rest % n);
            rest /= n;
        }
        long long target = 0;
        for (int a = 0; a < r; ++a)
            target = target * n + digits[static_cast<std::size_t>(inv[static_cast<std::size_t>(a)])];
        entries.emplace_back(static_cast<int>(target * D + jj), k.one());
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<K> v;
    v.t = std::move(entries);
    return v;
}

} // namespace detail

// Image of the symmetric-group algebra: span of all r! place permutations.
template <class K>
SpanBasis<K> rho_span(const K& k, int n, int r, const Caps& caps) {
    const long long D = tensor_dim(n, r, caps);
    detail::check_elim_cap(D * D, caps);
    SpanBasis<K> span(k, D * D);
    for (const Perm& s : symmetric_group_elements(r, caps))
        span.insert(detail::place_permutation_flat(k, s, n, r, D));
    return span;
}

// End_G as the commutant of the group action.
template <class K>
SpanBasis<K> endo_G_span(const K& k, GroupKind kind, int n, int r, const Caps& caps) {
    const long long D = tensor_dim(n, r, caps);
    std::vector<Mat<K>> ops;
    if (k.field().is_finite()) {
        GroupSpec spec{kind, n, k.field()};
        for (const auto& g : group_generators(k, spec))
            ops.push_back(tensor_power_operator(k, g, r, caps));
    } else {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j && kind == GroupKind::SL) continue;
                if (i == j && n == 1) continue; // GL(1): scalars, commutant is everything
                for (int t = 1; t <= r; ++t)
                    ops.push_back(E_operator(k, i, j, k.from_int(t), n, r, caps));
            }
    }
    return commutant(k, ops, caps, static_cast<int>(D));
}

// End_{S_r} as the commutant of the place-permutation action.
template <class K>
SpanBasis<K> endo_Sr_span(const K& k, int n, int r, const Caps& caps) {
    const long long D = tensor_dim(n, r, caps);
    std::vector<Mat<K>> gens;
    for (const Perm& s : adjacent_transpositions(r))
        gens.push_back(place_permutation_operator(k, s, n, r, caps));
    return commutant(k, gens, caps, static_cast<int>(D));
}

// Image of the group algebra, as the multiplicative closure of the
// generator tensor powers (the span of a finite group's operators is
// multiplicatively closed and contains inverses as positive powers, so the
// closure from generators plus identity equals the full span).
template <class K>
SpanBasis<K> phi_span_closure(const K& k, GroupKind kind, int n, int r, const Caps& caps) {
    if (!k.field().is_finite())
        throw UnsupportedError("phi image requires a finite field (infinite group span)");
    const long long D = tensor_dim(n, r, caps);
    GroupSpec spec{kind, n, k.field()};
    std::vector<Mat<K>> tps;
    for (const auto& g : group_generators(k, spec))
        tps.push_back(tensor_power_operator(k, g, r, caps));
    return subalgebra_closure(k, tps, /*include_identity=*/true, caps, static_cast<int>(D));
}

// Image of the group algebra by brute-force enumeration (oracle method).
template <class K>
SpanBasis<K> phi_span_enumerate(const K& k, GroupKind kind, int n, int r, const Caps& caps) {
    if (!k.field().is_finite())
        throw UnsupportedError("phi image requires a finite field (infinite group span)");
    const long long D = tensor_dim(n, r, caps);
    detail::check_elim_cap(D * D, caps);
    GroupSpec spec{kind, n, k.field()};
    SpanBasis<K> span(k, D * D);
    for (const auto& g : group_elements(k, spec, caps)) {
        Mat<K> tp = tensor_power_operator(k, g, r, caps);
        span.insert(sv_from_dense(k, tp.a.data(), D * D));
    }
    return span;
}

// Image of the hyperalgebra: algebra generated by the reduced divided
// powers (and, unless offdiag_only, the diagonal binomial operators) with
// the identity.  offdiag_only computes the primed variant, which must give
// the same span.
template <class K>
SpanBasis<K> psi_span(const K& k, int n, int r, bool offdiag_only, const Caps& caps) {
    const long long D = tensor_dim(n, r, caps);
    std::vector<Mat<K>> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (int m = 1; m <= r; ++m)
                gens.push_back(reduce_mod(k, divided_power(i, j, m, n, r, caps)));
        }
    if (!offdiag_only)
        for (int i = 1; i <= n; ++i)
            for (int m = 1; m <= r; ++m)
                gens.push_back(reduce_mod(k, binomial_diag(i, m, n, r, caps)));
    return subalgebra_closure(k, gens, /*include_identity=*/true, caps, static_cast<int>(D));
}

// Commutant of the Schur-algebra action.
template <class K>
SpanBasis<K> endo_schur_span(const K& k, int n, int r, const Caps& caps) {
    const long long D = tensor_dim(n, r, caps);
    return commutant(k, all_xi_matrices(k, n, r, caps), caps, static_cast<int>(D));
}

// ---------------------------------------------------------------------------
// witnesses
// ---------------------------------------------------------------------------

namespace detail {

// First basis element of A outside B, rendered as a D x D matrix of entry
// strings (row-major), or nothing if A is contained in B.
template <class K>
std::optional<std::vector<std::vector<std::string>>> witness_outside(const K& k,
                                                                     const SpanBasis<K>& A,
                                                                     const SpanBasis<K>& B,
                                                                     int D) {
    for (const auto& row : A.rows()) {
        if (B.contains(row)) continue;
        std::vector<std::vector<std::string>> m(
            static_cast<std::size_t>(D), std::vector<std::string>(static_cast<std::size_t>(D)));
        for (int u = 0; u < D; ++u)
            for (int v = 0; v < D; ++v) m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = k.str(k.zero());
        for (const auto& [coord, val] : row.t)
            m[static_cast<std::size_t>(coord / D)][static_cast<std::size_t>(coord % D)] = k.str(val);
        return m;
    }
    return std::nullopt;
}

class StopWatch {
public:
    StopWatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace detail

// ---------------------------------------------------------------------------
// cells
// ---------------------------------------------------------------------------

namespace detail {

inline DualityReport new_report(std::string command, int n, int r, const Field& f,
                                std::string group) {
    DualityReport rep;
    rep.command = std::move(command);
    rep.n = n;
    rep.r = r;
    rep.field = field_str(f);
    rep.field_q = f.cardinality;
    rep.group = std::move(group);
    return rep;
}

// Runs fn() and stores its dimension under `name`; resource and support
// errors become an absent dim with the reason returned for dependents.
template <class Fn, class Span>
std::optional<std::string> compute_span(DualityReport& rep, const std::string& name,
                                        std::optional<Span>& out, Fn&& fn) {
    StopWatch w;
    try {
        out.emplace(fn());
    } catch (const ResourceLimitError& e) {
        return std::string(e.what());
    } catch (const UnsupportedError& e) {
        return std::string(e.what());
    }
    rep.dims[name] = out->dim();
    rep.timings_ms[name] = w.ms();
    return std::nullopt;
}

} // namespace detail

// How the group-algebra image is computed: closure of the generator tensor
// powers (default), brute-force enumeration of the whole group (oracle), or
// both with a cross-check verdict.
enum class PhiMethod { Closure, Enumerate, Both };

// Injectivity / isomorphism cell: is the symmetric-group image free of rank
// r!, and does it fill the whole commutant of the group?
template <class K>
DualityReport main1_cell(const K& k, int n, int r, const Caps& caps) {
    DualityReport rep = detail::new_report("main1", n, r, k.field(), "GL");
    std::optional<SpanBasis<K>> rho, endoG;
    auto rho_err = detail::compute_span(rep, "rho_image", rho,
                                        [&] { return rho_span(k, n, r, caps); });
    auto endo_err = detail::compute_span(rep, "endo_G", endoG,
                                         [&] { return endo_G_span(k, GroupKind::GL, n, r, caps); });

    if (rho_err) {
        rep.verdicts["injective"] = Verdict::skipped(*rho_err);
    } else {
        const long long rfac = to_long(big_factorial(static_cast<unsigned long>(r)), "r!");
        rep.verdicts["injective"] = Verdict::of(rho->dim() == rfac);
    }
    if (rho_err || endo_err) {
        rep.verdicts["iso"] = Verdict::skipped(rho_err ? *rho_err : *endo_err);
    } else {
        const bool inj = rep.verdicts["injective"].is_true();
        const bool equal = rho->equals_span(*endoG);
        rep.verdicts["iso"] = Verdict::of(inj && equal);
        if (!equal) {
            const int side = static_cast<int>(tensor_dim(n, r, caps));
            if (auto w = detail::witness_outside(k, *endoG, *rho, side))
                rep.witnesses["endo_G_element_outside_rho_image"] = *w;
        }
    }
    return rep;
}

namespace detail {

// Computes the phi span by the requested primary method; under
// PhiMethod::Both also runs the enumeration oracle and records whether the
// two spans agree.
template <class K>
std::optional<std::string> compute_phi(DualityReport& rep, const K& k, GroupKind kind, int n,
                                       int r, PhiMethod method, const Caps& caps,
                                       std::optional<SpanBasis<K>>& phi) {
    auto primary = [&] {
        return method == PhiMethod::Enumerate ? phi_span_enumerate(k, kind, n, r, caps)
                                              : phi_span_closure(k, kind, n, r, caps);
    };
    auto err = compute_span(rep, "phi_image", phi, primary);
    if (method != PhiMethod::Both) return err;
    std::optional<SpanBasis<K>> oracle;
    auto oracle_err = compute_span(rep, "phi_image_enum", oracle,
                                   [&] { return phi_span_enumerate(k, kind, n, r, caps); });
    if (err || oracle_err) {
        rep.verdicts["phi_methods_agree"] = Verdict::skipped(err ? *err : *oracle_err);
    } else {
        rep.verdicts["phi_methods_agree"] = Verdict::of(phi->equals_span(*oracle));
    }
    return err;
}

} // namespace detail

// Surjectivity cell: does the group algebra fill End_{S_r}, and does the
// symmetric-group algebra fill End_G?
template <class K>
DualityReport thrall_cell(const K& k, int n, int r, GroupKind kind, const Caps& caps,
                          PhiMethod method = PhiMethod::Closure) {
    DualityReport rep = detail::new_report("thrall", n, r, k.field(), group_kind_str(kind));
    rep.dims["schur_dim"] = schur_dim(n, r);

    std::optional<SpanBasis<K>> rho, endoG, phi, endoSr;
    auto rho_err = detail::compute_span(rep, "rho_image", rho,
                                        [&] { return rho_span(k, n, r, caps); });
    auto endoG_err = detail::compute_span(rep, "endo_G", endoG,
                                          [&] { return endo_G_span(k, kind, n, r, caps); });
    auto phi_err = detail::compute_phi(rep, k, kind, n, r, method, caps, phi);
    auto endoSr_err = detail::compute_span(rep, "endo_Sr", endoSr,
                                           [&] { return endo_Sr_span(k, n, r, caps); });

    if (phi_err || endoSr_err) {
        rep.verdicts["phi_surjective"] = Verdict::skipped(phi_err ? *phi_err : *endoSr_err);
    } else {
        const bool equal = phi->equals_span(*endoSr);
        rep.verdicts["phi_surjective"] = Verdict::of(equal);
        if (!equal) {
            const int side = static_cast<int>(tensor_dim(n, r, caps));
            if (auto w = detail::witness_outside(k, *endoSr, *phi, side))
                rep.witnesses["endo_Sr_element_outside_phi_image"] = *w;
        }
    }
    if (rho_err || endoG_err) {
        rep.verdicts["rho_surjective"] = Verdict::skipped(rho_err ? *rho_err : *endoG_err);
    } else {
        const bool equal = rho->equals_span(*endoG);
        rep.verdicts["rho_surjective"] = Verdict::of(equal);
        if (!equal) {
            const int side = static_cast<int>(tensor_dim(n, r, caps));
            if (auto w = detail::witness_outside(k, *endoG, *rho, side))
                rep.witnesses["endo_G_element_outside_rho_image"] = *w;
        }
    }
    return rep;
}

// All eight dimensions, no comparison verdicts (the cross-check verdict
// appears only under PhiMethod::Both).
template <class K>
DualityReport dims_cell(const K& k, int n, int r, GroupKind kind, const Caps& caps,
                        PhiMethod method = PhiMethod::Closure) {
    DualityReport rep = detail::new_report("dims", n, r, k.field(), group_kind_str(kind));
    rep.dims["schur_dim"] = schur_dim(n, r);
    rep.dims["catalan"] = catalan_number(r);

    std::optional<SpanBasis<K>> span;
    detail::compute_span(rep, "rho_image", span, [&] { return rho_span(k, n, r, caps); });
    span.reset();
    detail::compute_span(rep, "endo_G", span, [&] { return endo_G_span(k, kind, n, r, caps); });
    span.reset();
    detail::compute_phi(rep, k, kind, n, r, method, caps, span);
    span.reset();
    detail::compute_span(rep, "endo_Sr", span, [&] { return endo_Sr_span(k, n, r, caps); });
    span.reset();
    detail::compute_span(rep, "psi_image", span, [&] { return psi_span(k, n, r, false, caps); });
    span.reset();
    detail::compute_span(rep, "endo_schur", span, [&] { return endo_schur_span(k, n, r, caps); });
    return rep;
}

// Identity checks for the interpolation formulas, quantified over the whole
// (finite) field.
template <class K>
DualityReport formulas_cell(const K& k, int n, int r, const Caps& caps) {
    DualityReport rep = detail::new_report("formulas", n, r, k.field(), "");
    if (!k.field().is_finite())
        throw UsageError("the formulas check quantifies over all field elements; "
                         "use a finite field");
    const auto elems = k.enumerate();

    {
        detail::StopWatch w;
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i)
            for (int j = 1; j <= n && ok; ++j) {
                if (i == j) continue;
                for (const auto& t : elems)
                    if (!verify_formula_a(k, i, j, t, n, r, caps)) { ok = false; break; }
            }
        rep.verdicts["formula_a"] = Verdict::of(ok);
        rep.timings_ms["formula_a"] = w.ms();
    }
    {
        detail::StopWatch w;
        bool ok = true;
        const auto minus_one = k.neg(k.one());
        for (int i = 1; i <= n && ok; ++i)
            for (const auto& t : elems) {
                if (t == minus_one) continue;
                if (!verify_formula_b(k, i, t, n, r, caps)) { ok = false; break; }
            }
        rep.verdicts["formula_b"] = Verdict::of(ok);
        rep.timings_ms["formula_b"] = w.ms();
    }
    {
        detail::StopWatch w;
        if (k.field().cardinality < r + 1) {
            rep.verdicts["vandermonde"] = Verdict::skipped(
                "interpolation at r+1 = " + std::to_string(r + 1) +
                " points needs q >= r+1, and q = " + std::to_string(k.field().cardinality));
        } else {
            bool ok = true;
            std::vector<typename K::Elem> points;
            for (int l = 0; l <= r; ++l) points.push_back(elems[static_cast<std::size_t>(l)]);
            for (int i = 1; i <= n && ok; ++i)
                for (int j = 1; j <= n && ok; ++j) {
                    if (i == j) continue;
                    std::vector<Mat<K>> values;
                    for (const auto& t : points)
                        values.push_back(E_operator(k, i, j, t, n, r, caps));
                    const auto coeffs = vandermonde_solve(k, points, values);
                    for (int m = 0; m <= r; ++m)
                        if (!(coeffs[static_cast<std::size_t>(m)] ==
                              reduce_mod(k, divided_power(i, j, m, n, r, caps)))) {
                            ok = false;
                            break;
                        }
                }
            rep.verdicts["vandermonde"] = Verdict::of(ok);
        }
        rep.timings_ms["vandermonde"] = w.ms();
    }
    return rep;
}

// One row of the two-dimensional scan, finite-field side: the symmetric
// group image against the full commutant at n = 2.  Resource-limit errors
// propagate so the scan driver can truncate cleanly.
template <class K>
DualityReport tl_fp_cell(const K& k, int r, const Caps& caps) {
    DualityReport rep = detail::new_report("tl", 2, r, k.field(), "GL");
    rep.dims["catalan"] = catalan_number(r);
    {
        detail::StopWatch w;
        SpanBasis<K> rho = rho_span(k, 2, r, caps);
        rep.dims["rho_image"] = rho.dim();
        rep.timings_ms["rho_image"] = w.ms();
    }
    {
        detail::StopWatch w;
        SpanBasis<K> endoG = endo_G_span(k, GroupKind::GL, 2, r, caps);
        rep.dims["endo_G"] = endoG.dim();
        rep.timings_ms["endo_G"] = w.ms();
    }
    rep.verdicts["strict"] = Verdict::of(rep.dims["endo_G"] > rep.dims["rho_image"]);
    rep.verdicts["rho_eq_catalan"] = Verdict::of(rep.dims["rho_image"] == rep.dims["catalan"]);
    return rep;
}

// Characteristic-zero side of the same row: the symmetric-group image alone,
// expected to match the Catalan number.
template <class K>
DualityReport tl_q_cell(const K& k, int r, const Caps& caps) {
    DualityReport rep = detail::new_report("tl", 2, r, k.field(), "");
    rep.dims["catalan"] = catalan_number(r);
    detail::StopWatch w;
    SpanBasis<K> rho = rho_span(k, 2, r, caps);
    rep.dims["rho_image"] = rho.dim();
    rep.timings_ms["rho_image"] = w.ms();
    rep.verdicts["rho_eq_catalan"] = Verdict::of(rep.dims["rho_image"] == rep.dims["catalan"]);
    return rep;
}

// ---------------------------------------------------------------------------
// type-erased drivers (implemented in duality.cpp)
// ---------------------------------------------------------------------------

DualityReport check_main1_cell(int n, int r, const Field& f, const Caps& caps);
DualityReport check_thrall_cell(int n, int r, const Field& f, GroupKind kind, const Caps& caps,
                                PhiMethod method = PhiMethod::Closure);
DualityReport check_dims_cell(int n, int r, const Field& f, GroupKind kind, const Caps& caps,
                              PhiMethod method = PhiMethod::Closure);
DualityReport check_formulas_cell(int n, int r, const Field& f, const Caps& caps);

// Scan rows r = 2..rmax at n = 2 over the prime field of characteristic p,
// optionally pairing each row with its characteristic-zero companion.  A
// resource limit inside a row appends a truncation-marker cell and stops.
std::vector<DualityReport> tl_scan(long long p, int rmax, bool with_q, const Caps& caps);

} // namespace swdual
