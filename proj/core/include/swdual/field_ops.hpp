#pragma once

// Arithmetic kernels used by the linear-algebra engines.  Three families of
// coefficient field, three kernel types with one shared compile-time
// interface:
//
//   PrimeOps  F_p, p prime <= 251; elements are byte values in [0, p).
//             Bulk row updates run as (a + f*b) mod p on unsigned lanes,
//             specialized per small p so the compiler vectorizes them
//             (characteristic 2 degenerates to XOR).
//   ExtOps    F_{p^e}, q <= 256; elements are byte indices packing the
//             coefficient vector base p (so the index order matches the
//             canonical element enumeration).  Arithmetic is table-driven;
//             tables are built once from the exact polynomial layer.
//   RatOps    Q with GMP rationals; exact, no caps beyond memory.
//
// Elimination-heavy code is templated over the kernel type K and calls
// k.axpy / k.scale_row on contiguous rows, which is where all the time goes.

#include "swdual/config.hpp"
#include "swdual/errors.hpp"
#include "swdual/field.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace swdual {

namespace kernel {

// dst[i] = (dst[i] + f * src[i]) mod P over a contiguous row.
template <unsigned P>
inline void axpy_mod(std::uint8_t* dst, const std::uint8_t* src, std::size_t len, unsigned f) {
    if constexpr (P == 2) {
        (void)f; // the only nonzero factor is 1
        for (std::size_t i = 0; i < len; ++i) dst[i] ^= src[i];
    } else {
        for (std::size_t i = 0; i < len; ++i)
            dst[i] = static_cast<std::uint8_t>(
                (static_cast<unsigned>(dst[i]) + f * static_cast<unsigned>(src[i])) % P);
    }
}

inline void axpy_mod_generic(std::uint8_t* dst, const std::uint8_t* src, std::size_t len,
                             unsigned f, unsigned p) {
    for (std::size_t i = 0; i < len; ++i)
        dst[i] = static_cast<std::uint8_t>(
            (static_cast<unsigned>(dst[i]) + f * static_cast<unsigned>(src[i])) % p);
}

template <unsigned P>
inline void scale_mod(std::uint8_t* dst, std::size_t len, unsigned f) {
    if constexpr (P == 2) {
        (void)dst; (void)len; (void)f; // unreachable: callers filter f = 0 and f = 1
    } else {
        for (std::size_t i = 0; i < len; ++i)
            dst[i] = static_cast<std::uint8_t>((f * static_cast<unsigned>(dst[i])) % P);
    }
}

inline void scale_mod_generic(std::uint8_t* dst, std::size_t len, unsigned f, unsigned p) {
    for (std::size_t i = 0; i < len; ++i)
        dst[i] = static_cast<std::uint8_t>((f * static_cast<unsigned>(dst[i])) % p);
}

} // namespace kernel

// ---------------------------------------------------------------------------
// PrimeOps
// ---------------------------------------------------------------------------

class PrimeOps {
public:
    using Elem = std::uint8_t;
    static constexpr bool kDenseElim = true;

    explicit PrimeOps(const Field& f) : field_(std::make_shared<Field>(f)) {
        if (!f.is_finite() || f.degree != 1)
            throw InternalError("PrimeOps requires a prime field");
        if (f.characteristic > 251)
            throw ResourceLimitError("fast kernels support p <= 251, got p = " +
                                     std::to_string(f.characteristic));
        p_ = static_cast<unsigned>(f.characteristic);
        inv_.fill(0);
        for (unsigned a = 1; a < p_; ++a) {
            // Fermat: a^(p-2) mod p
            unsigned long long acc = 1, base = a;
            for (unsigned e = p_ - 2; e > 0; e >>= 1) {
                if (e & 1u) acc = acc * base % p_;
                base = base * base % p_;
            }
            inv_[a] = static_cast<Elem>(acc);
        }
        switch (p_) {
            case 2: axpy_ = dispatch_axpy<2>; scale_ = dispatch_scale<2>; break;
            case 3: axpy_ = dispatch_axpy<3>; scale_ = dispatch_scale<3>; break;
            case 5: axpy_ = dispatch_axpy<5>; scale_ = dispatch_scale<5>; break;
            case 7: axpy_ = dispatch_axpy<7>; scale_ = dispatch_scale<7>; break;
            case 11: axpy_ = dispatch_axpy<11>; scale_ = dispatch_scale<11>; break;
            case 13: axpy_ = dispatch_axpy<13>; scale_ = dispatch_scale<13>; break;
            default: axpy_ = nullptr; scale_ = nullptr; break;
        }
    }

    const Field& field() const { return *field_; }
    unsigned p() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }

    Elem add(Elem a, Elem b) const { return static_cast<Elem>((unsigned(a) + b) % p_); }
    Elem sub(Elem a, Elem b) const { return static_cast<Elem>((unsigned(a) + p_ - b) % p_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : static_cast<Elem>(p_ - a); }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>(unsigned(a) * b % p_); }
    Elem inv(Elem a) const {
        if (a == 0) throw UsageError("division by zero: inv(0)");
        return inv_[a];
    }

    Elem from_int(long long v) const {
        long long m = v % static_cast<long long>(p_);
        return static_cast<Elem>(m < 0 ? m + p_ : m);
    }
    Elem from_bigint(const BigInt& v) const {
        return static_cast<Elem>(mpz_fdiv_ui(v.get_mpz_t(), p_));
    }
    Elem from_scalar(const Scalar& s) const {
        if (s.chr != field_->characteristic || s.deg != 1)
            throw UsageError("field mismatch in scalar conversion");
        return static_cast<Elem>(s.coeffs[0]);
    }
    Scalar to_scalar(Elem a) const { return scalar_from_int(*field_, a); }
    std::string str(Elem a) const { return std::to_string(unsigned(a)); }

    std::vector<Elem> enumerate() const {
        std::vector<Elem> out(p_);
        for (unsigned i = 0; i < p_; ++i) out[i] = static_cast<Elem>(i);
        return out;
    }

    // dst += f * src, elementwise over len entries (f may be any element).
    void axpy(Elem* dst, const Elem* src, std::size_t len, Elem f) const {
        if (f == 0) return;
        if (axpy_) axpy_(dst, src, len, f);
        else kernel::axpy_mod_generic(dst, src, len, f, p_);
    }
    // dst *= f elementwise (f may be any element, including zero).
    void scale_row(Elem* dst, std::size_t len, Elem f) const {
        if (f == 1) return;
        if (f == 0) {
            std::fill(dst, dst + len, Elem{0});
            return;
        }
        if (scale_) scale_(dst, len, f);
        else kernel::scale_mod_generic(dst, len, f, p_);
    }

    bool same(const PrimeOps& o) const { return *field_ == *o.field_; }

private:
    template <unsigned P>
    static void dispatch_axpy(Elem* d, const Elem* s, std::size_t l, unsigned f) {
        kernel::axpy_mod<P>(d, s, l, f);
    }
    template <unsigned P>
    static void dispatch_scale(Elem* d, std::size_t l, unsigned f) {
        kernel::scale_mod<P>(d, l, f);
    }

    std::shared_ptr<const Field> field_;
    unsigned p_ = 2;
    std::array<Elem, 256> inv_{};
    void (*axpy_)(Elem*, const Elem*, std::size_t, unsigned) = nullptr;
    void (*scale_)(Elem*, std::size_t, unsigned) = nullptr;
};

// ---------------------------------------------------------------------------
// ExtOps
// ---------------------------------------------------------------------------

class ExtOps {
public:
    using Elem = std::uint8_t;
    static constexpr bool kDenseElim = true;

    explicit ExtOps(const Field& f) {
        if (!f.is_finite() || f.degree < 2)
            throw InternalError("ExtOps requires an extension field");
        if (f.cardinality > 256)
            throw ResourceLimitError("fast kernels support q <= 256, got q = " +
                                     std::to_string(f.cardinality));
        auto t = std::make_shared<Tables>();
        t->field = f;
        t->q = static_cast<unsigned>(f.cardinality);
        t->p = static_cast<unsigned>(f.characteristic);
        unsigned q = t->q;
        t->add.assign(std::size_t(q) * q, 0);
        t->mul.assign(std::size_t(q) * q, 0);
        t->neg.assign(q, 0);
        t->inv.assign(q, 0);
        // Build every table from the exact polynomial layer, so the two
        // arithmetic implementations can be cross-checked against each other.
        std::vector<Scalar> elems = enumerate_elements(f, 256);
        for (unsigned a = 0; a < q; ++a) {
            t->neg[a] = static_cast<Elem>(scalar_index(f, scalar_neg(f, elems[a])));
            if (a != 0)
                t->inv[a] = static_cast<Elem>(scalar_index(f, scalar_inv(f, elems[a])));
            for (unsigned b = 0; b < q; ++b) {
                t->add[std::size_t(a) * q + b] =
                    static_cast<Elem>(scalar_index(f, scalar_add(f, elems[a], elems[b])));
                t->mul[std::size_t(a) * q + b] =
                    static_cast<Elem>(scalar_index(f, scalar_mul(f, elems[a], elems[b])));
            }
        }
        t_ = std::move(t);
        char2_ = (t_->p == 2);
    }

    const Field& field() const { return t_->field; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }

    Elem add(Elem a, Elem b) const { return t_->add[std::size_t(a) * t_->q + b]; }
    Elem sub(Elem a, Elem b) const { return add(a, t_->neg[b]); }
    Elem neg(Elem a) const { return t_->neg[a]; }
    Elem mul(Elem a, Elem b) const { return t_->mul[std::size_t(a) * t_->q + b]; }
    Elem inv(Elem a) const {
        if (a == 0) throw UsageError("division by zero: inv(0)");
        return t_->inv[a];
    }

    Elem from_int(long long v) const {
        long long p = t_->field.characteristic;
        long long m = v % p;
        return static_cast<Elem>(m < 0 ? m + p : m); // prime-subfield index = value
    }
    Elem from_bigint(const BigInt& v) const {
        return static_cast<Elem>(mpz_fdiv_ui(v.get_mpz_t(), t_->p));
    }
    Elem from_scalar(const Scalar& s) const {
        return static_cast<Elem>(scalar_index(t_->field, s));
    }
    Scalar to_scalar(Elem a) const { return scalar_from_index(t_->field, a); }
    std::string str(Elem a) const { return scalar_str(t_->field, to_scalar(a)); }

    std::vector<Elem> enumerate() const {
        std::vector<Elem> out(t_->q);
        for (unsigned i = 0; i < t_->q; ++i) out[i] = static_cast<Elem>(i);
        return out;
    }

    void axpy(Elem* dst, const Elem* src, std::size_t len, Elem f) const {
        if (f == 0) return;
        const unsigned q = t_->q;
        if (char2_) {
            if (f == 1) {
                for (std::size_t i = 0; i < len; ++i) dst[i] ^= src[i];
            } else {
                const Elem* mrow = &t_->mul[std::size_t(f) * q];
                for (std::size_t i = 0; i < len; ++i) dst[i] ^= mrow[src[i]];
            }
        } else {
            const Elem* mrow = &t_->mul[std::size_t(f) * q];
            const Elem* addt = t_->add.data();
            for (std::size_t i = 0; i < len; ++i)
                dst[i] = addt[std::size_t(dst[i]) * q + mrow[src[i]]];
        }
    }
    void scale_row(Elem* dst, std::size_t len, Elem f) const {
        if (f == 1) return;
        const Elem* mrow = &t_->mul[std::size_t(f) * t_->q];
        for (std::size_t i = 0; i < len; ++i) dst[i] = mrow[dst[i]];
    }

    bool same(const ExtOps& o) const { return t_->field == o.t_->field; }

private:
    struct Tables {
        Field field;
        unsigned q = 0, p = 0;
        std::vector<Elem> add, mul, neg, inv;
    };
    std::shared_ptr<const Tables> t_;
    bool char2_ = false;
};

// ---------------------------------------------------------------------------
// RatOps
// ---------------------------------------------------------------------------

class RatOps {
public:
    using Elem = mpq_class;
    static constexpr bool kDenseElim = false;

    RatOps() : field_(std::make_shared<Field>(rational_field())) {}
    explicit RatOps(const Field& f) : RatOps() {
        if (!f.is_rational()) throw InternalError("RatOps requires the rational field");
    }

    const Field& field() const { return *field_; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return a == 0; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw UsageError("division by zero: inv(0)");
        return 1 / a;
    }

    Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
    Elem from_bigint(const BigInt& v) const { return Elem(v); }
    Elem from_scalar(const Scalar& s) const {
        if (s.chr != 0) throw UsageError("field mismatch in scalar conversion");
        return s.rat;
    }
    Scalar to_scalar(const Elem& a) const {
        Scalar s;
        s.chr = 0;
        s.deg = 1;
        s.rat = a;
        return s;
    }
    std::string str(const Elem& a) const { return a.get_str(); }

    std::vector<Elem> enumerate() const {
        throw UnsupportedError("element enumeration is not supported over the rational field");
    }

    void axpy(Elem* dst, const Elem* src, std::size_t len, const Elem& f) const {
        if (f == 0) return;
        mpq_class t;
        for (std::size_t i = 0; i < len; ++i) {
            if (src[i] == 0) continue;
            mpq_mul(t.get_mpq_t(), f.get_mpq_t(), src[i].get_mpq_t());
            mpq_add(dst[i].get_mpq_t(), dst[i].get_mpq_t(), t.get_mpq_t());
        }
    }
    void scale_row(Elem* dst, std::size_t len, const Elem& f) const {
        if (f == 1) return;
        for (std::size_t i = 0; i < len; ++i)
            if (dst[i] != 0) dst[i] *= f;
    }

    bool same(const RatOps&) const { return true; }

private:
    std::shared_ptr<const Field> field_;
};

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

// Calls fn with the kernel type appropriate for the field; fn must be a
// generic callable accepting any of the three kernel types.
template <class Fn>
auto with_field_ops(const Field& f, Fn&& fn) {
    if (f.is_rational()) return fn(RatOps(f));
    if (f.degree == 1) return fn(PrimeOps(f));
    return fn(ExtOps(f));
}

} // namespace swdual
