#pragma once

#include "swdual/bigint.hpp"
#include "swdual/errors.hpp"

#include <string>
#include <vector>

namespace swdual {

// Description of a coefficient field: F_{p^e} presented as F_p[x]/(modulus),
// or the rationals (characteristic 0).  Construction is deterministic: for a
// given (p, e) the modulus is always the same polynomial, so every value in
// the toolkit is bit-reproducible across runs and machines.
struct Field {
    long long characteristic = 0;      // prime p, or 0 for Q
    int degree = 1;                    // e >= 1; always 1 for Q
    std::vector<long long> modulus;    // e+1 coefficients, constant term first,
                                       // monic; empty when degree == 1
    long long cardinality = 0;         // p^e; 0 means infinite

    bool is_rational() const { return characteristic == 0; }
    bool is_finite() const { return characteristic != 0; }
    bool operator==(const Field&) const = default;
};

// One field element.  Finite-field elements are coefficient vectors in the
// power basis of the modulus (length = degree, entries reduced mod p);
// rational elements are exact fractions in lowest terms.  The characteristic
// and degree travel with the value so that mixed-field arithmetic is
// detected instead of silently producing nonsense.
struct Scalar {
    long long chr = 0;                 // 0 = rational
    int deg = 1;
    std::vector<long long> coeffs;     // finite case, length deg
    BigRat rat = BigRat(0);            // rational case

    bool operator==(const Scalar& o) const {
        if (chr != o.chr || deg != o.deg) return false;
        return chr == 0 ? rat == o.rat : coeffs == o.coeffs;
    }
};

// --- construction -----------------------------------------------------------

// make_field(p, e): F_{p^e} with the lexicographically smallest monic
// irreducible modulus of degree e (coefficient tuples compared from the
// constant term upward); make_field(0, 1) is Q.
Field make_field(long long p, int e);
Field rational_field();

// Parses "Q", "<p>" (prime), or "<q>=<p>^<e>" descriptor strings.
Field parse_field(const std::string& descriptor);

// Renders the canonical descriptor: "Q", "2", "4=2^2", ...
std::string field_str(const Field& f);

// --- element construction and arithmetic ------------------------------------

Scalar scalar_zero(const Field& f);
Scalar scalar_one(const Field& f);
Scalar scalar_from_int(const Field& f, long long v);
Scalar scalar_from_fraction(const Field& f, long long num, long long den);

bool scalar_is_zero(const Scalar& a);

Scalar scalar_add(const Field& f, const Scalar& a, const Scalar& b);
Scalar scalar_sub(const Field& f, const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Field& f, const Scalar& a, const Scalar& b);
Scalar scalar_neg(const Field& f, const Scalar& a);
Scalar scalar_inv(const Field& f, const Scalar& a);
Scalar scalar_pow(const Field& f, const Scalar& a, unsigned long n);

std::string scalar_str(const Field& f, const Scalar& a);

// --- enumeration ------------------------------------------------------------

// Canonical index of a finite-field element: sum coeffs[i] * p^i, so the
// enumeration order is coefficient-lexicographic with zero first
// (F_4: 0, 1, x, x+1).
long long scalar_index(const Field& f, const Scalar& a);
Scalar scalar_from_index(const Field& f, long long idx);

// All q elements in canonical index order.  Throws UnsupportedError for Q
// and ResourceLimitError when q exceeds the cap.
std::vector<Scalar> enumerate_elements(const Field& f, long long max_count = 4096);

// First element in enumeration order with multiplicative order q - 1.
Scalar primitive_element(const Field& f);

} // namespace swdual
