#pragma once

#include "swdual/errors.hpp"

#include <gmpxx.h>

#include <string>

namespace swdual {

// Exact arbitrary-precision integers and rationals.  GMP supplies the
// arithmetic; these helpers add the handful of combinatorial quantities the
// library needs, always exactly.
using BigInt = mpz_class;
using BigRat = mpq_class;

// gmpxx constructors stop at long; these helpers take long long explicitly.
static_assert(sizeof(long) == sizeof(long long),
              "LP64 assumed: long long values are constructed via mpz_set_si");

inline BigInt big_of(long long v) {
    BigInt r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

inline BigRat rat_of(long long num, long long den = 1) {
    BigRat r(big_of(num), big_of(den));
    r.canonicalize();
    return r;
}

inline BigInt big_factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt big_binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt big_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Exact conversion to a machine integer; throws if the value does not fit.
inline long long to_long(const BigInt& v, const char* context) {
    if (!v.fits_slong_p()) {
        throw ResourceLimitError(std::string(context) + " exceeds machine range: " + v.get_str());
    }
    return v.get_si();
}

// catalan(r) = binomial(2r, r) / (r + 1), exactly.
inline long long catalan_number(int r) {
    if (r < 0) throw UsageError("catalan index must be nonnegative");
    BigInt c = big_binomial(2ul * static_cast<unsigned long>(r), static_cast<unsigned long>(r));
    BigInt denom(r + 1);
    BigInt q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), denom.get_mpz_t());
    if (rem != 0) throw InternalError("catalan division left a remainder");
    return to_long(q, "catalan number");
}

} // namespace swdual
