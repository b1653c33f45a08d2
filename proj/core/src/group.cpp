#include "swdual/group.hpp"

namespace swdual {

BigInt group_order(const GroupSpec& spec) {
    if (!spec.field.is_finite())
        throw UnsupportedError("group order requires a finite field");
    if (spec.n < 1) throw UsageError("group degree must be at least 1");
    const BigInt q(static_cast<long>(spec.field.cardinality));
    const BigInt qn = big_pow(q, static_cast<unsigned long>(spec.n));
    BigInt order(1);
    for (int i = 0; i < spec.n; ++i) order *= qn - big_pow(q, static_cast<unsigned long>(i));
    if (spec.kind == GroupKind::SL) {
        BigInt rem;
        BigInt quot;
        BigInt den = q - 1;
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), order.get_mpz_t(), den.get_mpz_t());
        if (rem != 0) throw InternalError("SL order division left a remainder");
        order = quot;
    }
    return order;
}

} // namespace swdual
