#include "swdual/field.hpp"

#include <algorithm>
#include <cstdlib>

namespace swdual {

namespace {

// ---- integers mod p ---------------------------------------------------------

long long mod_reduce(long long v, long long p) {
    long long m = v % p;
    return m < 0 ? m + p : m;
}

bool is_prime_ll(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long inv_mod_prime(long long a, long long p) {
    // extended Euclid; a in [1, p)
    long long old_r = a, r = p, old_s = 1, s = 0;
    while (r != 0) {
        long long quot = old_r / r;
        long long tmp = old_r - quot * r; old_r = r; r = tmp;
        tmp = old_s - quot * s; old_s = s; s = tmp;
    }
    return mod_reduce(old_s, p);
}

// ---- polynomials over F_p ---------------------------------------------------
// Representation: coefficient vectors, constant term first, no trailing zeros
// (the zero polynomial is the empty vector).

using Poly = std::vector<long long>;

Poly ptrim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly padd(const Poly& a, const Poly& b, long long p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = mod_reduce(r[i] + b[i], p);
    return ptrim(std::move(r));
}

Poly psub(const Poly& a, const Poly& b, long long p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = mod_reduce(r[i] - b[i], p);
    return ptrim(std::move(r));
}

Poly pmul(const Poly& a, const Poly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod_reduce(r[i + j] + a[i] * b[j], p);
    }
    return ptrim(std::move(r));
}

Poly pscale(const Poly& a, long long c, long long p) {
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mod_reduce(a[i] * c, p);
    return ptrim(std::move(r));
}

// Remainder of a modulo b (b nonzero).
Poly pmod(Poly a, const Poly& b, long long p) {
    a = ptrim(std::move(a));
    long long lead_inv = inv_mod_prime(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        long long c = mod_reduce(a.back() * lead_inv, p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[i + shift] = mod_reduce(a[i + shift] - c * b[i], p);
        a = ptrim(std::move(a));
    }
    return a;
}

// Inverse of a modulo f (f irreducible, a nonzero mod f) via extended Euclid.
Poly pinv_mod(const Poly& a, const Poly& f, long long p) {
    Poly old_r = f, r = a, old_t = {}, t = {1};
    while (!r.empty()) {
        // quotient of old_r by r
        Poly quot;
        {
            Poly num = old_r;
            long long li = inv_mod_prime(r.back(), p);
            quot.assign(num.size() >= r.size() ? num.size() - r.size() + 1 : 0, 0);
            while (num.size() >= r.size() && !num.empty()) {
                long long c = mod_reduce(num.back() * li, p);
                size_t shift = num.size() - r.size();
                quot[shift] = c;
                for (size_t i = 0; i < r.size(); ++i)
                    num[i + shift] = mod_reduce(num[i + shift] - c * r[i], p);
                num = ptrim(std::move(num));
            }
            quot = ptrim(std::move(quot));
        }
        Poly nr = psub(old_r, pmul(quot, r, p), p);
        old_r = r; r = nr;
        Poly nt = psub(old_t, pmul(quot, t, p), p);
        old_t = t; t = nt;
    }
    // old_r = gcd (a nonzero unit multiple of 1 since f irreducible, a != 0)
    if (old_r.size() != 1) throw InternalError("gcd with irreducible modulus is not a unit");
    return pmod(pscale(old_t, inv_mod_prime(old_r[0], p), p), f, p);
}

bool is_irreducible(const Poly& f, long long p) {
    // trial division by every monic polynomial of degree 1 .. deg(f)/2
    int e = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= e; ++d) {
        // iterate all p^d coefficient vectors for the non-leading coefficients
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            long long rest = idx;
            for (int i = 0; i < d; ++i) { g[i] = rest % p; rest /= p; }
            g[d] = 1;
            if (pmod(f, g, p).empty()) return false;
        }
    }
    return true;
}

void check_finite(const Field& f, const char* op) {
    if (f.is_rational())
        throw UnsupportedError(std::string(op) + " is not supported over the rational field");
}

void check_member(const Field& f, const Scalar& a) {
    if (a.chr != f.characteristic || a.deg != f.degree)
        throw UsageError("field mismatch: scalar does not belong to " + field_str(f));
    if (f.is_finite()) {
        if (a.coeffs.size() != static_cast<size_t>(f.degree))
            throw UsageError("field mismatch: malformed coefficient vector");
        for (long long c : a.coeffs)
            if (c < 0 || c >= f.characteristic)
                throw UsageError("field mismatch: coefficient out of range");
    }
}

Scalar finite_scalar(const Field& f, Poly reduced) {
    Scalar s;
    s.chr = f.characteristic;
    s.deg = f.degree;
    s.coeffs.assign(static_cast<size_t>(f.degree), 0);
    for (size_t i = 0; i < reduced.size(); ++i) s.coeffs[i] = reduced[i];
    return s;
}

Poly to_poly(const Scalar& a) {
    Poly v(a.coeffs);
    return ptrim(std::move(v));
}

} // namespace

// ---- field construction -----------------------------------------------------

Field rational_field() {
    Field f;
    f.characteristic = 0;
    f.degree = 1;
    f.cardinality = 0;
    return f;
}

Field make_field(long long p, int e) {
    if (p == 0) {
        if (e != 1) throw UsageError("the rational field requires degree 1");
        return rational_field();
    }
    if (!is_prime_ll(p))
        throw UsageError("field characteristic must be prime, got " + std::to_string(p));
    if (e < 1) throw UsageError("field degree must be at least 1");

    // keep q comfortably inside long long and the modulus search tractable
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > (1LL << 20))
            throw ResourceLimitError("field cardinality cap exceeded: p^e > 2^20 for p=" +
                                     std::to_string(p) + ", e=" + std::to_string(e));
    }

    Field f;
    f.characteristic = p;
    f.degree = e;
    f.cardinality = q;
    if (e == 1) return f;

    // Search the lexicographically smallest monic irreducible of degree e.
    // Candidate tuples (c_0, ..., c_{e-1}) are compared from the constant
    // term upward, so c_0 is the most significant search digit.
    long long count = q; // p^e candidate tuples
    for (long long idx = 0; idx < count; ++idx) {
        Poly cand(e + 1, 0);
        long long rest = idx;
        for (int i = e - 1; i >= 0; --i) { cand[i] = rest % p; rest /= p; }
        cand[e] = 1;
        if (is_irreducible(cand, p)) {
            f.modulus = cand;
            return f;
        }
    }
    throw InternalError("no irreducible polynomial found (impossible over a finite field)");
}

Field parse_field(const std::string& descriptor) {
    if (descriptor == "Q") return rational_field();
    auto parse_ll = [&](const std::string& s) -> long long {
        if (s.empty()) throw UsageError("malformed field descriptor: '" + descriptor + "'");
        char* end = nullptr;
        long long v = std::strtoll(s.c_str(), &end, 10);
        if (end != s.c_str() + s.size() || v < 0)
            throw UsageError("malformed field descriptor: '" + descriptor + "'");
        return v;
    };
    auto eq = descriptor.find('=');
    if (eq == std::string::npos) {
        long long p = parse_ll(descriptor);
        if (!is_prime_ll(p))
            throw UsageError("field descriptor '" + descriptor +
                             "' is not prime; use the form q=p^e for prime powers");
        return make_field(p, 1);
    }
    long long q = parse_ll(descriptor.substr(0, eq));
    std::string rest = descriptor.substr(eq + 1);
    auto caret = rest.find('^');
    if (caret == std::string::npos)
        throw UsageError("malformed field descriptor: '" + descriptor + "' (expected q=p^e)");
    long long p = parse_ll(rest.substr(0, caret));
    long long e = parse_ll(rest.substr(caret + 1));
    if (e < 1 || e > 62) throw UsageError("field degree out of range in '" + descriptor + "'");
    Field f = make_field(p, static_cast<int>(e));
    if (f.cardinality != q)
        throw UsageError("inconsistent field descriptor '" + descriptor + "': " +
                         std::to_string(p) + "^" + std::to_string(e) + " != " + std::to_string(q));
    return f;
}

std::string field_str(const Field& f) {
    if (f.is_rational()) return "Q";
    if (f.degree == 1) return std::to_string(f.characteristic);
    return std::to_string(f.cardinality) + "=" + std::to_string(f.characteristic) + "^" +
           std::to_string(f.degree);
}

// ---- element construction ----------------------------------------------------

Scalar scalar_zero(const Field& f) { return scalar_from_int(f, 0); }
Scalar scalar_one(const Field& f) { return scalar_from_int(f, 1); }

Scalar scalar_from_int(const Field& f, long long v) {
    Scalar s;
    if (f.is_rational()) {
        s.chr = 0;
        s.deg = 1;
        s.rat = rat_of(v);
        return s;
    }
    s.chr = f.characteristic;
    s.deg = f.degree;
    s.coeffs.assign(static_cast<size_t>(f.degree), 0);
    s.coeffs[0] = mod_reduce(v, f.characteristic);
    return s;
}

Scalar scalar_from_fraction(const Field& f, long long num, long long den) {
    if (den == 0) throw UsageError("division by zero in fraction construction");
    if (f.is_rational()) {
        Scalar s;
        s.chr = 0;
        s.deg = 1;
        s.rat = rat_of(num, den);
        return s;
    }
    return scalar_mul(f, scalar_from_int(f, num), scalar_inv(f, scalar_from_int(f, den)));
}

bool scalar_is_zero(const Scalar& a) {
    if (a.chr == 0) return a.rat == 0;
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](long long c) { return c == 0; });
}

// ---- arithmetic ---------------------------------------------------------------

Scalar scalar_add(const Field& f, const Scalar& a, const Scalar& b) {
    check_member(f, a);
    check_member(f, b);
    if (f.is_rational()) {
        Scalar s = a;
        s.rat = a.rat + b.rat;
        return s;
    }
    Scalar s = a;
    for (int i = 0; i < f.degree; ++i)
        s.coeffs[i] = mod_reduce(a.coeffs[i] + b.coeffs[i], f.characteristic);
    return s;
}

Scalar scalar_sub(const Field& f, const Scalar& a, const Scalar& b) {
    return scalar_add(f, a, scalar_neg(f, b));
}

Scalar scalar_neg(const Field& f, const Scalar& a) {
    check_member(f, a);
    if (f.is_rational()) {
        Scalar s = a;
        s.rat = -a.rat;
        return s;
    }
    Scalar s = a;
    for (int i = 0; i < f.degree; ++i)
        s.coeffs[i] = mod_reduce(-a.coeffs[i], f.characteristic);
    return s;
}

Scalar scalar_mul(const Field& f, const Scalar& a, const Scalar& b) {
    check_member(f, a);
    check_member(f, b);
    if (f.is_rational()) {
        Scalar s = a;
        s.rat = a.rat * b.rat;
        return s;
    }
    if (f.degree == 1) {
        Scalar s = a;
        s.coeffs[0] = mod_reduce(a.coeffs[0] * b.coeffs[0], f.characteristic);
        return s;
    }
    Poly prod = pmul(to_poly(a), to_poly(b), f.characteristic);
    return finite_scalar(f, pmod(std::move(prod), f.modulus, f.characteristic));
}

Scalar scalar_inv(const Field& f, const Scalar& a) {
    check_member(f, a);
    if (scalar_is_zero(a)) throw UsageError("division by zero: inv(0)");
    if (f.is_rational()) {
        Scalar s = a;
        s.rat = 1 / a.rat;
        return s;
    }
    if (f.degree == 1) {
        Scalar s = a;
        s.coeffs[0] = inv_mod_prime(a.coeffs[0], f.characteristic);
        return s;
    }
    return finite_scalar(f, pinv_mod(to_poly(a), f.modulus, f.characteristic));
}

Scalar scalar_pow(const Field& f, const Scalar& a, unsigned long n) {
    Scalar result = scalar_one(f);
    Scalar base = a;
    while (n > 0) {
        if (n & 1ul) result = scalar_mul(f, result, base);
        base = scalar_mul(f, base, base);
        n >>= 1;
    }
    return result;
}

std::string scalar_str(const Field& f, const Scalar& a) {
    check_member(f, a);
    if (f.is_rational()) return a.rat.get_str();
    if (f.degree == 1) return std::to_string(a.coeffs[0]);
    std::string out;
    for (int i = f.degree - 1; i >= 0; --i) {
        long long c = a.coeffs[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

// ---- enumeration ---------------------------------------------------------------

long long scalar_index(const Field& f, const Scalar& a) {
    check_finite(f, "element indexing");
    check_member(f, a);
    long long idx = 0, place = 1;
    for (int i = 0; i < f.degree; ++i) {
        idx += a.coeffs[i] * place;
        place *= f.characteristic;
    }
    return idx;
}

Scalar scalar_from_index(const Field& f, long long idx) {
    check_finite(f, "element indexing");
    if (idx < 0 || idx >= f.cardinality)
        throw UsageError("element index out of range: " + std::to_string(idx));
    Scalar s;
    s.chr = f.characteristic;
    s.deg = f.degree;
    s.coeffs.assign(static_cast<size_t>(f.degree), 0);
    for (int i = 0; i < f.degree; ++i) {
        s.coeffs[i] = idx % f.characteristic;
        idx /= f.characteristic;
    }
    return s;
}

std::vector<Scalar> enumerate_elements(const Field& f, long long max_count) {
    check_finite(f, "element enumeration");
    if (f.cardinality > max_count)
        throw ResourceLimitError("field enumeration cap exceeded: q = " +
                                 std::to_string(f.cardinality) + " > " +
                                 std::to_string(max_count));
    std::vector<Scalar> out;
    out.reserve(static_cast<size_t>(f.cardinality));
    for (long long i = 0; i < f.cardinality; ++i) out.push_back(scalar_from_index(f, i));
    return out;
}

Scalar primitive_element(const Field& f) {
    check_finite(f, "primitive element search");
    long long group_order = f.cardinality - 1;
    // prime factors of q - 1
    std::vector<long long> factors;
    long long m = group_order;
    for (long long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) factors.push_back(m);

    for (long long i = 1; i < f.cardinality; ++i) {
        Scalar a = scalar_from_index(f, i);
        bool primitive = true;
        for (long long ell : factors) {
            if (scalar_pow(f, a, static_cast<unsigned long>(group_order / ell)) == scalar_one(f)) {
                primitive = false;
                break;
            }
        }
        if (primitive) return a;
    }
    throw InternalError("no primitive element found (impossible for a finite field)");
}

} // namespace swdual
