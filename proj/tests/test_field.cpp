#include "doctest.h"

#include "swdual/errors.hpp"
#include "swdual/field.hpp"
#include "swdual/field_ops.hpp"

#include "test_util.hpp"

#include <set>
#include <vector>

using namespace swdual;
using namespace swtest;

TEST_SUITE("field") {

TEST_CASE("prime field arithmetic") {
    const Field f = F3();
    const Scalar two = scalar_from_int(f, 2);
    CHECK(scalar_mul(f, two, two) == scalar_one(f));     // 4 = 1 mod 3
    CHECK(scalar_add(f, two, two) == scalar_one(f));     // 4 = 1 mod 3
    CHECK(scalar_neg(f, scalar_one(f)) == two);          // -1 = 2 mod 3
    CHECK(scalar_is_zero(scalar_add(f, two, scalar_one(f))));

    const Field g = F2();
    CHECK(scalar_is_zero(scalar_add(g, scalar_one(g), scalar_one(g))));
}

TEST_CASE("modulus polynomials are the canonical smallest irreducibles") {
    // Compared coefficient-by-coefficient from the constant term upward.
    CHECK(make_field(2, 2).modulus == std::vector<long long>{1, 1, 1});    // x^2+x+1
    CHECK(make_field(2, 3).modulus == std::vector<long long>{1, 0, 1, 1}); // x^3+x^2+1
    CHECK(make_field(3, 2).modulus == std::vector<long long>{1, 0, 1});    // x^2+1
}

TEST_CASE("element indexing is a bijection and orders the enumeration") {
    for (const Field f : {F4(), F8(), F9()}) {
        const auto elems = enumerate_elements(f);
        CHECK(static_cast<long long>(elems.size()) == f.cardinality);
        for (long long i = 0; i < f.cardinality; ++i) {
            CHECK(scalar_index(f, elems[static_cast<std::size_t>(i)]) == i);
            CHECK(scalar_from_index(f, i) == elems[static_cast<std::size_t>(i)]);
        }
        CHECK(scalar_is_zero(elems[0]));
        CHECK(elems[1] == scalar_one(f));
    }
    // Index packing: in F_4 = F_2[x]/(x^2+x+1), index 2 is x and index 3 is x+1.
    const Field f4 = F4();
    CHECK(scalar_str(f4, scalar_from_index(f4, 2)) == "x");
    CHECK(scalar_str(f4, scalar_from_index(f4, 3)) == "x+1");
}

TEST_CASE("extension field axioms hold for every element triple") {
    for (const Field f : {F4(), F8(), F9()}) {
        const auto e = enumerate_elements(f);
        for (const Scalar& a : e)
            for (const Scalar& b : e) {
                CHECK(scalar_add(f, a, b) == scalar_add(f, b, a));
                CHECK(scalar_mul(f, a, b) == scalar_mul(f, b, a));
                for (const Scalar& c : e) {
                    CHECK(scalar_mul(f, scalar_mul(f, a, b), c) ==
                          scalar_mul(f, a, scalar_mul(f, b, c)));
                    CHECK(scalar_mul(f, a, scalar_add(f, b, c)) ==
                          scalar_add(f, scalar_mul(f, a, b), scalar_mul(f, a, c)));
                }
            }
        for (const Scalar& a : e) {
            CHECK(scalar_is_zero(scalar_add(f, a, scalar_neg(f, a))));
            if (!scalar_is_zero(a))
                CHECK(scalar_mul(f, a, scalar_inv(f, a)) == scalar_one(f));
        }
    }
}

TEST_CASE("Frobenius is additive in characteristic p") {
    for (const Field f : {F4(), F8(), F9()}) {
        const auto p = static_cast<unsigned long>(f.characteristic);
        for (const Scalar& a : enumerate_elements(f))
            for (const Scalar& b : enumerate_elements(f))
                CHECK(scalar_pow(f, scalar_add(f, a, b), p) ==
                      scalar_add(f, scalar_pow(f, a, p), scalar_pow(f, b, p)));
    }
}

TEST_CASE("primitive element has full multiplicative order") {
    for (const Field f : {F4(), F5(), F7(), F8(), F9()}) {
        const Scalar g = primitive_element(f);
        std::set<long long> seen;
        Scalar x = scalar_one(f);
        for (long long i = 0; i + 1 < f.cardinality; ++i) {
            x = scalar_mul(f, x, g);
            seen.insert(scalar_index(f, x));
        }
        CHECK(static_cast<long long>(seen.size()) == f.cardinality - 1);
        CHECK(x == scalar_one(f)); // g^(q-1) = 1
    }
}

TEST_CASE("field descriptors parse and round-trip") {
    CHECK(parse_field("Q") == rational_field());
    CHECK(parse_field("7") == make_field(7, 1));
    CHECK(parse_field("4=2^2") == make_field(2, 2));
    CHECK(parse_field("49=7^2") == make_field(7, 2));
    for (const Field f : {F2(), F5(), F4(), F9(), QQ()})
        CHECK(parse_field(field_str(f)) == f);
    CHECK(field_str(F4()) == "4=2^2");
    CHECK(field_str(QQ()) == "Q");
    CHECK(field_str(F5()) == "5");

    CHECK_THROWS_AS((void)parse_field("6"), UsageError);     // not prime
    CHECK_THROWS_AS((void)parse_field("4=3^2"), UsageError); // 3^2 != 4
    CHECK_THROWS_AS((void)parse_field("abc"), UsageError);
    CHECK_THROWS_AS((void)parse_field("1"), UsageError);
    CHECK_THROWS_AS((void)parse_field("0"), UsageError);
    CHECK_THROWS_AS((void)make_field(6, 1), UsageError);
}

TEST_CASE("rational arithmetic is exact") {
    const Field q = QQ();
    const Scalar third = scalar_from_fraction(q, 1, 3);
    const Scalar two_thirds = scalar_from_fraction(q, 2, 3);
    CHECK(scalar_add(q, third, two_thirds) == scalar_one(q));
    CHECK(scalar_mul(q, scalar_from_int(q, 5), scalar_inv(q, scalar_from_int(q, 5))) ==
          scalar_one(q));
    CHECK(scalar_pow(q, scalar_from_fraction(q, 1, 2), 3) == scalar_from_fraction(q, 1, 8));
    CHECK_THROWS_AS((void)scalar_inv(q, scalar_zero(q)), UsageError);
    CHECK_THROWS_AS((void)scalar_from_fraction(q, 1, 0), UsageError);
    CHECK_THROWS_AS((void)enumerate_elements(q), UnsupportedError);
}

TEST_CASE("scalar_pow matches repeated multiplication") {
    for (const Field f : {F5(), F8()}) {
        for (const Scalar& a : enumerate_elements(f)) {
            Scalar acc = scalar_one(f);
            for (unsigned long e = 0; e <= 6; ++e) {
                CHECK(scalar_pow(f, a, e) == acc);
                acc = scalar_mul(f, acc, a);
            }
        }
    }
}

TEST_CASE("kernel tables agree with the polynomial layer") {
    for (const Field f : {F2(), F3(), F5(), F4(), F8(), F9()}) {
        with_field_ops(f, [&](const auto& k) {
            const auto elems = enumerate_elements(f);
            for (const Scalar& a : elems)
                for (const Scalar& b : elems) {
                    CHECK(k.to_scalar(k.add(k.from_scalar(a), k.from_scalar(b))) ==
                          scalar_add(f, a, b));
                    CHECK(k.to_scalar(k.mul(k.from_scalar(a), k.from_scalar(b))) ==
                          scalar_mul(f, a, b));
                }
            for (const Scalar& a : elems) {
                CHECK(k.to_scalar(k.neg(k.from_scalar(a))) == scalar_neg(f, a));
                if (!scalar_is_zero(a))
                    CHECK(k.to_scalar(k.inv(k.from_scalar(a))) == scalar_inv(f, a));
            }
        });
    }
}

TEST_CASE("kernel axpy and scale_row match elementwise arithmetic") {
    std::mt19937 rng(1234);
    for (const Field f : {F2(), F3(), F5(), F4(), F8(), F9(), QQ()}) {
        with_field_ops(f, [&](const auto& k) {
            using Elem = typename std::decay_t<decltype(k)>::Elem;
            const std::size_t len = 37;
            for (int trial = 0; trial < 8; ++trial) {
                std::vector<Elem> dst, src;
                for (std::size_t i = 0; i < len; ++i) {
                    dst.push_back(random_elem(k, rng));
                    src.push_back(random_elem(k, rng));
                }
                const Elem fac = random_elem(k, rng);
                std::vector<Elem> expect_axpy, expect_scale;
                for (std::size_t i = 0; i < len; ++i) {
                    expect_axpy.push_back(k.add(dst[i], k.mul(fac, src[i])));
                    expect_scale.push_back(k.mul(dst[i], fac));
                }
                std::vector<Elem> got = dst;
                k.axpy(got.data(), src.data(), len, fac);
                CHECK(got == expect_axpy);
                got = dst;
                k.scale_row(got.data(), len, fac);
                CHECK(got == expect_scale);
            }
        });
    }
}

TEST_CASE("field size cap is enforced") {
    CHECK_THROWS_AS((void)make_field(2, 25), ResourceLimitError);
}

} // TEST_SUITE
