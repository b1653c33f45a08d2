#include "doctest.h"

#include "swdual/tensor.hpp"

#include "test_util.hpp"

#include <random>
#include <vector>

using namespace swdual;
using namespace swtest;

namespace {

MultiIndex mi(int n, std::vector<int> entries) {
    MultiIndex i;
    i.n = n;
    i.r = static_cast<int>(entries.size());
    i.entries = std::move(entries);
    return i;
}

// Apply sigma to a multi-index directly: (sigma.j)_a = j_{sigma^{-1}(a)}.
MultiIndex act(const Perm& sigma, const MultiIndex& j) {
    const Perm inv = perm_inverse(sigma);
    MultiIndex out = j;
    for (int a = 0; a < j.r; ++a)
        out.entries[static_cast<std::size_t>(a)] =
            j.entries[static_cast<std::size_t>(inv[static_cast<std::size_t>(a)])];
    return out;
}

} // namespace

TEST_SUITE("tensor") {

TEST_CASE("rank and unrank are mutually inverse") {
    const Caps caps;
    CHECK(rank_index(mi(3, {1, 1, 1})) == 0);
    CHECK(rank_index(mi(2, {1, 2})) == 1);
    CHECK(rank_index(mi(2, {2, 1})) == 2);
    CHECK(rank_index(mi(2, {2, 2})) == 3);
    CHECK(rank_index(mi(3, {2, 3})) == 5);
    for (int n : {2, 3}) {
        for (int r : {1, 2, 3}) {
            const long long D = tensor_dim(n, r, caps);
            CHECK(D == [&] { long long d = 1; for (int i = 0; i < r; ++i) d *= n; return d; }());
            for (long long k = 0; k < D; ++k) {
                const MultiIndex i = unrank_index(k, n, r);
                CHECK(static_cast<int>(i.entries.size()) == r);
                CHECK(rank_index(i) == k);
            }
        }
    }
    CHECK_THROWS_AS((void)rank_index(mi(2, {1, 3})), UsageError);
    CHECK_THROWS_AS((void)unrank_index(8, 2, 3), UsageError);
    CHECK_THROWS_AS((void)unrank_index(-1, 2, 3), UsageError);
}

TEST_CASE("weights count slot contents and sum to r") {
    CHECK(weight(mi(3, {1, 3, 1, 2})) == std::vector<int>{2, 1, 1});
    CHECK(weight(mi(2, {2, 2, 2})) == std::vector<int>{0, 3});
    const Caps caps;
    for (long long k = 0; k < tensor_dim(3, 3, caps); ++k) {
        const auto w = weight(unrank_index(k, 3, 3));
        int total = 0;
        for (int c : w) total += c;
        CHECK(total == 3);
    }
}

TEST_CASE("permutation composition and inversion") {
    const Perm id = perm_identity(4);
    const Perm cyc = {1, 2, 0, 3}; // 0->1->2->0
    CHECK(perm_compose(cyc, perm_inverse(cyc)) == id);
    CHECK(perm_compose(perm_inverse(cyc), cyc) == id);
    const Perm swap01 = {1, 0, 2, 3};
    // compose applies the right factor first
    CHECK(perm_compose(cyc, swap01) == Perm{2, 1, 0, 3});
}

TEST_CASE("place permutation operators are permutation matrices") {
    const Caps caps;
    with_field_ops(F3(), [&](const auto& k) {
        const int n = 2, r = 3;
        const long long D = tensor_dim(n, r, caps);
        for (const Perm& sigma : symmetric_group_elements(r, caps)) {
            const auto P = place_permutation_operator(k, sigma, n, r, caps);
            for (int i = 0; i < D; ++i) {
                int row_ones = 0, col_ones = 0;
                for (int j = 0; j < D; ++j) {
                    if (!k.is_zero(P.at(i, j))) {
                        CHECK(P.at(i, j) == k.one());
                        ++row_ones;
                    }
                    if (!k.is_zero(P.at(j, i))) ++col_ones;
                }
                CHECK(row_ones == 1);
                CHECK(col_ones == 1);
            }
        }
    });
}

TEST_CASE("place permutation implements the left slot action") {
    const Caps caps;
    with_field_ops(F2(), [&](const auto& k) {
        const int n = 2, r = 3;
        const long long D = tensor_dim(n, r, caps);
        for (const Perm& sigma : symmetric_group_elements(r, caps)) {
            const auto P = place_permutation_operator(k, sigma, n, r, caps);
            for (long long jj = 0; jj < D; ++jj) {
                const long long target = rank_index(act(sigma, unrank_index(jj, n, r)));
                CHECK(P.at(static_cast<int>(target), static_cast<int>(jj)) == k.one());
            }
        }
        // identity and an explicit 3-cycle
        const auto I = place_permutation_operator(k, perm_identity(r), n, r, caps);
        using KT = std::decay_t<decltype(k)>;
        CHECK(I == Mat<KT>::identity(k, static_cast<int>(D)));
        const Perm cyc = {1, 2, 0};
        const auto P = place_permutation_operator(k, cyc, n, r, caps);
        CHECK(P.mul(P).mul(P) == Mat<KT>::identity(k, static_cast<int>(D)));
    });
}

TEST_CASE("place permutation is a homomorphism for the left action") {
    const Caps caps;
    std::mt19937 rng(41);
    with_field_ops(F5(), [&](const auto& k) {
        const int n = 2;
        for (const Perm& s : symmetric_group_elements(3, caps)) {
            for (const Perm& t : symmetric_group_elements(3, caps)) {
                const auto Ps = place_permutation_operator(k, s, n, 3, caps);
                const auto Pt = place_permutation_operator(k, t, n, 3, caps);
                const auto Pst = place_permutation_operator(k, perm_compose(s, t), n, 3, caps);
                CHECK(Ps.mul(Pt) == Pst);
            }
        }
        // spot-check the same law at r = 4 with random pairs
        const auto all4 = symmetric_group_elements(4, caps);
        std::uniform_int_distribution<std::size_t> pick(0, all4.size() - 1);
        for (int trial = 0; trial < 6; ++trial) {
            const Perm& s = all4[pick(rng)];
            const Perm& t = all4[pick(rng)];
            const auto lhs = place_permutation_operator(k, s, n, 4, caps)
                                 .mul(place_permutation_operator(k, t, n, 4, caps));
            CHECK(lhs == place_permutation_operator(k, perm_compose(s, t), n, 4, caps));
        }
    });
}

TEST_CASE("tensor power of the identity and of a unipotent matrix") {
    const Caps caps;
    with_field_ops(F2(), [&](const auto& k) {
        using KT = std::decay_t<decltype(k)>;
        const auto I2 = Mat<KT>::identity(k, 2);
        CHECK(tensor_power_operator(k, I2, 3, caps) == Mat<KT>::identity(k, 8));

        Mat<KT> u(k, 2, 2); // [[1,1],[0,1]]
        u.at(0, 0) = k.one();
        u.at(0, 1) = k.one();
        u.at(1, 1) = k.one();
        const auto U = tensor_power_operator(k, u, 2, caps);
        // first row of u^{(x)2} is the tensor of first rows: all ones
        for (int j = 0; j < 4; ++j) CHECK(U.at(0, j) == k.one());
        CHECK(k.is_zero(U.at(1, 0)));
        CHECK(U.at(1, 1) == k.one());
    });
}

TEST_CASE("tensor power is multiplicative and commutes with place permutations") {
    const Caps caps;
    std::mt19937 rng(43);
    for (const Field f : {F3(), QQ()}) {
        with_field_ops(f, [&](const auto& k) {
            const int n = 2, r = 3;
            for (int trial = 0; trial < 4; ++trial) {
                const auto a = random_mat(k, n, n, rng);
                const auto b = random_mat(k, n, n, rng);
                const auto lhs = tensor_power_operator(k, a.mul(b), r, caps);
                const auto rhs = tensor_power_operator(k, a, r, caps)
                                     .mul(tensor_power_operator(k, b, r, caps));
                CHECK(lhs == rhs);
                const auto A = tensor_power_operator(k, a, r, caps);
                for (const Perm& sigma : adjacent_transpositions(r)) {
                    const auto P = place_permutation_operator(k, sigma, n, r, caps);
                    CHECK(P.mul(A) == A.mul(P));
                }
            }
        });
    }
}

TEST_CASE("determinant of a tensor power") {
    const Caps caps;
    std::mt19937 rng(47);
    with_field_ops(QQ(), [&](const auto& k) {
        const int n = 2, r = 2;
        const auto g = random_invertible(k, n, rng);
        const auto G = tensor_power_operator(k, g, r, caps);
        // det(g^{(x)r}) = det(g)^(r * n^(r-1)); here exponent = 2 * 2 = 4
        auto expected = k.one();
        for (int i = 0; i < 4; ++i) expected = k.mul(expected, det(g));
        CHECK(det(G) == expected);
    });
}

TEST_CASE("symmetric group enumeration is lexicographic and complete") {
    const Caps caps;
    const auto s3 = symmetric_group_elements(3, caps);
    REQUIRE(s3.size() == 6);
    CHECK(s3.front() == Perm{0, 1, 2});
    CHECK(s3.back() == Perm{2, 1, 0});
    for (std::size_t i = 1; i < s3.size(); ++i) CHECK(s3[i - 1] < s3[i]);
    CHECK(symmetric_group_elements(0, caps).size() == 1);
    CHECK(symmetric_group_elements(1, caps).size() == 1);
    CHECK(symmetric_group_elements(7, caps).size() == 5040);
    CHECK(adjacent_transpositions(4).size() == 3);
    CHECK(adjacent_transpositions(1).empty());
}

TEST_CASE("dimension and factorial caps trigger") {
    Caps caps;
    caps.max_tensor_dim = 100;
    CHECK(tensor_dim(4, 3, caps) == 64);
    CHECK_THROWS_AS((void)tensor_dim(5, 3, caps), ResourceLimitError);
    CHECK_THROWS_AS((void)tensor_dim(0, 2, caps), UsageError);
    Caps small;
    small.max_factorial = 24;
    CHECK(symmetric_group_elements(4, small).size() == 24);
    CHECK_THROWS_AS((void)symmetric_group_elements(5, small), ResourceLimitError);
}

} // TEST_SUITE
