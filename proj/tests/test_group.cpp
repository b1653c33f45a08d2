#include "doctest.h"

#include "swdual/group.hpp"

#include "test_util.hpp"

#include <set>
#include <string>
#include <vector>

using namespace swdual;
using namespace swtest;

namespace {

GroupSpec spec_of(GroupKind kind, int n, const Field& f) {
    GroupSpec s;
    s.kind = kind;
    s.n = n;
    s.field = f;
    return s;
}

// Stable textual key for a matrix over a finite field, for set comparisons.
template <class K>
std::string mat_key(const K& k, const Mat<K>& m) {
    std::string s;
    for (const auto& e : m.a) {
        s += k.str(e);
        s += '|';
    }
    return s;
}

// Closure of the generating set under multiplication (BFS over products).
template <class K>
std::set<std::string> generated_set(const K& k, const std::vector<Mat<K>>& gens, int n) {
    std::set<std::string> seen;
    std::vector<Mat<K>> work;
    auto push = [&](Mat<K> m) {
        if (seen.insert(mat_key(k, m)).second) work.push_back(std::move(m));
    };
    push(Mat<K>::identity(k, n));
    for (const auto& g : gens) push(g);
    for (std::size_t head = 0; head < work.size(); ++head)
        for (const auto& g : gens) push(work[head].mul(g));
    return seen;
}

} // namespace

TEST_SUITE("group") {

TEST_CASE("order formulas match known values") {
    CHECK(group_order(spec_of(GroupKind::GL, 2, F2())) == big_of(6));
    CHECK(group_order(spec_of(GroupKind::SL, 2, F2())) == big_of(6));
    CHECK(group_order(spec_of(GroupKind::GL, 2, F3())) == big_of(48));
    CHECK(group_order(spec_of(GroupKind::SL, 2, F3())) == big_of(24));
    CHECK(group_order(spec_of(GroupKind::GL, 2, F4())) == big_of(180));
    CHECK(group_order(spec_of(GroupKind::SL, 2, F4())) == big_of(60));
    CHECK(group_order(spec_of(GroupKind::GL, 3, F2())) == big_of(168));
    CHECK(group_order(spec_of(GroupKind::SL, 3, F2())) == big_of(168));
    CHECK(group_order(spec_of(GroupKind::GL, 1, F5())) == big_of(4));
    CHECK(group_order(spec_of(GroupKind::SL, 1, F9())) == big_of(1));
    CHECK(group_order(spec_of(GroupKind::GL, 2, F9())) == big_of(80 * 72));
}

TEST_CASE("enumeration yields each element exactly once with the right determinants") {
    const Caps caps;
    for (const Field f : {F2(), F3()}) {
        with_field_ops(f, [&](const auto& k) {
            for (const GroupKind kind : {GroupKind::GL, GroupKind::SL}) {
                const auto spec = spec_of(kind, 2, f);
                const auto elems = group_elements(k, spec, caps);
                CHECK(big_of(static_cast<long long>(elems.size())) == group_order(spec));
                std::set<std::string> keys;
                for (const auto& m : elems) {
                    keys.insert(mat_key(k, m));
                    const auto d = det(m);
                    if (kind == GroupKind::GL)
                        CHECK_FALSE(k.is_zero(d));
                    else
                        CHECK(d == k.one());
                }
                CHECK(keys.size() == elems.size());
            }
        });
    }
}

TEST_CASE("generators live in the right group") {
    const Caps caps;
    for (const Field f : {F2(), F3(), F4()}) {
        with_field_ops(f, [&](const auto& k) {
            for (int n : {1, 2, 3}) {
                const auto sl = group_generators(k, spec_of(GroupKind::SL, n, f));
                for (const auto& g : sl) CHECK(det(g) == k.one());
                const auto gl = group_generators(k, spec_of(GroupKind::GL, n, f));
                for (const auto& g : gl) CHECK_FALSE(k.is_zero(det(g)));
                // GL needs exactly one generator beyond the transvections
                if (n >= 2) CHECK(gl.size() == sl.size() + 1);
            }
        });
    }
}

TEST_CASE("transvections are additive in the off-diagonal scalar") {
    std::mt19937 rng(53);
    for (const Field f : {F4(), F9(), QQ()}) {
        with_field_ops(f, [&](const auto& k) {
            using KT = std::decay_t<decltype(k)>;
            for (int trial = 0; trial < 6; ++trial) {
                const auto s = random_elem(k, rng);
                const auto t = random_elem(k, rng);
                auto E = [&](const typename KT::Elem& v) {
                    Mat<KT> m = Mat<KT>::identity(k, 3);
                    m.at(0, 2) = v;
                    return m;
                };
                CHECK(E(s).mul(E(t)) == E(k.add(s, t)));
            }
        });
    }
}

TEST_CASE("generators generate the whole group") {
    const Caps caps;
    struct Case {
        GroupKind kind;
        int n;
        Field f;
    };
    const Case cases[] = {
        {GroupKind::GL, 2, F2()}, {GroupKind::SL, 2, F3()}, {GroupKind::GL, 2, F3()},
        {GroupKind::SL, 2, F4()}, {GroupKind::GL, 2, F4()}, {GroupKind::SL, 3, F2()},
    };
    for (const auto& c : cases) {
        with_field_ops(c.f, [&](const auto& k) {
            const auto spec = spec_of(c.kind, c.n, c.f);
            const auto closure = generated_set(k, group_generators(k, spec), c.n);
            const auto elems = group_elements(k, spec, caps);
            REQUIRE(closure.size() == elems.size());
            std::set<std::string> enumerated;
            for (const auto& m : elems) enumerated.insert(mat_key(k, m));
            CHECK(closure == enumerated);
            // the larger all-scalars generating set reaches the same group
            const auto closure2 =
                generated_set(k, group_generators(k, spec, /*all_scalars=*/true), c.n);
            CHECK(closure2 == enumerated);
        });
    }
}

TEST_CASE("degree-one groups") {
    const Caps caps;
    with_field_ops(F5(), [&](const auto& k) {
        const auto gl1 = group_elements(k, spec_of(GroupKind::GL, 1, F5()), caps);
        CHECK(gl1.size() == 4);
        const auto sl1 = group_elements(k, spec_of(GroupKind::SL, 1, F5()), caps);
        REQUIRE(sl1.size() == 1);
        CHECK(sl1[0].at(0, 0) == k.one());
        // the GL(1) generator is a primitive element: its powers hit everything
        const auto gens = group_generators(k, spec_of(GroupKind::GL, 1, F5()));
        REQUIRE(gens.size() == 1);
        CHECK(generated_set(k, gens, 1).size() == 4);
    });
}

TEST_CASE("group order cap and infinite fields are rejected") {
    const Caps caps; // max_group_order = 100000
    with_field_ops(F5(), [&](const auto& k) {
        // |GL(3,5)| = 124 * 120 * 100 = 1488000
        try {
            (void)group_elements(k, spec_of(GroupKind::GL, 3, F5()), caps);
            CHECK(false);
        } catch (const ResourceLimitError& e) {
            CHECK(std::string(e.what()).find("max_group_order") != std::string::npos);
        }
    });
    with_field_ops(QQ(), [&](const auto& k) {
        CHECK_THROWS_AS((void)group_elements(k, spec_of(GroupKind::GL, 2, QQ()), caps),
                        UnsupportedError);
        CHECK_THROWS_AS((void)group_generators(k, spec_of(GroupKind::SL, 2, QQ())),
                        UnsupportedError);
    });
}

} // TEST_SUITE
