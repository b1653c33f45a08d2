// Microbenchmarks for the exact kernels that dominate every check: dense
// elimination, incremental span building, commutants, multiplicative
// closure, and Kronecker powers.  Inputs are seeded deterministically so
// runs are comparable across revisions.

#include <benchmark/benchmark.h>

#include "swdual/duality.hpp"
#include "swdual/field_ops.hpp"
#include "swdual/group.hpp"
#include "swdual/linalg.hpp"
#include "swdual/tensor.hpp"

#include <random>

using namespace swdual;

namespace {

template <class K>
Mat<K> seeded_matrix(const K& k, int rows, int cols, unsigned seed) {
    std::mt19937 rng(seed);
    Mat<K> m(k, rows, cols);
    if (k.field().is_finite()) {
        std::uniform_int_distribution<long long> pick(0, k.field().cardinality - 1);
        for (auto& e : m.a) e = k.from_scalar(scalar_from_index(k.field(), pick(rng)));
    } else {
        std::uniform_int_distribution<int> pick(-4, 4);
        for (auto& e : m.a) e = k.from_int(pick(rng));
    }
    return m;
}

void BM_rref_f2(benchmark::State& state) {
    const Field f = make_field(2, 1);
    const int n = static_cast<int>(state.range(0));
    with_field_ops(f, [&](const auto& k) {
        const auto m = seeded_matrix(k, n, n, 12345);
        for (auto _ : state) benchmark::DoNotOptimize(rref(m));
    });
}
BENCHMARK(BM_rref_f2)->Arg(32)->Arg(64)->Arg(128);

void BM_rref_rational(benchmark::State& state) {
    const Field f = rational_field();
    const int n = static_cast<int>(state.range(0));
    with_field_ops(f, [&](const auto& k) {
        const auto m = seeded_matrix(k, n, n, 12345);
        for (auto _ : state) benchmark::DoNotOptimize(rref(m));
    });
}
BENCHMARK(BM_rref_rational)->Arg(16)->Arg(32);

void BM_span_insert_place_permutations(benchmark::State& state) {
    const Caps caps;
    const Field f = make_field(2, 1);
    const int r = static_cast<int>(state.range(0));
    with_field_ops(f, [&](const auto& k) {
        for (auto _ : state) benchmark::DoNotOptimize(rho_span(k, 2, r, caps));
    });
}
BENCHMARK(BM_span_insert_place_permutations)->Arg(4)->Arg(5)->Arg(6);

void BM_commutant_of_transpositions(benchmark::State& state) {
    const Caps caps;
    const Field f = make_field(2, 1);
    const int r = static_cast<int>(state.range(0));
    with_field_ops(f, [&](const auto& k) {
        for (auto _ : state) benchmark::DoNotOptimize(endo_Sr_span(k, 2, r, caps));
    });
}
BENCHMARK(BM_commutant_of_transpositions)->Arg(3)->Arg(4)->Arg(5);

void BM_commutant_rational(benchmark::State& state) {
    const Caps caps;
    const Field f = rational_field();
    const int r = static_cast<int>(state.range(0));
    with_field_ops(f, [&](const auto& k) {
        for (auto _ : state) benchmark::DoNotOptimize(endo_Sr_span(k, 2, r, caps));
    });
}
BENCHMARK(BM_commutant_rational)->Arg(3)->Arg(4);

void BM_group_algebra_closure(benchmark::State& state) {
    const Caps caps;
    const Field f = make_field(3, 1);
    const int r = static_cast<int>(state.range(0));
    with_field_ops(f, [&](const auto& k) {
        for (auto _ : state)
            benchmark::DoNotOptimize(phi_span_closure(k, GroupKind::GL, 2, r, caps));
    });
}
BENCHMARK(BM_group_algebra_closure)->Arg(2)->Arg(3);

void BM_tensor_power(benchmark::State& state) {
    const Caps caps;
    const Field f = make_field(3, 1);
    const int r = static_cast<int>(state.range(0));
    with_field_ops(f, [&](const auto& k) {
        const auto g = seeded_matrix(k, 2, 2, 777);
        for (auto _ : state) benchmark::DoNotOptimize(tensor_power_operator(k, g, r, caps));
    });
}
BENCHMARK(BM_tensor_power)->Arg(4)->Arg(6);

} // namespace

BENCHMARK_MAIN();
