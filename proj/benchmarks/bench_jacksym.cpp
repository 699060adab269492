#include <benchmark/benchmark.h>

#include "jacksym/jack.hpp"
#include "jacksym/localization.hpp"

namespace {

using namespace jacksym;

void BM_BuildTransition(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        TransitionMatrix t = build_transition(n);
        benchmark::DoNotOptimize(t.m_in_p.size());
    }
}
BENCHMARK(BM_BuildTransition)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

void BM_BuildJackTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    transition_matrix(n); // isolate Gram-Schmidt cost from the basis change
    for (auto _ : state) {
        JackTable t = build_jack_table(n);
        benchmark::DoNotOptimize(t.entries.size());
    }
}
BENCHMARK(BM_BuildJackTable)->Arg(4)->Arg(6)->Arg(8);

void BM_EulerClasses(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto lambdas = enumerate_partitions(n);
    for (auto _ : state)
        for (const auto& lambda : lambdas) {
            FixedPointData d = euler_classes(lambda);
            benchmark::DoNotOptimize(d.euler_total.u_power);
        }
}
BENCHMARK(BM_EulerClasses)->Arg(8)->Arg(12)->Arg(16);

void BM_NormClosedForm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto lambdas = enumerate_partitions(n);
    for (auto _ : state)
        for (const auto& lambda : lambdas) {
            RatFun f = norm_closed_form(lambda);
            benchmark::DoNotOptimize(f.is_zero());
        }
}
BENCHMARK(BM_NormClosedForm)->Arg(8)->Arg(12);

void BM_InnerProduct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto table = jack_table(n);
    const auto& first = table->entries.begin()->second.P;
    for (auto _ : state)
        for (const auto& [lambda, entry] : table->entries) {
            RatFun v = inner_product(first, entry.P);
            benchmark::DoNotOptimize(v.is_zero());
        }
}
BENCHMARK(BM_InnerProduct)->Arg(6)->Arg(8);

} // namespace

BENCHMARK_MAIN();
