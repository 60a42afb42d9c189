#include <benchmark/benchmark.h>

#include "symreg/regularity.hpp"
#include "symreg/symbolic.hpp"

namespace {

symreg::SimpleGraph cycle(int n) {
    symreg::SimpleGraph G(n);
    for (int v = 1; v < n; ++v) G.add_edge(v, v + 1);
    G.add_edge(n, 1);
    return G;
}

void BM_SymbolicPower(benchmark::State& state) {
    symreg::MonomialIdeal I = symreg::edge_ideal(cycle(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(symreg::symbolic_power(I, 3));
}
BENCHMARK(BM_SymbolicPower)->Arg(5)->Arg(7);

void BM_RadicalColon(benchmark::State& state) {
    symreg::MonomialIdeal I2 = symreg::power(symreg::edge_ideal(cycle(7)), 2);
    symreg::Exponent a({1, 0, 1, 0, 1, 0, 0});
    for (auto _ : state) benchmark::DoNotOptimize(symreg::radical_colon(I2, a));
}
BENCHMARK(BM_RadicalColon);

void BM_RegTakayama(benchmark::State& state) {
    symreg::MonomialIdeal I2 = symreg::power(symreg::edge_ideal(cycle(static_cast<int>(state.range(0)))), 2);
    symreg::RegOptions opts;
    opts.collect_certificates = false;
    for (auto _ : state) benchmark::DoNotOptimize(symreg::reg_takayama(I2, opts).reg_quotient);
}
BENCHMARK(BM_RegTakayama)->Arg(5)->Arg(6)->Arg(7);

void BM_BettiOracle(benchmark::State& state) {
    symreg::MonomialIdeal I2 = symreg::power(symreg::edge_ideal(cycle(static_cast<int>(state.range(0)))), 2);
    for (auto _ : state) benchmark::DoNotOptimize(symreg::betti_regularity(I2, 32003));
}
BENCHMARK(BM_BettiOracle)->Arg(5)->Arg(6)->Arg(7);

void BM_ReducedHomology(benchmark::State& state) {
    // boundary of the 5-simplex: every homology group must be computed
    std::vector<std::vector<int>> facets;
    for (int skip = 1; skip <= 6; ++skip) {
        std::vector<int> f;
        for (int v = 1; v <= 6; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(f);
    }
    symreg::SimplicialComplex D = symreg::SimplicialComplex::from_facets(6, facets);
    for (auto _ : state) benchmark::DoNotOptimize(symreg::reduced_homology(D, 32003).dims.size());
}
BENCHMARK(BM_ReducedHomology);

}  // namespace

BENCHMARK_MAIN();
