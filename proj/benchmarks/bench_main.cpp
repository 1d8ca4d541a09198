#include <benchmark/benchmark.h>

#include "galdef/fl.hpp"
#include "galdef/hensel.hpp"
#include "galdef/screen.hpp"
#include "galdef/tame.hpp"

using namespace galdef;

namespace {

void bm_tangent_min(benchmark::State& state) {
    Ring k = Ring::prime_field(13);
    int n = int(state.range(0));
    TameRep r;
    r.q = 2;
    r.A = trunc_exp(jordan_nilpotent(k, Partition(std::vector<int>{n})));
    r.B = minimal_B0(Partition(std::vector<int>{n}), 2, k);
    for (auto _ : state) benchmark::DoNotOptimize(tangent_min(r));
}
BENCHMARK(bm_tangent_min)->Arg(2)->Arg(3)->Arg(4);

void bm_level_raising(benchmark::State& state) {
    Ring k = Ring::prime_field(13);
    TameRep r = level_raising_rep(k, int(state.range(0)), 2, 0);
    for (auto _ : state) benchmark::DoNotOptimize(tangent_level_raising(r));
}
BENCHMARK(bm_level_raising)->Arg(2)->Arg(4);

void bm_fl_tangent(benchmark::State& state) {
    Ring k = Ring::prime_field(7);
    Rng rng(1);
    int n = int(state.range(0));
    std::vector<int> w;
    for (int i = n - 1; i >= 0; --i) w.push_back(i);
    FLLifted obj = make_selfdual_module(k, n, 4, n - 1, {w, w}, rng);
    for (auto _ : state) benchmark::DoNotOptimize(fl_tangent(obj.module, obj.pairing, n - 1));
}
BENCHMARK(bm_fl_tangent)->Arg(2)->Arg(3);

void bm_fl_lift(benchmark::State& state) {
    Ring k = Ring::prime_field(5);
    Rng rng(2);
    FLLifted obj = make_selfdual_module(k, 3, 2, 2, {{2, 1, 0}}, rng);
    Ring target = Ring::integers_mod(5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(fl_lift(obj.module, obj.pairing, target));
}
BENCHMARK(bm_fl_lift);

void bm_hensel(benchmark::State& state) {
    Ring R = Ring::integers_mod(5, 2);
    Ring k = R.residue_field();
    Poly P = Poly::from_ints(R, {-6, 0, 1});
    std::vector<Poly> residual = {Poly::from_ints(k, {-1, 1}), Poly::from_ints(k, {1, 1})};
    for (auto _ : state) benchmark::DoNotOptimize(hensel_factor(P, residual));
}
BENCHMARK(bm_hensel);

void bm_screen(benchmark::State& state) {
    WeierstrassCurve e{0, 0, 1, -1, 0};
    for (auto _ : state) {
        clear_trace_cache();
        benchmark::DoNotOptimize(screen(e, -4, {2, 37}, int(state.range(0))));
    }
}
BENCHMARK(bm_screen)->Arg(2)->Arg(3);

void bm_cohomology_bruteforce(benchmark::State& state) {
    Ring f3 = Ring::prime_field(3);
    TameRep r;
    r.q = 2;
    r.A = trunc_exp(jordan_nilpotent(f3, Partition({2})));
    r.B = minimal_B0(Partition({2}), 2, f3);
    TameModule m = tame_ad_module(r, 1);
    for (auto _ : state) benchmark::DoNotOptimize(tame_cohomology_bruteforce(m));
}
BENCHMARK(bm_cohomology_bruteforce);

} // namespace

BENCHMARK_MAIN();
