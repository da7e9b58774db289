#include <benchmark/benchmark.h>

#include "xsk/engine.hpp"
#include "xsk/jump.hpp"
#include "xsk/min_poly.hpp"
#include "xsk/seed_schedule.hpp"

using namespace xsk;

namespace {

Engine64 make(const Params& prm) {
  EngineState st = schedule_seed(prm.state_bits(), 1);
  return Engine64(prm, st.words, st.p);
}

void BM_x64(benchmark::State& state) {
  Engine64 e = make(scalar_params(Variant::A1, 12, 25, 27));
  for (auto _ : state) benchmark::DoNotOptimize(e.next());
}
BENCHMARK(BM_x64);

void BM_x64star(benchmark::State& state) {
  Engine64 e = make(scalar_params(Variant::A1, 12, 25, 27, 64, kMult64));
  for (auto _ : state) benchmark::DoNotOptimize(e.next());
}
BENCHMARK(BM_x64star);

void BM_x1024star(benchmark::State& state) {
  Engine64 e = make(block_params(16, 31, 11, 30, 64, kMult1024));
  for (auto _ : state) benchmark::DoNotOptimize(e.next());
}
BENCHMARK(BM_x1024star);

void BM_x4096star(benchmark::State& state) {
  Engine64 e = make(block_params(64, 25, 3, 49, 64, kMult4096));
  for (auto _ : state) benchmark::DoNotOptimize(e.next());
}
BENCHMARK(BM_x4096star);

void BM_jump_x1024(benchmark::State& state) {
  Params prm = block_params(16, 31, 11, 30);
  GF2Poly cp = min_poly(prm).poly;
  JumpMask mask = make_jump_mask(prm, mpz_class(1) << 512, cp);
  Engine64 e = make(prm);
  for (auto _ : state) {
    apply_jump(e, mask);
    benchmark::DoNotOptimize(e.word());
  }
}
BENCHMARK(BM_jump_x1024);

} // namespace

BENCHMARK_MAIN();
