#include <benchmark/benchmark.h>

#include <random>

#include "wagner/counting.hpp"
#include "wagner/density.hpp"
#include "wagner/dynamics.hpp"
#include "wagner/nielsen.hpp"
#include "wagner/parse.hpp"
#include "wagner/periodic.hpp"

namespace {

wagner::Endomorphism rank2_example() {
  return wagner::parse_endomorphism("a->abbaB; b->baBab").endomorphism;
}

wagner::Endomorphism rank3_example() {
  return wagner::parse_endomorphism("a->abc; b->cAba; c->ACab").endomorphism;
}

void bm_nielsen_power(benchmark::State& state) {
  const wagner::Endomorphism phi = rank2_example();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const wagner::Endomorphism power = wagner::iterate(phi, n);
    benchmark::DoNotOptimize(wagner::fixed_point_classes(power));
  }
}
BENCHMARK(bm_nielsen_power)->DenseRange(1, 5);

void bm_remnant(benchmark::State& state) {
  const wagner::Endomorphism power =
      wagner::iterate(rank2_example(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wagner::remnant_decomposition(power));
  }
}
BENCHMARK(bm_remnant)->DenseRange(1, 5);

void bm_concat(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<wagner::Word> words;
  for (int i = 0; i < 64; ++i) {
    words.push_back(wagner::sample_uniform_word(3, static_cast<int>(state.range(0)), rng));
  }
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wagner::concat(words[k % 64], words[(k + 1) % 64]));
    ++k;
  }
}
BENCHMARK(bm_concat)->Arg(32)->Arg(256)->Arg(2048);

void bm_sample_word(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wagner::sample_uniform_word(2, p, rng));
  }
}
BENCHMARK(bm_sample_word)->Arg(8)->Arg(64)->Arg(512);

void bm_label_fixed_points(benchmark::State& state) {
  const wagner::Endomorphism phi = rank3_example();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wagner::label_fixed_points(phi, n));
  }
}
BENCHMARK(bm_label_fixed_points)->DenseRange(1, 5);

void bm_density_estimate(benchmark::State& state) {
  const wagner::EndomorphismPredicate s1{
      "Sl=1",
      [](const wagner::Endomorphism& phi) { return wagner::in_sl(phi, 1); }};
  for (auto _ : state) {
    benchmark::DoNotOptimize(wagner::estimate_density(
        s1, 2, static_cast<int>(state.range(0)), 1024, 7, 1));
  }
}
BENCHMARK(bm_density_estimate)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
