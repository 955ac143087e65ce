#include <benchmark/benchmark.h>

#include <random>

#include "cyclift/coverings.hpp"
#include "cyclift/cyclic_lift.hpp"
#include "cyclift/presentation.hpp"
#include "cyclift/selftest.hpp"

using namespace cyclift;

namespace {

std::vector<Syllable> random_syllables(std::mt19937_64& rng, int len) {
  std::vector<Syllable> raw;
  raw.reserve(len);
  for (int k = 0; k < len; ++k) {
    const int which = static_cast<int>(rand_range(rng, 0, 3));
    Generator gen = which == 3 ? Generator::gamma() : Generator::alpha(which + 1);
    raw.push_back(Syllable{gen, Int(rand_range(rng, -4, 4))});
  }
  return raw;
}

IntMatrix random_square(std::mt19937_64& rng, int dim, int max_abs) {
  IntMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      m(i, j) = rand_range(rng, -max_abs, max_abs);
    }
  }
  return m;
}

std::string takahashi_text(long long r, long long p) {
  return "genus 2\nrel a2 a1^-" + std::to_string(r) + " g a2^-1 g^-1\nrel a1 g a2^" +
         std::to_string(p) + " a1^-1 g^-1\n";
}

void BM_FreeReduce(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto raw = random_syllables(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(free_reduce(raw));
  }
}
BENCHMARK(BM_FreeReduce)->Arg(64)->Arg(1024)->Arg(16384);

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const IntMatrix m = random_square(rng, static_cast<int>(state.range(0)), 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(m));
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6)->Arg(8)->Arg(12);

void BM_SolveCongruences(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int g = 3;
  const IntMatrix H = random_square(rng, g, 10);
  const std::vector<Int> b{3, -7, 5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_congruences(H, b, state.range(0)));
  }
}
BENCHMARK(BM_SolveCongruences)->Arg(6)->Arg(12)->Arg(360);

void BM_LiftPipeline(benchmark::State& state) {
  const std::string text = takahashi_text(2, 3);
  const long long n = state.range(0);
  for (auto _ : state) {
    const KnotGroupPresentation p = parse_presentation(text);
    benchmark::DoNotOptimize(lift_words(p, Monodromy{n, {0, 0}}));
  }
}
BENCHMARK(BM_LiftPipeline)->Arg(2)->Arg(8)->Arg(64);

void BM_CoveringHomology(benchmark::State& state) {
  const KnotGroupPresentation p = parse_presentation(takahashi_text(2, 3));
  const long long n = state.range(0);
  const LiftResult lift = lift_words(p, Monodromy{n, {0, 0}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(covering_homology(lift.presentation));
  }
}
BENCHMARK(BM_CoveringHomology)->Arg(2)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
