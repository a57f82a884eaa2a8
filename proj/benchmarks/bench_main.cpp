#include <benchmark/benchmark.h>

#include <random>

#include "symdyn/entropy.hpp"
#include "symdyn/invariants.hpp"
#include "symdyn/moves.hpp"
#include "symdyn/presentation.hpp"
#include "symdyn/sgap.hpp"

using namespace symdyn;

namespace {

IntMatrix random_matrix(std::size_t n, long lo, long hi, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> entry(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

ForbiddenSetSFT three_letter_shift() {
  return ForbiddenSetSFT(Alphabet{"a", "b", "c"}, std::set<Word>{Word{"a", "a"}, Word{"b", "c", "b"}, Word{"c", "c", "c"}});
}

void BM_SmithNormalForm(benchmark::State& state) {
  IntMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), -9, 9, 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_BowenFranks(benchmark::State& state) {
  IntMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 0, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bowen_franks(a));
}
BENCHMARK(BM_BowenFranks)->Arg(8)->Arg(32);

void BM_EnumerateLanguage(benchmark::State& state) {
  for (auto _ : state) {
    ForbiddenSetSFT x = three_letter_shift();
    benchmark::DoNotOptimize(enumerate_language(x, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_EnumerateLanguage)->Arg(4)->Arg(8)->Arg(12);

void BM_WordCountEntropy(benchmark::State& state) {
  ForbiddenSetSFT x = three_letter_shift();
  for (auto _ : state) benchmark::DoNotOptimize(entropy_word_count(x, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_WordCountEntropy)->Arg(16)->Arg(64);

void BM_PerronEntropy(benchmark::State& state) {
  IntMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 0, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(perron_entropy(a));
}
BENCHMARK(BM_PerronEntropy)->Arg(8)->Arg(64)->Arg(256);

void BM_BoostConstruction(benchmark::State& state) {
  ForbiddenSetSFT two(Alphabet{"a", "b"}, std::set<Word>{});
  for (auto _ : state)
    benchmark::DoNotOptimize(boost_entropy_construction(two, "a", "b", static_cast<std::size_t>(state.range(0))).result());
}
BENCHMARK(BM_BoostConstruction)->Arg(1)->Arg(2)->Arg(3);

void BM_PipelineApplyWord(benchmark::State& state) {
  MovePipeline p(ForbiddenSetSFT(Alphabet{"a", "b"}, std::set<Word>{}));
  p.expand("a");
  p.word_contract(Word{"b", "a"});
  Word w = Word{"a", "b", "b"}.power(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pipeline_apply_word(p, w));
}
BENCHMARK(BM_PipelineApplyWord)->Arg(100)->Arg(10000);

void BM_SampledFlowEquivalence(benchmark::State& state) {
  const Gap bound = state.range(0);
  SampledGaps a{{}, bound}, b{{}, bound};
  for (Gap k = 0; k <= bound; ++k) {
    if (k % 3 != 2) a.members.insert(k);
    if (k * k <= bound) b.members.insert(k * k);
  }
  for (auto _ : state) benchmark::DoNotOptimize(fe_equal(a, b, bound));
}
BENCHMARK(BM_SampledFlowEquivalence)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
