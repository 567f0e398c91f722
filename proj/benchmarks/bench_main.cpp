#include <benchmark/benchmark.h>

#include <random>

#include "softtop/constructions.hpp"
#include "softtop/funcspace.hpp"
#include "softtop/topology.hpp"

namespace {

using namespace softtop;

ContextPtr make_context(std::size_t universe, std::size_t params) {
  std::vector<std::string> names, param_names;
  for (std::size_t i = 0; i < universe; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < params; ++i) param_names.push_back("e" + std::to_string(i));
  return Context::make(std::move(names), std::move(param_names));
}

std::vector<SoftSet> random_subbase(const ContextPtr& ctx, std::size_t count,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SoftSet> out;
  for (std::size_t i = 0; i < count; ++i) {
    Bitset bits(ctx->bit_width());
    for (std::size_t b = 0; b < bits.size(); ++b)
      if (rng() & 1) bits.set(b);
    out.emplace_back(ctx, std::move(bits));
  }
  return out;
}

void BM_SubbaseGeneration(benchmark::State& state) {
  const auto ctx = make_context(static_cast<std::size_t>(state.range(0)), 2);
  const auto subbase = random_subbase(ctx, static_cast<std::size_t>(state.range(1)), 11);
  GenerationLimits limits{1 << 20};
  for (auto _ : state) {
    auto generated = generate_from_subbase(ctx, subbase, limits);
    benchmark::DoNotOptimize(generated.space.open_count());
  }
}
BENCHMARK(BM_SubbaseGeneration)->Args({3, 4})->Args({4, 5})->Args({5, 6});

void BM_DiscreteProduct(benchmark::State& state) {
  const auto ca = make_context(static_cast<std::size_t>(state.range(0)), 1);
  const auto cb = make_context(2, 1);
  SpaceFamily family = SpaceFamily::of({SoftSpace::discrete(ca), SoftSpace::discrete(cb)});
  GenerationLimits limits{1 << 20};
  for (auto _ : state) {
    ProductSpace prod = product_space(family, limits);
    benchmark::DoNotOptimize(prod.space.open_count());
  }
}
BENCHMARK(BM_DiscreteProduct)->Arg(2)->Arg(3);

void BM_ContinuityScan(benchmark::State& state) {
  const auto ctx = make_context(static_cast<std::size_t>(state.range(0)), 2);
  SoftSpace space = SoftSpace::discrete(ctx);
  SoftMapping id = SoftMapping::identity(ctx);
  for (auto _ : state) {
    auto result = is_continuous(id, space, space);
    benchmark::DoNotOptimize(result.holds);
  }
}
BENCHMARK(BM_ContinuityScan)->Arg(2)->Arg(3);

void BM_PointwiseSpace(benchmark::State& state) {
  const auto cx = make_context(static_cast<std::size_t>(state.range(0)), 1);
  const auto cy = make_context(2, 1);
  SoftSpace domain = SoftSpace::discrete(cx);
  SoftSpace codomain = SoftSpace::discrete(cy);
  FuncspaceLimits limits{4096, GenerationLimits{1 << 20}};
  for (auto _ : state) {
    FunctionSpace fs = pointwise_space(domain, codomain, limits);
    benchmark::DoNotOptimize(fs.space.open_count());
  }
}
BENCHMARK(BM_PointwiseSpace)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
