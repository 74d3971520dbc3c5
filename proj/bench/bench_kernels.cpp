/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

// Serial reference against OpenMP kernels. Arg(0) is serial, Arg(1) OpenMP.

#include <benchmark/benchmark.h>

#include "lincodes/code.hpp"
#include "lincodes/ensemble.hpp"
#include "lincodes/kernels.hpp"

using namespace lincodes;
namespace k = lincodes::kernels;

namespace {

const LinearCode &code_16_8() {
  static const LinearCode c =
      build_ensemble(companion_matrix(find_primitive_poly(2, 16)), 8, 8).front().c1;
  return c;
}

const std::vector<FieldMatrix> &ensemble_10() {
  static const std::vector<FieldMatrix> gens = [] {
    std::vector<FieldMatrix> out;
    for (const auto &p : build_ensemble(companion_matrix(find_primitive_poly(2, 10)), 5, 5))
      out.push_back(p.c1.generator());
    return out;
  }();
  return gens;
}

void BM_SpectrumCounts(benchmark::State &state) {
  const auto &c = code_16_8();
  const TypeIndexer idx(static_cast<unsigned>(c.n()), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(state.range(0) ? k::omp::spectrum_counts(c.generator(), idx)
                                            : k::serial::spectrum_counts(c.generator(), idx));
}
BENCHMARK(BM_SpectrumCounts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MembershipCounts(benchmark::State &state) {
  const auto &gens = ensemble_10();
  for (auto _ : state)
    benchmark::DoNotOptimize(state.range(0) ? k::omp::membership_counts(gens, 10, 2)
                                            : k::serial::membership_counts(gens, 10, 2));
}
BENCHMARK(BM_MembershipCounts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CosetLeaders(benchmark::State &state) {
  const auto h = parity_check(code_16_8());
  for (auto _ : state)
    benchmark::DoNotOptimize(state.range(0) ? k::omp::coset_leaders(h, 16, 2)
                                            : k::serial::coset_leaders(h, 16, 2));
}
BENCHMARK(BM_CosetLeaders)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TypeGridMinimum(benchmark::State &state) {
  const auto types = enumerate_types(120, 3);
  const Distribution w({0.8, 0.15, 0.05});
  for (auto _ : state)
    benchmark::DoNotOptimize(state.range(0) ? k::omp::type_grid_minimum(types, w, 0.6)
                                            : k::serial::type_grid_minimum(types, w, 0.6));
}
BENCHMARK(BM_TypeGridMinimum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DecodingFailures(benchmark::State &state) {
  std::vector<std::uint8_t> is_rep(1 << 10, 0);
  for (std::size_t i = 0; i < is_rep.size(); i += 2)
    is_rep[i] = 1;
  const std::vector<double> cdf{0.9, 2.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        state.range(0) ? k::omp::count_decoding_failures(is_rep, 10, cdf, 1 << 20, 1)
                       : k::serial::count_decoding_failures(is_rep, 10, cdf, 1 << 20, 1));
}
BENCHMARK(BM_DecodingFailures)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
