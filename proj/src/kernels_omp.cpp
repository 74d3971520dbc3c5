/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "kernels_common.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lincodes::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_num_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0)
    omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

namespace omp {

namespace {

// Fixed block count keeps results identical for any thread count.
constexpr std::int64_t kBlocks = 64;

std::uint64_t block_begin(std::uint64_t total, std::int64_t b) {
  return total / kBlocks * static_cast<std::uint64_t>(b) +
         std::min<std::uint64_t>(static_cast<std::uint64_t>(b), total % kBlocks);
}

} // namespace

std::vector<std::uint64_t> spectrum_counts(const FieldMatrix &generator,
                                           const TypeIndexer &types) {
  const unsigned q = generator.modulus();
  const std::uint64_t total =
      checked_pow(q, static_cast<unsigned>(generator.rows()));
  std::vector<std::uint64_t> counts(types.size(), 0);

#pragma omp parallel
  {
    std::vector<std::uint64_t> local(types.size(), 0);
    std::vector<std::uint32_t> tally(q);
#pragma omp for schedule(static)
    for (std::int64_t b = 0; b < kBlocks; ++b) {
      const std::uint64_t begin = block_begin(total, b);
      const std::uint64_t end = block_begin(total, b + 1);
      if (begin == end)
        continue;
      detail::CodewordWalker walk(generator, begin);
      for (std::uint64_t m = begin; m < end; ++m) {
        std::fill(tally.begin(), tally.end(), 0u);
        for (Symbol s : walk.word())
          ++tally[s];
        ++local[types.index_of(tally)];
        if (m + 1 < end)
          walk.next();
      }
    }
#pragma omp critical
    for (std::size_t i = 0; i < local.size(); ++i)
      counts[i] += local[i];
  }
  return counts;
}

std::vector<std::uint32_t> membership_counts(std::span<const FieldMatrix> rref,
                                             std::size_t n, unsigned q) {
  const std::uint64_t words = checked_pow(q, static_cast<unsigned>(n));
  std::vector<std::uint32_t> counts(words, 0);
  const auto codes = static_cast<std::int64_t>(rref.size());

#pragma omp parallel
  {
    std::vector<std::uint32_t> local(words, 0);
#pragma omp for schedule(dynamic)
    for (std::int64_t i = 0; i < codes; ++i) {
      const FieldMatrix &g = rref[static_cast<std::size_t>(i)];
      const std::uint64_t size = checked_pow(q, static_cast<unsigned>(g.rows()));
      if (g.rows() == 0) {
        ++local[0];
        continue;
      }
      detail::CodewordWalker walk(g, 0);
      for (std::uint64_t m = 0; m < size; ++m) {
        ++local[detail::word_index(walk.word(), q)];
        if (m + 1 < size)
          walk.next();
      }
    }
#pragma omp critical
    for (std::uint64_t x = 0; x < words; ++x)
      counts[x] += local[x];
  }
  return counts;
}

std::vector<std::uint64_t> coset_leaders(const FieldMatrix &parity,
                                         std::size_t n, unsigned q) {
  const std::uint64_t words = checked_pow(q, static_cast<unsigned>(n));
  const std::uint64_t cosets =
      checked_pow(q, static_cast<unsigned>(parity.rows()));
  const TypeIndexer types(static_cast<unsigned>(n), q);
  const std::vector<double> h_of_type =
      detail::type_entropies(static_cast<unsigned>(n), q);

  constexpr auto unset = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> leader(cosets, unset);
  std::vector<double> best(cosets, std::numeric_limits<double>::infinity());

#pragma omp parallel
  {
    std::vector<std::uint64_t> my_leader(cosets, unset);
    std::vector<double> my_best(cosets, std::numeric_limits<double>::infinity());
    std::vector<Symbol> x(n);
    std::vector<std::uint32_t> tally(q);
#pragma omp for schedule(static)
    for (std::int64_t b = 0; b < kBlocks; ++b) {
      const std::uint64_t begin = block_begin(words, b);
      const std::uint64_t end = block_begin(words, b + 1);
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        detail::index_to_digits(idx, x, q);
        std::fill(tally.begin(), tally.end(), 0u);
        for (Symbol s : x)
          ++tally[s];
        const double h = h_of_type[types.index_of(tally)];
        const std::uint64_t s = detail::syndrome_index(x, parity);
        if (h < my_best[s]) {
          my_best[s] = h;
          my_leader[s] = idx;
        }
      }
    }
#pragma omp critical
    for (std::uint64_t s = 0; s < cosets; ++s) {
      if (my_leader[s] == unset)
        continue;
      if (my_best[s] < best[s] ||
          (my_best[s] == best[s] && my_leader[s] < leader[s])) {
        best[s] = my_best[s];
        leader[s] = my_leader[s];
      }
    }
  }
  return leader;
}

GridMinimum type_grid_minimum(std::span<const TypeVector> types,
                              const Distribution &w, double t_param) {
  const auto count = static_cast<std::int64_t>(types.size());
  std::vector<ExponentTerm> terms(types.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto &t = types[static_cast<std::size_t>(i)];
    terms[static_cast<std::size_t>(i)] =
        exponent_term(Distribution::from_type(t), w, t_param);
  }
  // The reduction is sequential to keep the tie-break order-independent.
  GridMinimum best;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (!terms[i].finite)
      continue;
    if (!best.found || detail::grid_better(terms[i].value, types[i], best.value,
                                           types[best.index]))
      best = {i, terms[i].value, true};
  }
  return best;
}

std::uint64_t count_decoding_failures(std::span<const std::uint8_t> is_rep,
                                      std::size_t n, std::span<const double> cdf,
                                      std::uint64_t trials, std::uint64_t seed) {
  const auto chunks = static_cast<std::int64_t>(
      (trials + kTrialsPerChunk - 1) / kTrialsPerChunk);
  std::uint64_t failures = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : failures)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const auto uc = static_cast<std::uint64_t>(c);
    const std::uint64_t count =
        std::min(kTrialsPerChunk, trials - uc * kTrialsPerChunk);
    failures += detail::sample_chunk(is_rep, n, cdf, count, seed, uc);
  }
  return failures;
}

} // namespace omp
} // namespace lincodes::kernels
