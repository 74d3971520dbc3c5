/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "kernels_common.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lincodes::kernels {

ExponentTerm exponent_term(const Distribution &candidate, const Distribution &w,
                           double t_param) {
  auto d = relative_entropy(candidate, w);
  if (d.is_infinite())
    return {0.0, false};
  return {d.value() + std::max(0.0, t_param - entropy(candidate)), true};
}

namespace serial {

std::vector<std::uint64_t> spectrum_counts(const FieldMatrix &generator,
                                           const TypeIndexer &types) {
  const unsigned q = generator.modulus();
  const std::size_t n = generator.cols(), k = generator.rows();
  std::vector<std::uint64_t> counts(types.size(), 0);
  if (k == 0) {
    ++counts[types.index_of(type_of(Word::zero(n, q)))];
    return counts;
  }
  const std::uint64_t total = checked_pow(q, static_cast<unsigned>(k));
  for (std::uint64_t m = 0; m < total; ++m) {
    Word codeword = Word::from_index(m, k, q) * generator;
    ++counts[types.index_of(type_of(codeword))];
  }
  return counts;
}

std::vector<std::uint32_t> membership_counts(std::span<const FieldMatrix> rref,
                                             std::size_t n, unsigned q) {
  const std::uint64_t words = checked_pow(q, static_cast<unsigned>(n));
  std::vector<std::uint32_t> counts(words, 0);
  std::vector<Symbol> x(n), residue(n);
  for (std::uint64_t idx = 0; idx < words; ++idx) {
    detail::index_to_digits(idx, x, q);
    for (const auto &g : rref) {
      // Reduce x against the RREF rows; x is a member iff nothing remains.
      residue = x;
      for (std::size_t r = 0; r < g.rows(); ++r) {
        auto row = g.row_span(r);
        std::size_t pivot = 0;
        while (row[pivot] == 0)
          ++pivot;
        const unsigned f = residue[pivot];
        if (!f)
          continue;
        for (std::size_t c = 0; c < n; ++c)
          residue[c] = static_cast<Symbol>(
              ::lincodes::detail::sub_mod(residue[c], f * row[c] % q, q));
      }
      if (std::all_of(residue.begin(), residue.end(),
                      [](Symbol s) { return s == 0; }))
        ++counts[idx];
    }
  }
  return counts;
}

std::vector<std::uint64_t> coset_leaders(const FieldMatrix &parity,
                                         std::size_t n, unsigned q) {
  const std::uint64_t words = checked_pow(q, static_cast<unsigned>(n));
  const std::uint64_t cosets =
      checked_pow(q, static_cast<unsigned>(parity.rows()));
  constexpr auto unset = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> leader(cosets, unset);
  std::vector<double> best(cosets, std::numeric_limits<double>::infinity());
  std::vector<Symbol> x(n);
  for (std::uint64_t idx = 0; idx < words; ++idx) {
    detail::index_to_digits(idx, x, q);
    const std::uint64_t s = detail::syndrome_index(x, parity);
    const double h = entropy(type_of(x, q));
    // Sweep is in lexicographic order, so only a strict improvement wins.
    if (h < best[s]) {
      best[s] = h;
      leader[s] = idx;
    }
  }
  return leader;
}

GridMinimum type_grid_minimum(std::span<const TypeVector> types,
                              const Distribution &w, double t_param) {
  GridMinimum best;
  for (std::size_t i = 0; i < types.size(); ++i) {
    auto term = exponent_term(Distribution::from_type(types[i]), w, t_param);
    if (!term.finite)
      continue;
    if (!best.found ||
        detail::grid_better(term.value, types[i], best.value, types[best.index])) {
      best = {i, term.value, true};
    }
  }
  return best;
}

std::uint64_t count_decoding_failures(std::span<const std::uint8_t> is_rep,
                                      std::size_t n, std::span<const double> cdf,
                                      std::uint64_t trials, std::uint64_t seed) {
  std::uint64_t failures = 0;
  const std::uint64_t chunks = (trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t count =
        std::min(kTrialsPerChunk, trials - c * kTrialsPerChunk);
    failures += detail::sample_chunk(is_rep, n, cdf, count, seed, c);
  }
  return failures;
}

} // namespace serial
} // namespace lincodes::kernels
