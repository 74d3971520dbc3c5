/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

// Building blocks shared by the serial and OpenMP kernels.

#include "lincodes/field.hpp"
#include "lincodes/kernels.hpp"
#include "lincodes/types.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace lincodes::kernels::detail {

inline std::uint64_t word_index(std::span<const Symbol> x, unsigned q) {
  std::uint64_t idx = 0;
  for (Symbol s : x)
    idx = idx * q + s;
  return idx;
}

inline void index_to_digits(std::uint64_t index, std::span<Symbol> out,
                            unsigned q) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Symbol>(index % q);
    index /= q;
  }
}

/// Syndrome x H^t as a base-q integer, first parity row most significant.
inline std::uint64_t syndrome_index(std::span<const Symbol> x,
                                    const FieldMatrix &parity) {
  const unsigned q = parity.modulus();
  std::uint64_t s = 0;
  for (std::size_t j = 0; j < parity.rows(); ++j) {
    auto h = parity.row_span(j);
    unsigned acc = 0;
    for (std::size_t t = 0; t < x.size(); ++t)
      acc += x[t] * h[t];
    s = s * q + acc % q;
  }
  return s;
}

/// Walks codewords message * G for message indices [begin, end) by adding
/// one generator row per changed message digit.
class CodewordWalker {
public:
  CodewordWalker(const FieldMatrix &g, std::uint64_t begin)
      : g_(g), q_(g.modulus()), digits_(g.rows(), 0), word_(g.cols(), 0) {
    index_to_digits(begin, digits_, q_);
    for (std::size_t r = 0; r < g.rows(); ++r)
      add_row(r, digits_[r]);
  }

  std::span<const Symbol> word() const { return word_; }

  void next() {
    for (std::size_t j = g_.rows(); j-- > 0;) {
      add_row(j, 1);
      if (++digits_[j] < q_)
        return;
      digits_[j] = 0; // q copies of row j sum to zero
    }
  }

private:
  void add_row(std::size_t r, unsigned times) {
    if (!times)
      return;
    auto row = g_.row_span(r);
    for (std::size_t c = 0; c < word_.size(); ++c)
      word_[c] = static_cast<Symbol>((word_[c] + times * row[c]) % q_);
  }

  const FieldMatrix &g_;
  unsigned q_;
  std::vector<Symbol> digits_;
  std::vector<Symbol> word_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Failures among `trials` noise words drawn from chunk `chunk` of `seed`.
inline std::uint64_t sample_chunk(std::span<const std::uint8_t> is_rep,
                                  std::size_t n, std::span<const double> cdf,
                                  std::uint64_t trials, std::uint64_t seed,
                                  std::uint64_t chunk) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(chunk)));
  const auto q = static_cast<unsigned>(cdf.size());
  std::uint64_t failures = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      unsigned s = 0;
      while (s + 1 < q && u >= cdf[s])
        ++s;
      idx = idx * q + s;
    }
    failures += is_rep[idx] ? 0 : 1;
  }
  return failures;
}

/// Strict "better candidate" rule of the exponent grid: smaller value, then
/// lexicographically smaller type.
inline bool grid_better(double value, const TypeVector &t, double best_value,
                        const TypeVector &best) {
  if (value != best_value)
    return value < best_value;
  return t < best;
}

/// Entropy of every type in TypeIndexer order.
inline std::vector<double> type_entropies(unsigned n, unsigned q) {
  std::vector<double> h;
  for (const auto &t : enumerate_types(n, q))
    h.push_back(entropy(t));
  return h;
}

} // namespace lincodes::kernels::detail
