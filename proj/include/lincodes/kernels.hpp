/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

/// Exhaustive sweeps behind the public operations.
///
/// Each kernel exists twice with the same signature: `serial::` is the
/// straightforward reference kept for testing, `omp::` is the OpenMP version
/// the library calls. Both must return bit-identical results for every input,
/// independent of the thread count.

#include "lincodes/field.hpp"
#include "lincodes/types.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace lincodes::kernels {

/// Result of minimising D(Q||W) + |T - H(Q)|^+ over a list of types.
struct GridMinimum {
  std::size_t index = 0; ///< position in the input list
  double value = 0.0;
  bool found = false; ///< false iff every candidate had D = +infinity
};

/// Objective D(Q||W) + |t - H(Q)|^+ for a finite divergence; nullopt-like
/// infinity is reported through `finite`.
struct ExponentTerm {
  double value;
  bool finite;
};
ExponentTerm exponent_term(const Distribution &candidate, const Distribution &w,
                           double t_param);

namespace serial {

/// Spectrum counts indexed by TypeIndexer order, one codeword at a time
/// as message * generator.
std::vector<std::uint64_t> spectrum_counts(const FieldMatrix &generator,
                                           const TypeIndexer &types);

/// counts[x.index()] = number of codes (given by RREF generators) holding x,
/// decided word by word through elimination.
std::vector<std::uint32_t> membership_counts(std::span<const FieldMatrix> rref,
                                             std::size_t n, unsigned q);

/// leader[s] = index of the entropy-minimal, then lexicographically smallest,
/// word with syndrome s = x H^t.
std::vector<std::uint64_t> coset_leaders(const FieldMatrix &parity,
                                         std::size_t n, unsigned q);

GridMinimum type_grid_minimum(std::span<const TypeVector> types,
                              const Distribution &w, double t_param);

/// Number of i.i.d. noise words (per-symbol CDF `cdf`) falling outside the
/// representative set. Trials are split into fixed chunks seeded from `seed`.
std::uint64_t count_decoding_failures(std::span<const std::uint8_t> is_rep,
                                      std::size_t n, std::span<const double> cdf,
                                      std::uint64_t trials, std::uint64_t seed);

} // namespace serial

namespace omp {

std::vector<std::uint64_t> spectrum_counts(const FieldMatrix &generator,
                                           const TypeIndexer &types);
std::vector<std::uint32_t> membership_counts(std::span<const FieldMatrix> rref,
                                             std::size_t n, unsigned q);
std::vector<std::uint64_t> coset_leaders(const FieldMatrix &parity,
                                         std::size_t n, unsigned q);
GridMinimum type_grid_minimum(std::span<const TypeVector> types,
                              const Distribution &w, double t_param);
std::uint64_t count_decoding_failures(std::span<const std::uint8_t> is_rep,
                                      std::size_t n, std::span<const double> cdf,
                                      std::uint64_t trials, std::uint64_t seed);

} // namespace omp

/// Trials per independently seeded chunk of the failure sampler.
inline constexpr std::uint64_t kTrialsPerChunk = 1u << 14;

int max_threads();
void set_num_threads(int threads);

} // namespace lincodes::kernels
