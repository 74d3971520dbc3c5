/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "lincodes/code.hpp"
#include "lincodes/ensemble.hpp"
#include "lincodes/kernels.hpp"

using namespace lincodes;
namespace k = lincodes::kernels;

namespace {

// Runs `f` under several OpenMP thread counts and restores the default.
template <class F> void for_thread_counts(F f) {
  const int saved = k::max_threads();
  for (int t : {1, 2, 3, 4}) {
    k::set_num_threads(t);
    f(t);
  }
  k::set_num_threads(saved);
}

std::vector<FieldMatrix> ensemble_generators(unsigned q, std::size_t n, std::size_t k1) {
  auto e = build_ensemble(companion_matrix(find_primitive_poly(q, n)), k1, n - k1);
  std::vector<FieldMatrix> out;
  for (const auto &p : e)
    out.push_back(p.c1.generator());
  return out;
}

// A few random [n,k] codes; enumerate_codes is too large at these sizes.
std::vector<LinearCode> random_codes(std::size_t n, std::size_t k, unsigned q,
                                     std::size_t count) {
  std::mt19937_64 rng(n * 1000 + k * 10 + q);
  std::vector<LinearCode> out;
  while (out.size() < count) {
    FieldMatrix g(k, n, q);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c)
        g.set(r, c, static_cast<unsigned>(rng() % q));
    auto code = LinearCode::span(g);
    if (code.k() == k)
      out.push_back(code);
  }
  return out;
}

} // namespace

TEST(Kernels, SpectrumCountsAgree) {
  for (auto [q, n, kk] : {std::tuple{2u, 8u, 4u}, {3u, 5u, 3u}, {2u, 12u, 6u}}) {
    const TypeIndexer idx(n, q);
    for (const auto &c : random_codes(n, kk, q, 6)) {
      const auto &g = c.generator();
      const auto ref = k::serial::spectrum_counts(g, idx);
      EXPECT_EQ(std::accumulate(ref.begin(), ref.end(), std::uint64_t{0}),
                checked_pow(q, kk));
      for_thread_counts([&](int t) { EXPECT_EQ(k::omp::spectrum_counts(g, idx), ref) << t; });
    }
  }
}

TEST(Kernels, MembershipCountsAgree) {
  for (auto [q, n, k1] : {std::tuple{2u, 6u, 3u}, {3u, 3u, 2u}, {2u, 8u, 4u}}) {
    auto gens = ensemble_generators(q, n, k1);
    const auto ref = k::serial::membership_counts(gens, n, q);
    EXPECT_EQ(ref[0], gens.size());
    for (std::size_t x = 1; x < ref.size(); ++x)
      EXPECT_EQ(ref[x], checked_pow(q, k1) - 1);
    for_thread_counts([&](int t) {
      EXPECT_EQ(k::omp::membership_counts(gens, n, q), ref) << t;
    });
  }
}

TEST(Kernels, CosetLeadersAgree) {
  for (auto [q, n, kk] : {std::tuple{2u, 10u, 5u}, {3u, 6u, 2u}, {5u, 4u, 2u}}) {
    for (const auto &c : random_codes(n, kk, q, 4)) {
      const auto h = parity_check(c);
      const auto ref = k::serial::coset_leaders(h, n, q);
      EXPECT_EQ(ref.size(), checked_pow(q, n - kk));
      EXPECT_EQ(ref[0], 0u);
      for_thread_counts([&](int t) { EXPECT_EQ(k::omp::coset_leaders(h, n, q), ref) << t; });
    }
  }
}

TEST(Kernels, TypeGridMinimumAgrees) {
  for (unsigned q : {2u, 3u}) {
    auto types = enumerate_types(q == 2 ? 200 : 40, q);
    std::vector<double> law(q, 0.1 / (q - 1));
    law[0] = 0.9;
    const Distribution w(law);
    for (double t : {0.0, 0.3, 0.9}) {
      const auto ref = k::serial::type_grid_minimum(types, w, t);
      ASSERT_TRUE(ref.found);
      for_thread_counts([&](int th) {
        const auto got = k::omp::type_grid_minimum(types, w, t);
        EXPECT_EQ(got.index, ref.index) << th;
        EXPECT_EQ(got.value, ref.value) << th;
      });
    }
  }
}

TEST(Kernels, DecodingFailuresAgreeAcrossThreads) {
  std::vector<std::uint8_t> is_rep(64, 0);
  for (std::size_t i = 0; i < 64; i += 3)
    is_rep[i] = 1;
  const std::vector<double> cdf{0.85, 2.0};
  for (std::uint64_t trials : {std::uint64_t{1}, k::kTrialsPerChunk - 1,
                               k::kTrialsPerChunk * 5 + 17}) {
    const auto ref = k::serial::count_decoding_failures(is_rep, 6, cdf, trials, 99);
    EXPECT_LE(ref, trials);
    for_thread_counts([&](int t) {
      EXPECT_EQ(k::omp::count_decoding_failures(is_rep, 6, cdf, trials, 99), ref) << t;
    });
  }
}
