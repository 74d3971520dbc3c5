/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lincodes/ensemble.hpp"
#include "lincodes/errors.hpp"

using namespace lincodes;

namespace {

// Multiplicative order by repeated multiplication, for cross-checking the
// prime-factor test.
std::uint64_t brute_order(const FieldMatrix &m, std::uint64_t limit) {
  FieldMatrix p = m;
  for (std::uint64_t e = 1; e <= limit; ++e) {
    if (p.is_identity())
      return e;
    p = p * m;
  }
  return 0;
}

struct Params {
  unsigned q;
  std::size_t n, k1, k2;
};

std::vector<EnsemblePair> ensemble_for(const Params &p, bool transpose = false) {
  auto t = companion_matrix(find_primitive_poly(p.q, p.n));
  if (transpose)
    t = t.transpose();
  return build_ensemble(t, p.k1, p.k2);
}

// Membership counts by testing every word against every code, one by one.
std::vector<std::uint32_t> brute_membership(const std::vector<LinearCode> &codes) {
  const auto n = codes[0].n();
  const auto q = codes[0].q();
  const auto words = checked_pow(q, static_cast<unsigned>(n));
  std::vector<std::uint32_t> out(words, 0);
  for (std::uint64_t x = 0; x < words; ++x)
    for (const auto &c : codes)
      out[x] += contains(c, Word::from_index(x, n, q)) ? 1 : 0;
  return out;
}

} // namespace

TEST(Polynomial, ParseAndFormat) {
  auto f = MonicPolynomial::parse("1,1,1", 2);
  EXPECT_EQ(f.degree(), 2u);
  EXPECT_EQ(f.to_string(), "x^2 + x + 1");
  EXPECT_EQ(f.to_csv_string(), "1,1,1");
  EXPECT_EQ(MonicPolynomial::parse("1,1,0,0,1", 2).to_string(), "x^4 + x + 1");
  EXPECT_EQ(MonicPolynomial::parse("2,0,1", 3).to_string(), "x^2 + 2");
  EXPECT_EQ(MonicPolynomial::parse("2,1,1", 3).companion_coefficients()[0], 1);
  EXPECT_THROW(MonicPolynomial::parse("1,1,0", 2), ParseError);
  EXPECT_THROW(MonicPolynomial::parse("1", 2), ParseError);
  EXPECT_THROW(MonicPolynomial::parse("a,1", 2), ParseError);
  EXPECT_THROW(MonicPolynomial::parse("3,1", 3), OutOfRange);
}

TEST(CompanionMatrix, SpecExamples) {
  auto f = MonicPolynomial::from_coefficients({1, 1}, 2);
  EXPECT_EQ(companion_matrix(f), FieldMatrix({{0, 1}, {1, 1}}, 2));
  // x - 1 over F_3: ordinary coefficient -1 = 2.
  auto g = MonicPolynomial::from_coefficients({2}, 3);
  EXPECT_EQ(companion_matrix(g), FieldMatrix({{1}}, 3));
}

TEST(CompanionMatrix, CayleyHamilton) {
  std::mt19937_64 rng(8);
  for (unsigned q : {2u, 3u, 5u})
    for (std::size_t n = 1; n <= 6; ++n)
      for (int rep = 0; rep < 5; ++rep) {
        std::vector<Symbol> a(n);
        for (auto &c : a)
          c = static_cast<Symbol>(rng() % q);
        auto f = MonicPolynomial::from_coefficients(a, q);
        EXPECT_TRUE(f.evaluate(companion_matrix(f)).is_zero());
        EXPECT_EQ(MonicPolynomial::parse(f.to_csv_string(), q), f);
      }
}

TEST(PrimeFactors, Small) {
  EXPECT_EQ(prime_factors(15), (std::vector<std::uint64_t>{3, 5}));
  EXPECT_EQ(prime_factors(255), (std::vector<std::uint64_t>{3, 5, 17}));
  EXPECT_EQ(prime_factors(7), (std::vector<std::uint64_t>{7}));
  EXPECT_EQ(prime_factors(64), (std::vector<std::uint64_t>{2}));
  EXPECT_TRUE(prime_factors(1).empty());
}

TEST(PrimitivePoly, SpecExamples) {
  auto f2 = find_primitive_poly(2, 2);
  EXPECT_EQ(f2.to_string(), "x^2 + x + 1");
  auto f4 = find_primitive_poly(2, 4);
  EXPECT_EQ(f4.to_string(), "x^4 + x + 1");
  EXPECT_EQ(brute_order(companion_matrix(f4), 100), 15u);
  auto bad = MonicPolynomial::parse("1,1,1,1,1", 2);
  EXPECT_EQ(brute_order(companion_matrix(bad), 100), 5u);
  EXPECT_FALSE(has_multiplicative_order(companion_matrix(bad), 15));
  EXPECT_THROW(find_primitive_poly(2, 23), EnumerationTooLarge);
}

TEST(PrimitivePoly, SmallestByExhaustiveOrder) {
  for (unsigned q : {2u, 3u, 5u})
    for (std::size_t n = 1; n <= (q == 2 ? 7u : 3u); ++n) {
      const auto found = find_primitive_poly(q, n);
      const auto order = checked_pow(q, static_cast<unsigned>(n)) - 1;
      EXPECT_EQ(brute_order(companion_matrix(found), order), order);
      // Every candidate earlier in highest-coefficient-first order fails.
      const auto fa = found.coefficients();
      const auto total = checked_pow(q, static_cast<unsigned>(n));
      for (std::uint64_t m = 0; m < total; ++m) {
        std::vector<Symbol> a(n);
        auto rest = m;
        for (std::size_t i = 0; i < n; ++i) {
          a[i] = static_cast<Symbol>(rest % q);
          rest /= q;
        }
        if (std::lexicographical_compare(a.rbegin(), a.rend(), fa.rbegin(),
                                         fa.rend()) &&
            a[0] != 0) {
          auto f = MonicPolynomial::from_coefficients(a, q);
          EXPECT_NE(brute_order(companion_matrix(f), order), order)
              << f.to_string();
        }
      }
    }
}

TEST(BuildEnsemble, SpecExamples) {
  auto e = ensemble_for({2, 2, 1, 1});
  ASSERT_EQ(e.size(), 3u);
  std::set<std::string> c1;
  for (const auto &p : e) {
    c1.insert(p.c1.to_text());
    EXPECT_TRUE(is_compatible_pair(p.c1, p.c2));
  }
  EXPECT_EQ(c1.size(), 3u);
  std::set<std::string> all;
  for (const auto &c : enumerate_codes(2, 1, 2))
    all.insert(c.to_text());
  EXPECT_EQ(c1, all);
  // i = q^n - 1: T^i = I.
  EXPECT_EQ(e.back().index, 3u);
  EXPECT_EQ(e.back().c1, LinearCode::span(rows_first(FieldMatrix::identity(2, 2), 1)));
}

TEST(BuildEnsemble, Preconditions) {
  auto t = companion_matrix(find_primitive_poly(2, 4));
  EXPECT_THROW(build_ensemble(t, 1, 2), PreconditionViolation);
  EXPECT_THROW(build_ensemble(t, 5, 4), PreconditionViolation);
  auto bad = companion_matrix(MonicPolynomial::parse("1,1,1,1,1", 2));
  EXPECT_THROW(build_ensemble(bad, 2, 2), PreconditionViolation);
  EXPECT_NO_THROW(build_ensemble(t, 4, 0));
}

TEST(BuildEnsemble, MatchesDirectPowers) {
  for (Params p : {Params{2, 4, 2, 2}, Params{3, 3, 2, 1}, Params{2, 5, 3, 4}}) {
    auto t = companion_matrix(find_primitive_poly(p.q, p.n));
    auto e = build_ensemble(t, p.k1, p.k2);
    for (const auto &pair : e) {
      const auto i = static_cast<long long>(pair.index);
      EXPECT_EQ(pair.c1, LinearCode::span(rows_first(mat_pow(t, i), p.k1)));
      EXPECT_EQ(pair.c2, LinearCode::span(
                             rows_last(mat_pow(t, -i).transpose(), p.k2)));
      // The dual of C2(i) is spanned by the first n - k2 rows of T^i.
      EXPECT_EQ(dual(pair.c2),
                LinearCode::span(rows_first(mat_pow(t, i), p.n - p.k2)));
      EXPECT_TRUE(is_compatible_pair(pair.c1, pair.c2));
      EXPECT_EQ(pair.c1.k(), p.k1);
      EXPECT_EQ(pair.c2.k(), p.k2);
    }
  }
}

TEST(Balanced, SpecExamples) {
  auto e = ensemble_for({2, 2, 1, 1});
  auto r = verify_balanced(first_codes(e));
  EXPECT_TRUE(r.balanced);
  EXPECT_EQ(r.v, 1u);

  auto e4 = ensemble_for({2, 4, 2, 2});
  auto r4 = verify_balanced(first_codes(e4));
  EXPECT_TRUE(r4.balanced);
  EXPECT_EQ(r4.v, 3u);
  EXPECT_TRUE(r4.pair_count_identity);

  auto codes = enumerate_codes(2, 1, 2);
  std::vector<LinearCode> skewed{codes[0], codes[0], codes[1]};
  auto bad = verify_balanced(skewed);
  EXPECT_FALSE(bad.balanced);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_NE(bad.witness_count, bad.v);

  std::vector<LinearCode> mixed{LinearCode::full(2, 2), LinearCode::full(3, 2)};
  EXPECT_THROW(verify_balanced(mixed), PreconditionViolation);
}

TEST(Balanced, AllParametersBothOrientations) {
  for (Params p : {Params{2, 4, 2, 2}, Params{2, 4, 3, 1}, Params{2, 5, 2, 3},
                   Params{3, 3, 2, 2}, Params{3, 3, 1, 2}, Params{5, 2, 1, 1},
                   Params{2, 6, 3, 3}, Params{2, 4, 4, 0}})
    for (bool transpose : {false, true}) {
      auto e = ensemble_for(p, transpose);
      auto c1 = first_codes(e), c2 = second_codes(e);
      auto r1 = verify_balanced(c1), r2 = verify_balanced(c2);
      EXPECT_TRUE(r1.balanced);
      EXPECT_TRUE(r2.balanced);
      EXPECT_EQ(r1.v, checked_pow(p.q, p.k1) - 1);
      EXPECT_EQ(r2.v, checked_pow(p.q, p.k2) - 1);
      EXPECT_TRUE(r1.pair_count_identity);
      EXPECT_TRUE(r2.pair_count_identity);
      if (p.n <= 4) {
        auto brute = brute_membership(c1);
        for (std::size_t x = 1; x < brute.size(); ++x)
          EXPECT_EQ(brute[x], r1.v);
      }
    }
}

TEST(AverageSpectrum, SpecExamples) {
  auto e = ensemble_for({2, 2, 1, 1});
  auto av = average_spectrum(first_codes(e));
  EXPECT_TRUE(av.identity_holds);
  EXPECT_TRUE(av.upper_bound_holds);
  EXPECT_EQ(av.average[0], 1);                 // zero type
  EXPECT_EQ(av.average[1], Rational(2, 3));    // (1,1)
  EXPECT_EQ(av.closed_form[1], Rational(2, 3));
  EXPECT_EQ(av.average[2], Rational(1, 3));    // (0,2)

  auto codes = enumerate_codes(2, 1, 2);
  std::vector<LinearCode> skewed{codes[0], codes[0], codes[1]};
  EXPECT_THROW(average_spectrum(skewed), PreconditionViolation);
}

TEST(AverageSpectrum, ExactIdentityAcrossEnsembles) {
  for (Params p : {Params{2, 4, 2, 2}, Params{2, 6, 3, 3}, Params{3, 3, 2, 2},
                   Params{2, 5, 3, 2}}) {
    auto e = ensemble_for(p);
    for (const auto &codes : {first_codes(e), second_codes(e)}) {
      auto av = average_spectrum(codes);
      EXPECT_TRUE(av.identity_holds);
      EXPECT_TRUE(av.upper_bound_holds);
      EXPECT_FALSE(av.first_mismatch.has_value());
      // Independent recomputation of the closed form.
      const auto k = codes[0].k();
      for (std::size_t i = 1; i < av.types.size(); ++i)
        EXPECT_EQ(av.closed_form[i],
                  Rational(BigInt(checked_pow(p.q, k) - 1),
                           BigInt(checked_pow(p.q, p.n) - 1)) *
                      Rational(type_class_size(av.types[i])));
    }
  }
}

TEST(CountingLemma, SpecExamples) {
  std::vector<std::vector<double>> constant(6, std::vector<double>{1.0, 2.0, 3.0});
  EXPECT_TRUE(count_failing_members(constant, 1.0 / 3).failing.empty());
  std::vector<std::vector<double>> single{{4.0, 0.0, 7.0}};
  EXPECT_TRUE(count_failing_members(single, 1.0).failing.empty());
  EXPECT_FALSE(count_failing_members(single, 0.2).failing.empty());
  EXPECT_THROW(count_failing_members({}, 1.0), PreconditionViolation);
  EXPECT_THROW(count_failing_members(single, 0.0), PreconditionViolation);
  EXPECT_THROW(count_failing_members({{-1.0}}, 1.0), PreconditionViolation);
}

TEST(CountingLemma, RandomTablesAgainstBruteForce) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 60; ++rep)
    for (double a : {2.0, 4.0, 8.0}) {
      std::vector<std::vector<double>> v(20, std::vector<double>(5));
      for (auto &row : v)
        for (auto &x : row)
          x = u(rng) < 0.3 ? 0.0 : std::pow(u(rng), 4) * 100;
      auto r = count_failing_members(v, a);
      std::vector<double> mean(5, 0.0);
      for (const auto &row : v)
        for (int w = 0; w < 5; ++w)
          mean[w] += row[w];
      for (auto &m : mean)
        m /= 20;
      std::vector<std::size_t> expect;
      for (std::size_t x = 0; x < 20; ++x) {
        bool fails = false;
        for (int w = 0; w < 5; ++w)
          fails |= v[x][w] > mean[w] * 5 * a * (1 + 1e-12);
        if (fails)
          expect.push_back(x);
      }
      EXPECT_EQ(r.failing, expect);
      EXPECT_LE(static_cast<double>(r.failing.size()), 20.0 / a);
      EXPECT_TRUE(r.within_bound);
      EXPECT_TRUE(r.markov_steps_hold);
    }
}

TEST(Census, SpecExamples) {
  auto e = ensemble_for({2, 4, 2, 2});
  auto codes = first_codes(e);
  auto r = census_bad_codes(codes, 0.25);
  EXPECT_EQ(r.z, 7u);
  EXPECT_LE(r.bad_count, 7u);
  EXPECT_TRUE(r.within_bound);
  EXPECT_TRUE(r.bad_within_counting_failures);

  auto big = census_bad_codes(codes, 1.0);
  EXPECT_EQ(big.bad_count, 0u);

  auto zero = census_bad_codes(codes, 0.0);
  EXPECT_EQ(zero.z, codes.size());
  EXPECT_TRUE(zero.within_bound);
}

TEST(Census, NeverViolatedOnGrid) {
  for (Params p : {Params{2, 4, 2, 2}, Params{2, 6, 3, 3}, Params{3, 3, 2, 2},
                   Params{2, 6, 2, 4}}) {
    auto e = ensemble_for(p);
    for (const auto &codes : {first_codes(e), second_codes(e)}) {
      auto spectra = spectra_of(codes);
      for (int s = 0; s <= 10; ++s) {
        const double eps = s / 10.0;
        auto r = census_bad_codes(codes, spectra, eps);
        EXPECT_TRUE(r.within_bound) << eps;
        EXPECT_TRUE(r.bad_within_counting_failures) << eps;
        EXPECT_LE(r.bad_count, r.counting_failures);
        std::uint64_t bad = 0;
        for (std::size_t i = 0; i < codes.size(); ++i)
          bad += is_a_good(codes[i], GoodnessFactor::q_power(p.q, eps * p.n)).good
                     ? 0
                     : 1;
        EXPECT_EQ(r.bad_count, bad);
      }
    }
  }
}

TEST(Census, FloorScaledCount) {
  EXPECT_EQ(floor_scaled_count(15, 2, 1.0), 7u);
  EXPECT_EQ(floor_scaled_count(15, 2, 0.0), 15u);
  EXPECT_EQ(floor_scaled_count(255, 2, 4.0), 15u);
  EXPECT_EQ(floor_scaled_count(63, 2, 0.6), 41u); // 63 / 2^0.6 = 41.57
  EXPECT_EQ(floor_scaled_count(5, 2, 80.0), 0u);
}

TEST(PowerField, ClosedUnderAdditionAndMultiplication) {
  for (std::size_t n : {2u, 3u, 4u, 5u}) {
    auto r = verify_power_field(companion_matrix(find_primitive_poly(2, n)));
    EXPECT_EQ(r.size, checked_pow(2, static_cast<unsigned>(n)));
    EXPECT_TRUE(r.closed_under_addition);
    EXPECT_TRUE(r.closed_under_multiplication);
  }
  auto r3 = verify_power_field(companion_matrix(find_primitive_poly(3, 2)));
  EXPECT_TRUE(r3.closed_under_addition);
  // Powers of a non-primitive matrix do not exhaust the field.
  auto bad = verify_power_field(companion_matrix(MonicPolynomial::parse("1,1,1,1,1", 2)));
  EXPECT_FALSE(bad.closed_under_addition && bad.size == 16);
}
