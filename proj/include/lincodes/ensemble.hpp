/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

/// Companion-matrix code ensembles and the counting arguments run on them.
///
/// For a companion matrix T of a primitive polynomial of degree n, the i-th
/// member of the ensemble (i = 1 .. q^n - 1) is the pair
///
///   C1(i) = rowspace(first k1 rows of T^i)
///   C2(i) = rowspace(last k2 rows of (T^-i)^t)
///
/// Every nonzero word lies in exactly q^k1 - 1 of the C1 codes (and q^k2 - 1
/// of the C2 codes), and C2(i)^perp is inside C1(i) whenever n - k2 <= k1.
/// Ensembles are ordered lists; repeated codes count with multiplicity.

#include "lincodes/code.hpp"
#include "lincodes/field.hpp"
#include "lincodes/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lincodes {

/// f(x) = x^n - f_{n-1} x^{n-1} - ... - f_0 over F_q.
class MonicPolynomial {
public:
  /// The f_i of the form above (negated low-order coefficients).
  static MonicPolynomial from_companion_coefficients(std::vector<Symbol> f,
                                                     unsigned q);
  /// Ordinary coefficients a_0..a_{n-1} of x^n + a_{n-1} x^{n-1} + ... + a_0.
  static MonicPolynomial from_coefficients(std::vector<Symbol> a, unsigned q);
  /// Comma-separated ordinary coefficients from a_0 up to the leading 1,
  /// e.g. "1,1,1" for x^2 + x + 1.
  static MonicPolynomial parse(std::string_view text, unsigned q);

  std::size_t degree() const { return f_.size(); }
  unsigned q() const { return q_; }
  std::span<const Symbol> companion_coefficients() const { return f_; }
  std::vector<Symbol> coefficients() const;

  /// f(M) for a square matrix M.
  FieldMatrix evaluate(const FieldMatrix &m) const;

  std::string to_string() const;     ///< "x^4 + x + 1"
  std::string to_csv_string() const; ///< inverse of parse()

  bool operator==(const MonicPolynomial &) const = default;

private:
  MonicPolynomial(std::vector<Symbol> f, unsigned q) : f_(std::move(f)), q_(q) {}
  std::vector<Symbol> f_;
  unsigned q_;
};

/// First row (0 ... 0 | f_0), remaining rows (I_{n-1} | f_1 ... f_{n-1})^t.
FieldMatrix companion_matrix(const MonicPolynomial &f);

/// Distinct primes dividing m, by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t m);

/// True iff M^order = I and M^(order/l) != I for every prime l | order.
bool has_multiplicative_order(const FieldMatrix &m, std::uint64_t order);

/// Lexicographically smallest (highest coefficient first) monic degree-n
/// polynomial whose companion matrix has order q^n - 1.
/// Throws EnumerationTooLarge when q^n > kSweepCap.
MonicPolynomial find_primitive_poly(unsigned q, std::size_t n);

struct EnsemblePair {
  std::uint64_t index; ///< i in [1, q^n - 1]
  LinearCode c1;
  LinearCode c2;
};

/// B_T for a matrix T of order q^n - 1, with 0 <= n - k2 <= k1 <= n.
std::vector<EnsemblePair> build_ensemble(const FieldMatrix &t, std::size_t k1,
                                         std::size_t k2);

std::vector<LinearCode> first_codes(std::span<const EnsemblePair> ensemble);
std::vector<LinearCode> second_codes(std::span<const EnsemblePair> ensemble);

struct BalanceReport {
  bool balanced = false;
  std::uint32_t v = 0; ///< memberships of every nonzero word when balanced
  std::optional<Word> witness;     ///< first word whose count differs
  std::uint32_t witness_count = 0; ///< its membership count
  /// V (q^n - 1) = sum_i (q^{k_i} - 1), counting pairs (x, C) two ways.
  bool pair_count_identity = false;
};

BalanceReport verify_balanced(std::span<const LinearCode> codes);

struct AverageSpectrum {
  std::vector<TypeVector> types;
  std::vector<Rational> average;     ///< (1/N*) sum_i M_Q(C(i))
  std::vector<Rational> closed_form; ///< (q^k - 1)/(q^n - 1) |T_Q|, nonzero Q
  bool identity_holds = false;       ///< average == closed_form, nonzero Q
  bool upper_bound_holds = false;    ///< closed_form <= q^{k-n} |T_Q|
  std::optional<TypeVector> first_mismatch;
};

/// Exact average spectrum of a balanced list of [n,k] codes.
/// Throws PreconditionViolation when the list is not balanced.
AverageSpectrum average_spectrum(std::span<const LinearCode> codes);

struct CountingReport {
  std::vector<std::size_t> failing; ///< members violating some condition
  std::vector<double> means;        ///< f-bar_w
  /// Pr{ f_w(X) > |W| f-bar_w a } for X uniform over the members.
  std::vector<double> tail_probability;
  bool markov_steps_hold = false; ///< each tail <= 1/(|W| a) when f-bar_w > 0
  double member_bound = 0.0;      ///< |S| / a
  bool within_bound = false;      ///< failing.size() <= |S| / a
};

/// values[x][w] = f_w(x) >= 0. A member fails when f_w(x) > f-bar_w |W| a for
/// some w.
CountingReport count_failing_members(
    const std::vector<std::vector<double>> &values, double a);

struct CensusReport {
  double epsilon = 0.0;
  std::uint64_t bad_count = 0; ///< codes that are not q^{eps n}-good
  std::uint64_t z = 0;         ///< floor(N* q^{-eps n})
  std::vector<bool> good;
  std::size_t counting_failures = 0; ///< failing members of the counting lemma
  bool bad_within_counting_failures = false;
  bool within_bound = false; ///< bad_count <= z
};

/// floor(count q^{-exponent}), exact when the exponent is an integer.
std::uint64_t floor_scaled_count(std::uint64_t count, unsigned q,
                                 double exponent);

/// Census of a balanced ensemble of [n,k] codes at goodness q^{eps n}.
CensusReport census_bad_codes(std::span<const LinearCode> codes, double epsilon);
CensusReport census_bad_codes(std::span<const LinearCode> codes,
                              std::span<const Spectrum> spectra, double epsilon);

/// Spectra of many codes, computed concurrently.
std::vector<Spectrum> spectra_of(std::span<const LinearCode> codes);

struct PowerFieldReport {
  std::uint64_t size = 0; ///< |{O, I, T, ..., T^{N-1}}|
  bool closed_under_addition = false;
  bool closed_under_multiplication = false;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
};

/// Exhaustive check that {O, I, T, ..., T^{q^n-2}} is closed under + and *.
PowerFieldReport verify_power_field(const FieldMatrix &t);

} // namespace lincodes
