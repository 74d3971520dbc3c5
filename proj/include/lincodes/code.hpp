/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

/// Linear codes over F_q, their P-spectra, A-goodness and compatible pairs.

#include "lincodes/field.hpp"
#include "lincodes/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lincodes {

/// An [n,k] code stored by its RREF generator, so equal codes compare equal.
class LinearCode {
public:
  /// Row space of `generators`; k is its rank.
  static LinearCode span(const FieldMatrix &generators);
  static LinearCode zero(std::size_t n, unsigned q);
  static LinearCode full(std::size_t n, unsigned q);

  std::size_t n() const { return generator_.cols(); }
  std::size_t k() const { return generator_.rows(); }
  unsigned q() const { return generator_.modulus(); }
  double rate() const { return static_cast<double>(k()) / n(); }

  const FieldMatrix &generator() const { return generator_; }
  std::span<const std::size_t> pivots() const { return pivots_; }

  bool operator==(const LinearCode &o) const { return generator_ == o.generator_; }

  /// "code n=<n> k=<k> q=<q>" followed by the generator in matrix text form.
  std::string to_text() const;
  static LinearCode parse(std::string_view text);

private:
  LinearCode(FieldMatrix rref, std::vector<std::size_t> pivots)
      : generator_(std::move(rref)), pivots_(std::move(pivots)) {}

  FieldMatrix generator_;
  std::vector<std::size_t> pivots_;
};

bool contains(const LinearCode &c, const Word &x);

/// C^perp in canonical form.
LinearCode dual(const LinearCode &c);

/// Generator of the dual: the rows of H with x in C iff x H^t = 0.
FieldMatrix parity_check(const LinearCode &c);

/// Every [n,k] code over F_q, in order of pivot pattern then free entries.
std::vector<LinearCode> enumerate_codes(std::size_t n, std::size_t k,
                                        unsigned q);

/// Cap on q^n for every exhaustive sweep over F_q^n.
inline constexpr std::uint64_t kSweepCap = std::uint64_t{1} << 22;

/// Hard cap on q^k for codeword enumeration.
inline constexpr std::uint64_t kSpectrumCap = std::uint64_t{1} << 24;

/// (M_Q(C))_Q over P_n(F_q) in enumerate_types() order, zeros included.
class Spectrum {
public:
  Spectrum(unsigned n, unsigned q, std::vector<std::uint64_t> counts);

  unsigned n() const { return n_; }
  unsigned q() const { return q_; }
  const std::vector<TypeVector> &types() const { return types_; }
  std::span<const std::uint64_t> counts() const { return counts_; }

  std::uint64_t count(const TypeVector &t) const;
  std::uint64_t total() const;

  /// Spectrum of C \ {0_n}.
  Spectrum without_zero_word() const;

  /// Header "type,count" then one row per type; the type field is quoted
  /// because it contains commas.
  std::string to_csv() const;

  bool operator==(const Spectrum &o) const {
    return n_ == o.n_ && q_ == o.q_ && counts_ == o.counts_;
  }

private:
  unsigned n_, q_;
  std::vector<TypeVector> types_;
  std::vector<std::uint64_t> counts_;
};

/// Throws EnumerationTooLarge when q^k exceeds `cap`.
Spectrum spectrum(const LinearCode &c, std::uint64_t cap = kSpectrumCap);

/// The factor A of the A-goodness test, exact when rational.
class GoodnessFactor {
public:
  static GoodnessFactor exact(Rational a);
  static GoodnessFactor real(double a);
  /// q^exponent; exact when the exponent is an integer.
  static GoodnessFactor q_power(unsigned q, double exponent);

  double approx() const { return approx_; }
  const std::optional<Rational> &rational() const { return exact_; }

private:
  GoodnessFactor(std::optional<Rational> exact, double approx)
      : exact_(std::move(exact)), approx_(approx) {}
  std::optional<Rational> exact_;
  double approx_;
};

struct AGoodWitness {
  TypeVector type;
  std::uint64_t count; ///< M_Q(C)
  double bound;        ///< A (|P_n|-1) q^{-n(1-rho)} |T_Q|
};

struct AGoodResult {
  bool good = true;
  std::optional<AGoodWitness> witness; ///< first violating type
};

/// M_Q(C) <= A (|P_n|-1) q^{-n(1-rho)} |T_Q| for every Q != P_{0_n}.
/// Exact integer comparison for rational A, 1e-9 relative tolerance otherwise.
AGoodResult is_a_good(const Spectrum &s, std::size_t k, const GoodnessFactor &a);
AGoodResult is_a_good(const LinearCode &c, const GoodnessFactor &a);

/// C2^perp within C1, cross-checked against the equivalent C1^perp within C2.
bool is_compatible_pair(const LinearCode &c1, const LinearCode &c2);

} // namespace lincodes
