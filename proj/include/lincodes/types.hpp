/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

/// Method of types over F_q: compositions of words, type classes, and the
/// base-q entropy / relative entropy used by every exponent in the library.

#include "lincodes/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lincodes {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Absolute tolerance for comparisons of entropies and exponents.
inline constexpr double kTolerance = 1e-9;

/// Binomial coefficient C(n, k) as a 64-bit integer (n <= 60 is safe).
std::uint64_t binomial(unsigned n, unsigned k);

/// Composition (n P(0), ..., n P(q-1)) of a word of length n.
class TypeVector {
public:
  explicit TypeVector(std::vector<std::uint32_t> counts);
  TypeVector(std::initializer_list<std::uint32_t> counts);

  std::span<const std::uint32_t> counts() const { return counts_; }
  std::uint32_t operator[](std::size_t u) const { return counts_[u]; }
  std::uint32_t n() const { return n_; }
  unsigned q() const { return static_cast<unsigned>(counts_.size()); }

  /// True for the type of 0_n.
  bool is_zero_type() const { return counts_[0] == n_; }

  /// "(c0,c1,...,c_{q-1})"
  std::string to_string() const;
  static TypeVector parse(std::string_view text);

  bool operator==(const TypeVector &) const = default;
  std::strong_ordering operator<=>(const TypeVector &o) const;

private:
  std::vector<std::uint32_t> counts_;
  std::uint32_t n_;
};

TypeVector type_of(const Word &x);
TypeVector type_of(std::span<const Symbol> x, unsigned q);

/// P_n(F_q), largest count of symbol 0 first: (2,0), (1,1), (0,2).
std::vector<TypeVector> enumerate_types(unsigned n, unsigned q);

/// |P_n(F_q)| = C(n+q-1, q-1).
std::uint64_t type_count(unsigned n, unsigned q);

/// |T_Q^n| = n! / prod_u counts[u]!, exact.
BigInt type_class_size(const TypeVector &t);

/// Dense index of a type in enumerate_types() order without a lookup table.
class TypeIndexer {
public:
  TypeIndexer(unsigned n, unsigned q);

  unsigned n() const { return n_; }
  unsigned q() const { return q_; }
  std::size_t size() const { return size_; }

  std::size_t index_of(std::span<const std::uint32_t> counts) const;
  std::size_t index_of(const TypeVector &t) const {
    return index_of(t.counts());
  }

private:
  unsigned n_, q_;
  std::size_t size_;
  // compositions_[s][m] = number of compositions of s into m parts.
  std::vector<std::vector<std::uint64_t>> compositions_;
};

/// A probability distribution over {0, ..., q-1}.
class Distribution {
public:
  /// Throws PreconditionViolation on negative entries or |sum - 1| > 1e-12.
  explicit Distribution(std::vector<double> probs);

  static Distribution uniform(unsigned q);
  static Distribution point_mass(unsigned q, unsigned u);
  static Distribution from_type(const TypeVector &t);

  std::span<const double> probs() const { return probs_; }
  double operator[](std::size_t u) const { return probs_[u]; }
  unsigned size() const { return static_cast<unsigned>(probs_.size()); }

  std::string to_string(int digits = 12) const;

  bool operator==(const Distribution &) const = default;

private:
  std::vector<double> probs_;
};

/// Extended nonnegative real: relative entropy with an explicit infinity.
class Divergence {
public:
  static Divergence finite(double v) { return Divergence(v, false); }
  static Divergence infinite() { return Divergence(0.0, true); }

  bool is_infinite() const { return infinite_; }
  /// Throws PreconditionViolation when infinite.
  double value() const;

  bool operator==(const Divergence &) const = default;
  std::partial_ordering operator<=>(const Divergence &o) const;

private:
  Divergence(double v, bool inf) : value_(v), infinite_(inf) {}
  double value_;
  bool infinite_;
};

/// H(P) with logarithms to base P.size(); 0 log 0 = 0.
double entropy(const Distribution &p);

/// H(P_x) for a type. Computed over sorted counts so that types equal up to
/// relabelling of symbols give bit-identical values.
double entropy(const TypeVector &t);

/// D(Q || P) in base-q units; infinite iff supp Q is not inside supp P.
Divergence relative_entropy(const Distribution &qd, const Distribution &pd);
Divergence relative_entropy(const TypeVector &t, const Distribution &pd);

/// P^n(T_Q^n) = |T_Q^n| prod_u P(u)^{n Q(u)}.
double type_class_prob(const Distribution &pd, const TypeVector &t);

/// Same quantity in exact rational arithmetic.
Rational type_class_prob(std::span<const Rational> pd, const TypeVector &t);

} // namespace lincodes
