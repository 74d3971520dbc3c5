/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

/// Minimum entropy syndrome decoding.
///
/// Each coset of F_q^n / C gets one representative of minimal H(P_x); the
/// decoder returns y minus the representative of y's coset, so decoding
/// succeeds exactly when the noise word is a representative. On an additive
/// channel the error probability is therefore W^n(I^c), I being the set of
/// representatives, whatever codeword was sent.

#include "lincodes/channel.hpp"
#include "lincodes/code.hpp"
#include "lincodes/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lincodes {

class RepresentativeTable {
public:
  /// Full sweep of F_q^n (q^n <= kSweepCap). Ties in entropy go to the
  /// lexicographically smallest word.
  static RepresentativeTable build(const LinearCode &c);

  const LinearCode &code() const { return code_; }
  const FieldMatrix &parity() const { return parity_; }

  /// Number of cosets, q^{n-k}.
  std::size_t size() const { return reps_.size(); }

  /// Syndrome y H^t as an integer, first parity row most significant.
  std::uint64_t syndrome(const Word &y) const;

  Word representative(std::uint64_t syndrome) const;
  std::span<const std::uint64_t> representative_indices() const { return reps_; }

  /// Indexed by Word::index(): 1 iff the word is a representative.
  std::span<const std::uint8_t> membership() const { return is_rep_; }
  bool is_representative(const Word &x) const { return is_rep_[x.index()] != 0; }

private:
  RepresentativeTable(LinearCode code, FieldMatrix parity,
                      std::vector<std::uint64_t> reps);

  LinearCode code_;
  FieldMatrix parity_;
  std::vector<std::uint64_t> reps_;
  std::vector<std::uint8_t> is_rep_;
};

inline RepresentativeTable build_representatives(const LinearCode &c) {
  return RepresentativeTable::build(c);
}

/// y - rep(syndrome(y)); always a codeword.
Word decode(const RepresentativeTable &tbl, const Word &y);

/// 1 - sum over representatives x of W^n(x).
double exact_error_probability(const RepresentativeTable &tbl,
                               const AdditiveChannel &w);

struct ErrorProbabilityReport {
  std::optional<double> exact;
  double estimate = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t seed = 0;
  double std_error = 0.0; ///< sqrt(p (1 - p) / trials) at the estimate
  std::optional<double> bound;
};

/// Monte-Carlo estimate of the decoding error probability. Reproducible per
/// seed, independent of the thread count.
ErrorProbabilityReport simulate_error_probability(const RepresentativeTable &tbl,
                                                  const AdditiveChannel &w,
                                                  std::uint64_t trials,
                                                  std::uint64_t seed);

/// pi(x) = (x_{pi(0)}, ..., x_{pi(n-1)}). Throws PreconditionViolation when
/// pi is not a bijection of {0, ..., n-1}.
Word apply_permutation(std::span<const std::size_t> pi, const Word &x);
LinearCode apply_permutation(std::span<const std::size_t> pi,
                             const LinearCode &c);

/// Brute-force check of the permutation-averaging bound on the failure
/// probability of minimum entropy decoding:
///
///   (1/n!) sum_pi P_n(pi(I)^c) <= a_n |P_n| sum_Q P_n(T_Q) q^{-n |T - H(Q)|^+}
///
/// given M_Q(C \ {0_n}) / |T_Q| <= a_n q^{-nT} for every type Q.
template <class Real> struct PermutationAverageReport {
  Real lhs{};
  double rhs = 0.0;
  bool holds = false;
  double a_n = 0.0;
  double t_param = 0.0;

  bool premise_holds = false;
  std::optional<TypeVector> premise_witness;

  /// #{pi | y in pi(C \ {0})} depends only on the type of y, and
  /// |T_Q| cnt_Q = n! M_Q(C \ {0}).
  bool orbit_identity_holds = false;
  /// cnt_Q / n! <= a_n q^{-nT} for every y.
  bool orbit_bound_holds = false;
  /// #{pi | x not in pi(I)} / n! <= min{1, sum_{H(Q') <= H(P_x)} a_n
  /// q^{n H(Q') - nT}} for every x.
  bool pointwise_bound_holds = false;
};

/// General measure P_n on F_q^n given as one value per Word::index().
/// Requires n <= 6.
template <class Real>
PermutationAverageReport<Real>
permuted_failure_average(const LinearCode &c, std::span<const Real> word_measure,
                         double a_n, double t_param);

/// Product measure P^n for a per-symbol law.
template <class Real>
PermutationAverageReport<Real>
permuted_failure_average_product(const LinearCode &c,
                                 std::span<const Real> symbol_law, double a_n,
                                 double t_param);

/// max(1, max_Q M_Q(C \ {0}) q^{nT} / |T_Q|): the least admissible a_n.
double tight_permutation_factor(const LinearCode &c, double t_param);

extern template struct PermutationAverageReport<double>;
extern template struct PermutationAverageReport<Rational>;

} // namespace lincodes
