/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

/// Additive memoryless channels over F_q and their error exponents.
///
/// All exponents are in base-q units:
///
///   E_r(W, r)      = min over Q in P(F_q)   of D(Q||W) + |1 - r - H(Q)|^+
///   E_gen(W, T; n) = min over Q in P_n(F_q) of D(Q||W) + |T - H(Q)|^+

#include "lincodes/code.hpp"
#include "lincodes/types.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace lincodes {

/// Output = input + noise, noise i.i.d. with law `error_law`.
class AdditiveChannel {
public:
  explicit AdditiveChannel(Distribution error_law);

  /// Comma-separated probabilities of the noise symbols 0..q-1. The sum must
  /// be within 1e-9 of 1; beyond 1e-12 the values are renormalised and
  /// `renormalized` (when given) is set.
  static AdditiveChannel parse(std::string_view spec,
                               bool *renormalized = nullptr);

  /// q-ary symmetric noise: P(0) = 1 - p, P(u) = p / (q - 1) otherwise.
  static AdditiveChannel symmetric(unsigned q, double p);

  const Distribution &error_law() const { return law_; }
  unsigned q() const { return law_.size(); }

private:
  Distribution law_;
};

struct ExponentResult {
  double value = 0.0;
  Distribution minimizer = Distribution::point_mass(2, 0);
  std::string resolution;
};

/// D(Q||W) + |t - H(Q)|^+, or +infinity.
double exponent_objective(const Distribution &candidate,
                          const AdditiveChannel &w, double t_param);

/// E_gen by exhausting P_n(F_q). Ties go to the lexicographically smallest
/// type.
ExponentResult exponent_over_types(const AdditiveChannel &w, double t_param,
                                   unsigned n);

/// E_r(W, r) over the continuous simplex: type-grid seed of the given
/// resolution, then coordinate descent on the support of W with step halving
/// down to 1e-6.
ExponentResult random_coding_exponent(const AdditiveChannel &w, double r,
                                      unsigned resolution = 64);

/// |P_n(F_q)|^2 / |P_n(F_q)|^3 helpers as doubles.
double type_count_real(unsigned n, unsigned q);

/// max(1, max over nonzero Q of M_Q(C) q^{n-k} / |T_Q|): the least a_n for
/// which M_Q(C) <= a_n q^{k-n} |T_Q| holds.
double tight_premise_factor(const Spectrum &s, std::size_t k);

struct PremiseCheck {
  bool holds = true;
  std::optional<TypeVector> witness;
  double ratio = 0.0; ///< M_Q q^{n-k} / |T_Q| at the witness
};

/// M_Q(C) <= a_n q^{k-n} |T_Q| for all nonzero Q, 1e-9 relative tolerance.
PremiseCheck check_rcex_premise(const Spectrum &s, std::size_t k, double a_n);

struct RcexBound {
  double rate = 0.0;
  ExponentResult exponent; ///< E_r(W, k/n)
  double a_n = 0.0;
  double raw = 0.0;   ///< a_n |P_n|^2 q^{-n E_r}
  double bound = 0.0; ///< min(raw, 1)
  PremiseCheck premise;
};

/// Error-probability bound for minimum entropy syndrome decoding of `c`.
RcexBound rcex_error_bound(const LinearCode &c, const AdditiveChannel &w,
                           double a_n, unsigned resolution = 64);
RcexBound rcex_error_bound(const Spectrum &s, std::size_t k,
                           const AdditiveChannel &w, double a_n,
                           unsigned resolution = 64);

/// |P_n|^3 q^{-n (E_r - eps)}, the bound for q^{eps n}-good codes (unclamped).
double good_code_error_bound(unsigned n, unsigned q, double exponent,
                             double epsilon);

/// W^n(x) = prod_t W(x_t).
double word_probability(const AdditiveChannel &w, const Word &x);

} // namespace lincodes
