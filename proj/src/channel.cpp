/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "lincodes/channel.hpp"

#include "lincodes/errors.hpp"
#include "lincodes/kernels.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace lincodes {

AdditiveChannel::AdditiveChannel(Distribution error_law)
    : law_(std::move(error_law)) {
  require_prime_modulus(law_.size());
}

AdditiveChannel AdditiveChannel::parse(std::string_view spec,
                                       bool *renormalized) {
  std::vector<double> p;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto comma = spec.find(',', pos);
    if (comma == std::string_view::npos)
      comma = spec.size();
    auto tok = spec.substr(pos, comma - pos);
    double v = 0.0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || end != tok.data() + tok.size() || tok.empty())
      throw ParseError("bad channel probability '" + std::string(tok) + "'");
    if (!(v >= 0.0))
      throw ParseError("channel probabilities must be >= 0");
    p.push_back(v);
    pos = comma + 1;
  }
  double sum = 0.0;
  for (double v : p)
    sum += v;
  if (std::abs(sum - 1.0) > 1e-9)
    throw ParseError("channel probabilities sum to " + std::to_string(sum));
  const bool renorm = std::abs(sum - 1.0) > 1e-12;
  if (renorm)
    for (double &v : p)
      v /= sum;
  if (renormalized)
    *renormalized = renorm;
  if (!is_prime(static_cast<unsigned>(p.size())))
    throw ParseError("channel alphabet size must be a prime q");
  return AdditiveChannel(Distribution(std::move(p)));
}

AdditiveChannel AdditiveChannel::symmetric(unsigned q, double p) {
  require_prime_modulus(q);
  if (!(p >= 0.0 && p <= 1.0))
    throw PreconditionViolation("crossover probability outside [0, 1]");
  std::vector<double> law(q, p / (q - 1));
  law[0] = 1.0 - p;
  return AdditiveChannel(Distribution(std::move(law)));
}

double exponent_objective(const Distribution &candidate,
                          const AdditiveChannel &w, double t_param) {
  auto term = kernels::exponent_term(candidate, w.error_law(), t_param);
  return term.finite ? term.value : std::numeric_limits<double>::infinity();
}

ExponentResult exponent_over_types(const AdditiveChannel &w, double t_param,
                                   unsigned n) {
  if (n == 0)
    throw PreconditionViolation("exponent_over_types needs n >= 1");
  const auto types = enumerate_types(n, w.q());
  const auto best =
      kernels::omp::type_grid_minimum(types, w.error_law(), t_param);
  if (!best.found)
    throw PreconditionViolation("channel with empty support");
  return {best.value, Distribution::from_type(types[best.index]),
          "types n=" + std::to_string(n)};
}

namespace {

constexpr double kFinalStep = 1e-6;

/// Q(u) proportional to W(u)^lambda on the support of W.
std::vector<double> tilted(const Distribution &w, double lambda) {
  std::vector<double> q(w.size(), 0.0);
  double z = 0.0;
  for (unsigned u = 0; u < w.size(); ++u)
    if (w[u] > 0.0)
      z += q[u] = std::pow(w[u], lambda);
  for (double &v : q)
    v /= z;
  return q;
}

class Objective {
public:
  Objective(const AdditiveChannel &w, double t) : w_(w), t_(t) {}

  double operator()(const std::vector<double> &p) const {
    // Clean the accumulated rounding so the distribution invariant holds.
    std::vector<double> c(p);
    double s = 0.0;
    for (double &v : c) {
      v = std::max(0.0, v);
      s += v;
    }
    for (double &v : c)
      v /= s;
    return exponent_objective(Distribution(std::move(c)), w_, t_);
  }

private:
  const AdditiveChannel &w_;
  double t_;
};

/// Pairwise mass transfers between support symbols with step halving.
double coordinate_descent(const Objective &f, const std::vector<unsigned> &supp,
                          std::vector<double> &p, double step) {
  double value = f(p);
  while (step >= kFinalStep) {
    bool improved = false;
    for (unsigned i : supp) {
      for (unsigned j : supp) {
        if (i == j || p[i] <= 0.0)
          continue;
        const double h = std::min(step, p[i]);
        auto cand = p;
        cand[i] -= h;
        cand[j] += h;
        const double v = f(cand);
        if (v < value) {
          value = v;
          p = std::move(cand);
          improved = true;
        }
      }
    }
    if (!improved)
      step /= 2.0;
  }
  return value;
}

/// Golden-section refinement of the tilted family around a scanned minimum.
std::pair<double, double> tilted_search(const Objective &f,
                                        const Distribution &w) {
  constexpr int kScan = 1000;
  double best_lambda = 0.0, best = f(tilted(w, 0.0));
  for (int s = 1; s <= kScan; ++s) {
    const double lambda = static_cast<double>(s) / kScan;
    const double v = f(tilted(w, lambda));
    if (v < best) {
      best = v;
      best_lambda = lambda;
    }
  }
  double lo = std::max(0.0, best_lambda - 1.0 / kScan);
  double hi = std::min(1.0, best_lambda + 1.0 / kScan);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = f(tilted(w, x1)), f2 = f(tilted(w, x2));
  for (int it = 0; it < 80; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(tilted(w, x1));
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(tilted(w, x2));
    }
  }
  const double lambda = f1 <= f2 ? x1 : x2;
  const double v = std::min(f1, f2);
  return v < best ? std::pair{lambda, v} : std::pair{best_lambda, best};
}

} // namespace

ExponentResult random_coding_exponent(const AdditiveChannel &w, double r,
                                      unsigned resolution) {
  if (!(r >= 0.0 && r <= 1.0))
    throw OutOfRange("rate r must lie in [0, 1]");
  if (resolution == 0)
    throw PreconditionViolation("resolution must be >= 1");
  const double t = 1.0 - r;
  const Objective f(w, t);
  const auto &law = w.error_law();

  std::vector<unsigned> supp;
  for (unsigned u = 0; u < w.q(); ++u)
    if (law[u] > 0.0)
      supp.push_back(u);

  // Seed 1: best type of the grid, then descent.
  auto seed = exponent_over_types(w, t, resolution);
  std::vector<double> p(seed.minimizer.probs().begin(),
                        seed.minimizer.probs().end());
  double value = coordinate_descent(f, supp, p, 1.0 / resolution);

  // Seed 2: the minimiser lies on Q ~ W^lambda; pairwise moves can stall on
  // the H(Q) = T ridge when q > 2, so this family is searched as well.
  if (supp.size() > 1) {
    auto [lambda, tv] = tilted_search(f, law);
    if (tv < value) {
      auto tp = tilted(law, lambda);
      const double dv = coordinate_descent(f, supp, tp, kFinalStep * 64);
      if (dv < value) {
        value = dv;
        p = std::move(tp);
      }
    }
  }

  double s = 0.0;
  for (double &v : p) {
    v = std::max(0.0, v);
    s += v;
  }
  for (double &v : p)
    v /= s;
  Distribution minimizer(std::move(p));
  value = exponent_objective(minimizer, w, t);
  return {value, std::move(minimizer),
          "types n=" + std::to_string(resolution) + " + descent to 1e-6"};
}

double type_count_real(unsigned n, unsigned q) {
  return static_cast<double>(type_count(n, q));
}

double tight_premise_factor(const Spectrum &s, std::size_t k) {
  const double qcodim =
      std::pow(static_cast<double>(s.q()), static_cast<double>(s.n() - k));
  double a = 1.0;
  for (std::size_t i = 0; i < s.types().size(); ++i) {
    if (s.types()[i].is_zero_type() || s.counts()[i] == 0)
      continue;
    const double ratio = static_cast<double>(s.counts()[i]) * qcodim /
                         static_cast<double>(type_class_size(s.types()[i]));
    a = std::max(a, ratio);
  }
  return a;
}

PremiseCheck check_rcex_premise(const Spectrum &s, std::size_t k, double a_n) {
  const double qcodim =
      std::pow(static_cast<double>(s.q()), static_cast<double>(s.n() - k));
  PremiseCheck out;
  for (std::size_t i = 0; i < s.types().size(); ++i) {
    if (s.types()[i].is_zero_type() || s.counts()[i] == 0)
      continue;
    const double size = static_cast<double>(type_class_size(s.types()[i]));
    const double lhs = static_cast<double>(s.counts()[i]) * qcodim;
    if (lhs > a_n * size * (1.0 + 1e-9)) {
      out.holds = false;
      out.witness = s.types()[i];
      out.ratio = lhs / size;
      return out;
    }
  }
  return out;
}

RcexBound rcex_error_bound(const Spectrum &s, std::size_t k,
                           const AdditiveChannel &w, double a_n,
                           unsigned resolution) {
  if (!(a_n >= 1.0))
    throw PreconditionViolation("a_n must be >= 1");
  if (w.q() != s.q())
    throw ModulusMismatch("channel and code over different alphabets");
  RcexBound b;
  b.rate = static_cast<double>(k) / s.n();
  b.exponent = random_coding_exponent(w, b.rate, resolution);
  b.a_n = a_n;
  const double types = type_count_real(s.n(), s.q());
  b.raw = a_n * types * types *
          std::pow(static_cast<double>(s.q()), -double(s.n()) * b.exponent.value);
  b.bound = std::min(1.0, b.raw);
  b.premise = check_rcex_premise(s, k, a_n);
  return b;
}

RcexBound rcex_error_bound(const LinearCode &c, const AdditiveChannel &w,
                           double a_n, unsigned resolution) {
  return rcex_error_bound(spectrum(c), c.k(), w, a_n, resolution);
}

double good_code_error_bound(unsigned n, unsigned q, double exponent,
                             double epsilon) {
  const double types = type_count_real(n, q);
  return types * types * types *
         std::pow(static_cast<double>(q), -double(n) * (exponent - epsilon));
}

double word_probability(const AdditiveChannel &w, const Word &x) {
  if (x.modulus() != w.q())
    throw ModulusMismatch("word and channel over different alphabets");
  double p = 1.0;
  for (Symbol s : x.symbols())
    p *= w.error_law()[s];
  return p;
}

} // namespace lincodes
