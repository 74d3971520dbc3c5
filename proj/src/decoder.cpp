/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "lincodes/decoder.hpp"

#include "lincodes/errors.hpp"
#include "lincodes/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lincodes {

// ---------------------------------------------------------------------------
// Representative table

RepresentativeTable::RepresentativeTable(LinearCode code, FieldMatrix parity,
                                         std::vector<std::uint64_t> reps)
    : code_(std::move(code)), parity_(std::move(parity)),
      reps_(std::move(reps)) {
  const std::uint64_t words =
      checked_pow(code_.q(), static_cast<unsigned>(code_.n()));
  is_rep_.assign(words, 0);
  for (auto r : reps_)
    is_rep_[r] = 1;
}

RepresentativeTable RepresentativeTable::build(const LinearCode &c) {
  const std::uint64_t words = checked_pow(c.q(), static_cast<unsigned>(c.n()));
  if (words > kSweepCap)
    throw EnumerationTooLarge("coset sweep over q^n words too large");
  auto parity = parity_check(c);
  auto reps = kernels::omp::coset_leaders(parity, c.n(), c.q());
  if (reps.empty() || reps[0] != 0)
    throw std::logic_error("zero coset must be represented by 0_n");
  return RepresentativeTable(c, std::move(parity), std::move(reps));
}

std::uint64_t RepresentativeTable::syndrome(const Word &y) const {
  if (y.modulus() != code_.q())
    throw ModulusMismatch("word and code over different moduli");
  if (y.size() != code_.n())
    throw DimensionMismatch("word length differs from block length");
  const unsigned q = code_.q();
  std::uint64_t s = 0;
  for (std::size_t j = 0; j < parity_.rows(); ++j)
    s = s * q + y.dot(parity_.row(j)).value();
  return s;
}

Word RepresentativeTable::representative(std::uint64_t syndrome) const {
  return Word::from_index(reps_.at(syndrome), code_.n(), code_.q());
}

Word decode(const RepresentativeTable &tbl, const Word &y) {
  return y - tbl.representative(tbl.syndrome(y));
}

double exact_error_probability(const RepresentativeTable &tbl,
                               const AdditiveChannel &w) {
  const auto &c = tbl.code();
  if (w.q() != c.q())
    throw ModulusMismatch("channel and code over different alphabets");
  double success = 0.0;
  for (auto idx : tbl.representative_indices())
    success += word_probability(w, Word::from_index(idx, c.n(), c.q()));
  return std::max(0.0, 1.0 - success);
}

ErrorProbabilityReport simulate_error_probability(const RepresentativeTable &tbl,
                                                  const AdditiveChannel &w,
                                                  std::uint64_t trials,
                                                  std::uint64_t seed) {
  if (trials == 0)
    throw PreconditionViolation("trials must be >= 1");
  if (w.q() != tbl.code().q())
    throw ModulusMismatch("channel and code over different alphabets");
  std::vector<double> cdf(w.q());
  std::partial_sum(w.error_law().probs().begin(), w.error_law().probs().end(),
                   cdf.begin());
  // Symbols past the last positive mass can never be drawn.
  for (std::size_t u = cdf.size(); u-- > 0;) {
    if (w.error_law()[u] > 0.0) {
      for (std::size_t v = u; v < cdf.size(); ++v)
        cdf[v] = 2.0;
      break;
    }
  }

  ErrorProbabilityReport r;
  r.trials = trials;
  r.seed = seed;
  r.failures = kernels::omp::count_decoding_failures(
      tbl.membership(), tbl.code().n(), cdf, trials, seed);
  r.estimate = static_cast<double>(r.failures) / static_cast<double>(trials);
  r.std_error =
      std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(trials));
  r.exact = exact_error_probability(tbl, w);
  return r;
}

// ---------------------------------------------------------------------------
// Permutations

namespace {
void require_permutation(std::span<const std::size_t> pi, std::size_t n) {
  if (pi.size() != n)
    throw PreconditionViolation("permutation of the wrong length");
  std::vector<bool> seen(n, false);
  for (auto p : pi) {
    if (p >= n || seen[p])
      throw PreconditionViolation("not a permutation");
    seen[p] = true;
  }
}
} // namespace

Word apply_permutation(std::span<const std::size_t> pi, const Word &x) {
  require_permutation(pi, x.size());
  std::vector<Symbol> s(x.size());
  for (std::size_t t = 0; t < x.size(); ++t)
    s[t] = x[pi[t]];
  return Word(std::move(s), x.modulus());
}

LinearCode apply_permutation(std::span<const std::size_t> pi,
                             const LinearCode &c) {
  require_permutation(pi, c.n());
  const auto &g = c.generator();
  FieldMatrix out(g.rows(), g.cols(), g.modulus());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t t = 0; t < g.cols(); ++t)
      out.set(r, t, g.at(r, pi[t]));
  return LinearCode::span(out);
}

// ---------------------------------------------------------------------------
// Permutation average

template struct PermutationAverageReport<double>;
template struct PermutationAverageReport<Rational>;

double tight_permutation_factor(const LinearCode &c, double t_param) {
  const auto s = spectrum(c).without_zero_word();
  const double scale =
      std::pow(static_cast<double>(c.q()), static_cast<double>(c.n()) * t_param);
  double a = 1.0;
  for (std::size_t i = 0; i < s.types().size(); ++i) {
    if (!s.counts()[i])
      continue;
    a = std::max(a, static_cast<double>(s.counts()[i]) * scale /
                        static_cast<double>(type_class_size(s.types()[i])));
  }
  return a;
}

namespace {
double to_double(double v) { return v; }
double to_double(const Rational &v) { return static_cast<double>(v); }
} // namespace

template <class Real>
PermutationAverageReport<Real>
permuted_failure_average(const LinearCode &c, std::span<const Real> word_measure,
                         double a_n, double t_param) {
  const std::size_t n = c.n();
  const unsigned q = c.q();
  if (n > 6)
    throw PreconditionViolation("permutation brute force limited to n <= 6");
  if (!(a_n >= 1.0))
    throw PreconditionViolation("a_n must be >= 1");
  const std::uint64_t words = checked_pow(q, static_cast<unsigned>(n));
  if (word_measure.size() != words)
    throw DimensionMismatch("measure needs one value per word of F_q^n");

  PermutationAverageReport<Real> rep;
  rep.a_n = a_n;
  rep.t_param = t_param;
  const double qn = static_cast<double>(n);
  const double level = a_n * std::pow(double(q), -qn * t_param); // a_n q^{-nT}
  constexpr double kRel = 1e-12;

  // Premise on the spectrum of C \ {0}.
  const auto spec = spectrum(c).without_zero_word();
  const auto &types = spec.types();
  const TypeIndexer indexer(static_cast<unsigned>(n), q);
  rep.premise_holds = true;
  for (std::size_t i = 0; i < types.size(); ++i) {
    const double size = static_cast<double>(type_class_size(types[i]));
    if (static_cast<double>(spec.counts()[i]) > level * size * (1 + kRel)) {
      rep.premise_holds = false;
      rep.premise_witness = types[i];
      break;
    }
  }

  const auto tbl = RepresentativeTable::build(c);
  std::vector<std::uint64_t> reps(tbl.representative_indices().begin(),
                                  tbl.representative_indices().end());

  // Nonzero codewords, as digit vectors.
  std::vector<std::vector<Symbol>> codewords;
  std::vector<Symbol> x(n), y(n);
  {
    const std::uint64_t size = checked_pow(q, static_cast<unsigned>(c.k()));
    for (std::uint64_t m = 1; m < size; ++m) {
      auto w = Word::from_index(m, c.k(), q) * c.generator();
      codewords.emplace_back(w.symbols().begin(), w.symbols().end());
    }
  }
  auto index_of = [q](std::span<const Symbol> v) {
    std::uint64_t idx = 0;
    for (Symbol s : v)
      idx = idx * q + s;
    return idx;
  };
  auto digits_of = [q, n](std::uint64_t idx, std::vector<Symbol> &out) {
    for (std::size_t i = n; i-- > 0;) {
      out[i] = static_cast<Symbol>(idx % q);
      idx /= q;
    }
  };

  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::uint64_t perms = 0;
  Real failure_sum{};
  std::vector<std::uint64_t> orbit(words, 0);   // #{pi | y in pi(C\{0})}
  std::vector<std::uint64_t> missing(words, 0); // #{pi | x not in pi(I)}
  std::vector<std::uint8_t> in_image(words);
  do {
    ++perms;
    std::fill(in_image.begin(), in_image.end(), 0);
    Real success{};
    for (auto r : reps) {
      digits_of(r, x);
      for (std::size_t t = 0; t < n; ++t)
        y[t] = x[pi[t]];
      const auto img = index_of(y);
      in_image[img] = 1;
      success += word_measure[img];
    }
    failure_sum += Real(1) - success;
    for (std::uint64_t w = 0; w < words; ++w)
      if (!in_image[w])
        ++missing[w];
    for (const auto &cw : codewords) {
      for (std::size_t t = 0; t < n; ++t)
        y[t] = cw[pi[t]];
      ++orbit[index_of(y)];
    }
  } while (std::next_permutation(pi.begin(), pi.end()));

  rep.lhs = failure_sum / Real(perms);

  // Orbit counts: constant per type and |T_Q| cnt_Q = n! M_Q(C \ {0}).
  std::vector<std::optional<std::uint64_t>> per_type(types.size());
  rep.orbit_identity_holds = true;
  rep.orbit_bound_holds = true;
  std::vector<std::uint32_t> tally(q);
  for (std::uint64_t w = 0; w < words; ++w) {
    digits_of(w, x);
    std::fill(tally.begin(), tally.end(), 0u);
    for (Symbol s : x)
      ++tally[s];
    const auto ti = indexer.index_of(tally);
    if (!per_type[ti])
      per_type[ti] = orbit[w];
    else if (*per_type[ti] != orbit[w])
      rep.orbit_identity_holds = false;
    if (static_cast<double>(orbit[w]) / static_cast<double>(perms) >
        level * (1 + kRel))
      rep.orbit_bound_holds = false;
  }
  for (std::size_t i = 0; i < types.size(); ++i) {
    const BigInt lhs = type_class_size(types[i]) * BigInt(per_type[i].value_or(0));
    const BigInt rhs = BigInt(perms) * BigInt(spec.counts()[i]);
    if (lhs != rhs)
      rep.orbit_identity_holds = false;
  }

  // Pointwise bound and the right-hand side.
  std::vector<double> h(types.size());
  for (std::size_t i = 0; i < types.size(); ++i)
    h[i] = entropy(types[i]);
  std::vector<double> class_mass(types.size(), 0.0);
  rep.pointwise_bound_holds = true;
  for (std::uint64_t w = 0; w < words; ++w) {
    digits_of(w, x);
    std::fill(tally.begin(), tally.end(), 0u);
    for (Symbol s : x)
      ++tally[s];
    const auto ti = indexer.index_of(tally);
    class_mass[ti] += to_double(word_measure[w]);
    double sum = 0.0;
    for (std::size_t j = 0; j < types.size(); ++j)
      if (h[j] <= h[ti] + 1e-12)
        sum += a_n * std::pow(double(q), qn * (h[j] - t_param));
    const double allowed = std::min(1.0, sum);
    if (static_cast<double>(missing[w]) / static_cast<double>(perms) >
        allowed * (1 + kRel))
      rep.pointwise_bound_holds = false;
  }

  double acc = 0.0;
  for (std::size_t i = 0; i < types.size(); ++i)
    acc += class_mass[i] *
           std::pow(double(q), -qn * std::max(0.0, t_param - h[i]));
  rep.rhs = a_n * static_cast<double>(types.size()) * acc;
  rep.holds = to_double(rep.lhs) <= rep.rhs * (1 + kRel) + 1e-15;
  return rep;
}

template <class Real>
PermutationAverageReport<Real>
permuted_failure_average_product(const LinearCode &c,
                                 std::span<const Real> symbol_law, double a_n,
                                 double t_param) {
  if (symbol_law.size() != c.q())
    throw DimensionMismatch("symbol law over the wrong alphabet");
  const std::uint64_t words = checked_pow(c.q(), static_cast<unsigned>(c.n()));
  std::vector<Real> measure(words);
  for (std::uint64_t w = 0; w < words; ++w) {
    Real p(1);
    std::uint64_t idx = w;
    for (std::size_t t = 0; t < c.n(); ++t) {
      p *= symbol_law[idx % c.q()];
      idx /= c.q();
    }
    measure[w] = p;
  }
  return permuted_failure_average<Real>(c, measure, a_n, t_param);
}

template PermutationAverageReport<double>
permuted_failure_average<double>(const LinearCode &, std::span<const double>,
                                 double, double);
template PermutationAverageReport<Rational>
permuted_failure_average<Rational>(const LinearCode &,
                                   std::span<const Rational>, double, double);
template PermutationAverageReport<double>
permuted_failure_average_product<double>(const LinearCode &,
                                         std::span<const double>, double,
                                         double);
template PermutationAverageReport<Rational>
permuted_failure_average_product<Rational>(const LinearCode &,
                                           std::span<const Rational>, double,
                                           double);

} // namespace lincodes
