/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "lincodes/ensemble.hpp"

#include "lincodes/errors.hpp"
#include "lincodes/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace lincodes {

// ---------------------------------------------------------------------------
// Polynomials and companion matrices

MonicPolynomial MonicPolynomial::from_companion_coefficients(
    std::vector<Symbol> f, unsigned q) {
  require_prime_modulus(q);
  if (f.empty())
    throw PreconditionViolation("polynomial degree must be >= 1");
  for (Symbol c : f)
    if (c >= q)
      throw OutOfRange("polynomial coefficient out of range");
  return MonicPolynomial(std::move(f), q);
}

MonicPolynomial MonicPolynomial::from_coefficients(std::vector<Symbol> a,
                                                   unsigned q) {
  require_prime_modulus(q);
  for (auto &c : a) {
    if (c >= q)
      throw OutOfRange("polynomial coefficient out of range");
    c = static_cast<Symbol>(detail::sub_mod(0, c, q));
  }
  return from_companion_coefficients(std::move(a), q);
}

MonicPolynomial MonicPolynomial::parse(std::string_view text, unsigned q) {
  std::vector<Symbol> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos)
      comma = text.size();
    auto tok = text.substr(pos, comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != tok.npos)
      throw ParseError("polynomial coefficients must be decimal integers");
    coeffs.push_back(static_cast<Symbol>(std::stoul(std::string(tok)) % 256));
    pos = comma + 1;
  }
  if (coeffs.size() < 2 || coeffs.back() != 1)
    throw ParseError("polynomial must be monic of degree >= 1 (last "
                     "coefficient 1)");
  coeffs.pop_back();
  return from_coefficients(std::move(coeffs), q);
}

std::vector<Symbol> MonicPolynomial::coefficients() const {
  std::vector<Symbol> a(f_.size());
  for (std::size_t i = 0; i < f_.size(); ++i)
    a[i] = static_cast<Symbol>(detail::sub_mod(0, f_[i], q_));
  return a;
}

FieldMatrix MonicPolynomial::evaluate(const FieldMatrix &m) const {
  if (!m.is_square())
    throw DimensionMismatch("polynomial of a non-square matrix");
  // Horner with the ordinary coefficients.
  const auto a = coefficients();
  FieldMatrix acc = FieldMatrix::identity(m.rows(), q_);
  for (std::size_t i = a.size(); i-- > 0;)
    acc = acc * m + FieldMatrix::identity(m.rows(), q_).scaled(a[i]);
  return acc;
}

std::string MonicPolynomial::to_string() const {
  const auto a = coefficients();
  auto term = [](std::size_t d) -> std::string {
    if (d == 0)
      return "";
    if (d == 1)
      return "x";
    return "x^" + std::to_string(d);
  };
  std::string out = term(degree());
  for (std::size_t d = degree(); d-- > 0;) {
    if (!a[d])
      continue;
    out += " + ";
    if (a[d] != 1 || d == 0)
      out += std::to_string(a[d]);
    out += term(d);
  }
  return out;
}

std::string MonicPolynomial::to_csv_string() const {
  std::string out;
  for (Symbol c : coefficients())
    out += std::to_string(c) + ',';
  return out + '1';
}

FieldMatrix companion_matrix(const MonicPolynomial &f) {
  const std::size_t n = f.degree();
  FieldMatrix t(n, n, f.q());
  const auto c = f.companion_coefficients();
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0)
      t.set(r, r - 1, 1);
    t.set(r, n - 1, c[r]);
  }
  return t;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d)
      continue;
    out.push_back(d);
    while (m % d == 0)
      m /= d;
  }
  if (m > 1)
    out.push_back(m);
  return out;
}

bool has_multiplicative_order(const FieldMatrix &m, std::uint64_t order) {
  if (!m.is_square() || order == 0)
    return false;
  if (!mat_pow(m, static_cast<long long>(order)).is_identity())
    return false;
  for (auto l : prime_factors(order))
    if (mat_pow(m, static_cast<long long>(order / l)).is_identity())
      return false;
  return true;
}

MonicPolynomial find_primitive_poly(unsigned q, std::size_t n) {
  require_prime_modulus(q);
  if (n == 0)
    throw PreconditionViolation("degree must be >= 1");
  if (n > 64 || checked_pow(q, static_cast<unsigned>(n)) > kSweepCap)
    throw EnumerationTooLarge("search space too large for q^n");
  const std::uint64_t candidates = checked_pow(q, static_cast<unsigned>(n));
  const std::uint64_t order = candidates - 1;
  for (std::uint64_t m = 0; m < candidates; ++m) {
    std::vector<Symbol> a(n);
    std::uint64_t rest = m;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<Symbol>(rest % q);
      rest /= q;
    }
    if (a[0] == 0)
      continue; // x divides f, so T is singular
    auto f = MonicPolynomial::from_coefficients(a, q);
    if (has_multiplicative_order(companion_matrix(f), order))
      return f;
  }
  throw std::logic_error("no primitive polynomial found");
}

// ---------------------------------------------------------------------------
// Ensemble construction

std::vector<EnsemblePair> build_ensemble(const FieldMatrix &t, std::size_t k1,
                                         std::size_t k2) {
  if (!t.is_square())
    throw PreconditionViolation("ensemble generator must be square");
  const std::size_t n = t.rows();
  const unsigned q = t.modulus();
  if (k1 > n || k2 > n || n - k2 > k1)
    throw PreconditionViolation("need 0 <= n - k2 <= k1 <= n");
  if (checked_pow(q, static_cast<unsigned>(n)) > kSweepCap)
    throw EnumerationTooLarge("ensemble size q^n - 1 too large");
  const std::uint64_t size = checked_pow(q, static_cast<unsigned>(n)) - 1;
  if (!has_multiplicative_order(t, size))
    throw PreconditionViolation("matrix does not have order q^n - 1");

  const FieldMatrix step2 = mat_inverse(t).transpose(); // (T^-1)^t
  FieldMatrix power1 = t, power2 = step2;
  std::vector<EnsemblePair> out;
  out.reserve(size);
  for (std::uint64_t i = 1; i <= size; ++i) {
    out.push_back({i, LinearCode::span(rows_first(power1, k1)),
                   LinearCode::span(rows_last(power2, k2))});
    power1 = power1 * t;
    power2 = power2 * step2;
  }
  return out;
}

std::vector<LinearCode> first_codes(std::span<const EnsemblePair> ensemble) {
  std::vector<LinearCode> out;
  for (const auto &p : ensemble)
    out.push_back(p.c1);
  return out;
}

std::vector<LinearCode> second_codes(std::span<const EnsemblePair> ensemble) {
  std::vector<LinearCode> out;
  for (const auto &p : ensemble)
    out.push_back(p.c2);
  return out;
}

// ---------------------------------------------------------------------------
// Balance and average spectrum

namespace {

struct Shape {
  std::size_t n;
  unsigned q;
};

Shape common_shape(std::span<const LinearCode> codes) {
  if (codes.empty())
    throw PreconditionViolation("empty list of codes");
  const Shape s{codes[0].n(), codes[0].q()};
  for (const auto &c : codes)
    if (c.n() != s.n || c.q() != s.q)
      throw PreconditionViolation("codes with heterogeneous (n, q)");
  return s;
}

std::size_t common_dimension(std::span<const LinearCode> codes) {
  const std::size_t k = codes[0].k();
  for (const auto &c : codes)
    if (c.k() != k)
      throw PreconditionViolation("codes with different dimensions");
  return k;
}

} // namespace

BalanceReport verify_balanced(std::span<const LinearCode> codes) {
  const auto [n, q] = common_shape(codes);
  const std::uint64_t words = checked_pow(q, static_cast<unsigned>(n));
  if (words > kSweepCap)
    throw EnumerationTooLarge("membership sweep over q^n words too large");

  std::vector<FieldMatrix> gens;
  gens.reserve(codes.size());
  for (const auto &c : codes)
    gens.push_back(c.generator());
  const auto counts = kernels::omp::membership_counts(gens, n, q);

  BalanceReport report;
  report.v = counts[1];
  report.balanced = true;
  for (std::uint64_t x = 1; x < words; ++x) {
    if (counts[x] != report.v) {
      report.balanced = false;
      report.witness = Word::from_index(x, n, q);
      report.witness_count = counts[x];
      break;
    }
  }
  if (report.balanced) {
    std::uint64_t pairs = 0;
    for (const auto &c : codes)
      pairs += checked_pow(q, static_cast<unsigned>(c.k())) - 1;
    report.pair_count_identity = std::uint64_t{report.v} * (words - 1) == pairs;
  }
  return report;
}

std::vector<Spectrum> spectra_of(std::span<const LinearCode> codes) {
  std::vector<std::optional<Spectrum>> slots(codes.size());
  const auto count = static_cast<std::int64_t>(codes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i)
    slots[static_cast<std::size_t>(i)] = spectrum(codes[static_cast<std::size_t>(i)]);
  std::vector<Spectrum> out;
  out.reserve(codes.size());
  for (auto &s : slots)
    out.push_back(std::move(*s));
  return out;
}

AverageSpectrum average_spectrum(std::span<const LinearCode> codes) {
  const auto [n, q] = common_shape(codes);
  const std::size_t k = common_dimension(codes);
  const auto balance = verify_balanced(codes);
  if (!balance.balanced)
    throw PreconditionViolation("imbalance detected at word " +
                                balance.witness->to_string());

  const auto spectra = spectra_of(codes);
  AverageSpectrum out;
  out.types = spectra[0].types();
  std::vector<std::uint64_t> sums(out.types.size(), 0);
  for (const auto &s : spectra)
    for (std::size_t i = 0; i < sums.size(); ++i)
      sums[i] += s.counts()[i];

  const BigInt qk = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k));
  const BigInt qn = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n));
  const Rational ratio(qk - 1, qn - 1);
  const Rational upper(qk, qn);
  out.identity_holds = true;
  out.upper_bound_holds = true;
  for (std::size_t i = 0; i < out.types.size(); ++i) {
    const auto &t = out.types[i];
    out.average.emplace_back(BigInt(sums[i]), BigInt(codes.size()));
    if (t.is_zero_type()) {
      out.closed_form.emplace_back(1);
      continue;
    }
    const Rational size(type_class_size(t));
    out.closed_form.push_back(ratio * size);
    if (out.average.back() != out.closed_form.back() && !out.first_mismatch) {
      out.identity_holds = false;
      out.first_mismatch = t;
    }
    if (out.closed_form.back() > upper * size)
      out.upper_bound_holds = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Counting lemma and census

CountingReport count_failing_members(
    const std::vector<std::vector<double>> &values, double a) {
  if (values.empty())
    throw PreconditionViolation("empty member set");
  if (!(a > 0.0))
    throw PreconditionViolation("counting lemma needs a > 0");
  const std::size_t members = values.size();
  const std::size_t conditions = values[0].size();
  for (const auto &row : values) {
    if (row.size() != conditions)
      throw DimensionMismatch("ragged value table");
    for (double v : row)
      if (!(v >= 0.0))
        throw PreconditionViolation("values must be nonnegative");
  }

  CountingReport r;
  r.means.assign(conditions, 0.0);
  for (const auto &row : values)
    for (std::size_t w = 0; w < conditions; ++w)
      r.means[w] += row[w];
  for (auto &m : r.means)
    m /= static_cast<double>(members);

  const double scale = static_cast<double>(conditions) * a;
  r.tail_probability.assign(conditions, 0.0);
  for (std::size_t x = 0; x < members; ++x) {
    bool fails = false;
    for (std::size_t w = 0; w < conditions; ++w) {
      const double threshold = r.means[w] * scale;
      if (values[x][w] > threshold * (1.0 + 1e-12)) {
        fails = true;
        r.tail_probability[w] += 1.0 / static_cast<double>(members);
      }
    }
    if (fails)
      r.failing.push_back(x);
  }

  r.markov_steps_hold = true;
  for (std::size_t w = 0; w < conditions; ++w)
    if (r.means[w] > 0.0 && r.tail_probability[w] > 1.0 / scale + 1e-12)
      r.markov_steps_hold = false;
  r.member_bound = static_cast<double>(members) / a;
  r.within_bound = static_cast<double>(r.failing.size()) <= r.member_bound;
  return r;
}

std::uint64_t floor_scaled_count(std::uint64_t count, unsigned q,
                                 double exponent) {
  const double rounded = std::round(exponent);
  if (std::abs(exponent - rounded) < 1e-12 && rounded >= 0) {
    const auto e = static_cast<unsigned>(rounded);
    if (e >= 64)
      return 0;
    BigInt p = boost::multiprecision::pow(BigInt(q), e);
    return static_cast<std::uint64_t>(BigInt(count) / p);
  }
  const long double v =
      static_cast<long double>(count) * std::pow(static_cast<long double>(q),
                                                 -static_cast<long double>(exponent));
  return static_cast<std::uint64_t>(std::floor(v));
}

CensusReport census_bad_codes(std::span<const LinearCode> codes,
                              double epsilon) {
  const auto spectra = spectra_of(codes);
  return census_bad_codes(codes, spectra, epsilon);
}

CensusReport census_bad_codes(std::span<const LinearCode> codes,
                              std::span<const Spectrum> spectra,
                              double epsilon) {
  const auto [n, q] = common_shape(codes);
  const std::size_t k = common_dimension(codes);
  if (spectra.size() != codes.size())
    throw DimensionMismatch("one spectrum per code required");
  if (epsilon < 0.0)
    throw PreconditionViolation("epsilon must be >= 0");
  if (!verify_balanced(codes).balanced)
    throw PreconditionViolation("census needs a balanced ensemble");

  const double exponent = epsilon * static_cast<double>(n);
  const auto a = GoodnessFactor::q_power(q, exponent);

  CensusReport r;
  r.epsilon = epsilon;
  r.z = floor_scaled_count(codes.size(), q, exponent);
  r.good.resize(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i) {
    r.good[i] = is_a_good(spectra[i], k, a).good;
    if (!r.good[i])
      ++r.bad_count;
  }

  // Counting lemma over S = {(C(i), i)}, W = nonzero types, f_Q = M_Q.
  std::vector<std::vector<double>> table(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i)
    for (std::size_t t = 0; t < spectra[i].types().size(); ++t)
      if (!spectra[i].types()[t].is_zero_type())
        table[i].push_back(static_cast<double>(spectra[i].counts()[t]));
  const auto counting = count_failing_members(table, a.approx());
  r.counting_failures = counting.failing.size();
  r.bad_within_counting_failures = true;
  for (std::size_t i = 0; i < codes.size(); ++i)
    if (!r.good[i] && std::find(counting.failing.begin(), counting.failing.end(),
                                i) == counting.failing.end())
      r.bad_within_counting_failures = false;
  r.within_bound = r.bad_count <= r.z;
  return r;
}

// ---------------------------------------------------------------------------
// Field structure of the powers of T

PowerFieldReport verify_power_field(const FieldMatrix &t) {
  if (!t.is_square())
    throw PreconditionViolation("matrix must be square");
  const unsigned q = t.modulus();
  const std::uint64_t field_size = checked_pow(q, static_cast<unsigned>(t.rows()));
  if (field_size > (std::uint64_t{1} << 12))
    throw EnumerationTooLarge("power-field check limited to q^n <= 2^12");

  // Element 0 is O, element e + 1 is T^e.
  std::vector<FieldMatrix> elems;
  elems.push_back(FieldMatrix::zero(t.rows(), t.cols(), q));
  FieldMatrix p = FieldMatrix::identity(t.rows(), q);
  for (std::uint64_t e = 0; e + 1 < field_size; ++e) {
    elems.push_back(p);
    p = p * t;
  }
  std::map<std::vector<Symbol>, std::uint64_t> lookup;
  for (std::uint64_t i = 0; i < elems.size(); ++i) {
    auto d = elems[i].data();
    lookup.emplace(std::vector<Symbol>(d.begin(), d.end()), i);
  }

  PowerFieldReport r;
  r.size = lookup.size();
  r.closed_under_addition = r.size == field_size;
  r.closed_under_multiplication = r.closed_under_addition;
  auto member = [&](const FieldMatrix &m) {
    auto d = m.data();
    return lookup.count(std::vector<Symbol>(d.begin(), d.end())) > 0;
  };
  for (std::uint64_t i = 0; i < elems.size(); ++i) {
    for (std::uint64_t j = i; j < elems.size(); ++j) {
      if (!member(elems[i] + elems[j])) {
        r.closed_under_addition = false;
        if (!r.witness)
          r.witness = {i, j};
      }
      if (!member(elems[i] * elems[j]))
        r.closed_under_multiplication = false;
    }
  }
  return r;
}

} // namespace lincodes
