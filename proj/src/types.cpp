/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "lincodes/types.hpp"

#include "lincodes/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace lincodes {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step.
    r = r / i * (n - k + i) + r % i * (n - k + i) / i;
  }
  return r;
}

// ---------------------------------------------------------------------------
// TypeVector

TypeVector::TypeVector(std::vector<std::uint32_t> counts)
    : counts_(std::move(counts)) {
  if (counts_.empty())
    throw PreconditionViolation("type over an empty alphabet");
  n_ = std::accumulate(counts_.begin(), counts_.end(), std::uint32_t{0});
  if (n_ == 0)
    throw PreconditionViolation("type of a word of length 0");
}

TypeVector::TypeVector(std::initializer_list<std::uint32_t> counts)
    : TypeVector(std::vector<std::uint32_t>(counts)) {}

std::string TypeVector::to_string() const {
  std::string out = "(";
  for (std::size_t u = 0; u < counts_.size(); ++u) {
    if (u)
      out += ',';
    out += std::to_string(counts_[u]);
  }
  out += ')';
  return out;
}

TypeVector TypeVector::parse(std::string_view text) {
  if (text.size() < 3 || text.front() != '(' || text.back() != ')')
    throw ParseError("type must look like (c0,c1,...)");
  text = text.substr(1, text.size() - 2);
  std::vector<std::uint32_t> counts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos)
      comma = text.size();
    auto tok = text.substr(pos, comma - pos);
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size() || tok.empty())
      throw ParseError("bad type count '" + std::string(tok) + "'");
    counts.push_back(v);
    pos = comma + 1;
  }
  return TypeVector(std::move(counts));
}

std::strong_ordering TypeVector::operator<=>(const TypeVector &o) const {
  return std::lexicographical_compare_three_way(
      counts_.begin(), counts_.end(), o.counts_.begin(), o.counts_.end());
}

TypeVector type_of(std::span<const Symbol> x, unsigned q) {
  std::vector<std::uint32_t> counts(q, 0);
  for (Symbol s : x)
    ++counts[s];
  return TypeVector(std::move(counts));
}

TypeVector type_of(const Word &x) { return type_of(x.symbols(), x.modulus()); }

std::vector<TypeVector> enumerate_types(unsigned n, unsigned q) {
  require_prime_modulus(q);
  if (n == 0)
    throw PreconditionViolation("enumerate_types needs n >= 1");
  std::vector<TypeVector> out;
  out.reserve(type_count(n, q));
  std::vector<std::uint32_t> counts(q, 0);
  std::function<void(unsigned, unsigned)> fill = [&](unsigned pos,
                                                     unsigned remaining) {
    if (pos + 1 == q) {
      counts[pos] = remaining;
      out.emplace_back(counts);
      return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
      counts[pos] = v;
      fill(pos + 1, remaining - v);
    }
  };
  fill(0, n);
  return out;
}

std::uint64_t type_count(unsigned n, unsigned q) {
  return binomial(n + q - 1, q - 1);
}

BigInt type_class_size(const TypeVector &t) {
  // Product of binomials avoids the full factorial.
  BigInt result = 1;
  unsigned placed = 0;
  for (auto c : t.counts()) {
    placed += c;
    BigInt b = 1;
    for (unsigned i = 1; i <= c; ++i)
      b = b * (placed - c + i) / i;
    result *= b;
  }
  return result;
}

// ---------------------------------------------------------------------------
// TypeIndexer

TypeIndexer::TypeIndexer(unsigned n, unsigned q)
    : n_(n), q_(q), size_(type_count(n, q)),
      compositions_(n + 1, std::vector<std::uint64_t>(q + 1, 0)) {
  for (unsigned s = 0; s <= n; ++s)
    for (unsigned m = 1; m <= q; ++m)
      compositions_[s][m] = binomial(s + m - 1, m - 1);
}

std::size_t TypeIndexer::index_of(std::span<const std::uint32_t> counts) const {
  std::size_t rank = 0;
  unsigned remaining = n_;
  for (unsigned j = 0; j + 1 < q_; ++j) {
    const unsigned parts_after = q_ - j - 1;
    // Every larger value at position j precedes this type.
    for (unsigned v = remaining; v > counts[j]; --v)
      rank += compositions_[remaining - v][parts_after];
    remaining -= counts[j];
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Distribution / Divergence

Distribution::Distribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty())
    throw PreconditionViolation("distribution over an empty alphabet");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p))
      throw PreconditionViolation("distribution entries must be >= 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw PreconditionViolation("distribution does not sum to 1");
}

Distribution Distribution::uniform(unsigned q) {
  return Distribution(std::vector<double>(q, 1.0 / q));
}

Distribution Distribution::point_mass(unsigned q, unsigned u) {
  std::vector<double> p(q, 0.0);
  p.at(u) = 1.0;
  return Distribution(std::move(p));
}

Distribution Distribution::from_type(const TypeVector &t) {
  std::vector<double> p(t.q());
  for (unsigned u = 0; u < t.q(); ++u)
    p[u] = static_cast<double>(t[u]) / t.n();
  return Distribution(std::move(p));
}

std::string Distribution::to_string(int digits) const {
  std::ostringstream out;
  out.precision(digits);
  out << '(';
  for (std::size_t u = 0; u < probs_.size(); ++u) {
    if (u)
      out << ',';
    out << probs_[u];
  }
  out << ')';
  return out.str();
}

double Divergence::value() const {
  if (infinite_)
    throw PreconditionViolation("value() of an infinite divergence");
  return value_;
}

std::partial_ordering Divergence::operator<=>(const Divergence &o) const {
  if (infinite_ || o.infinite_)
    return infinite_ == o.infinite_ ? std::partial_ordering::equivalent
           : infinite_             ? std::partial_ordering::greater
                                   : std::partial_ordering::less;
  return value_ <=> o.value_;
}

// ---------------------------------------------------------------------------
// Entropies

double entropy(const Distribution &p) {
  const double logq = std::log(static_cast<double>(p.size()));
  if (p.size() == 1)
    return 0.0;
  double h = 0.0;
  for (double x : p.probs())
    if (x > 0.0)
      h -= x * std::log(x);
  return h / logq;
}

double entropy(const TypeVector &t) {
  if (t.q() == 1)
    return 0.0;
  std::vector<std::uint32_t> sorted(t.counts().begin(), t.counts().end());
  std::sort(sorted.begin(), sorted.end());
  const double n = t.n();
  double h = 0.0;
  for (auto c : sorted)
    if (c)
      h -= (c / n) * std::log(c / n);
  return h / std::log(static_cast<double>(t.q()));
}

Divergence relative_entropy(const Distribution &qd, const Distribution &pd) {
  if (qd.size() != pd.size())
    throw DimensionMismatch("distributions over different alphabets");
  if (qd.size() == 1)
    return Divergence::finite(0.0);
  double d = 0.0;
  for (unsigned u = 0; u < qd.size(); ++u) {
    if (qd[u] == 0.0)
      continue;
    if (pd[u] == 0.0)
      return Divergence::infinite();
    d += qd[u] * std::log(qd[u] / pd[u]);
  }
  // Rounding can leave a tiny negative value at Q = P.
  return Divergence::finite(std::max(0.0, d / std::log(double(qd.size()))));
}

Divergence relative_entropy(const TypeVector &t, const Distribution &pd) {
  return relative_entropy(Distribution::from_type(t), pd);
}

double type_class_prob(const Distribution &pd, const TypeVector &t) {
  if (pd.size() != t.q())
    throw DimensionMismatch("distribution and type over different alphabets");
  double prob = static_cast<double>(type_class_size(t));
  for (unsigned u = 0; u < t.q(); ++u)
    prob *= std::pow(pd[u], static_cast<double>(t[u]));
  return prob;
}

Rational type_class_prob(std::span<const Rational> pd, const TypeVector &t) {
  if (pd.size() != t.q())
    throw DimensionMismatch("distribution and type over different alphabets");
  Rational prob = Rational(type_class_size(t));
  for (unsigned u = 0; u < t.q(); ++u)
    for (unsigned i = 0; i < t[u]; ++i)
      prob *= pd[u];
  return prob;
}

} // namespace lincodes
