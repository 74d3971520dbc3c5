/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "lincodes/code.hpp"

#include "lincodes/errors.hpp"
#include "lincodes/kernels.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace lincodes {

// ---------------------------------------------------------------------------
// LinearCode

LinearCode LinearCode::span(const FieldMatrix &generators) {
  if (generators.cols() == 0)
    throw PreconditionViolation("codes need block length n >= 1");
  auto ech = reduced_row_echelon(generators);
  return LinearCode(std::move(ech.reduced), std::move(ech.pivots));
}

LinearCode LinearCode::zero(std::size_t n, unsigned q) {
  return span(FieldMatrix(0, n, q));
}

LinearCode LinearCode::full(std::size_t n, unsigned q) {
  return span(FieldMatrix::identity(n, q));
}

std::string LinearCode::to_text() const {
  std::ostringstream out;
  out << "code n=" << n() << " k=" << k() << " q=" << q() << '\n'
      << generator_.to_text();
  return out.str();
}

LinearCode LinearCode::parse(std::string_view text) {
  auto nl = text.find('\n');
  if (nl == std::string_view::npos)
    throw ParseError("code text needs a header line");
  std::string header(text.substr(0, nl));
  std::size_t n = 0, k = 0;
  unsigned q = 0;
  if (std::sscanf(header.c_str(), "code n=%zu k=%zu q=%u", &n, &k, &q) != 3)
    throw ParseError("code header must be 'code n=<n> k=<k> q=<q>'");
  auto m = FieldMatrix::parse(text.substr(nl + 1));
  if (m.cols() != n || m.modulus() != q)
    throw ParseError("code header disagrees with its generator matrix");
  auto c = span(m);
  if (c.k() != k)
    throw ParseError("generator rank " + std::to_string(c.k()) +
                     " differs from declared k=" + std::to_string(k));
  return c;
}

bool contains(const LinearCode &c, const Word &x) {
  if (x.modulus() != c.q())
    throw ModulusMismatch("word and code over different moduli");
  if (x.size() != c.n())
    throw DimensionMismatch("word length differs from block length");
  const unsigned q = c.q();
  std::vector<Symbol> r(x.symbols().begin(), x.symbols().end());
  const auto &g = c.generator();
  for (std::size_t i = 0; i < c.k(); ++i) {
    const unsigned f = r[c.pivots()[i]];
    if (!f)
      continue;
    auto row = g.row_span(i);
    for (std::size_t t = 0; t < c.n(); ++t)
      r[t] = static_cast<Symbol>(detail::sub_mod(r[t], f * row[t] % q, q));
  }
  return std::all_of(r.begin(), r.end(), [](Symbol s) { return s == 0; });
}

FieldMatrix parity_check(const LinearCode &c) {
  return null_space_basis(c.generator());
}

LinearCode dual(const LinearCode &c) { return LinearCode::span(parity_check(c)); }

std::vector<LinearCode> enumerate_codes(std::size_t n, std::size_t k,
                                        unsigned q) {
  require_prime_modulus(q);
  if (k > n)
    throw PreconditionViolation("enumerate_codes: k > n");
  std::vector<LinearCode> out;
  std::vector<std::size_t> pivots(k);
  std::function<void(std::size_t, std::size_t)> choose =
      [&](std::size_t r, std::size_t first) {
        if (r == k) {
          // Free positions: right of the row's pivot and not a pivot column.
          std::vector<std::pair<std::size_t, std::size_t>> free;
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t c = pivots[i] + 1; c < n; ++c)
              if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                free.emplace_back(i, c);
          const std::uint64_t fills =
              checked_pow(q, static_cast<unsigned>(free.size()));
          if (fills > kSpectrumCap)
            throw EnumerationTooLarge("too many codes to enumerate");
          for (std::uint64_t f = 0; f < fills; ++f) {
            FieldMatrix g(k, n, q);
            for (std::size_t i = 0; i < k; ++i)
              g.set(i, pivots[i], 1);
            std::uint64_t digits = f;
            for (std::size_t j = free.size(); j-- > 0;) {
              g.set(free[j].first, free[j].second,
                    static_cast<unsigned>(digits % q));
              digits /= q;
            }
            out.push_back(LinearCode::span(g));
          }
          return;
        }
        for (std::size_t c = first; c + (k - r) <= n; ++c) {
          pivots[r] = c;
          choose(r + 1, c + 1);
        }
      };
  choose(0, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Spectrum

Spectrum::Spectrum(unsigned n, unsigned q, std::vector<std::uint64_t> counts)
    : n_(n), q_(q), types_(enumerate_types(n, q)), counts_(std::move(counts)) {
  if (counts_.size() != types_.size())
    throw DimensionMismatch("spectrum needs one count per type");
}

std::uint64_t Spectrum::count(const TypeVector &t) const {
  if (t.n() != n_ || t.q() != q_)
    throw DimensionMismatch("type does not belong to this spectrum");
  return counts_[TypeIndexer(n_, q_).index_of(t)];
}

std::uint64_t Spectrum::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

Spectrum Spectrum::without_zero_word() const {
  auto c = counts_;
  // The zero type is first in enumeration order.
  if (c[0] == 0)
    throw PreconditionViolation("spectrum does not contain the zero word");
  --c[0];
  return Spectrum(n_, q_, std::move(c));
}

std::string Spectrum::to_csv() const {
  std::string out = "type,count\n";
  for (std::size_t i = 0; i < types_.size(); ++i)
    out += '"' + types_[i].to_string() + "\"," + std::to_string(counts_[i]) +
           '\n';
  return out;
}

Spectrum spectrum(const LinearCode &c, std::uint64_t cap) {
  const std::uint64_t size = checked_pow(c.q(), static_cast<unsigned>(c.k()));
  if (size > cap)
    throw EnumerationTooLarge("enumeration too large: q^k = " +
                              std::to_string(size));
  const auto n = static_cast<unsigned>(c.n());
  TypeIndexer idx(n, c.q());
  return Spectrum(n, c.q(), kernels::omp::spectrum_counts(c.generator(), idx));
}

// ---------------------------------------------------------------------------
// A-goodness

GoodnessFactor GoodnessFactor::exact(Rational a) {
  if (a <= 0)
    throw PreconditionViolation("goodness factor must be positive");
  double approx = static_cast<double>(a);
  return GoodnessFactor(std::move(a), approx);
}

GoodnessFactor GoodnessFactor::real(double a) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw PreconditionViolation("goodness factor must be positive");
  return GoodnessFactor(std::nullopt, a);
}

GoodnessFactor GoodnessFactor::q_power(unsigned q, double exponent) {
  const double rounded = std::round(exponent);
  if (std::abs(exponent - rounded) < 1e-12 && std::abs(rounded) < 4096) {
    const auto e = static_cast<long>(rounded);
    BigInt p = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(std::abs(e)));
    return exact(e >= 0 ? Rational(p) : Rational(BigInt(1), p));
  }
  return real(std::pow(static_cast<double>(q), exponent));
}

AGoodResult is_a_good(const Spectrum &s, std::size_t k,
                      const GoodnessFactor &a) {
  const unsigned n = s.n(), q = s.q();
  if (k > n)
    throw PreconditionViolation("dimension exceeds block length");
  const BigInt types_minus_one = BigInt(type_count(n, q)) - 1;
  const BigInt q_codim = boost::multiprecision::pow(BigInt(q), n - k);
  const double scale = std::pow(static_cast<double>(q), -double(n - k));

  for (std::size_t i = 0; i < s.types().size(); ++i) {
    const TypeVector &t = s.types()[i];
    if (t.is_zero_type())
      continue;
    const std::uint64_t m = s.counts()[i];
    if (m == 0)
      continue;
    const BigInt size = type_class_size(t);
    bool ok;
    if (a.rational()) {
      const auto &r = *a.rational();
      ok = BigInt(m) * q_codim * denominator(r) <=
           numerator(r) * types_minus_one * size;
    } else {
      const double lhs = static_cast<double>(m) * static_cast<double>(q_codim);
      const double rhs = a.approx() * static_cast<double>(types_minus_one) *
                         static_cast<double>(size);
      ok = lhs <= rhs * (1.0 + 1e-9);
    }
    if (!ok) {
      const double bound = a.approx() * static_cast<double>(types_minus_one) *
                           scale * static_cast<double>(size);
      return {false, AGoodWitness{t, m, bound}};
    }
  }
  return {};
}

AGoodResult is_a_good(const LinearCode &c, const GoodnessFactor &a) {
  return is_a_good(spectrum(c), c.k(), a);
}

// ---------------------------------------------------------------------------
// Compatible pairs

namespace {
bool rows_inside(const FieldMatrix &basis, const LinearCode &c) {
  for (std::size_t r = 0; r < basis.rows(); ++r)
    if (!contains(c, basis.row(r)))
      return false;
  return true;
}
} // namespace

bool is_compatible_pair(const LinearCode &c1, const LinearCode &c2) {
  if (c1.n() != c2.n())
    throw DimensionMismatch("pair of codes with different block lengths");
  if (c1.q() != c2.q())
    throw ModulusMismatch("pair of codes over different moduli");
  const bool forward = rows_inside(parity_check(c2), c1);
  const bool backward = rows_inside(parity_check(c1), c2);
  if (forward != backward)
    throw std::logic_error("C2^perp in C1 and C1^perp in C2 disagree");
  return forward;
}

} // namespace lincodes
