/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "lincodes/field.hpp"

#include "lincodes/errors.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace lincodes {

bool is_prime(unsigned q) {
  if (q < 2)
    return false;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0)
      return false;
  return true;
}

void require_prime_modulus(unsigned q) {
  if (q > kMaxModulus || !is_prime(q))
    throw PreconditionViolation("modulus " + std::to_string(q) +
                                " is not a supported prime");
}

std::uint64_t checked_pow(std::uint64_t q, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / q)
      throw EnumerationTooLarge("integer power overflows 64 bits");
    r *= q;
  }
  return r;
}

namespace detail {
unsigned inv_mod(unsigned a, unsigned q) {
  if (a % q == 0)
    throw SingularMatrix("zero has no multiplicative inverse");
  // Fermat: a^(q-2).
  unsigned result = 1, base = a % q, e = q - 2;
  while (e) {
    if (e & 1u)
      result = mul_mod(result, base, q);
    base = mul_mod(base, base, q);
    e >>= 1;
  }
  return result;
}
} // namespace detail

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(unsigned value, unsigned q) : q_(q) {
  require_prime_modulus(q);
  value_ = value % q;
}

void FieldElement::require_same(FieldElement o) const {
  if (o.q_ != q_)
    throw ModulusMismatch("field elements over different moduli");
}

FieldElement FieldElement::operator+(FieldElement o) const {
  require_same(o);
  return {detail::add_mod(value_, o.value_, q_), q_, nullptr};
}

FieldElement FieldElement::operator-(FieldElement o) const {
  require_same(o);
  return {detail::sub_mod(value_, o.value_, q_), q_, nullptr};
}

FieldElement FieldElement::operator*(FieldElement o) const {
  require_same(o);
  return {detail::mul_mod(value_, o.value_, q_), q_, nullptr};
}

FieldElement FieldElement::operator/(FieldElement o) const {
  return *this * o.inverse();
}

FieldElement FieldElement::operator-() const {
  return {detail::sub_mod(0, value_, q_), q_, nullptr};
}

FieldElement FieldElement::inverse() const {
  return {detail::inv_mod(value_, q_), q_, nullptr};
}

// ---------------------------------------------------------------------------
// Word

Word::Word(std::vector<Symbol> symbols, unsigned q)
    : symbols_(std::move(symbols)), q_(q) {
  require_prime_modulus(q);
  if (symbols_.empty())
    throw PreconditionViolation("words must have length >= 1");
  for (Symbol s : symbols_)
    if (s >= q)
      throw OutOfRange("symbol out of range for modulus");
}

Word::Word(std::initializer_list<unsigned> symbols, unsigned q)
    : Word(std::vector<Symbol>(symbols.begin(), symbols.end()), q) {}

Word Word::zero(std::size_t n, unsigned q) {
  return Word(std::vector<Symbol>(n, 0), q);
}

Word Word::from_index(std::uint64_t index, std::size_t n, unsigned q) {
  std::vector<Symbol> s(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    s[i] = static_cast<Symbol>(index % q);
    index /= q;
  }
  if (index != 0)
    throw OutOfRange("word index exceeds q^n");
  return Word(std::move(s), q);
}

Word Word::parse(std::string_view digits, unsigned q) {
  std::vector<Symbol> s;
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw ParseError("word digits must be decimal");
    s.push_back(static_cast<Symbol>(c - '0'));
  }
  return Word(std::move(s), q);
}

std::uint64_t Word::index() const {
  std::uint64_t idx = 0;
  for (Symbol s : symbols_)
    idx = idx * q_ + s;
  return idx;
}

bool Word::is_zero() const {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [](Symbol s) { return s == 0; });
}

void Word::require_compatible(const Word &o) const {
  if (o.q_ != q_)
    throw ModulusMismatch("words over different moduli");
  if (o.size() != size())
    throw DimensionMismatch("words of different length");
}

Word Word::operator+(const Word &o) const {
  require_compatible(o);
  std::vector<Symbol> s(size());
  for (std::size_t i = 0; i < size(); ++i)
    s[i] = static_cast<Symbol>(detail::add_mod(symbols_[i], o.symbols_[i], q_));
  return Word(std::move(s), q_);
}

Word Word::operator-(const Word &o) const {
  require_compatible(o);
  std::vector<Symbol> s(size());
  for (std::size_t i = 0; i < size(); ++i)
    s[i] = static_cast<Symbol>(detail::sub_mod(symbols_[i], o.symbols_[i], q_));
  return Word(std::move(s), q_);
}

Word Word::scaled(unsigned c) const {
  std::vector<Symbol> s(size());
  for (std::size_t i = 0; i < size(); ++i)
    s[i] = static_cast<Symbol>(detail::mul_mod(symbols_[i], c % q_, q_));
  return Word(std::move(s), q_);
}

FieldElement Word::dot(const Word &o) const {
  require_compatible(o);
  unsigned acc = 0;
  for (std::size_t i = 0; i < size(); ++i)
    acc = detail::add_mod(acc, detail::mul_mod(symbols_[i], o.symbols_[i], q_),
                          q_);
  return {acc, q_};
}

std::strong_ordering Word::operator<=>(const Word &o) const {
  if (auto c = q_ <=> o.q_; c != 0)
    return c;
  return std::lexicographical_compare_three_way(
      symbols_.begin(), symbols_.end(), o.symbols_.begin(), o.symbols_.end());
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (q_ > 10 && i > 0)
      out += ' ';
    out += std::to_string(symbols_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// FieldMatrix

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, unsigned q)
    : rows_(rows), cols_(cols), q_(q), entries_(rows * cols, 0) {
  require_prime_modulus(q);
}

FieldMatrix::FieldMatrix(
    std::initializer_list<std::initializer_list<unsigned>> rows, unsigned q)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0),
      q_(q) {
  require_prime_modulus(q);
  entries_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw DimensionMismatch("ragged matrix literal");
    for (unsigned v : r)
      entries_.push_back(static_cast<Symbol>(v % q));
  }
}

FieldMatrix FieldMatrix::identity(std::size_t n, unsigned q) {
  FieldMatrix m(n, n, q);
  for (std::size_t i = 0; i < n; ++i)
    m.entries_[i * n + i] = 1;
  return m;
}

FieldMatrix FieldMatrix::zero(std::size_t rows, std::size_t cols, unsigned q) {
  return FieldMatrix(rows, cols, q);
}

FieldMatrix FieldMatrix::from_rows(std::span<const Word> rows,
                                   std::size_t cols, unsigned q) {
  FieldMatrix m(rows.size(), cols, q);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].modulus() != q)
      throw ModulusMismatch("row over a different modulus");
    if (rows[r].size() != cols)
      throw DimensionMismatch("row of wrong length");
    std::copy(rows[r].symbols().begin(), rows[r].symbols().end(),
              m.entries_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

void FieldMatrix::set(std::size_t r, std::size_t c, unsigned value) {
  if (r >= rows_ || c >= cols_)
    throw OutOfRange("matrix index out of range");
  entries_[r * cols_ + c] = static_cast<Symbol>(value % q_);
}

Word FieldMatrix::row(std::size_t r) const {
  auto s = row_span(r);
  return Word(std::vector<Symbol>(s.begin(), s.end()), q_);
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(cols_, rows_, q_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t.entries_[c * rows_ + r] = entries_[r * cols_ + c];
  return t;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix &o) const {
  if (o.q_ != q_)
    throw ModulusMismatch("matrix sum over different moduli");
  if (o.rows_ != rows_ || o.cols_ != cols_)
    throw DimensionMismatch("matrix sum of different shapes");
  FieldMatrix s(rows_, cols_, q_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    s.entries_[i] =
        static_cast<Symbol>(detail::add_mod(entries_[i], o.entries_[i], q_));
  return s;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix &o) const {
  return *this + o.scaled(q_ - 1);
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix &o) const {
  return mat_mul(*this, o);
}

FieldMatrix FieldMatrix::scaled(unsigned s) const {
  FieldMatrix m(rows_, cols_, q_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    m.entries_[i] = static_cast<Symbol>(detail::mul_mod(entries_[i], s % q_, q_));
  return m;
}

bool FieldMatrix::is_identity() const {
  if (!is_square())
    return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1 : 0))
        return false;
  return true;
}

bool FieldMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Symbol s) { return s == 0; });
}

std::size_t FieldMatrix::rank() const {
  return reduced_row_echelon(*this).pivots.size();
}

std::string FieldMatrix::to_text() const {
  std::ostringstream out;
  out << "q=" << q_ << " rows=" << rows_ << " cols=" << cols_ << '\n';
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c)
        out << ' ';
      out << static_cast<unsigned>(at(r, c));
    }
    out << '\n';
  }
  return out.str();
}

namespace {

unsigned parse_unsigned(std::string_view tok, std::string_view what) {
  unsigned v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size() || tok.empty())
    throw ParseError("bad " + std::string(what) + ": '" + std::string(tok) +
                     "'");
  return v;
}

unsigned parse_field(std::string_view tok, std::string_view key) {
  if (tok.substr(0, key.size()) != key)
    throw ParseError("expected '" + std::string(key) + "'");
  return parse_unsigned(tok.substr(key.size()), key);
}

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    auto next = line.find(' ', pos);
    if (next == std::string_view::npos)
      next = line.size();
    out.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

} // namespace

FieldMatrix FieldMatrix::parse(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos)
      nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.empty())
    throw ParseError("empty matrix text");
  auto header = split_spaces(lines[0]);
  if (header.size() != 3)
    throw ParseError("matrix header must be 'q=<q> rows=<r> cols=<c>'");
  unsigned q = parse_field(header[0], "q=");
  std::size_t rows = parse_field(header[1], "rows=");
  std::size_t cols = parse_field(header[2], "cols=");
  if (lines.size() != rows + 1)
    throw ParseError("matrix text has " + std::to_string(lines.size() - 1) +
                     " rows, header says " + std::to_string(rows));
  FieldMatrix m(rows, cols, q);
  for (std::size_t r = 0; r < rows; ++r) {
    auto toks = split_spaces(lines[r + 1]);
    if (toks.size() != cols)
      throw ParseError("row " + std::to_string(r) + " has wrong entry count");
    for (std::size_t c = 0; c < cols; ++c) {
      unsigned v = parse_unsigned(toks[c], "entry");
      if (v >= q)
        throw ParseError("entry out of range for modulus");
      m.entries_[r * cols + c] = static_cast<Symbol>(v);
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Free operations

Word operator*(const Word &x, const FieldMatrix &m) {
  if (x.modulus() != m.modulus())
    throw ModulusMismatch("vector-matrix product over different moduli");
  if (x.size() != m.rows())
    throw DimensionMismatch("vector length must equal matrix rows");
  const unsigned q = m.modulus();
  std::vector<unsigned> acc(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const unsigned xr = x[r];
    if (!xr)
      continue;
    auto row = m.row_span(r);
    for (std::size_t c = 0; c < m.cols(); ++c)
      acc[c] = (acc[c] + xr * row[c]) % q;
  }
  return Word(std::vector<Symbol>(acc.begin(), acc.end()), q);
}

FieldMatrix mat_mul(const FieldMatrix &a, const FieldMatrix &b) {
  if (a.modulus() != b.modulus())
    throw ModulusMismatch("matrix product over different moduli");
  if (a.cols() != b.rows())
    throw DimensionMismatch("matrix product: a.cols != b.rows");
  const unsigned q = a.modulus();
  FieldMatrix c(a.rows(), b.cols(), q);
  std::vector<unsigned> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0u);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const unsigned aik = a.at(i, k);
      if (!aik)
        continue;
      auto brow = b.row_span(k);
      for (std::size_t j = 0; j < b.cols(); ++j)
        acc[j] = (acc[j] + aik * brow[j]) % q;
    }
    for (std::size_t j = 0; j < b.cols(); ++j)
      c.set(i, j, acc[j]);
  }
  return c;
}

FieldMatrix mat_pow(const FieldMatrix &m, long long e) {
  if (!m.is_square())
    throw DimensionMismatch("matrix power of a non-square matrix");
  FieldMatrix base = e < 0 ? mat_inverse(m) : m;
  unsigned long long k = e < 0 ? 0ull - static_cast<unsigned long long>(e)
                               : static_cast<unsigned long long>(e);
  FieldMatrix result = FieldMatrix::identity(m.rows(), m.modulus());
  while (k) {
    if (k & 1ull)
      result = result * base;
    k >>= 1;
    if (k)
      base = base * base;
  }
  return result;
}

FieldMatrix mat_inverse(const FieldMatrix &m) {
  if (!m.is_square())
    throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const unsigned q = m.modulus();
  // Gauss-Jordan on [m | I].
  FieldMatrix aug(n, 2 * n, q);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      aug.set(r, c, m.at(r, c));
    aug.set(r, n + r, 1);
  }
  auto ech = reduced_row_echelon(aug);
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1)
    throw SingularMatrix("matrix is singular");
  FieldMatrix inv(n, n, q);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      inv.set(r, c, ech.reduced.at(r, n + c));
  return inv;
}

FieldMatrix rows_first(const FieldMatrix &m, std::size_t count) {
  if (count > m.rows())
    throw OutOfRange("rows_first: count exceeds row count");
  FieldMatrix s(count, m.cols(), m.modulus());
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      s.set(r, c, m.at(r, c));
  return s;
}

FieldMatrix rows_last(const FieldMatrix &m, std::size_t count) {
  if (count > m.rows())
    throw OutOfRange("rows_last: count exceeds row count");
  const std::size_t offset = m.rows() - count;
  FieldMatrix s(count, m.cols(), m.modulus());
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      s.set(r, c, m.at(offset + r, c));
  return s;
}

Echelon reduced_row_echelon(const FieldMatrix &m) {
  const unsigned q = m.modulus();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<unsigned>> a(rows, std::vector<unsigned>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      a[r][c] = m.at(r, c);

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && a[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(a[p], a[lead]);
    const unsigned inv = detail::inv_mod(a[lead][c], q);
    for (auto &v : a[lead])
      v = detail::mul_mod(v, inv, q);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a[r][c] == 0)
        continue;
      const unsigned f = a[r][c];
      for (std::size_t j = 0; j < cols; ++j)
        a[r][j] = detail::sub_mod(a[r][j], detail::mul_mod(f, a[lead][j], q), q);
    }
    pivots.push_back(c);
    ++lead;
  }

  FieldMatrix reduced(pivots.size(), cols, q);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      reduced.set(r, c, a[r][c]);
  return {std::move(reduced), std::move(pivots)};
}

FieldMatrix row_space_basis(const FieldMatrix &m) {
  return reduced_row_echelon(m).reduced;
}

FieldMatrix null_space_basis(const FieldMatrix &m) {
  const unsigned q = m.modulus();
  auto [rref, pivots] = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c])
      free_cols.push_back(c);

  FieldMatrix basis(free_cols.size(), m.cols(), q);
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    const std::size_t f = free_cols[b];
    basis.set(b, f, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis.set(b, pivots[r], detail::sub_mod(0, rref.at(r, f), q));
  }
  return basis;
}

} // namespace lincodes
