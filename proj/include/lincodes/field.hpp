/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

/// Prime-field arithmetic and dense linear algebra over F_q.
///
/// Elements are stored as small unsigned residues sharing one modulus per
/// object. Every value type here is immutable once built; mutation is only
/// offered through explicit setters used while constructing a matrix.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lincodes {

using Symbol = std::uint8_t;

/// Largest supported modulus; residues must fit in a Symbol.
inline constexpr unsigned kMaxModulus = 251;

bool is_prime(unsigned q);

/// Throws PreconditionViolation unless q is a prime in [2, kMaxModulus].
void require_prime_modulus(unsigned q);

/// q^e as an exact 64-bit integer. Throws EnumerationTooLarge on overflow.
std::uint64_t checked_pow(std::uint64_t q, unsigned e);

namespace detail {
inline unsigned add_mod(unsigned a, unsigned b, unsigned q) {
  unsigned s = a + b;
  return s >= q ? s - q : s;
}
inline unsigned sub_mod(unsigned a, unsigned b, unsigned q) {
  return a >= b ? a - b : a + q - b;
}
inline unsigned mul_mod(unsigned a, unsigned b, unsigned q) {
  return (a * b) % q;
}
unsigned inv_mod(unsigned a, unsigned q);
} // namespace detail

class FieldElement {
public:
  /// Reduces `value` modulo q.
  FieldElement(unsigned value, unsigned q);

  unsigned value() const { return value_; }
  unsigned modulus() const { return q_; }

  FieldElement operator+(FieldElement o) const;
  FieldElement operator-(FieldElement o) const;
  FieldElement operator*(FieldElement o) const;
  FieldElement operator/(FieldElement o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  bool operator==(const FieldElement &) const = default;

private:
  FieldElement(unsigned value, unsigned q, std::nullptr_t)
      : value_(value), q_(q) {}
  void require_same(FieldElement o) const;

  unsigned value_;
  unsigned q_;
};

/// A word of F_q^n, n >= 1.
class Word {
public:
  Word(std::vector<Symbol> symbols, unsigned q);
  Word(std::initializer_list<unsigned> symbols, unsigned q);

  static Word zero(std::size_t n, unsigned q);

  /// Inverse of index(): the base-q digits of `index`, most significant first.
  static Word from_index(std::uint64_t index, std::size_t n, unsigned q);

  /// Parses a digit string such as "0110" (only for q <= 10).
  static Word parse(std::string_view digits, unsigned q);

  std::size_t size() const { return symbols_.size(); }
  unsigned modulus() const { return q_; }
  std::span<const Symbol> symbols() const { return symbols_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  FieldElement element(std::size_t i) const { return {symbols_[i], q_}; }

  /// Position of the word in lexicographic order of F_q^n.
  std::uint64_t index() const;
  bool is_zero() const;

  Word operator+(const Word &o) const;
  Word operator-(const Word &o) const;
  Word scaled(unsigned s) const;

  /// Dot product x . y = x y^t.
  FieldElement dot(const Word &o) const;

  bool operator==(const Word &) const = default;
  std::strong_ordering operator<=>(const Word &o) const;

  std::string to_string() const;

private:
  void require_compatible(const Word &o) const;

  std::vector<Symbol> symbols_;
  unsigned q_;
};

/// Dense row-major matrix over F_q. Zero-row matrices represent empty bases.
class FieldMatrix {
public:
  FieldMatrix(std::size_t rows, std::size_t cols, unsigned q);
  FieldMatrix(std::initializer_list<std::initializer_list<unsigned>> rows,
              unsigned q);

  static FieldMatrix identity(std::size_t n, unsigned q);
  static FieldMatrix zero(std::size_t rows, std::size_t cols, unsigned q);
  /// Stacks words as rows. All words must share length and modulus.
  static FieldMatrix from_rows(std::span<const Word> rows, std::size_t cols,
                               unsigned q);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned modulus() const { return q_; }

  Symbol at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  FieldElement element(std::size_t r, std::size_t c) const {
    return {at(r, c), q_};
  }
  void set(std::size_t r, std::size_t c, unsigned value);

  std::span<const Symbol> row_span(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  Word row(std::size_t r) const;
  std::span<const Symbol> data() const { return entries_; }

  FieldMatrix transpose() const;
  FieldMatrix operator+(const FieldMatrix &o) const;
  FieldMatrix operator-(const FieldMatrix &o) const;
  FieldMatrix operator*(const FieldMatrix &o) const;
  FieldMatrix scaled(unsigned s) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_identity() const;
  bool is_zero() const;
  std::size_t rank() const;

  bool operator==(const FieldMatrix &) const = default;

  /// Text form: header "q=<q> rows=<r> cols=<c>", then one line per row with
  /// entries separated by single spaces. Every line ends in '\n'.
  std::string to_text() const;
  static FieldMatrix parse(std::string_view text);

private:
  std::size_t rows_;
  std::size_t cols_;
  unsigned q_;
  std::vector<Symbol> entries_;
};

/// x M for a row vector x of length M.rows().
Word operator*(const Word &x, const FieldMatrix &m);

FieldMatrix mat_mul(const FieldMatrix &a, const FieldMatrix &b);

/// m^e by square-and-multiply; negative e goes through the inverse.
FieldMatrix mat_pow(const FieldMatrix &m, long long e);

/// Gauss-Jordan inverse. Throws SingularMatrix.
FieldMatrix mat_inverse(const FieldMatrix &m);

FieldMatrix rows_first(const FieldMatrix &m, std::size_t count);
FieldMatrix rows_last(const FieldMatrix &m, std::size_t count);

struct Echelon {
  FieldMatrix reduced;             ///< RREF, zero rows dropped
  std::vector<std::size_t> pivots; ///< pivot column of each row
};

Echelon reduced_row_echelon(const FieldMatrix &m);

/// Canonical (RREF) basis of the row space.
FieldMatrix row_space_basis(const FieldMatrix &m);

/// Basis of { y | m y^t = 0 }, one row per free column of the RREF.
FieldMatrix null_space_basis(const FieldMatrix &m);

} // namespace lincodes
