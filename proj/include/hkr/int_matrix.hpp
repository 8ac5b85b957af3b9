#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hkr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix scalar(std::size_t n, const Integer& c);
  static IntMatrix diagonal(const std::vector<Integer>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> column(std::size_t j) const;
  void set_column(std::size_t j, const std::vector<Integer>& v);

  IntMatrix transpose() const;
  /// Entries reduced into [0, q).
  IntMatrix mod(const Integer& q) const;

  const std::vector<Integer>& data() const { return data_; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& c, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Lexicographic order on (rows, cols, row-major entries).
bool lex_less(const IntMatrix& a, const IntMatrix& b);

/// Fraction-free Gaussian elimination (Bareiss).
Integer determinant(const IntMatrix& m);
IntMatrix adjugate(const IntMatrix& m);

/// p-adic valuation of a nonzero integer.
unsigned valuation(const Integer& x, const Integer& p);
Integer ipow(const Integer& base, unsigned e);
/// Floor division and the matching nonnegative remainder for positive d.
Integer floor_div(const Integer& a, const Integer& d);
Integer mod_floor(const Integer& a, const Integer& d);

}  // namespace hkr
