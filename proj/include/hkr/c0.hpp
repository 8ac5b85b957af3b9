#pragma once

// Level-N model of C_0: rational-valued functions on M_n(Z/p^N).
//
// An isogeny with matrix A acts on the right by (c.A)(xi) = c(A xi), a ring
// map satisfying (c.A).B = c.(AB). A stabilizer element s acts by
// (c.s)(xi) = c(xi s); left and right multiplication commute, so the two
// actions commute.
//
// Points are enumerated row-major with entries in [0, p^N), the first entry
// most significant.

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "hkr/int_matrix.hpp"

namespace hkr {

class C0Space;
using C0SpacePtr = std::shared_ptr<const C0Space>;

class C0Space : public std::enable_shared_from_this<C0Space> {
 public:
  static C0SpacePtr make(std::uint64_t p, std::size_t n, unsigned level);

  C0Space(std::uint64_t p, std::size_t n, unsigned level);

  std::uint64_t p() const { return p_; }
  std::size_t n() const { return n_; }
  unsigned level() const { return level_; }
  std::uint64_t modulus() const { return q_; }
  std::size_t size() const { return size_; }

  /// Entries of the point with the given index, row-major.
  std::vector<std::uint64_t> point(std::size_t index) const;
  std::size_t index(const std::vector<std::uint64_t>& entries) const;
  IntMatrix point_matrix(std::size_t index) const;

  /// xi -> index(A xi) and xi -> index(xi S) as lookup tables.
  std::vector<std::uint32_t> left_action(const IntMatrix& a) const;
  std::vector<std::uint32_t> right_action(const IntMatrix& s) const;

  /// GL_n(Z/p^N) with entries in [0, p^N), in point order.
  const std::vector<IntMatrix>& general_linear() const;
  bool is_invertible(const IntMatrix& a) const;

  friend bool operator==(const C0Space& a, const C0Space& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.level_ == b.level_;
  }

 private:
  std::vector<std::uint64_t> reduced(const IntMatrix& a) const;

  std::uint64_t p_;
  std::size_t n_;
  unsigned level_;
  std::uint64_t q_;
  std::size_t size_;
  mutable std::once_flag gl_once_;
  mutable std::vector<IntMatrix> gl_;
};

class C0Element {
 public:
  C0Element() = default;
  explicit C0Element(C0SpacePtr space);  ///< zero
  C0Element(C0SpacePtr space, std::vector<Rational> table);
  static C0Element constant(C0SpacePtr space, const Rational& c);
  /// xi -> xi_{row,col} as an integer in [0, p^N).
  static C0Element coordinate(C0SpacePtr space, std::size_t row, std::size_t col);

  const C0SpacePtr& space() const { return space_; }
  const std::vector<Rational>& table() const { return table_; }
  const Rational& operator[](std::size_t i) const { return table_[i]; }
  bool is_zero() const;

  /// new[xi] = old[map[xi]]: the pullback along a point map (left_action / right_action tables).
  C0Element pullback(const std::vector<std::uint32_t>& map) const;
  C0Element act_isogeny(const IntMatrix& a) const { return pullback(space_->left_action(a)); }
  C0Element act_stabilizer(const IntMatrix& s) const { return pullback(space_->right_action(s)); }

  C0Element& operator+=(const C0Element& o);
  C0Element& operator-=(const C0Element& o);
  C0Element& operator*=(const C0Element& o);
  C0Element& operator*=(const Rational& c);
  friend C0Element operator+(C0Element a, const C0Element& b) { return a += b; }
  friend C0Element operator-(C0Element a, const C0Element& b) { return a -= b; }
  friend C0Element operator*(C0Element a, const C0Element& b) { return a *= b; }
  friend C0Element operator*(C0Element a, const Rational& c) { return a *= c; }

  friend bool operator==(const C0Element& a, const C0Element& b);
  friend bool operator!=(const C0Element& a, const C0Element& b) { return !(a == b); }

 private:
  void check_compatible(const C0Element& o) const;

  C0SpacePtr space_;
  std::vector<Rational> table_;
};

/// Throws LevelMismatch unless both spaces describe the same (p, n, N).
void require_same_space(const C0Space& a, const C0Space& b);

}  // namespace hkr
