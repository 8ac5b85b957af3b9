#pragma once

// Truncated power series and formal group laws over Q, Z_(p) (tracked as Q
// with integrality checks) or Z/p^N. Everything is exact modulo total degree
// D + 1.

#include <cstdint>
#include <string>
#include <vector>

#include "hkr/int_matrix.hpp"

namespace hkr {

class CoefficientRing {
 public:
  enum class Kind { Rational, Local, Modular };

  static CoefficientRing rationals() { return CoefficientRing(Kind::Rational, 0, 0); }
  /// Z_(p): rationals whose denominators are prime to p.
  static CoefficientRing local(std::uint64_t p) { return CoefficientRing(Kind::Local, p, 0); }
  /// Z/p^N; N = 1 is the prime field.
  static CoefficientRing modular(std::uint64_t p, unsigned level) { return CoefficientRing(Kind::Modular, p, level); }

  Kind kind() const { return kind_; }
  std::uint64_t p() const { return p_; }
  unsigned level() const { return level_; }
  std::string str() const;

  /// Canonical form: identity over Q; residue in [0, p^N) for Z/p^N.
  /// Throws NonIntegralCoefficient if a denominator is divisible by p (Local, Modular).
  Rational normalize(const Rational& c) const;
  /// Units: nonzero over Q; p-adic units otherwise.
  bool is_unit(const Rational& c) const;

  friend bool operator==(const CoefficientRing& a, const CoefficientRing& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.level_ == b.level_;
  }

 private:
  CoefficientRing(Kind kind, std::uint64_t p, unsigned level);

  Kind kind_;
  std::uint64_t p_;
  unsigned level_;
  Integer modulus_;
};

/// Power series in k variables truncated at total degree D, stored densely
/// on the box [0, D]^k (only total degree <= D is ever nonzero).
class MultiSeries {
 public:
  MultiSeries(CoefficientRing ring, std::size_t vars, unsigned degree);  ///< zero
  static MultiSeries variable(CoefficientRing ring, std::size_t vars, unsigned degree, std::size_t which);
  static MultiSeries constant(CoefficientRing ring, std::size_t vars, unsigned degree, const Rational& c);

  const CoefficientRing& ring() const { return ring_; }
  std::size_t vars() const { return vars_; }
  unsigned degree() const { return degree_; }

  const Rational& coeff(const std::vector<unsigned>& exponents) const;
  void set_coeff(const std::vector<unsigned>& exponents, const Rational& c);
  bool is_zero() const;
  /// Nonzero terms as (exponents, coefficient), in index order.
  std::vector<std::pair<std::vector<unsigned>, Rational>> terms() const;

  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  MultiSeries& operator*=(const Rational& c);
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator*(MultiSeries a, const Rational& c) { return a *= c; }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  friend bool operator==(const MultiSeries& a, const MultiSeries& b);

  /// Same coefficients read in another ring.
  MultiSeries reduce(const CoefficientRing& ring) const;

  /// F(a_0, ..., a_{vars-1}) for series a_i without constant term, all in the same variables.
  MultiSeries compose(const std::vector<MultiSeries>& args) const;

 private:
  std::size_t index(const std::vector<unsigned>& e) const;
  void check_compatible(const MultiSeries& o) const;

  CoefficientRing ring_;
  std::size_t vars_;
  unsigned degree_;
  std::vector<Rational> coeffs_;
  std::vector<unsigned> total_;  // total degree of each box index
  std::vector<std::size_t> stride_;
};

class TruncatedSeries {
 public:
  TruncatedSeries(CoefficientRing ring, unsigned degree);  ///< zero
  TruncatedSeries(CoefficientRing ring, std::vector<Rational> coeffs);  ///< degree = size - 1
  static TruncatedSeries x(CoefficientRing ring, unsigned degree);
  static TruncatedSeries monomial(CoefficientRing ring, unsigned degree, unsigned k, const Rational& c = 1);

  const CoefficientRing& ring() const { return ring_; }
  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const Rational& operator[](unsigned i) const { return coeffs_.at(i); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  void set(unsigned i, const Rational& c) { coeffs_.at(i) = ring_.normalize(c); }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

  /// this(g(x)) by Horner; g(0) must be 0.
  TruncatedSeries compose(const TruncatedSeries& g) const;
  /// Compositional inverse; needs f(0) = 0 and a unit linear coefficient.
  TruncatedSeries reversion() const;
  TruncatedSeries reduce(const CoefficientRing& ring) const;

  MultiSeries as_multi() const;
  static TruncatedSeries from_multi(const MultiSeries& m);

  std::string str() const;

 private:
  CoefficientRing ring_;
  std::vector<Rational> coeffs_;
};

class FGL {
 public:
  /// Validates F(x,0) = x, F(0,y) = y and F(x,y) = F(y,x).
  FGL(MultiSeries law, std::string provenance);

  static FGL additive(const CoefficientRing& ring, unsigned degree);
  static FGL multiplicative(const CoefficientRing& ring, unsigned degree);  ///< x + y + xy
  /// exp(log x + log y), log = sum_i x^{p^{ni}} / p^i, built over Q, checked p-integral, then read in `ring`.
  static FGL honda(std::uint64_t p, unsigned height, unsigned degree, const CoefficientRing& ring);

  const MultiSeries& law() const { return law_; }
  const CoefficientRing& ring() const { return law_.ring(); }
  unsigned degree() const { return law_.degree(); }
  const std::string& provenance() const { return provenance_; }

  /// F(a(x), b(x)).
  TruncatedSeries operator()(const TruncatedSeries& a, const TruncatedSeries& b) const;
  /// F(F(x,y),z) - F(x,F(y,z)).
  MultiSeries associativity_residual() const;
  FGL reduce(const CoefficientRing& ring) const;

 private:
  MultiSeries law_;
  std::string provenance_;
};

/// p^{2n} + 1.
unsigned default_truncation(std::uint64_t p, unsigned height);

/// Honda logarithm sum_{p^{ni} <= D} x^{p^{ni}} / p^i over Q.
TruncatedSeries honda_logarithm(std::uint64_t p, unsigned height, unsigned degree);

/// [0] = 0, [i] = F([i-1](x), x).
TruncatedSeries i_series(const FGL& f, std::uint64_t i);

/// Smallest d with a unit coefficient. Throws NoUnitCoefficient.
unsigned weierstrass_degree(const TruncatedSeries& g);

struct QuotientRing {
  std::uint64_t rank;
  /// Monomial basis as exponent vectors, one entry per cyclic factor.
  std::vector<std::vector<unsigned>> basis;
};

/// E^0 BC_{p^k} = E^0[[x]]/[p^k](x): rank weierstrass_degree([p^k]), basis 1, x, ..., x^{rank-1}.
QuotientRing quotient_ring(const FGL& f, unsigned k);
/// For A = prod C_{p^{k_i}}: the tensor product of the factors.
QuotientRing quotient_ring(const FGL& f, const std::vector<unsigned>& ks);

}  // namespace hkr
