#pragma once

// Exact integer lattice algebra used for all p-local questions: Hermite and
// Smith normal forms, determinant valuations, lattice membership.
//
// HNF convention (column style): upper triangular, positive pivots, and every
// entry to the right of a pivot reduced into [0, pivot).

#include <vector>

#include "hkr/int_matrix.hpp"

namespace hkr {

/// Nonsingular square integer matrix regarded as an element of M_n(Z_p).
class PAdicMatrix {
 public:
  PAdicMatrix(IntMatrix entries, Integer p);

  const IntMatrix& entries() const { return entries_; }
  const Integer& p() const { return p_; }
  std::size_t dim() const { return entries_.rows(); }
  const Integer& det() const { return det_; }
  unsigned det_valuation() const { return det_val_; }
  /// Invertible over Z_p.
  bool is_unit() const { return det_val_ == 0; }

  friend bool operator==(const PAdicMatrix& a, const PAdicMatrix& b) {
    return a.p_ == b.p_ && a.entries_ == b.entries_;
  }

 private:
  IntMatrix entries_;
  Integer p_;
  Integer det_;
  unsigned det_val_ = 0;
};

/// A full-rank sublattice of Z^n stored by its canonical HNF basis.
class LatticeBasis {
 public:
  /// Throws InvalidArgument unless `basis` already satisfies the HNF convention.
  explicit LatticeBasis(IntMatrix basis);

  const IntMatrix& matrix() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }
  /// [Z^n : L], the product of the pivots.
  Integer index() const;
  bool contains(const std::vector<Integer>& v) const;
  /// Representative of v modulo L with 0 <= r_i < pivot_i, plus the quotient coordinates c with v = r + B c.
  std::vector<Integer> reduce(const std::vector<Integer>& v, std::vector<Integer>* quotient = nullptr) const;

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) { return a.basis_ == b.basis_; }
  friend bool operator<(const LatticeBasis& a, const LatticeBasis& b) { return lex_less(a.basis_, b.basis_); }

 private:
  IntMatrix basis_;
};

bool is_hermite_normal_form(const IntMatrix& m);

struct HermiteDecomposition {
  LatticeBasis basis;
  IntMatrix transform;  ///< unimodular U with M * U = H
};

/// Column HNF of a nonsingular square matrix. Throws SingularMatrix.
HermiteDecomposition hnf(const IntMatrix& m);

/// HNF basis of the lattice spanned by the columns of an n x k generator matrix (full rank required).
LatticeBasis hnf_span(const IntMatrix& generators);

/// Elementary divisors d_1 | ... | d_n of a nonsingular matrix.
std::vector<Integer> elementary_divisors(const IntMatrix& m);
/// p-parts of the elementary divisors: Z^n / M Z^n tensor Z_p = sum Z/d_i.
std::vector<Integer> snf(const IntMatrix& m, const Integer& p);

unsigned det_valuation(const PAdicMatrix& m);

/// Exact X with B X = T. Throws NotInLattice when a column of T is outside L(B).
IntMatrix solve_integer(const LatticeBasis& b, const IntMatrix& t);

/// Exact integer X with X A = M, if one exists. Throws NoIntegralSolution otherwise.
IntMatrix solve_right(const IntMatrix& a, const IntMatrix& m);

/// Dual lattice {x : x . v in Z for all v in L} of L = Z^n + span(generators / denominator),
/// returned in HNF. `generators` is an n x k integer matrix.
LatticeBasis dual_of_overlattice(const IntMatrix& generators, const Integer& denominator);

}  // namespace hkr
