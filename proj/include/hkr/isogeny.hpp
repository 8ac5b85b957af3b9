#pragma once

// Isog(qz) as integer matrices with nonzero determinant. An isogeny with
// matrix A acts on column vectors of qz = Q_p^n / Z_p^n; its Pontryagin dual
// on Lambda = Z_p^n is the transpose A^T.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "hkr/lattice.hpp"
#include "hkr/torsion.hpp"

namespace hkr {

class Isogeny {
 public:
  explicit Isogeny(PAdicMatrix matrix) : matrix_(std::move(matrix)) {}
  Isogeny(IntMatrix matrix, Integer p) : matrix_(std::move(matrix), std::move(p)) {}

  const PAdicMatrix& matrix() const { return matrix_; }
  const IntMatrix& entries() const { return matrix_.entries(); }
  const Integer& p() const { return matrix_.p(); }
  std::size_t rank() const { return matrix_.dim(); }
  Integer kernel_order() const { return ipow(p(), matrix_.det_valuation()); }
  /// Matrix of the dual map on Lambda.
  IntMatrix dual() const { return matrix_.entries().transpose(); }

  friend bool operator==(const Isogeny& a, const Isogeny& b) { return a.matrix_ == b.matrix_; }

 private:
  PAdicMatrix matrix_;
};

/// p-primary part of ker(phi), in canonical form.
TorsionSubgroup kernel(const Isogeny& phi);

/// phi after psi (apply psi first): the matrix product.
Isogeny compose(const Isogeny& phi, const Isogeny& psi);

/// A section of the kernel map Isog(qz) -> Sub(qz) on subgroups of order <= p^bound.
class Section {
 public:
  const Integer& p() const { return p_; }
  std::size_t rank() const { return n_; }
  unsigned bound() const { return bound_; }
  /// "canonical" or "seeded:<seed>".
  const std::string& provenance() const { return provenance_; }
  std::optional<std::uint64_t> seed() const { return seed_; }

  /// Throws SectionOutOfRange if |H| exceeds the bound.
  const Isogeny& operator()(const TorsionSubgroup& h) const;
  const std::map<TorsionSubgroup, Isogeny>& assignment() const { return assignment_; }

  friend Section canonical_section(const Integer& p, std::size_t n, unsigned bound);
  friend Section random_section(const Integer& p, std::size_t n, unsigned bound, std::uint64_t seed);

  friend bool operator==(const Section& a, const Section& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.bound_ == b.bound_ && a.assignment_ == b.assignment_;
  }

 private:
  Section(Integer p, std::size_t n, unsigned bound, std::string provenance)
      : p_(std::move(p)), n_(n), bound_(bound), provenance_(std::move(provenance)) {}

  Integer p_;
  std::size_t n_ = 0;
  unsigned bound_ = 0;
  std::string provenance_;
  std::optional<std::uint64_t> seed_;
  std::map<TorsionSubgroup, Isogeny> assignment_;
};

/// phi_H = B_H^T where B_H is the HNF basis of the annihilator of H.
Section canonical_section(const Integer& p, std::size_t n, unsigned bound);
/// phi_H = U_H * B_H^T with U_H a seeded random unimodular matrix (one draw per H in canonical order).
Section random_section(const Integer& p, std::size_t n, unsigned bound, std::uint64_t seed);

/// Seeded random integer matrix with determinant +-1, a product of elementary moves.
IntMatrix random_unimodular(std::size_t n, std::uint64_t seed);

/// Matrix X of psi_H^*: Lambda -> Lambda_H in the HNF basis B of Lambda_H, i.e. B X = A^T.
IntMatrix psi_dual(const Isogeny& phi);

/// The automorphism sigma with phi(gamma H) * gamma = sigma * phi(H).
PAdicMatrix sigma_solve(const PAdicMatrix& gamma, const TorsionSubgroup& h, const Section& phi);

}  // namespace hkr
