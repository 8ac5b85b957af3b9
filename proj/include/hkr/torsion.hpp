#pragma once

// Finite subgroups of the p-divisible torus (Q_p/Z_p)^n.
//
// A subgroup H is stored by its annihilator lattice
//   Lambda_H = { l in Z^n : l . h in Z_p for all h in H },
// an index-|H| sublattice of Z^n, in canonical HNF. H is recovered as the
// dual (Lambda_H)^* / Z^n, generated by the columns of B^{-T} mod Z^n.

#include <cstdint>
#include <vector>

#include "hkr/lattice.hpp"

namespace hkr {

class TorsionSubgroup {
 public:
  /// Throws InvalidArgument unless the index of `annihilator` is a power of p.
  TorsionSubgroup(Integer p, LatticeBasis annihilator);

  static TorsionSubgroup trivial(const Integer& p, std::size_t n);
  /// The p^k-torsion qz[p^k] = (p^-k Z^n) / Z^n.
  static TorsionSubgroup torsion_points(const Integer& p, std::size_t n, unsigned k);

  const Integer& p() const { return p_; }
  std::size_t rank() const { return annihilator_.dim(); }
  const LatticeBasis& annihilator() const { return annihilator_; }
  unsigned log_order() const { return log_order_; }
  Integer order() const;
  bool is_trivial() const { return log_order_ == 0; }

  /// Generators as columns of a rational matrix with entries in [0, 1).
  std::vector<std::vector<Rational>> generators() const;
  /// Membership of the point x (entries taken mod 1).
  bool contains(const std::vector<Rational>& x) const;

  friend bool operator==(const TorsionSubgroup& a, const TorsionSubgroup& b) {
    return a.p_ == b.p_ && a.annihilator_ == b.annihilator_;
  }
  friend bool operator!=(const TorsionSubgroup& a, const TorsionSubgroup& b) { return !(a == b); }
  /// Canonical order: by order, then HNF entries.
  friend bool operator<(const TorsionSubgroup& a, const TorsionSubgroup& b);

 private:
  Integer p_;
  LatticeBasis annihilator_;
  unsigned log_order_ = 0;
};

/// Formal sum of subgroups; summands kept sorted in canonical order.
class SumOfSubgroups {
 public:
  SumOfSubgroups() = default;
  explicit SumOfSubgroups(std::vector<TorsionSubgroup> summands);

  const std::vector<TorsionSubgroup>& summands() const { return summands_; }
  /// Sum of the orders of the summands.
  std::uint64_t total() const { return total_; }
  std::size_t size() const { return summands_.size(); }
  SumOfSubgroups operator+(const SumOfSubgroups& other) const;

  friend bool operator==(const SumOfSubgroups& a, const SumOfSubgroups& b) { return a.summands_ == b.summands_; }
  friend bool operator<(const SumOfSubgroups& a, const SumOfSubgroups& b);

 private:
  std::vector<TorsionSubgroup> summands_;
  std::uint64_t total_ = 0;
};

/// Sub_{p^k}(qz) in lexicographic order of the HNF entries.
std::vector<TorsionSubgroup> enumerate_subgroups(const Integer& p, std::size_t n, unsigned k);
/// All subgroups of order at most p^bound, sorted canonically.
std::vector<TorsionSubgroup> enumerate_subgroups_up_to(const Integer& p, std::size_t n, unsigned bound);
/// Sum_m(qz), sorted canonically.
std::vector<SumOfSubgroups> enumerate_sums(const Integer& p, std::size_t n, std::uint64_t m);

LatticeBasis annihilator_lattice(const TorsionSubgroup& h);

/// gamma(H) for a nonsingular integer matrix gamma acting on column vectors.
TorsionSubgroup image_subgroup(const PAdicMatrix& gamma, const TorsionSubgroup& h);

}  // namespace hkr
