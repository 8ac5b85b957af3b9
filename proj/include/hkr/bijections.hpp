#pragma once

// Tuple classes in symmetric groups and wreath products versus (decorated)
// sums of subgroups of qz. A tuple in S_m makes {0..m-1} a Lambda-set; each
// orbit contributes the subgroup dual to Lambda / Stab.

#include <utility>
#include <vector>

#include "hkr/torsion.hpp"
#include "hkr/tuple_classes.hpp"

namespace hkr {

struct Orbit {
  std::vector<std::uint32_t> points;  ///< sorted; points.front() is the base point
  LatticeBasis stabilizer;            ///< HNF basis of the stabilizer sublattice of Z^n
};

/// Orbits of the Z^n-action generated by commuting permutations, ordered by least point.
std::vector<Orbit> lambda_orbits(const std::vector<Permutation>& generators, std::size_t degree);

SumOfSubgroups symm_class_to_sum(const HomClasses& sym_classes, const TupleClass& alpha);
TupleClass sum_to_symm_class(const HomClasses& sym_classes, const SumOfSubgroups& sum);

/// Summand (H, [alpha]) with alpha: Lambda_H -> G written on the HNF basis of Lambda_H.
struct DecoratedSummand {
  TorsionSubgroup subgroup;
  TupleClass decoration;

  friend bool operator==(const DecoratedSummand& a, const DecoratedSummand& b) {
    return a.subgroup == b.subgroup && a.decoration == b.decoration;
  }
  friend bool operator<(const DecoratedSummand& a, const DecoratedSummand& b) {
    if (a.subgroup != b.subgroup) return a.subgroup < b.subgroup;
    return a.decoration < b.decoration;
  }
};

class DecoratedSum {
 public:
  DecoratedSum() = default;
  explicit DecoratedSum(std::vector<DecoratedSummand> summands);

  const std::vector<DecoratedSummand>& summands() const { return summands_; }
  std::uint64_t total() const { return total_; }
  /// Forget the decorations.
  SumOfSubgroups underlying() const;

  friend bool operator==(const DecoratedSum& a, const DecoratedSum& b) { return a.summands_ == b.summands_; }
  friend bool operator<(const DecoratedSum& a, const DecoratedSum& b) { return a.summands_ < b.summands_; }

 private:
  std::vector<DecoratedSummand> summands_;
  std::uint64_t total_ = 0;
};

/// Classes of G wr S_m to Sum_m(qz, G). `base_classes` must be hom classes of G with the same n, p.
DecoratedSum wreath_class_to_decorated(const HomClasses& wreath_classes, const HomClasses& base_classes,
                                       const TupleClass& beta);
TupleClass decorated_to_wreath_class(const HomClasses& wreath_classes, const HomClasses& base_classes,
                                     const DecoratedSum& sum);

/// Sum_m(qz, G), sorted canonically.
std::vector<DecoratedSum> enumerate_decorated_sums(const HomClasses& base_classes, std::uint64_t m);

}  // namespace hkr
