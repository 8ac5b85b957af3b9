#pragma once

// hom(Lambda, G)/~ : conjugacy classes of n-tuples of pairwise commuting
// p-power-order elements of a finite group.

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "hkr/group.hpp"

namespace hkr {

using Tuple = std::vector<Element>;

/// A class is named by its canonical representative: the lexicographically
/// least tuple in its simultaneous-conjugacy orbit.
struct TupleClass {
  Tuple rep;

  friend bool operator==(const TupleClass&, const TupleClass&) = default;
  friend auto operator<=>(const TupleClass&, const TupleClass&) = default;
};

class HomClasses;
using HomClassesPtr = std::shared_ptr<const HomClasses>;

class HomClasses {
 public:
  /// Enumerates every commuting p-power n-tuple of g and groups them into classes.
  HomClasses(GroupPtr g, std::size_t n, std::uint64_t p);

  const GroupPtr& group() const { return group_; }
  std::size_t n() const { return n_; }
  std::uint64_t p() const { return p_; }

  std::size_t size() const { return reps_.size(); }
  /// Classes in canonical (lexicographic) order of representatives.
  const std::vector<TupleClass>& classes() const { return reps_; }
  const TupleClass& operator[](std::size_t i) const { return reps_[i]; }

  /// Index of the class of a commuting p-power tuple. Throws NotPPowerTuple otherwise.
  std::size_t index_of(const Tuple& t) const;
  std::size_t index_of(const TupleClass& c) const { return index_of(c.rep); }
  bool is_valid_tuple(const Tuple& t) const;
  /// Number of tuples in the class.
  std::size_t class_size(std::size_t i) const { return sizes_[i]; }

 private:
  std::uint64_t key(const Tuple& t) const;

  GroupPtr group_;
  std::size_t n_;
  std::uint64_t p_;
  std::vector<TupleClass> reps_;
  std::vector<std::size_t> sizes_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

HomClassesPtr enumerate_hom_classes(GroupPtr g, std::size_t n, std::uint64_t p);

/// h_j = prod_i g_i^{T_ij}, i.e. alpha o T as a map Lambda -> G.
Tuple precompose_tuple(const FiniteGroup& g, const Tuple& alpha, const IntMatrix& t);
TupleClass precompose(const HomClasses& classes, const TupleClass& alpha, const IntMatrix& t);

/// Post-composition with a homomorphism.
Tuple apply(const Homomorphism& h, const Tuple& t);

/// Coset representatives g (one per coset gH, each the least element of its coset)
/// with gH fixed by every entry of alpha; equivalently im(g^-1 alpha g) in H.
/// Throws NotASubgroup unless `subgroup` is closed under multiplication.
std::vector<Element> fixed_cosets(const FiniteGroup& g, const std::vector<Element>& subgroup, const Tuple& alpha);

}  // namespace hkr
