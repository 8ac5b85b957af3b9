#pragma once

// Generalized class functions Cl_n(G, C0) = prod over hom(Lambda, G)/~ of C0,
// stored sparsely (a missing class means the zero element), together with the
// Aut(qz) action, restriction, transfer and the transfer ideal.

#include <map>
#include <memory>
#include <vector>

#include "hkr/c0.hpp"
#include "hkr/tuple_classes.hpp"

namespace hkr {

class ClassFunction {
 public:
  ClassFunction(HomClassesPtr classes, C0SpacePtr space);  ///< zero
  static ClassFunction constant(HomClassesPtr classes, C0SpacePtr space, const Rational& c);
  static ClassFunction indicator(HomClassesPtr classes, C0SpacePtr space, std::size_t cls);

  const HomClassesPtr& classes() const { return classes_; }
  const C0SpacePtr& space() const { return space_; }
  const GroupPtr& group() const { return classes_->group(); }

  C0Element value(std::size_t cls) const;
  C0Element value(const TupleClass& c) const { return value(classes_->index_of(c)); }
  /// Zero values are dropped.
  void set(std::size_t cls, C0Element v);
  /// Nonzero entries keyed by class index.
  const std::map<std::size_t, C0Element>& entries() const { return values_; }

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const ClassFunction& o);
  ClassFunction& operator*=(const Rational& c);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
  friend ClassFunction operator*(ClassFunction a, const Rational& c) { return a *= c; }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
  friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }

 private:
  void check_compatible(const ClassFunction& o) const;

  HomClassesPtr classes_;
  C0SpacePtr space_;
  std::map<std::size_t, C0Element> values_;
};

/// True if both class sets describe the same group (by name and order) with the same n, p.
bool same_classes(const HomClasses& a, const HomClasses& b);

/// Smallest N with p^N >= the p-exponent of every group and N >= kernel_bound.
unsigned required_level(std::uint64_t p, const std::vector<GroupPtr>& groups, unsigned kernel_bound = 0);
/// Throws LevelMismatch naming the required N when the space is too coarse.
void check_level(const C0Space& space, const std::vector<GroupPtr>& groups, unsigned kernel_bound = 0);

/// (f.gamma)([alpha]) = f([alpha gamma^T]) . gamma, for gamma invertible mod p.
ClassFunction aut_act(const ClassFunction& f, const IntMatrix& gamma);

/// The GL_n(Z/p^N) action on one Cl_n(G, C0), precomputed.
class GLAction {
 public:
  GLAction(HomClassesPtr classes, C0SpacePtr space);

  std::size_t group_size() const { return perms_.size(); }
  ClassFunction act(const ClassFunction& f, std::size_t gamma_index) const;
  ClassFunction average(const ClassFunction& f) const;
  bool is_invariant(const ClassFunction& f) const;

 private:
  void check(const ClassFunction& f) const;

  HomClassesPtr classes_;
  C0SpacePtr space_;
  std::vector<std::vector<std::size_t>> perms_;      // class i -> class of alpha_i gamma^T
  std::vector<std::vector<std::uint32_t>> actions_;  // point maps xi -> gamma xi
};

ClassFunction average(const ClassFunction& f);
bool is_invariant(const ClassFunction& f);

/// (s.f)([alpha]) = f([alpha]) . s with (c.s)(xi) = c(xi s).
ClassFunction stabilizer_act(const ClassFunction& f, const IntMatrix& s);

/// gamma^* f on the classes of gamma's source; `source_classes` defaults to a fresh enumeration.
ClassFunction restrict(const ClassFunction& f, const Homomorphism& gamma, HomClassesPtr source_classes = nullptr);

/// Valuewise product on A x B (a group built by direct_product) of f on A and g on B.
ClassFunction external_product(const ClassFunction& f, const ClassFunction& g, HomClassesPtr product_classes);

/// Integer coefficients of the transfer along an injective hom H -> G:
/// row i maps H-class c to the number of fixed cosets gH with [g^-1 alpha_i g] = c.
std::vector<std::map<std::size_t, std::uint64_t>> transfer_coefficients(const HomClasses& sub_classes,
                                                                        const Homomorphism& inclusion,
                                                                        const HomClasses& classes);

/// Tr(f)([alpha]) = sum over gH in (G/H)^{im alpha} of f([g^-1 alpha g]).
ClassFunction transfer(const ClassFunction& f, const Homomorphism& inclusion, HomClassesPtr target_classes);

/// Q-span of the transfers from the Young subgroups. C0 is Q^K pointwise, so
/// the ideal is C0 tensor this span and its C0-codimension is size - rank.
class TransferIdeal {
 public:
  /// classes of S_m (G trivial) or of G wr S_m.
  TransferIdeal(HomClassesPtr classes, std::vector<std::vector<Rational>> generators);

  const HomClassesPtr& classes() const { return classes_; }
  std::size_t rank() const { return basis_.size(); }
  std::size_t quotient_dimension() const { return classes_->size() - basis_.size(); }
  /// Reduced row echelon basis.
  const std::vector<std::vector<Rational>>& basis() const { return basis_; }
  /// Classes without a pivot: their indicators span a complement.
  std::vector<std::size_t> free_classes() const;

  bool contains(const std::vector<Rational>& v) const;
  bool contains_indicator(std::size_t cls) const;
  bool contains(const ClassFunction& f) const;

 private:
  std::vector<Rational> reduce(std::vector<Rational> v) const;

  HomClassesPtr classes_;
  std::vector<std::vector<Rational>> basis_;
  std::vector<std::size_t> pivots_;
};

/// The transfer ideal in Cl_n(S_m) (g trivial) or Cl_n(G wr S_m), from all i + j = m, i, j > 0.
TransferIdeal transfer_ideal(const GroupPtr& g, std::uint32_t m, std::size_t n, std::uint64_t p);

/// Elements of G wr S_m whose top permutation preserves {0, ..., i-1}.
std::vector<Element> wreath_young_subgroup(const FiniteGroup& wreath, std::uint32_t i);

}  // namespace hkr
