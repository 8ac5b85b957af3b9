#pragma once

// Finite groups as explicit multiplication tables. Element 0 is always the
// identity.
//
// Element numbering (part of the serialization contract):
//   C<k>        a -> a (exponent of the generator)
//   S<m>        permutations in lexicographic order of one-line notation
//   A x B       (a, b) -> a * |B| + b
//   wr(G, m)    (g_0..g_{m-1}; sigma) -> idx(sigma) * |G|^m + sum_i g_i |G|^i
// Wreath multiplication: (g; s)(h; t) = (k; s t) with k_i = g_{t(i)} h_i, so
// (g; s) acts on {0..m-1} x G by (i, x) -> (s(i), g_i x).

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hkr/int_matrix.hpp"

namespace hkr {

using Element = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kMaxGroupOrder = 10000;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct CyclicInfo {
  std::uint64_t k;
};
struct SymmetricInfo {
  std::uint32_t m;
  std::vector<Permutation> perms;
};
struct ProductInfo {
  GroupPtr left;
  GroupPtr right;
};
struct WreathInfo {
  GroupPtr base;
  GroupPtr top;  // S<m>
  std::uint32_t m;
};
struct SubgroupInfo {
  GroupPtr parent;
  std::vector<Element> elements;  // sorted; index i <-> parent element elements[i]
};

class FiniteGroup {
 public:
  enum class Kind { Cyclic, Symmetric, Product, Wreath, Subgroup };

  /// Validates identity, inverses and associativity (exhaustive up to order 200, sampled above).
  FiniteGroup(std::string name, std::size_t order, std::vector<std::uint16_t> table, Kind kind);

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  Kind kind() const { return kind_; }

  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element conj(Element x, Element g) const { return mul(inv(g), mul(x, g)); }  ///< g^-1 x g
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }
  std::uint64_t element_order(Element a) const { return orders_[a]; }
  /// a^e for any integer e (negative allowed).
  Element pow(Element a, const Integer& e) const;
  Element pow(Element a, std::int64_t e) const;
  bool is_abelian() const;
  bool is_p_element(Element a, std::uint64_t p) const;
  /// Largest order of a p-power-order element.
  std::uint64_t p_exponent(std::uint64_t p) const;

  // Structural data for groups built by the factory functions below.
  const CyclicInfo* cyclic_info() const { return cyclic_.get(); }
  const SymmetricInfo* symmetric_info() const { return symmetric_.get(); }
  const ProductInfo* product_info() const { return product_.get(); }
  const WreathInfo* wreath_info() const { return wreath_.get(); }
  const SubgroupInfo* subgroup_info() const { return subgroup_.get(); }

  friend GroupPtr cyclic_group(std::uint64_t k);
  friend GroupPtr symmetric_group(std::uint32_t m);
  friend GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
  friend GroupPtr wreath_product(const GroupPtr& g, std::uint32_t m);
  friend GroupPtr subgroup_of(const GroupPtr& g, std::vector<Element> elements);

 private:
  std::string name_;
  std::size_t order_;
  Kind kind_;
  std::vector<std::uint16_t> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint64_t> orders_;
  std::shared_ptr<const CyclicInfo> cyclic_;
  std::shared_ptr<const SymmetricInfo> symmetric_;
  std::shared_ptr<const ProductInfo> product_;
  std::shared_ptr<const WreathInfo> wreath_;
  std::shared_ptr<const SubgroupInfo> subgroup_;
};

GroupPtr cyclic_group(std::uint64_t k);
GroupPtr trivial_group();
/// Cached: repeated calls return the same instance.
GroupPtr symmetric_group(std::uint32_t m);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
GroupPtr wreath_product(const GroupPtr& g, std::uint32_t m);
/// The subgroup on the given elements of g. Throws NotASubgroup unless closed.
GroupPtr subgroup_of(const GroupPtr& g, std::vector<Element> elements);

/// Parses "S<m>", "C<k>", "x"-separated products and "wr(<spec>,<m>)".
/// Throws ParseError on malformed input and TooLarge above kMaxGroupOrder.
GroupPtr build_group(const std::string& spec);

// Structural helpers.
std::uint32_t permutation_index(const Permutation& perm);  ///< lexicographic rank
const Permutation& permutation_of(const FiniteGroup& sym, Element e);
Element symmetric_element(const FiniteGroup& sym, const Permutation& perm);
std::pair<Element, Element> split_product(const FiniteGroup& prod, Element e);
Element join_product(const FiniteGroup& prod, Element a, Element b);
struct WreathElement {
  std::vector<Element> labels;
  Element top;  ///< element of S<m>
};
WreathElement split_wreath(const FiniteGroup& w, Element e);
Element join_wreath(const FiniteGroup& w, const WreathElement& we);

/// A group homomorphism given by the images of all elements.
class Homomorphism {
 public:
  /// Throws NotAHomomorphism if the table does not respect multiplication.
  Homomorphism(GroupPtr source, GroupPtr target, std::vector<Element> images);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  Element operator()(Element e) const { return images_[e]; }
  const std::vector<Element>& images() const { return images_; }
  bool is_injective() const;

  static Homomorphism identity(const GroupPtr& g);
  static Homomorphism trivial(const GroupPtr& source, const GroupPtr& target);
  /// Inclusion of a group built by subgroup_of into its parent.
  static Homomorphism inclusion(const GroupPtr& sub);
  /// gamma x delta on direct products built by direct_product.
  static Homomorphism product(const Homomorphism& a, const Homomorphism& b, const GroupPtr& source,
                              const GroupPtr& target);
  static Homomorphism projection_left(const GroupPtr& prod);
  static Homomorphism projection_right(const GroupPtr& prod);

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Element> images_;
};

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);

/// Block embedding S_i x S_j -> S_{i+j} (source built as direct_product(S_i, S_j)).
Homomorphism delta_embed(std::uint32_t i, std::uint32_t j);
/// Block embedding S_{b_0} x ... x S_{b_r} -> S_{sum b}; the source is the left-nested direct product.
Homomorphism young_embedding(const std::vector<std::uint32_t>& blocks);
/// g -> (g, e) into G x S_m; `target` must be direct_product(G, S_m).
Homomorphism inclusion_at_identity(const GroupPtr& g, const GroupPtr& target);
/// (g, s) -> ((g, ..., g); s) from G x S_m into G wr S_m.
Homomorphism diagonal_into_wreath(const GroupPtr& product, const GroupPtr& wreath);

/// All abelian subgroups as sorted element lists. Throws TooLarge above order 1000.
std::vector<std::vector<Element>> abelian_subgroups(const FiniteGroup& g);

}  // namespace hkr
