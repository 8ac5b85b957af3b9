#include "hkr/tuple_classes.hpp"

#include <algorithm>
#include <functional>

#include "hkr/errors.hpp"

namespace hkr {

HomClasses::HomClasses(GroupPtr g, std::size_t n, std::uint64_t p) : group_(std::move(g)), n_(n), p_(p) {
  if (n_ == 0) throw InvalidArgument("tuple length must be positive");
  {
    long double span = 1;
    for (std::size_t i = 0; i < n_; ++i) span *= static_cast<long double>(group_->order());
    if (span > 1.8e19L) throw TooLarge("tuples of length " + std::to_string(n_) + " in " + group_->name());
  }
  const FiniteGroup& G = *group_;
  std::vector<Element> pelems;
  for (Element x = 0; x < G.order(); ++x)
    if (G.is_p_element(x, p_)) pelems.push_back(x);

  // Depth-first in increasing element order visits tuples lexicographically,
  // so the first unvisited tuple of an orbit is its least member.
  Tuple t(n_);
  Tuple conj(n_);
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == n_) {
      if (index_.count(key(t))) return;
      const auto cls = static_cast<std::uint32_t>(reps_.size());
      reps_.push_back(TupleClass{t});
      std::size_t count = 0;
      for (Element g = 0; g < G.order(); ++g) {
        for (std::size_t i = 0; i < n_; ++i) conj[i] = G.conj(t[i], g);
        if (index_.emplace(key(conj), cls).second) ++count;
      }
      sizes_.push_back(count);
      return;
    }
    for (Element x : pelems) {
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) ok = G.commute(x, t[i]);
      if (!ok) continue;
      t[depth] = x;
      rec(depth + 1);
    }
  };
  rec(0);
}

std::uint64_t HomClasses::key(const Tuple& t) const {
  std::uint64_t k = 0;
  for (std::size_t i = n_; i-- > 0;) k = k * group_->order() + t[i];
  return k;
}

bool HomClasses::is_valid_tuple(const Tuple& t) const {
  if (t.size() != n_) return false;
  for (Element x : t)
    if (x >= group_->order()) return false;
  return index_.count(key(t)) > 0;
}

std::size_t HomClasses::index_of(const Tuple& t) const {
  if (t.size() != n_) throw NotPPowerTuple("tuple has length " + std::to_string(t.size()) + ", expected " +
                                           std::to_string(n_));
  for (Element x : t)
    if (x >= group_->order()) throw NotPPowerTuple("element index outside " + group_->name());
  auto it = index_.find(key(t));
  if (it == index_.end())
    throw NotPPowerTuple("tuple is not a commuting p-power tuple of " + group_->name());
  return it->second;
}

HomClassesPtr enumerate_hom_classes(GroupPtr g, std::size_t n, std::uint64_t p) {
  return std::make_shared<const HomClasses>(std::move(g), n, p);
}

Tuple precompose_tuple(const FiniteGroup& g, const Tuple& alpha, const IntMatrix& t) {
  if (t.rows() != alpha.size()) throw InvalidArgument("precompose: matrix does not match tuple length");
  Tuple out(t.cols(), 0);
  for (std::size_t j = 0; j < t.cols(); ++j) {
    Element acc = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) acc = g.mul(acc, g.pow(alpha[i], t(i, j)));
    out[j] = acc;
  }
  return out;
}

TupleClass precompose(const HomClasses& classes, const TupleClass& alpha, const IntMatrix& t) {
  return classes[classes.index_of(precompose_tuple(*classes.group(), alpha.rep, t))];
}

Tuple apply(const Homomorphism& h, const Tuple& t) {
  Tuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = h(t[i]);
  return out;
}

std::vector<Element> fixed_cosets(const FiniteGroup& g, const std::vector<Element>& subgroup, const Tuple& alpha) {
  std::vector<bool> in_h(g.order(), false);
  for (Element x : subgroup) {
    if (x >= g.order()) throw NotASubgroup("element outside the group");
    in_h[x] = true;
  }
  if (!in_h[0]) throw NotASubgroup("subset does not contain the identity");
  for (Element a : subgroup)
    for (Element b : subgroup)
      if (!in_h[g.mul(a, b)]) throw NotASubgroup("subset is not closed under multiplication");

  std::vector<bool> seen(g.order(), false);
  std::vector<Element> out;
  for (Element rep = 0; rep < g.order(); ++rep) {
    if (seen[rep]) continue;
    for (Element h : subgroup) seen[g.mul(rep, h)] = true;
    bool fixed = true;
    for (Element a : alpha)
      if (!in_h[g.conj(a, rep)]) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(rep);
  }
  return out;
}

}  // namespace hkr
