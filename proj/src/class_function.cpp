#include "hkr/class_function.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "hkr/errors.hpp"

namespace hkr {

bool same_classes(const HomClasses& a, const HomClasses& b) {
  if (&a == &b) return true;
  return a.n() == b.n() && a.p() == b.p() &&
         (a.group() == b.group() ||
          (a.group()->name() == b.group()->name() && a.group()->order() == b.group()->order()));
}

ClassFunction::ClassFunction(HomClassesPtr classes, C0SpacePtr space)
    : classes_(std::move(classes)), space_(std::move(space)) {
  if (!classes_ || !space_) throw InvalidArgument("class function needs classes and a C0 space");
  if (classes_->n() != space_->n() || classes_->p() != space_->p())
    throw LevelMismatch("tuple classes and C0 space disagree on (p, n)");
}

ClassFunction ClassFunction::constant(HomClassesPtr classes, C0SpacePtr space, const Rational& c) {
  ClassFunction f(std::move(classes), std::move(space));
  if (c != 0)
    for (std::size_t i = 0; i < f.classes_->size(); ++i) f.values_.emplace(i, C0Element::constant(f.space_, c));
  return f;
}

ClassFunction ClassFunction::indicator(HomClassesPtr classes, C0SpacePtr space, std::size_t cls) {
  ClassFunction f(std::move(classes), std::move(space));
  if (cls >= f.classes_->size()) throw InvalidArgument("class index out of range");
  f.values_.emplace(cls, C0Element::constant(f.space_, Rational(1)));
  return f;
}

C0Element ClassFunction::value(std::size_t cls) const {
  if (cls >= classes_->size()) throw InvalidArgument("class index out of range");
  auto it = values_.find(cls);
  return it == values_.end() ? C0Element(space_) : it->second;
}

void ClassFunction::set(std::size_t cls, C0Element v) {
  if (cls >= classes_->size()) throw InvalidArgument("class index out of range");
  require_same_space(*space_, *v.space());
  if (v.is_zero())
    values_.erase(cls);
  else
    values_.insert_or_assign(cls, std::move(v));
}

void ClassFunction::check_compatible(const ClassFunction& o) const {
  require_same_space(*space_, *o.space_);
  if (!same_classes(*classes_, *o.classes_))
    throw InvalidArgument("class functions live on different groups: " + group()->name() + " vs " +
                          o.group()->name());
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  check_compatible(o);
  for (const auto& [k, v] : o.values_) {
    auto it = values_.find(k);
    if (it == values_.end()) {
      values_.emplace(k, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) values_.erase(it);
    }
  }
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  ClassFunction neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& o) {
  check_compatible(o);
  for (auto it = values_.begin(); it != values_.end();) {
    auto jt = o.values_.find(it->first);
    if (jt == o.values_.end()) {
      it = values_.erase(it);
      continue;
    }
    it->second *= jt->second;
    if (it->second.is_zero())
      it = values_.erase(it);
    else
      ++it;
  }
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& c) {
  if (c == 0) {
    values_.clear();
    return *this;
  }
  for (auto& [k, v] : values_) v *= c;
  return *this;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  if (!(*a.space_ == *b.space_) || !same_classes(*a.classes_, *b.classes_)) return false;
  return a.values_ == b.values_;
}

unsigned required_level(std::uint64_t p, const std::vector<GroupPtr>& groups, unsigned kernel_bound) {
  unsigned level = std::max(1u, kernel_bound);
  for (const auto& g : groups) {
    std::uint64_t e = g->p_exponent(p);
    unsigned need = 0;
    for (std::uint64_t q = 1; q < e; q *= p) ++need;
    level = std::max(level, need);
  }
  return level;
}

void check_level(const C0Space& space, const std::vector<GroupPtr>& groups, unsigned kernel_bound) {
  unsigned need = required_level(space.p(), groups, kernel_bound);
  if (space.level() < need)
    throw LevelMismatch("level N = " + std::to_string(space.level()) + " is too small; requires N >= " +
                        std::to_string(need));
}

namespace {

std::vector<std::size_t> class_permutation(const HomClasses& classes, const IntMatrix& t) {
  std::vector<std::size_t> perm(classes.size());
  const auto& g = *classes.group();
  for (std::size_t i = 0; i < classes.size(); ++i) perm[i] = classes.index_of(precompose_tuple(g, classes[i].rep, t));
  return perm;
}

}  // namespace

ClassFunction aut_act(const ClassFunction& f, const IntMatrix& gamma) {
  const auto& space = *f.space();
  if (gamma.rows() != space.n() || !gamma.is_square()) throw InvalidArgument("gamma has the wrong shape");
  if (!space.is_invertible(gamma)) throw InvalidArgument("gamma is not invertible mod p");
  check_level(space, {f.group()});
  auto perm = class_permutation(*f.classes(), gamma.transpose());
  auto action = space.left_action(gamma);
  ClassFunction out(f.classes(), f.space());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    auto it = f.entries().find(perm[i]);
    if (it != f.entries().end()) out.set(i, it->second.pullback(action));
  }
  return out;
}

GLAction::GLAction(HomClassesPtr classes, C0SpacePtr space) : classes_(std::move(classes)), space_(std::move(space)) {
  check_level(*space_, {classes_->group()});
  for (const auto& gamma : space_->general_linear()) {
    perms_.push_back(class_permutation(*classes_, gamma.transpose()));
    actions_.push_back(space_->left_action(gamma));
  }
}

void GLAction::check(const ClassFunction& f) const {
  require_same_space(*space_, *f.space());
  if (!same_classes(*classes_, *f.classes())) throw InvalidArgument("class function is on another group");
}

ClassFunction GLAction::act(const ClassFunction& f, std::size_t k) const {
  check(f);
  ClassFunction out(f.classes(), f.space());
  for (std::size_t i = 0; i < perms_[k].size(); ++i) {
    auto it = f.entries().find(perms_[k][i]);
    if (it != f.entries().end()) out.set(i, it->second.pullback(actions_[k]));
  }
  return out;
}

ClassFunction GLAction::average(const ClassFunction& f) const {
  check(f);
  const std::size_t size = space_->size();
  ClassFunction out(f.classes(), f.space());
  for (std::size_t i = 0; i < classes_->size(); ++i) {
    std::vector<Rational> acc(size, Rational(0));
    bool any = false;
    for (std::size_t k = 0; k < perms_.size(); ++k) {
      auto it = f.entries().find(perms_[k][i]);
      if (it == f.entries().end()) continue;
      any = true;
      const auto& t = it->second.table();
      for (std::size_t x = 0; x < size; ++x) acc[x] += t[actions_[k][x]];
    }
    if (!any) continue;
    Rational inv(1, static_cast<unsigned long>(perms_.size()));
    for (auto& x : acc) x *= inv;
    out.set(i, C0Element(space_, std::move(acc)));
  }
  return out;
}

bool GLAction::is_invariant(const ClassFunction& f) const {
  check(f);
  const std::size_t size = space_->size();
  for (std::size_t k = 0; k < perms_.size(); ++k) {
    for (std::size_t i = 0; i < classes_->size(); ++i) {
      auto lhs = f.entries().find(i);
      auto rhs = f.entries().find(perms_[k][i]);
      const bool lz = lhs == f.entries().end(), rz = rhs == f.entries().end();
      if (lz || rz) {
        if (lz != rz) return false;
        continue;
      }
      const auto& a = lhs->second.table();
      const auto& b = rhs->second.table();
      for (std::size_t x = 0; x < size; ++x)
        if (a[x] != b[actions_[k][x]]) return false;
    }
  }
  return true;
}

ClassFunction average(const ClassFunction& f) { return GLAction(f.classes(), f.space()).average(f); }
bool is_invariant(const ClassFunction& f) { return GLAction(f.classes(), f.space()).is_invariant(f); }

ClassFunction stabilizer_act(const ClassFunction& f, const IntMatrix& s) {
  const auto& space = *f.space();
  if (s.rows() != space.n() || !s.is_square()) throw LevelMismatch("stabilizer element has the wrong rank");
  if (!space.is_invertible(s)) throw InvalidArgument("stabilizer element is not invertible mod p");
  auto action = space.right_action(s);
  ClassFunction out(f.classes(), f.space());
  for (const auto& [k, v] : f.entries()) out.set(k, v.pullback(action));
  return out;
}

ClassFunction restrict(const ClassFunction& f, const Homomorphism& gamma, HomClassesPtr source_classes) {
  const auto& target = *gamma.target();
  if (target.name() != f.group()->name() || target.order() != f.group()->order())
    throw InvalidArgument("homomorphism target " + target.name() + " is not " + f.group()->name());
  if (!source_classes) source_classes = enumerate_hom_classes(gamma.source(), f.classes()->n(), f.classes()->p());
  if (source_classes->group()->name() != gamma.source()->name())
    throw InvalidArgument("source classes are not on the homomorphism source");
  ClassFunction out(source_classes, f.space());
  for (std::size_t i = 0; i < source_classes->size(); ++i) {
    auto j = f.classes()->index_of(hkr::apply(gamma, (*source_classes)[i].rep));
    auto it = f.entries().find(j);
    if (it != f.entries().end()) out.set(i, it->second);
  }
  return out;
}

ClassFunction external_product(const ClassFunction& f, const ClassFunction& g, HomClassesPtr product_classes) {
  const auto& prod = product_classes->group();
  const auto* info = prod->product_info();
  if (!info) throw InvalidArgument(prod->name() + " is not a direct product");
  auto left = restrict(f, Homomorphism::projection_left(prod), product_classes);
  auto right = restrict(g, Homomorphism::projection_right(prod), product_classes);
  return left * right;
}

std::vector<std::map<std::size_t, std::uint64_t>> transfer_coefficients(const HomClasses& sub_classes,
                                                                        const Homomorphism& inclusion,
                                                                        const HomClasses& classes) {
  if (!inclusion.is_injective()) throw NotASubgroup("transfer needs an injective homomorphism");
  const auto& g = *classes.group();
  if (inclusion.target()->name() != g.name() || inclusion.target()->order() != g.order())
    throw InvalidArgument("inclusion does not land in " + g.name());
  std::vector<std::int64_t> preimage(g.order(), -1);
  std::vector<Element> image;
  for (Element h = 0; h < inclusion.source()->order(); ++h) {
    preimage[inclusion(h)] = h;
    image.push_back(inclusion(h));
  }
  std::sort(image.begin(), image.end());

  std::vector<std::map<std::size_t, std::uint64_t>> rows(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Tuple& alpha = classes[i].rep;
    for (Element c : fixed_cosets(g, image, alpha)) {
      Tuple pulled(alpha.size());
      for (std::size_t k = 0; k < alpha.size(); ++k) pulled[k] = static_cast<Element>(preimage[g.conj(alpha[k], c)]);
      ++rows[i][sub_classes.index_of(pulled)];
    }
  }
  return rows;
}

ClassFunction transfer(const ClassFunction& f, const Homomorphism& inclusion, HomClassesPtr target_classes) {
  if (inclusion.source()->name() != f.group()->name()) throw InvalidArgument("f is not on the inclusion source");
  check_level(*f.space(), {target_classes->group()});
  auto rows = transfer_coefficients(*f.classes(), inclusion, *target_classes);
  ClassFunction out(target_classes, f.space());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    C0Element acc(f.space());
    bool any = false;
    for (const auto& [c, count] : rows[i]) {
      auto it = f.entries().find(c);
      if (it == f.entries().end()) continue;
      acc += it->second * Rational(static_cast<unsigned long>(count));
      any = true;
    }
    if (any) out.set(i, std::move(acc));
  }
  return out;
}

TransferIdeal::TransferIdeal(HomClassesPtr classes, std::vector<std::vector<Rational>> generators)
    : classes_(std::move(classes)) {
  const std::size_t width = classes_->size();
  // Gauss-Jordan, keeping rows fully reduced
  for (auto& v : generators) {
    if (v.size() != width) throw InvalidArgument("generator has the wrong length");
    v = reduce(std::move(v));
    auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (lead == v.end()) continue;
    const std::size_t col = static_cast<std::size_t>(lead - v.begin());
    Rational inv = 1 / *lead;
    for (auto& x : v) x *= inv;
    for (auto& row : basis_) {
      Rational c = row[col];
      if (c == 0) continue;
      for (std::size_t k = 0; k < width; ++k) row[k] -= c * v[k];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), col);
    basis_.insert(basis_.begin() + (pos - pivots_.begin()), std::move(v));
    pivots_.insert(pos, col);
  }
}

std::vector<Rational> TransferIdeal::reduce(std::vector<Rational> v) const {
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    Rational c = v[pivots_[r]];
    if (c == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * basis_[r][k];
  }
  return v;
}

std::vector<std::size_t> TransferIdeal::free_classes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < classes_->size(); ++i)
    if (!std::binary_search(pivots_.begin(), pivots_.end(), i)) out.push_back(i);
  return out;
}

bool TransferIdeal::contains(const std::vector<Rational>& v) const {
  if (v.size() != classes_->size()) throw InvalidArgument("vector has the wrong length");
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

bool TransferIdeal::contains_indicator(std::size_t cls) const {
  std::vector<Rational> v(classes_->size(), Rational(0));
  v.at(cls) = 1;
  return contains(v);
}

bool TransferIdeal::contains(const ClassFunction& f) const {
  if (!same_classes(*classes_, *f.classes())) throw InvalidArgument("class function is on another group");
  // pointwise in C0: every point slice must lie in the span
  for (std::size_t x = 0; x < f.space()->size(); ++x) {
    std::vector<Rational> v(classes_->size(), Rational(0));
    for (const auto& [k, c] : f.entries()) v[k] = c[x];
    if (!contains(v)) return false;
  }
  return true;
}

std::vector<Element> wreath_young_subgroup(const FiniteGroup& wreath, std::uint32_t i) {
  const auto* info = wreath.wreath_info();
  if (!info) throw InvalidArgument(wreath.name() + " is not a wreath product");
  std::vector<Element> out;
  for (Element e = 0; e < wreath.order(); ++e) {
    const auto& perm = permutation_of(*info->top, split_wreath(wreath, e).top);
    bool keeps = true;
    for (std::uint32_t k = 0; k < i; ++k)
      if (perm[k] >= i) keeps = false;
    if (keeps) out.push_back(e);
  }
  return out;
}

TransferIdeal transfer_ideal(const GroupPtr& g, std::uint32_t m, std::size_t n, std::uint64_t p) {
  if (m < 2) throw InvalidArgument("transfer ideal needs m >= 2");
  const bool plain = g->order() == 1;
  GroupPtr target = plain ? symmetric_group(m) : wreath_product(g, m);
  auto classes = enumerate_hom_classes(target, n, p);
  std::vector<std::vector<Rational>> gens;
  for (std::uint32_t i = 1; i < m; ++i) {
    std::optional<Homomorphism> inc;
    if (plain) {
      inc = delta_embed(i, m - i);
    } else {
      inc = Homomorphism::inclusion(subgroup_of(target, wreath_young_subgroup(*target, i)));
    }
    auto sub_classes = enumerate_hom_classes(inc->source(), n, p);
    auto rows = transfer_coefficients(*sub_classes, *inc, *classes);
    // Tr(1_c) for each class c of the subgroup
    std::vector<std::vector<Rational>> cols(sub_classes->size(), std::vector<Rational>(classes->size(), Rational(0)));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, count] : rows[r]) cols[c][r] = Rational(static_cast<unsigned long>(count));
    for (auto& v : cols) gens.push_back(std::move(v));
  }
  return TransferIdeal(classes, std::move(gens));
}

}  // namespace hkr
