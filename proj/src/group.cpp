#include "hkr/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "hkr/errors.hpp"
#include "hkr/rng.hpp"

namespace hkr {

namespace {

void check_size(std::size_t order, const std::string& name) {
  if (order > kMaxGroupOrder)
    throw TooLarge("group " + name + " has order " + std::to_string(order) + " > " +
                   std::to_string(kMaxGroupOrder));
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::size_t order, std::vector<std::uint16_t> table, Kind kind)
    : name_(std::move(name)), order_(order), kind_(kind), table_(std::move(table)) {
  check_size(order_, name_);
  if (order_ == 0 || table_.size() != order_ * order_) throw InvalidArgument("bad multiplication table");
  for (Element a = 0; a < order_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) throw InvalidArgument("element 0 is not the identity in " + name_);
  inverse_.assign(order_, 0);
  for (Element a = 0; a < order_; ++a) {
    bool found = false;
    for (Element b = 0; b < order_ && !found; ++b)
      if (mul(a, b) == 0) {
        if (mul(b, a) != 0) throw InvalidArgument("one-sided inverse in " + name_);
        inverse_[a] = b;
        found = true;
      }
    if (!found) throw InvalidArgument("missing inverse in " + name_);
  }
  auto assoc = [&](Element a, Element b, Element c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InvalidArgument("multiplication is not associative in " + name_);
  };
  if (order_ <= 200) {
    for (Element a = 0; a < order_; ++a)
      for (Element b = 0; b < order_; ++b)
        for (Element c = 0; c < order_; ++c) assoc(a, b, c);
  } else {
    SeededRng rng(order_);
    for (int t = 0; t < 20000; ++t)
      assoc(static_cast<Element>(rng.below(order_)), static_cast<Element>(rng.below(order_)),
            static_cast<Element>(rng.below(order_)));
  }
  orders_.assign(order_, 0);
  for (Element a = 0; a < order_; ++a) {
    std::uint64_t k = 1;
    Element x = a;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    orders_[a] = k;
  }
}

Element FiniteGroup::pow(Element a, std::int64_t e) const {
  const std::int64_t ord = static_cast<std::int64_t>(orders_[a]);
  std::int64_t r = ((e % ord) + ord) % ord;
  Element result = 0;
  Element base = a;
  while (r > 0) {
    if (r & 1) result = mul(result, base);
    base = mul(base, base);
    r >>= 1;
  }
  return result;
}

Element FiniteGroup::pow(Element a, const Integer& e) const {
  Integer r = mod_floor(e, Integer(static_cast<unsigned long>(orders_[a])));
  return pow(a, static_cast<std::int64_t>(r.get_si()));
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (!commute(a, b)) return false;
  return true;
}

bool FiniteGroup::is_p_element(Element a, std::uint64_t p) const {
  std::uint64_t o = orders_[a];
  while (o % p == 0) o /= p;
  return o == 1;
}

std::uint64_t FiniteGroup::p_exponent(std::uint64_t p) const {
  std::uint64_t e = 1;
  for (Element a = 0; a < order_; ++a)
    if (is_p_element(a, p)) e = std::max(e, orders_[a]);
  return e;
}

GroupPtr cyclic_group(std::uint64_t k) {
  if (k == 0) throw InvalidArgument("cyclic group of order 0");
  std::string name = "C" + std::to_string(k);
  check_size(k, name);
  std::vector<std::uint16_t> table(k * k);
  for (std::uint64_t a = 0; a < k; ++a)
    for (std::uint64_t b = 0; b < k; ++b) table[a * k + b] = static_cast<std::uint16_t>((a + b) % k);
  auto g = std::make_shared<FiniteGroup>(name, k, std::move(table), FiniteGroup::Kind::Cyclic);
  g->cyclic_ = std::make_shared<CyclicInfo>(CyclicInfo{k});
  return g;
}

GroupPtr trivial_group() { return cyclic_group(1); }

std::uint32_t permutation_index(const Permutation& perm) {
  const std::size_t m = perm.size();
  std::uint32_t idx = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::uint32_t smaller = 0;
    for (std::size_t j = i + 1; j < m; ++j)
      if (perm[j] < perm[i]) ++smaller;
    idx = idx * static_cast<std::uint32_t>(m - i) + smaller;
  }
  return idx;
}

GroupPtr symmetric_group(std::uint32_t m) {
  static std::mutex mu;
  static std::map<std::uint32_t, GroupPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  std::string name = "S" + std::to_string(m);
  std::size_t order = 1;
  for (std::uint32_t i = 2; i <= m; ++i) {
    order *= i;
    check_size(order, name);
  }
  std::vector<Permutation> perms;
  Permutation p(m);
  std::iota(p.begin(), p.end(), 0u);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::uint16_t> table(order * order);
  Permutation prod(m);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      for (std::uint32_t i = 0; i < m; ++i) prod[i] = perms[a][perms[b][i]];  // (ab)(i) = a(b(i))
      table[a * order + b] = static_cast<std::uint16_t>(permutation_index(prod));
    }
  auto g = std::make_shared<FiniteGroup>(name, order, std::move(table), FiniteGroup::Kind::Symmetric);
  g->symmetric_ = std::make_shared<SymmetricInfo>(SymmetricInfo{m, std::move(perms)});
  cache.emplace(m, g);
  return g;
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  // right-nested products keep their parentheses so the name re-parses to the same group
  std::string name = a->name() + "x" + (b->kind() == FiniteGroup::Kind::Product ? "(" + b->name() + ")" : b->name());
  const std::size_t na = a->order();
  const std::size_t nb = b->order();
  check_size(na * nb, name);
  const std::size_t n = na * nb;
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Element l = a->mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      Element r = b->mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      table[x * n + y] = static_cast<std::uint16_t>(l * nb + r);
    }
  auto g = std::make_shared<FiniteGroup>(name, n, std::move(table), FiniteGroup::Kind::Product);
  g->product_ = std::make_shared<ProductInfo>(ProductInfo{a, b});
  return g;
}

GroupPtr wreath_product(const GroupPtr& base, std::uint32_t m) {
  std::string name = "wr(" + base->name() + "," + std::to_string(m) + ")";
  auto top = symmetric_group(m);
  const std::size_t nb = base->order();
  std::size_t base_power = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    base_power *= nb;
    check_size(base_power, name);
  }
  check_size(base_power * top->order(), name);
  const std::size_t n = base_power * top->order();
  const auto& perms = top->symmetric_info()->perms;

  std::vector<std::vector<Element>> labels(n, std::vector<Element>(m));
  std::vector<Element> tops(n);
  for (std::size_t e = 0; e < n; ++e) {
    tops[e] = static_cast<Element>(e / base_power);
    std::size_t rest = e % base_power;
    for (std::uint32_t i = 0; i < m; ++i) {
      labels[e][i] = static_cast<Element>(rest % nb);
      rest /= nb;
    }
  }
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Permutation& t = perms[tops[y]];
      std::size_t idx = 0;
      for (std::uint32_t i = m; i-- > 0;) idx = idx * nb + base->mul(labels[x][t[i]], labels[y][i]);
      idx += static_cast<std::size_t>(top->mul(tops[x], tops[y])) * base_power;
      table[x * n + y] = static_cast<std::uint16_t>(idx);
    }
  auto g = std::make_shared<FiniteGroup>(name, n, std::move(table), FiniteGroup::Kind::Wreath);
  g->wreath_ = std::make_shared<WreathInfo>(WreathInfo{base, top, m});
  return g;
}

GroupPtr subgroup_of(const GroupPtr& g, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0) throw NotASubgroup("subset does not contain the identity");
  std::vector<std::int64_t> pos(g->order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<std::int64_t>(i);
  const std::size_t n = elements.size();
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::int64_t c = pos[g->mul(elements[a], elements[b])];
      if (c < 0) throw NotASubgroup("subset of " + g->name() + " is not closed under multiplication");
      table[a * n + b] = static_cast<std::uint16_t>(c);
    }
  std::string name = "sub(" + g->name() + "," + std::to_string(n) + ")";
  auto h = std::make_shared<FiniteGroup>(name, n, std::move(table), FiniteGroup::Kind::Subgroup);
  h->subgroup_ = std::make_shared<SubgroupInfo>(SubgroupInfo{g, std::move(elements)});
  return h;
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& s) : s_(s) {}

  GroupPtr parse() {
    GroupPtr g = product();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return g;
  }

 private:
  GroupPtr product() {
    GroupPtr g = factor();
    while (pos_ < s_.size() && s_[pos_] == 'x') {
      ++pos_;
      g = direct_product(g, factor());
    }
    return g;
  }

  GroupPtr factor() {
    skip_space();
    if (s_.compare(pos_, 3, "wr(") == 0) {
      pos_ += 3;
      GroupPtr base = product();
      skip_space();
      expect(',');
      std::uint64_t m = number();
      skip_space();
      expect(')');
      if (m == 0) fail("wreath degree must be positive");
      return wreath_product(base, static_cast<std::uint32_t>(m));
    }
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      GroupPtr g = product();
      expect(')');
      return g;
    }
    if (pos_ < s_.size() && (s_[pos_] == 'S' || s_[pos_] == 'C')) {
      char kind = s_[pos_++];
      std::uint64_t k = number();
      skip_space();
      if (kind == 'S') {
        if (k > 7) throw TooLarge("S" + std::to_string(k) + " exceeds the order cap");
        return symmetric_group(static_cast<std::uint32_t>(k));
      }
      if (k == 0) fail("C0 is not a group");
      return cyclic_group(k);
    }
    if (pos_ < s_.size() && s_[pos_] == 'e') {
      ++pos_;
      skip_space();
      return trivial_group();
    }
    fail("expected S<m>, C<k>, e, wr(...) or '('");
  }

  std::uint64_t number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected a number");
    return std::stoull(s_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("group spec '" + s_ + "' at " + std::to_string(pos_) + ": " + msg);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupPtr build_group(const std::string& spec) { return SpecParser(spec).parse(); }

const Permutation& permutation_of(const FiniteGroup& sym, Element e) {
  const auto* info = sym.symmetric_info();
  if (!info) throw InvalidArgument(sym.name() + " is not a symmetric group");
  return info->perms[e];
}

Element symmetric_element(const FiniteGroup& sym, const Permutation& perm) {
  const auto* info = sym.symmetric_info();
  if (!info || perm.size() != info->m) throw InvalidArgument("permutation does not match " + sym.name());
  return permutation_index(perm);
}

std::pair<Element, Element> split_product(const FiniteGroup& prod, Element e) {
  const auto* info = prod.product_info();
  if (!info) throw InvalidArgument(prod.name() + " is not a direct product");
  const auto nb = static_cast<Element>(info->right->order());
  return {e / nb, e % nb};
}

Element join_product(const FiniteGroup& prod, Element a, Element b) {
  const auto* info = prod.product_info();
  if (!info) throw InvalidArgument(prod.name() + " is not a direct product");
  return a * static_cast<Element>(info->right->order()) + b;
}

WreathElement split_wreath(const FiniteGroup& w, Element e) {
  const auto* info = w.wreath_info();
  if (!info) throw InvalidArgument(w.name() + " is not a wreath product");
  const std::size_t nb = info->base->order();
  std::size_t base_power = 1;
  for (std::uint32_t i = 0; i < info->m; ++i) base_power *= nb;
  WreathElement out;
  out.top = static_cast<Element>(e / base_power);
  std::size_t rest = e % base_power;
  out.labels.resize(info->m);
  for (std::uint32_t i = 0; i < info->m; ++i) {
    out.labels[i] = static_cast<Element>(rest % nb);
    rest /= nb;
  }
  return out;
}

Element join_wreath(const FiniteGroup& w, const WreathElement& we) {
  const auto* info = w.wreath_info();
  if (!info) throw InvalidArgument(w.name() + " is not a wreath product");
  const std::size_t nb = info->base->order();
  std::size_t idx = 0;
  std::size_t base_power = 1;
  for (std::uint32_t i = info->m; i-- > 0;) idx = idx * nb + we.labels[i];
  for (std::uint32_t i = 0; i < info->m; ++i) base_power *= nb;
  return static_cast<Element>(idx + static_cast<std::size_t>(we.top) * base_power);
}

Homomorphism::Homomorphism(GroupPtr source, GroupPtr target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->order()) throw NotAHomomorphism("image table has the wrong size");
  for (Element x : images_)
    if (x >= target_->order()) throw NotAHomomorphism("image outside the target group");
  for (Element a = 0; a < source_->order(); ++a)
    for (Element b = 0; b < source_->order(); ++b)
      if (images_[source_->mul(a, b)] != target_->mul(images_[a], images_[b]))
        throw NotAHomomorphism("map " + source_->name() + " -> " + target_->name() +
                               " does not respect multiplication");
}

bool Homomorphism::is_injective() const {
  std::vector<Element> v = images_;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

Homomorphism Homomorphism::identity(const GroupPtr& g) {
  std::vector<Element> im(g->order());
  std::iota(im.begin(), im.end(), 0u);
  return Homomorphism(g, g, std::move(im));
}

Homomorphism Homomorphism::trivial(const GroupPtr& source, const GroupPtr& target) {
  return Homomorphism(source, target, std::vector<Element>(source->order(), 0));
}

Homomorphism Homomorphism::inclusion(const GroupPtr& sub) {
  const auto* info = sub->subgroup_info();
  if (!info) throw InvalidArgument(sub->name() + " was not built as a subgroup");
  return Homomorphism(sub, info->parent, info->elements);
}

Homomorphism Homomorphism::product(const Homomorphism& a, const Homomorphism& b, const GroupPtr& source,
                                   const GroupPtr& target) {
  std::vector<Element> im(source->order());
  for (Element e = 0; e < source->order(); ++e) {
    auto [x, y] = split_product(*source, e);
    im[e] = join_product(*target, a(x), b(y));
  }
  return Homomorphism(source, target, std::move(im));
}

Homomorphism Homomorphism::projection_left(const GroupPtr& prod) {
  std::vector<Element> im(prod->order());
  for (Element e = 0; e < prod->order(); ++e) im[e] = split_product(*prod, e).first;
  return Homomorphism(prod, prod->product_info()->left, std::move(im));
}

Homomorphism Homomorphism::projection_right(const GroupPtr& prod) {
  std::vector<Element> im(prod->order());
  for (Element e = 0; e < prod->order(); ++e) im[e] = split_product(*prod, e).second;
  return Homomorphism(prod, prod->product_info()->right, std::move(im));
}

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
  if (inner.target() != outer.source()) throw NotAHomomorphism("composition of mismatched homomorphisms");
  std::vector<Element> im(inner.source()->order());
  for (Element e = 0; e < im.size(); ++e) im[e] = outer(inner(e));
  return Homomorphism(inner.source(), outer.target(), std::move(im));
}

Homomorphism delta_embed(std::uint32_t i, std::uint32_t j) {
  auto si = symmetric_group(i);
  auto sj = symmetric_group(j);
  auto source = direct_product(si, sj);
  auto target = symmetric_group(i + j);
  std::vector<Element> im(source->order());
  Permutation p(i + j);
  for (Element e = 0; e < source->order(); ++e) {
    auto [a, b] = split_product(*source, e);
    const auto& pa = permutation_of(*si, a);
    const auto& pb = permutation_of(*sj, b);
    for (std::uint32_t k = 0; k < i; ++k) p[k] = pa[k];
    for (std::uint32_t k = 0; k < j; ++k) p[i + k] = i + pb[k];
    im[e] = symmetric_element(*target, p);
  }
  return Homomorphism(source, target, std::move(im));
}

Homomorphism young_embedding(const std::vector<std::uint32_t>& blocks) {
  if (blocks.empty()) throw InvalidArgument("young_embedding needs at least one block");
  std::uint32_t m = 0;
  GroupPtr source;
  for (auto b : blocks) {
    if (b == 0) throw InvalidArgument("blocks must be nonempty");
    m += b;
    source = source ? direct_product(source, symmetric_group(b)) : symmetric_group(b);
  }
  auto target = symmetric_group(m);
  std::vector<Element> im(source->order());
  Permutation perm(m);
  for (Element e = 0; e < source->order(); ++e) {
    // peel blocks off the right of the left-nested product
    Element rest = e;
    GroupPtr g = source;
    std::uint32_t offset = m;
    for (std::size_t k = blocks.size(); k-- > 0;) {
      Element part = rest;
      if (k > 0) {
        auto [l, r] = split_product(*g, rest);
        part = r;
        rest = l;
        g = g->product_info()->left;
      }
      offset -= blocks[k];
      const auto& pk = permutation_of(*symmetric_group(blocks[k]), part);
      for (std::uint32_t t = 0; t < blocks[k]; ++t) perm[offset + t] = offset + pk[t];
    }
    im[e] = symmetric_element(*target, perm);
  }
  return Homomorphism(source, target, std::move(im));
}

Homomorphism inclusion_at_identity(const GroupPtr& g, const GroupPtr& target) {
  std::vector<Element> im(g->order());
  for (Element e = 0; e < g->order(); ++e) im[e] = join_product(*target, e, 0);
  return Homomorphism(g, target, std::move(im));
}

Homomorphism diagonal_into_wreath(const GroupPtr& product, const GroupPtr& wreath) {
  const auto* w = wreath->wreath_info();
  if (!w) throw InvalidArgument(wreath->name() + " is not a wreath product");
  std::vector<Element> im(product->order());
  for (Element e = 0; e < product->order(); ++e) {
    auto [g, s] = split_product(*product, e);
    im[e] = join_wreath(*wreath, WreathElement{std::vector<Element>(w->m, g), s});
  }
  return Homomorphism(product, wreath, std::move(im));
}

std::vector<std::vector<Element>> abelian_subgroups(const FiniteGroup& g) {
  if (g.order() > 1000) throw TooLarge("abelian_subgroups limited to order 1000");
  auto closure = [&](std::vector<Element> gens) {
    std::set<Element> s{0};
    std::vector<Element> frontier{0};
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (Element x : frontier)
        for (Element y : gens) {
          Element z = g.mul(x, y);
          if (s.insert(z).second) next.push_back(z);
        }
      frontier = std::move(next);
    }
    return std::vector<Element>(s.begin(), s.end());
  };
  std::set<std::vector<Element>> seen;
  std::vector<std::vector<Element>> queue{{0}};
  seen.insert({0});
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const auto current = queue[qi];
    for (Element x = 0; x < g.order(); ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      bool central = std::all_of(current.begin(), current.end(), [&](Element y) { return g.commute(x, y); });
      if (!central) continue;
      auto gens = current;
      gens.push_back(x);
      auto h = closure(std::move(gens));
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  std::vector<std::vector<Element>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace hkr
