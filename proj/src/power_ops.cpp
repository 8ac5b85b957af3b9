#include "hkr/power_ops.hpp"

#include <map>

#include "hkr/errors.hpp"

namespace hkr {

unsigned kernel_bound_for(std::uint64_t p, std::uint32_t m) {
  unsigned k = 0;
  for (std::uint64_t q = p; q <= m; q *= p) ++k;
  return k;
}

namespace {

// one action table per distinct isogeny matrix
class ActionCache {
 public:
  ActionCache(const C0Space& space, std::vector<std::vector<std::uint32_t>>& store) : space_(space), store_(store) {}

  std::size_t get(const IntMatrix& a) {
    auto key = a.str();
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    store_.push_back(space_.left_action(a));
    index_.emplace(key, store_.size() - 1);
    return store_.size() - 1;
  }

 private:
  const C0Space& space_;
  std::vector<std::vector<std::uint32_t>>& store_;
  std::map<std::string, std::size_t> index_;
};

void check_section(const Section& phi, const C0Space& space) {
  if (phi.rank() != space.n() || phi.p() != Integer(static_cast<unsigned long>(space.p())))
    throw LevelMismatch("section does not match (p, n) of the C0 space");
}

template <class Factor>
ClassFunction evaluate(const HomClassesPtr& source, const HomClassesPtr& target, const C0SpacePtr& space,
                       const std::vector<std::vector<Factor>>& plan,
                       const std::vector<std::vector<std::uint32_t>>& actions, const ClassFunction& f) {
  require_same_space(*space, *f.space());
  if (!same_classes(*source, *f.classes()))
    throw InvalidArgument("power operation built for " + source->group()->name() + ", got " + f.group()->name());
  ClassFunction out(target, space);
  for (std::size_t i = 0; i < plan.size(); ++i) {
    std::vector<Rational> acc(space->size(), Rational(1));
    bool zero = false;
    for (const auto& fac : plan[i]) {
      auto it = f.entries().find(fac.source_class);
      if (it == f.entries().end()) {
        zero = true;
        break;
      }
      const auto& t = it->second.table();
      const auto& map = actions[fac.action];
      for (std::size_t x = 0; x < acc.size(); ++x) acc[x] *= t[map[x]];
    }
    if (!zero) out.set(i, C0Element(space, std::move(acc)));
  }
  return out;
}

}  // namespace

PowerOperation::PowerOperation(HomClassesPtr source, C0SpacePtr space, std::uint32_t m, const Section& phi)
    : source_(std::move(source)), space_(std::move(space)), m_(m) {
  if (m == 0) throw InvalidArgument("power operation needs m >= 1");
  check_section(phi, *space_);
  const GroupPtr& g = source_->group();
  auto sym = symmetric_group(m);
  auto prod = direct_product(g, sym);
  check_level(*space_, {g, sym}, kernel_bound_for(space_->p(), m));
  target_ = enumerate_hom_classes(prod, source_->n(), source_->p());
  auto sym_classes = enumerate_hom_classes(sym, source_->n(), source_->p());

  ActionCache cache(*space_, actions_);
  plan_.resize(target_->size());
  for (std::size_t i = 0; i < target_->size(); ++i) {
    Tuple alpha, beta;
    for (Element e : (*target_)[i].rep) {
      auto [a, b] = split_product(*prod, e);
      alpha.push_back(a);
      beta.push_back(b);
    }
    auto sum = symm_class_to_sum(*sym_classes, TupleClass{beta});
    for (const auto& h : sum.summands()) {
      const auto& a = phi(h).entries();
      plan_[i].push_back({source_->index_of(precompose_tuple(*g, alpha, a.transpose())), cache.get(a)});
    }
  }
}

ClassFunction PowerOperation::operator()(const ClassFunction& f) const {
  return evaluate(source_, target_, space_, plan_, actions_, f);
}

TotalPowerOperation::TotalPowerOperation(HomClassesPtr source, C0SpacePtr space, std::uint32_t m,
                                         const Section& phi)
    : source_(std::move(source)), space_(std::move(space)), m_(m) {
  if (m == 0) throw InvalidArgument("power operation needs m >= 1");
  check_section(phi, *space_);
  const GroupPtr& g = source_->group();
  auto wreath = wreath_product(g, m);
  check_level(*space_, {wreath}, kernel_bound_for(space_->p(), m));
  target_ = enumerate_hom_classes(wreath, source_->n(), source_->p());

  ActionCache cache(*space_, actions_);
  plan_.resize(target_->size());
  for (std::size_t i = 0; i < target_->size(); ++i) {
    auto dec = wreath_class_to_decorated(*target_, *source_, (*target_)[i]);
    for (const auto& s : dec.summands()) {
      const auto& iso = phi(s.subgroup);
      auto x = psi_dual(iso);
      plan_[i].push_back({source_->index_of(precompose_tuple(*g, s.decoration.rep, x)), cache.get(iso.entries())});
    }
  }
}

ClassFunction TotalPowerOperation::operator()(const ClassFunction& f) const {
  return evaluate(source_, target_, space_, plan_, actions_, f);
}

ClassFunction power_op(const ClassFunction& f, std::uint32_t m, const Section& phi) {
  return PowerOperation(f.classes(), f.space(), m, phi)(f);
}

ClassFunction total_power_op(const ClassFunction& f, std::uint32_t m, const Section& phi) {
  return TotalPowerOperation(f.classes(), f.space(), m, phi)(f);
}

}  // namespace hkr
