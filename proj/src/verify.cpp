#include "hkr/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "hkr/bijections.hpp"
#include "hkr/errors.hpp"
#include "hkr/formal_group.hpp"
#include "hkr/power_ops.hpp"
#include "hkr/rng.hpp"
#include "hkr/serialize.hpp"

namespace hkr {

Section parse_section(const std::string& spec, const Integer& p, std::size_t n, unsigned bound) {
  if (spec == "canonical") return canonical_section(p, n, bound);
  if (spec.rfind("seeded:", 0) == 0) {
    const std::string digits = spec.substr(7);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad section seed in '" + spec + "'");
    try {
      return random_section(p, n, bound, std::stoull(digits));
    } catch (const std::out_of_range&) {
      throw ParseError("section seed does not fit in 64 bits");
    }
  }
  throw ParseError("section must be 'canonical' or 'seeded:<u64>', got '" + spec + "'");
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites = {"bijections", "fgl",        "invariance",
                                                  "powerops",   "stabilizer", "transfers"};
  return suites;
}

namespace {

class Recorder {
 public:
  Recorder(std::vector<PropertyResult>& out, std::string suite) : out_(out), suite_(std::move(suite)) {}
  void operator()(const std::string& params, const std::string& property, bool pass, std::string detail = {}) {
    out_.push_back({suite_, params, property, pass, std::move(detail)});
  }
  /// Runs a check, turning library errors into failures.
  void check(const std::string& params, const std::string& property, const std::function<bool()>& body) {
    try {
      (*this)(params, property, body());
    } catch (const LevelMismatch&) {
      throw;
    } catch (const Error& e) {
      (*this)(params, property, false, e.what());
    }
  }

 private:
  std::vector<PropertyResult>& out_;
  std::string suite_;
};

std::string params_of(const VerifyConfig& c, const std::string& extra = {}) {
  std::string s = "p=" + std::to_string(c.p) + " n=" + std::to_string(c.n);
  if (!extra.empty()) s += " " + extra;
  return s;
}

std::uint64_t ipow_u(std::uint64_t p, unsigned k) {
  std::uint64_t r = 1;
  while (k--) r *= p;
  return r;
}

// p-adic digits of m, lowest first
std::vector<std::uint32_t> padic_blocks(std::uint64_t p, std::uint32_t m) {
  std::vector<std::uint32_t> blocks;
  std::uint64_t pj = 1;
  for (std::uint32_t r = m; r > 0; r /= static_cast<std::uint32_t>(p), pj *= p)
    for (std::uint32_t a = 0; a < r % p; ++a) blocks.push_back(static_cast<std::uint32_t>(pj));
  return blocks;
}

// all classes of the target hit by the class map of hom
std::set<std::size_t> class_image(const Homomorphism& hom, const HomClasses& source, const HomClasses& target) {
  std::set<std::size_t> hit;
  for (const auto& c : source.classes()) hit.insert(target.index_of(hkr::apply(hom, c.rep)));
  return hit;
}

ClassFunction random_function(const HomClassesPtr& classes, const C0SpacePtr& space, std::uint64_t seed) {
  return generate_class_function("random:" + std::to_string(seed), classes, space);
}

// Transposition image C2 -> S2 and the inclusion S2 -> S3 fixing 2.
Homomorphism c2_to_s2() {
  return Homomorphism(cyclic_group(2), symmetric_group(2), {0, 1});
}
Homomorphism s2_to_s3() {
  auto s3 = symmetric_group(3);
  return Homomorphism(symmetric_group(2), s3, {0, symmetric_element(*s3, {1, 0, 2})});
}

// (g, (s, t)) -> ((g, s), (g, t))
Homomorphism split_diagonal(const GroupPtr& source, const GroupPtr& target) {
  const auto* t = target->product_info();
  std::vector<Element> im(source->order());
  for (Element e = 0; e < source->order(); ++e) {
    auto [g, st] = split_product(*source, e);
    auto [s, u] = split_product(*source->product_info()->right, st);
    im[e] = join_product(*target, join_product(*t->left, g, s), join_product(*t->right, g, u));
  }
  return Homomorphism(source, target, std::move(im));
}

// total power operations need N large enough for G wr S_m as well
bool wreath_fits(const GroupPtr& g, std::uint32_t m, const C0Space& space) {
  try {
    return required_level(space.p(), {wreath_product(g, m)}, kernel_bound_for(space.p(), m)) <= space.level();
  } catch (const TooLarge&) {
    return false;
  }
}

// g -> (g; e) into G wr S_1
Homomorphism into_wreath_one(const GroupPtr& g, const GroupPtr& wreath) {
  std::vector<Element> im(g->order());
  for (Element e = 0; e < g->order(); ++e) im[e] = join_wreath(*wreath, WreathElement{{e}, 0});
  return Homomorphism(g, wreath, std::move(im));
}

const std::vector<std::string> kSmallGroups = {"e", "C2", "S3"};

void suite_bijections(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
  Recorder rec(out, "bijections");
  const std::uint32_t mmax = cfg.max_m.value_or(6);
  const Integer p(static_cast<unsigned long>(cfg.p));
  std::map<std::uint32_t, HomClassesPtr> sym;
  for (std::uint32_t m = 1; m <= mmax; ++m) sym[m] = enumerate_hom_classes(symmetric_group(m), cfg.n, cfg.p);

  for (std::uint32_t m = 1; m <= mmax; ++m) {
    const auto params = params_of(cfg, "m=" + std::to_string(m));
    const auto& cls = *sym[m];
    auto sums = enumerate_sums(p, cfg.n, m);
    rec(params, "count hom(L,S_m)/~ = |Sum_m|", cls.size() == sums.size(),
        std::to_string(cls.size()) + " vs " + std::to_string(sums.size()));
    rec.check(params, "class -> sum -> class round trip", [&] {
      for (const auto& c : cls.classes())
        if (!(sum_to_symm_class(cls, symm_class_to_sum(cls, c)) == c)) return false;
      return true;
    });
    rec.check(params, "sum -> class -> sum round trip", [&] {
      for (const auto& s : sums)
        if (!(symm_class_to_sum(cls, sum_to_symm_class(cls, s)) == s)) return false;
      return true;
    });
    // the block embedding sends a pair of sums to their sum
    rec.check(params, "block embedding adds sums", [&] {
      for (std::uint32_t i = 1; i < m; ++i) {
        auto d = delta_embed(i, m - i);
        auto src = enumerate_hom_classes(d.source(), cfg.n, cfg.p);
        for (const auto& c : src->classes()) {
          Tuple a, b;
          for (Element e : c.rep) {
            auto [x, y] = split_product(*d.source(), e);
            a.push_back(x);
            b.push_back(y);
          }
          auto lhs = symm_class_to_sum(cls, TupleClass{hkr::apply(d, c.rep)});
          auto rhs = symm_class_to_sum(*sym[i], TupleClass{a}) + symm_class_to_sum(*sym[m - i], TupleClass{b});
          if (!(lhs == rhs)) return false;
        }
      }
      return true;
    });
    // p-adic block embedding is surjective on classes
    rec.check(params, "p-adic block embedding surjective", [&] {
      auto blocks = padic_blocks(cfg.p, m);
      auto y = young_embedding(blocks);
      auto src = enumerate_hom_classes(y.source(), cfg.n, cfg.p);
      return class_image(y, *src, cls).size() == cls.size();
    });
    rec.check(params, "p-adic sums surjective", [&] {
      auto blocks = padic_blocks(cfg.p, m);
      std::set<SumOfSubgroups> reached = {SumOfSubgroups()};
      for (auto b : blocks) {
        std::set<SumOfSubgroups> next;
        auto part = enumerate_sums(p, cfg.n, b);
        for (const auto& r : reached)
          for (const auto& s : part) next.insert(r + s);
        reached = std::move(next);
      }
      return reached.size() == sums.size();
    });
  }

  // transitive classes vs subgroups
  for (unsigned k = 1; ipow_u(cfg.p, k) <= mmax; ++k) {
    const auto m = static_cast<std::uint32_t>(ipow_u(cfg.p, k));
    const auto params = params_of(cfg, "k=" + std::to_string(k));
    const auto& cls = *sym[m];
    auto subs = enumerate_subgroups(p, cfg.n, k);
    std::set<TorsionSubgroup> seen;
    for (const auto& c : cls.classes()) {
      auto s = symm_class_to_sum(cls, c);
      if (s.size() == 1) seen.insert(s.summands().front());
    }
    rec(params, "transitive classes = Sub_{p^k}", seen.size() == subs.size() &&
                                                      std::equal(seen.begin(), seen.end(), subs.begin()),
        std::to_string(seen.size()) + " vs " + std::to_string(subs.size()));
    // Sub_{p^k} plus restriction from S_{p^{k-1}}^p covers every class
    rec.check(params, "Sub + restriction from S_{p^(k-1)}^p surjective", [&] {
      auto y = young_embedding(std::vector<std::uint32_t>(cfg.p, static_cast<std::uint32_t>(m / cfg.p)));
      auto src = enumerate_hom_classes(y.source(), cfg.n, cfg.p);
      auto hit = class_image(y, *src, cls);
      for (std::size_t i = 0; i < cls.size(); ++i)
        if (symm_class_to_sum(cls, cls[i]).size() == 1) hit.insert(i);
      return hit.size() == cls.size();
    });
  }

  // restrictions to abelian subgroups are jointly surjective on classes
  for (std::uint32_t m = 2; m <= std::min<std::uint32_t>(mmax, 5); ++m) {
    const auto params = params_of(cfg, "m=" + std::to_string(m));
    rec.check(params, "abelian subgroups cover S_m classes", [&] {
      auto g = symmetric_group(m);
      const auto& cls = *sym[m];
      std::set<std::size_t> hit;
      for (const auto& a : abelian_subgroups(*g)) {
        auto sub = subgroup_of(g, a);
        auto inc = Homomorphism::inclusion(sub);
        auto src = enumerate_hom_classes(sub, cfg.n, cfg.p);
        auto part = class_image(inc, *src, cls);
        hit.insert(part.begin(), part.end());
      }
      return hit.size() == cls.size();
    });
  }

  // wreath products
  for (const std::string gs : {"S2", "C2"}) {
    for (std::uint32_t m = 1; m <= std::min<std::uint32_t>(mmax, 3); ++m) {
      const auto params = params_of(cfg, "G=" + gs + " m=" + std::to_string(m));
      auto g = build_group(gs);
      auto base = enumerate_hom_classes(g, cfg.n, cfg.p);
      auto wc = enumerate_hom_classes(wreath_product(g, m), cfg.n, cfg.p);
      auto dec = enumerate_decorated_sums(*base, m);
      rec(params, "count wreath classes = |Sum_m(qz,G)|", wc->size() == dec.size(),
          std::to_string(wc->size()) + " vs " + std::to_string(dec.size()));
      rec.check(params, "wreath round trip", [&] {
        for (const auto& c : wc->classes())
          if (!(decorated_to_wreath_class(*wc, *base, wreath_class_to_decorated(*wc, *base, c)) == c)) return false;
        for (const auto& d : dec)
          if (!(wreath_class_to_decorated(*wc, *base, decorated_to_wreath_class(*wc, *base, d)) == d)) return false;
        return true;
      });
    }
  }
}

void suite_transfers(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
  Recorder rec(out, "transfers");
  const std::uint32_t mmax = cfg.max_m.value_or(4);
  const Integer p(static_cast<unsigned long>(cfg.p));
  auto space = C0Space::make(cfg.p, cfg.n, cfg.level);

  for (unsigned k = 1; ipow_u(cfg.p, k) <= mmax; ++k) {
    const auto m = static_cast<std::uint32_t>(ipow_u(cfg.p, k));
    const auto params = params_of(cfg, "k=" + std::to_string(k));
    auto ideal = transfer_ideal(trivial_group(), m, cfg.n, cfg.p);
    auto subs = enumerate_subgroups(p, cfg.n, k);
    rec(params, "dim Cl/I_tr = |Sub_{p^k}|", ideal.quotient_dimension() == subs.size(),
        std::to_string(ideal.quotient_dimension()) + " vs " + std::to_string(subs.size()));
    const auto& cls = *ideal.classes();
    bool multi_in = true, trans_out = true;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      bool transitive = symm_class_to_sum(cls, cls[i]).size() == 1;
      bool in = ideal.contains_indicator(i);
      if (transitive && in) trans_out = false;
      if (!transitive && !in) multi_in = false;
    }
    rec(params, "multi-summand indicators lie in I_tr", multi_in);
    rec(params, "transitive indicators avoid I_tr", trans_out);
  }

  for (const auto& gs : kSmallGroups) {
    const auto params = params_of(cfg, "G=" + gs + " N=" + std::to_string(cfg.level));
    auto g = build_group(gs);
    auto classes = enumerate_hom_classes(g, cfg.n, cfg.p);
    auto f = random_function(classes, space, cfg.seed);
    rec.check(params, "Tr along identity is the identity", [&] {
      return transfer(f, Homomorphism::identity(g), classes) == f;
    });
    // against (1/|H|) sum over g with g^-1 alpha g in H
    for (const auto& sub : abelian_subgroups(*g)) {
      if (sub.size() == g->order() || sub.size() == 1) continue;
      auto h = subgroup_of(g, sub);
      auto inc = Homomorphism::inclusion(h);
      auto hc = enumerate_hom_classes(h, cfg.n, cfg.p);
      auto fh = random_function(hc, space, cfg.seed + sub.size());
      rec.check(params + " |H|=" + std::to_string(sub.size()), "Tr matches the averaged conjugation sum", [&] {
        auto tr = transfer(fh, inc, classes);
        std::vector<std::int64_t> pre(g->order(), -1);
        for (Element e = 0; e < h->order(); ++e) pre[inc(e)] = e;
        for (std::size_t i = 0; i < classes->size(); ++i) {
          C0Element acc(space);
          for (Element x = 0; x < g->order(); ++x) {
            Tuple t;
            bool inside = true;
            for (Element a : (*classes)[i].rep) {
              auto c = g->conj(a, x);
              if (pre[c] < 0) inside = false;
              t.push_back(static_cast<Element>(pre[std::min<std::size_t>(c, pre.size() - 1)]));
            }
            if (inside) acc += fh.value(t.empty() ? 0 : hc->index_of(t));
          }
          acc *= Rational(1, static_cast<unsigned long>(h->order()));
          if (!(acc == tr.value(i))) return false;
        }
        return true;
      });
    }
  }
}

struct PowerCase {
  std::string group;
  HomClassesPtr classes;
};

std::vector<PowerCase> power_cases(const VerifyConfig& cfg) {
  std::vector<PowerCase> cases;
  for (const auto& gs : kSmallGroups) cases.push_back({gs, enumerate_hom_classes(build_group(gs), cfg.n, cfg.p)});
  return cases;
}

void suite_powerops(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
  Recorder rec(out, "powerops");
  const std::uint32_t mmax = cfg.max_m.value_or(4);
  const Integer p(static_cast<unsigned long>(cfg.p));
  const unsigned bound = kernel_bound_for(cfg.p, mmax);
  auto space = C0Space::make(cfg.p, cfg.n, cfg.level);
  auto canon = canonical_section(p, cfg.n, bound);
  auto other = parse_section(cfg.section, p, cfg.n, bound);

  for (const auto& pc : power_cases(cfg)) {
    const auto& g = pc.classes->group();
    auto f = random_function(pc.classes, space, cfg.seed);
    auto f2 = random_function(pc.classes, space, cfg.seed + 1000);
    auto one = ClassFunction::constant(pc.classes, space, 1);
    for (std::uint32_t m = 1; m <= mmax; ++m) {
      const auto params = params_of(cfg, "G=" + pc.group + " m=" + std::to_string(m));
      for (const auto* sec : {&canon, &other}) {
        const auto tag = " [" + sec->provenance() + "]";
        PowerOperation P(pc.classes, space, m, *sec);
        rec.check(params, "P(1) = 1" + tag, [&] { return P(one) == ClassFunction::constant(P.target(), space, 1); });
        rec.check(params, "P(fg) = P(f)P(g)" + tag, [&] { return P(f * f2) == P(f) * P(f2); });
        if (!wreath_fits(g, m, *space)) continue;
        TotalPowerOperation T(pc.classes, space, m, *sec);
        rec.check(params, "PP(fg) = PP(f)PP(g)" + tag, [&] { return T(f * f2) == T(f) * T(f2); });
        rec.check(params, "PP restricted to G x S_m is P" + tag, [&] {
          auto d = diagonal_into_wreath(P.target()->group(), T.target()->group());
          return restrict(T(f), d, P.target()) == P(f);
        });
      }
      PowerOperation P(pc.classes, space, m, canon);
      rec.check(params, "P restricted to G is the m-th power", [&] {
        auto inc = inclusion_at_identity(g, P.target()->group());
        ClassFunction pw = ClassFunction::constant(pc.classes, space, 1);
        for (std::uint32_t k = 0; k < m; ++k) pw *= f;
        return restrict(P(f), inc, pc.classes) == pw;
      });
      if (m == 1) {
        TotalPowerOperation T(pc.classes, space, 1, canon);
        rec.check(params, "PP_1 is the identity", [&] {
          return restrict(T(f), into_wreath_one(g, T.target()->group()), pc.classes) == f;
        });
      }
      // restriction identity along G x S_i x S_j
      for (std::uint32_t i = 1; i < m; ++i) {
        const std::uint32_t j = m - i;
        rec.check(params, "restriction identity i=" + std::to_string(i), [&] {
          PowerOperation Pi(pc.classes, space, i, other), Pj(pc.classes, space, j, other), Pm(pc.classes, space, m, other);
          auto d = delta_embed(i, j);
          auto src = direct_product(g, d.source());
          auto src_classes = enumerate_hom_classes(src, cfg.n, cfg.p);
          auto lhs = restrict(Pm(f), Homomorphism::product(Homomorphism::identity(g), d, src, Pm.target()->group()),
                              src_classes);
          auto pair = direct_product(Pi.target()->group(), Pj.target()->group());
          auto pair_classes = enumerate_hom_classes(pair, cfg.n, cfg.p);
          auto ext = external_product(Pi(f), Pj(f), pair_classes);
          auto rhs = restrict(ext, split_diagonal(src, pair), src_classes);
          return lhs == rhs;
        });
      }
    }
  }

  // naturality along C2 -> S2 -> S3
  auto s3c = enumerate_hom_classes(symmetric_group(3), cfg.n, cfg.p);
  auto s2c = enumerate_hom_classes(symmetric_group(2), cfg.n, cfg.p);
  auto c2c = enumerate_hom_classes(cyclic_group(2), cfg.n, cfg.p);
  auto f3 = random_function(s3c, space, cfg.seed + 7);
  const std::vector<std::tuple<std::string, Homomorphism, HomClassesPtr, HomClassesPtr>> legs = {
      {"C2->S2", c2_to_s2(), c2c, s2c},
      {"S2->S3", s2_to_s3(), s2c, s3c},
      {"C2->S3", compose(s2_to_s3(), c2_to_s2()), c2c, s3c}};
  for (const auto& [name, gamma, src, dst] : legs) {
    auto f = dst == s3c ? f3 : random_function(dst, space, cfg.seed + 9);
    for (std::uint32_t m = 1; m <= mmax; ++m) {
      rec.check(params_of(cfg, "m=" + std::to_string(m)), "naturality along " + name, [&] {
        PowerOperation Ps(src, space, m, other), Pd(dst, space, m, other);
        auto sym = symmetric_group(m);
        auto lift = Homomorphism::product(gamma, Homomorphism::identity(sym), Ps.target()->group(),
                                          Pd.target()->group());
        return Ps(restrict(f, gamma, src)) == restrict(Pd(f), lift, Ps.target());
      });
    }
  }
}

void suite_invariance(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
  Recorder rec(out, "invariance");
  const std::uint32_t mmax = cfg.max_m.value_or(4);
  const Integer p(static_cast<unsigned long>(cfg.p));
  const unsigned bound = kernel_bound_for(cfg.p, mmax);
  auto space = C0Space::make(cfg.p, cfg.n, cfg.level);
  auto canon = canonical_section(p, cfg.n, bound);
  auto other = parse_section(cfg.section, p, cfg.n, bound);
  const std::size_t trials = 3;

  for (const auto& pc : power_cases(cfg)) {
    const auto base = params_of(cfg, "G=" + pc.group + " N=" + std::to_string(cfg.level));
    GLAction gl(pc.classes, space);
    std::vector<ClassFunction> inv;
    for (std::size_t t = 0; t < trials; ++t) inv.push_back(gl.average(random_function(pc.classes, space, cfg.seed + t)));
    auto raw = random_function(pc.classes, space, cfg.seed + 100);
    rec.check(base, "average is invariant", [&] { return gl.is_invariant(gl.average(raw)); });
    rec.check(base, "average is idempotent", [&] { return gl.average(inv[0]) == inv[0]; });
    rec.check(base, "right action law", [&] {
      SeededRng rng(cfg.seed);
      const auto& glm = space->general_linear();
      for (int t = 0; t < 5; ++t) {
        const auto& a = glm[rng.below(glm.size())];
        const auto& b = glm[rng.below(glm.size())];
        if (!(aut_act(aut_act(raw, a), b) == aut_act(raw, a * b))) return false;
      }
      return true;
    });
    for (std::uint32_t m = 1; m <= mmax; ++m) {
      const auto params = base + " m=" + std::to_string(m);
      PowerOperation P(pc.classes, space, m, canon), Q(pc.classes, space, m, other);
      GLAction glt(P.target(), space);
      rec.check(params, "P(f) invariant for invariant f", [&] {
        for (const auto& f : inv)
          if (!glt.is_invariant(P(f)) || !glt.is_invariant(Q(f))) return false;
        return true;
      });
      rec.check(params, "P(f) independent of the section [" + other.provenance() + "]", [&] {
        for (const auto& f : inv)
          if (!(P(f) == Q(f))) return false;
        return true;
      });
    }
  }
}

void suite_stabilizer(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
  Recorder rec(out, "stabilizer");
  const std::uint32_t mmax = cfg.max_m.value_or(4);
  const Integer p(static_cast<unsigned long>(cfg.p));
  const unsigned bound = kernel_bound_for(cfg.p, mmax);
  auto space = C0Space::make(cfg.p, cfg.n, cfg.level);
  auto other = parse_section(cfg.section, p, cfg.n, bound);
  const auto& glm = space->general_linear();
  SeededRng rng(cfg.seed);
  std::vector<IntMatrix> stab;
  for (int t = 0; t < 10; ++t) stab.push_back(glm[rng.below(glm.size())]);

  for (const auto& pc : power_cases(cfg)) {
    auto f = random_function(pc.classes, space, cfg.seed);
    for (std::uint32_t m = 1; m <= mmax; ++m) {
      const auto params = params_of(cfg, "G=" + pc.group + " m=" + std::to_string(m));
      PowerOperation P(pc.classes, space, m, other);
      rec.check(params, "s.P(f) = P(s.f) for 10 s", [&] {
        for (const auto& s : stab)
          if (!(stabilizer_act(P(f), s) == P(stabilizer_act(f, s)))) return false;
        return true;
      });
      if (!wreath_fits(pc.classes->group(), m, *space)) continue;
      TotalPowerOperation T(pc.classes, space, m, other);
      rec.check(params, "s.PP(f) = PP(s.f) for 10 s", [&] {
        for (const auto& s : stab)
          if (!(stabilizer_act(T(f), s) == T(stabilizer_act(f, s)))) return false;
        return true;
      });
    }
    rec.check(params_of(cfg, "G=" + pc.group), "stabilizer commutes with Aut", [&] {
      for (const auto& s : stab)
        for (std::size_t t = 0; t < glm.size(); t += 7)
          if (!(stabilizer_act(aut_act(f, glm[t]), s) == aut_act(stabilizer_act(f, s), glm[t]))) return false;
      return true;
    });
  }
}

void suite_fgl(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
  Recorder rec(out, "fgl");
  (void)cfg;
  {
    auto mult = FGL::multiplicative(CoefficientRing::local(2), 6);
    auto want = TruncatedSeries::x(mult.ring(), 6) * Rational(2) + TruncatedSeries::monomial(mult.ring(), 6, 2);
    rec("multiplicative", "[2](x) = 2x + x^2", i_series(mult, 2) == want);
    auto add = FGL::additive(CoefficientRing::local(2), 6);
    rec("additive", "[2](x) = 2x", i_series(add, 2) == TruncatedSeries::x(add.ring(), 6) * Rational(2));
  }
  for (std::uint64_t p : {2, 3}) {
    auto mult = FGL::multiplicative(CoefficientRing::local(p), static_cast<unsigned>(p * p + 1));
    rec.check("multiplicative p=" + std::to_string(p), "weierstrass degree of [p] is p",
              [&] { return weierstrass_degree(i_series(mult, p)) == p; });
    rec.check("multiplicative p=" + std::to_string(p), "associativity residual vanishes",
              [&] { return mult.associativity_residual().is_zero(); });
  }
  for (auto [p, h] : {std::pair<std::uint64_t, unsigned>{2, 1}, {2, 2}, {3, 1}}) {
    const unsigned d = default_truncation(p, h);
    const auto params = "honda p=" + std::to_string(p) + " n=" + std::to_string(h) + " D=" + std::to_string(d);
    auto honda = FGL::honda(p, h, d, CoefficientRing::modular(p, 1));
    const auto ph = ipow_u(p, h);
    auto ps = i_series(honda, p);
    rec(params, "[p](x) = x^{p^n} mod p",
        ps == TruncatedSeries::monomial(honda.ring(), d, static_cast<unsigned>(ph)));
    rec.check(params, "associativity residual vanishes", [&] { return honda.associativity_residual().is_zero(); });
    rec.check(params, "associativity residual vanishes mod p^3", [&] {
      return FGL::honda(p, h, d, CoefficientRing::modular(p, 3)).associativity_residual().is_zero();
    });
    rec.check(params, "[i+j] = F([i],[j])", [&] {
      for (std::uint64_t i = 1; i <= 3; ++i)
        for (std::uint64_t j = 1; j <= 3; ++j)
          if (!(i_series(honda, i + j) == honda(i_series(honda, i), i_series(honda, j)))) return false;
      return true;
    });
    rec.check(params, "wd([p^2]) = wd([p])^2", [&] {
      auto w1 = weierstrass_degree(ps);
      return weierstrass_degree(i_series(honda, p * p)) == w1 * w1;
    });
    rec.check(params, "rank of E^0 BC_p is p^n", [&] { return quotient_ring(honda, 1).rank == ph; });
  }
  {
    auto honda = FGL::honda(2, 2, default_truncation(2, 2), CoefficientRing::modular(2, 1));
    rec.check("honda p=2 n=2", "rank of E^0 B(C2 x C2) is 16", [&] { return quotient_ring(honda, {1, 1}).rank == 16; });
    rec.check("honda p=2 n=2", "rank of E^0 BC4 is 16", [&] { return quotient_ring(honda, 2).rank == 16; });
  }
}

}  // namespace

std::vector<PropertyResult> run_verify(const std::string& suite, const VerifyConfig& config) {
  using Runner = void (*)(const VerifyConfig&, std::vector<PropertyResult>&);
  static const std::map<std::string, Runner> runners = {
      {"bijections", suite_bijections}, {"fgl", suite_fgl},               {"invariance", suite_invariance},
      {"powerops", suite_powerops},     {"stabilizer", suite_stabilizer}, {"transfers", suite_transfers}};
  std::vector<PropertyResult> out;
  if (suite == "all") {
    for (const auto& [name, run] : runners) run(config, out);
  } else {
    auto it = runners.find(suite);
    if (it == runners.end()) throw InvalidArgument("unknown verify suite '" + suite + "'");
    it->second(config, out);
  }
  std::stable_sort(out.begin(), out.end(), [](const PropertyResult& a, const PropertyResult& b) {
    return std::tie(a.suite, a.params, a.property) < std::tie(b.suite, b.params, b.property);
  });
  return out;
}

std::string format_report(const std::vector<PropertyResult>& results) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.suite << "  " << r.params << "  " << r.property;
    if (!r.detail.empty()) os << "  (" << r.detail << ")";
    os << "\n";
    if (!r.pass) ++failed;
  }
  os << results.size() - failed << "/" << results.size() << " properties passed\n";
  return os.str();
}

}  // namespace hkr
