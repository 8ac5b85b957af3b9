#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hkr/bijections.hpp"
#include "hkr/errors.hpp"
#include "oracles.hpp"

using namespace hkr;

namespace {

// Burnside on the multiplication table: |commuting p-power n-tuples / conj|
std::uint64_t burnside_classes(const FiniteGroup& g, std::size_t n, std::uint64_t p) {
  std::vector<Element> pe;
  for (Element x = 0; x < g.order(); ++x)
    if (oracle::is_p_power(g.element_order(x), p)) pe.push_back(x);
  std::uint64_t total = 0;
  std::vector<Element> t;
  auto rec = [&](auto&& self) -> void {
    if (t.size() == n) {
      for (Element c = 0; c < g.order(); ++c) {
        bool ok = true;
        for (auto x : t) ok = ok && g.commute(c, x);
        total += ok;
      }
      return;
    }
    for (auto x : pe) {
      bool ok = true;
      for (auto y : t) ok = ok && g.commute(x, y);
      if (!ok) continue;
      t.push_back(x);
      self(self);
      t.pop_back();
    }
  };
  rec(rec);
  return total / g.order();
}

// multisets of typed items: `types[k]` kinds of size p^k
std::uint64_t multiset_count(const std::vector<std::uint64_t>& types, std::uint64_t p, std::uint64_t m) {
  std::vector<std::uint64_t> dp(m + 1, 0);
  dp[0] = 1;
  std::uint64_t w = 1;
  for (auto c : types) {
    for (std::uint64_t t = 0; t < c; ++t)
      for (std::uint64_t s = w; s <= m; ++s) dp[s] += dp[s - w];
    w *= p;
  }
  return dp[m];
}

}  // namespace

TEST_CASE("basic groups and numbering") {
  auto c4 = cyclic_group(4);
  CHECK(c4->order() == 4);
  CHECK(c4->mul(3, 2) == 1);
  CHECK(c4->element_order(2) == 2);
  auto s3 = symmetric_group(3);
  CHECK(s3->order() == 6);
  CHECK(permutation_of(*s3, 0) == Permutation{0, 1, 2});
  CHECK(permutation_of(*s3, 1) == Permutation{0, 2, 1});
  CHECK(permutation_of(*s3, 5) == Permutation{2, 1, 0});
  // (ab)(i) = a(b(i))
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) {
      auto pa = permutation_of(*s3, a), pb = permutation_of(*s3, b);
      oracle::Perm oa(pa.begin(), pa.end()), ob(pb.begin(), pb.end());
      auto c = oracle::mul(oa, ob);
      CHECK(symmetric_element(*s3, Permutation(c.begin(), c.end())) == s3->mul(a, b));
    }
  CHECK_FALSE(s3->is_abelian());
  CHECK(s3->p_exponent(2) == 2);
  CHECK(symmetric_group(4)->p_exponent(2) == 4);
  CHECK(trivial_group()->order() == 1);
  auto prod = direct_product(s3, c4);
  CHECK(prod->order() == 24);
  CHECK(split_product(*prod, join_product(*prod, 5, 3)) == std::pair<Element, Element>{5, 3});
  CHECK(s3->pow(Element(1), Integer(-1)) == s3->inv(1));
  CHECK(s3->conj(1, 1) == 1);
}

TEST_CASE("wreath multiplication follows the action on {0..m-1} x G") {
  auto g = symmetric_group(3);
  auto w = wreath_product(g, 2);
  CHECK(w->order() == 72);
  auto s2 = symmetric_group(2);
  auto act = [&](Element e, std::pair<std::uint32_t, Element> pt) {
    auto we = split_wreath(*w, e);
    return std::pair<std::uint32_t, Element>{permutation_of(*s2, we.top)[pt.first], g->mul(we.labels[pt.first], pt.second)};
  };
  for (Element a = 0; a < w->order(); a += 5)
    for (Element b = 0; b < w->order(); b += 7)
      for (std::uint32_t i = 0; i < 2; ++i)
        for (Element x = 0; x < 6; ++x) CHECK(act(w->mul(a, b), {i, x}) == act(a, act(b, {i, x})));
  for (Element e = 0; e < w->order(); ++e) CHECK(join_wreath(*w, split_wreath(*w, e)) == e);
}

TEST_CASE("group spec parser") {
  CHECK(build_group("S3")->order() == 6);
  CHECK(build_group("C4 x C2")->order() == 8);
  CHECK(build_group("(S2xC2)xS3")->order() == 24);
  CHECK(build_group("wr(C2,2)")->order() == 8);
  CHECK(build_group("wr(S2xC2, 2)")->order() == 32);
  CHECK(build_group("e")->order() == 1);
  auto g = build_group("S2x(C2xS2)");
  CHECK(build_group(g->name())->name() == g->name());
  for (const char* bad : {"Q8", "S", "C0", "wr(C2,0)", "S3x", "(S3", "", "S3 S2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(build_group(bad), ParseError);
  }
  CHECK_THROWS_AS(build_group("S8"), TooLarge);
  CHECK_THROWS_AS(build_group("wr(S3,4)"), TooLarge);
}

TEST_CASE("homomorphisms") {
  auto s3 = symmetric_group(3);
  auto c2 = cyclic_group(2);
  CHECK_THROWS_AS(Homomorphism(c2, s3, {0, 3}), NotAHomomorphism);  // a 3-cycle has order 3
  Homomorphism sign(s3, c2, {0, 1, 1, 0, 0, 1});
  CHECK_FALSE(sign.is_injective());
  CHECK_THROWS_AS(Homomorphism(s3, c2, {0, 1, 1, 1, 0, 1}), NotAHomomorphism);
  auto id = Homomorphism::identity(s3);
  CHECK(compose(sign, id).images() == sign.images());
  auto d = delta_embed(2, 1);
  auto y = young_embedding({2, 1});
  CHECK(d.images() == y.images());
  CHECK(young_embedding({1, 2, 1}).source()->order() == 2);
  CHECK(young_embedding({2, 2}).is_injective());
  auto prod = direct_product(c2, symmetric_group(2));
  auto w = wreath_product(c2, 2);
  CHECK(diagonal_into_wreath(prod, w).is_injective());
}

TEST_CASE("abelian subgroups of S3 against subset enumeration") {
  auto s3 = symmetric_group(3);
  std::uint64_t count = 0;
  for (unsigned mask = 1; mask < 64; ++mask) {
    std::vector<Element> sub;
    for (Element e = 0; e < 6; ++e)
      if (mask >> e & 1) sub.push_back(e);
    bool ok = mask & 1;
    for (auto a : sub)
      for (auto b : sub) ok = ok && (mask >> s3->mul(a, b) & 1) && s3->commute(a, b);
    count += ok;
  }
  CHECK(count == 5);
  CHECK(abelian_subgroups(*s3).size() == count);
  // S4: every abelian subgroup is generated by two commuting elements
  auto s4 = symmetric_group(4);
  std::set<std::vector<Element>> gen2;
  for (Element a = 0; a < 24; ++a)
    for (Element b = 0; b < 24; ++b) {
      if (!s4->commute(a, b)) continue;
      std::set<Element> h = {0};
      std::vector<Element> fr = {0};
      while (!fr.empty()) {
        auto x = fr.back();
        fr.pop_back();
        for (auto g : {a, b})
          if (h.insert(s4->mul(x, g)).second) fr.push_back(s4->mul(x, g));
      }
      gen2.insert(std::vector<Element>(h.begin(), h.end()));
    }
  CHECK(abelian_subgroups(*s4).size() == gen2.size());
}

TEST_CASE("hom classes against Burnside counts") {
  for (std::uint32_t m = 1; m <= 5; ++m)
    for (std::size_t n : {1ul, 2ul})
      for (std::uint64_t p : {2ull, 3ull}) {
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(p);
        CHECK(enumerate_hom_classes(symmetric_group(m), n, p)->size() == oracle::commuting_tuple_classes(m, n, p));
      }
  for (const char* spec : {"C4", "C2xC2", "wr(C2,2)", "wr(S2,2)", "S3xC2", "C6"}) {
    auto g = build_group(spec);
    for (std::size_t n : {1ul, 2ul}) {
      CAPTURE(spec);
      CHECK(enumerate_hom_classes(g, n, 2)->size() == burnside_classes(*g, n, 2));
    }
  }
  CHECK(enumerate_hom_classes(symmetric_group(3), 2, 2)->size() == 4);
}

TEST_CASE("class representatives and sizes") {
  auto cls = enumerate_hom_classes(symmetric_group(4), 2, 2);
  std::size_t total = 0;
  for (std::size_t i = 0; i < cls->size(); ++i) {
    const auto& rep = (*cls)[i].rep;
    CHECK(cls->index_of(rep) == i);
    if (i) CHECK((*cls)[i - 1] < (*cls)[i]);
    total += cls->class_size(i);
    // conjugates land in the same class
    auto g = cls->group();
    for (Element c = 0; c < g->order(); c += 5) {
      Tuple t;
      for (auto x : rep) t.push_back(g->conj(x, c));
      CHECK(cls->index_of(t) == i);
    }
  }
  CHECK_THROWS_AS(cls->index_of(Tuple{1, 1, 1}), NotPPowerTuple);
  auto s3 = enumerate_hom_classes(symmetric_group(3), 1, 2);
  CHECK_THROWS_AS(s3->index_of(Tuple{3}), NotPPowerTuple);  // a 3-cycle
  CHECK_FALSE(s3->is_valid_tuple(Tuple{3}));
}

TEST_CASE("precomposition") {
  auto g = symmetric_group(4);
  auto cls = enumerate_hom_classes(g, 2, 2);
  for (const auto& c : cls->classes()) {
    CHECK(precompose_tuple(*g, c.rep, IntMatrix::identity(2)) == c.rep);
    IntMatrix s{{1, 1}, {0, 1}}, t{{0, 1}, {1, 0}};
    CHECK(precompose_tuple(*g, precompose_tuple(*g, c.rep, s), t) == precompose_tuple(*g, c.rep, s * t));
    // h_0 = g_0^1 g_1^0 ... column j of T gives the exponents of h_j
    auto h = precompose_tuple(*g, c.rep, IntMatrix{{1, 0}, {2, 1}});
    CHECK(h[0] == g->mul(c.rep[0], g->pow(c.rep[1], std::int64_t(2))));
    CHECK(h[1] == c.rep[1]);
  }
}

TEST_CASE("fixed cosets") {
  auto s2 = symmetric_group(2);
  CHECK(fixed_cosets(*s2, {0}, Tuple{0}).size() == 2);
  CHECK(fixed_cosets(*s2, {0}, Tuple{1}).empty());
  CHECK(fixed_cosets(*s2, {0, 1}, Tuple{1}) == std::vector<Element>{0});
  auto s3 = symmetric_group(3);
  CHECK_THROWS_AS(fixed_cosets(*s3, {0, 1, 2}, Tuple{0}), NotASubgroup);
  // |(G/H)^{<a>}| for H = <(1 2)> in S3 and a = (1 2): the coset H itself and no other
  CHECK(fixed_cosets(*s3, {0, 1}, Tuple{1}).size() == 1);
}

TEST_CASE("Lambda-set orbits") {
  // (0 1)(2 3) and (0 2)(1 3) generate a regular V4 action on 4 points
  auto orbits = lambda_orbits({{1, 0, 3, 2}, {2, 3, 0, 1}}, 4);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].points == std::vector<std::uint32_t>{0, 1, 2, 3});
  CHECK(orbits[0].stabilizer.matrix() == IntMatrix{{2, 0}, {0, 2}});
  auto split = lambda_orbits({{1, 0, 2}, {0, 1, 2}}, 3);
  CHECK(split.size() == 2);
}

TEST_CASE("sums of subgroups versus classes of S_m") {
  const Integer two(2);
  for (std::uint64_t p : {2ull, 3ull})
    for (std::size_t n : {1ul, 2ul})
      for (std::uint32_t m = 1; m <= 6; ++m) {
        auto cls = enumerate_hom_classes(symmetric_group(m), n, p);
        auto sums = enumerate_sums(Integer(p), n, m);
        CHECK(cls->size() == sums.size());
        for (const auto& c : cls->classes()) {
          auto s = symm_class_to_sum(*cls, c);
          CHECK(s.total() == m);
          CHECK(sum_to_symm_class(*cls, s) == c);
        }
        for (const auto& s : sums) CHECK(symm_class_to_sum(*cls, sum_to_symm_class(*cls, s)) == s);
      }
  // transitive classes against the permutation oracle
  for (std::size_t n : {1ul, 2ul})
    for (unsigned k : {1u, 2u}) {
      const std::uint32_t m = 1u << k;
      auto cls = enumerate_hom_classes(symmetric_group(m), n, 2);
      std::size_t single = 0;
      for (const auto& c : cls->classes()) single += symm_class_to_sum(*cls, c).size() == 1;
      CHECK(single == oracle::transitive_tuple_classes(static_cast<int>(m), static_cast<int>(n), 2));
      CHECK(single == enumerate_subgroups(two, n, k).size());
    }
}

TEST_CASE("the cyclic class of S_2 is the unique order-2 subgroup at n = 1") {
  auto cls = enumerate_hom_classes(symmetric_group(2), 1, 2);
  auto s = symm_class_to_sum(*cls, TupleClass{{1}});
  REQUIRE(s.size() == 1);
  CHECK(s.summands()[0].order() == 2);
  CHECK(symm_class_to_sum(*cls, TupleClass{{0}}).size() == 2);
}

TEST_CASE("wreath classes versus decorated sums") {
  for (const char* spec : {"S2", "C2", "S3", "e"}) {
    for (std::size_t n : {1ul, 2ul})
      for (std::uint32_t m : {1u, 2u, 3u}) {
        CAPTURE(spec);
        CAPTURE(n);
        CAPTURE(m);
        auto g = build_group(spec);
        auto base = enumerate_hom_classes(g, n, 2);
        auto wc = enumerate_hom_classes(wreath_product(g, m), n, 2);
        auto dec = enumerate_decorated_sums(*base, m);
        std::vector<std::uint64_t> types;
        for (unsigned k = 0; (1u << k) <= m; ++k) types.push_back(enumerate_subgroups(Integer(2), n, k).size() * base->size());
        CHECK(dec.size() == multiset_count(types, 2, m));
        CHECK(wc->size() == dec.size());
        for (const auto& c : wc->classes()) {
          auto d = wreath_class_to_decorated(*wc, *base, c);
          CHECK(d.total() == m);
          CHECK(decorated_to_wreath_class(*wc, *base, d) == c);
        }
        for (const auto& d : dec) CHECK(wreath_class_to_decorated(*wc, *base, decorated_to_wreath_class(*wc, *base, d)) == d);
      }
  }
}

TEST_CASE("trivial G: wreath classes reduce to sums") {
  auto e = trivial_group();
  auto base = enumerate_hom_classes(e, 2, 2);
  auto wc = enumerate_hom_classes(wreath_product(e, 4), 2, 2);
  std::set<SumOfSubgroups> seen;
  for (const auto& c : wc->classes()) seen.insert(wreath_class_to_decorated(*wc, *base, c).underlying());
  CHECK(seen.size() == enumerate_sums(Integer(2), 2, 4).size());
}
