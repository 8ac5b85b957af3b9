#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hkr/errors.hpp"
#include "hkr/torsion.hpp"
#include "oracles.hpp"

using namespace hkr;

TEST_CASE("subgroup counts against closure enumeration") {
  struct Case {
    unsigned long p;
    std::size_t n;
    unsigned k;
  };
  for (auto c : {Case{2, 1, 1}, Case{2, 1, 3}, Case{2, 2, 1}, Case{2, 2, 2}, Case{3, 2, 1}, Case{2, 3, 1}, Case{5, 2, 1}}) {
    CAPTURE(c.p);
    CAPTURE(c.n);
    CAPTURE(c.k);
    CHECK(enumerate_subgroups(Integer(c.p), c.n, c.k).size() == oracle::subgroups_of_order(c.p, c.n, c.k));
  }
  CHECK(enumerate_subgroups(Integer(2), 2, 1).size() == 3);
  CHECK(enumerate_subgroups(Integer(2), 2, 2).size() == 7);
}

TEST_CASE("subgroups are distinct, sorted, and have the right order") {
  auto subs = enumerate_subgroups(Integer(2), 2, 2);
  for (std::size_t i = 0; i + 1 < subs.size(); ++i) CHECK(subs[i] < subs[i + 1]);
  for (const auto& h : subs) {
    CHECK(h.order() == 4);
    CHECK(h.annihilator().index() == 4);
  }
}

TEST_CASE("generators lie in the subgroup and generate it") {
  for (const auto& h : enumerate_subgroups_up_to(Integer(2), 2, 2)) {
    auto gens = h.generators();
    for (const auto& g : gens) CHECK(h.contains(g));
    // closure of the generators has |H| points
    std::set<std::vector<Rational>> pts = {{Rational(0), Rational(0)}};
    std::vector<std::vector<Rational>> frontier(pts.begin(), pts.end());
    while (!frontier.empty()) {
      auto x = frontier.back();
      frontier.pop_back();
      for (const auto& g : gens) {
        std::vector<Rational> y(2);
        for (int i = 0; i < 2; ++i) {
          y[i] = x[i] + g[i];
          if (y[i] >= 1) y[i] -= 1;
        }
        if (pts.insert(y).second) frontier.push_back(y);
      }
    }
    CHECK(Integer(static_cast<unsigned long>(pts.size())) == h.order());
  }
}

TEST_CASE("torsion points and the trivial subgroup") {
  auto t = TorsionSubgroup::torsion_points(Integer(3), 2, 1);
  CHECK(t.order() == 9);
  CHECK(t.contains({Rational(1, 3), Rational(2, 3)}));
  CHECK_FALSE(t.contains({Rational(1, 9), Rational(0)}));
  auto e = TorsionSubgroup::trivial(Integer(2), 2);
  CHECK(e.is_trivial());
  CHECK(e.order() == 1);
  CHECK(e.contains({Rational(3), Rational(-1)}));
  CHECK_THROWS_AS(TorsionSubgroup(Integer(2), LatticeBasis(IntMatrix{{3, 0}, {0, 1}})), InvalidArgument);
}

TEST_CASE("sums of subgroups") {
  CHECK(enumerate_sums(Integer(2), 2, 2).size() == 4);
  CHECK(enumerate_sums(Integer(2), 2, 3).size() == 4);
  CHECK(enumerate_sums(Integer(2), 2, 4).size() == 17);
  for (unsigned long p : {2ul, 3ul})
    for (std::size_t n : {1ul, 2ul})
      for (std::uint64_t m = 1; m <= 6; ++m) CHECK(enumerate_sums(Integer(p), n, m).size() == oracle::sums_count(p, n, m));
  auto sums = enumerate_sums(Integer(2), 2, 4);
  for (const auto& s : sums) CHECK(s.total() == 4);
  auto a = sums.front(), b = sums.back();
  CHECK((a + b).total() == 8);
  CHECK((a + b) == (b + a));
}

TEST_CASE("image of a subgroup") {
  auto h = enumerate_subgroups(Integer(2), 2, 1).front();
  PAdicMatrix id(IntMatrix::identity(2), Integer(2));
  CHECK(image_subgroup(id, h) == h);
  // a unit permutes the order-2 subgroups; the images of x have to match pointwise
  PAdicMatrix g(IntMatrix{{0, 1}, {1, 0}}, Integer(2));
  for (const auto& s : enumerate_subgroups(Integer(2), 2, 1)) {
    auto img = image_subgroup(g, s);
    CHECK(img.order() == 2);
    for (const auto& x : s.generators()) CHECK(img.contains({x[1], x[0]}));
  }
  // multiplication by 2 kills the 2-torsion
  PAdicMatrix two(IntMatrix::scalar(2, Integer(2)), Integer(2));
  CHECK(image_subgroup(two, TorsionSubgroup::torsion_points(Integer(2), 2, 1)).is_trivial());
  CHECK(annihilator_lattice(h) == h.annihilator());
}
