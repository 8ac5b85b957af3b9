#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hkr/errors.hpp"
#include "hkr/lattice.hpp"
#include "hkr/rng.hpp"
#include "oracles.hpp"

using namespace hkr;

namespace {

IntMatrix random_matrix(SeededRng& rng, std::size_t n, long lo, long hi) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng.range(lo, hi));
  return m;
}

IntMatrix random_nonsingular(SeededRng& rng, std::size_t n) {
  for (;;) {
    auto m = random_matrix(rng, n, -6, 6);
    if (determinant(m) != 0) return m;
  }
}

}  // namespace

TEST_CASE("determinant, adjugate and small helpers") {
  IntMatrix a{{2, 1}, {4, 6}};
  CHECK(determinant(a) == 8);
  CHECK(a * adjugate(a) == IntMatrix::scalar(2, 8));
  CHECK(valuation(Integer(48), Integer(2)) == 4);
  CHECK(ipow(Integer(3), 4) == 81);
  CHECK(floor_div(Integer(-7), Integer(2)) == -4);
  CHECK(mod_floor(Integer(-7), Integer(4)) == 1);
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
}

TEST_CASE("PAdicMatrix") {
  PAdicMatrix m(IntMatrix{{2, 0}, {0, 6}}, Integer(2));
  CHECK(m.det() == 12);
  CHECK(m.det_valuation() == 2);
  CHECK_FALSE(m.is_unit());
  CHECK(PAdicMatrix(IntMatrix{{1, 1}, {0, 3}}, Integer(2)).is_unit());
  CHECK_THROWS_AS(PAdicMatrix(IntMatrix{{1, 2}, {2, 4}}, Integer(2)), SingularMatrix);
}

TEST_CASE("hnf shape, transform and idempotence") {
  SeededRng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 3;
    auto m = random_nonsingular(rng, n);
    auto h = hnf(m);
    CHECK(is_hermite_normal_form(h.basis.matrix()));
    CHECK(m * h.transform == h.basis.matrix());
    auto d = determinant(h.transform);
    CHECK((d == 1 || d == -1));
    CHECK(hnf(h.basis.matrix()).basis == h.basis);
    CHECK(h.basis.index() == abs(determinant(m)));
    // the same lattice from shuffled generators
    IntMatrix shuffled = m * random_nonsingular(rng, n);
    if (abs(determinant(shuffled)) == abs(determinant(m))) CHECK(hnf(shuffled).basis == h.basis);
  }
  CHECK_THROWS_AS(hnf(IntMatrix{{1, 2}, {2, 4}}), SingularMatrix);
}

TEST_CASE("hnf convention on a hand example") {
  // columns (2,0), (1,3): already upper triangular; the 1 right of pivot 2 stays in [0,2)
  auto h = hnf(IntMatrix{{2, 1}, {0, 3}});
  CHECK(h.basis.matrix() == IntMatrix{{2, 1}, {0, 3}});
  auto h2 = hnf(IntMatrix{{2, 5}, {0, 3}});
  CHECK(h2.basis.matrix() == IntMatrix{{2, 1}, {0, 3}});
  CHECK_THROWS_AS(LatticeBasis(IntMatrix{{2, 3}, {0, 3}}), InvalidArgument);
}

TEST_CASE("hnf_span membership") {
  SeededRng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix gens(2, 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 4; ++j) gens(i, j) = static_cast<long>(rng.range(-8, 8));
    IntMatrix square(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) square(i, j) = gens(i, j);
    if (determinant(square) == 0) continue;
    auto l = hnf_span(gens);
    for (std::size_t j = 0; j < 4; ++j) CHECK(l.contains(gens.column(j)));
    // every basis vector is an integer combination: the index equals the gcd of 2x2 minors
    Integer g = 0;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b) g = gcd(g, Integer(gens(0, a) * gens(1, b) - gens(0, b) * gens(1, a)));
    CHECK(l.index() == g);
  }
}

TEST_CASE("reduce returns remainder and quotient") {
  LatticeBasis b(IntMatrix{{4, 1}, {0, 2}});
  std::vector<Integer> c;
  auto r = b.reduce({Integer(9), Integer(5)}, &c);
  CHECK(r[0] >= 0);
  CHECK(r[0] < 4);
  CHECK(r[1] >= 0);
  CHECK(r[1] < 2);
  CHECK(r[0] + 4 * c[0] + 1 * c[1] == 9);
  CHECK(r[1] + 2 * c[1] == 5);
  CHECK(b.contains({Integer(5), Integer(2)}));
  CHECK_FALSE(b.contains({Integer(1), Integer(0)}));
}

TEST_CASE("snf against brute-force group structure") {
  SeededRng rng(3);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 25; ++trial) {
    const std::size_t n = 2 + trial % 2;
    auto m = random_matrix(rng, n, -3, 3);
    Integer d = abs(determinant(m));
    if (d == 0 || d > (n == 2 ? 64 : 12)) continue;
    ++checked;
    for (unsigned long p : {2ul, 3ul}) {
      auto parts = snf(m, Integer(p));
      std::vector<std::vector<long>> rows(n, std::vector<long>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j).get_si();
      auto killed = oracle::killed_counts(rows, p, 6);
      for (int j = 0; j <= 6; ++j) {
        // |{x : p^j x = 0}| = prod p^{min(j, v(d_i))}
        Integer expect = 1;
        for (const auto& di : parts) expect *= ipow(Integer(p), std::min<unsigned>(j, valuation(di, Integer(p))));
        CHECK(expect == killed[j]);
      }
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("elementary divisors divide each other and multiply to |det|") {
  SeededRng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_nonsingular(rng, 3);
    auto e = elementary_divisors(m);
    Integer prod = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      prod *= e[i];
      if (i) CHECK(e[i] % e[i - 1] == 0);
    }
    CHECK(prod == abs(determinant(m)));
  }
  CHECK(elementary_divisors(IntMatrix{{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
}

TEST_CASE("det valuation is additive") {
  SeededRng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_nonsingular(rng, 2);
    auto b = random_nonsingular(rng, 2);
    for (unsigned long p : {2ul, 3ul, 5ul}) {
      PAdicMatrix pa(a, Integer(p)), pb(b, Integer(p)), pab(a * b, Integer(p));
      CHECK(det_valuation(pab) == det_valuation(pa) + det_valuation(pb));
    }
  }
}

TEST_CASE("solvers") {
  LatticeBasis b(IntMatrix{{2, 1}, {0, 3}});
  IntMatrix t{{3, 2}, {3, 0}};
  auto x = solve_integer(b, t);
  CHECK(b.matrix() * x == t);
  CHECK_THROWS_AS(solve_integer(b, IntMatrix{{1, 0}, {0, 1}}), NotInLattice);

  IntMatrix a{{2, 0}, {0, 1}};
  IntMatrix m{{4, 1}, {2, 3}};
  auto y = solve_right(a, m);
  CHECK(y * a == m);
  CHECK_THROWS_AS(solve_right(a, IntMatrix{{1, 0}, {0, 1}}), NoIntegralSolution);
}

TEST_CASE("dual of an overlattice") {
  // L = Z^2 + Z (1/2, 0): dual is 2Z x Z
  auto d = dual_of_overlattice(IntMatrix{{1}, {0}}, Integer(2));
  CHECK(d.matrix() == IntMatrix{{2, 0}, {0, 1}});
  auto d2 = dual_of_overlattice(IntMatrix{{1}, {1}}, Integer(2));
  CHECK(d2.index() == 2);
  CHECK(d2.contains({Integer(1), Integer(1)}));
  CHECK_FALSE(d2.contains({Integer(1), Integer(0)}));
}
