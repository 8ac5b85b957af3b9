#include "hkr/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hkr/errors.hpp"

namespace hkr {

PAdicMatrix::PAdicMatrix(IntMatrix entries, Integer p) : entries_(std::move(entries)), p_(std::move(p)) {
  if (!entries_.is_square()) throw InvalidArgument("p-adic matrix must be square");
  if (p_ < 2) throw InvalidArgument("p must be a prime");
  det_ = determinant(entries_);
  if (det_ == 0) throw SingularMatrix("singular matrix " + entries_.str());
  det_val_ = valuation(det_, p_);
}

bool is_hermite_normal_form(const IntMatrix& m) {
  if (!m.is_square()) return false;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) <= 0) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j) != 0) return false;
    for (std::size_t j = i + 1; j < n; ++j)
      if (m(i, j) < 0 || m(i, j) >= m(i, i)) return false;
  }
  return true;
}

LatticeBasis::LatticeBasis(IntMatrix basis) : basis_(std::move(basis)) {
  if (!is_hermite_normal_form(basis_)) throw InvalidArgument("not in Hermite normal form: " + basis_.str());
}

Integer LatticeBasis::index() const {
  Integer r = 1;
  for (std::size_t i = 0; i < dim(); ++i) r *= basis_(i, i);
  return r;
}

std::vector<Integer> LatticeBasis::reduce(const std::vector<Integer>& v, std::vector<Integer>* quotient) const {
  const std::size_t n = dim();
  if (v.size() != n) throw InvalidArgument("vector length mismatch");
  std::vector<Integer> r = v;
  std::vector<Integer> c(n);
  for (std::size_t k = n; k-- > 0;) {
    c[k] = floor_div(r[k], basis_(k, k));
    if (c[k] != 0)
      for (std::size_t i = 0; i <= k; ++i) r[i] -= c[k] * basis_(i, k);
  }
  if (quotient) *quotient = std::move(c);
  return r;
}

bool LatticeBasis::contains(const std::vector<Integer>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

namespace {

// Column operations on (work, track) in lockstep; track may be empty.
struct ColumnOps {
  IntMatrix& work;
  IntMatrix* track;

  void combine(std::size_t a, std::size_t b, const Integer& s, const Integer& t, const Integer& u,
               const Integer& v) {
    apply(work, a, b, s, t, u, v);
    if (track) apply(*track, a, b, s, t, u, v);
  }
  void negate(std::size_t a) {
    for (std::size_t i = 0; i < work.rows(); ++i) work(i, a) = -work(i, a);
    if (track)
      for (std::size_t i = 0; i < track->rows(); ++i) (*track)(i, a) = -(*track)(i, a);
  }
  void axpy(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < work.rows(); ++i) work(i, dst) -= q * work(i, src);
    if (track)
      for (std::size_t i = 0; i < track->rows(); ++i) (*track)(i, dst) -= q * (*track)(i, src);
  }

  // (col_a, col_b) <- (s col_a + t col_b, u col_a + v col_b)
  static void apply(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                    const Integer& u, const Integer& v) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Integer x = m(i, a);
      Integer y = m(i, b);
      m(i, a) = s * x + t * y;
      m(i, b) = u * x + v * y;
    }
  }
};

// Brings the n x k matrix `work` into a form whose columns pivot[0..n) are the HNF
// columns; returns the column index holding the pivot of each row.
std::vector<std::size_t> reduce_columns(IntMatrix& work, IntMatrix* track) {
  const std::size_t n = work.rows();
  const std::size_t k = work.cols();
  std::vector<bool> active(k, true);
  std::vector<std::size_t> pivot(n);
  ColumnOps ops{work, track};
  for (std::size_t r = n; r-- > 0;) {
    std::size_t pc = k;
    for (std::size_t c = 0; c < k; ++c) {
      if (!active[c] || work(r, c) == 0) continue;
      if (pc == k) {
        pc = c;
        continue;
      }
      Integer g, s, t;
      const Integer a = work(r, pc);
      const Integer b = work(r, c);
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer u = -b / g;
      Integer v = a / g;
      ops.combine(pc, c, s, t, u, v);
    }
    if (pc == k) throw SingularMatrix("lattice generators do not have full rank");
    if (work(r, pc) < 0) ops.negate(pc);
    active[pc] = false;
    pivot[r] = pc;
  }
  for (std::size_t r = n; r-- > 0;) {
    const Integer& d = work(r, pivot[r]);
    for (std::size_t j = r + 1; j < n; ++j) {
      Integer q = floor_div(work(r, pivot[j]), d);
      if (q != 0) ops.axpy(pivot[j], pivot[r], q);
    }
  }
  return pivot;
}

}  // namespace

HermiteDecomposition hnf(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("hnf expects a square matrix");
  if (determinant(m) == 0) throw SingularMatrix("singular matrix " + m.str());
  const std::size_t n = m.rows();
  IntMatrix work = m;
  IntMatrix track = IntMatrix::identity(n);
  auto pivot = reduce_columns(work, &track);
  IntMatrix h(n, n);
  IntMatrix u(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    h.set_column(r, work.column(pivot[r]));
    u.set_column(r, track.column(pivot[r]));
  }
  return {LatticeBasis(std::move(h)), std::move(u)};
}

LatticeBasis hnf_span(const IntMatrix& generators) {
  const std::size_t n = generators.rows();
  IntMatrix work = generators;
  auto pivot = reduce_columns(work, nullptr);
  IntMatrix h(n, n);
  for (std::size_t r = 0; r < n; ++r) h.set_column(r, work.column(pivot[r]));
  return LatticeBasis(std::move(h));
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Integer> elementary_divisors(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("elementary divisors need a square matrix");
  if (determinant(m) == 0) throw SingularMatrix("singular matrix " + m.str());
  // d_k = D_k / D_{k-1} with D_k the gcd of all k x k minors.
  const std::size_t n = m.rows();
  std::vector<Integer> result;
  Integer prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Integer g = 0;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(rows[i], cols[j]);
        Integer d = determinant(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    result.push_back(g / prev);
    prev = g;
  }
  return result;
}

std::vector<Integer> snf(const IntMatrix& m, const Integer& p) {
  auto d = elementary_divisors(m);
  for (auto& x : d) x = ipow(p, valuation(x, p));
  return d;
}

unsigned det_valuation(const PAdicMatrix& m) { return m.det_valuation(); }

IntMatrix solve_integer(const LatticeBasis& b, const IntMatrix& t) {
  const IntMatrix& h = b.matrix();
  const std::size_t n = h.rows();
  if (t.rows() != n) throw InvalidArgument("solve_integer: shape mismatch");
  IntMatrix x(n, t.cols());
  for (std::size_t c = 0; c < t.cols(); ++c) {
    std::vector<Integer> rhs = t.column(c);
    for (std::size_t r = n; r-- > 0;) {
      Integer acc = rhs[r];
      for (std::size_t j = r + 1; j < n; ++j) acc -= h(r, j) * x(j, c);
      if (!mpz_divisible_p(acc.get_mpz_t(), h(r, r).get_mpz_t()))
        throw NotInLattice("column " + std::to_string(c) + " lies outside the lattice");
      x(r, c) = acc / h(r, r);
    }
  }
  return x;
}

IntMatrix solve_right(const IntMatrix& a, const IntMatrix& m) {
  Integer d = determinant(a);
  if (d == 0) throw SingularMatrix("solve_right: singular matrix " + a.str());
  IntMatrix x = m * adjugate(a);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (!mpz_divisible_p(x(i, j).get_mpz_t(), d.get_mpz_t()))
        throw NoIntegralSolution("no integral solution of X * " + a.str() + " = " + m.str());
      x(i, j) /= d;
    }
  return x;
}

LatticeBasis dual_of_overlattice(const IntMatrix& generators, const Integer& denominator) {
  const std::size_t n = generators.rows();
  IntMatrix gens(n, n + generators.cols());
  for (std::size_t i = 0; i < n; ++i) {
    gens(i, i) = denominator;
    for (std::size_t j = 0; j < generators.cols(); ++j) gens(i, n + j) = generators(i, j);
  }
  // D * L has basis C, so L^* = D * C^{-T} Z^n.
  IntMatrix c = hnf_span(gens).matrix();
  Integer det = determinant(c);
  IntMatrix dual = denominator * adjugate(c).transpose();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!mpz_divisible_p(dual(i, j).get_mpz_t(), det.get_mpz_t()))
        throw NoIntegralSolution("overlattice does not contain Z^n");
      dual(i, j) /= det;
    }
  return hnf_span(dual);
}

}  // namespace hkr
