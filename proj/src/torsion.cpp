#include "hkr/torsion.hpp"

#include <algorithm>
#include <functional>

#include "hkr/errors.hpp"

namespace hkr {

TorsionSubgroup::TorsionSubgroup(Integer p, LatticeBasis annihilator)
    : p_(std::move(p)), annihilator_(std::move(annihilator)) {
  Integer idx = annihilator_.index();
  log_order_ = valuation(idx, p_);
  if (ipow(p_, log_order_) != idx) throw InvalidArgument("subgroup order is not a power of p");
}

TorsionSubgroup TorsionSubgroup::trivial(const Integer& p, std::size_t n) {
  return TorsionSubgroup(p, LatticeBasis(IntMatrix::identity(n)));
}

TorsionSubgroup TorsionSubgroup::torsion_points(const Integer& p, std::size_t n, unsigned k) {
  return TorsionSubgroup(p, LatticeBasis(IntMatrix::scalar(n, ipow(p, k))));
}

Integer TorsionSubgroup::order() const { return ipow(p_, log_order_); }

std::vector<std::vector<Rational>> TorsionSubgroup::generators() const {
  const IntMatrix& b = annihilator_.matrix();
  const std::size_t n = rank();
  Integer det = determinant(b);
  IntMatrix inv_t = adjugate(b).transpose();  // det * B^{-T}
  std::vector<std::vector<Rational>> gens(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Rational x(inv_t(i, j), det);
      x.canonicalize();
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
      gens[j][i] = x - fl;
    }
  return gens;
}

bool TorsionSubgroup::contains(const std::vector<Rational>& x) const {
  // x in H  iff  l . x in Z for every basis vector l of the annihilator.
  const IntMatrix& b = annihilator_.matrix();
  for (std::size_t j = 0; j < rank(); ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) s += b(i, j) * x[i];
    if (s.get_den() != 1) return false;
  }
  return true;
}

bool operator<(const TorsionSubgroup& a, const TorsionSubgroup& b) {
  if (a.log_order_ != b.log_order_) return a.log_order_ < b.log_order_;
  return a.annihilator_ < b.annihilator_;
}

SumOfSubgroups::SumOfSubgroups(std::vector<TorsionSubgroup> summands) : summands_(std::move(summands)) {
  std::sort(summands_.begin(), summands_.end());
  for (const auto& h : summands_) total_ += h.order().get_ui();
}

SumOfSubgroups SumOfSubgroups::operator+(const SumOfSubgroups& other) const {
  auto all = summands_;
  all.insert(all.end(), other.summands_.begin(), other.summands_.end());
  return SumOfSubgroups(std::move(all));
}

bool operator<(const SumOfSubgroups& a, const SumOfSubgroups& b) {
  return std::lexicographical_compare(a.summands_.begin(), a.summands_.end(), b.summands_.begin(),
                                      b.summands_.end());
}

std::vector<TorsionSubgroup> enumerate_subgroups(const Integer& p, std::size_t n, unsigned k) {
  if (n == 0) throw InvalidArgument("rank must be positive");
  std::vector<TorsionSubgroup> out;
  std::vector<unsigned> exps(n);
  IntMatrix m(n, n);
  // Free off-diagonal entries (row r, column c > r) range over [0, p^{e_r}).
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == n) {
      out.emplace_back(p, LatticeBasis(m));
      return;
    }
    if (c == n) {
      fill(r + 1, r + 2);
      return;
    }
    Integer bound = ipow(p, exps[r]);
    for (Integer v = 0; v < bound; ++v) {
      m(r, c) = v;
      fill(r, c + 1);
    }
    m(r, c) = 0;
  };
  std::function<void(std::size_t, unsigned)> diag = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      exps[i] = left;
      for (std::size_t j = 0; j < n; ++j) m(j, j) = ipow(p, exps[j]);
      fill(0, 1);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[i] = e;
      diag(i + 1, left - e);
    }
  };
  diag(0, k);
  std::sort(out.begin(), out.end(),
            [](const TorsionSubgroup& a, const TorsionSubgroup& b) {
              return lex_less(a.annihilator().matrix(), b.annihilator().matrix());
            });
  return out;
}

std::vector<TorsionSubgroup> enumerate_subgroups_up_to(const Integer& p, std::size_t n, unsigned bound) {
  std::vector<TorsionSubgroup> out;
  for (unsigned k = 0; k <= bound; ++k) {
    auto layer = enumerate_subgroups(p, n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<SumOfSubgroups> enumerate_sums(const Integer& p, std::size_t n, std::uint64_t m) {
  std::vector<SumOfSubgroups> out;
  if (m == 0) return out;
  unsigned bound = 0;
  while (ipow(p, bound + 1) <= m) ++bound;
  const auto subs = enumerate_subgroups_up_to(p, n, bound);  // canonical order
  std::vector<TorsionSubgroup> chosen;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t from, std::uint64_t left) {
    if (left == 0) {
      out.emplace_back(chosen);
      return;
    }
    for (std::size_t i = from; i < subs.size(); ++i) {
      std::uint64_t ord = subs[i].order().get_ui();
      if (ord > left) break;
      chosen.push_back(subs[i]);
      rec(i, left - ord);
      chosen.pop_back();
    }
  };
  rec(0, m);
  std::sort(out.begin(), out.end());
  return out;
}

LatticeBasis annihilator_lattice(const TorsionSubgroup& h) { return h.annihilator(); }

TorsionSubgroup image_subgroup(const PAdicMatrix& gamma, const TorsionSubgroup& h) {
  if (gamma.dim() != h.rank()) throw InvalidArgument("image_subgroup: dimension mismatch");
  // gamma(H) is generated by gamma * B^{-T} = gamma * adj(B)^T / det(B) modulo Z^n.
  const IntMatrix& b = h.annihilator().matrix();
  Integer det = determinant(b);
  IntMatrix gens = gamma.entries() * adjugate(b).transpose();
  return TorsionSubgroup(h.p(), dual_of_overlattice(gens, det));
}

}  // namespace hkr
