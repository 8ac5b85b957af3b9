#include "hkr/isogeny.hpp"

#include "hkr/errors.hpp"
#include "hkr/rng.hpp"

namespace hkr {

TorsionSubgroup kernel(const Isogeny& phi) {
  // Lambda_{ker} = A^T Z^n, localized at p: add p^v Z^n to drop prime-to-p torsion.
  const std::size_t n = phi.rank();
  const IntMatrix at = phi.dual();
  IntMatrix gens(n, 2 * n);
  Integer pv = ipow(phi.p(), phi.matrix().det_valuation());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gens(i, j) = at(i, j);
    gens(i, n + i) = pv;
  }
  return TorsionSubgroup(phi.p(), hnf_span(gens));
}

Isogeny compose(const Isogeny& phi, const Isogeny& psi) {
  if (phi.p() != psi.p()) throw InvalidArgument("compose: primes differ");
  return Isogeny(phi.entries() * psi.entries(), phi.p());
}

const Isogeny& Section::operator()(const TorsionSubgroup& h) const {
  if (h.log_order() > bound_)
    throw SectionOutOfRange("subgroup of order " + h.order().get_str() + " exceeds section bound p^" +
                            std::to_string(bound_));
  auto it = assignment_.find(h);
  if (it == assignment_.end()) throw SectionOutOfRange("subgroup outside the section's domain");
  return it->second;
}

Section canonical_section(const Integer& p, std::size_t n, unsigned bound) {
  Section s(p, n, bound, "canonical");
  for (auto& h : enumerate_subgroups_up_to(p, n, bound))
    s.assignment_.emplace(h, Isogeny(h.annihilator().matrix().transpose(), p));
  return s;
}

IntMatrix random_unimodular(std::size_t n, std::uint64_t seed) {
  SeededRng rng(seed);
  IntMatrix u = IntMatrix::identity(n);
  if (n == 1) {
    if (rng.below(2)) u(0, 0) = -1;
    return u;
  }
  const std::size_t moves = 3 * n;
  for (std::size_t step = 0; step < moves; ++step) {
    std::size_t i = rng.below(n);
    std::size_t j = rng.below(n - 1);
    if (j >= i) ++j;
    std::int64_t c = rng.range(-2, 2);
    // row_i += c * row_j
    for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
  }
  if (rng.below(2)) {
    std::size_t i = rng.below(n);
    for (std::size_t k = 0; k < n; ++k) u(i, k) = -u(i, k);
  }
  return u;
}

Section random_section(const Integer& p, std::size_t n, unsigned bound, std::uint64_t seed) {
  Section s(p, n, bound, "seeded:" + std::to_string(seed));
  s.seed_ = seed;
  SeededRng rng(seed);
  for (auto& h : enumerate_subgroups_up_to(p, n, bound)) {
    IntMatrix u = random_unimodular(n, rng.next());
    s.assignment_.emplace(h, Isogeny(u * h.annihilator().matrix().transpose(), p));
  }
  return s;
}

IntMatrix psi_dual(const Isogeny& phi) {
  const IntMatrix t = phi.dual();
  LatticeBasis b = hnf(t).basis;
  return solve_integer(b, t);
}

PAdicMatrix sigma_solve(const PAdicMatrix& gamma, const TorsionSubgroup& h, const Section& phi) {
  const TorsionSubgroup gh = image_subgroup(gamma, h);
  const IntMatrix lhs = phi(gh).entries() * gamma.entries();
  IntMatrix sigma = solve_right(phi(h).entries(), lhs);
  PAdicMatrix out(std::move(sigma), gamma.p());
  if (!out.is_unit()) throw NoIntegralSolution("sigma is not an automorphism");
  return out;
}

}  // namespace hkr
