#include "hkr/formal_group.hpp"

#include <algorithm>
#include <sstream>

#include "hkr/errors.hpp"

namespace hkr {

CoefficientRing::CoefficientRing(Kind kind, std::uint64_t p, unsigned level) : kind_(kind), p_(p), level_(level) {
  if (kind != Kind::Rational && p < 2) throw InvalidArgument("coefficient ring needs a prime p >= 2");
  if (kind == Kind::Modular) {
    if (level == 0) throw InvalidArgument("Z/p^N needs N >= 1");
    modulus_ = ipow(Integer(static_cast<unsigned long>(p)), level);
  }
}

std::string CoefficientRing::str() const {
  switch (kind_) {
    case Kind::Rational:
      return "Q";
    case Kind::Local:
      return "Z_(" + std::to_string(p_) + ")";
    case Kind::Modular:
      return level_ == 1 ? "F_" + std::to_string(p_) : "Z/" + std::to_string(p_) + "^" + std::to_string(level_);
  }
  return "?";
}

Rational CoefficientRing::normalize(const Rational& c) const {
  if (kind_ == Kind::Rational) return c;
  if (mpz_divisible_ui_p(c.get_den_mpz_t(), p_))
    throw NonIntegralCoefficient("coefficient " + c.get_str() + " is not " + std::to_string(p_) + "-integral");
  if (kind_ == Kind::Local) return c;
  Integer inv;
  Integer den = c.get_den();
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t());
  return Rational(mod_floor(c.get_num() * inv, modulus_));
}

bool CoefficientRing::is_unit(const Rational& c) const {
  if (c == 0) return false;
  if (kind_ == Kind::Rational) return true;
  return !mpz_divisible_ui_p(c.get_num_mpz_t(), p_) && !mpz_divisible_ui_p(c.get_den_mpz_t(), p_);
}

// ---- MultiSeries

MultiSeries::MultiSeries(CoefficientRing ring, std::size_t vars, unsigned degree)
    : ring_(std::move(ring)), vars_(vars), degree_(degree) {
  if (vars == 0) throw InvalidArgument("series needs at least one variable");
  std::size_t size = 1;
  stride_.assign(vars, 0);
  for (std::size_t v = vars; v-- > 0;) {
    stride_[v] = size;
    size *= degree + 1;
    if (size > (1u << 22)) throw TooLarge("series box too large");
  }
  coeffs_.assign(size, Rational(0));
  total_.assign(size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t r = i;
    unsigned t = 0;
    for (std::size_t v = 0; v < vars; ++v) {
      t += static_cast<unsigned>(r / stride_[v]);
      r %= stride_[v];
    }
    total_[i] = t;
  }
}

MultiSeries MultiSeries::variable(CoefficientRing ring, std::size_t vars, unsigned degree, std::size_t which) {
  MultiSeries s(std::move(ring), vars, degree);
  if (which >= vars) throw InvalidArgument("variable index out of range");
  if (degree >= 1) s.coeffs_[s.stride_[which]] = s.ring_.normalize(1);
  return s;
}

MultiSeries MultiSeries::constant(CoefficientRing ring, std::size_t vars, unsigned degree, const Rational& c) {
  MultiSeries s(std::move(ring), vars, degree);
  s.coeffs_[0] = s.ring_.normalize(c);
  return s;
}

std::size_t MultiSeries::index(const std::vector<unsigned>& e) const {
  if (e.size() != vars_) throw InvalidArgument("exponent vector has the wrong length");
  std::size_t idx = 0;
  unsigned t = 0;
  for (std::size_t v = 0; v < vars_; ++v) {
    idx += e[v] * stride_[v];
    t += e[v];
  }
  if (t > degree_) throw InvalidArgument("monomial beyond the truncation degree");
  return idx;
}

const Rational& MultiSeries::coeff(const std::vector<unsigned>& e) const { return coeffs_[index(e)]; }

void MultiSeries::set_coeff(const std::vector<unsigned>& e, const Rational& c) { coeffs_[index(e)] = ring_.normalize(c); }

bool MultiSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::vector<std::pair<std::vector<unsigned>, Rational>> MultiSeries::terms() const {
  std::vector<std::pair<std::vector<unsigned>, Rational>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    std::vector<unsigned> e(vars_);
    std::size_t r = i;
    for (std::size_t v = 0; v < vars_; ++v) {
      e[v] = static_cast<unsigned>(r / stride_[v]);
      r %= stride_[v];
    }
    out.emplace_back(std::move(e), coeffs_[i]);
  }
  return out;
}

void MultiSeries::check_compatible(const MultiSeries& o) const {
  if (!(ring_ == o.ring_) || vars_ != o.vars_ || degree_ != o.degree_)
    throw InvalidArgument("series live in different rings");
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (o.coeffs_[i] != 0) coeffs_[i] = ring_.normalize(coeffs_[i] + o.coeffs_[i]);
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (o.coeffs_[i] != 0) coeffs_[i] = ring_.normalize(coeffs_[i] - o.coeffs_[i]);
  return *this;
}

MultiSeries& MultiSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_)
    if (x != 0) x = ring_.normalize(x * c);
  return *this;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  a.check_compatible(b);
  MultiSeries out(a.ring_, a.vars_, a.degree_);
  std::vector<std::size_t> nb;
  for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
    if (b.coeffs_[j] != 0) nb.push_back(j);
  // no carries: each coordinate of a sum of total degree <= D stays <= D
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    const unsigned ti = a.total_[i];
    for (std::size_t j : nb)
      if (ti + b.total_[j] <= a.degree_) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  for (auto& x : out.coeffs_)
    if (x != 0) x = out.ring_.normalize(x);
  return out;
}

bool operator==(const MultiSeries& a, const MultiSeries& b) {
  return a.ring_ == b.ring_ && a.vars_ == b.vars_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

MultiSeries MultiSeries::reduce(const CoefficientRing& ring) const {
  MultiSeries out(ring, vars_, degree_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.coeffs_[i] = ring.normalize(coeffs_[i]);
  return out;
}

MultiSeries MultiSeries::compose(const std::vector<MultiSeries>& args) const {
  if (args.size() != vars_) throw InvalidArgument("wrong number of arguments to compose");
  const auto& proto = args.front();
  for (const auto& a : args) {
    a.check_compatible(proto);
    if (a.coeffs_[0] != 0) throw InvalidArgument("substituted series must have no constant term");
    if (!(a.ring_ == ring_) || a.degree_ != degree_) throw InvalidArgument("substituted series in another ring");
  }
  // powers[v][e] = args[v]^e
  std::vector<std::vector<MultiSeries>> powers(vars_);
  for (std::size_t v = 0; v < vars_; ++v) {
    powers[v].push_back(MultiSeries::constant(proto.ring_, proto.vars_, degree_, 1));
    for (unsigned e = 1; e <= degree_; ++e) powers[v].push_back(powers[v].back() * args[v]);
  }
  // group on the first exponent: sum_i a_0^i * (sum over the rest)
  std::vector<MultiSeries> inner(degree_ + 1, MultiSeries(proto.ring_, proto.vars_, degree_));
  std::vector<bool> used(degree_ + 1, false);
  for (const auto& [e, c] : terms()) {
    MultiSeries term = powers[1 % vars_][0] * c;
    for (std::size_t v = 1; v < vars_; ++v)
      if (e[v] > 0) term = vars_ == 2 ? powers[v][e[v]] * c : term * powers[v][e[v]];
    inner[e[0]] += term;
    used[e[0]] = true;
  }
  MultiSeries out(proto.ring_, proto.vars_, degree_);
  for (unsigned i = 0; i <= degree_; ++i)
    if (used[i]) out += i == 0 ? inner[i] : powers[0][i] * inner[i];
  return out;
}

// ---- TruncatedSeries

TruncatedSeries::TruncatedSeries(CoefficientRing ring, unsigned degree)
    : ring_(std::move(ring)), coeffs_(degree + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(CoefficientRing ring, std::vector<Rational> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("series needs at least one coefficient");
  for (auto& c : coeffs_) c = ring_.normalize(c);
}

TruncatedSeries TruncatedSeries::x(CoefficientRing ring, unsigned degree) { return monomial(std::move(ring), degree, 1); }

TruncatedSeries TruncatedSeries::monomial(CoefficientRing ring, unsigned degree, unsigned k, const Rational& c) {
  TruncatedSeries s(std::move(ring), degree);
  if (k <= degree) s.set(k, c);
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (!(ring_ == o.ring_) || degree() != o.degree()) throw InvalidArgument("series live in different rings");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = ring_.normalize(coeffs_[i] + o.coeffs_[i]);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (!(ring_ == o.ring_) || degree() != o.degree()) throw InvalidArgument("series live in different rings");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = ring_.normalize(coeffs_[i] - o.coeffs_[i]);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x = ring_.normalize(x * c);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!(a.ring_ == b.ring_) || a.degree() != b.degree()) throw InvalidArgument("series live in different rings");
  const unsigned d = a.degree();
  std::vector<Rational> c(d + 1, Rational(0));
  for (unsigned i = 0; i <= d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (unsigned j = 0; i + j <= d; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TruncatedSeries(a.ring_, std::move(c));
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& g) const {
  if (g.coeffs_[0] != 0) throw InvalidArgument("inner series must have no constant term");
  if (!(ring_ == g.ring_) || degree() != g.degree()) throw InvalidArgument("series live in different rings");
  TruncatedSeries acc(ring_, degree());
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * g;
    acc.coeffs_[0] = ring_.normalize(acc.coeffs_[0] + coeffs_[i]);
  }
  return acc;
}

TruncatedSeries TruncatedSeries::reversion() const {
  const unsigned d = degree();
  if (coeffs_[0] != 0) throw InvalidArgument("reversion needs f(0) = 0");
  if (d == 0) return *this;
  if (!ring_.is_unit(coeffs_[1])) throw NoUnitCoefficient("reversion needs a unit linear coefficient");
  // solve f(g(x)) = x one degree at a time
  Rational inv = ring_.normalize(1 / coeffs_[1]);
  TruncatedSeries g = x(ring_, d) * inv;
  for (unsigned k = 2; k <= d; ++k) {
    Rational err = compose(g).coeffs_[k];
    g.coeffs_[k] = ring_.normalize(g.coeffs_[k] - err * inv);
  }
  return g;
}

TruncatedSeries TruncatedSeries::reduce(const CoefficientRing& ring) const { return TruncatedSeries(ring, coeffs_); }

MultiSeries TruncatedSeries::as_multi() const {
  MultiSeries m(ring_, 1, degree());
  for (unsigned i = 0; i <= degree(); ++i) m.set_coeff({i}, coeffs_[i]);
  return m;
}

TruncatedSeries TruncatedSeries::from_multi(const MultiSeries& m) {
  if (m.vars() != 1) throw InvalidArgument("not a univariate series");
  std::vector<Rational> c(m.degree() + 1);
  for (unsigned i = 0; i <= m.degree(); ++i) c[i] = m.coeff({i});
  return TruncatedSeries(m.ring(), std::move(c));
}

std::string TruncatedSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].get_str();
    if (i > 0) os << "*x^" << i;
  }
  if (first) os << "0";
  os << " + O(x^" << coeffs_.size() << ")";
  return os.str();
}

// ---- FGL

FGL::FGL(MultiSeries law, std::string provenance) : law_(std::move(law)), provenance_(std::move(provenance)) {
  if (law_.vars() != 2) throw InvalidArgument("a formal group law has two variables");
  const unsigned d = law_.degree();
  for (unsigned i = 0; i <= d; ++i) {
    Rational expect = i == 1 ? Rational(1) : Rational(0);
    if (law_.coeff({i, 0}) != law_.ring().normalize(expect) || law_.coeff({0, i}) != law_.ring().normalize(expect))
      throw InvalidArgument("F(x,0) = x or F(0,y) = y fails");
    for (unsigned j = 0; i + j <= d; ++j)
      if (law_.coeff({i, j}) != law_.coeff({j, i})) throw InvalidArgument("F is not commutative");
  }
}

FGL FGL::additive(const CoefficientRing& ring, unsigned degree) {
  auto law = MultiSeries::variable(ring, 2, degree, 0) + MultiSeries::variable(ring, 2, degree, 1);
  return FGL(std::move(law), "additive");
}

FGL FGL::multiplicative(const CoefficientRing& ring, unsigned degree) {
  auto x = MultiSeries::variable(ring, 2, degree, 0);
  auto y = MultiSeries::variable(ring, 2, degree, 1);
  return FGL(x + y + x * y, "multiplicative");
}

TruncatedSeries honda_logarithm(std::uint64_t p, unsigned height, unsigned degree) {
  if (height == 0) throw InvalidArgument("height must be positive");
  TruncatedSeries log(CoefficientRing::rationals(), degree);
  const std::uint64_t step = static_cast<std::uint64_t>(ipow(Integer(static_cast<unsigned long>(p)), height).get_ui());
  Integer denom = 1;
  for (std::uint64_t e = 1; e <= degree; e *= step) {
    log.set(static_cast<unsigned>(e), Rational(1) / Rational(denom));
    denom *= static_cast<unsigned long>(p);
    if (step == 1) break;
  }
  return log;
}

FGL FGL::honda(std::uint64_t p, unsigned height, unsigned degree, const CoefficientRing& ring) {
  const auto q = CoefficientRing::rationals();
  auto log = honda_logarithm(p, height, degree);
  auto exp = log.reversion();
  // log(x) + log(y) as a bivariate series
  MultiSeries lxy(q, 2, degree);
  for (const auto& [e, c] : log.as_multi().terms()) {
    lxy.set_coeff({e[0], 0}, c);
    lxy.set_coeff({0, e[0]}, c);
  }
  auto law = exp.as_multi().compose({lxy});
  // p-integrality is the whole point of the construction
  law = law.reduce(CoefficientRing::local(p));
  return FGL(law.reduce(ring), "honda(" + std::to_string(height) + ")");
}

TruncatedSeries FGL::operator()(const TruncatedSeries& a, const TruncatedSeries& b) const {
  if (a.degree() != degree() || b.degree() != degree()) throw InvalidArgument("series degree differs from the law's");
  return TruncatedSeries::from_multi(law_.compose({a.as_multi(), b.as_multi()}));
}

MultiSeries FGL::associativity_residual() const {
  const auto& r = ring();
  const unsigned d = degree();
  auto x = MultiSeries::variable(r, 3, d, 0);
  auto y = MultiSeries::variable(r, 3, d, 1);
  auto z = MultiSeries::variable(r, 3, d, 2);
  auto fxy = law_.compose({x, y});
  auto fyz = law_.compose({y, z});
  return law_.compose({fxy, z}) - law_.compose({x, fyz});
}

FGL FGL::reduce(const CoefficientRing& ring) const { return FGL(law_.reduce(ring), provenance_); }

unsigned default_truncation(std::uint64_t p, unsigned height) {
  return static_cast<unsigned>(ipow(Integer(static_cast<unsigned long>(p)), 2 * height).get_ui()) + 1;
}

TruncatedSeries i_series(const FGL& f, std::uint64_t i) {
  auto x = TruncatedSeries::x(f.ring(), f.degree());
  TruncatedSeries acc(f.ring(), f.degree());
  for (std::uint64_t k = 0; k < i; ++k) acc = f(acc, x);
  return acc;
}

unsigned weierstrass_degree(const TruncatedSeries& g) {
  if (g[0] != 0) throw InvalidArgument("weierstrass_degree needs g(0) = 0");
  for (unsigned d = 1; d <= g.degree(); ++d)
    if (g.ring().is_unit(g[d])) return d;
  throw NoUnitCoefficient("no unit coefficient up to degree " + std::to_string(g.degree()) + "; raise D");
}

QuotientRing quotient_ring(const FGL& f, unsigned k) { return quotient_ring(f, std::vector<unsigned>{k}); }

QuotientRing quotient_ring(const FGL& f, const std::vector<unsigned>& ks) {
  if (f.ring().kind() == CoefficientRing::Kind::Rational) throw InvalidArgument("quotient ring needs a p-local ring");
  const std::uint64_t p = f.ring().p();
  std::vector<unsigned> ranks;
  for (unsigned k : ks) {
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < k; ++i) pk *= p;
    ranks.push_back(weierstrass_degree(i_series(f, pk)));
  }
  QuotientRing out{1, {}};
  for (unsigned r : ranks) out.rank *= r;
  if (out.rank > (1u << 16)) throw TooLarge("quotient ring basis too large to list");
  std::vector<unsigned> e(ks.size(), 0);
  for (std::uint64_t i = 0; i < out.rank; ++i) {
    out.basis.push_back(e);
    for (std::size_t v = ks.size(); v-- > 0;) {
      if (++e[v] < ranks[v]) break;
      e[v] = 0;
    }
  }
  return out;
}

}  // namespace hkr
