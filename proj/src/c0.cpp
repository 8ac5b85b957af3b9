#include "hkr/c0.hpp"

#include <algorithm>

#include "hkr/errors.hpp"

namespace hkr {

C0SpacePtr C0Space::make(std::uint64_t p, std::size_t n, unsigned level) {
  return std::make_shared<const C0Space>(p, n, level);
}

C0Space::C0Space(std::uint64_t p, std::size_t n, unsigned level) : p_(p), n_(n), level_(level) {
  if (p < 2 || n == 0 || level == 0) throw InvalidArgument("C0 needs p >= 2, n >= 1, N >= 1");
  q_ = 1;
  for (unsigned i = 0; i < level; ++i) q_ *= p;
  long double sz = 1;
  for (std::size_t i = 0; i < n * n; ++i) sz *= static_cast<long double>(q_);
  if (sz > 1 << 20) throw TooLarge("C0 table of size " + std::to_string(static_cast<double>(sz)) + " is too large");
  size_ = static_cast<std::size_t>(sz);
}

std::vector<std::uint64_t> C0Space::point(std::size_t index) const {
  std::vector<std::uint64_t> e(n_ * n_);
  for (std::size_t k = e.size(); k-- > 0;) {
    e[k] = index % q_;
    index /= q_;
  }
  return e;
}

std::size_t C0Space::index(const std::vector<std::uint64_t>& entries) const {
  std::size_t idx = 0;
  for (auto x : entries) idx = idx * q_ + (x % q_);
  return idx;
}

IntMatrix C0Space::point_matrix(std::size_t index) const {
  auto e = point(index);
  IntMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = static_cast<unsigned long>(e[i * n_ + j]);
  return m;
}

std::vector<std::uint64_t> C0Space::reduced(const IntMatrix& a) const {
  if (a.rows() != n_ || a.cols() != n_) throw InvalidArgument("matrix does not match C0 rank");
  std::vector<std::uint64_t> r(n_ * n_);
  Integer q(static_cast<unsigned long>(q_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r[i * n_ + j] = mod_floor(a(i, j), q).get_ui();
  return r;
}

std::vector<std::uint32_t> C0Space::left_action(const IntMatrix& a) const {
  const auto am = reduced(a);
  std::vector<std::uint32_t> map(size_);
  std::vector<std::uint64_t> out(n_ * n_);
  for (std::size_t idx = 0; idx < size_; ++idx) {
    auto xi = point(idx);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < n_; ++k) s = (s + am[i * n_ + k] * xi[k * n_ + j]) % q_;
        out[i * n_ + j] = s;
      }
    map[idx] = static_cast<std::uint32_t>(index(out));
  }
  return map;
}

std::vector<std::uint32_t> C0Space::right_action(const IntMatrix& s) const {
  const auto sm = reduced(s);
  std::vector<std::uint32_t> map(size_);
  std::vector<std::uint64_t> out(n_ * n_);
  for (std::size_t idx = 0; idx < size_; ++idx) {
    auto xi = point(idx);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < n_; ++k) acc = (acc + xi[i * n_ + k] * sm[k * n_ + j]) % q_;
        out[i * n_ + j] = acc;
      }
    map[idx] = static_cast<std::uint32_t>(index(out));
  }
  return map;
}

bool C0Space::is_invertible(const IntMatrix& a) const {
  Integer d = determinant(a);
  return !mpz_divisible_ui_p(d.get_mpz_t(), p_);
}

const std::vector<IntMatrix>& C0Space::general_linear() const {
  std::call_once(gl_once_, [this] {
    for (std::size_t idx = 0; idx < size_; ++idx) {
      IntMatrix m = point_matrix(idx);
      if (is_invertible(m)) gl_.push_back(std::move(m));
    }
  });
  return gl_;
}

void require_same_space(const C0Space& a, const C0Space& b) {
  if (!(a == b))
    throw LevelMismatch("C0 spaces differ: (p,n,N) = (" + std::to_string(a.p()) + "," + std::to_string(a.n()) + "," +
                        std::to_string(a.level()) + ") vs (" + std::to_string(b.p()) + "," + std::to_string(b.n()) +
                        "," + std::to_string(b.level()) + ")");
}

C0Element::C0Element(C0SpacePtr space) : space_(std::move(space)), table_(space_->size(), Rational(0)) {}

C0Element::C0Element(C0SpacePtr space, std::vector<Rational> table) : space_(std::move(space)), table_(std::move(table)) {
  if (table_.size() != space_->size()) throw InvalidArgument("C0 table has the wrong size");
}

C0Element C0Element::constant(C0SpacePtr space, const Rational& c) {
  std::vector<Rational> t(space->size(), c);
  return C0Element(std::move(space), std::move(t));
}

C0Element C0Element::coordinate(C0SpacePtr space, std::size_t row, std::size_t col) {
  const std::size_t n = space->n();
  if (row >= n || col >= n) throw InvalidArgument("coordinate index out of range");
  std::vector<Rational> t(space->size());
  for (std::size_t idx = 0; idx < t.size(); ++idx)
    t[idx] = Rational(static_cast<unsigned long>(space->point(idx)[row * n + col]));
  return C0Element(std::move(space), std::move(t));
}

bool C0Element::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](const Rational& x) { return x == 0; });
}

C0Element C0Element::pullback(const std::vector<std::uint32_t>& map) const {
  std::vector<Rational> t(table_.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = table_[map[i]];
  return C0Element(space_, std::move(t));
}

void C0Element::check_compatible(const C0Element& o) const {
  if (!space_ || !o.space_) throw InvalidArgument("uninitialised C0 element");
  if (space_ != o.space_) require_same_space(*space_, *o.space_);
}

C0Element& C0Element::operator+=(const C0Element& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < table_.size(); ++i) table_[i] += o.table_[i];
  return *this;
}

C0Element& C0Element::operator-=(const C0Element& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < table_.size(); ++i) table_[i] -= o.table_[i];
  return *this;
}

C0Element& C0Element::operator*=(const C0Element& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < table_.size(); ++i) table_[i] *= o.table_[i];
  return *this;
}

C0Element& C0Element::operator*=(const Rational& c) {
  for (auto& x : table_) x *= c;
  return *this;
}

bool operator==(const C0Element& a, const C0Element& b) {
  if (!a.space_ || !b.space_) return a.space_ == b.space_;
  return *a.space_ == *b.space_ && a.table_ == b.table_;
}

}  // namespace hkr
