#pragma once

// Brute-force reference computations for the tests. Deliberately written
// without the library: plain permutations, explicit subgroup closure, dense
// rational series.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline std::vector<Perm> all_perms(int m) {
  Perm p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Perm mul(const Perm& a, const Perm& b) {  // a after b
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline bool is_p_power(std::uint64_t x, std::uint64_t p) {
  while (x % p == 0) x /= p;
  return x == 1;
}

inline std::uint64_t perm_order(const Perm& a) {
  std::uint64_t o = 1;
  std::vector<bool> seen(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = a[j]) seen[j] = true, ++len;
    o = std::lcm(o, len);
  }
  return o;
}

/// |hom(Z^n, S_m)/conj| restricted to p-power images, by Burnside:
/// (1/m!) * #{(t_1..t_n, g) pairwise commuting, t_i p-power}.
inline std::uint64_t commuting_tuple_classes(int m, int n, std::uint64_t p) {
  auto perms = all_perms(m);
  std::vector<std::size_t> ppow;
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (is_p_power(perm_order(perms[i]), p)) ppow.push_back(i);
  auto commute = [&](std::size_t a, std::size_t b) {
    return mul(perms[a], perms[b]) == mul(perms[b], perms[a]);
  };
  std::uint64_t total = 0;
  std::vector<std::size_t> tuple;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      for (std::size_t g = 0; g < perms.size(); ++g) {
        bool ok = true;
        for (auto t : tuple) ok = ok && commute(g, t);
        total += ok;
      }
      return;
    }
    for (auto c : ppow) {
      bool ok = true;
      for (auto t : tuple) ok = ok && commute(c, t);
      if (!ok) continue;
      tuple.push_back(c);
      self(self, depth + 1);
      tuple.pop_back();
    }
  };
  rec(rec, 0);
  return total / perms.size();
}

/// Number of transitive commuting p-power n-tuples in S_m up to conjugacy (Burnside again).
inline std::uint64_t transitive_tuple_classes(int m, int n, std::uint64_t p) {
  auto perms = all_perms(m);
  std::vector<std::size_t> ppow;
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (is_p_power(perm_order(perms[i]), p)) ppow.push_back(i);
  auto commute = [&](std::size_t a, std::size_t b) { return mul(perms[a], perms[b]) == mul(perms[b], perms[a]); };
  auto transitive = [&](const std::vector<std::size_t>& t) {
    std::vector<bool> seen(m, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto i : t) {
        int y = perms[i][x];
        if (!seen[y]) seen[y] = true, stack.push_back(y);
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  std::uint64_t total = 0;
  std::vector<std::size_t> tuple;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      if (!transitive(tuple)) return;
      for (std::size_t g = 0; g < perms.size(); ++g) {
        bool ok = true;
        for (auto t : tuple) ok = ok && commute(g, t);
        total += ok;
      }
      return;
    }
    for (auto c : ppow) {
      bool ok = true;
      for (auto t : tuple) ok = ok && commute(c, t);
      if (!ok) continue;
      tuple.push_back(c);
      self(self, depth + 1);
      tuple.pop_back();
    }
  };
  rec(rec, 0);
  return total / perms.size();
}

/// Subgroups of order p^k of (Z/p^k)^n (which contains every subgroup of
/// (Q_p/Z_p)^n of that order), by closing all n-element generating sets.
inline std::uint64_t subgroups_of_order(std::uint64_t p, int n, int k) {
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) size *= q;
  auto add = [&](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0, scale = 1;
    for (int i = 0; i < n; ++i) {
      r += ((a % q + b % q) % q) * scale;
      a /= q, b /= q, scale *= q;
    }
    return r;
  };
  std::set<std::vector<std::uint64_t>> found;
  std::vector<std::uint64_t> gens(n, 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      std::set<std::uint64_t> h = {0};
      std::vector<std::uint64_t> frontier = {0};
      while (!frontier.empty()) {
        auto x = frontier.back();
        frontier.pop_back();
        for (auto g : gens) {
          auto y = add(x, g);
          if (h.insert(y).second) frontier.push_back(y);
        }
      }
      if (h.size() == q) found.insert(std::vector<std::uint64_t>(h.begin(), h.end()));
      return;
    }
    for (std::uint64_t g = 0; g < size; ++g) {
      gens[depth] = g;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return found.size();
}

/// Multisets of subgroups with orders summing to m, given the subgroup counts.
inline std::uint64_t sums_count(std::uint64_t p, int n, std::uint64_t m) {
  std::vector<std::uint64_t> dp(m + 1, 0);
  dp[0] = 1;
  int k = 0;
  for (std::uint64_t w = 1; w <= m; w *= p, ++k) {
    std::uint64_t types = subgroups_of_order(p, n, k);
    for (std::uint64_t t = 0; t < types; ++t)
      for (std::uint64_t s = w; s <= m; ++s) dp[s] += dp[s - w];
  }
  return dp[m];
}

// ---- dense rational series, truncated at degree d

using Series = std::vector<mpq_class>;

inline Series series_mul(const Series& a, const Series& b) {
  Series c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// a(b(x)) by summing powers.
inline Series series_compose(const Series& a, const Series& b) {
  Series out(a.size(), 0), pw(a.size(), 0);
  pw[0] = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out[j] += a[i] * pw[j];
    pw = series_mul(pw, b);
  }
  return out;
}

/// Compositional inverse of a series with a = x + ..., by undetermined coefficients.
inline Series series_inverse(const Series& a) {
  Series g(a.size(), 0);
  g[1] = 1 / a[1];
  for (std::size_t k = 2; k < a.size(); ++k) {
    auto c = series_compose(a, g);
    g[k] -= c[k] / a[1];
  }
  return g;
}

/// [p](x) = exp(p log x) for log = sum x^{p^{ni}}/p^i, over Q.
inline Series honda_p_series(std::uint64_t p, int height, int d) {
  Series log(d + 1, 0);
  mpz_class step = 1;
  for (int i = 0; i < height; ++i) step *= static_cast<unsigned long>(p);
  mpz_class e = 1, den = 1;
  while (e <= d) {
    log[e.get_ui()] = mpq_class(1) / mpq_class(den);
    e *= step;
    den *= static_cast<unsigned long>(p);
  }
  Series scaled = log;
  for (auto& c : scaled) c *= static_cast<unsigned long>(p);
  return series_compose(series_inverse(log), scaled);
}

/// Counts |{x in Z^n/MZ^n : p^j x = 0}| for j = 0..jmax, for a nonsingular n x n M with small det.
inline std::vector<std::uint64_t> killed_counts(const std::vector<std::vector<long>>& m, std::uint64_t p, int jmax) {
  const int n = static_cast<int>(m.size());
  // det and adjugate by cofactor expansion
  auto minor = [](const std::vector<std::vector<long>>& a, int r, int c) {
    std::vector<std::vector<long>> out;
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
      if (i == r) continue;
      std::vector<long> row;
      for (int j = 0; j < static_cast<int>(a.size()); ++j)
        if (j != c) row.push_back(a[i][j]);
      out.push_back(row);
    }
    return out;
  };
  auto det = [&](auto&& self, const std::vector<std::vector<long>>& a) -> long {
    if (a.size() == 1) return a[0][0];
    long s = 0;
    for (int c = 0; c < static_cast<int>(a.size()); ++c)
      s += (c % 2 ? -1 : 1) * a[0][c] * self(self, minor(a, 0, c));
    return s;
  };
  const long d = std::labs(det(det, m));
  std::vector<std::vector<long>> adj(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) adj[j][i] = ((i + j) % 2 ? -1 : 1) * (n == 1 ? 1 : det(det, minor(m, i, j)));
  // x in (Z/d)^n lies in M Z^n iff adj(M) x = 0 mod d
  std::vector<std::uint64_t> counts;
  std::uint64_t pj = 1;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= d;
  long kernel = total / d;  // |M Z^n / d Z^n|
  for (int j = 0; j <= jmax; ++j, pj *= p) {
    std::uint64_t c = 0;
    std::vector<long> x(n, 0);
    for (long idx = 0; idx < total; ++idx) {
      long r = idx;
      for (int i = 0; i < n; ++i) x[i] = r % d, r /= d;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        long s = 0;
        for (int k = 0; k < n; ++k) s += adj[i][k] * static_cast<long>(pj % static_cast<std::uint64_t>(d)) * x[k];
        ok = ((s % d) + d) % d == 0;
      }
      c += ok;
    }
    counts.push_back(c / kernel);
  }
  return counts;
}

}  // namespace oracle
