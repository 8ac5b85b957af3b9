#include "hkr/bijections.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hkr/errors.hpp"

namespace hkr {

std::vector<Orbit> lambda_orbits(const std::vector<Permutation>& generators, std::size_t degree) {
  const std::size_t n = generators.size();
  std::vector<bool> done(degree, false);
  std::vector<Orbit> out;
  for (std::uint32_t base = 0; base < degree; ++base) {
    if (done[base]) continue;
    // Breadth-first search recording a word vector for each point; every edge
    // that closes a cycle yields a Schreier generator of the stabilizer.
    std::map<std::uint32_t, std::vector<long>> coord;
    coord[base] = std::vector<long>(n, 0);
    std::vector<std::uint32_t> queue{base};
    std::vector<std::vector<long>> relations;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::uint32_t x = queue[qi];
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint32_t y = generators[k][x];
        std::vector<long> v = coord[x];
        v[k] += 1;
        auto it = coord.find(y);
        if (it == coord.end()) {
          coord.emplace(y, std::move(v));
          queue.push_back(y);
        } else {
          for (std::size_t i = 0; i < n; ++i) v[i] -= it->second[i];
          if (std::any_of(v.begin(), v.end(), [](long c) { return c != 0; })) relations.push_back(std::move(v));
        }
      }
    }
    IntMatrix gens(n, relations.size());
    for (std::size_t j = 0; j < relations.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) gens(i, j) = relations[j][i];
    Orbit orbit{{}, hnf_span(gens)};
    for (const auto& [pt, v] : coord) {
      orbit.points.push_back(pt);
      done[pt] = true;
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

namespace {

std::vector<Permutation> permutations_of(const FiniteGroup& sym, const Tuple& t) {
  std::vector<Permutation> perms;
  for (Element e : t) perms.push_back(permutation_of(sym, e));
  return perms;
}

std::uint32_t degree_of(const FiniteGroup& sym) {
  const auto* info = sym.symmetric_info();
  if (!info) throw InvalidArgument(sym.name() + " is not a symmetric group");
  return info->m;
}

// All reduced representatives of Z^n / L, in lexicographic order (0 first).
std::vector<std::vector<Integer>> coset_representatives(const LatticeBasis& l) {
  const std::size_t n = l.dim();
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> v(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.push_back(v);
      return;
    }
    for (Integer x = 0; x < l.matrix()(i, i); ++x) {
      v[i] = x;
      rec(i + 1);
    }
    v[i] = 0;
  };
  rec(0);
  return out;
}

// Builds the Lambda-set  coprod_i Lambda / Lambda_i  (optionally with G-labels
// alpha_i on the stabilizers) and returns generator images as
// (permutation, label per point).
struct LabelledAction {
  std::vector<Permutation> perms;
  std::vector<std::vector<Element>> labels;
};

LabelledAction build_action(const std::vector<std::pair<LatticeBasis, const Tuple*>>& blocks, std::size_t n,
                            const FiniteGroup* base) {
  std::size_t degree = 0;
  std::vector<std::vector<std::vector<Integer>>> reps;
  for (const auto& [lat, alpha] : blocks) {
    reps.push_back(coset_representatives(lat));
    degree += reps.back().size();
  }
  LabelledAction act;
  act.perms.assign(n, Permutation(degree));
  act.labels.assign(n, std::vector<Element>(degree, 0));
  std::size_t offset = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const LatticeBasis& lat = blocks[b].first;
    const Tuple* alpha = blocks[b].second;
    std::map<std::vector<Integer>, std::uint32_t> where;
    for (std::size_t r = 0; r < reps[b].size(); ++r) where[reps[b][r]] = static_cast<std::uint32_t>(offset + r);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < reps[b].size(); ++r) {
        auto v = reps[b][r];
        v[k] += 1;
        std::vector<Integer> c;
        auto red = lat.reduce(v, &c);
        act.perms[k][offset + r] = where.at(red);
        if (alpha) {
          Element label = 0;
          for (std::size_t j = 0; j < n; ++j) label = base->mul(label, base->pow((*alpha)[j], c[j]));
          act.labels[k][offset + r] = label;
        }
      }
    offset += reps[b].size();
  }
  return act;
}

}  // namespace

SumOfSubgroups symm_class_to_sum(const HomClasses& sym_classes, const TupleClass& alpha) {
  const FiniteGroup& sym = *sym_classes.group();
  sym_classes.index_of(alpha.rep);  // validates
  const Integer p(static_cast<unsigned long>(sym_classes.p()));
  std::vector<TorsionSubgroup> summands;
  for (auto& orbit : lambda_orbits(permutations_of(sym, alpha.rep), degree_of(sym)))
    summands.emplace_back(p, orbit.stabilizer);
  return SumOfSubgroups(std::move(summands));
}

TupleClass sum_to_symm_class(const HomClasses& sym_classes, const SumOfSubgroups& sum) {
  const FiniteGroup& sym = *sym_classes.group();
  if (sum.total() != degree_of(sym))
    throw InvalidArgument("sum of total " + std::to_string(sum.total()) + " does not match " + sym.name());
  std::vector<std::pair<LatticeBasis, const Tuple*>> blocks;
  for (const auto& h : sum.summands()) blocks.emplace_back(h.annihilator(), nullptr);
  auto act = build_action(blocks, sym_classes.n(), nullptr);
  Tuple t;
  for (const auto& perm : act.perms) t.push_back(symmetric_element(sym, perm));
  return sym_classes[sym_classes.index_of(t)];
}

DecoratedSum::DecoratedSum(std::vector<DecoratedSummand> summands) : summands_(std::move(summands)) {
  std::sort(summands_.begin(), summands_.end());
  for (const auto& s : summands_) total_ += s.subgroup.order().get_ui();
}

SumOfSubgroups DecoratedSum::underlying() const {
  std::vector<TorsionSubgroup> hs;
  for (const auto& s : summands_) hs.push_back(s.subgroup);
  return SumOfSubgroups(std::move(hs));
}

DecoratedSum wreath_class_to_decorated(const HomClasses& wreath_classes, const HomClasses& base_classes,
                                       const TupleClass& beta) {
  const FiniteGroup& w = *wreath_classes.group();
  const auto* info = w.wreath_info();
  if (!info) throw InvalidArgument(w.name() + " is not a wreath product");
  if (info->base != base_classes.group()) throw InvalidArgument("base classes belong to a different group");
  wreath_classes.index_of(beta.rep);
  const Integer p(static_cast<unsigned long>(wreath_classes.p()));

  std::vector<Permutation> perms;
  for (Element e : beta.rep) perms.push_back(permutation_of(*info->top, split_wreath(w, e).top));
  std::vector<DecoratedSummand> out;
  for (auto& orbit : lambda_orbits(perms, info->m)) {
    // alpha_i(b_j) = G-coordinate at the base point of beta(b_j).
    const std::uint32_t x = orbit.points.front();
    Tuple words = precompose_tuple(w, beta.rep, orbit.stabilizer.matrix());
    Tuple alpha;
    for (Element e : words) alpha.push_back(split_wreath(w, e).labels[x]);
    out.push_back({TorsionSubgroup(p, orbit.stabilizer), base_classes[base_classes.index_of(alpha)]});
  }
  return DecoratedSum(std::move(out));
}

TupleClass decorated_to_wreath_class(const HomClasses& wreath_classes, const HomClasses& base_classes,
                                     const DecoratedSum& sum) {
  const FiniteGroup& w = *wreath_classes.group();
  const auto* info = w.wreath_info();
  if (!info) throw InvalidArgument(w.name() + " is not a wreath product");
  if (sum.total() != info->m) throw InvalidArgument("decorated sum does not match the wreath degree");
  std::vector<std::pair<LatticeBasis, const Tuple*>> blocks;
  for (const auto& s : sum.summands()) {
    base_classes.index_of(s.decoration.rep);
    blocks.emplace_back(s.subgroup.annihilator(), &s.decoration.rep);
  }
  auto act = build_action(blocks, wreath_classes.n(), info->base.get());
  Tuple t;
  for (std::size_t k = 0; k < act.perms.size(); ++k)
    t.push_back(join_wreath(w, WreathElement{act.labels[k], symmetric_element(*info->top, act.perms[k])}));
  return wreath_classes[wreath_classes.index_of(t)];
}

std::vector<DecoratedSum> enumerate_decorated_sums(const HomClasses& base_classes, std::uint64_t m) {
  const Integer p(static_cast<unsigned long>(base_classes.p()));
  const std::size_t n = base_classes.n();
  std::vector<DecoratedSummand> atoms;
  unsigned bound = 0;
  while (m > 0 && ipow(p, bound + 1) <= m) ++bound;
  for (auto& h : enumerate_subgroups_up_to(p, n, bound))
    for (const auto& c : base_classes.classes()) atoms.push_back({h, c});
  std::sort(atoms.begin(), atoms.end());
  std::vector<DecoratedSum> out;
  std::vector<DecoratedSummand> chosen;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t from, std::uint64_t left) {
    if (left == 0) {
      out.emplace_back(chosen);
      return;
    }
    for (std::size_t i = from; i < atoms.size(); ++i) {
      std::uint64_t ord = atoms[i].subgroup.order().get_ui();
      if (ord > left) continue;
      chosen.push_back(atoms[i]);
      rec(i, left - ord);
      chosen.pop_back();
    }
  };
  if (m > 0) rec(0, m);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hkr
