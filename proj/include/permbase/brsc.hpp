#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "permbase/errors.hpp"
#include "permbase/galois.hpp"
#include "permbase/group.hpp"
#include "permbase/moore.hpp"

namespace permbase {

// The boolean representable simplicial complex of a permutation group: a set
// is independent when some enumeration of it is irredundant, i.e. each point
// is moved by the pointwise stabilizer of its predecessors, and a base is a
// set with trivial pointwise stabilizer.

struct IrredundanceWitness {
  std::vector<unsigned> order;  // x_1, ..., x_k
  // |G| = |G_{}| > |G_{x1}| > ... > |G_{x1..xk}|; length order.size() + 1.
  std::vector<std::uint64_t> stabilizer_orders;
};

struct BaseReport {
  PointSet base;
  unsigned size = 0;
  bool irredundant = false;
  std::optional<IrredundanceWitness> witness;
};

namespace detail {

// Order and fixed-point set of the pointwise stabilizer of a set.
struct StabView {
  std::uint64_t order = 0;
  PointSet fixed;
};

inline StabView stab_view(const PermutationGroup& G, const PointSet& S,
                          const SearchLimits& limits) {
  Subgroup H = pointwise_stabilizer(G, S, limits);
  return {H.order(), fixed_points(G, H)};
}

}  // namespace detail

inline std::optional<IrredundanceWitness> is_irredundant_sequence(
    const PermutationGroup& G, const std::vector<unsigned>& seq,
    const SearchLimits& limits = {}) {
  PointSet chosen(G.degree());
  for (unsigned x : seq) {
    if (x >= G.degree()) throw IndexOutOfRange("point " + std::to_string(x + 1) + " out of range");
    if (chosen.contains(x)) throw DuplicateEntries("repeated point in sequence");
    chosen.add(x);
  }
  IrredundanceWitness witness;
  PointSet prefix(G.degree());
  detail::StabView view = detail::stab_view(G, prefix, limits);
  witness.stabilizer_orders.push_back(view.order);
  for (unsigned x : seq) {
    if (view.fixed.contains(x)) return std::nullopt;  // x stabilized by predecessors
    prefix.add(x);
    view = detail::stab_view(G, prefix, limits);
    witness.order.push_back(x);
    witness.stabilizer_orders.push_back(view.order);
  }
  return witness;
}

// Some enumeration of Y is irredundant. Candidates are tried in ascending
// point order and failed prefix sets are memoized, so the witness reported
// is the lexicographically least irredundant enumeration.
inline std::optional<IrredundanceWitness> is_independent(const PermutationGroup& G,
                                                         const PointSet& Y,
                                                         const SearchLimits& limits = {}) {
  if (Y.width() != G.degree()) throw DegreeMismatch("point set width != group degree");
  std::unordered_set<PointSet, PointSetHash> failed;
  std::vector<unsigned> order;
  std::function<bool(const PointSet&)> dfs = [&](const PointSet& chosen) -> bool {
    if (chosen == Y) return true;
    PointSet fixed = detail::stab_view(G, chosen, limits).fixed;
    for (unsigned y : (Y - chosen).points()) {
      if (fixed.contains(y)) continue;
      PointSet next = chosen;
      next.add(y);
      if (failed.count(next)) continue;
      order.push_back(y);
      if (dfs(next)) return true;
      order.pop_back();
      failed.insert(next);
    }
    return false;
  };
  if (!dfs(PointSet(G.degree()))) return std::nullopt;
  return is_irredundant_sequence(G, order, limits);
}

inline bool is_base(const PermutationGroup& G, const PointSet& B,
                    const SearchLimits& limits = {}) {
  if (B.width() != G.degree()) throw DegreeMismatch("point set width != group degree");
  return pointwise_stabilizer(G, B, limits).order() == 1;
}

// The two routes of the base criterion: (B is a base, Cl(B) is the whole
// domain). They agree for every group without trivial orbits.
inline std::pair<bool, bool> closure_base_equivalence(const PermutationGroup& G,
                                                      const PointSet& B,
                                                      const SearchLimits& limits = {}) {
  require_no_trivial_orbits(G);
  return {is_base(G, B, limits), closure(G, B, limits).is_full()};
}

enum class BaseEnumMode { all, count, extremes };

struct BaseEnumeration {
  bool complete = true;  // false: node budget exhausted, results partial
  std::uint64_t nodes = 0;
  std::uint64_t count = 0;
  unsigned min_size = 0;
  unsigned max_size = 0;
  std::vector<BaseReport> bases;  // canonical order; filled in mode `all`
};

// Depth-first search over irredundant sequences: the next point must be
// moved by the stabilizer of the prefix, and a sequence is complete exactly
// when that stabilizer is trivial. Prefix sets are explored once; the first
// visit of a base set happens along its lexicographically least irredundant
// order, which is kept as the witness.
inline BaseEnumeration enumerate_irredundant_bases(const PermutationGroup& G,
                                                   BaseEnumMode mode,
                                                   const SearchLimits& limits = {}) {
  BaseEnumeration result;
  std::map<std::vector<unsigned>, IrredundanceWitness> found;  // points -> witness
  std::unordered_set<PointSet, PointSetHash> explored;
  bool aborted = false;
  std::vector<unsigned> order;
  std::vector<std::uint64_t> orders_along;
  std::function<void(const PointSet&, const detail::StabView&)> dfs =
      [&](const PointSet& chosen, const detail::StabView& view) {
        if (aborted) return;
        if (++result.nodes > limits.node_budget) {
          aborted = true;
          return;
        }
        if (view.fixed.is_full()) {  // trivial stabilizer: chosen is a base
          IrredundanceWitness w;
          w.order = order;
          w.stabilizer_orders = orders_along;
          found.emplace(chosen.points(), std::move(w));
          return;
        }
        for (unsigned y : view.fixed.complement().points()) {
          PointSet next = chosen;
          next.add(y);
          if (!explored.insert(next).second) continue;
          detail::StabView nview = detail::stab_view(G, next, limits);
          order.push_back(y);
          orders_along.push_back(nview.order);
          dfs(next, nview);
          order.pop_back();
          orders_along.pop_back();
          if (aborted) return;
        }
      };
  detail::StabView root = detail::stab_view(G, PointSet(G.degree()), limits);
  orders_along.push_back(root.order);
  dfs(PointSet(G.degree()), root);
  result.complete = !aborted;
  result.count = found.size();
  bool first = true;
  for (auto& [points, witness] : found) {
    unsigned size = static_cast<unsigned>(points.size());
    if (first || size < result.min_size) result.min_size = size;
    if (first || size > result.max_size) result.max_size = size;
    first = false;
    if (mode == BaseEnumMode::all) {
      PointSet base(G.degree());
      for (unsigned p : points) base.add(p);
      result.bases.push_back(BaseReport{base, size, true, std::move(witness)});
    }
  }
  if (mode == BaseEnumMode::all) {
    std::sort(result.bases.begin(), result.bases.end(),
              [](const BaseReport& a, const BaseReport& b) {
                return PointSet::canonical_less(a.base, b.base);
              });
  }
  return result;
}

struct MinBaseResult {
  bool complete = true;  // false: node budget exhausted before an answer
  unsigned size = 0;
  PointSet witness;
  std::uint64_t nodes = 0;
};

// Minimum size over all bases (not only irredundant ones; every minimum
// base admits an irredundant order anyway). Searches subsets by increasing
// size. Symmetry pruning: translates of bases are bases, so some minimum
// base has its smallest element minimal in its orbit; the first chosen point
// ranges over orbit representatives only.
inline MinBaseResult min_base_size(const PermutationGroup& G,
                                   const SearchLimits& limits = {}) {
  MinBaseResult result;
  result.witness = PointSet(G.degree());
  std::vector<unsigned> reps;
  for (const auto& orbit : orbit_partition(G)) reps.push_back(orbit.points().front());
  auto test = [&](const PointSet& B) -> bool {
    ++result.nodes;
    return is_base(G, B, limits);
  };
  // k = 0
  if (result.nodes >= limits.node_budget) {
    result.complete = false;
    return result;
  }
  if (test(PointSet(G.degree()))) {
    result.size = 0;
    return result;
  }
  for (unsigned k = 1; k <= G.degree(); ++k) {
    for (unsigned first : reps) {
      // remaining k-1 elements from (first, degree)
      std::vector<unsigned> pool;
      for (unsigned p = first + 1; p < G.degree(); ++p) pool.push_back(p);
      if (pool.size() + 1 < k) continue;
      std::vector<unsigned> idx(k - 1);
      for (unsigned i = 0; i + 1 < k; ++i) idx[i] = i;
      bool more = true;
      while (more) {
        PointSet B(G.degree());
        B.add(first);
        for (unsigned i : idx) B.add(pool[i]);
        if (result.nodes >= limits.node_budget) {
          result.complete = false;
          return result;
        }
        if (test(B)) {
          result.size = k;
          result.witness = B;
          return result;
        }
        // next combination
        more = false;
        for (int i = static_cast<int>(idx.size()) - 1; i >= 0; --i) {
          if (idx[i] + (idx.size() - i) < pool.size()) {
            ++idx[i];
            for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
            more = true;
            break;
          }
        }
        if (idx.empty()) break;  // k == 1: single subset {first}
      }
    }
  }
  // Unreachable for faithful groups: the full domain is always a base.
  result.complete = false;
  return result;
}

// Explicit complex of all independent sets. Grown level by level: a set is
// independent iff it extends an independent set by a point that set's
// stabilizer moves, so each level is produced exactly from the previous one.
inline SimplicialComplex materialize_complex(const PermutationGroup& G,
                                             const SearchLimits& limits = {}) {
  if (G.degree() > limits.complex_degree_bound)
    throw SizeExplosion("degree " + std::to_string(G.degree()) +
                        " exceeds complex bound " +
                        std::to_string(limits.complex_degree_bound));
  std::vector<PointSet> independents;
  std::unordered_set<PointSet, PointSetHash> seen;
  std::vector<std::pair<PointSet, PointSet>> level;  // (set, fixed points of stabilizer)
  PointSet empty(G.degree());
  level.emplace_back(empty, detail::stab_view(G, empty, limits).fixed);
  seen.insert(empty);
  while (!level.empty()) {
    std::vector<std::pair<PointSet, PointSet>> next;
    for (const auto& [set, fixed] : level) {
      independents.push_back(set);
      for (unsigned p : fixed.complement().points()) {
        PointSet cand = set;
        cand.add(p);
        if (!seen.insert(cand).second) continue;
        next.emplace_back(cand, detail::stab_view(G, cand, limits).fixed);
      }
    }
    level = std::move(next);
  }
  return SimplicialComplex(PointSet::full(G.degree()), std::move(independents));
}

}  // namespace permbase
