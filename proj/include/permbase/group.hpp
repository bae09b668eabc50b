#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "permbase/errors.hpp"
#include "permbase/permutation.hpp"
#include "permbase/point_set.hpp"
#include "permbase/stabilizer_chain.hpp"

namespace permbase {

// A finite permutation group given by generators. Immutable after
// construction; copies share the lazily built element store / stabilizer
// chain, which are computed idempotently under a lock.
class PermutationGroup {
 public:
  PermutationGroup(unsigned degree, std::vector<Permutation> generators,
                   std::optional<std::uint64_t> known_order = std::nullopt)
      : state_(std::make_shared<State>()) {
    if (degree == 0) throw BadParameter("degree must be at least 1");
    if (generators.empty()) throw BadParameter("generator list must be nonempty");
    for (const auto& g : generators) {
      if (g.degree() != degree) throw DegreeMismatch("generator degree mismatch");
    }
    state_->degree = degree;
    state_->generators = std::move(generators);
    state_->order = known_order;
  }

  static PermutationGroup trivial(unsigned degree) {
    return PermutationGroup(degree, {Permutation::identity(degree)}, 1);
  }

  unsigned degree() const { return state_->degree; }

  const std::vector<Permutation>& generators() const { return state_->generators; }

  std::uint64_t order() const {
    std::lock_guard<std::recursive_mutex> lock(state_->mu);
    if (!state_->order) {
      if (state_->elements)
        state_->order = state_->elements->size();
      else
        state_->order = chain().order();
    }
    return *state_->order;
  }

  bool is_trivial() const { return order() == 1; }

  // Stabilizer chain over the default base (points in ascending order as
  // needed). Cached and shared between copies.
  const StabilizerChain& chain() const {
    std::lock_guard<std::recursive_mutex> lock(state_->mu);
    if (!state_->chain)
      state_->chain.emplace(state_->degree, state_->generators);
    return *state_->chain;
  }

  // Materialized element store when |G| <= cap, nullptr otherwise. The store
  // is sorted lexicographically by image table and cached.
  const std::vector<Permutation>* elements_if_small(std::uint64_t cap) const {
    std::lock_guard<std::recursive_mutex> lock(state_->mu);
    if (state_->elements)
      return state_->elements->size() <= cap ? &*state_->elements : nullptr;
    if (order() > cap) return nullptr;
    state_->elements = breadth_first_closure();
    return &*state_->elements;
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree()) return false;
    std::lock_guard<std::recursive_mutex> lock(state_->mu);
    if (state_->elements) {
      auto& v = *state_->elements;
      auto it = std::lower_bound(v.begin(), v.end(), p);
      return it != v.end() && *it == p;
    }
    return chain().contains(p);
  }

  // Points fixed by every generator, i.e. the union of the trivial orbits.
  PointSet global_fixed_points() const {
    PointSet fixed = PointSet::full(degree());
    for (const auto& g : generators()) fixed = fixed & g.fixed_points();
    return fixed;
  }

  bool has_trivial_orbits() const { return !global_fixed_points().empty(); }

 private:
  struct State {
    unsigned degree = 0;
    std::vector<Permutation> generators;
    mutable std::recursive_mutex mu;
    mutable std::optional<std::uint64_t> order;
    mutable std::optional<StabilizerChain> chain;
    mutable std::optional<std::vector<Permutation>> elements;
  };

  std::vector<Permutation> breadth_first_closure() const {
    std::set<std::vector<unsigned>> seen;
    std::vector<Permutation> queue{Permutation::identity(degree())};
    seen.insert(queue.front().images());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Permutation current = queue[head];
      for (const auto& g : generators()) {
        Permutation next = compose(current, g);
        if (seen.insert(next.images()).second) queue.push_back(std::move(next));
      }
    }
    std::vector<Permutation> out;
    out.reserve(seen.size());
    for (const auto& images : seen) out.emplace_back(images);
    return out;
  }

  std::shared_ptr<State> state_;
};

// A subgroup of a parent group, carried as its own group over the same
// domain. Generators are always members of the parent.
class Subgroup {
 public:
  Subgroup(PermutationGroup parent, std::vector<Permutation> generators,
           std::optional<std::uint64_t> known_order = std::nullopt)
      : parent_(std::move(parent)),
        group_(generators.empty()
                   ? PermutationGroup::trivial(parent_.degree())
                   : PermutationGroup(parent_.degree(), std::move(generators), known_order)) {}

  const PermutationGroup& parent() const { return parent_; }
  const PermutationGroup& group() const { return group_; }
  std::uint64_t order() const { return group_.order(); }
  const std::vector<Permutation>& generators() const { return group_.generators(); }
  bool contains(const Permutation& p) const { return group_.contains(p); }

 private:
  PermutationGroup parent_;
  PermutationGroup group_;
};

// Subgroup equality: equal order plus mutual membership of generators.
inline bool same_subgroup(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return false;
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  for (const auto& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

// Materializes all elements of G. Throws OrderExceedsCap when |G| > cap;
// callers needing only stabilizers fall back to a stabilizer chain.
inline const std::vector<Permutation>& enumerate_elements(const PermutationGroup& G,
                                                          std::uint64_t cap) {
  const auto* store = G.elements_if_small(cap);
  if (!store)
    throw OrderExceedsCap("group order " + std::to_string(G.order()) +
                          " exceeds cap " + std::to_string(cap));
  return *store;
}

// Orbits of the domain under G, each as a PointSet, ordered by their
// minimum element.
inline std::vector<PointSet> orbit_partition(const PermutationGroup& G) {
  unsigned n = G.degree();
  std::vector<bool> done(n, false);
  std::vector<PointSet> orbits;
  for (unsigned start = 0; start < n; ++start) {
    if (done[start]) continue;
    PointSet orbit(n);
    std::vector<unsigned> queue{start};
    orbit.add(start);
    done[start] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& g : G.generators()) {
        unsigned img = g.apply(queue[head]);
        if (!done[img]) {
          done[img] = true;
          orbit.add(img);
          queue.push_back(img);
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

// Pointwise stabilizer G_Y = {g in G | yg = y for all y in Y}. Filters the
// element store at small order, otherwise builds a stabilizer chain whose
// base starts with the points of Y in ascending order.
inline Subgroup pointwise_stabilizer(const PermutationGroup& G, const PointSet& Y,
                                     const SearchLimits& limits = {}) {
  if (Y.width() != G.degree()) throw DegreeMismatch("point set width != group degree");
  if (const auto* store = G.elements_if_small(limits.element_cap)) {
    std::vector<Permutation> stab;
    auto pts = Y.points();
    for (const auto& e : *store) {
      bool ok = true;
      for (unsigned y : pts) {
        if (!e.fixes(y)) {
          ok = false;
          break;
        }
      }
      if (ok) stab.push_back(e);
    }
    auto count = static_cast<std::uint64_t>(stab.size());
    return Subgroup(G, std::move(stab), count);
  }
  auto pts = Y.points();
  StabilizerChain chain(G.degree(), G.generators(), pts);
  return Subgroup(G, chain.level_generators(pts.size()),
                  chain.order_from_level(pts.size()));
}

// Stab(H): the points fixed by every element of H (equivalently by every
// generator).
inline PointSet fixed_points(const PermutationGroup& G, const Subgroup& H) {
  if (H.parent().degree() != G.degree()) throw DegreeMismatch("subgroup degree mismatch");
  PointSet fixed = PointSet::full(G.degree());
  for (const auto& g : H.generators()) fixed = fixed & g.fixed_points();
  return fixed;
}

// Removes globally fixed points from the domain and reindexes. kept[i] is
// the original label of new point i.
struct StrippedGroup {
  PermutationGroup group;
  std::vector<unsigned> kept;
};

inline StrippedGroup strip_fixed_points(const PermutationGroup& G) {
  PointSet fixed = G.global_fixed_points();
  if (fixed.empty()) return {G, PointSet::full(G.degree()).points()};
  PointSet keep = fixed.complement();
  std::vector<unsigned> kept = keep.points();
  if (kept.empty()) throw BadParameter("group acts trivially on its whole domain");
  std::vector<unsigned> new_index(G.degree(), 0);
  for (unsigned i = 0; i < kept.size(); ++i) new_index[kept[i]] = i;
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) {
    std::vector<unsigned> im(kept.size());
    for (unsigned i = 0; i < kept.size(); ++i) im[i] = new_index[g.apply(kept[i])];
    gens.emplace_back(std::move(im));
  }
  return {PermutationGroup(static_cast<unsigned>(kept.size()), std::move(gens)),
          std::move(kept)};
}

}  // namespace permbase
