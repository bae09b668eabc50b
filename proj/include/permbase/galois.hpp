#pragma once

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "permbase/errors.hpp"
#include "permbase/group.hpp"
#include "permbase/moore.hpp"

namespace permbase {

// The closure operator of the antitone Galois connection between subsets of
// the domain and subgroups: Y -> Stab(G_Y), the points fixed by the
// pointwise stabilizer of Y.
//
// Groups with trivial orbits (globally fixed points) are rejected here: for
// such groups the closure of the empty set is not empty and the theory below
// does not apply. Use strip_fixed_points() to remove them first.

inline void require_no_trivial_orbits(const PermutationGroup& G) {
  PointSet fixed = G.global_fixed_points();
  if (!fixed.empty()) {
    std::string pts;
    for (unsigned p : fixed.points()) {
      if (!pts.empty()) pts += ',';
      pts += std::to_string(p + 1);
    }
    throw DomainHasTrivialOrbits("group fixes point(s) " + pts +
                                 " globally; strip fixed points first");
  }
}

inline PointSet closure(const PermutationGroup& G, const PointSet& Y,
                        const SearchLimits& limits = {}) {
  require_no_trivial_orbits(G);
  return fixed_points(G, pointwise_stabilizer(G, Y, limits));
}

inline bool is_closed(const PermutationGroup& G, const PointSet& Y,
                      const SearchLimits& limits = {}) {
  return closure(G, Y, limits) == Y;
}

// The complete family of closed sets, generated from the singleton closures:
// every closed set is reached from a smaller one by closing the union with a
// single point, so the closure of the whole family under F -> Cl(F + x) is
// exactly {Cl(Y) | Y subset of X}.
class ClosedSetLattice {
 public:
  ClosedSetLattice(PermutationGroup group, std::vector<PointSet> closed_sets,
                   std::vector<PointSet> point_closures)
      : group_(std::move(group)),
        closed_sets_(std::move(closed_sets)),
        point_closures_(std::move(point_closures)) {
    std::sort(closed_sets_.begin(), closed_sets_.end(), PointSet::canonical_less);
    for (const auto& s : closed_sets_) lookup_.insert(s);
  }

  const PermutationGroup& group() const { return group_; }
  const std::vector<PointSet>& closed_sets() const { return closed_sets_; }

  // Cl({x}) for each domain point x; the join generators of the lattice.
  const std::vector<PointSet>& point_closures() const { return point_closures_; }

  bool is_member(const PointSet& s) const { return lookup_.count(s) > 0; }

  std::size_t size() const { return closed_sets_.size(); }

  // View as a Moore family over the full domain (every point of the domain
  // is a join generator of the attached complex).
  MooreFamily to_moore_family() const {
    return MooreFamily(PointSet::full(group_.degree()), closed_sets_);
  }

 private:
  PermutationGroup group_;
  std::vector<PointSet> closed_sets_;
  std::vector<PointSet> point_closures_;
  std::unordered_set<PointSet, PointSetHash> lookup_;
};

inline ClosedSetLattice closed_set_lattice(const PermutationGroup& G,
                                           const SearchLimits& limits = {}) {
  require_no_trivial_orbits(G);
  unsigned n = G.degree();
  std::vector<PointSet> family;
  std::unordered_set<PointSet, PointSetHash> seen;
  auto insert = [&](const PointSet& s) -> bool {
    if (seen.insert(s).second) {
      family.push_back(s);
      if (family.size() > limits.family_bound)
        throw SizeExplosion("closed-set family exceeds bound " +
                            std::to_string(limits.family_bound));
      return true;
    }
    return false;
  };
  insert(PointSet(n));       // Cl(empty) = empty without trivial orbits
  insert(PointSet::full(n));
  std::vector<PointSet> point_closures;
  point_closures.reserve(n);
  for (unsigned x = 0; x < n; ++x) {
    PointSet single(n);
    single.add(x);
    point_closures.push_back(closure(G, single, limits));
  }
  std::vector<PointSet> queue;
  for (const auto& c : point_closures) {
    if (insert(c)) queue.push_back(c);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    PointSet current = queue[head];
    for (unsigned x = 0; x < n; ++x) {
      if (current.contains(x)) continue;
      PointSet extended = current;
      extended.add(x);
      PointSet closed = closure(G, extended, limits);
      if (insert(closed)) queue.push_back(closed);
    }
  }
  return ClosedSetLattice(G, std::move(family), std::move(point_closures));
}

// The other closure of the Galois connection: H -> G_{Stab(H)}. Contains H
// and is idempotent.
inline Subgroup subgroup_closure(const PermutationGroup& G, const Subgroup& H,
                                 const SearchLimits& limits = {}) {
  return pointwise_stabilizer(G, fixed_points(G, H), limits);
}

}  // namespace permbase
