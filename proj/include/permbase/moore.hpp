#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "permbase/errors.hpp"
#include "permbase/point_set.hpp"

namespace permbase {

// Generic Moore families and simplicial complexes, independent of any group.
//
// A Moore family is an intersection-closed collection of subsets of a ground
// set that contains the ground set. Its closure operator sends Y to the
// smallest member containing Y; transversals of the successive differences
// of chains in the family define the independent sets of the boolean
// representable simplicial complex attached to the family (restricted to a
// designated set of join generators, which defaults to the whole ground).

// A strictly increasing chain of members starting at the family's bottom,
// together with one new point taken from each step.
struct ChainWitness {
  std::vector<PointSet> chain;        // F_0 = bottom, F_1, ..., F_k
  std::vector<unsigned> enumeration;  // x_1, ..., x_k with x_i in F_i \ F_{i-1}
};

class MooreFamily {
 public:
  MooreFamily(PointSet ground, std::vector<PointSet> members,
              std::optional<PointSet> generators = std::nullopt)
      : ground_(std::move(ground)) {
    for (const auto& m : members) {
      if (m.width() != ground_.width()) throw DegreeMismatch("member width != ground width");
      if (!m.is_subset_of(ground_)) throw BadParameter("family member not within ground");
      if (lookup_.insert(m).second) members_.push_back(m);
    }
    if (!lookup_.count(ground_)) throw GroundMissing("ground set is not a member");
    std::sort(members_.begin(), members_.end(), PointSet::canonical_less);
    for (std::size_t i = 0; i < members_.size(); ++i) {
      for (std::size_t j = i + 1; j < members_.size(); ++j) {
        if (!lookup_.count(members_[i] & members_[j]))
          throw NotIntersectionClosed("intersection of members {" + join(members_[i]) +
                                      "} and {" + join(members_[j]) +
                                      "} is not a member");
      }
    }
    bottom_ = ground_;
    for (const auto& m : members_) bottom_ = bottom_ & m;
    if (generators) {
      if (!generators->is_subset_of(ground_))
        throw BadParameter("designated generators not within ground");
      generators_ = std::move(*generators);
    } else {
      generators_ = ground_;
    }
  }

  const PointSet& ground() const { return ground_; }
  const std::vector<PointSet>& members() const { return members_; }

  // The intersection of all members. Empty in every case the theory cares
  // about; kept explicit so a nonempty bottom is visible, not renamed.
  const PointSet& bottom() const { return bottom_; }

  // Designated join generators; the points of the attached complex.
  const PointSet& generators() const { return generators_; }

  bool has_designated_generators() const { return generators_ != ground_; }

  bool is_member(const PointSet& s) const { return lookup_.count(s) > 0; }

  // Smallest member containing Y. Also realizes the determined join of two
  // members as closure(F1 | F2).
  PointSet closure(const PointSet& Y) const {
    if (Y.width() != ground_.width()) throw DegreeMismatch("set width != ground width");
    if (!Y.is_subset_of(ground_)) throw BadParameter("set not within ground");
    PointSet acc = ground_;
    for (const auto& m : members_) {
      if (Y.is_subset_of(m)) acc = acc & m;
    }
    return acc;
  }

 private:
  static std::string join(const PointSet& s) {
    std::string out;
    for (unsigned p : s.points()) {
      if (!out.empty()) out += ' ';
      out += std::to_string(p + 1);
    }
    return out;
  }

  PointSet ground_;
  PointSet bottom_;
  PointSet generators_;
  std::vector<PointSet> members_;
  std::unordered_set<PointSet, PointSetHash> lookup_;
};

inline MooreFamily validate_moore_family(std::vector<PointSet> members, PointSet ground,
                                         std::optional<PointSet> generators = std::nullopt) {
  return MooreFamily(std::move(ground), std::move(members), std::move(generators));
}

inline PointSet moore_closure(const MooreFamily& family, const PointSet& Y) {
  return family.closure(Y);
}

// Checks whether the given order is a transversal of the successive
// differences of some chain in the family. Uses the canonical chain
// F_i = Cl({x_1..x_i}): any witnessing chain F'_i satisfies F_i <= F'_i, so
// x_i lies outside F_{i-1} whenever it lies outside F'_{i-1}, which makes the
// canonical chain complete. Entries must be designated generators.
inline std::optional<ChainWitness> is_transversal(const MooreFamily& family,
                                                  const std::vector<unsigned>& seq) {
  PointSet chosen(family.ground().width());
  for (unsigned x : seq) {
    if (x >= family.ground().width() || !family.ground().contains(x))
      throw BadParameter("point " + std::to_string(x + 1) + " not in ground");
    if (chosen.contains(x)) throw DuplicateEntries("repeated point in sequence");
    chosen.add(x);
  }
  for (unsigned x : seq) {
    if (!family.generators().contains(x)) return std::nullopt;
  }
  ChainWitness witness;
  PointSet prefix(family.ground().width());
  PointSet current = family.closure(prefix);  // = bottom
  witness.chain.push_back(current);
  for (unsigned x : seq) {
    if (current.contains(x)) return std::nullopt;
    prefix.add(x);
    current = family.closure(prefix);
    witness.chain.push_back(current);
    witness.enumeration.push_back(x);
  }
  return witness;
}

// Independence in the complex attached to the family: some enumeration of Y
// is a transversal. Backtracks over orderings; a candidate must lie outside
// the closure of the chosen prefix, and failed prefix sets are memoized
// (suffix feasibility depends only on the set). Returns the witness of the
// lexicographically least successful enumeration.
inline std::optional<ChainWitness> is_independent_in_family(const MooreFamily& family,
                                                            const PointSet& Y) {
  if (Y.width() != family.ground().width()) throw DegreeMismatch("set width != ground width");
  if (!Y.is_subset_of(family.ground())) throw BadParameter("set not within ground");
  if (!Y.is_subset_of(family.generators())) return std::nullopt;
  std::unordered_set<PointSet, PointSetHash> failed;
  std::vector<unsigned> order;
  std::function<bool(const PointSet&)> dfs = [&](const PointSet& chosen) -> bool {
    if (chosen == Y) return true;
    PointSet cl = family.closure(chosen);
    for (unsigned y : (Y - chosen).points()) {
      if (cl.contains(y)) continue;
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
  PointSet empty(family.ground().width());
  if (!dfs(empty)) return std::nullopt;
  return is_transversal(family, order);
}

// Explicit simplicial complex: a nonempty ground set plus a downward-closed
// collection of independent sets containing the empty set.
class SimplicialComplex {
 public:
  SimplicialComplex(PointSet ground, std::vector<PointSet> independents)
      : ground_(std::move(ground)) {
    if (ground_.empty()) throw BadParameter("ground set must be nonempty");
    for (const auto& s : independents) {
      if (s.width() != ground_.width()) throw DegreeMismatch("independent width != ground width");
      if (!s.is_subset_of(ground_)) throw BadParameter("independent set not within ground");
      if (lookup_.insert(s).second) independents_.push_back(s);
    }
    if (!lookup_.count(PointSet(ground_.width())))
      throw BadParameter("empty set must be independent");
    std::sort(independents_.begin(), independents_.end(), PointSet::canonical_less);
    for (const auto& s : independents_) {
      for (unsigned x : s.points()) {
        PointSet sub = s;
        sub.remove(x);
        if (!lookup_.count(sub))
          throw BadParameter("independents are not closed under taking subsets");
      }
    }
  }

  // Downward closure of the given facets.
  static SimplicialComplex from_facets(PointSet ground, const std::vector<PointSet>& facets) {
    std::unordered_set<PointSet, PointSetHash> seen;
    std::vector<PointSet> queue{PointSet(ground.width())};
    seen.insert(queue.front());
    for (const auto& f : facets) {
      if (seen.insert(f).second) queue.push_back(f);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      PointSet s = queue[head];
      for (unsigned x : s.points()) {
        PointSet sub = s;
        sub.remove(x);
        if (seen.insert(sub).second) queue.push_back(sub);
      }
    }
    return SimplicialComplex(std::move(ground),
                             std::vector<PointSet>(queue.begin(), queue.end()));
  }

  const PointSet& ground() const { return ground_; }
  const std::vector<PointSet>& independents() const { return independents_; }
  bool is_independent(const PointSet& s) const { return lookup_.count(s) > 0; }

 private:
  PointSet ground_;
  std::vector<PointSet> independents_;
  std::unordered_set<PointSet, PointSetHash> lookup_;
};

namespace detail {

// Calls fn on every subset of the given points (as PointSets of width w).
inline void for_each_subset(unsigned width, const std::vector<unsigned>& points,
                            const std::function<void(const PointSet&)>& fn) {
  if (points.size() > 25)
    throw SizeExplosion("subset enumeration over " + std::to_string(points.size()) +
                        " points is out of reach");
  std::uint64_t total = std::uint64_t{1} << points.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    PointSet s(width);
    for (std::size_t i = 0; i < points.size(); ++i) {
      if ((mask >> i) & 1) s.add(points[i]);
    }
    fn(s);
  }
}

}  // namespace detail

// All flats of the complex: Y is a flat when every independent subset of Y
// can be extended into independence by every point outside Y. The result is
// a Moore family (ground always qualifies).
inline MooreFamily flats(const SimplicialComplex& S) {
  auto ground_points = S.ground().points();
  std::vector<PointSet> result;
  detail::for_each_subset(S.ground().width(), ground_points, [&](const PointSet& Y) {
    PointSet outside = S.ground() - Y;
    for (const auto& I : S.independents()) {
      if (!I.is_subset_of(Y)) continue;
      for (unsigned p : outside.points()) {
        PointSet ext = I;
        ext.add(p);
        if (!S.is_independent(ext)) return;
      }
    }
    result.push_back(Y);
  });
  return MooreFamily(S.ground(), std::move(result));
}

// Minimal non-independent sets; every proper subset is independent.
inline std::vector<PointSet> circuits(const SimplicialComplex& S) {
  auto ground_points = S.ground().points();
  std::vector<PointSet> result;
  detail::for_each_subset(S.ground().width(), ground_points, [&](const PointSet& Y) {
    if (S.is_independent(Y)) return;
    for (unsigned x : Y.points()) {
      PointSet sub = Y;
      sub.remove(x);
      if (!S.is_independent(sub)) return;
    }
    result.push_back(Y);
  });
  std::sort(result.begin(), result.end(), PointSet::canonical_less);
  return result;
}

struct RepresentabilityReport {
  bool representable = false;
  // When not representable: a set witnessing the failure, either an
  // independent set that is no transversal of the lattice of flats, or a
  // circuit that is one.
  std::optional<PointSet> certificate;
  bool certificate_is_independent = false;
};

// A complex is boolean representable iff its independents are exactly the
// transversals of its lattice of flats. Checks both directions: every
// independent set must be a transversal, and no circuit may be one (the
// transversal family is downward closed, so circuits cover all of it).
inline RepresentabilityReport is_boolean_representable(const SimplicialComplex& S) {
  MooreFamily lattice = flats(S);
  for (const auto& I : S.independents()) {
    if (!is_independent_in_family(lattice, I)) return {false, I, true};
  }
  for (const auto& C : circuits(S)) {
    if (is_independent_in_family(lattice, C)) return {false, C, false};
  }
  return {true, std::nullopt, false};
}

struct ExchangeReport {
  bool holds = false;
  std::optional<std::pair<PointSet, PointSet>> counterexample;  // (I, J)
};

// Matroid exchange property: for independents I, J with |I| = |J| + 1 some
// point of I \ J extends J.
inline ExchangeReport exchange_property(const SimplicialComplex& S) {
  for (const auto& I : S.independents()) {
    for (const auto& J : S.independents()) {
      if (I.count() != J.count() + 1) continue;
      bool extended = false;
      for (unsigned v : (I - J).points()) {
        PointSet ext = J;
        ext.add(v);
        if (S.is_independent(ext)) {
          extended = true;
          break;
        }
      }
      if (!extended) return {false, std::make_pair(I, J)};
    }
  }
  return {true, std::nullopt};
}

struct ComplexBases {
  std::vector<PointSet> bases;  // maximal independent sets, canonical order
  unsigned rank = 0;            // maximum basis size
  bool pure = false;            // all bases share the rank
};

inline ComplexBases complex_bases(const SimplicialComplex& S) {
  ComplexBases out;
  for (const auto& I : S.independents()) {
    bool maximal = true;
    for (unsigned p : (S.ground() - I).points()) {
      PointSet ext = I;
      ext.add(p);
      if (S.is_independent(ext)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.bases.push_back(I);
  }
  out.rank = 0;
  for (const auto& b : out.bases) out.rank = std::max(out.rank, b.count());
  out.pure = true;
  for (const auto& b : out.bases) {
    if (b.count() != out.rank) {
      out.pure = false;
      break;
    }
  }
  return out;
}

// The complex attached to the family: points are the designated generators,
// independents are the transversal sets. Grown level by level; the
// transversal family is downward closed, so every independent set of size
// k+1 extends an independent set of size k.
inline SimplicialComplex transversal_complex(const MooreFamily& family) {
  const PointSet& pts = family.generators();
  if (pts.empty()) throw BadParameter("family has no designated generators");
  std::vector<PointSet> independents;
  std::unordered_set<PointSet, PointSetHash> seen;
  std::vector<PointSet> level{PointSet(family.ground().width())};
  seen.insert(level.front());
  while (!level.empty()) {
    for (const auto& s : level) independents.push_back(s);
    std::vector<PointSet> next;
    for (const auto& s : level) {
      for (unsigned p : (pts - s).points()) {
        PointSet cand = s;
        cand.add(p);
        if (seen.count(cand)) continue;
        seen.insert(cand);
        if (is_independent_in_family(family, cand)) next.push_back(cand);
      }
    }
    level = std::move(next);
  }
  return SimplicialComplex(pts, std::move(independents));
}

}  // namespace permbase
