#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "permbase/actions.hpp"
#include "permbase/galois.hpp"

using namespace permbase;

namespace {

PermutationGroup sym(unsigned n) { return builtin_group(GroupFamily::symmetric, n); }

std::vector<oracle::Raw> raw_elements(const PermutationGroup& G) {
  std::vector<oracle::Raw> gens;
  for (const auto& g : G.generators()) gens.push_back(g.images());
  return oracle::generate(G.degree(), gens);
}

PointSet to_set(const std::vector<unsigned>& pts, unsigned width) {
  PointSet s(width);
  for (unsigned p : pts) s.add(p);
  return s;
}

}  // namespace

TEST_CASE("closure on Sym(4)") {
  auto s4 = sym(4);
  CHECK(closure(s4, PointSet(4, {0, 1})) == PointSet(4, {0, 1}));
  CHECK(closure(s4, PointSet(4, {0, 1, 2})).is_full());
  CHECK(closure(s4, PointSet(4)).empty());
  CHECK(is_closed(s4, PointSet(4, {0, 1})));
  CHECK_FALSE(is_closed(s4, PointSet(4, {0, 1, 2})));
  CHECK(is_closed(s4, PointSet::full(4)));
}

TEST_CASE("closure rejects groups with trivial orbits") {
  auto G = PermutationGroup(3, {Permutation::from_cycles(3, {{0, 1}})});
  CHECK_THROWS_AS(closure(G, PointSet(3, {0})), DomainHasTrivialOrbits);
  CHECK_THROWS_AS(closed_set_lattice(G), DomainHasTrivialOrbits);
  // stripping repairs it
  auto stripped = strip_fixed_points(G);
  CHECK(closed_set_lattice(stripped.group).size() == 2);
}

TEST_CASE("closure matches brute force on every subset") {
  for (auto spec : {"sym:4", "dih:4", "cyc:6", "alt:4"}) {
    auto parsed = parse_group_spec(spec);
    auto G = builtin_group(parsed->first, parsed->second);
    auto raw = raw_elements(G);
    for (unsigned mask = 0; mask < (1u << G.degree()); ++mask) {
      std::vector<unsigned> pts;
      for (unsigned i = 0; i < G.degree(); ++i)
        if ((mask >> i) & 1) pts.push_back(i);
      auto expected = to_set(oracle::closure(raw, pts, G.degree()), G.degree());
      CHECK(closure(G, to_set(pts, G.degree())) == expected);
    }
  }
}

TEST_CASE("closed set lattice of small groups") {
  auto l3 = closed_set_lattice(sym(3));
  REQUIRE(l3.size() == 5);
  CHECK(l3.closed_sets()[0] == PointSet(3));
  CHECK(l3.closed_sets()[1] == PointSet(3, {0}));
  CHECK(l3.closed_sets()[2] == PointSet(3, {1}));
  CHECK(l3.closed_sets()[3] == PointSet(3, {2}));
  CHECK(l3.closed_sets()[4] == PointSet::full(3));

  // Sym(4): empty, singletons, 2-subsets, full
  auto l4 = closed_set_lattice(sym(4));
  CHECK(l4.size() == 12);

  auto c2 = PermutationGroup(2, {Permutation::from_cycles(2, {{0, 1}})});
  auto l2 = closed_set_lattice(c2);
  REQUIRE(l2.size() == 2);
  CHECK(l2.closed_sets()[0].empty());
  CHECK(l2.closed_sets()[1].is_full());
}

TEST_CASE("lattice is intersection closed and contains every closure") {
  for (auto spec : {"sym:4", "dih:4", "cyc:6"}) {
    auto parsed = parse_group_spec(spec);
    auto G = builtin_group(parsed->first, parsed->second);
    auto lattice = closed_set_lattice(G);
    for (const auto& a : lattice.closed_sets()) {
      CHECK(closure(G, a) == a);
      for (const auto& b : lattice.closed_sets()) CHECK(lattice.is_member(a & b));
    }
    for (unsigned mask = 0; mask < (1u << G.degree()); ++mask) {
      PointSet Y(G.degree());
      for (unsigned i = 0; i < G.degree(); ++i)
        if ((mask >> i) & 1) Y.add(i);
      CHECK(lattice.is_member(closure(G, Y)));
    }
    // the designated join generators are the singleton closures
    for (unsigned x = 0; x < G.degree(); ++x) {
      PointSet single(G.degree());
      single.add(x);
      CHECK(lattice.point_closures()[x] == closure(G, single));
    }
  }
}

TEST_CASE("subgroup_closure") {
  auto s4 = sym(4);
  Subgroup h34(s4, {Permutation::from_cycles(4, {{2, 3}})});
  auto closed = subgroup_closure(s4, h34);
  CHECK(same_subgroup(closed, h34));

  Subgroup four_cycle(s4, {Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  CHECK(subgroup_closure(s4, four_cycle).order() == 24);

  Subgroup whole(s4, s4.generators());
  CHECK(subgroup_closure(s4, whole).order() == 24);

  // contains the subgroup and is idempotent
  Subgroup h(s4, {Permutation::from_cycles(4, {{0, 1}})});
  auto once = subgroup_closure(s4, h);
  for (const auto& g : h.generators()) CHECK(once.contains(g));
  CHECK(same_subgroup(subgroup_closure(s4, once), once));
}

TEST_CASE("closure axioms and Galois round trip, randomized") {
  std::mt19937 rng(101);
  std::vector<PermutationGroup> groups;
  for (unsigned n = 3; n <= 6; ++n) {
    groups.push_back(builtin_group(GroupFamily::symmetric, n));
    groups.push_back(builtin_group(GroupFamily::alternating, n));
    groups.push_back(builtin_group(GroupFamily::cyclic, n));
    groups.push_back(builtin_group(GroupFamily::dihedral, n));
  }
  std::uniform_int_distribution<unsigned> coin(0, 1);
  for (const auto& G : groups) {
    for (int trial = 0; trial < 5; ++trial) {
      PointSet Y(G.degree()), Z(G.degree());
      for (unsigned i = 0; i < G.degree(); ++i) {
        if (coin(rng)) Z.add(i);
        if (Z.contains(i) && coin(rng)) Y.add(i);
      }
      PointSet clY = closure(G, Y);
      CHECK(Y.is_subset_of(clY));                 // extensive
      CHECK(closure(G, clY) == clY);              // idempotent
      CHECK(clY.is_subset_of(closure(G, Z)));     // order preserving
      CHECK(same_subgroup(pointwise_stabilizer(G, clY), pointwise_stabilizer(G, Y)));
    }
  }
}

TEST_CASE("ascending closed chains give strictly descending stabilizers") {
  for (auto spec : {"sym:4", "dih:4"}) {
    auto parsed = parse_group_spec(spec);
    auto G = builtin_group(parsed->first, parsed->second);
    auto lattice = closed_set_lattice(G);
    // greedily build a maximal chain from the bottom
    std::vector<PointSet> chain{PointSet(G.degree())};
    while (!chain.back().is_full()) {
      PointSet next = PointSet::full(G.degree());
      bool found = false;
      for (const auto& c : lattice.closed_sets()) {
        if (chain.back() != c && chain.back().is_subset_of(c) &&
            (!found || c.count() < next.count())) {
          next = c;
          found = true;
        }
      }
      REQUIRE(found);
      chain.push_back(next);
    }
    REQUIRE(chain.size() >= 2);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      auto upper = pointwise_stabilizer(G, chain[i]);
      auto lower = pointwise_stabilizer(G, chain[i + 1]);
      CHECK(lower.order() < upper.order());
      for (const auto& g : lower.generators()) CHECK(upper.contains(g));
    }
  }
}
