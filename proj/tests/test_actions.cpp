#include "doctest.h"
#include "oracle.hpp"
#include "permbase/actions.hpp"
#include "permbase/brsc.hpp"

using namespace permbase;

TEST_CASE("pair index map is a bijection onto lexicographic pairs") {
  PairIndexMap map(5);
  CHECK(map.size() == 10);
  CHECK(map.index_of(0, 1) == 0);
  CHECK(map.index_of(1, 0) == 0);
  CHECK(map.index_of(3, 4) == 9);
  for (unsigned idx = 0; idx < map.size(); ++idx) {
    auto [a, b] = map.pair_at(idx);
    CHECK(a < b);
    CHECK(map.index_of(a, b) == idx);
    if (idx + 1 < map.size()) {
      auto [c, d] = map.pair_at(idx + 1);
      CHECK(std::make_pair(a, b) < std::make_pair(c, d));
    }
  }
  CHECK_THROWS_AS(map.index_of(2, 2), IndexOutOfRange);
}

TEST_CASE("pair action preserves the order") {
  for (auto spec : {"sym:3", "sym:4", "sym:5", "alt:5", "cyc:7", "dih:5"}) {
    auto parsed = parse_group_spec(spec);
    auto G = builtin_group(parsed->first, parsed->second);
    auto action = pair_action(G);
    CHECK(action.group.degree() == G.degree() * (G.degree() - 1) / 2);
    CHECK(action.group.order() == G.order());
  }
  CHECK_THROWS_AS(pair_action(builtin_group(GroupFamily::cyclic, 2)), DegreeTooSmall);
}

TEST_CASE("k-subset action") {
  auto s4 = builtin_group(GroupFamily::symmetric, 4);
  auto k2 = k_subset_action(s4, 2);
  CHECK(k2.group.degree() == 6);
  CHECK(k2.group.order() == 24);

  // k = 1 is the original action
  auto k1 = k_subset_action(s4, 1);
  CHECK(k1.group.degree() == 4);
  for (std::size_t i = 0; i < s4.generators().size(); ++i)
    CHECK(k1.group.generators()[i] == s4.generators()[i]);

  auto s5 = builtin_group(GroupFamily::symmetric, 5);
  CHECK(k_subset_action(s5, 3).group.degree() == 10);

  CHECK_THROWS_AS(k_subset_action(s4, 0), DegreeTooSmall);
  CHECK_THROWS_AS(k_subset_action(s4, 4), DegreeTooSmall);
  SearchLimits tiny;
  tiny.subset_bound = 3;
  CHECK_THROWS_AS(k_subset_action(s5, 2, tiny), SizeExplosion);
}

TEST_CASE("builtin group orders") {
  CHECK(builtin_group(GroupFamily::symmetric, 3).order() == 6);
  CHECK(builtin_group(GroupFamily::symmetric, 1).order() == 1);
  CHECK(builtin_group(GroupFamily::alternating, 5).order() == 60);
  CHECK(builtin_group(GroupFamily::alternating, 2).order() == 1);
  CHECK(builtin_group(GroupFamily::cyclic, 5).order() == 5);
  CHECK(builtin_group(GroupFamily::dihedral, 4).order() == 8);
  CHECK_THROWS_AS(builtin_group(GroupFamily::dihedral, 2), BadParameter);
  CHECK_THROWS_AS(builtin_group(GroupFamily::symmetric, 0), BadParameter);
}

TEST_CASE("group spec parsing") {
  auto s = parse_group_spec("sym:6");
  REQUIRE(s.has_value());
  CHECK(s->first == GroupFamily::symmetric);
  CHECK(s->second == 6);
  CHECK(parse_group_spec("alt:5").has_value());
  CHECK(parse_group_spec("cyc:9").has_value());
  CHECK(parse_group_spec("dih:7").has_value());
  CHECK_FALSE(parse_group_spec("sym").has_value());
  CHECK_FALSE(parse_group_spec("mat:4").has_value());
  CHECK_FALSE(parse_group_spec("sym:x").has_value());
  CHECK_FALSE(parse_group_spec("groups/sym.grp").has_value());
}

TEST_CASE("block bases for symmetric pair actions") {
  // sizes per residue class mod 3
  CHECK(example_base_sym_pairs(3).count() == 2);
  CHECK(example_base_sym_pairs(4).count() == 2);
  CHECK(example_base_sym_pairs(5).count() == 3);
  CHECK(example_base_sym_pairs(6).count() == 4);
  CHECK(example_base_sym_pairs(7).count() == 4);
  CHECK(example_base_sym_pairs(8).count() == 5);
  CHECK(example_base_sym_pairs(9).count() == 6);

  PairIndexMap m6(6);
  CHECK(example_base_sym_pairs(6) ==
        PointSet(15, {m6.index_of(0, 1), m6.index_of(1, 2), m6.index_of(3, 4),
                      m6.index_of(4, 5)}));
  PairIndexMap m5(5);
  CHECK(example_base_sym_pairs(5) ==
        PointSet(10, {m5.index_of(0, 1), m5.index_of(1, 2), m5.index_of(0, 3)}));

  for (unsigned n = 3; n <= 7; ++n) {
    auto action = pair_action(builtin_group(GroupFamily::symmetric, n));
    CHECK(is_base(action.group, example_base_sym_pairs(n)));
  }
  CHECK_THROWS_AS(example_base_sym_pairs(2), BadParameter);
}

TEST_CASE("disjoint pair bases for odd-order groups") {
  auto c5 = builtin_group(GroupFamily::cyclic, 5);
  auto b5 = example_base_odd(c5);
  PairIndexMap m5(5);
  CHECK(b5 == PointSet(10, {m5.index_of(0, 1), m5.index_of(2, 3)}));
  CHECK(is_base(pair_action(c5).group, b5));

  auto c3 = builtin_group(GroupFamily::cyclic, 3);
  CHECK(example_base_odd(c3).count() == 1);
  CHECK(is_base(pair_action(c3).group, example_base_odd(c3)));

  auto c9 = builtin_group(GroupFamily::cyclic, 9);
  auto b9 = example_base_odd(c9);
  CHECK(b9.count() == 4);
  CHECK(is_base(pair_action(c9).group, b9));

  CHECK_THROWS_AS(example_base_odd(builtin_group(GroupFamily::symmetric, 3)), EvenOrder);
}

TEST_CASE("odd order forces setwise-invariant pairs to be fixed pointwise") {
  for (unsigned n : {3u, 5u, 7u, 9u}) {
    auto G = builtin_group(GroupFamily::cyclic, n);
    const auto& elems = enumerate_elements(G, 1000);
    for (const auto& g : elems) {
      for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = a + 1; b < n; ++b) {
          bool setwise = (g.apply(a) == a && g.apply(b) == b) ||
                         (g.apply(a) == b && g.apply(b) == a);
          if (setwise) {
            CHECK(g.apply(a) == a);
            CHECK(g.apply(b) == b);
          }
        }
      }
    }
  }
  // a product of two odd cyclic groups, as a non-cyclic check
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_cycles(6, {{0, 1, 2}}));
  gens.push_back(Permutation::from_cycles(6, {{3, 4, 5}}));
  PermutationGroup G(6, std::move(gens));
  CHECK(G.order() == 9);
  CHECK(example_base_odd(G).count() == 3);
  CHECK(is_base(pair_action(G).group, example_base_odd(G)));
}
