#include "doctest.h"
#include "permbase/permutation.hpp"
#include "permbase/point_set.hpp"

using namespace permbase;

TEST_CASE("apply follows the image table") {
  auto c = Permutation::from_cycles(3, {{0, 1, 2}});  // (1 2 3)
  CHECK(c.apply(1) == 2);
  CHECK(Permutation::identity(6).apply(5) == 5);
  auto d = Permutation::from_cycles(4, {{0, 1}, {2, 3}});  // (1 2)(3 4)
  CHECK(d.apply(2) == 3);
  volatile unsigned past_end = 3;  // opaque: gcc 11 misfires -Warray-bounds on the constant
  CHECK_THROWS_AS(c.apply(past_end), IndexOutOfRange);
}

TEST_CASE("compose applies left factor first") {
  auto t = Permutation::from_cycles(2, {{0, 1}});
  CHECK(compose(t, t).is_identity());
  auto c = Permutation::from_cycles(3, {{0, 1, 2}});
  CHECK(compose(c, c.inverse()).is_identity());
  // (1 2) then (2 3) sends 1->3, 3->2, 2->1, i.e. (1 3 2)
  auto a = Permutation::from_cycles(3, {{0, 1}});
  auto b = Permutation::from_cycles(3, {{1, 2}});
  CHECK(compose(a, b) == Permutation::from_cycles(3, {{0, 2, 1}}));
  CHECK_THROWS_AS(compose(a, t), DegreeMismatch);
}

TEST_CASE("inverse") {
  CHECK(Permutation::from_cycles(3, {{0, 1, 2}}).inverse() ==
        Permutation::from_cycles(3, {{0, 2, 1}}));
  CHECK(Permutation::identity(4).inverse().is_identity());
  auto d = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
  CHECK(d.inverse() == d);
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation(std::vector<unsigned>{0, 0}), BadParameter);
  CHECK_THROWS_AS(Permutation(std::vector<unsigned>{2, 1}), BadParameter);
  CHECK_THROWS_AS(Permutation(std::vector<unsigned>{}), BadParameter);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), BadParameter);
}

TEST_CASE("point set operations") {
  PointSet a(70, {0, 5, 64});
  CHECK(a.count() == 3);
  CHECK(a.contains(64));
  CHECK_FALSE(a.contains(63));
  PointSet b(70, {5, 63});
  CHECK((a & b) == PointSet(70, {5}));
  CHECK((a | b) == PointSet(70, {0, 5, 63, 64}));
  CHECK((a - b) == PointSet(70, {0, 64}));
  CHECK(PointSet(70, {5}).is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK(a.complement().count() == 67);
  CHECK(PointSet::full(70).is_full());
  CHECK_THROWS_AS(a.contains(70), IndexOutOfRange);
  CHECK_THROWS_AS(a & PointSet(3), DegreeMismatch);
}

TEST_CASE("canonical order: size first, then smallest differing point") {
  PointSet e(4);
  PointSet s1(4, {0}), s2(4, {1}), p12(4, {0, 1}), p14(4, {0, 3}), p23(4, {1, 2});
  CHECK(PointSet::canonical_less(e, s1));
  CHECK(PointSet::canonical_less(s1, s2));
  CHECK(PointSet::canonical_less(s2, p12));
  CHECK(PointSet::canonical_less(p12, p14));
  CHECK(PointSet::canonical_less(p14, p23));
  CHECK_FALSE(PointSet::canonical_less(p23, p14));
  CHECK_FALSE(PointSet::canonical_less(s1, s1));
}
