#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permbase/brsc.hpp"
#include "permbase/errors.hpp"
#include "permbase/group.hpp"

namespace permbase {

// Unordered pairs {a, b} with a < b over a base domain of n points, indexed
// lexicographically and gap-free: 01, 02, ..., 0(n-1), 12, 13, ...
class PairIndexMap {
 public:
  explicit PairIndexMap(unsigned n) : n_(n), index_(n, std::vector<unsigned>(n, 0)) {
    if (n < 2) throw DegreeTooSmall("pair map needs at least 2 base points");
    for (unsigned a = 0; a < n; ++a) {
      for (unsigned b = a + 1; b < n; ++b) {
        index_[a][b] = index_[b][a] = static_cast<unsigned>(pairs_.size());
        pairs_.emplace_back(a, b);
      }
    }
  }

  unsigned base_degree() const { return n_; }
  unsigned size() const { return static_cast<unsigned>(pairs_.size()); }

  unsigned index_of(unsigned a, unsigned b) const {
    if (a >= n_ || b >= n_ || a == b) throw IndexOutOfRange("bad pair");
    return index_[a][b];
  }

  std::pair<unsigned, unsigned> pair_at(unsigned idx) const {
    if (idx >= pairs_.size()) throw IndexOutOfRange("pair index out of range");
    return pairs_[idx];
  }

 private:
  unsigned n_;
  std::vector<std::pair<unsigned, unsigned>> pairs_;
  std::vector<std::vector<unsigned>> index_;
};

struct PairAction {
  PermutationGroup group;  // induced action on pair indices
  PairIndexMap map;
};

// The induced action {x,y}g = {xg,yg} on 2-subsets. Faithful for degree >= 3,
// so the induced group has the same order.
inline PairAction pair_action(const PermutationGroup& G) {
  unsigned n = G.degree();
  if (n < 3) throw DegreeTooSmall("pair action needs degree >= 3");
  PairIndexMap map(n);
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) {
    std::vector<unsigned> im(map.size());
    for (unsigned idx = 0; idx < map.size(); ++idx) {
      auto [a, b] = map.pair_at(idx);
      im[idx] = map.index_of(g.apply(a), g.apply(b));
    }
    gens.emplace_back(std::move(im));
  }
  return {PermutationGroup(map.size(), std::move(gens)), std::move(map)};
}

// k-subsets of the base domain in lexicographic order.
class SubsetIndexMap {
 public:
  SubsetIndexMap(unsigned n, unsigned k, std::uint64_t bound) : n_(n), k_(k) {
    std::vector<unsigned> current(k);
    for (unsigned i = 0; i < k; ++i) current[i] = i;
    while (true) {
      subsets_.push_back(current);
      if (subsets_.size() > bound)
        throw SizeExplosion("induced degree exceeds bound " + std::to_string(bound));
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && current[i] == n - k + i) --i;
      if (i < 0) break;
      ++current[i];
      for (unsigned j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
    }
  }

  unsigned base_degree() const { return n_; }
  unsigned subset_size() const { return k_; }
  unsigned size() const { return static_cast<unsigned>(subsets_.size()); }

  const std::vector<unsigned>& subset_at(unsigned idx) const { return subsets_[idx]; }

  unsigned index_of(std::vector<unsigned> sorted) const {
    auto it = std::lower_bound(subsets_.begin(), subsets_.end(), sorted);
    if (it == subsets_.end() || *it != sorted) throw IndexOutOfRange("not a subset");
    return static_cast<unsigned>(it - subsets_.begin());
  }

 private:
  unsigned n_;
  unsigned k_;
  std::vector<std::vector<unsigned>> subsets_;
};

struct SubsetAction {
  PermutationGroup group;
  SubsetIndexMap map;
};

// Induced action on k-subsets, the k = 2 case being pair_action.
inline SubsetAction k_subset_action(const PermutationGroup& G, unsigned k,
                                    const SearchLimits& limits = {}) {
  unsigned n = G.degree();
  if (k < 1 || k >= n) throw DegreeTooSmall("need 1 <= k < degree");
  SubsetIndexMap map(n, k, limits.subset_bound);
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) {
    std::vector<unsigned> im(map.size());
    for (unsigned idx = 0; idx < map.size(); ++idx) {
      std::vector<unsigned> image;
      image.reserve(k);
      for (unsigned p : map.subset_at(idx)) image.push_back(g.apply(p));
      std::sort(image.begin(), image.end());
      im[idx] = map.index_of(std::move(image));
    }
    gens.emplace_back(std::move(im));
  }
  return {PermutationGroup(map.size(), std::move(gens)), std::move(map)};
}

enum class GroupFamily { symmetric, alternating, cyclic, dihedral };

// Standard generators: Sym <(1 2), (1 ... n)>, Alt <consecutive 3-cycles>,
// Cyc <(1 ... n)>, Dih <rotation, reflection>.
inline PermutationGroup builtin_group(GroupFamily family, unsigned n) {
  if (n < 1) throw BadParameter("n must be at least 1");
  auto full_cycle = [&]() {
    std::vector<unsigned> c(n);
    for (unsigned i = 0; i < n; ++i) c[i] = i;
    return c;
  };
  switch (family) {
    case GroupFamily::symmetric: {
      if (n == 1) return PermutationGroup::trivial(1);
      std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}})};
      if (n > 2) gens.push_back(Permutation::from_cycles(n, {full_cycle()}));
      return PermutationGroup(n, std::move(gens));
    }
    case GroupFamily::alternating: {
      if (n <= 2) return PermutationGroup::trivial(n);
      std::vector<Permutation> gens;
      for (unsigned i = 0; i + 2 < n; ++i)
        gens.push_back(Permutation::from_cycles(n, {{i, i + 1, i + 2}}));
      return PermutationGroup(n, std::move(gens));
    }
    case GroupFamily::cyclic: {
      if (n == 1) return PermutationGroup::trivial(1);
      return PermutationGroup(n, {Permutation::from_cycles(n, {full_cycle()})});
    }
    case GroupFamily::dihedral: {
      if (n < 3) throw BadParameter("dihedral group needs n >= 3");
      std::vector<std::vector<unsigned>> reflection;
      for (unsigned i = 0; i < n / 2; ++i) reflection.push_back({i, n - 1 - i});
      return PermutationGroup(n, {Permutation::from_cycles(n, {full_cycle()}),
                                  Permutation::from_cycles(n, reflection)});
    }
  }
  throw BadParameter("unknown group family");
}

// "sym:n", "alt:n", "cyc:n", "dih:n".
inline std::optional<std::pair<GroupFamily, unsigned>> parse_group_spec(
    const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return std::nullopt;
  std::string name = spec.substr(0, colon);
  std::string num = spec.substr(colon + 1);
  if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
    return std::nullopt;
  GroupFamily family;
  if (name == "sym")
    family = GroupFamily::symmetric;
  else if (name == "alt")
    family = GroupFamily::alternating;
  else if (name == "cyc")
    family = GroupFamily::cyclic;
  else if (name == "dih")
    family = GroupFamily::dihedral;
  else
    return std::nullopt;
  unsigned long n = std::stoul(num);
  if (n == 0 || n > 1u << 20) return std::nullopt;
  return std::make_pair(family, static_cast<unsigned>(n));
}

// A base of the pair action of Sym(n) of size about 2n/3, built from blocks
// {3i+1, 3i+2}, {3i+2, 3i+3} (1-based): fixing both pairs of a block fixes
// its three points. Leftover points per residue class:
//   n = 3m:     m blocks, size 2n/3; the blocks cover everything.
//   n = 3m+1:   blocks on the first n-1 points; the last point is forced.
//   n = 3m+2:   blocks on the first n-2 points plus the pair {n-1, 1}; the
//               extra pair pins point n-1, the last point is forced.
inline PointSet example_base_sym_pairs(unsigned n) {
  if (n < 3) throw BadParameter("need n >= 3");
  PairIndexMap map(n);
  PointSet base(map.size());
  unsigned covered = n - (n % 3);  // largest multiple of 3 below or equal n
  for (unsigned block = 0; block + 2 < covered; block += 3) {
    base.add(map.index_of(block, block + 1));
    base.add(map.index_of(block + 1, block + 2));
  }
  if (n % 3 == 2) base.add(map.index_of(0, n - 2));
  return base;
}

// A base of the pair action of a group of odd order: disjoint pairs
// {1,2}, {3,4}, ... An odd-order element preserving a pair setwise cannot
// swap it, so it fixes the pair pointwise; the blocks pin every point they
// cover and at most one point remains, which is then forced.
inline PointSet example_base_odd(const PermutationGroup& G) {
  if (G.order() % 2 == 0) throw EvenOrder("group order is even");
  unsigned n = G.degree();
  if (n < 3) throw DegreeTooSmall("pair action needs degree >= 3");
  PairIndexMap map(n);
  PointSet base(map.size());
  for (unsigned i = 0; i + 1 < n; i += 2) base.add(map.index_of(i, i + 1));
  return base;
}

}  // namespace permbase
