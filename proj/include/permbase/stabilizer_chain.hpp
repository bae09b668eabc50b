#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "permbase/errors.hpp"
#include "permbase/permutation.hpp"

namespace permbase {

// Stabilizer chain built with the deterministic Schreier-Sims algorithm.
//
// A base prefix can be prescribed: the first prefix.size() levels are exactly
// those points, in order, even when their orbit at that level is trivial.
// With prefix = points of Y, level_generators(|Y|) generates the pointwise
// stabilizer G_Y and order_from_level(|Y|) is its order.
class StabilizerChain {
 public:
  StabilizerChain(unsigned degree, const std::vector<Permutation>& generators,
                  const std::vector<unsigned>& base_prefix = {})
      : degree_(degree) {
    for (const auto& g : generators) {
      if (g.degree() != degree_) throw DegreeMismatch("generator degree mismatch");
      if (!g.is_identity() && !contains_perm(strong_, g)) strong_.push_back(g);
    }
    for (unsigned b : base_prefix) {
      if (b >= degree_) throw IndexOutOfRange("base point out of range");
      for (unsigned prev : base_) {
        if (prev == b) throw DuplicateEntries("duplicate base point");
      }
      base_.push_back(b);
    }
    // Every strong generator must move some base point.
    for (const auto& g : strong_) {
      if (fixes_prefix(g, base_.size())) base_.push_back(first_moved(g));
    }
    levels_.resize(base_.size());
    for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_level(i);
    complete_chain();
  }

  unsigned degree() const { return degree_; }

  std::size_t num_levels() const { return levels_.size(); }

  unsigned base_point(std::size_t lvl) const { return base_[lvl]; }

  std::uint64_t order() const { return order_from_level(0); }

  // Order of the subgroup fixing the first lvl base points pointwise.
  std::uint64_t order_from_level(std::size_t lvl) const {
    std::uint64_t n = 1;
    for (std::size_t i = lvl; i < levels_.size(); ++i) n *= levels_[i].orbit.size();
    return n;
  }

  // Strong generators fixing the first lvl base points pointwise; they
  // generate the stabilizer of that prefix.
  std::vector<Permutation> level_generators(std::size_t lvl) const {
    std::vector<Permutation> out;
    for (const auto& g : strong_) {
      if (fixes_prefix(g, lvl)) out.push_back(g);
    }
    return out;
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    auto [residue, stuck] = sift(p, 0);
    return stuck == levels_.size() && residue.is_identity();
  }

 private:
  struct Level {
    unsigned point = 0;
    std::vector<Permutation> gens;
    std::vector<int> slot;                 // point -> transversal index, -1 if outside orbit
    std::vector<unsigned> orbit;           // BFS order, orbit[0] == point
    std::vector<Permutation> transversal;  // rep u with point^u == orbit[slot]
  };

  static bool contains_perm(const std::vector<Permutation>& v, const Permutation& p) {
    for (const auto& q : v)
      if (q == p) return true;
    return false;
  }

  bool fixes_prefix(const Permutation& g, std::size_t lvl) const {
    for (std::size_t i = 0; i < lvl; ++i)
      if (!g.fixes(base_[i])) return false;
    return true;
  }

  unsigned first_moved(const Permutation& g) const {
    for (unsigned x = 0; x < degree_; ++x)
      if (!g.fixes(x)) return x;
    throw BadParameter("identity has no moved point");
  }

  void rebuild_level(std::size_t i) {
    Level& lv = levels_[i];
    lv.point = base_[i];
    lv.gens = level_generators(i);
    lv.slot.assign(degree_, -1);
    lv.orbit.clear();
    lv.transversal.clear();
    lv.slot[lv.point] = 0;
    lv.orbit.push_back(lv.point);
    lv.transversal.push_back(Permutation::identity(degree_));
    for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
      unsigned pt = lv.orbit[head];
      for (const auto& g : lv.gens) {
        unsigned img = g.apply(pt);
        if (lv.slot[img] < 0) {
          lv.slot[img] = static_cast<int>(lv.orbit.size());
          lv.orbit.push_back(img);
          lv.transversal.push_back(compose(lv.transversal[lv.slot[pt]], g));
        }
      }
    }
  }

  // Sift p through levels [from, end); returns the residue and the level
  // where sifting stopped (== num_levels when it passed every level).
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      unsigned img = p.apply(levels_[l].point);
      int s = levels_[l].slot[img];
      if (s < 0) return {std::move(p), l};
      p = compose(p, levels_[l].transversal[s].inverse());
    }
    return {std::move(p), levels_.size()};
  }

  void complete_chain() {
    if (levels_.empty()) return;
    std::size_t i = levels_.size() - 1;
    while (true) {
      bool clean = true;
      for (std::size_t oi = 0; clean && oi < levels_[i].orbit.size(); ++oi) {
        unsigned pt = levels_[i].orbit[oi];
        Permutation u = levels_[i].transversal[levels_[i].slot[pt]];
        for (std::size_t gi = 0; gi < levels_[i].gens.size(); ++gi) {
          const Permutation& s = levels_[i].gens[gi];
          unsigned img = s.apply(pt);
          Permutation schreier =
              compose(compose(u, s), levels_[i].transversal[levels_[i].slot[img]].inverse());
          if (schreier.is_identity()) continue;
          auto [residue, stuck] = sift(std::move(schreier), i + 1);
          if (residue.is_identity()) continue;
          if (stuck == levels_.size()) {
            base_.push_back(first_moved(residue));
            levels_.emplace_back();
          }
          strong_.push_back(std::move(residue));
          for (std::size_t l = i + 1; l <= stuck; ++l) rebuild_level(l);
          i = stuck;
          clean = false;
          break;
        }
      }
      if (clean) {
        if (i == 0) break;
        --i;
      }
    }
  }

  unsigned degree_;
  std::vector<unsigned> base_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

}  // namespace permbase
