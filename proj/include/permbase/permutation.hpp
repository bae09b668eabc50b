#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "permbase/errors.hpp"
#include "permbase/point_set.hpp"

namespace permbase {

// A bijection of {0, ..., degree-1} stored as an image table. Points are
// 0-based internally; all textual I/O is 1-based (see io.hpp).
class Permutation {
 public:
  static Permutation identity(unsigned degree) {
    std::vector<unsigned> im(degree);
    for (unsigned i = 0; i < degree; ++i) im[i] = i;
    return Permutation(std::move(im), Trusted{});
  }

  // Builds a permutation from 0-based cycles, e.g. {{0,1},{2,3}} = (1 2)(3 4).
  static Permutation from_cycles(unsigned degree,
                                 const std::vector<std::vector<unsigned>>& cycles) {
    std::vector<unsigned> im(degree);
    for (unsigned i = 0; i < degree; ++i) im[i] = i;
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        unsigned from = c[i], to = c[(i + 1) % c.size()];
        if (from >= degree || to >= degree)
          throw IndexOutOfRange("cycle point out of range");
        if (im[from] != from)
          throw BadParameter("cycles are not disjoint");
        im[from] = to;
      }
    }
    return Permutation(std::move(im), Trusted{});
  }

  explicit Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
    if (images_.empty()) throw BadParameter("degree must be at least 1");
    std::vector<bool> seen(images_.size(), false);
    for (unsigned v : images_) {
      if (v >= images_.size() || seen[v]) throw BadParameter("image table is not a bijection");
      seen[v] = true;
    }
  }

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }

  unsigned apply(unsigned x) const {
    if (x < images_.size()) return images_[x];
    throw IndexOutOfRange("point " + std::to_string(x) + " out of range");
  }

  const std::vector<unsigned>& images() const { return images_; }

  bool is_identity() const {
    for (unsigned i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  bool fixes(unsigned x) const { return apply(x) == x; }

  // Points fixed by this permutation.
  PointSet fixed_points() const {
    PointSet s(degree());
    for (unsigned i = 0; i < degree(); ++i)
      if (images_[i] == i) s.add(i);
    return s;
  }

  Permutation inverse() const {
    std::vector<unsigned> inv(degree());
    for (unsigned i = 0; i < degree(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv), Trusted{});
  }

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  struct Trusted {};
  Permutation(std::vector<unsigned> images, Trusted) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation&, const Permutation&);

  std::vector<unsigned> images_;
};

// Right-action product: the result applies p first, then q, so that
// apply(compose(p, q), x) == apply(q, apply(p, x)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch("composing permutations of different degree");
  std::vector<unsigned> im(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i) im[i] = q.images_[p.images_[i]];
  return Permutation(std::move(im), Permutation::Trusted{});
}

inline Permutation inverse(const Permutation& p) { return p.inverse(); }

inline unsigned apply(const Permutation& p, unsigned x) { return p.apply(x); }

}  // namespace permbase
