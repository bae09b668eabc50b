#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "permbase/errors.hpp"

namespace permbase {

// Fixed-width bit vector over the domain {0, ..., width-1}. The universal
// currency for subsets of the points a group acts on.
class PointSet {
 public:
  PointSet() = default;

  explicit PointSet(unsigned width)
      : width_(width), words_((width + 63) / 64, 0) {}

  PointSet(unsigned width, std::initializer_list<unsigned> points)
      : PointSet(width) {
    for (unsigned p : points) add(p);
  }

  static PointSet full(unsigned width) {
    PointSet s(width);
    for (unsigned p = 0; p < width; ++p) s.add(p);
    return s;
  }

  unsigned width() const { return width_; }

  bool contains(unsigned p) const {
    check(p);
    return (words_[p >> 6] >> (p & 63)) & 1u;
  }

  void add(unsigned p) {
    check(p);
    words_[p >> 6] |= std::uint64_t{1} << (p & 63);
  }

  void remove(unsigned p) {
    check(p);
    words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63));
  }

  unsigned count() const {
    unsigned c = 0;
    for (auto w : words_) c += static_cast<unsigned>(__builtin_popcountll(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_full() const { return count() == width_; }

  PointSet operator&(const PointSet& o) const {
    PointSet r = aligned(o);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  PointSet operator|(const PointSet& o) const {
    PointSet r = aligned(o);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
  }

  // Set difference: points of *this not in o.
  PointSet operator-(const PointSet& o) const {
    PointSet r = aligned(o);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
    return r;
  }

  PointSet complement() const {
    PointSet r(width_);
    for (unsigned p = 0; p < width_; ++p)
      if (!contains(p)) r.add(p);
    return r;
  }

  bool is_subset_of(const PointSet& o) const {
    aligned(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const PointSet& o) const {
    return width_ == o.width_ && words_ == o.words_;
  }
  bool operator!=(const PointSet& o) const { return !(*this == o); }

  std::vector<unsigned> points() const {
    std::vector<unsigned> out;
    out.reserve(count());
    for (unsigned p = 0; p < width_; ++p)
      if (contains(p)) out.push_back(p);
    return out;
  }

  // Canonical order on same-width sets: by size, then by the sorted element
  // list lexicographically. Makes all family/report output deterministic.
  static bool canonical_less(const PointSet& a, const PointSet& b) {
    unsigned ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (unsigned p = 0; p < a.width_ && p < b.width_; ++p) {
      bool ina = a.contains(p), inb = b.contains(p);
      if (ina != inb) return ina;  // the set holding the smaller point is smaller
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<unsigned>{}(width_);
    for (auto w : words_) h = h * 1099511628211ull + std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  void check(unsigned p) const {
    if (p >= width_) throw IndexOutOfRange("point " + std::to_string(p) + " out of range");
  }

  PointSet aligned(const PointSet& o) const {
    if (width_ != o.width_) throw DegreeMismatch("point set widths differ");
    return PointSet(width_);
  }

  unsigned width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const { return s.hash(); }
};

}  // namespace permbase
