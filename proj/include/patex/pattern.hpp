#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "patex/shape.hpp"

namespace patex {

// Sparse d-dimensional 0-1 pattern: a shape plus the sorted list of its ones.
// Patterns are the "needles" of containment queries and are typically tiny,
// so a coordinate list beats bit-packing here.
class Pattern {
 public:
  Pattern() = default;

  Pattern(Shape shape, std::vector<Coord> ones) : shape_(std::move(shape)), ones_(std::move(ones)) {
    require(!shape_.empty(), "pattern needs at least one axis");
    for (std::size_t e : shape_) require(e >= 1, "axis lengths must be positive");
    for (const Coord& c : ones_)
      require(in_bounds(c, shape_), "pattern one out of bounds " + coord_to_string(c));
    std::sort(ones_.begin(), ones_.end(), lex_less);
    for (std::size_t i = 1; i < ones_.size(); ++i)
      require(ones_[i] != ones_[i - 1], "duplicate one at " + coord_to_string(ones_[i]));
  }

  const Shape& shape() const { return shape_; }
  std::size_t dim() const { return shape_.size(); }
  const std::vector<Coord>& ones() const { return ones_; }
  std::size_t weight() const { return ones_.size(); }
  bool empty() const { return ones_.empty(); }

  bool at(const Coord& c) const {
    return std::binary_search(ones_.begin(), ones_.end(), c, lex_less);
  }

  // Tail of a coordinate: everything but the first axis.  Two ones lie in the
  // same 1-row exactly when their tails agree.
  static Coord tail(const Coord& c) { return Coord(c.begin() + 1, c.end()); }

  // Light: on every axis except the last, the ones carry pairwise distinct
  // coordinates (2-d: at most one one per first-axis line).  Vacuous for d=1.
  bool is_light() const {
    for (std::size_t ax = 0; ax + 1 < dim(); ++ax) {
      std::set<std::size_t> seen;
      for (const Coord& c : ones_)
        if (!seen.insert(c[ax]).second) return false;
    }
    return true;
  }

  // OR-projection along the first axis: (d)-dim -> (d-1)-dim, keeping the set
  // of occupied 1-rows.  Requires d >= 2.
  Pattern project_first() const {
    require(dim() >= 2, "projection needs dimension >= 2");
    std::set<Coord> tails;
    for (const Coord& c : ones_) tails.insert(tail(c));
    Shape s(shape_.begin() + 1, shape_.end());
    return Pattern(std::move(s), std::vector<Coord>(tails.begin(), tails.end()));
  }

  Pattern transpose_dims(std::size_t a, std::size_t b) const {
    require(a >= 1 && a <= dim() && b >= 1 && b <= dim(), "axis out of range");
    Shape s = shape_;
    std::swap(s[a - 1], s[b - 1]);
    std::vector<Coord> os = ones_;
    for (Coord& c : os) std::swap(c[a - 1], c[b - 1]);
    return Pattern(std::move(s), std::move(os));
  }

  // General form: result axis i is input axis perm[i] (1-based).
  Pattern transpose_dims(const std::vector<std::size_t>& perm) const {
    check_permutation(perm, dim());
    Shape s(dim());
    for (std::size_t i = 0; i < dim(); ++i) s[i] = shape_[perm[i] - 1];
    std::vector<Coord> os(ones_.size(), Coord(dim()));
    for (std::size_t t = 0; t < ones_.size(); ++t)
      for (std::size_t i = 0; i < dim(); ++i) os[t][i] = ones_[t][perm[i] - 1];
    return Pattern(std::move(s), std::move(os));
  }

  // Delete empty hyperplanes on every axis, compacting coordinates.  The
  // result's shape counts the distinct occupied positions per axis.
  Pattern normalize() const {
    require(!ones_.empty(), "cannot normalize a pattern with no ones");
    std::vector<std::vector<std::size_t>> used(dim());
    for (std::size_t ax = 0; ax < dim(); ++ax) {
      std::set<std::size_t> vals;
      for (const Coord& c : ones_) vals.insert(c[ax]);
      used[ax].assign(vals.begin(), vals.end());
    }
    Shape s(dim());
    for (std::size_t ax = 0; ax < dim(); ++ax) s[ax] = used[ax].size();
    std::vector<Coord> os = ones_;
    for (Coord& c : os) {
      for (std::size_t ax = 0; ax < dim(); ++ax) {
        auto it = std::lower_bound(used[ax].begin(), used[ax].end(), c[ax]);
        c[ax] = static_cast<std::size_t>(it - used[ax].begin()) + 1;
      }
    }
    return Pattern(std::move(s), std::move(os));
  }

  bool is_normalized() const {
    if (ones_.empty()) return false;  // shape axes are >= 1, so some hyperplane is empty
    Pattern n = normalize();
    return n.shape_ == shape_ && n.ones_ == ones_;
  }

  friend bool operator==(const Pattern& x, const Pattern& y) {
    return x.shape_ == y.shape_ && x.ones_ == y.ones_;
  }
  friend bool operator!=(const Pattern& x, const Pattern& y) { return !(x == y); }
  friend bool operator<(const Pattern& x, const Pattern& y) {
    if (x.shape_ != y.shape_) return x.shape_ < y.shape_;
    return x.ones_ < y.ones_;
  }

  std::string to_string() const {
    std::string out = shape_to_string(shape_) + "{";
    for (std::size_t i = 0; i < ones_.size(); ++i) {
      if (i) out += " ";
      out += coord_to_string(ones_[i]);
    }
    out += "}";
    return out;
  }

 private:
  Shape shape_;
  std::vector<Coord> ones_;
};

// Order isomorphism of the one-sets (per-axis strictly increasing relabeling).
inline bool order_isomorphic(const Pattern& a, const Pattern& b) {
  return a.normalize() == b.normalize();
}

// d=2 convenience: rows are axis-1 positions, characters axis-2 positions.
inline Pattern pattern_from_rows(const std::vector<std::string>& rows) {
  require(!rows.empty(), "need at least one row");
  std::size_t w = rows[0].size();
  std::vector<Coord> ones;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == w, "ragged rows");
    for (std::size_t j = 0; j < w; ++j) {
      char ch = rows[i][j];
      require(ch == '0' || ch == '1' || ch == '.' || ch == '*',
              "row characters must be 0/1 (or ./*)");
      if (ch == '1' || ch == '*') ones.push_back({i + 1, j + 1});
    }
  }
  return Pattern({rows.size(), w}, std::move(ones));
}

// 2 x t zig-zag: one at (i,j) iff i+j is even.  Light, weight t.
inline Pattern zigzag_pattern(std::size_t t) {
  require(t >= 1, "zigzag needs t >= 1");
  std::vector<Coord> ones;
  for (std::size_t j = 1; j <= t; ++j) ones.push_back({(j % 2 == 0) ? std::size_t{2} : std::size_t{1}, j});
  // (i+j) even: j even -> i = 2, j odd -> i = 1.
  return Pattern({2, t}, std::move(ones));
}

// Single-row pattern with r ones: 1 x r all-ones (d=2), used by the
// one-dimensional extremal identities via its d=1 analogue below.
inline Pattern all_ones_row(std::size_t r) {
  std::vector<Coord> ones;
  for (std::size_t j = 1; j <= r; ++j) ones.push_back({std::size_t{1}, j});
  return Pattern({1, r}, std::move(ones));
}

// d=1 pattern with r ones at positions 1..r.
inline Pattern ones_vector(std::size_t r) {
  std::vector<Coord> ones;
  for (std::size_t j = 1; j <= r; ++j) ones.push_back({j});
  return Pattern({r}, std::move(ones));
}

}  // namespace patex
