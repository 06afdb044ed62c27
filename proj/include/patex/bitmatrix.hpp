#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "patex/pattern.hpp"
#include "patex/shape.hpp"

namespace patex {

// Dense bit-packed d-dimensional 0-1 matrix.  Hosts of containment queries
// are dense by nature (search fills them up), so one bit per cell.
class BitMatrix {
 public:
  BitMatrix() = default;

  explicit BitMatrix(Shape shape) : shape_(std::move(shape)) {
    require(!shape_.empty(), "matrix needs at least one axis");
    for (std::size_t e : shape_) require(e >= 1, "axis lengths must be positive");
    cells_ = cell_count(shape_);
    words_.assign((cells_ + 63) / 64, 0);
  }

  static BitMatrix from_pattern(const Pattern& p) {
    BitMatrix m(p.shape());
    for (const Coord& c : p.ones()) m.set(c, true);
    return m;
  }

  const Shape& shape() const { return shape_; }
  std::size_t dim() const { return shape_.size(); }
  std::size_t cells() const { return cells_; }

  bool get(const Coord& c) const { return get_index(linear_index(c, shape_)); }
  bool get_index(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(const Coord& c, bool v) { set_index(linear_index(c, shape_), v); }
  void set_index(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  std::size_t count_ones() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }

  // Ones in lex order (linear order == lex order for a fixed shape).
  std::vector<Coord> ones() const {
    std::vector<Coord> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
        out.push_back(coord_of_index(wi * 64 + b, shape_));
        w &= w - 1;
      }
    }
    return out;
  }

  Pattern to_pattern() const { return Pattern(shape_, ones()); }

  // Stretch: new all-zero hyperplane at 1-based position pos (1..len+1) of
  // the given axis; existing ones at or past pos shift up by one.
  BitMatrix insert_zero_hyperplane(std::size_t axis, std::size_t pos) const {
    require(axis >= 1 && axis <= dim(), "axis out of range");
    require(pos >= 1 && pos <= shape_[axis - 1] + 1, "insert position out of range");
    Shape s = shape_;
    ++s[axis - 1];
    BitMatrix out(s);
    for (Coord c : ones()) {
      if (c[axis - 1] >= pos) ++c[axis - 1];
      out.set(c, true);
    }
    return out;
  }

  BitMatrix transpose_dims(std::size_t a, std::size_t b) const {
    require(a >= 1 && a <= dim() && b >= 1 && b <= dim(), "axis out of range");
    Shape s = shape_;
    std::swap(s[a - 1], s[b - 1]);
    BitMatrix out(s);
    for (Coord c : ones()) {
      std::swap(c[a - 1], c[b - 1]);
      out.set(c, true);
    }
    return out;
  }

  // General form: result axis i is input axis perm[i] (1-based).
  BitMatrix transpose_dims(const std::vector<std::size_t>& perm) const {
    check_permutation(perm, dim());
    Shape s(dim());
    for (std::size_t i = 0; i < dim(); ++i) s[i] = shape_[perm[i] - 1];
    BitMatrix out(s);
    Coord t(dim());
    for (const Coord& c : ones()) {
      for (std::size_t i = 0; i < dim(); ++i) t[i] = c[perm[i] - 1];
      out.set(t, true);
    }
    return out;
  }

  // OR-projection along the first axis: (d-1)-dim matrix of occupied 1-rows.
  BitMatrix or_project_first() const {
    require(dim() >= 2, "projection needs dimension >= 2");
    Shape s(shape_.begin() + 1, shape_.end());
    BitMatrix out(s);
    for (const Coord& c : ones()) out.set(Pattern::tail(c), true);
    return out;
  }

  friend bool operator==(const BitMatrix& x, const BitMatrix& y) {
    return x.shape_ == y.shape_ && x.words_ == y.words_;
  }
  friend bool operator!=(const BitMatrix& x, const BitMatrix& y) { return !(x == y); }

 private:
  Shape shape_;
  std::size_t cells_ = 0;
  std::vector<std::uint64_t> words_;
};

// A 1-row is the set of cells sharing a tail (all coordinates but the first).
// Rows are indexed 0..row_count-1 in lex order of the tail.
inline std::size_t row_count(const Shape& s) {
  std::size_t n = 1;
  for (std::size_t i = 1; i < s.size(); ++i) n *= s[i];
  return n;
}

inline std::size_t row_index_of(const Coord& c, const Shape& s) {
  std::size_t idx = 0;
  for (std::size_t i = 1; i < s.size(); ++i) idx = idx * s[i] + (c[i] - 1);
  return idx;
}

// Cell (x_1 = first, tail = row) of a given 1-row.
inline Coord cell_in_row(std::size_t first, std::size_t row, const Shape& s) {
  Coord c(s.size());
  for (std::size_t i = s.size(); i-- > 1;) {
    c[i] = row % s[i] + 1;
    row /= s[i];
  }
  c[0] = first;
  return c;
}

// Ones per 1-row.
inline std::vector<std::size_t> row_weights(const BitMatrix& m) {
  std::vector<std::size_t> w(row_count(m.shape()), 0);
  for (const Coord& c : m.ones()) ++w[row_index_of(c, m.shape())];
  return w;
}

inline BitMatrix matrix_from_rows(const std::vector<std::string>& rows) {
  return BitMatrix::from_pattern(pattern_from_rows(rows));
}

}  // namespace patex
