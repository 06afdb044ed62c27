#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace patex {

// Coordinates are 1-based on every axis: a d-dimensional matrix with shape
// (m_1,...,m_d) has cells (x_1,...,x_d) with 1 <= x_i <= m_i.
using Coord = std::vector<std::size_t>;
using Shape = std::vector<std::size_t>;

inline std::size_t dim(const Shape& s) { return s.size(); }

inline std::size_t cell_count(const Shape& s) {
  std::size_t n = 1;
  for (std::size_t e : s) {
    if (e == 0) return 0;
    n *= e;
  }
  return n;
}

inline bool in_bounds(const Coord& c, const Shape& s) {
  if (c.size() != s.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] < 1 || c[i] > s[i]) return false;
  return true;
}

// Row-major linear index with axis 1 outermost (most significant).
inline std::size_t linear_index(const Coord& c, const Shape& s) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < s.size(); ++i) idx = idx * s[i] + (c[i] - 1);
  return idx;
}

inline Coord coord_of_index(std::size_t idx, const Shape& s) {
  Coord c(s.size());
  for (std::size_t i = s.size(); i-- > 0;) {
    c[i] = idx % s[i] + 1;
    idx /= s[i];
  }
  return c;
}

// Lexicographic comparison, axis 1 most significant.  Matches the order of
// linear indices for coords of a common shape.
inline int lex_compare(const Coord& a, const Coord& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

inline bool lex_less(const Coord& a, const Coord& b) { return lex_compare(a, b) < 0; }

// Advance c through the shape in lex order; returns false after the last cell.
inline bool next_cell(Coord& c, const Shape& s) {
  for (std::size_t i = s.size(); i-- > 0;) {
    if (c[i] < s[i]) {
      ++c[i];
      return true;
    }
    c[i] = 1;
  }
  return false;
}

inline std::string coord_to_string(const Coord& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  out += ")";
  return out;
}

inline std::string shape_to_string(const Shape& s) { return coord_to_string(s); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Validates a 1-based axis permutation: length d, entries a rearrangement of 1..d.
inline void check_permutation(const std::vector<std::size_t>& perm, std::size_t d) {
  require(perm.size() == d, "axis permutation has wrong length");
  std::vector<bool> seen(d, false);
  for (std::size_t v : perm) {
    require(v >= 1 && v <= d, "axis permutation entry out of range");
    require(!seen[v - 1], "axis permutation repeats an entry");
    seen[v - 1] = true;
  }
}

}  // namespace patex
