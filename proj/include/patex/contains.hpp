#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "patex/bitmatrix.hpp"
#include "patex/pattern.hpp"

namespace patex {

// Witness of containment: one strictly increasing total map per axis from
// pattern indices to host indices.  Applying the maps to every one of the
// pattern lands on a one of the host.
struct Occurrence {
  std::vector<std::vector<std::size_t>> axis_maps;

  // Host cell that pattern coordinate c lands on.
  Coord image(const Coord& c) const {
    Coord out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = axis_maps[i][c[i] - 1];
    return out;
  }

  friend bool operator==(const Occurrence& a, const Occurrence& b) {
    return a.axis_maps == b.axis_maps;
  }
};

// Enumerate occurrences of P in M in lexicographic order of the flattened
// axis maps; stop early when the callback returns false.
void for_each_occurrence(const BitMatrix& M, const Pattern& P,
                         const std::function<bool(const Occurrence&)>& visit);

// Lexicographically least occurrence, or nullopt.
std::optional<Occurrence> find_occurrence(const BitMatrix& M, const Pattern& P);

bool contains(const BitMatrix& M, const Pattern& P);

// Independent re-check of the Occurrence invariants against M and P.
bool validate_occurrence(const BitMatrix& M, const Pattern& P, const Occurrence& occ);

}  // namespace patex
