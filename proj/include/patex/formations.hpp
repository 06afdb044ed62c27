#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "patex/bitmatrix.hpp"
#include "patex/contains.hpp"
#include "patex/pattern.hpp"

namespace patex {

// Names the family F of all (base,s)-formations: sets of s*|ones(base)| ones
// in a host one dimension above base, split into s first-coordinate-separated
// groups that occupy a common set of 1-rows whose deduplicated projection is
// order-isomorphic to base.
struct FormationSpec {
  Pattern base;
  std::size_t s = 1;

  FormationSpec(Pattern b, std::size_t s_) : base(std::move(b)), s(s_) {
    require(s >= 1, "formation needs s >= 1");
    require(base.weight() >= 1, "formation base needs at least one one");
  }
};

// Names the family of doubled (r,s)-formations: r columns of a 2-d matrix and
// s consecutive first-axis intervals, with one one per column in the first and
// last interval and two in each interior interval (r(2s-2) ones total).
struct DoubledSpec {
  std::size_t r = 1;
  std::size_t s = 2;

  DoubledSpec(std::size_t r_, std::size_t s_) : r(r_), s(s_) {
    require(r >= 1, "doubled formation needs r >= 1");
    require(s >= 2, "doubled formation needs s >= 2");
  }
};

// The chosen 1-rows and, per group, the one host cell used in each of them.
struct FormationWitness {
  std::vector<Coord> tails;
  std::vector<std::vector<Coord>> groups;
};

// Raised when an exhaustive enumeration would exceed its configured budget;
// an explicit refusal rather than a silent wrong or slow answer.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr std::uint64_t kDefaultBruteCap = 10'000'000;

// Largest s such that M contains a member of F_{base,s}: best greedy sweep
// count over all candidate 1-row sets (occurrences of normalize(base) in the
// first-axis OR-projection of M).
std::size_t max_formation_groups(const BitMatrix& M, const Pattern& base);

bool contains_formation(const BitMatrix& M, const FormationSpec& spec);

std::optional<FormationWitness> find_formation(const BitMatrix& M, const FormationSpec& spec);

bool contains_doubled_formation(const BitMatrix& M, const DoubledSpec& spec);

// Exhaustive oracle: enumerates candidate s*r-subsets of M's ones and tests
// the raw formation definition on each.  Throws CapExceeded when the
// candidate count would exceed cap.
bool brute_force_formation(const BitMatrix& M, const FormationSpec& spec,
                           std::uint64_t cap = kDefaultBruteCap);

// Enumerate every matrix of host_shape whose ones are exactly one member of
// F_{base,s}.  Visit order is deterministic; return false to stop early.
void for_each_formation_member(const Shape& host_shape, const Pattern& base, std::size_t s,
                               const std::function<bool(const BitMatrix&)>& visit);

}  // namespace patex
