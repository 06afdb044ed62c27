#pragma once

#include <string>
#include <vector>

#include "patex/bitmatrix.hpp"
#include "patex/formations.hpp"
#include "patex/pattern.hpp"

namespace patex {

// A forbidden family: plain patterns, formation families, and doubled
// formation families, all against hosts of one common dimensionality.
struct ForbiddenFamily {
  std::vector<Pattern> patterns;
  std::vector<FormationSpec> formations;
  std::vector<DoubledSpec> doubled;

  // Host dimensionality demanded by the members (patterns: their own d;
  // formations: base d + 1; doubled: 2).  Throws unless nonempty and
  // consistent; members must carry at least one one.
  std::size_t host_dim() const;

  // Canonical description: class-tagged member strings, sorted within each
  // class, so member order never changes the key.
  std::string canonical_key() const;
};

inline ForbiddenFamily family_of(Pattern p) {
  ForbiddenFamily f;
  f.patterns.push_back(std::move(p));
  return f;
}

inline ForbiddenFamily family_of(FormationSpec spec) {
  ForbiddenFamily f;
  f.formations.push_back(std::move(spec));
  return f;
}

// True iff M contains no member of F; detection goes through the plain
// detectors, independent of any search engine state.
bool validate_witness(const BitMatrix& M, const ForbiddenFamily& F);

}  // namespace patex
