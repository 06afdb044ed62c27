#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "patex/bigint.hpp"
#include "patex/bitmatrix.hpp"
#include "patex/family.hpp"

namespace patex {

inline constexpr const char* kEngineVersion = "patex-1";

struct SearchBudget {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;

  SearchBudget(std::uint64_t nodes, double seconds) : max_nodes(nodes), max_seconds(seconds) {
    require(nodes > 0, "node budget must be positive");
    require(seconds > 0, "time budget must be positive");
  }
};

enum class SearchStatus { exact, lower_bound };

inline const char* to_string(SearchStatus s) {
  return s == SearchStatus::exact ? "exact" : "lower_bound";
}

// Letters of an lx witness: each letter is k cells of one 1-row; their union
// is exactly the witness ones.
struct LetterAssignment {
  std::size_t k = 1;
  std::vector<std::vector<Coord>> letters;
};

struct ExtremalResult {
  std::size_t value = 0;
  SearchStatus status = SearchStatus::exact;
  BitMatrix witness;
  std::optional<LetterAssignment> letters;  // present for lx runs
  std::uint64_t nodes = 0;
  double elapsed = 0;
};

// Thrown by callers that need an exact value but hit the budget.
struct BudgetExhausted : std::runtime_error {
  explicit BudgetExhausted(const std::string& msg) : std::runtime_error(msg) {}
};

// Max ones over family-avoiding matrices of the given shape.  Exhaustive
// branch and bound; on budget exhaustion returns the best lower bound found,
// flagged as such.  Deterministic: cells branch in lexicographic order, one
// before zero, so ties resolve to the lexicographically greatest witness.
ExtremalResult ex_exact(const Shape& shape, const ForbiddenFamily& F, const SearchBudget& budget);

// Max number of disjoint k-blocks (letters): maximizes the sum over 1-rows of
// floor(row ones / k) over avoiding matrices, then strips leftover ones so
// the witness is exactly the letters' shadow.
ExtremalResult lx_exact(const Shape& shape, std::size_t k, const ForbiddenFamily& F,
                        const SearchBudget& budget);

// lx_k over (first axis m, other axes n, P.dim()+1 axes) against the
// (P,s)-formation family, divided by ex over (P.dim() axes of length n)
// avoiding P, as an exact rational.  Throws BudgetExhausted if either side is
// inexact and std::domain_error when the denominator is zero.
BigRat compute_G(std::size_t n, std::size_t m, std::size_t d_plus_1, std::size_t k,
                 const Pattern& P, std::size_t s, const SearchBudget& budget);

// Canonical problem key prefix shared by the in-process memo and the on-disk
// cache: engine version, mode, k, shape, canonical family.
std::string problem_key(const std::string& mode, std::size_t k, const Shape& shape,
                        const ForbiddenFamily& F);

// In-process memo of exact results (repeated grid sweeps reuse values).
void clear_search_memo();

}  // namespace patex
