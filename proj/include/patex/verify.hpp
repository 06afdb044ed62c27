#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "patex/bigint.hpp"
#include "patex/family.hpp"
#include "patex/search.hpp"

namespace patex {

// Inclusive integer range for grid sweeps.
struct GridRange {
  std::size_t lo = 1;
  std::size_t hi = 1;
  GridRange(std::size_t l, std::size_t h) : lo(l), hi(h) {
    require(l >= 1 && l <= h, "grid range needs 1 <= lo <= hi");
  }
};

// One grid point of a bound check.  Both sides are exact integer or rational
// decimal strings; "?" marks a side whose search hit its budget.  Status is
// "pass" (lhs <= rhs), "fail", or "inconclusive" (a side is unknown); an
// inconclusive row never counts as a pass.
struct BoundRow {
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs, rhs;
  std::string lhs_provenance, rhs_provenance;
  std::string status;
};

struct BoundReport {
  std::string bound_id;
  std::string statement;           // the inequality being swept, in tool terms
  std::vector<std::string> notes;  // deterministic remarks (domain filters etc.)
  std::vector<BoundRow> rows;      // sorted by parameter tuple

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t inconclusive() const;
  // True iff every row passes; any failure or gap defeats the verdict.
  bool verdict() const;

  std::string to_tsv() const;
  std::string to_json_text() const;  // key-sorted, indent 2, byte-deterministic
};

// ex(host) <= k * (lx_k(host) + row_count) over hosts (m, n, ..., n) of the
// family's dimensionality (row_count = n^(d-1)).
BoundReport check_relate(const ForbiddenFamily& F, GridRange n, GridRange m, GridRange k,
                         const SearchBudget& budget);

// Two-phase check on 2-d hosts (m, n): hypothesis rows ex <= g(m) + c*n on
// the grid, then, only if all pass, conclusion rows lx_k <= g(m) / (k - c).
// Requires k.lo > c and a g entry for every m in range.
BoundReport check_lemma2(const ForbiddenFamily& F, std::size_t c,
                         const std::map<std::size_t, BigInt>& g, GridRange n, GridRange m,
                         GridRange k, const SearchBudget& budget);

// lx_s((m, n...), formations of base with s groups) <= ex((n...), base) *
// C(m - ceil(s/2), floor(s/2)); rows with s > m are outside the bound's
// domain and are skipped.
BoundReport check_binomial(const Pattern& base, GridRange n, GridRange m, GridRange s,
                           const SearchBudget& budget);

// First-axis doubling: lx_{2k-1}(2m) <= 2*lx_{2k-1}(m) + 2*lx_k(2m), all
// against the s-group formation family of base on hosts (first, n, ..., n).
BoundReport check_recurrence_doubling(const Pattern& base, std::size_t s, GridRange n,
                                      GridRange m, GridRange k, const SearchBudget& budget);

// Interval partition: with ks = (k, k1, k2, k3) satisfying
// k2*k3 + 2*k1 + 2 == k + 3*k2 + k3 and t dividing every m,
//   lx_k(m) <= (1 + m/t) * (lx_k(t) + 2*lx_{k1}(t; s-1) + lx_{k2}(t; s-2))
//              + lx_{k3}(1 + m/t),
// all against formation families of base with the annotated group counts.
// Requires s >= 3.
BoundReport check_recurrence_partition(const Pattern& base, std::size_t s,
                                       const std::array<std::size_t, 4>& ks, std::size_t t,
                                       GridRange n, const std::vector<std::size_t>& ms,
                                       const SearchBudget& budget);

// ex(host, 3-group formations of base) <= 3 * (ex(cube, base) * n + n^d) on
// hosts (n, n, ..., n) one dimension above base.
BoundReport check_fp3(const Pattern& base, GridRange n, const SearchBudget& budget);

// For a light pattern p with s ones: every member of the s-group formation
// family of its first-axis projection, enumerated inside host_bound, must
// contain p; additionally stretch_trials random members get zero hyperplanes
// inserted (seeded) and are re-checked.  No searches, so never inconclusive.
BoundReport check_light_reduction(const Pattern& p, const Shape& host_bound,
                                  std::size_t stretch_trials, std::uint64_t seed);

}  // namespace patex
