#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "patex/bigint.hpp"

namespace patex {

// Exact values of the two recurrence families on their shared domain
// s >= 1, j >= 2.  Values grow tower-fast, hence arbitrary precision.
//
//   R: R_1(j)=2, R_2(j)=3, R_s(2)=2^{s-1}+1, and for s,j >= 3
//      R_s(j) = R_s(j-1) R_{s-2}(j) + 2 R_{s-1}(j) - 3 R_{s-2}(j) - R_s(j-1) + 2.
//   D: D_1(j)=0, D_2(j)=2, D_s(2)=2^{s-1}+2^{s-2}-1, and for s,j >= 3
//      D_s(j) = 2 D_{s-1}(j) + (D_{s-2}(j)+1)(R_s(j-1)-3) + D_s(j-1) - R_s(j-1) + 1.
BigInt rec_R(std::size_t s, std::size_t j);
BigInt rec_D(std::size_t s, std::size_t j);

struct RecurrenceTable {
  char kind = 'R';  // 'R' or 'D'
  std::map<std::pair<std::size_t, std::size_t>, BigInt> values;  // (s,j) -> value

  static RecurrenceTable build(char kind, std::size_t max_s, std::size_t max_j);
  // One line per entry: kind <tab> s <tab> j <tab> value.
  std::string to_tsv() const;
};

// Ackermann-style hierarchy: a_1(n) = 2n, a_j(1) = 2, a_j(n) = a_{j-1}(a_j(n-1)).
// Returns nullopt when the value would exceed guard (an expected signal, not
// an error: a_3 leaves machine range at tiny arguments).
std::optional<BigInt> ack(std::size_t j, const BigInt& n, const BigInt& guard);

// alpha_level(j, n) = min{ k >= 1 : a_j(k) >= n }.  Exact BigInt: the level-1
// answer ceil(n/2) outgrows machine words.  Levels >= 2 terminate via guarded
// incremental evaluation (at most msb(n)+2 probes since a_j(k) >= 2^k).
BigInt alpha_level(std::size_t j, const BigInt& n);

// alpha(n) = min{ j >= 1 : alpha_level(j, n) <= 3 }.
std::size_t alpha(const BigInt& n);

// C(m - ceil(s/2), floor(s/2)) with C(a,0) = 1 and C(a,b) = 0 for b > a or
// a < 0; the count of letter-position tuples in the formation letter bound.
BigInt formation_binom_bound(std::size_t m, std::size_t s);

}  // namespace patex
