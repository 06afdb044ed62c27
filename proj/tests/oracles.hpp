#pragma once

// Test-side oracles, written independently of the library's algorithms:
// containment by direct combination enumeration, extremal values by full
// 2^cells enumeration, formation group counts by exhaustive transversal
// search, doubled formations by literal partition enumeration, recurrences by
// straight-line table filling, and the binomial bound by solution counting.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "patex/bigint.hpp"
#include "patex/bitmatrix.hpp"
#include "patex/family.hpp"
#include "patex/pattern.hpp"

namespace patex::testing {

// Seeded pattern generator: 1..max_ones distinct ones inside shape.
inline Pattern random_pattern_nonempty(std::mt19937_64& rng, const Shape& shape,
                                       std::size_t max_ones) {
  BitMatrix used(shape);
  std::size_t want = 1 + rng() % max_ones;
  for (std::size_t t = 0; t < want; ++t) used.set_index(rng() % cell_count(shape), true);
  return Pattern(shape, used.ones());
}

// All increasing maps [l] -> [mv], i.e. l-subsets of [mv] in sorted order.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t mv, std::size_t l) {
  std::vector<std::vector<std::size_t>> out;
  if (l > mv) return out;
  std::vector<std::size_t> pick(l);
  for (std::size_t i = 0; i < l; ++i) pick[i] = i + 1;
  while (true) {
    out.push_back(pick);
    std::size_t i = l;
    while (i > 0 && pick[i - 1] == mv - (l - i)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < l; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

inline bool brute_contains(const BitMatrix& M, const Pattern& P) {
  const Shape& ms = M.shape();
  const Shape& ps = P.shape();
  if (ms.size() != ps.size()) return false;
  std::vector<std::vector<std::vector<std::size_t>>> per_axis;
  for (std::size_t a = 0; a < ps.size(); ++a) {
    per_axis.push_back(combinations(ms[a], ps[a]));
    if (per_axis.back().empty()) return false;
  }
  std::vector<std::size_t> idx(ps.size(), 0);
  while (true) {
    bool all = true;
    for (const Coord& u : P.ones()) {
      Coord img(u.size());
      for (std::size_t a = 0; a < u.size(); ++a) img[a] = per_axis[a][idx[a]][u[a] - 1];
      if (!M.get(img)) {
        all = false;
        break;
      }
    }
    if (all) return true;
    std::size_t a = ps.size();
    while (a > 0 && idx[a - 1] + 1 == per_axis[a - 1].size()) idx[--a] = 0;
    if (a == 0) return false;
    ++idx[a - 1];
  }
}

// Largest group count achievable on the fixed 1-row set `rows` (bitmask of
// first coordinates per row), by trying every per-row choice of the next
// group's cell — no greedy shortcut.
inline std::size_t exhaustive_groups(const std::vector<std::uint64_t>& rows, std::size_t start) {
  std::size_t best = 0;
  std::vector<std::vector<std::size_t>> options;
  for (std::uint64_t w : rows) {
    std::vector<std::size_t> opts;
    for (std::size_t p = start; p <= 64; ++p)
      if ((w >> (p - 1)) & 1) opts.push_back(p);
    if (opts.empty()) return 0;
    options.push_back(std::move(opts));
  }
  std::vector<std::size_t> pick(rows.size(), 0);
  while (true) {
    std::size_t end = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) end = std::max(end, options[i][pick[i]]);
    best = std::max(best, 1 + exhaustive_groups(rows, end + 1));
    std::size_t i = rows.size();
    while (i > 0 && pick[i - 1] + 1 == options[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
    ++pick[i - 1];
  }
  return best;
}

// Literal doubled (r,s)-formation test: every choice of r columns and every
// split of the first axis into s consecutive nonempty intervals, with one one
// per column in the outer intervals and two in each interior one.
inline bool brute_doubled(const BitMatrix& M, std::size_t r, std::size_t s) {
  const Shape& sh = M.shape();
  if (sh.size() != 2) return false;
  const std::size_t m = sh[0], ncols = sh[1];
  if (r > ncols || s < 2 || m < 2 * s - 2) return false;
  std::vector<std::uint64_t> colbits(ncols, 0);
  for (const Coord& c : M.ones()) colbits[c[1] - 1] |= std::uint64_t{1} << (c[0] - 1);

  auto count_in = [&](std::uint64_t w, std::size_t lo, std::size_t hi) {
    std::size_t n = 0;
    for (std::size_t p = lo; p <= hi; ++p) n += (w >> (p - 1)) & 1;
    return n;
  };
  for (const auto& cols : combinations(ncols, r)) {
    // split points: interval i spans (cut[i-1], cut[i]]
    for (const auto& cuts : combinations(m - 1, s - 1)) {
      bool ok = true;
      for (std::size_t i = 0; i < s && ok; ++i) {
        const std::size_t lo = (i == 0 ? 0 : cuts[i - 1]) + 1;
        const std::size_t hi = i + 1 == s ? m : cuts[i];
        const std::size_t need = (i == 0 || i + 1 == s) ? 1 : 2;
        for (std::size_t cl : cols)
          if (count_in(colbits[cl - 1], lo, hi) < need) {
            ok = false;
            break;
          }
      }
      if (ok) return true;
    }
  }
  return false;
}

struct BruteExtremal {
  std::size_t value = 0;
  BitMatrix witness;  // lexicographically greatest maximizer
};

// Full enumeration of every 0-1 matrix of the shape; avoidance goes through
// the given predicate so callers choose what detector/oracle to trust.
template <typename Avoids>
BruteExtremal brute_extremal(const Shape& shape, std::size_t k, Avoids avoids) {
  const std::size_t cells = cell_count(shape);
  BruteExtremal best{0, BitMatrix(shape)};
  auto lex_greater = [&](const BitMatrix& a, const BitMatrix& b) {
    for (std::size_t i = 0; i < cells; ++i)
      if (a.get_index(i) != b.get_index(i)) return a.get_index(i);
    return false;
  };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    BitMatrix M(shape);
    for (std::size_t i = 0; i < cells; ++i)
      if ((mask >> i) & 1) M.set_index(i, true);
    if (!avoids(M)) continue;
    std::size_t v = 0;
    if (k == 1) {
      v = M.count_ones();
    } else {
      for (std::size_t c : row_weights(M)) v += c / k;
    }
    if (v > best.value || (v == best.value && lex_greater(M, best.witness))) {
      best.value = v;
      best.witness = M;
    }
  }
  return best;
}

// Straight-line transcriptions of the two recurrences, filled bottom-up with
// plain loops; no shared code with the library's memoized versions.
inline std::map<std::pair<std::size_t, std::size_t>, BigInt> straight_line_R(std::size_t smax,
                                                                             std::size_t jmax) {
  std::map<std::pair<std::size_t, std::size_t>, BigInt> R;
  for (std::size_t j = 2; j <= jmax; ++j) {
    R[{1, j}] = 2;
    if (smax >= 2) R[{2, j}] = 3;
  }
  for (std::size_t s = 3; s <= smax; ++s) {
    BigInt p = 1;
    for (std::size_t i = 0; i + 1 < s; ++i) p *= 2;
    R[{s, 2}] = p + 1;
  }
  for (std::size_t s = 3; s <= smax; ++s)
    for (std::size_t j = 3; j <= jmax; ++j)
      R[{s, j}] = R[{s, j - 1}] * R[{s - 2, j}] + 2 * R[{s - 1, j}] - 3 * R[{s - 2, j}] -
                  R[{s, j - 1}] + 2;
  return R;
}

inline std::map<std::pair<std::size_t, std::size_t>, BigInt> straight_line_D(std::size_t smax,
                                                                             std::size_t jmax) {
  auto R = straight_line_R(smax, jmax);
  std::map<std::pair<std::size_t, std::size_t>, BigInt> D;
  for (std::size_t j = 2; j <= jmax; ++j) {
    D[{1, j}] = 0;
    if (smax >= 2) D[{2, j}] = 2;
  }
  for (std::size_t s = 3; s <= smax; ++s) {
    BigInt a = 1, b = 1;
    for (std::size_t i = 0; i + 1 < s; ++i) a *= 2;
    for (std::size_t i = 0; i + 2 < s; ++i) b *= 2;
    D[{s, 2}] = a + b - 1;
  }
  for (std::size_t s = 3; s <= smax; ++s)
    for (std::size_t j = 3; j <= jmax; ++j)
      D[{s, j}] = 2 * D[{s - 1, j}] + (D[{s - 2, j}] + 1) * (R[{s, j - 1}] - 3) +
                  D[{s, j - 1}] - R[{s, j - 1}] + 1;
  return D;
}

// Count of positive solutions of x_1 + ... + x_a = total (compositions).
inline BigInt compositions(std::size_t total, std::size_t a) {
  if (a == 0) return total == 0 ? 1 : 0;
  if (total < a) return 0;
  // C(total-1, a-1)
  BigInt r = 1;
  for (std::size_t i = 1; i < a; ++i) {
    r *= total - i;
    r /= i;
  }
  return r;
}

// The formation letter-position count, by literal enumeration semantics:
// positions of floor(s/2) aligned blocks plus a remainder slot (counted via
// compositions of the slack), matching C(m - ceil(s/2), floor(s/2)).
inline BigInt binom_positions_oracle(std::size_t m, std::size_t s) {
  const std::size_t b = s / 2;
  if (b > m) return 0;
  BigInt total = 0;
  if (s % 2 == 0) {
    // (1+x_1)+...+(1+x_b)+y = m+1, x_i >= 1, y >= 1
    total = compositions(m + 1 - b, b + 1);
  } else {
    // (1+x_1)+...+(1+x_b)+y = m
    total = compositions(m - b, b + 1);
  }
  return total;
}

inline std::size_t popcount_rows(const BitMatrix& M) { return M.count_ones(); }

}  // namespace patex::testing
