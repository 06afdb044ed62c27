#include "patex/formations.hpp"

#include <algorithm>

namespace patex {

namespace {

// Sorted first coordinates of the ones in each 1-row.
std::vector<std::vector<std::size_t>> rows_firsts(const BitMatrix& M) {
  std::vector<std::vector<std::size_t>> rf(row_count(M.shape()));
  for (const Coord& c : M.ones()) rf[row_index_of(c, M.shape())].push_back(c[0]);
  return rf;  // lex ones order sorts each row's firsts ascending
}

std::size_t first_at_or_after(const std::vector<std::size_t>& xs, std::size_t start) {
  auto it = std::lower_bound(xs.begin(), xs.end(), start);
  return it == xs.end() ? 0 : *it;  // 0 = none (coordinates are 1-based)
}

// Greedy sweep over the given 1-rows: each group closes at the smallest first
// coordinate by which every row has produced a one past the previous group.
// Optimal by the usual exchange argument (earliest close dominates).
std::size_t greedy_groups(const std::vector<const std::vector<std::size_t>*>& rows,
                          std::size_t limit) {
  std::size_t start = 1, groups = 0;
  while (groups < limit) {
    std::size_t end = 0;
    for (const auto* xs : rows) {
      std::size_t v = first_at_or_after(*xs, start);
      if (v == 0) return groups;
      end = std::max(end, v);
    }
    ++groups;
    start = end + 1;
  }
  return groups;
}

// Runs fn on every candidate 1-row set: the images of the ones of
// normalize(base) under occurrences in the OR-projection of M.  fn receives
// the tail coordinates; returning false stops the scan.
void for_each_tail_set(const BitMatrix& M, const Pattern& base,
                       const std::function<bool(const std::vector<Coord>&)>& fn) {
  require(M.dim() == base.dim() + 1, "host must have one dimension more than the base");
  BitMatrix proj = M.or_project_first();
  Pattern pn = base.normalize();
  for_each_occurrence(proj, pn, [&](const Occurrence& occ) {
    std::vector<Coord> tails;
    tails.reserve(pn.weight());
    for (const Coord& u : pn.ones()) tails.push_back(occ.image(u));
    return fn(tails);
  });
}

}  // namespace

std::size_t max_formation_groups(const BitMatrix& M, const Pattern& base) {
  auto rf = rows_firsts(M);
  std::size_t best = 0;
  for_each_tail_set(M, base, [&](const std::vector<Coord>& tails) {
    std::vector<const std::vector<std::size_t>*> rows;
    rows.reserve(tails.size());
    for (const Coord& t : tails) {
      Coord cell(t.size() + 1);
      cell[0] = 1;
      std::copy(t.begin(), t.end(), cell.begin() + 1);
      rows.push_back(&rf[row_index_of(cell, M.shape())]);
    }
    best = std::max(best, greedy_groups(rows, static_cast<std::size_t>(-1)));
    return true;
  });
  return best;
}

bool contains_formation(const BitMatrix& M, const FormationSpec& spec) {
  auto rf = rows_firsts(M);
  bool found = false;
  for_each_tail_set(M, spec.base, [&](const std::vector<Coord>& tails) {
    std::vector<const std::vector<std::size_t>*> rows;
    rows.reserve(tails.size());
    for (const Coord& t : tails) {
      Coord cell(t.size() + 1);
      cell[0] = 1;
      std::copy(t.begin(), t.end(), cell.begin() + 1);
      rows.push_back(&rf[row_index_of(cell, M.shape())]);
    }
    if (greedy_groups(rows, spec.s) >= spec.s) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

std::optional<FormationWitness> find_formation(const BitMatrix& M, const FormationSpec& spec) {
  auto rf = rows_firsts(M);
  std::optional<FormationWitness> out;
  for_each_tail_set(M, spec.base, [&](const std::vector<Coord>& tails) {
    std::vector<const std::vector<std::size_t>*> rows;
    rows.reserve(tails.size());
    for (const Coord& t : tails) {
      Coord cell(t.size() + 1);
      cell[0] = 1;
      std::copy(t.begin(), t.end(), cell.begin() + 1);
      rows.push_back(&rf[row_index_of(cell, M.shape())]);
    }
    if (greedy_groups(rows, spec.s) < spec.s) return true;
    FormationWitness w;
    w.tails = tails;
    std::size_t start = 1;
    for (std::size_t g = 0; g < spec.s; ++g) {
      std::vector<Coord> group;
      std::size_t end = 0;
      for (std::size_t i = 0; i < tails.size(); ++i) {
        std::size_t v = first_at_or_after(*rows[i], start);
        Coord cell(tails[i].size() + 1);
        cell[0] = v;
        std::copy(tails[i].begin(), tails[i].end(), cell.begin() + 1);
        group.push_back(cell);
        end = std::max(end, v);
      }
      w.groups.push_back(std::move(group));
      start = end + 1;
    }
    out = std::move(w);
    return false;
  });
  return out;
}

bool contains_doubled_formation(const BitMatrix& M, const DoubledSpec& spec) {
  require(M.dim() == 2, "doubled formations live in 2-d matrices");
  auto rf = rows_firsts(M);  // d=2: one entry per column
  std::vector<std::size_t> cand;
  for (std::size_t j = 0; j < rf.size(); ++j)
    if (rf[j].size() >= 2 * spec.s - 2) cand.push_back(j);
  if (cand.size() < spec.r) return false;

  // Greedy minimal-prefix intervals over a fixed column choice: close each of
  // the first s-1 intervals as early as its quota (1 then 2,2,...) allows,
  // then the suffix must still feed every column once.
  auto feasible = [&](const std::vector<std::size_t>& cols) {
    std::size_t start = 1;
    for (std::size_t i = 0; i + 1 < spec.s; ++i) {
      std::size_t need = i == 0 ? 1 : 2, end = 0;
      for (std::size_t j : cols) {
        const auto& xs = rf[j];
        auto it = std::lower_bound(xs.begin(), xs.end(), start);
        if (static_cast<std::size_t>(xs.end() - it) < need) return false;
        end = std::max(end, *(it + need - 1));
      }
      start = end + 1;
    }
    for (std::size_t j : cols)
      if (first_at_or_after(rf[j], start) == 0) return false;
    return true;
  };

  std::vector<std::size_t> pick(spec.r);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t idx, std::size_t from) {
    if (idx == spec.r) return feasible(pick);
    for (std::size_t i = from; i + (spec.r - idx) <= cand.size(); ++i) {
      pick[idx] = cand[i];
      if (rec(idx + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

bool brute_force_formation(const BitMatrix& M, const FormationSpec& spec, std::uint64_t cap) {
  require(M.dim() == spec.base.dim() + 1, "host must have one dimension more than the base");
  const std::size_t r = spec.base.weight(), s = spec.s;
  Pattern pn = spec.base.normalize();
  auto rf = rows_firsts(M);

  // Occupied 1-rows able to host s ones; a valid subset takes exactly s ones
  // from each of r such rows, so all other s*r-subsets of ones fail trivially.
  Shape tail_shape(M.shape().begin() + 1, M.shape().end());
  std::vector<std::size_t> cand_rows;
  std::vector<Coord> cand_tails;
  for (std::size_t row = 0; row < rf.size(); ++row)
    if (rf[row].size() >= s) {
      cand_rows.push_back(row);
      cand_tails.push_back(Pattern::tail(cell_in_row(1, row, M.shape())));
    }
  if (cand_rows.size() < r) return false;

  auto choose = [](std::uint64_t n, std::uint64_t k) {
    if (k > n) return std::uint64_t{0};
    std::uint64_t v = 1;
    for (std::uint64_t i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
  };
  if (choose(cand_rows.size(), r) > cap)
    throw CapExceeded("brute-force formation: too many 1-row subsets");

  // Enumerate row subsets; budget-check the per-subset selection products.
  std::vector<std::size_t> rsel(r);
  std::vector<std::vector<std::size_t>> subsets;
  std::uint64_t work = 0;
  std::function<void(std::size_t, std::size_t)> collect = [&](std::size_t idx, std::size_t from) {
    if (idx == r) {
      std::vector<Coord> tails;
      for (std::size_t i : rsel) tails.push_back(cand_tails[i]);
      if (Pattern(tail_shape, tails).normalize() != pn) return;
      std::uint64_t prod = 1;
      for (std::size_t i : rsel) {
        prod *= choose(rf[cand_rows[i]].size(), s);
        if (prod > cap) break;
      }
      work += prod;
      subsets.push_back(rsel);
      return;
    }
    for (std::size_t i = from; i + (r - idx) <= cand_rows.size(); ++i) {
      rsel[idx] = i;
      collect(idx + 1, i + 1);
    }
  };
  collect(0, 0);
  if (work > cap) throw CapExceeded("brute-force formation: candidate subsets exceed cap");

  // Raw definition on one candidate: sorted by first coordinate, the s*r ones
  // must split into s blocks of r covering every chosen row once, with a
  // strict first-coordinate gap at each block boundary.
  auto raw_ok = [&](const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<bool> seen(r);
    for (std::size_t b = 0; b < s; ++b) {
      std::fill(seen.begin(), seen.end(), false);
      for (std::size_t i = 0; i < r; ++i) {
        std::size_t row = pairs[b * r + i].second;
        if (seen[row]) return false;
        seen[row] = true;
      }
      if (b + 1 < s && pairs[b * r + r - 1].first >= pairs[b * r + r].first) return false;
    }
    return true;
  };

  for (const auto& rows : subsets) {
    // Odometer over one s-subset of ones per chosen row.
    std::vector<std::vector<std::size_t>> combo(r);
    for (std::size_t i = 0; i < r; ++i) {
      combo[i].resize(s);
      for (std::size_t q = 0; q < s; ++q) combo[i][q] = q;
    }
    auto bump = [&]() {
      for (std::size_t i = r; i-- > 0;) {
        const auto& xs = rf[cand_rows[rows[i]]];
        std::size_t q = s;
        while (q-- > 0) {
          if (combo[i][q] + (s - q) < xs.size()) {
            ++combo[i][q];
            for (std::size_t q2 = q + 1; q2 < s; ++q2) combo[i][q2] = combo[i][q2 - 1] + 1;
            return true;
          }
          if (q == 0) break;
        }
        for (std::size_t q2 = 0; q2 < s; ++q2) combo[i][q2] = q2;
      }
      return false;
    };
    std::vector<std::pair<std::size_t, std::size_t>> pairs(s * r);
    do {
      pairs.clear();
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t q : combo[i]) pairs.emplace_back(rf[cand_rows[rows[i]]][q], i);
      std::sort(pairs.begin(), pairs.end());
      if (raw_ok(pairs)) return true;
    } while (bump());
  }
  return false;
}

void for_each_formation_member(const Shape& host_shape, const Pattern& base, std::size_t s,
                               const std::function<bool(const BitMatrix&)>& visit) {
  require(host_shape.size() == base.dim() + 1, "host must have one dimension more than the base");
  require(s >= 1, "formation needs s >= 1");
  Shape tail_shape(host_shape.begin() + 1, host_shape.end());
  Pattern pn = base.normalize();
  for (std::size_t a = 0; a < tail_shape.size(); ++a)
    if (pn.shape()[a] > tail_shape[a]) return;
  const std::size_t m = host_shape[0], r = pn.weight();

  BitMatrix full(tail_shape);
  for (std::size_t i = 0; i < full.cells(); ++i) full.set_index(i, true);

  bool stopped = false;
  for_each_occurrence(full, pn, [&](const Occurrence& occ) {
    std::vector<Coord> tails;
    for (const Coord& u : pn.ones()) tails.push_back(occ.image(u));
    // Assign each group a first coordinate per 1-row, groups strictly after
    // one another.
    BitMatrix mbuf(host_shape);
    std::function<void(std::size_t, std::size_t)> place = [&](std::size_t g, std::size_t lo) {
      if (stopped) return;
      if (g == s) {
        if (!visit(mbuf)) stopped = true;
        return;
      }
      std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t i, std::size_t gmax) {
        if (stopped) return;
        if (i == r) {
          place(g + 1, gmax + 1);
          return;
        }
        for (std::size_t x = lo; x <= m && !stopped; ++x) {
          Coord cell(tails[i].size() + 1);
          cell[0] = x;
          std::copy(tails[i].begin(), tails[i].end(), cell.begin() + 1);
          mbuf.set(cell, true);
          pick(i + 1, std::max(gmax, x));
          mbuf.set(cell, false);
        }
      };
      pick(0, 0);
    };
    place(0, 1);
    return !stopped;
  });
}

}  // namespace patex
