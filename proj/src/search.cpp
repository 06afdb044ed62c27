#include "patex/search.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "patex/contains.hpp"

namespace patex {

namespace {

using Clock = std::chrono::steady_clock;

// One potential placement of a pattern: the host cells its ones occupy.  The
// pattern is contained iff some placement has all its cells set.
struct CompiledPattern {
  std::vector<std::vector<std::uint32_t>> recs;
  std::vector<std::vector<std::uint32_t>> at;  // cell -> rec indices using it
};

// One formation family: candidate 1-row sets (images of the normalized base
// in the tail grid) plus the reverse index row -> tail sets.
struct CompiledFormation {
  std::size_t s = 1;
  std::vector<std::vector<std::uint32_t>> tsets;
  std::vector<std::vector<std::uint32_t>> by_row;
};

std::size_t nth_one_at_or_after(std::uint64_t w, std::size_t start, std::size_t need) {
  w >>= (start - 1);
  while (need-- > 1) w &= w - 1;
  if (!w) return 0;
  return start + static_cast<std::size_t>(__builtin_ctzll(w));
}

struct Engine {
  Shape shape;
  std::size_t cells = 0, d = 0, m = 0, nrows = 0, k = 1;
  std::vector<CompiledPattern> pats;
  std::vector<CompiledFormation> forms;
  std::vector<DoubledSpec> doubled;

  // per-cell geometry
  std::vector<std::uint32_t> row_of, first_of;
  // cells this run actually branches on (lex order); rows outside the active
  // component stay zero
  std::vector<std::uint32_t> order;

  // mutable search state
  std::vector<std::uint64_t> bits;
  std::vector<std::uint64_t> rowbits;  // first-coordinate mask per 1-row (needs m <= 64)
  std::vector<std::uint32_t> ones_r, undec_r;
  std::size_t potential = 0;

  // incumbent
  std::size_t best = 0;
  std::vector<std::uint64_t> best_bits;

  // budget
  std::uint64_t max_nodes = 0, nodes = 0;
  Clock::time_point t0;
  double max_seconds = 0;
  bool truncated = false;

  bool bit(std::size_t i) const { return (bits[i >> 6] >> (i & 63)) & 1u; }
  void flip(std::size_t i) { bits[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void compile(const ForbiddenFamily& F) {
    // Placements of each pattern, via occurrence enumeration over an all-ones
    // host of this shape; distinct occurrences can share an image when the
    // pattern has unused axis indices, so images are deduplicated.
    BitMatrix full(shape);
    for (std::size_t i = 0; i < cells; ++i) full.set_index(i, true);
    for (const Pattern& p : F.patterns) {
      CompiledPattern cp;
      cp.at.resize(cells);
      std::set<std::vector<std::uint32_t>> seen;
      bool fits = true;
      for (std::size_t a = 0; a < d; ++a)
        if (p.shape()[a] > shape[a]) fits = false;
      if (fits) {
        for_each_occurrence(full, p, [&](const Occurrence& occ) {
          std::vector<std::uint32_t> img;
          img.reserve(p.weight());
          for (const Coord& u : p.ones())
            img.push_back(static_cast<std::uint32_t>(linear_index(occ.image(u), shape)));
          std::sort(img.begin(), img.end());
          seen.insert(std::move(img));
          return true;
        });
      }
      for (const auto& img : seen) {
        std::uint32_t id = static_cast<std::uint32_t>(cp.recs.size());
        cp.recs.push_back(img);
        for (std::uint32_t c : img) cp.at[c].push_back(id);
      }
      pats.push_back(std::move(cp));
    }

    if (!F.formations.empty() || !F.doubled.empty())
      require(m <= 64, "formation-aware search supports first axis length <= 64");

    Shape tail(shape.begin() + 1, shape.end());
    for (const FormationSpec& fs : F.formations) {
      CompiledFormation cf;
      cf.s = fs.s;
      cf.by_row.resize(nrows);
      Pattern pn = fs.base.normalize();
      bool fits = d >= 2;
      for (std::size_t a = 0; a + 1 < d && fits; ++a)
        if (pn.shape()[a] > tail[a]) fits = false;
      if (fits) {
        BitMatrix tfull(tail);
        for (std::size_t i = 0; i < tfull.cells(); ++i) tfull.set_index(i, true);
        for_each_occurrence(tfull, pn, [&](const Occurrence& occ) {
          std::vector<std::uint32_t> rows;
          rows.reserve(pn.weight());
          for (const Coord& u : pn.ones())
            rows.push_back(static_cast<std::uint32_t>(linear_index(occ.image(u), tail)));
          std::uint32_t id = static_cast<std::uint32_t>(cf.tsets.size());
          for (std::uint32_t rw : rows) cf.by_row[rw].push_back(id);
          cf.tsets.push_back(std::move(rows));
          return true;
        });
      }
      forms.push_back(std::move(cf));
    }
    doubled = F.doubled;
  }

  bool formation_reaches(const std::vector<std::uint32_t>& rows, std::size_t s) const {
    std::size_t start = 1, groups = 0;
    while (groups < s) {
      std::size_t end = 0;
      for (std::uint32_t rw : rows) {
        std::size_t v = nth_one_at_or_after(rowbits[rw], start, 1);
        if (v == 0) return false;
        end = std::max(end, v);
      }
      ++groups;
      start = end + 1;
    }
    return true;
  }

  // Doubled detection restricted to column subsets through forced_col (d=2:
  // 1-rows are the columns).
  bool doubled_through(const DoubledSpec& spec, std::size_t forced_col) const {
    std::size_t quota = 2 * spec.s - 2;
    if (static_cast<std::size_t>(__builtin_popcountll(rowbits[forced_col])) < quota) return false;
    std::vector<std::size_t> cand;
    for (std::size_t j = 0; j < nrows; ++j)
      if (j != forced_col &&
          static_cast<std::size_t>(__builtin_popcountll(rowbits[j])) >= quota)
        cand.push_back(j);
    if (cand.size() + 1 < spec.r) return false;

    std::vector<std::size_t> pick;
    pick.push_back(forced_col);
    auto feasible = [&]() {
      std::size_t start = 1;
      for (std::size_t i = 0; i + 1 < spec.s; ++i) {
        std::size_t need = i == 0 ? 1 : 2, end = 0;
        for (std::size_t j : pick) {
          std::size_t v = nth_one_at_or_after(rowbits[j], start, need);
          if (v == 0) return false;
          end = std::max(end, v);
        }
        start = end + 1;
      }
      for (std::size_t j : pick)
        if (nth_one_at_or_after(rowbits[j], start, 1) == 0) return false;
      return true;
    };
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t chosen, std::size_t from) {
      if (chosen == spec.r) return feasible();
      for (std::size_t i = from; cand.size() - i >= spec.r - chosen; ++i) {
        pick.push_back(cand[i]);
        if (rec(chosen + 1, i + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    return rec(1, 0);
  }

  // Places a one at cell c unless that creates a family member; new members
  // must use c, so checks cover only placements/tail-sets/columns through it.
  bool try_place(std::size_t c) {
    std::size_t rw = row_of[c];
    flip(c);
    ++ones_r[rw];
    --undec_r[rw];
    if (!rowbits.empty()) rowbits[rw] |= std::uint64_t{1} << (first_of[c] - 1);
    bool ok = true;
    for (const CompiledPattern& cp : pats) {
      for (std::uint32_t id : cp.at[c]) {
        bool allset = true;
        for (std::uint32_t cc : cp.recs[id])
          if (!bit(cc)) {
            allset = false;
            break;
          }
        if (allset) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok)
      for (const CompiledFormation& cf : forms) {
        for (std::uint32_t id : cf.by_row[rw])
          if (formation_reaches(cf.tsets[id], cf.s)) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
    if (ok)
      for (const DoubledSpec& spec : doubled)
        if (doubled_through(spec, rw)) {
          ok = false;
          break;
        }
    if (!ok) unplace(c);
    return ok;
  }

  void unplace(std::size_t c) {
    std::size_t rw = row_of[c];
    flip(c);
    --ones_r[rw];
    ++undec_r[rw];
    if (!rowbits.empty()) rowbits[rw] &= ~(std::uint64_t{1} << (first_of[c] - 1));
  }

  void dfs(std::size_t at) {
    if (truncated) return;
    ++nodes;
    if (nodes > max_nodes ||
        ((nodes & 4095) == 0 &&
         std::chrono::duration<double>(Clock::now() - t0).count() > max_seconds)) {
      truncated = true;
      return;
    }
    if (potential <= best) return;
    if (at == order.size()) {
      best = potential;
      best_bits = bits;
      return;
    }
    std::size_t c = order[at];
    if (try_place(c)) {
      dfs(at + 1);
      unplace(c);
    }
    // zero branch: the cell leaves the undecided pool
    std::size_t rw = row_of[c];
    std::size_t before = (ones_r[rw] + undec_r[rw]) / k;
    --undec_r[rw];
    std::size_t after = (ones_r[rw] + undec_r[rw]) / k;
    potential -= before - after;
    dfs(at + 1);
    potential += before - after;
    ++undec_r[rw];
  }
};

// Union-find over 1-rows: two rows join when some family member could ever
// place ones in both.  A forbidden configuration never spans components, so
// components optimize independently and exactly, and the union of their
// lexicographically greatest witnesses is the global lexicographically
// greatest optimal witness (choices across components are unconstrained).
struct RowDsu {
  std::vector<std::size_t> parent;
  explicit RowDsu(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<std::uint32_t>> row_components(const Shape& shape,
                                                       const ForbiddenFamily& F) {
  const std::size_t nrows = row_count(shape);
  RowDsu dsu(nrows);
  bool couple_all = !F.doubled.empty();
  const Shape tail(shape.begin() + 1, shape.end());

  // Rows a member could touch: for plain patterns the tail part of an
  // occurrence is an occurrence of the deduplicated-tails pattern in a full
  // tail grid; for formations it is a candidate tail set of the normalized
  // base.  Either enumeration over the full grid covers every reachable
  // placement, so joining those rows is conservative.
  auto couple_by = [&](const Pattern& q) {
    if (couple_all || shape.size() < 2) {
      couple_all = true;
      return;
    }
    for (std::size_t a = 0; a + 1 < shape.size(); ++a)
      if (q.shape()[a] > tail[a]) return;  // cannot occur: no coupling
    BitMatrix tfull(tail);
    for (std::size_t i = 0; i < tfull.cells(); ++i) tfull.set_index(i, true);
    std::size_t seen = 0;
    for_each_occurrence(tfull, q, [&](const Occurrence& occ) {
      if (++seen > 1'000'000) {
        couple_all = true;
        return false;
      }
      const Coord& first = q.ones().front();
      std::size_t r0 = linear_index(occ.image(first), tail);
      for (const Coord& u : q.ones()) dsu.join(r0, linear_index(occ.image(u), tail));
      return true;
    });
  };
  for (const Pattern& p : F.patterns) {
    if (couple_all) break;
    if (p.dim() >= 2 && p.weight() >= 1) couple_by(p.project_first());
  }
  for (const FormationSpec& fs : F.formations) {
    if (couple_all) break;
    couple_by(fs.base.normalize());
  }

  std::vector<std::vector<std::uint32_t>> comps;
  if (couple_all || nrows == 1) {
    comps.emplace_back();
    for (std::size_t r = 0; r < nrows; ++r) comps.back().push_back(r);
    return comps;
  }
  std::map<std::size_t, std::size_t> index_of_root;
  for (std::size_t r = 0; r < nrows; ++r) {
    std::size_t root = dsu.find(r);
    auto [it, fresh] = index_of_root.emplace(root, comps.size());
    if (fresh) comps.emplace_back();
    comps[it->second].push_back(r);  // rows ascend, so components sort by least row
  }
  return comps;
}

struct MemoEntry {
  std::size_t value;
  BitMatrix witness;
  std::optional<LetterAssignment> letters;
};

std::map<std::string, MemoEntry>& memo() {
  static std::map<std::string, MemoEntry> m;
  return m;
}

// Drop trailing per-row ones that complete no k-block, keeping the earliest
// floor(c/k)*k ones of each 1-row; grouping the survivors k at a time yields
// the letters.
void strip_to_letters(ExtremalResult& res, std::size_t k) {
  const Shape& shape = res.witness.shape();
  std::vector<std::vector<Coord>> per_row(row_count(shape));
  for (const Coord& c : res.witness.ones())
    per_row[row_index_of(c, shape)].push_back(c);  // ascending first coordinate
  LetterAssignment la;
  la.k = k;
  for (auto& cells : per_row) {
    std::size_t keep = cells.size() / k * k;
    for (std::size_t i = keep; i < cells.size(); ++i) res.witness.set(cells[i], false);
    for (std::size_t b = 0; b + k <= keep; b += k)
      la.letters.emplace_back(cells.begin() + b, cells.begin() + b + k);
  }
  res.letters = std::move(la);
}

ExtremalResult run_search(const Shape& shape, std::size_t k, const ForbiddenFamily& F,
                          const SearchBudget& budget, const std::string& mode) {
  require(!shape.empty(), "shape needs at least one axis");
  for (std::size_t e : shape) require(e >= 1, "axis lengths must be positive");
  require(k >= 1, "k must be >= 1");
  require(F.host_dim() == shape.size(), "family host dimensionality must match shape");

  std::string key = problem_key(mode, k, shape, F);
  if (auto it = memo().find(key); it != memo().end()) {
    ExtremalResult res;
    res.value = it->second.value;
    res.status = SearchStatus::exact;
    res.witness = it->second.witness;
    res.letters = it->second.letters;
    return res;
  }

  Engine e;
  e.shape = shape;
  e.d = shape.size();
  e.cells = cell_count(shape);
  e.m = shape[0];
  e.nrows = row_count(shape);
  e.k = k;
  e.compile(F);
  e.row_of.resize(e.cells);
  e.first_of.resize(e.cells);
  {
    Coord c(shape.size(), 1);
    for (std::size_t i = 0; i < e.cells; ++i) {
      e.row_of[i] = static_cast<std::uint32_t>(row_index_of(c, shape));
      e.first_of[i] = static_cast<std::uint32_t>(c[0]);
      next_cell(c, shape);
    }
  }

  const auto comps = row_components(shape, F);
  const Clock::time_point t0 = Clock::now();
  ExtremalResult res;
  res.value = 0;
  res.status = SearchStatus::exact;
  res.witness = BitMatrix(shape);
  for (const auto& comp : comps) {
    std::vector<char> active(e.nrows, 0);
    for (std::uint32_t rw : comp) active[rw] = 1;
    e.order.clear();
    for (std::size_t i = 0; i < e.cells; ++i)
      if (active[e.row_of[i]]) e.order.push_back(static_cast<std::uint32_t>(i));
    e.bits.assign((e.cells + 63) / 64, 0);
    if (!e.forms.empty() || !e.doubled.empty()) e.rowbits.assign(e.nrows, 0);
    e.ones_r.assign(e.nrows, 0);
    e.undec_r.assign(e.nrows, 0);
    for (std::uint32_t i : e.order) ++e.undec_r[e.row_of[i]];
    e.potential = 0;
    for (std::size_t rw = 0; rw < e.nrows; ++rw) e.potential += e.undec_r[rw] / k;
    e.best = 0;
    e.best_bits = e.bits;  // the all-zero matrix avoids every valid family
    e.max_nodes = budget.max_nodes - std::min<std::uint64_t>(res.nodes, budget.max_nodes);
    const double left =
        budget.max_seconds - std::chrono::duration<double>(Clock::now() - t0).count();
    e.max_seconds = left > 0 ? left : 0;
    e.nodes = 0;
    e.truncated = e.max_nodes == 0 || left <= 0;
    e.t0 = Clock::now();

    if (!e.truncated) e.dfs(0);

    res.value += e.best;
    res.nodes += e.nodes;
    for (std::size_t i = 0; i < e.cells; ++i)
      if ((e.best_bits[i >> 6] >> (i & 63)) & 1u) res.witness.set_index(i, true);
    if (e.truncated) {
      res.status = SearchStatus::lower_bound;
      break;  // unexplored components would only add; the sum stays a lower bound
    }
  }
  res.elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
  if (mode == "lx") strip_to_letters(res, k);

  if (!validate_witness(res.witness, F))
    throw std::logic_error("internal error: witness fails revalidation");

  if (res.status == SearchStatus::exact)
    memo().emplace(key, MemoEntry{res.value, res.witness, res.letters});
  return res;
}

}  // namespace

std::string problem_key(const std::string& mode, std::size_t k, const Shape& shape,
                        const ForbiddenFamily& F) {
  std::ostringstream out;
  out << kEngineVersion << "|mode=" << mode << "|k=" << k << "|shape=";
  for (std::size_t i = 0; i < shape.size(); ++i) out << (i ? "x" : "") << shape[i];
  out << "|family=" << F.canonical_key();
  return out.str();
}

void clear_search_memo() { memo().clear(); }

ExtremalResult ex_exact(const Shape& shape, const ForbiddenFamily& F, const SearchBudget& budget) {
  return run_search(shape, 1, F, budget, "ex");
}

ExtremalResult lx_exact(const Shape& shape, std::size_t k, const ForbiddenFamily& F,
                        const SearchBudget& budget) {
  return run_search(shape, k, F, budget, "lx");
}

BigRat compute_G(std::size_t n, std::size_t m, std::size_t d_plus_1, std::size_t k,
                 const Pattern& P, std::size_t s, const SearchBudget& budget) {
  require(d_plus_1 == P.dim() + 1, "host dimensionality must be base dimensionality + 1");
  require(n >= 1 && m >= 1, "axis lengths must be positive");
  Shape num_shape(d_plus_1, n);
  num_shape[0] = m;
  ExtremalResult lx = lx_exact(num_shape, k, family_of(FormationSpec(P, s)), budget);
  if (lx.status != SearchStatus::exact)
    throw BudgetExhausted("budget exhausted computing the letter maximum");
  Shape den_shape(P.dim(), n);
  ExtremalResult ex = ex_exact(den_shape, family_of(P), budget);
  if (ex.status != SearchStatus::exact)
    throw BudgetExhausted("budget exhausted computing the avoidance maximum");
  if (ex.value == 0)
    throw std::domain_error("denominator extremal value is zero (single-one base pattern)");
  return BigRat(lx.value, ex.value);
}

}  // namespace patex
