#include "patex/contains.hpp"

namespace patex {

namespace {

// Backtracking assignment of the axis maps, one entry at a time in flattened
// order (axis 0 positions first).  Partial assignments are pruned against OR
// projections of the host onto leading axes: once f is fixed on axes <= a for
// a pattern one u, some host one must extend the prefix image, i.e. the
// projection onto axes 0..a must be set at (f_0(u_0),...,f_a(u_a)).
struct OccurrenceSearch {
  const Pattern& P;
  const Shape& hshape;
  std::size_t d;
  // proj[a] = OR of M over axes > a; proj[d-1] aliases M's content.
  std::vector<BitMatrix> proj;
  // ones_at[a][p-1] = ones u of P with u[a] == p (checked when f_a(p) is set).
  std::vector<std::vector<std::vector<const Coord*>>> ones_at;
  std::vector<std::vector<std::size_t>> maps;
  const std::function<bool(const Occurrence&)>* visit;
  bool stopped = false;

  OccurrenceSearch(const BitMatrix& M, const Pattern& P_) : P(P_), hshape(M.shape()), d(M.dim()) {
    proj.reserve(d);
    for (std::size_t a = 0; a + 1 < d; ++a)
      proj.emplace_back(Shape(hshape.begin(), hshape.begin() + a + 1));
    proj.push_back(M);
    for (const Coord& c : M.ones())
      for (std::size_t a = 0; a + 1 < d; ++a)
        proj[a].set(Coord(c.begin(), c.begin() + a + 1), true);

    ones_at.resize(d);
    for (std::size_t a = 0; a < d; ++a) ones_at[a].resize(P.shape()[a]);
    for (const Coord& u : P.ones())
      for (std::size_t a = 0; a < d; ++a) ones_at[a][u[a] - 1].push_back(&u);

    maps.resize(d);
    for (std::size_t a = 0; a < d; ++a) maps[a].assign(P.shape()[a], 0);
  }

  bool ones_ok(std::size_t a, std::size_t p) const {
    Coord prefix(a + 1);
    for (const Coord* u : ones_at[a][p - 1]) {
      for (std::size_t i = 0; i <= a; ++i) prefix[i] = maps[i][(*u)[i] - 1];
      if (!proj[a].get(prefix)) return false;
    }
    return true;
  }

  void extend(std::size_t a, std::size_t p) {
    if (stopped) return;
    if (p > P.shape()[a]) {
      ++a;
      p = 1;
      if (a == d) {
        if (!(*visit)(Occurrence{maps})) stopped = true;
        return;
      }
    }
    std::size_t la = P.shape()[a], ma = hshape[a];
    if (la > ma) return;
    std::size_t lo = p == 1 ? 1 : maps[a][p - 2] + 1;
    std::size_t hi = ma - (la - p);
    for (std::size_t v = lo; v <= hi && !stopped; ++v) {
      maps[a][p - 1] = v;
      if (ones_ok(a, p)) extend(a, p + 1);
    }
  }
};

}  // namespace

void for_each_occurrence(const BitMatrix& M, const Pattern& P,
                         const std::function<bool(const Occurrence&)>& visit) {
  require(M.dim() == P.dim(), "host/pattern dimension mismatch");
  OccurrenceSearch s(M, P);
  s.visit = &visit;
  s.extend(0, 1);
}

std::optional<Occurrence> find_occurrence(const BitMatrix& M, const Pattern& P) {
  std::optional<Occurrence> found;
  for_each_occurrence(M, P, [&](const Occurrence& o) {
    found = o;
    return false;
  });
  return found;
}

bool contains(const BitMatrix& M, const Pattern& P) { return find_occurrence(M, P).has_value(); }

bool validate_occurrence(const BitMatrix& M, const Pattern& P, const Occurrence& occ) {
  if (M.dim() != P.dim() || occ.axis_maps.size() != P.dim()) return false;
  for (std::size_t a = 0; a < P.dim(); ++a) {
    const auto& f = occ.axis_maps[a];
    if (f.size() != P.shape()[a]) return false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] < 1 || f[i] > M.shape()[a]) return false;
      if (i && f[i] <= f[i - 1]) return false;
    }
  }
  for (const Coord& u : P.ones())
    if (!M.get(occ.image(u))) return false;
  return true;
}

}  // namespace patex
