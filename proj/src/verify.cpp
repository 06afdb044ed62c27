#include "patex/verify.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "json.hpp"
#include "patex/formations.hpp"
#include "patex/recurrences.hpp"

namespace patex {

std::size_t BoundReport::passed() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.status == "pass";
  return n;
}
std::size_t BoundReport::failed() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.status == "fail";
  return n;
}
std::size_t BoundReport::inconclusive() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.status == "inconclusive";
  return n;
}
bool BoundReport::verdict() const { return passed() == rows.size(); }

std::string BoundReport::to_tsv() const {
  std::string out;
  out += "# bound: " + bound_id + "\n";
  out += "# statement: " + statement + "\n";
  for (const auto& n : notes) out += "# note: " + n + "\n";
  out += "params\tlhs\trhs\tstatus\tlhs_provenance\trhs_provenance\n";
  for (const auto& r : rows) {
    std::string p;
    for (std::size_t i = 0; i < r.params.size(); ++i) {
      if (i) p += ";";
      p += r.params[i].first + "=" + r.params[i].second;
    }
    out += p + "\t" + r.lhs + "\t" + r.rhs + "\t" + r.status + "\t" +
           r.lhs_provenance + "\t" + r.rhs_provenance + "\n";
  }
  out += "# verdict: " + std::string(verdict() ? "pass" : "fail") + "\n";
  return out;
}

std::string BoundReport::to_json_text() const {
  nlohmann::json j;
  j["bound_id"] = bound_id;
  j["engine_version"] = kEngineVersion;
  j["statement"] = statement;
  j["notes"] = notes;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    row["params"] = params;
    row["lhs"] = r.lhs;
    row["rhs"] = r.rhs;
    row["lhs_provenance"] = r.lhs_provenance;
    row["rhs_provenance"] = r.rhs_provenance;
    row["status"] = r.status;
    j["rows"].push_back(row);
  }
  j["summary"] = {{"rows", rows.size()},
                  {"passed", passed()},
                  {"failed", failed()},
                  {"inconclusive", inconclusive()},
                  {"verdict", verdict()}};
  return j.dump(2) + "\n";
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

// A side of an inequality row: exact value when its searches finished,
// nothing when a budget ran out.
struct Side {
  std::optional<BigRat> v;
  std::string prov;

  std::string str() const { return v ? v->str() : "?"; }
  std::string full_prov() const { return v ? prov : prov + " (budget exhausted)"; }
};

BoundRow make_row(Params params, const Side& lhs, const Side& rhs) {
  BoundRow r;
  r.params = std::move(params);
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.lhs_provenance = lhs.full_prov();
  r.rhs_provenance = rhs.full_prov();
  if (!lhs.v || !rhs.v)
    r.status = "inconclusive";
  else
    r.status = *lhs.v <= *rhs.v ? "pass" : "fail";
  return r;
}

std::optional<std::size_t> exact_ex(const Shape& shape, const ForbiddenFamily& F,
                                    const SearchBudget& b) {
  auto r = ex_exact(shape, F, b);
  if (r.status != SearchStatus::exact) return std::nullopt;
  return r.value;
}

std::optional<std::size_t> exact_lx(const Shape& shape, std::size_t k,
                                    const ForbiddenFamily& F, const SearchBudget& b) {
  auto r = lx_exact(shape, k, F, b);
  if (r.status != SearchStatus::exact) return std::nullopt;
  return r.value;
}

// Host (m, n, ..., n) with d axes; d == 1 collapses to (m).
Shape host_shape(std::size_t m, std::size_t n, std::size_t d) {
  Shape s{m};
  for (std::size_t i = 1; i < d; ++i) s.push_back(n);
  return s;
}

Shape cube(std::size_t n, std::size_t d) { return Shape(d, n); }

BigInt ipow(std::size_t b, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

std::string str(std::size_t v) { return std::to_string(v); }

}  // namespace

BoundReport check_relate(const ForbiddenFamily& F, GridRange n, GridRange m, GridRange k,
                         const SearchBudget& budget) {
  const std::size_t d = F.host_dim();
  BoundReport rep;
  rep.bound_id = "relate";
  rep.statement = "ex(host) <= k * (lx_k(host) + n^(d-1)) on hosts (m, n, ..., n)";
  for (std::size_t nv = n.lo; nv <= n.hi; ++nv)
    for (std::size_t mv = m.lo; mv <= m.hi; ++mv)
      for (std::size_t kv = k.lo; kv <= k.hi; ++kv) {
        const Shape host = host_shape(mv, nv, d);
        Side lhs{std::nullopt, "max ones over avoiding hosts"};
        if (auto v = exact_ex(host, F, budget)) lhs.v = BigRat(*v);
        Side rhs{std::nullopt, "k * (max letters + row count)"};
        if (auto v = exact_lx(host, kv, F, budget))
          rhs.v = BigRat(BigInt(kv) * (BigInt(*v) + ipow(nv, d - 1)));
        rep.rows.push_back(make_row(
            {{"n", str(nv)}, {"m", str(mv)}, {"k", str(kv)}}, lhs, rhs));
      }
  return rep;
}

BoundReport check_lemma2(const ForbiddenFamily& F, std::size_t c,
                         const std::map<std::size_t, BigInt>& g, GridRange n, GridRange m,
                         GridRange k, const SearchBudget& budget) {
  require(F.host_dim() == 2, "two-phase column check needs 2-d hosts");
  require(k.lo > c, "k must exceed c throughout the grid");
  for (std::size_t mv = m.lo; mv <= m.hi; ++mv)
    require(g.count(mv) == 1, "missing g entry for m = " + str(mv));

  BoundReport rep;
  rep.bound_id = "lemma2";
  rep.statement =
      "if ex((m, n)) <= g(m) + c*n on the grid then lx_k((m, n)) <= g(m) / (k - c)";
  bool hyp_ok = true;
  for (std::size_t nv = n.lo; nv <= n.hi; ++nv)
    for (std::size_t mv = m.lo; mv <= m.hi; ++mv) {
      Side lhs{std::nullopt, "max ones over avoiding hosts"};
      if (auto v = exact_ex({mv, nv}, F, budget)) lhs.v = BigRat(*v);
      Side rhs{BigRat(g.at(mv) + BigInt(c) * BigInt(nv)), "g(m) + c*n from the hypothesis table"};
      auto row = make_row(
          {{"part", "hypothesis"}, {"n", str(nv)}, {"m", str(mv)}}, lhs, rhs);
      hyp_ok = hyp_ok && row.status == "pass";
      rep.rows.push_back(std::move(row));
    }
  if (!hyp_ok) {
    rep.notes.push_back("conclusion rows omitted: the hypothesis did not hold on the grid");
    return rep;
  }
  for (std::size_t kv = k.lo; kv <= k.hi; ++kv)
    for (std::size_t nv = n.lo; nv <= n.hi; ++nv)
      for (std::size_t mv = m.lo; mv <= m.hi; ++mv) {
        Side lhs{std::nullopt, "max letters over avoiding hosts"};
        if (auto v = exact_lx({mv, nv}, kv, F, budget)) lhs.v = BigRat(*v);
        Side rhs{BigRat(g.at(mv), BigInt(kv - c)), "g(m) / (k - c) exact rational"};
        rep.rows.push_back(make_row(
            {{"part", "conclusion"}, {"k", str(kv)}, {"n", str(nv)}, {"m", str(mv)}},
            lhs, rhs));
      }
  return rep;
}

BoundReport check_binomial(const Pattern& base, GridRange n, GridRange m, GridRange s,
                           const SearchBudget& budget) {
  const std::size_t d = base.dim();
  BoundReport rep;
  rep.bound_id = "binomial";
  rep.statement =
      "lx_s((m, n...), s-group formations of base) <= ex((n...), base) * "
      "C(m - ceil(s/2), floor(s/2))";
  rep.notes.push_back("rows with s > m are outside the bound's domain and skipped");
  for (std::size_t nv = n.lo; nv <= n.hi; ++nv)
    for (std::size_t mv = m.lo; mv <= m.hi; ++mv)
      for (std::size_t sv = s.lo; sv <= s.hi; ++sv) {
        if (sv > mv) continue;
        const ForbiddenFamily F = family_of(FormationSpec(base, sv));
        Side lhs{std::nullopt, "max letters over avoiding hosts (k = s)"};
        if (auto v = exact_lx(host_shape(mv, nv, d + 1), sv, F, budget)) lhs.v = BigRat(*v);
        Side rhs{std::nullopt, "pattern extremal value times block-choice binomial"};
        if (auto v = exact_ex(cube(nv, d), family_of(base), budget))
          rhs.v = BigRat(BigInt(*v) * formation_binom_bound(mv, sv));
        rep.rows.push_back(make_row(
            {{"n", str(nv)}, {"m", str(mv)}, {"s", str(sv)}}, lhs, rhs));
      }
  return rep;
}

BoundReport check_recurrence_doubling(const Pattern& base, std::size_t s, GridRange n,
                                      GridRange m, GridRange k, const SearchBudget& budget) {
  const std::size_t d = base.dim();
  const ForbiddenFamily F = family_of(FormationSpec(base, s));
  BoundReport rep;
  rep.bound_id = "rec1";
  rep.statement =
      "lx_{2k-1}((2m, n...)) <= 2*lx_{2k-1}((m, n...)) + 2*lx_k((2m, n...)) against "
      "s-group formations of base";
  for (std::size_t nv = n.lo; nv <= n.hi; ++nv)
    for (std::size_t mv = m.lo; mv <= m.hi; ++mv)
      for (std::size_t kv = k.lo; kv <= k.hi; ++kv) {
        const std::size_t kk = 2 * kv - 1;
        Side lhs{std::nullopt, "max letters, doubled first axis"};
        if (auto v = exact_lx(host_shape(2 * mv, nv, d + 1), kk, F, budget))
          lhs.v = BigRat(*v);
        Side rhs{std::nullopt, "2*lx_{2k-1}(m) + 2*lx_k(2m) from exact searches"};
        auto a = exact_lx(host_shape(mv, nv, d + 1), kk, F, budget);
        auto b = exact_lx(host_shape(2 * mv, nv, d + 1), kv, F, budget);
        if (a && b) rhs.v = BigRat(2 * BigInt(*a) + 2 * BigInt(*b));
        rep.rows.push_back(make_row(
            {{"n", str(nv)}, {"m", str(mv)}, {"k", str(kv)}}, lhs, rhs));
      }
  return rep;
}

BoundReport check_recurrence_partition(const Pattern& base, std::size_t s,
                                       const std::array<std::size_t, 4>& ks, std::size_t t,
                                       GridRange n, const std::vector<std::size_t>& ms,
                                       const SearchBudget& budget) {
  const auto [k, k1, k2, k3] = ks;
  require(s >= 3, "interval partition needs s >= 3");
  require(k >= 1 && k1 >= 1 && k2 >= 1 && k3 >= 1, "letter sizes must be positive");
  require(BigInt(k2) * k3 + 2 * BigInt(k1) + 2 == BigInt(k) + 3 * BigInt(k2) + k3,
          "letter sizes must satisfy k2*k3 + 2*k1 - 3*k2 - k3 + 2 == k");
  require(t >= 1, "interval length must be positive");
  require(!ms.empty(), "empty m list");
  std::vector<std::size_t> mlist = ms;
  std::sort(mlist.begin(), mlist.end());
  for (std::size_t mv : mlist)
    require(mv >= t && mv % t == 0, "every m must be a multiple of t with m >= t");

  const std::size_t d = base.dim();
  const ForbiddenFamily Fs = family_of(FormationSpec(base, s));
  const ForbiddenFamily Fs1 = family_of(FormationSpec(base, s - 1));
  const ForbiddenFamily Fs2 = family_of(FormationSpec(base, s - 2));
  BoundReport rep;
  rep.bound_id = "rec2";
  rep.statement =
      "lx_k(m) <= (1 + m/t) * (lx_k(t) + 2*lx_{k1}(t; s-1) + lx_{k2}(t; s-2)) + "
      "lx_{k3}(1 + m/t) against formation families of base";
  for (std::size_t nv = n.lo; nv <= n.hi; ++nv)
    for (std::size_t mv : mlist) {
      Side lhs{std::nullopt, "max letters over avoiding hosts"};
      if (auto v = exact_lx(host_shape(mv, nv, d + 1), k, Fs, budget)) lhs.v = BigRat(*v);
      Side rhs{std::nullopt, "interval-partition combination of exact searches"};
      auto a = exact_lx(host_shape(t, nv, d + 1), k, Fs, budget);
      auto b = exact_lx(host_shape(t, nv, d + 1), k1, Fs1, budget);
      auto cc = exact_lx(host_shape(t, nv, d + 1), k2, Fs2, budget);
      auto dd = exact_lx(host_shape(1 + mv / t, nv, d + 1), k3, Fs, budget);
      if (a && b && cc && dd)
        rhs.v = BigRat(BigInt(1 + mv / t) * (BigInt(*a) + 2 * BigInt(*b) + BigInt(*cc)) +
                       BigInt(*dd));
      rep.rows.push_back(make_row({{"n", str(nv)}, {"m", str(mv)}}, lhs, rhs));
    }
  return rep;
}

BoundReport check_fp3(const Pattern& base, GridRange n, const SearchBudget& budget) {
  const std::size_t d = base.dim();
  const ForbiddenFamily F = family_of(FormationSpec(base, 3));
  BoundReport rep;
  rep.bound_id = "fp3";
  rep.statement =
      "ex((n, n...), 3-group formations of base) <= 3 * (ex((n...), base) * n + n^d)";
  for (std::size_t nv = n.lo; nv <= n.hi; ++nv) {
    Side lhs{std::nullopt, "max ones over hosts avoiding 3-group formations"};
    if (auto v = exact_ex(cube(nv, d + 1), F, budget)) lhs.v = BigRat(*v);
    Side rhs{std::nullopt, "3 * (pattern extremal value * n + n^d)"};
    if (auto v = exact_ex(cube(nv, d), family_of(base), budget))
      rhs.v = BigRat(3 * (BigInt(*v) * nv + ipow(nv, d)));
    rep.rows.push_back(make_row({{"n", str(nv)}}, lhs, rhs));
  }
  return rep;
}

BoundReport check_light_reduction(const Pattern& p, const Shape& host_bound,
                                  std::size_t stretch_trials, std::uint64_t seed) {
  require(p.is_light(), "pattern must be light (no repeated coordinate off the last axis)");
  require(p.weight() >= 1, "pattern needs at least one one");
  require(dim(host_bound) == p.dim(), "host bound must match the pattern dimensionality");
  const std::size_t s = p.weight();
  const Pattern proj = p.project_first();

  std::vector<BitMatrix> members;
  for_each_formation_member(host_bound, proj, s, [&](const BitMatrix& m) {
    members.push_back(m);
    return true;
  });
  std::size_t contained = 0;
  for (const BitMatrix& m : members) contained += contains(m, p);

  BoundReport rep;
  rep.bound_id = "light";
  rep.statement =
      "every member of the s-group formation family of the pattern's first-axis "
      "projection contains the pattern (s = pattern weight)";
  rep.notes.push_back("members enumerated in host " + shape_to_string(host_bound) + ": " +
                      str(members.size()));
  {
    Side lhs{BigRat(members.size()), "formation members enumerated"};
    Side rhs{BigRat(contained), "members containing the pattern"};
    rep.rows.push_back(make_row({{"check", "members"}}, lhs, rhs));
  }

  std::mt19937_64 rng(seed);
  std::size_t stretched_ok = 0;
  std::size_t trials = members.empty() ? 0 : stretch_trials;
  if (members.empty() && stretch_trials > 0)
    rep.notes.push_back("stretch trials skipped: no member fits the host bound");
  for (std::size_t i = 0; i < trials; ++i) {
    BitMatrix m = members[rng() % members.size()];
    const std::size_t inserts = 1 + rng() % 2;
    for (std::size_t j = 0; j < inserts; ++j) {
      const std::size_t axis = 1 + rng() % dim(m.shape());
      const std::size_t pos = 1 + rng() % (m.shape()[axis - 1] + 1);
      m = m.insert_zero_hyperplane(axis, pos);
    }
    stretched_ok += contains(m, p);
  }
  {
    Side lhs{BigRat(trials), "stretched member trials"};
    Side rhs{BigRat(stretched_ok), "stretched members containing the pattern"};
    rep.rows.push_back(make_row({{"check", "stretched"}}, lhs, rhs));
  }
  return rep;
}

}  // namespace patex
