#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "patex/io.hpp"
#include "patex/verify.hpp"

using namespace patex;

namespace {

SearchBudget budget() { return SearchBudget(50'000'000, 60.0); }

Pattern id2() { return pattern_from_rows({"10", "01"}); }
Pattern q2() { return Pattern({2}, {{1}, {2}}); }
Pattern q3() { return Pattern({3}, {{1}, {2}, {3}}); }

std::string data_path(const std::string& name) {
  return std::string(PATEX_SOURCE_DIR) + "/tests/data/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("grid ranges validate their endpoints") {
  CHECK_THROWS_AS(GridRange(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(GridRange(3, 2), std::invalid_argument);
  CHECK(GridRange(2, 2).lo == 2);
}

TEST_CASE("relate bound passes on small grids in one and two dimensions") {
  BoundReport r1 = check_relate(family_of(q3()), {1, 3}, {1, 4}, {1, 3}, budget());
  CHECK(r1.verdict());
  CHECK(r1.rows.size() == 3 * 4 * 3);
  CHECK(r1.inconclusive() == 0);

  BoundReport r2 = check_relate(family_of(id2()), {1, 3}, {1, 3}, {1, 2}, budget());
  CHECK(r2.verdict());
  CHECK(r2.passed() == r2.rows.size());

  // rows arrive sorted by their parameter tuple
  auto tuple_of = [](const BoundRow& r) {
    std::vector<std::pair<std::string, std::string>> t = r.params;
    return t;
  };
  for (std::size_t i = 1; i < r2.rows.size(); ++i) {
    // n, then m, then k, all ascending as built; spot-check adjacency
    CHECK(tuple_of(r2.rows[i - 1]) != tuple_of(r2.rows[i]));
  }
  CHECK(r2.rows.front().params ==
        std::vector<std::pair<std::string, std::string>>{{"n", "1"}, {"m", "1"}, {"k", "1"}});
}

TEST_CASE("exhausted budgets surface as inconclusive rows and defeat the verdict") {
  clear_search_memo();
  BoundReport r = check_relate(family_of(id2()), {3, 3}, {3, 3}, {2, 2}, SearchBudget(1, 60.0));
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].status == "inconclusive");
  CHECK(r.rows[0].lhs == "?");
  CHECK(r.rows[0].rhs == "?");
  CHECK(r.rows[0].lhs_provenance.find("budget exhausted") != std::string::npos);
  CHECK(r.inconclusive() == 1);
  CHECK(r.passed() == 0);
  CHECK_FALSE(r.verdict());
  CHECK(r.to_tsv().find("?\t?\tinconclusive") != std::string::npos);
}

TEST_CASE("two-phase column check: hypothesis rows gate the conclusions") {
  std::map<std::size_t, BigInt> g;
  for (std::size_t m = 1; m <= 3; ++m) g[m] = 2 * m;
  BoundReport r = check_lemma2(family_of(id2()), 1, g, {1, 3}, {1, 3}, {2, 3}, budget());
  CHECK(r.verdict());
  // hypothesis rows first, then conclusions
  std::size_t hyp = 0;
  bool seen_conclusion = false;
  for (const auto& row : r.rows) {
    REQUIRE(!row.params.empty());
    CHECK(row.params[0].first == "part");
    if (row.params[0].second == "hypothesis") {
      CHECK_FALSE(seen_conclusion);
      ++hyp;
    } else {
      CHECK(row.params[0].second == "conclusion");
      seen_conclusion = true;
    }
  }
  CHECK(hyp == 3 * 3);
  CHECK(r.rows.size() == 3 * 3 + 2 * 3 * 3);

  // conclusion bounds are exact rationals
  bool fractional = false;
  for (const auto& row : r.rows)
    if (row.params[0].second == "conclusion" && row.rhs.find('/') != std::string::npos)
      fractional = true;
  CHECK(fractional == false);  // 2m/(k-1) for k=3 is m: integral here
}

TEST_CASE("two-phase column check: failing hypothesis omits conclusions with a note") {
  std::map<std::size_t, BigInt> g{{1, 0}, {2, 0}};
  BoundReport r = check_lemma2(family_of(id2()), 0, g, {1, 2}, {1, 2}, {1, 2}, budget());
  CHECK_FALSE(r.verdict());
  CHECK(r.failed() > 0);
  for (const auto& row : r.rows) CHECK(row.params[0].second == "hypothesis");
  REQUIRE(r.notes.size() == 1);
  CHECK(r.notes[0].find("conclusion rows omitted") != std::string::npos);
}

TEST_CASE("two-phase column check rejects bad parameters") {
  std::map<std::size_t, BigInt> g{{1, 2}, {2, 4}};
  // k range must stay above c
  CHECK_THROWS_AS(check_lemma2(family_of(id2()), 1, g, {1, 2}, {1, 2}, {1, 2}, budget()),
                  std::invalid_argument);
  // missing g entry for m = 3
  CHECK_THROWS_AS(check_lemma2(family_of(id2()), 1, g, {1, 2}, {1, 3}, {2, 2}, budget()),
                  std::invalid_argument);
  // only 2-d hosts
  CHECK_THROWS_AS(check_lemma2(family_of(q2()), 1, g, {1, 2}, {1, 2}, {2, 2}, budget()),
                  std::invalid_argument);
}

TEST_CASE("formation letter bound holds for 1-d and 2-d bases when s >= 2") {
  BoundReport r1 = check_binomial(q2(), {1, 3}, {1, 3}, {2, 3}, budget());
  CHECK(r1.verdict());
  // s > m rows are skipped: for each n, sum over m in 1..3 of #{2..min(3,m)}
  CHECK(r1.rows.size() == 3 * (0 + 1 + 2));
  REQUIRE(!r1.notes.empty());
  CHECK(r1.notes[0].find("skipped") != std::string::npos);

  BoundReport r2 = check_binomial(pattern_from_rows({"11"}), {1, 2}, {2, 3}, {2, 2}, budget());
  CHECK(r2.verdict());
  CHECK(r2.rows.size() == 2 * 2);
}

TEST_CASE("formation letter bound honestly fails at the degenerate s = 1 corner") {
  // with one-group formations, several letters can share the single occupied
  // 1-row, so the letter count outgrows the row-choice binomial; the checker
  // must report those rows as failures rather than hide them
  BoundReport r = check_binomial(q2(), {1, 3}, {1, 3}, {1, 3}, budget());
  CHECK_FALSE(r.verdict());
  CHECK(r.inconclusive() == 0);
  for (const auto& row : r.rows) {
    bool s_is_one = false;
    std::string mv;
    for (const auto& [name, value] : row.params) {
      if (name == "s" && value == "1") s_is_one = true;
      if (name == "m") mv = value;
    }
    if (row.status == "fail") {
      CHECK(s_is_one);
      CHECK(mv != "1");  // m = 1 forces a single 1-row set and still passes
    }
    if (!s_is_one) CHECK(row.status == "pass");
  }
  CHECK(r.failed() == 3 * 2);  // every (n, m) with m in {2, 3} at s = 1
}

TEST_CASE("first-axis doubling recurrence holds on a small grid") {
  BoundReport r = check_recurrence_doubling(q2(), 2, {1, 3}, {1, 2}, {1, 2}, budget());
  CHECK(r.verdict());
  CHECK(r.rows.size() == 3 * 2 * 2);
  CHECK(r.inconclusive() == 0);
}

TEST_CASE("interval partition recurrence: identity-checked letter sizes") {
  BoundReport r =
      check_recurrence_partition(q2(), 3, {2, 2, 2, 2}, 2, {1, 2}, {2, 4}, budget());
  CHECK(r.verdict());
  CHECK(r.rows.size() == 2 * 2);

  // the letter-size identity k2*k3 + 2*k1 + 2 == k + 3*k2 + k3 is enforced
  CHECK_THROWS_AS(
      check_recurrence_partition(q2(), 3, {2, 2, 2, 3}, 2, {1, 2}, {2, 4}, budget()),
      std::invalid_argument);
  CHECK_THROWS_AS(
      check_recurrence_partition(q2(), 2, {2, 2, 2, 2}, 2, {1, 2}, {2, 4}, budget()),
      std::invalid_argument);
  CHECK_THROWS_AS(
      check_recurrence_partition(q2(), 3, {2, 2, 2, 2}, 2, {1, 2}, {2, 3}, budget()),
      std::invalid_argument);
  CHECK_THROWS_AS(check_recurrence_partition(q2(), 3, {2, 2, 2, 2}, 2, {1, 2}, {}, budget()),
                  std::invalid_argument);
}

TEST_CASE("3-group formation extremal bound") {
  BoundReport r = check_fp3(q2(), {1, 3}, budget());
  CHECK(r.verdict());
  CHECK(r.rows.size() == 3);

  BoundReport one = check_fp3(Pattern({1}, {{1}}), {1, 3}, budget());
  CHECK(one.verdict());
}

TEST_CASE("light-pattern reduction: members and stretched members all contain") {
  BoundReport r = check_light_reduction(id2(), {4, 3}, 10, 7);
  CHECK(r.verdict());
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[0].params[0].second == "members");
  CHECK(r.rows[0].lhs == r.rows[0].rhs);  // every member contains the pattern
  CHECK(r.rows[1].params[0].second == "stretched");
  CHECK(r.rows[1].lhs == "10");
  CHECK(r.rows[1].rhs == "10");
  REQUIRE(!r.notes.empty());
  CHECK(r.notes[0].find("members enumerated") != std::string::npos);

  // single-one pattern in 2-d
  Pattern one({1, 1}, {{1, 1}});
  CHECK(check_light_reduction(one, {2, 2}, 5, 1).verdict());

  // 3-d light pattern
  Pattern l3({2, 2, 2}, {{1, 1, 2}, {2, 2, 1}});
  CHECK(check_light_reduction(l3, {3, 3, 3}, 6, 11).verdict());
}

TEST_CASE("light-pattern reduction: degenerate and invalid inputs") {
  // host too small for any member: vacuous pass with an explanatory note
  BoundReport r = check_light_reduction(id2(), {1, 2}, 4, 3);
  CHECK(r.verdict());
  CHECK(r.rows[0].lhs == "0");
  bool skipped_note = false;
  for (const auto& n : r.notes)
    if (n.find("stretch trials skipped") != std::string::npos) skipped_note = true;
  CHECK(skipped_note);

  CHECK_THROWS_AS(check_light_reduction(pattern_from_rows({"11"}), {3, 3}, 4, 3),
                  std::invalid_argument);  // not light
  CHECK_THROWS_AS(check_light_reduction(zigzag_pattern(3), {3, 6}, 4, 3),
                  std::invalid_argument);  // not light
  CHECK_THROWS_AS(check_light_reduction(id2(), {3, 3, 3}, 4, 3),
                  std::invalid_argument);  // host dimensionality mismatch
}

TEST_CASE("reports serialize to commented TSV and stable JSON") {
  BoundReport r = check_light_reduction(id2(), {3, 3}, 5, 42);
  std::string tsv = r.to_tsv();
  CHECK(tsv.rfind("# bound: light\n", 0) == 0);
  CHECK(tsv.find("# statement: ") != std::string::npos);
  CHECK(tsv.find("params\tlhs\trhs\tstatus\tlhs_provenance\trhs_provenance\n") !=
        std::string::npos);
  CHECK(tsv.find("# verdict: pass\n") == tsv.size() - std::string("# verdict: pass\n").size());

  std::string js = r.to_json_text();
  auto j = nlohmann::json::parse(js);
  CHECK(j["bound_id"] == "light");
  CHECK(j["engine_version"] == kEngineVersion);
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][0]["params"]["check"] == "members");
  CHECK(j["summary"]["verdict"] == true);
  CHECK(j["summary"]["rows"] == 2);
  CHECK(j["summary"]["inconclusive"] == 0);

  // identical seeds and grids give byte-identical reports
  BoundReport again = check_light_reduction(id2(), {3, 3}, 5, 42);
  CHECK(again.to_json_text() == js);
  CHECK(again.to_tsv() == tsv);
}

TEST_CASE("frozen report snapshots stay byte-identical") {
  clear_search_memo();
  BoundReport relate = check_relate(family_of(id2()), {1, 3}, {1, 3}, {2, 3}, budget());
  CHECK(relate.to_json_text() ==
        read_file(std::string(PATEX_SOURCE_DIR) + "/docs/golden/relate.json"));

  BoundReport binom = check_binomial(q2(), {1, 3}, {1, 3}, {1, 3}, budget());
  CHECK(binom.to_json_text() ==
        read_file(std::string(PATEX_SOURCE_DIR) + "/docs/golden/binomial.json"));

  Pattern l3 = load_pattern_file(data_path("light3d.pat"));
  BoundReport light = check_light_reduction(l3, {3, 3, 3}, 8, 2026);
  CHECK(light.to_json_text() ==
        read_file(std::string(PATEX_SOURCE_DIR) + "/docs/golden/light.json"));

  std::map<std::size_t, BigInt> g{{1, 2}, {2, 4}, {3, 6}};
  BoundReport lemma2 = check_lemma2(family_of(id2()), 1, g, {1, 3}, {1, 3}, {2, 3}, budget());
  CHECK(lemma2.to_json_text() ==
        read_file(std::string(PATEX_SOURCE_DIR) + "/docs/golden/lemma2.json"));

  BoundReport rec1 = check_recurrence_doubling(q2(), 2, {1, 3}, {1, 2}, {1, 2}, budget());
  CHECK(rec1.to_json_text() ==
        read_file(std::string(PATEX_SOURCE_DIR) + "/docs/golden/rec1.json"));

  BoundReport rec2 =
      check_recurrence_partition(q2(), 3, {2, 2, 2, 2}, 2, {1, 2}, {2, 4}, budget());
  CHECK(rec2.to_json_text() ==
        read_file(std::string(PATEX_SOURCE_DIR) + "/docs/golden/rec2.json"));

  BoundReport fp3 = check_fp3(q2(), {1, 3}, budget());
  CHECK(fp3.to_json_text() ==
        read_file(std::string(PATEX_SOURCE_DIR) + "/docs/golden/fp3.json"));
}
